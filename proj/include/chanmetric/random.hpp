// Copyright 2026 The chanmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>
#include <vector>

#include "chanmetric/channels.hpp"

namespace chanmetric {

using Rng = std::mt19937_64;

/// Matrix with i.i.d. complex Gaussian entries.
ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);
ComplexMatrix random_hermitian(Eigen::Index dim, Rng& rng);
/// Haar unitary: QR of a Gaussian matrix with the phases of R's diagonal removed.
ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng);
/// G G^H / Tr(G G^H) with G Gaussian dim x rank (rank <= 0 means full rank).
ComplexMatrix random_density(Eigen::Index dim, Rng& rng, Eigen::Index rank = 0);
/// G^H G for Gaussian G; not normalized.
ComplexMatrix random_psd(Eigen::Index dim, Rng& rng);
/// Gaussian Kraus operators G_j orthonormalized by (sum G^H G)^{-1/2}.
KrausChannel random_channel(Eigen::Index dim_in, Eigen::Index dim_out, std::size_t kraus_count,
                            Rng& rng);
/// POVM elements S^{-1/2} A_y S^{-1/2} with A_y random positive and S = sum A_y.
std::vector<ComplexMatrix> random_povm(Eigen::Index dim, std::size_t outcomes, Rng& rng);
/// Probability vector drawn uniformly from the simplex.
std::vector<double> random_probabilities(std::size_t n, Rng& rng);

}  // namespace chanmetric
