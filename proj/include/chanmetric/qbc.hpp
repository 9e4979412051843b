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

#include "chanmetric/metrics.hpp"

namespace chanmetric {

/// Single-step commitment: the committed bit b is encoded by the channel phi_b.
class CommitmentProtocol {
 public:
  /// Throws NotTracePreserving for operations and DimensionMismatch when the
  /// two channels act between different spaces.
  CommitmentProtocol(KrausChannel phi0, KrausChannel phi1);

  const KrausChannel& phi0() const { return phi0_; }
  const KrausChannel& phi1() const { return phi1_; }

 private:
  KrausChannel phi0_;
  KrausChannel phi1_;
};

/// 1/2 (1 + D) with D the CB-norm distance of the two channels.
double bob_cheat_probability(const CommitmentProtocol& p, const OptConfig& cfg);
/// Square of the minimax fidelity.
double alice_cheat_lower_bound(const CommitmentProtocol& p, const OptConfig& cfg);

struct ImpossibilityReport {
  double alice_bound = 0;   ///< f^2
  double distance_bound = 0;  ///< (1 - D)^2
  double bob_bound = 0;     ///< (1 - 2 (P_B - 1/2))^2
  double cb_distance = 0;
  double bob_probability = 0;
  double slack = 0;         ///< alice_bound - distance_bound
  MinimaxResult fidelity;
  MinimaxResult distance;
};

inline constexpr double kChainTol = 1e-3;

/// Evaluates f^2 >= (1 - D)^2 = (1 - 2 (P_B - 1/2))^2. Throws ChainViolation
/// when the slack is below -kChainTol.
ImpossibilityReport impossibility_report(const CommitmentProtocol& p, const OptConfig& cfg);

}  // namespace chanmetric
