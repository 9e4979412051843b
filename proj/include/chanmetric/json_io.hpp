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

#include <string>
#include <vector>

#include <json.hpp>

#include "chanmetric/classical.hpp"
#include "chanmetric/qbc.hpp"

namespace chanmetric::json {

using nlohmann::json;

// Decoders throw Error(InvalidInput) with a message naming the offending
// field; `where` is the path prefix used in those messages.

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
json encode_matrix(const ComplexMatrix& m);
ComplexMatrix decode_matrix(const json& j, const std::string& where = "matrix");

json encode_vector(const ComplexVector& v);

/// {"dim_in", "dim_out", "kraus": [matrix...], "kind": "channel" | "operation"}
json encode_channel(const KrausChannel& ch);
KrausChannel decode_channel(const json& j, const std::string& where = "channel");

/// {"phi0": channel, "phi1": channel}
json encode_protocol(const CommitmentProtocol& p);
CommitmentProtocol decode_protocol(const json& j, const std::string& where = "protocol");

/// {"rows": |Y|, "cols": |X|, "p": [[...], ...]}
json encode_kernel(const FiniteKernel& k);
FiniteKernel decode_kernel(const json& j, const std::string& where = "kernel");

/// List of matrices.
json encode_povm(const Povm& m);
Povm decode_povm(const json& j, const std::string& where = "povm");

/// Rounds every floating-point number to 12 significant digits, in place.
void round_numbers(json& j);

}  // namespace chanmetric::json
