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

#include "chanmetric/qbc.hpp"

#include <algorithm>
#include <cstdio>

namespace chanmetric {

CommitmentProtocol::CommitmentProtocol(KrausChannel phi0, KrausChannel phi1)
    : phi0_(std::move(phi0)), phi1_(std::move(phi1)) {
  if (!phi0_.is_channel() || !phi1_.is_channel()) {
    throw Error(ErrorKind::NotTracePreserving, "commitment channels must be trace preserving");
  }
  if (phi0_.dim_in() != phi1_.dim_in() || phi0_.dim_out() != phi1_.dim_out()) {
    throw Error(ErrorKind::DimensionMismatch, "commitment channels differ in dimensions");
  }
}

double bob_cheat_probability(const CommitmentProtocol& p, const OptConfig& cfg) {
  const double d = std::clamp(cb_distance(p.phi0(), p.phi1(), cfg).value, 0.0, 1.0);
  return 0.5 * (1 + d);
}

double alice_cheat_lower_bound(const CommitmentProtocol& p, const OptConfig& cfg) {
  const double f = std::clamp(minimax_fidelity(p.phi0(), p.phi1(), Route::purification, cfg).value,
                              0.0, 1.0);
  return f * f;
}

ImpossibilityReport impossibility_report(const CommitmentProtocol& p, const OptConfig& cfg) {
  ImpossibilityReport r;
  r.fidelity = minimax_fidelity(p.phi0(), p.phi1(), Route::purification, cfg);
  r.distance = cb_distance(p.phi0(), p.phi1(), cfg);
  const double f = std::clamp(r.fidelity.value, 0.0, 1.0);
  r.cb_distance = std::clamp(r.distance.value, 0.0, 1.0);
  r.bob_probability = 0.5 * (1 + r.cb_distance);
  r.alice_bound = f * f;
  r.distance_bound = (1 - r.cb_distance) * (1 - r.cb_distance);
  const double b = 1 - 2 * (r.bob_probability - 0.5);
  r.bob_bound = b * b;
  r.slack = r.alice_bound - r.distance_bound;
  if (r.slack < -kChainTol) {
    char msg[128];
    std::snprintf(msg, sizeof msg, "f^2 = %.6g below (1 - D)^2 = %.6g", r.alice_bound,
                  r.distance_bound);
    throw Error(ErrorKind::ChainViolation, msg);
  }
  return r;
}

}  // namespace chanmetric
