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

#include <stdexcept>
#include <string>
#include <string_view>

namespace chanmetric {

enum class ErrorKind {
  NonHermitian,
  NotPSD,
  NoConvergence,
  DimensionMismatch,
  ShapeMismatch,
  NotTracePreserving,
  NotUnitary,
  BadWeights,
  RouteUnavailable,
  OutOfRange,
  NotEffect,
  NonPositiveParameter,
  EpsilonTooLarge,
  ZeroMass,
  NotStochastic,
  NotPOVM,
  ChainViolation,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` lets callers map failures
// to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::RouteUnavailable: return "RouteUnavailable";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotEffect: return "NotEffect";
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorKind::ZeroMass: return "ZeroMass";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::NotPOVM: return "NotPOVM";
    case ErrorKind::ChainViolation: return "ChainViolation";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace chanmetric
