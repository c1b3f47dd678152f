// Copyright 2026 The qlab Authors
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

#include "qlab/error.hpp"

#include <utility>

namespace qlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::EmptyGenerator: return "EmptyGenerator";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotMPrime: return "NotMPrime";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotDistributiveOverJoin: return "NotDistributiveOverJoin";
    case ErrorKind::ZeroNotAbsorbing: return "ZeroNotAbsorbing";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::TransportFailure: return "TransportFailure";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::ImplicationViolation: return "ImplicationViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::string> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + reason),
      line_(line) {}

}  // namespace qlab
