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

#ifndef QLAB_ERROR_HPP_
#define QLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlab {

enum class ErrorKind {
  NotALattice,
  NoBounds,
  EmptyGenerator,
  NotAnIdeal,
  NotDistributive,
  NotPrime,
  NotMPrime,
  NotCommutative,
  NotAssociative,
  NotIntegral,
  NotDistributiveOverJoin,
  ZeroNotAbsorbing,
  AxiomFailure,
  TransportFailure,
  TooLarge,
  ParseError,
  BudgetExhausted,
  ImplicationViolation,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this exception. The witness
// holds element labels (or other replayable tokens) naming the violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qlab

#endif  // QLAB_ERROR_HPP_
