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

#ifndef QLAB_REPORT_HPP_
#define QLAB_REPORT_HPP_

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace qlab {

// Informational marks a check of an alternative or literal reading whose
// outcome is recorded but never counted as a failure.
enum class Status { Pass, Fail, HypothesisNotMet, Informational };

std::string_view to_string(Status s) noexcept;

struct Condition {
  std::string name;
  bool value = false;
};

struct TheoremReport {
  std::string id;
  Status status = Status::Pass;
  // Element labels (or other replayable tokens) naming the counterexample.
  std::vector<std::string> witness;
  std::string detail;
  std::vector<Condition> conditions;
  std::string note;
  std::chrono::microseconds elapsed{0};

  bool failed() const { return status == Status::Fail; }
};

// Collects the first failure of a check. Typical use:
//   Probe P("X");
//   if (bad) P.fail("what went wrong", {labels});
//   return P.done();
class Probe {
 public:
  explicit Probe(std::string id);

  bool ok() const { return report_.status != Status::Fail; }
  // Keeps only the first failure.
  void fail(std::string detail, std::vector<std::string> witness = {});
  // Marks the report hypothesis-not-met; returns it.
  TheoremReport not_met(std::string why);
  void note(std::string text);
  void condition(std::string name, bool value);
  // Fails unless every recorded condition has the same value.
  void require_all_equal();
  void informational(std::string detail, std::vector<std::string> witness = {});
  TheoremReport done();

 private:
  TheoremReport report_;
  std::chrono::steady_clock::time_point start_;
};

// The first failing report, else the first report with its conditions merged.
TheoremReport combine(std::string id, const std::vector<TheoremReport>& parts);

}  // namespace qlab

#endif  // QLAB_REPORT_HPP_
