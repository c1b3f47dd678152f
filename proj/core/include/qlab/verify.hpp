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

#ifndef QLAB_VERIFY_HPP_
#define QLAB_VERIFY_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qlab/analysis.hpp"
#include "qlab/report.hpp"

namespace qlab {

using CheckFn = std::function<TheoremReport(const Analysis&)>;

struct TheoremEntry {
  std::string id;     // e.g. "T4.13"
  std::string suite;  // s2 ... s8 or topology
  std::string title;
  CheckFn check;
};

// Every registered check, in section order.
const std::vector<TheoremEntry>& registry();
// Handles aliases; nullptr if unknown.
const TheoremEntry* find_theorem(std::string_view id);
std::vector<std::string> suite_names();

// "all", a suite name, or a comma-separated mix of suite names and ids.
// Throws InvalidArgument naming the first unknown token.
std::vector<std::string> resolve_suite(const std::string& spec);

// Runs the checks in order. An Error escaping a check becomes a fail whose
// detail starts with the error kind.
TheoremReport run_check(const TheoremEntry& entry, const Analysis& a);
std::vector<TheoremReport> verify(const Analysis& a, const std::vector<std::string>& ids);

}  // namespace qlab

#endif  // QLAB_VERIFY_HPP_
