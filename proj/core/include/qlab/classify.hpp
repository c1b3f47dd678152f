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

#ifndef QLAB_CLASSIFY_HPP_
#define QLAB_CLASSIFY_HPP_

#include <map>
#include <string>
#include <vector>

#include "qlab/quantale.hpp"

namespace qlab {

bool is_normal_quantale(const Quantale& A);
bool is_mp_quantale(const Quantale& A);
bool is_pf_quantale(const Quantale& A);
bool is_purified(const Quantale& A);
bool is_pp_quantale(const Quantale& A);

struct ClassFlags {
  bool semiprime = false;
  bool normal = false;
  bool mp = false;
  bool pf = false;
  bool purified = false;
  bool pp = false;
  bool hyperarchimedean = false;

  bool operator==(const ClassFlags&) const = default;
};

struct ClassificationReport {
  std::string id;
  ClassFlags flags;
  // Counterexample labels per failed defining condition, keyed by flag name.
  std::map<std::string, std::vector<std::string>> witnesses;
};

// Throws ImplicationViolation if the flags break pp => purified,
// pp => semiprime, pf <=> semiprime and mp, purified => mp or
// hyperarchimedean => purified.
ClassificationReport classify(const Quantale& A, std::string id = {});

// The first broken implication among the flags, as "premise=>conclusion".
std::vector<std::string> implication_violations(const ClassFlags& f);

}  // namespace qlab

#endif  // QLAB_CLASSIFY_HPP_
