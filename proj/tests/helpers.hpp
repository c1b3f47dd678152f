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

#ifndef QLAB_TESTS_HELPERS_HPP_
#define QLAB_TESTS_HELPERS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "qlab/corpus.hpp"
#include "qlab/generators.hpp"
#include "qlab/quantale.hpp"

namespace testing {

inline qlab::Elem el(const qlab::Quantale& A, const std::string& label) {
  if (auto i = A.lattice().index_of(label)) return *i;
  throw std::invalid_argument("no element " + label);
}

inline qlab::Elem el(const qlab::FiniteLattice& L, const std::string& label) {
  if (auto i = L.index_of(label)) return *i;
  throw std::invalid_argument("no element " + label);
}

inline qlab::ElemSet els(const qlab::Quantale& A, const std::vector<std::string>& labels) {
  qlab::ElemSet s;
  for (const auto& l : labels) s.insert(el(A, l));
  return s;
}

// A reduced corpus that still mixes all the classes; cheap enough for every
// unit test that sweeps it.
inline const std::vector<qlab::CorpusEntry>& small_corpus() {
  static const std::vector<qlab::CorpusEntry> c = [] {
    qlab::CorpusOptions o;
    o.zn_max = 60;
    o.poset_points = 4;
    o.lattice_max = 5;
    o.chain_max = 5;
    return qlab::default_corpus(o);
  }();
  return c;
}

inline qlab::FiniteLattice diamond_m3() {
  return qlab::FiniteLattice::build({"0", "a", "b", "c", "1"},
                                    {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace testing

#endif  // QLAB_TESTS_HELPERS_HPP_
