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

#ifndef QLAB_CANONICAL_HPP_
#define QLAB_CANONICAL_HPP_

#include <string>
#include <vector>

#include "qlab/quantale.hpp"

namespace qlab {

// perm[i] is the new index of element i. Names travel with their elements.
Quantale relabel(const Quantale& A, const std::vector<Elem>& perm);

// The least serialization "n;order bits;mult table" over all labellings
// reachable by colour refinement with individualization. Equal for
// isomorphic quantales.
std::string canonical_form(const Quantale& A);
// The labelling that produces canonical_form (perm[i] = new index of i).
std::vector<Elem> canonical_labelling(const Quantale& A);
// 16 hex digits of the FNV-1a hash of canonical_form.
std::string canonical_id(const Quantale& A);

std::string fnv1a_hex(const std::string& s);

}  // namespace qlab

#endif  // QLAB_CANONICAL_HPP_
