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

#ifndef QLAB_VERIFY_INTERNAL_HPP_
#define QLAB_VERIFY_INTERNAL_HPP_

#include <string>
#include <vector>

#include "qlab/verify.hpp"

namespace qlab::detail {

void add_s2(std::vector<TheoremEntry>& out);
void add_topology(std::vector<TheoremEntry>& out);
void add_s3(std::vector<TheoremEntry>& out);
void add_s4(std::vector<TheoremEntry>& out);
void add_s5(std::vector<TheoremEntry>& out);
void add_s6(std::vector<TheoremEntry>& out);
void add_s7(std::vector<TheoremEntry>& out);
void add_s8(std::vector<TheoremEntry>& out);

// P6.13, which shares the K(a) check with the normal case.
TheoremReport kappa_pure_pf(const Analysis& X);

inline const char* tf(bool b) { return b ? "true" : "false"; }

// Element sets of the subspaces used throughout.
inline ElemSet min_points(const Analysis& X) { return X.points(X.q().min()); }
inline ElemSet max_points(const Analysis& X) { return X.points(X.q().max()); }

// Subset scans over n points respect the analysis guard. Throws TooLarge.
void guard_subsets(const Analysis& X, std::size_t n);

// Closed-set families of two spaces over the same point indices agree.
bool same_topology(const FiniteSpace& X, const FiniteSpace& Y, std::size_t guard);

// Ids of a subset of indices of a space.
inline ElemSet ids_of(const FiniteSpace& X, ElemSet s) { return X.id_set(s); }

// Indices of s.q, mapped into the ambient quantale.
ElemSet embed(const SubQuantale& s, ElemSet inner);

}  // namespace qlab::detail

#endif  // QLAB_VERIFY_INTERNAL_HPP_
