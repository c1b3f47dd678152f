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

#ifndef QLAB_PURITY_HPP_
#define QLAB_PURITY_HPP_

#include <optional>
#include <vector>

#include "qlab/quantale.hpp"
#include "qlab/report.hpp"
#include "qlab/reticulation.hpp"
#include "qlab/topology.hpp"

namespace qlab {

// Per-element operator tables. o_tilde_of is set on m-primes only.
struct PurityTables {
  ElemSet pure;
  ElemSet w_pure;
  ElemSet regular;
  std::vector<Elem> vir_of;
  std::vector<Elem> ker_of;
  std::vector<Elem> o_of;
  std::vector<std::optional<Elem>> o_tilde_of;
  ElemSet sp;
};

PurityTables purity_tables(const Quantale& A);

bool is_pure(const Quantale& A, Elem a);
bool is_w_pure(const Quantale& A, Elem a);
// Largest pure element below a.
Elem vir_op(const Quantale& A, Elem a);
Elem ker_op(const Quantale& A, Elem a);
// Over all pairs (u, v) with uv = 0 and v not below a.
Elem o_op(const Quantale& A, Elem a);
// \/{u : u-perp not below a}; the same join reached through annihilators.
Elem o_via_annihilator(const Quantale& A, Elem a);
// Throws NotMPrime.
Elem o_tilde(const Quantale& A, Elem p);
// Meet of the m-primes below p. Throws NotMPrime.
Elem omega(const Quantale& A, Elem p);
// /\{O(m) : m maximal, a <= m}; 1 when no maximal lies above a.
Elem kappa(const Quantale& A, Elem a);
// /\(Max(A) n V(a)).
Elem jacobson_r(const Quantale& A, Elem a);

// Joins of complemented elements.
ElemSet regular_elements(const Quantale& A);

// The frame of pure elements with the order, joins and meets of A. Throws
// AxiomFailure if the pure elements are not closed under them.
SubQuantale vir_frame(const Quantale& A);

struct Pierce {
  ElemSet sp;
  std::vector<Elem> s_map;  // element of A -> element of Sp(A)
  std::vector<Elem> t_map;  // element of vir.q -> element of Sp(A)
};

// Only the entries at m-primes are meaningful. Throws
// AxiomFailure if s or t fails to be surjective onto Sp(A).
Pierce pierce(const Quantale& A, const SubQuantale& vir);
// Sp(A) with the topology generated by U(e) = {p : e not below p}.
FiniteSpace pierce_space(const Quantale& A);

// Kernel operator against the sigma construction of L(A).
TheoremReport sigma_transfer_check(const Reticulation& R);
// a -> a* from Vir(A) onto the sigma-ideals, and the O transfer.
TheoremReport w_iso_check(const Reticulation& R);

// The individual parts of the two checks above.
TheoremReport check_ker_sigma(const Reticulation& R);
TheoremReport check_w_pure_star_sigma(const Reticulation& R);
TheoremReport check_sigma_lower_w_pure(const Reticulation& R);
TheoremReport check_sigma_lower_pure(const Reticulation& R);
TheoremReport check_w_pure_radical_closure(const Reticulation& R);
TheoremReport check_ker_membership(const Quantale& A);
TheoremReport check_w_pure_radical_ker(const Reticulation& R);
TheoremReport check_w_iso(const Reticulation& R);
TheoremReport check_o_transfer(const Reticulation& R);
TheoremReport check_o_transfer_semiprime(const Reticulation& R);

}  // namespace qlab

#endif  // QLAB_PURITY_HPP_
