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

#ifndef QLAB_RETICULATION_HPP_
#define QLAB_RETICULATION_HPP_

#include <vector>

#include "qlab/lattice.hpp"
#include "qlab/quantale.hpp"
#include "qlab/report.hpp"
#include "qlab/topology.hpp"

namespace qlab {

// L(A) as the quotient of A by equality of radicals. Class i is labelled by
// its smallest member; classes are sorted by that member. Holds a pointer to
// the source quantale, which must outlive it.
class Reticulation {
 public:
  // Verifies the three defining axioms exhaustively; throws AxiomFailure.
  explicit Reticulation(const Quantale& A);

  const Quantale& source() const { return *src_; }
  const FiniteLattice& lattice() const { return latt_; }
  std::size_t size() const { return latt_.size(); }

  Elem lambda(Elem a) const { return lambda_[a]; }
  const std::vector<Elem>& lambda_table() const { return lambda_; }
  Elem representative(Elem x) const { return reps_[x]; }

  // {lambda(c) : c <= a}
  const LatticeIdeal& star(Elem a) const { return star_[a]; }
  // \/{c : lambda(c) in I}
  Elem lower(const LatticeIdeal& I) const;
  Elem lower_principal(Elem x) const { return lower_[x]; }

 private:
  const Quantale* src_;
  // Filled while latt_ is built, so declared first.
  std::vector<Elem> lambda_;
  std::vector<Elem> reps_;
  FiniteLattice latt_;
  std::vector<LatticeIdeal> star_;
  std::vector<Elem> lower_;
};

struct SpecTransport {
  // Indexed by element of A; meaningful on Spec(A): generator of p*.
  std::vector<Elem> u;
  // Indexed by element of L(A); meaningful on prime generators: P_*.
  std::vector<Elem> v;
  // The same map between the Zariski spaces, as point indices.
  std::vector<std::size_t> zariski_map;
};

// u(p) = p*, v(P) = P_*; checks both are mutually inverse order
// isomorphisms and homeomorphisms of the Zariski and flat spaces. Throws
// TransportFailure.
SpecTransport spec_transport(const Reticulation& R);

// Radical elements against ideals of L(A), Boolean centers, and the power
// test for complemented classes.
TheoremReport frame_transport_check(const Reticulation& R);
TheoremReport check_radical_ideal_iso(const Reticulation& R);
TheoremReport check_boolean_iso(const Reticulation& R);
TheoremReport check_boolean_powers(const Reticulation& R);

// Annihilators against residuation into rho(0), and the minimal prime tests.
TheoremReport annihilator_transport_check(const Reticulation& R);
TheoremReport check_ann_in_prime(const Reticulation& R);
TheoremReport check_ann_of_star(const Reticulation& R);
TheoremReport check_lower_of_ann(const Reticulation& R);
TheoremReport check_minimal_prime_test(const Reticulation& R);
TheoremReport check_minimal_prime_test_semiprime(const Reticulation& R);

}  // namespace qlab

#endif  // QLAB_RETICULATION_HPP_
