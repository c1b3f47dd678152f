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

#ifndef QLAB_LATTICE_HPP_
#define QLAB_LATTICE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/elem_set.hpp"

namespace qlab {

// A bounded lattice on the carrier {0, ..., n-1}. Immutable once built.
class FiniteLattice {
 public:
  // leq_pairs need not be closed; the reflexive-transitive closure is taken.
  // Throws NoBounds, NotALattice (witness pair) or InvalidArgument.
  static FiniteLattice build(std::vector<std::string> names,
                             const std::vector<std::pair<Elem, Elem>>& leq_pairs);

  // up[i] = {j : i <= j}; must already be a partial order.
  static FiniteLattice from_order(std::vector<std::string> names,
                                  std::vector<ElemSet> up);

  std::size_t size() const { return names_.size(); }
  ElemSet all() const { return ElemSet::range(size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem e) const { return names_[e]; }
  std::optional<Elem> index_of(const std::string& label) const;

  bool leq(Elem a, Elem b) const { return up_[a].contains(b); }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  ElemSet up(Elem a) const { return up_[a]; }
  ElemSet down(Elem a) const { return down_[a]; }

  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }

  // Empty joins are bot, empty meets are top.
  Elem join_all(ElemSet s) const;
  Elem meet_all(ElemSet s) const;

  // Upper bounds and lower bounds of a set.
  ElemSet upper_bounds(ElemSet s) const;
  ElemSet lower_bounds(ElemSet s) const;
  ElemSet maximal(ElemSet s) const;
  ElemSet minimal(ElemSet s) const;
  // Join-irreducible elements (bot excluded).
  ElemSet join_irreducibles() const;

  bool is_distributive() const { return distributive_; }
  // The first (x, y, z) with x^(y v z) != (x^y) v (x^z), if any.
  std::optional<std::vector<Elem>> distributivity_witness() const;

  bool operator==(const FiniteLattice& o) const {
    return names_ == o.names_ && up_ == o.up_;
  }

 private:
  FiniteLattice() = default;
  void finish();

  std::vector<std::string> names_;
  std::vector<ElemSet> up_, down_;
  std::vector<Elem> join_, meet_;
  Elem bot_ = 0, top_ = 0;
  bool distributive_ = false;
};

// Ideals are kept as explicit member sets; on a finite carrier every ideal is
// the down-set of its largest member, which is stored alongside.
struct LatticeIdeal {
  ElemSet members;
  Elem generator = 0;

  bool contains(Elem e) const { return members.contains(e); }
  bool operator==(const LatticeIdeal& o) const { return members == o.members; }
};

bool is_ideal(const FiniteLattice& L, ElemSet s);
// Throws NotAnIdeal.
LatticeIdeal make_ideal(const FiniteLattice& L, ElemSet members);
LatticeIdeal principal_ideal(const FiniteLattice& L, Elem g);
// Smallest ideal containing s. Throws EmptyGenerator.
LatticeIdeal ideal_closure(const FiniteLattice& L, ElemSet s);
LatticeIdeal ideal_join(const FiniteLattice& L, const LatticeIdeal& a,
                        const LatticeIdeal& b);
LatticeIdeal ideal_meet(const FiniteLattice& L, const LatticeIdeal& a,
                        const LatticeIdeal& b);
bool is_whole(const FiniteLattice& L, const LatticeIdeal& I);
// One principal ideal per element, indexed by generator.
std::vector<LatticeIdeal> all_ideals(const FiniteLattice& L);

bool is_prime_ideal(const FiniteLattice& L, const LatticeIdeal& I);

struct PrimeIdealRecord {
  LatticeIdeal ideal;
  bool is_prime = true;
  bool is_maximal = false;
  bool is_minimal_prime = false;
};

// Ordered by generator index. Throws NotDistributive.
std::vector<PrimeIdealRecord> prime_spectrum_lattice(const FiniteLattice& L);

// {x : x ^ y = 0 for all y in I}.
LatticeIdeal annihilator(const FiniteLattice& L, const LatticeIdeal& I);
// Generator of Ann((x]).
Elem pseudocomplement(const FiniteLattice& L, Elem x);

// {x : I v Ann(x) = L}
ElemSet sigma_set(const FiniteLattice& L, const LatticeIdeal& I);
bool is_sigma_ideal(const FiniteLattice& L, const LatticeIdeal& I);

struct Fractions {
  FiniteLattice lattice;
  std::vector<Elem> projection;  // x -> class of x
};

// Quotient by x ~ y iff x ^ t = y ^ t for some t outside P. Throws NotPrime.
Fractions lattice_of_fractions(const FiniteLattice& L, const LatticeIdeal& P);

// {x : x ^ t = 0 for some t outside P}. Throws NotPrime.
LatticeIdeal o_ideal(const FiniteLattice& L, const LatticeIdeal& P);

ElemSet complemented_elements(const FiniteLattice& L);

struct LatticeFlags {
  bool normal = false;
  bool conormal = false;
  bool stone = false;
};

// Throws NotDistributive, or ImplicationViolation if stone holds without
// conormal.
LatticeFlags classify_lattice(const FiniteLattice& L);
bool is_normal_lattice(const FiniteLattice& L);
bool is_conormal_lattice(const FiniteLattice& L);
bool is_stone_lattice(const FiniteLattice& L);

// Hasse diagram edges (lower, upper).
std::vector<std::pair<Elem, Elem>> cover_edges(const FiniteLattice& L);

std::vector<std::string> labels(const FiniteLattice& L, ElemSet s);

}  // namespace qlab

#endif  // QLAB_LATTICE_HPP_
