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

#ifndef QLAB_QUANTALE_HPP_
#define QLAB_QUANTALE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/error.hpp"
#include "qlab/lattice.hpp"

namespace qlab {

using MultTable = std::vector<std::vector<Elem>>;

struct SpectrumTables {
  ElemSet spec;
  ElemSet max;
  ElemSet min;
  std::vector<Elem> radical_of;
};

// A finite commutative integral quantale. Every element is compact. The
// residuum, spectra, radical and Boolean center are computed once in build().
class Quantale {
 public:
  // Checks, in order: commutativity, unit, zero absorption, distributivity
  // over binary joins, associativity. Throws the matching ErrorKind.
  static Quantale build(FiniteLattice lat, MultTable mult);
  // The first violation, or nothing for a valid table.
  static std::optional<Error> validate(const FiniteLattice& lat, const MultTable& mult);

  const FiniteLattice& lattice() const { return lat_; }
  std::size_t size() const { return lat_.size(); }
  ElemSet all() const { return lat_.all(); }
  const std::string& name(Elem e) const { return lat_.name(e); }
  const std::vector<std::string>& names() const { return lat_.names(); }

  Elem mul(Elem a, Elem b) const { return mult_[a * size() + b]; }
  MultTable mult_table() const;
  bool leq(Elem a, Elem b) const { return lat_.leq(a, b); }
  Elem join(Elem a, Elem b) const { return lat_.join(a, b); }
  Elem meet(Elem a, Elem b) const { return lat_.meet(a, b); }
  Elem join_all(ElemSet s) const { return lat_.join_all(s); }
  Elem meet_all(ElemSet s) const { return lat_.meet_all(s); }
  Elem bot() const { return lat_.bot(); }
  Elem top() const { return lat_.top(); }
  ElemSet up(Elem a) const { return lat_.up(a); }
  ElemSet down(Elem a) const { return lat_.down(a); }

  // a -> b, the largest x with ax <= b.
  Elem residuum(Elem a, Elem b) const { return resid_[a * size() + b]; }
  Elem neg(Elem a) const { return residuum(a, bot()); }

  const SpectrumTables& spectrum() const { return spec_; }
  ElemSet spec() const { return spec_.spec; }
  ElemSet max() const { return spec_.max; }
  ElemSet min() const { return spec_.min; }
  Elem radical(Elem a) const { return spec_.radical_of[a]; }
  ElemSet radical_elements() const;
  ElemSet boolean_center() const { return center_; }
  bool is_frame() const { return frame_; }

 private:
  explicit Quantale(FiniteLattice lat) : lat_(std::move(lat)) {}

  FiniteLattice lat_;
  std::vector<Elem> mult_;
  std::vector<Elem> resid_;
  SpectrumTables spec_;
  ElemSet center_;
  bool frame_ = false;
};

bool is_m_prime(const Quantale& A, Elem p);
Elem power(const Quantale& A, Elem a, std::size_t k);
// Powers of an element decrease, so they settle within n steps.
Elem stable_power(const Quantale& A, Elem a);
// \/{c : c^k <= a for some k}, computed from powers only.
Elem radical_via_powers(const Quantale& A, Elem a);
bool is_semiprime(const Quantale& A);
bool is_hyperarchimedean(const Quantale& A);

// Spec elements below p.
ElemSet lambda_set(const Quantale& A, Elem p);
// Spec elements above a.
ElemSet v_set(const Quantale& A, Elem a);
// Spec elements not above a.
ElemSet d_set(const Quantale& A, Elem a);

// Meet multiplication. L must be distributive.
Quantale frame_of(const FiniteLattice& L);

// Names <x,y>, order and product componentwise.
Quantale product_quantale(const Quantale& A, const Quantale& B);

struct SubQuantale {
  Quantale q;
  std::vector<Elem> embed;                // index in q -> element of A
  std::vector<std::optional<Elem>> index; // element of A -> index in q
};

// The radical elements with joins rho(a v b) and meet as multiplication.
SubQuantale radical_frame(const Quantale& A);

struct Interval {
  Quantale q;
  std::vector<Elem> embed;  // index in q -> element of A
  std::vector<Elem> u;      // x -> x v a, as an index in q
};

// [a) with x . y = xy v a.
Interval interval_quantale(const Quantale& A, Elem a);
bool has_lifting_property(const Quantale& A, Elem a);

std::vector<std::string> labels(const Quantale& A, ElemSet s);

}  // namespace qlab

#endif  // QLAB_QUANTALE_HPP_
