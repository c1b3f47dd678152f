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

#include "qlab/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "qlab/error.hpp"

namespace qlab {

namespace {

void check_carrier(const std::vector<std::string>& names) {
  if (names.empty())
    throw Error(ErrorKind::InvalidArgument, "empty carrier");
  if (names.size() > kMaxElements)
    throw Error(ErrorKind::TooLarge, "carrier exceeds " +
                                         std::to_string(kMaxElements) +
                                         " elements");
  std::unordered_set<std::string> seen;
  for (const auto& s : names) {
    if (s.empty() || !seen.insert(s).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate or empty label '" + s + "'");
  }
}

}  // namespace

FiniteLattice FiniteLattice::build(
    std::vector<std::string> names,
    const std::vector<std::pair<Elem, Elem>>& leq_pairs) {
  check_carrier(names);
  const std::size_t n = names.size();
  std::vector<ElemSet> up(n);
  for (Elem i = 0; i < n; ++i) up[i].insert(i);
  for (auto [a, b] : leq_pairs) {
    if (a >= n || b >= n)
      throw Error(ErrorKind::InvalidArgument, "order pair out of range");
    up[a].insert(b);
  }
  // Warshall on bitsets.
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  for (Elem i = 0; i < n; ++i)
    for (Elem j : up[i])
      if (j != i && up[j].contains(i))
        throw Error(ErrorKind::NotALattice, "order is not antisymmetric",
                    {names[i], names[j]});
  return from_order(std::move(names), std::move(up));
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names,
                                        std::vector<ElemSet> up) {
  check_carrier(names);
  FiniteLattice L;
  L.names_ = std::move(names);
  L.up_ = std::move(up);
  L.finish();
  return L;
}

void FiniteLattice::finish() {
  const std::size_t n = size();
  down_.assign(n, ElemSet{});
  for (Elem i = 0; i < n; ++i)
    for (Elem j : up_[i]) down_[j].insert(i);

  const ElemSet everything = all();
  std::optional<Elem> b, t;
  for (Elem i = 0; i < n; ++i) {
    if (up_[i] == everything) b = i;
    if (down_[i] == everything) t = i;
  }
  if (!b || !t)
    throw Error(ErrorKind::NoBounds, !b ? "no least element" : "no greatest element");
  bot_ = *b;
  top_ = *t;

  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i; j < n; ++j) {
      ElemSet ub = up_[i] & up_[j];
      std::optional<Elem> lub;
      for (Elem u : ub)
        if (ub.subset_of(up_[u])) lub = u;
      ElemSet lb = down_[i] & down_[j];
      std::optional<Elem> glb;
      for (Elem l : lb)
        if (lb.subset_of(down_[l])) glb = l;
      if (!lub || !glb)
        throw Error(ErrorKind::NotALattice,
                    std::string("no ") + (!lub ? "least upper" : "greatest lower") +
                        " bound",
                    {names_[i], names_[j]});
      join_[i * n + j] = join_[j * n + i] = *lub;
      meet_[i * n + j] = meet_[j * n + i] = *glb;
    }
  }
  distributive_ = !distributivity_witness().has_value();
}

std::optional<Elem> FiniteLattice::index_of(const std::string& label) const {
  for (Elem i = 0; i < size(); ++i)
    if (names_[i] == label) return i;
  return std::nullopt;
}

Elem FiniteLattice::join_all(ElemSet s) const {
  Elem acc = bot_;
  for (Elem e : s) acc = join(acc, e);
  return acc;
}

Elem FiniteLattice::meet_all(ElemSet s) const {
  Elem acc = top_;
  for (Elem e : s) acc = meet(acc, e);
  return acc;
}

ElemSet FiniteLattice::upper_bounds(ElemSet s) const {
  ElemSet r = all();
  for (Elem e : s) r &= up_[e];
  return r;
}

ElemSet FiniteLattice::lower_bounds(ElemSet s) const {
  ElemSet r = all();
  for (Elem e : s) r &= down_[e];
  return r;
}

ElemSet FiniteLattice::maximal(ElemSet s) const {
  ElemSet r;
  for (Elem e : s)
    if ((up_[e] & s) == ElemSet::single(e)) r.insert(e);
  return r;
}

ElemSet FiniteLattice::minimal(ElemSet s) const {
  ElemSet r;
  for (Elem e : s)
    if ((down_[e] & s) == ElemSet::single(e)) r.insert(e);
  return r;
}

ElemSet FiniteLattice::join_irreducibles() const {
  ElemSet r;
  for (Elem e = 0; e < size(); ++e) {
    if (e == bot_) continue;
    // Irreducible iff exactly one lower cover.
    ElemSet below = down_[e];
    below.erase(e);
    if (maximal(below).size() == 1) r.insert(e);
  }
  return r;
}

std::optional<std::vector<Elem>> FiniteLattice::distributivity_witness() const {
  const std::size_t n = size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = y + 1; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
          return std::vector<Elem>{x, y, z};
  return std::nullopt;
}

bool is_ideal(const FiniteLattice& L, ElemSet s) {
  if (s.empty()) return false;
  for (Elem x : s) {
    if (!L.down(x).subset_of(s)) return false;
    for (Elem y : s)
      if (!s.contains(L.join(x, y))) return false;
  }
  return true;
}

LatticeIdeal make_ideal(const FiniteLattice& L, ElemSet members) {
  if (!is_ideal(L, members))
    throw Error(ErrorKind::NotAnIdeal, "set is not an ideal", labels(L, members));
  Elem g = L.join_all(members);
  if (L.down(g) != members)
    throw Error(ErrorKind::NotAnIdeal, "ideal is not principal", labels(L, members));
  return LatticeIdeal{members, g};
}

LatticeIdeal principal_ideal(const FiniteLattice& L, Elem g) {
  return LatticeIdeal{L.down(g), g};
}

LatticeIdeal ideal_closure(const FiniteLattice& L, ElemSet s) {
  if (s.empty()) throw Error(ErrorKind::EmptyGenerator, "ideal of an empty set");
  return principal_ideal(L, L.join_all(s));
}

LatticeIdeal ideal_join(const FiniteLattice& L, const LatticeIdeal& a,
                        const LatticeIdeal& b) {
  return ideal_closure(L, a.members | b.members);
}

LatticeIdeal ideal_meet(const FiniteLattice& L, const LatticeIdeal& a,
                        const LatticeIdeal& b) {
  return make_ideal(L, a.members & b.members);
}

bool is_whole(const FiniteLattice& L, const LatticeIdeal& I) {
  return I.contains(L.top());
}

std::vector<LatticeIdeal> all_ideals(const FiniteLattice& L) {
  std::vector<LatticeIdeal> out;
  out.reserve(L.size());
  for (Elem g = 0; g < L.size(); ++g) out.push_back(principal_ideal(L, g));
  return out;
}

bool is_prime_ideal(const FiniteLattice& L, const LatticeIdeal& I) {
  if (is_whole(L, I)) return false;
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = x; y < L.size(); ++y)
      if (I.contains(L.meet(x, y)) && !I.contains(x) && !I.contains(y))
        return false;
  return true;
}

std::vector<PrimeIdealRecord> prime_spectrum_lattice(const FiniteLattice& L) {
  if (!L.is_distributive())
    throw Error(ErrorKind::NotDistributive, "prime spectrum needs distributivity");
  std::vector<PrimeIdealRecord> out;
  for (const auto& I : all_ideals(L))
    if (is_prime_ideal(L, I)) out.push_back({I, true, false, false});
  for (auto& r : out) {
    bool has_larger_proper = false;
    for (Elem g = 0; g < L.size(); ++g)
      if (g != L.top() && L.lt(r.ideal.generator, g)) has_larger_proper = true;
    r.is_maximal = !has_larger_proper;
    r.is_minimal_prime = std::none_of(out.begin(), out.end(), [&](const auto& o) {
      return o.ideal.members != r.ideal.members &&
             o.ideal.members.subset_of(r.ideal.members);
    });
  }
  return out;
}

LatticeIdeal annihilator(const FiniteLattice& L, const LatticeIdeal& I) {
  ElemSet s;
  for (Elem x = 0; x < L.size(); ++x) {
    bool ok = true;
    for (Elem y : I.members)
      if (L.meet(x, y) != L.bot()) ok = false;
    if (ok) s.insert(x);
  }
  return make_ideal(L, s);
}

Elem pseudocomplement(const FiniteLattice& L, Elem x) {
  return annihilator(L, principal_ideal(L, x)).generator;
}

ElemSet sigma_set(const FiniteLattice& L, const LatticeIdeal& I) {
  ElemSet s;
  for (Elem x = 0; x < L.size(); ++x) {
    LatticeIdeal j = ideal_join(L, I, annihilator(L, principal_ideal(L, x)));
    if (is_whole(L, j)) s.insert(x);
  }
  return s;
}

bool is_sigma_ideal(const FiniteLattice& L, const LatticeIdeal& I) {
  return I.members.subset_of(sigma_set(L, I));
}

namespace {

void require_prime(const FiniteLattice& L, const LatticeIdeal& P) {
  if (!is_ideal(L, P.members) || !is_prime_ideal(L, P))
    throw Error(ErrorKind::NotPrime, "ideal is not prime", labels(L, P.members));
}

}  // namespace

Fractions lattice_of_fractions(const FiniteLattice& L, const LatticeIdeal& P) {
  require_prime(L, P);
  const std::size_t n = L.size();
  const ElemSet outside = L.all() - P.members;
  auto equiv = [&](Elem x, Elem y) {
    for (Elem t : outside)
      if (L.meet(x, t) == L.meet(y, t)) return true;
    return false;
  };
  std::vector<Elem> cls(n, n);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    for (Elem r = 0; r < reps.size() && cls[x] == n; ++r)
      if (equiv(x, reps[r])) cls[x] = r;
    if (cls[x] == n) {
      cls[x] = reps.size();
      reps.push_back(x);
    }
  }
  // The relation is a congruence, so membership in a class is well defined;
  // double-check transitivity rather than trusting it.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if ((cls[x] == cls[y]) != equiv(x, y))
        throw Error(ErrorKind::AxiomFailure, "fraction relation is not an equivalence",
                    {L.name(x), L.name(y)});
  std::vector<std::string> names;
  std::vector<ElemSet> up(reps.size());
  for (Elem r : reps) names.push_back(L.name(r));
  for (Elem i = 0; i < reps.size(); ++i)
    for (Elem j = 0; j < reps.size(); ++j)
      if (cls[L.meet(reps[i], reps[j])] == i) up[i].insert(j);
  return Fractions{FiniteLattice::from_order(std::move(names), std::move(up)),
                   std::move(cls)};
}

LatticeIdeal o_ideal(const FiniteLattice& L, const LatticeIdeal& P) {
  require_prime(L, P);
  ElemSet s;
  const ElemSet outside = L.all() - P.members;
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem t : outside)
      if (L.meet(x, t) == L.bot()) {
        s.insert(x);
        break;
      }
  return make_ideal(L, s);
}

ElemSet complemented_elements(const FiniteLattice& L) {
  ElemSet s;
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (L.join(x, y) == L.top() && L.meet(x, y) == L.bot()) {
        s.insert(x);
        break;
      }
  return s;
}

bool is_normal_lattice(const FiniteLattice& L) {
  const std::size_t n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (L.join(x, y) != L.top()) continue;
      bool found = false;
      for (Elem u = 0; u < n && !found; ++u)
        for (Elem v = 0; v < n && !found; ++v)
          found = L.join(x, u) == L.top() && L.join(y, v) == L.top() &&
                  L.meet(u, v) == L.bot();
      if (!found) return false;
    }
  return true;
}

bool is_conormal_lattice(const FiniteLattice& L) {
  const std::size_t n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (L.meet(x, y) != L.bot()) continue;
      bool found = false;
      for (Elem u = 0; u < n && !found; ++u)
        for (Elem v = 0; v < n && !found; ++v)
          found = L.meet(x, u) == L.bot() && L.meet(y, v) == L.bot() &&
                  L.join(u, v) == L.top();
      if (!found) return false;
    }
  return true;
}

bool is_stone_lattice(const FiniteLattice& L) {
  const ElemSet b = complemented_elements(L);
  for (Elem x = 0; x < L.size(); ++x) {
    LatticeIdeal ann = annihilator(L, principal_ideal(L, x));
    bool found = false;
    for (Elem e : b)
      if (L.down(e) == ann.members) found = true;
    if (!found) return false;
  }
  return true;
}

LatticeFlags classify_lattice(const FiniteLattice& L) {
  if (!L.is_distributive())
    throw Error(ErrorKind::NotDistributive, "lattice is not distributive");
  LatticeFlags f{is_normal_lattice(L), is_conormal_lattice(L), is_stone_lattice(L)};
  if (f.stone && !f.conormal)
    throw Error(ErrorKind::ImplicationViolation, "stone lattice that is not conormal",
                {"stone", "conormal"});
  return f;
}

std::vector<std::pair<Elem, Elem>> cover_edges(const FiniteLattice& L) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < L.size(); ++a) {
    ElemSet above = L.up(a);
    above.erase(a);
    for (Elem b : L.minimal(above)) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::string> labels(const FiniteLattice& L, ElemSet s) {
  std::vector<std::string> out;
  for (Elem e : s) out.push_back(L.name(e));
  return out;
}

}  // namespace qlab
