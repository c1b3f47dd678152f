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

#include "qlab/topology.hpp"

#include <functional>
#include <utility>

#include "qlab/error.hpp"

namespace qlab {

FiniteSpace::FiniteSpace(std::vector<Elem> ids, std::vector<std::string> labels,
                         std::vector<ElemSet> up, Orientation orientation)
    : ids_(std::move(ids)),
      labels_(std::move(labels)),
      up_(std::move(up)),
      orientation_(orientation) {
  if (labels_.size() != ids_.size() || up_.size() != ids_.size())
    throw Error(ErrorKind::InvalidArgument, "space arrays disagree in length");
  if (ids_.size() > kMaxElements)
    throw Error(ErrorKind::TooLarge, "too many points");
  down_.assign(size(), ElemSet{});
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j : up_[i]) down_[j].insert(i);
}

std::optional<std::size_t> FiniteSpace::index_of_id(Elem id) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (ids_[i] == id) return i;
  return std::nullopt;
}

ElemSet FiniteSpace::up_closure(ElemSet s) const {
  ElemSet r;
  for (std::size_t i : s) r |= up_[i];
  return r;
}

ElemSet FiniteSpace::down_closure(ElemSet s) const {
  ElemSet r;
  for (std::size_t i : s) r |= down_[i];
  return r;
}

ElemSet FiniteSpace::closure(ElemSet s) const {
  return orientation_ == Orientation::ClosedUp ? up_closure(s) : down_closure(s);
}

ElemSet FiniteSpace::open_hull(ElemSet s) const {
  return orientation_ == Orientation::ClosedUp ? down_closure(s) : up_closure(s);
}

bool FiniteSpace::is_closed(ElemSet s) const { return closure(s) == s; }

bool FiniteSpace::specializes(std::size_t i, std::size_t j) const {
  return orientation_ == Orientation::ClosedUp ? leq(j, i) : leq(i, j);
}

ElemSet FiniteSpace::id_set(ElemSet s) const {
  ElemSet r;
  for (std::size_t i : s) r.insert(ids_[i]);
  return r;
}

ElemSet FiniteSpace::from_ids(ElemSet ids) const {
  ElemSet r;
  for (std::size_t i = 0; i < size(); ++i)
    if (ids.contains(ids_[i])) r.insert(i);
  return r;
}

namespace {

FiniteSpace order_space(const FiniteLattice& L, ElemSet points, Orientation o) {
  std::vector<Elem> ids(points.begin(), points.end());
  std::vector<std::string> labels;
  std::vector<ElemSet> up(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    labels.push_back(L.name(ids[i]));
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (L.leq(ids[i], ids[j])) up[i].insert(j);
  }
  return FiniteSpace(std::move(ids), std::move(labels), std::move(up), o);
}

FiniteSpace ideal_space(const FiniteLattice& L, Orientation o) {
  ElemSet gens;
  for (const auto& r : prime_spectrum_lattice(L)) gens.insert(r.ideal.generator);
  FiniteSpace base = order_space(L, gens, o);
  std::vector<std::string> labels;
  for (const auto& s : base.labels()) labels.push_back("(" + s + "]");
  std::vector<ElemSet> up;
  for (std::size_t i = 0; i < base.size(); ++i) up.push_back(base.up(i));
  return FiniteSpace(base.ids(), std::move(labels), std::move(up), o);
}

void guard_check(const FiniteSpace& X, std::size_t guard) {
  if (X.size() > guard)
    throw Error(ErrorKind::TooLarge, "space has " + std::to_string(X.size()) +
                                         " points, guard is " + std::to_string(guard));
}

}  // namespace

FiniteSpace zariski_space(const Quantale& A) {
  return order_space(A.lattice(), A.spec(), Orientation::ClosedUp);
}

FiniteSpace flat_space(const Quantale& A) {
  return order_space(A.lattice(), A.spec(), Orientation::ClosedDown);
}

FiniteSpace ideal_zariski_space(const FiniteLattice& L) {
  return ideal_space(L, Orientation::ClosedUp);
}

FiniteSpace ideal_flat_space(const FiniteLattice& L) {
  return ideal_space(L, Orientation::ClosedDown);
}

FiniteSpace subspace(const FiniteSpace& X, ElemSet points) {
  std::vector<std::size_t> keep(points.begin(), points.end());
  std::vector<Elem> ids;
  std::vector<std::string> labels;
  std::vector<ElemSet> up(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    ids.push_back(X.id(keep[i]));
    labels.push_back(X.labels()[keep[i]]);
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (X.leq(keep[i], keep[j])) up[i].insert(j);
  }
  return FiniteSpace(std::move(ids), std::move(labels), std::move(up), X.orientation());
}

FiniteSpace from_open_basis(std::vector<Elem> ids, std::vector<std::string> labels,
                            const std::vector<ElemSet>& basis) {
  const std::size_t n = ids.size();
  // x lies in the closure of {y} iff every basic open around x contains y.
  std::vector<ElemSet> up(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool in_closure = true;
      for (ElemSet b : basis)
        if (b.contains(x) && !b.contains(y)) in_closure = false;
      if (in_closure) up[x].insert(y);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : up[x])
      if (y != x && up[y].contains(x))
        throw Error(ErrorKind::AxiomFailure, "generated topology is not T0",
                    {labels[x], labels[y]});
  return FiniteSpace(std::move(ids), std::move(labels), std::move(up),
                     Orientation::ClosedDown);
}

std::vector<ElemSet> closed_sets(const FiniteSpace& X, std::size_t guard) {
  guard_check(X, guard);
  std::vector<ElemSet> out;
  const std::uint64_t limit = std::uint64_t{1} << X.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    ElemSet s = ElemSet::from_bits(bits);
    if (X.is_closed(s)) out.push_back(s);
  }
  return out;
}

std::vector<ElemSet> open_sets(const FiniteSpace& X, std::size_t guard) {
  std::vector<ElemSet> out;
  for (ElemSet c : closed_sets(X, guard)) out.push_back(X.all() - c);
  return out;
}

std::vector<ElemSet> clopens(const FiniteSpace& X, std::size_t guard) {
  std::vector<ElemSet> out;
  for (ElemSet c : closed_sets(X, guard))
    if (X.is_open(c)) out.push_back(c);
  return out;
}

bool is_normal_space(const FiniteSpace& X, std::size_t guard) {
  guard_check(X, guard);
  // Any open superset of F contains the hull of F, so disjoint open
  // neighbourhoods exist iff the hulls are disjoint.
  auto separated = [&](ElemSet f, ElemSet g) {
    return !X.open_hull(f).intersects(X.open_hull(g));
  };
  std::vector<ElemSet> closed = closed_sets(X, guard);
  if (closed.size() <= 4096) {
    for (ElemSet f : closed)
      for (ElemSet g : closed)
        if (!f.empty() && !g.empty() && !f.intersects(g) && !separated(f, g)) return false;
    return true;
  }
  // Every pair of disjoint closed sets contains a pair of disjoint point
  // closures, so points suffice.
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y = 0; y < X.size(); ++y) {
      ElemSet f = X.closure(ElemSet::single(x)), g = X.closure(ElemSet::single(y));
      if (!f.intersects(g) && !separated(f, g)) return false;
    }
  return true;
}

bool is_compact(const FiniteSpace&) {
  // A finite space has finitely many open sets, so every open cover is
  // already finite.
  return true;
}

bool is_connected_subset(const FiniteSpace& X, ElemSet s) {
  if (s.empty()) return true;
  // Grow the smallest relatively clopen set around one point.
  ElemSet t = ElemSet::single(s.front());
  for (;;) {
    ElemSet next = (X.up_closure(t) | X.down_closure(t)) & s;
    if (next == t) break;
    t = next;
  }
  return t == s;
}

SeparationFlags separation_flags(const FiniteSpace& X, std::size_t guard) {
  guard_check(X, guard);
  SeparationFlags f;
  const std::size_t n = X.size();
  f.t1 = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!X.is_closed(ElemSet::single(i))) f.t1 = false;
  f.hausdorff = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (X.min_neighbourhood(i).intersects(X.min_neighbourhood(j))) f.hausdorff = false;
  const std::vector<ElemSet> cl = clopens(X, guard);
  f.zero_dimensional = true;
  for (ElemSet u : open_sets(X, guard))
    for (std::size_t x : u) {
      bool found = false;
      for (ElemSet c : cl)
        if (c.contains(x) && c.subset_of(u)) found = true;
      if (!found) f.zero_dimensional = false;
    }
  f.totally_separated = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool found = false;
      for (ElemSet c : cl)
        if (c.contains(x) && !c.contains(y)) found = true;
      if (!found) f.totally_separated = false;
    }
  f.totally_disconnected = true;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit && f.totally_disconnected; ++bits) {
    ElemSet s = ElemSet::from_bits(bits);
    if (s.size() >= 2 && is_connected_subset(X, s)) f.totally_disconnected = false;
  }
  f.compact = is_compact(X);
  f.boolean_space = f.compact && f.hausdorff && f.zero_dimensional;
  return f;
}

bool is_continuous(const FiniteSpace& X, const FiniteSpace& Y,
                   const std::vector<std::size_t>& f) {
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      if (X.specializes(i, j) && !Y.specializes(f[i], f[j])) return false;
  return true;
}

bool is_continuous_by_preimage(const FiniteSpace& X, const FiniteSpace& Y,
                               const std::vector<std::size_t>& f, std::size_t guard) {
  guard_check(X, guard);
  for (ElemSet c : closed_sets(Y, guard)) {
    ElemSet pre;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (c.contains(f[i])) pre.insert(i);
    if (!X.is_closed(pre)) return false;
  }
  return true;
}

bool is_homeomorphism(const FiniteSpace& X, const FiniteSpace& Y,
                      const std::vector<std::size_t>& f) {
  if (X.size() != Y.size() || f.size() != X.size()) return false;
  std::vector<std::size_t> inv(Y.size(), Y.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= Y.size() || inv[f[i]] != Y.size()) return false;
    inv[f[i]] = i;
  }
  return is_continuous(X, Y, f) && is_continuous(Y, X, inv);
}

std::optional<std::vector<std::size_t>> homeomorphic(const FiniteSpace& X,
                                                     const FiniteSpace& Y,
                                                     std::size_t guard) {
  guard_check(X, guard);
  guard_check(Y, guard);
  if (X.size() != Y.size()) return std::nullopt;
  const std::size_t n = X.size();
  std::vector<std::size_t> f(n);
  ElemSet used;
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used.contains(y)) continue;
      bool ok = true;
      for (std::size_t k = 0; k <= i && ok; ++k) {
        std::size_t fk = k == i ? y : f[k];
        ok = X.specializes(i, k) == Y.specializes(y, fk) &&
             X.specializes(k, i) == Y.specializes(fk, y);
      }
      if (!ok) continue;
      f[i] = y;
      used.insert(y);
      if (place(i + 1)) return true;
      used.erase(y);
    }
    return false;
  };
  if (place(0)) return f;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> retraction_exists(const FiniteSpace& X, ElemSet s,
                                                          std::size_t guard) {
  guard_check(X, guard);
  const std::size_t n = X.size();
  if (s.empty()) {
    if (n == 0) return std::vector<std::size_t>{};
    return std::nullopt;
  }
  std::vector<std::size_t> r(n, n);
  for (std::size_t i : s) r[i] = i;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!s.contains(i)) free.push_back(i);
  auto consistent = [&](std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (r[k] == n) continue;
      if (X.specializes(i, k) && !X.specializes(r[i], r[k])) return false;
      if (X.specializes(k, i) && !X.specializes(r[k], r[i])) return false;
    }
    return true;
  };
  for (std::size_t i : s)
    if (!consistent(i)) return std::nullopt;
  std::function<bool(std::size_t)> place = [&](std::size_t idx) {
    if (idx == free.size()) return true;
    std::size_t i = free[idx];
    for (std::size_t t : s) {
      r[i] = t;
      if (consistent(i) && place(idx + 1)) return true;
    }
    r[i] = n;
    return false;
  };
  if (place(0)) return r;
  return std::nullopt;
}

std::vector<std::string> labels(const FiniteSpace& X, ElemSet s) {
  std::vector<std::string> out;
  for (std::size_t i : s) out.push_back(X.labels()[i]);
  return out;
}

}  // namespace qlab
