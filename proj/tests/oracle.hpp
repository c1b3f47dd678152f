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

// Brute-force reference computations used by the tests. Everything here is
// derived from the order, join and multiplication tables alone, never from
// the library's cached spectra, radicals or purity tables.

#ifndef QLAB_TESTS_ORACLE_HPP_
#define QLAB_TESTS_ORACLE_HPP_

#include <algorithm>
#include <set>
#include <vector>

#include "qlab/quantale.hpp"

namespace oracle {

using qlab::Elem;
using qlab::ElemSet;
using qlab::Quantale;

inline std::vector<Elem> elems(const Quantale& A) {
  std::vector<Elem> v(A.size());
  for (Elem i = 0; i < A.size(); ++i) v[i] = i;
  return v;
}

// Least upper bound by scanning the order, not the join table.
inline Elem sup(const Quantale& A, const std::vector<Elem>& s) {
  for (Elem u : elems(A)) {
    bool upper = true;
    for (Elem x : s) upper = upper && A.leq(x, u);
    if (!upper) continue;
    bool least = true;
    for (Elem w : elems(A)) {
      bool wu = true;
      for (Elem x : s) wu = wu && A.leq(x, w);
      if (wu && !A.leq(u, w)) least = false;
    }
    if (least) return u;
  }
  return A.top();
}

inline Elem inf(const Quantale& A, const std::vector<Elem>& s) {
  for (Elem l : elems(A)) {
    bool lower = true;
    for (Elem x : s) lower = lower && A.leq(l, x);
    if (!lower) continue;
    bool greatest = true;
    for (Elem w : elems(A)) {
      bool wl = true;
      for (Elem x : s) wl = wl && A.leq(w, x);
      if (wl && !A.leq(w, l)) greatest = false;
    }
    if (greatest) return l;
  }
  return A.bot();
}

inline Elem bottom(const Quantale& A) { return sup(A, {}); }
inline Elem top(const Quantale& A) { return inf(A, {}); }

inline Elem residuum(const Quantale& A, Elem a, Elem b) {
  std::vector<Elem> xs;
  for (Elem x : elems(A))
    if (A.leq(A.mul(a, x), b)) xs.push_back(x);
  return sup(A, xs);
}

inline Elem perp(const Quantale& A, Elem a) { return residuum(A, a, bottom(A)); }

inline bool m_prime(const Quantale& A, Elem p) {
  if (p == top(A)) return false;
  for (Elem a : elems(A))
    for (Elem b : elems(A))
      if (A.leq(A.mul(a, b), p) && !A.leq(a, p) && !A.leq(b, p)) return false;
  return true;
}

inline std::vector<Elem> spec(const Quantale& A) {
  std::vector<Elem> s;
  for (Elem p : elems(A))
    if (m_prime(A, p)) s.push_back(p);
  return s;
}

inline std::vector<Elem> maximal(const Quantale& A) {
  std::vector<Elem> m;
  for (Elem x : elems(A)) {
    if (x == top(A)) continue;
    bool isMax = true;
    for (Elem y : elems(A))
      if (y != x && y != top(A) && A.leq(x, y)) isMax = false;
    if (isMax) m.push_back(x);
  }
  return m;
}

inline std::vector<Elem> minimal_primes(const Quantale& A) {
  const auto S = spec(A);
  std::vector<Elem> m;
  for (Elem p : S) {
    bool isMin = true;
    for (Elem q : S)
      if (q != p && A.leq(q, p)) isMin = false;
    if (isMin) m.push_back(p);
  }
  return m;
}

inline Elem radical(const Quantale& A, Elem a) {
  std::vector<Elem> above;
  for (Elem p : spec(A))
    if (A.leq(a, p)) above.push_back(p);
  return inf(A, above);
}

// Join of all c with some power c^k <= a.
inline Elem radical_by_powers(const Quantale& A, Elem a) {
  std::vector<Elem> cs;
  for (Elem c : elems(A)) {
    Elem pw = c;
    bool hit = false;
    for (std::size_t k = 0; k <= A.size() && !hit; ++k) {
      hit = A.leq(pw, a);
      pw = A.mul(pw, c);
    }
    if (hit) cs.push_back(c);
  }
  return sup(A, cs);
}

// Complemented in the lattice sense: some f with e v f = 1 and e ^ f = 0.
inline std::vector<Elem> boolean_center(const Quantale& A) {
  std::vector<Elem> b;
  for (Elem e : elems(A))
    for (Elem f : elems(A))
      if (sup(A, {e, f}) == top(A) && inf(A, {e, f}) == bottom(A)) {
        b.push_back(e);
        break;
      }
  return b;
}

inline bool pure(const Quantale& A, Elem a) {
  for (Elem c : elems(A))
    if (A.leq(c, a) && sup(A, {a, perp(A, c)}) != top(A)) return false;
  return true;
}

inline bool w_pure(const Quantale& A, Elem a) {
  const Elem r0 = radical(A, bottom(A));
  for (Elem c : elems(A))
    if (A.leq(c, a) && sup(A, {a, residuum(A, c, r0)}) != top(A)) return false;
  return true;
}

inline Elem vir(const Quantale& A, Elem a) {
  std::vector<Elem> s;
  for (Elem b : elems(A))
    if (A.leq(b, a) && pure(A, b)) s.push_back(b);
  return sup(A, s);
}

inline Elem ker(const Quantale& A, Elem a) {
  std::vector<Elem> s;
  for (Elem c : elems(A))
    if (A.leq(c, a) && sup(A, {a, perp(A, c)}) == top(A)) s.push_back(c);
  return sup(A, s);
}

// Join of u with uv = 0 for some v not below a.
inline Elem o_elem(const Quantale& A, Elem a) {
  std::vector<Elem> s;
  for (Elem u : elems(A))
    for (Elem v : elems(A))
      if (A.mul(u, v) == bottom(A) && !A.leq(v, a)) {
        s.push_back(u);
        break;
      }
  return sup(A, s);
}

inline Elem o_tilde(const Quantale& A, Elem p) {
  const Elem r0 = radical(A, bottom(A));
  std::vector<Elem> s;
  for (Elem c : elems(A))
    if (A.leq(c, p) && !A.leq(residuum(A, c, r0), p)) s.push_back(c);
  return sup(A, s);
}

// Minimal primes below p.
inline std::vector<Elem> lambda(const Quantale& A, Elem p) {
  std::vector<Elem> s;
  for (Elem q : minimal_primes(A))
    if (A.leq(q, p)) s.push_back(q);
  return s;
}

inline Elem omega(const Quantale& A, Elem p) {
  std::vector<Elem> s;
  for (Elem q : spec(A))
    if (A.leq(q, p)) s.push_back(q);
  return inf(A, s);
}

inline bool semiprime(const Quantale& A) { return radical(A, bottom(A)) == bottom(A); }

inline bool normal(const Quantale& A) {
  for (Elem a : elems(A))
    for (Elem b : elems(A)) {
      if (sup(A, {a, b}) != top(A)) continue;
      bool found = false;
      for (Elem e : elems(A))
        for (Elem f : elems(A))
          found = found || (sup(A, {a, e}) == top(A) && sup(A, {b, f}) == top(A) &&
                            A.mul(e, f) == bottom(A));
      if (!found) return false;
    }
  return true;
}

inline bool mp(const Quantale& A) {
  for (Elem p : spec(A))
    if (lambda(A, p).size() != 1) return false;
  return true;
}

inline bool pf(const Quantale& A) {
  for (Elem c : elems(A))
    if (!pure(A, perp(A, c))) return false;
  return true;
}

inline bool in(const std::vector<Elem>& v, Elem x) { return std::find(v.begin(), v.end(), x) != v.end(); }

inline bool pp(const Quantale& A) {
  const auto B = boolean_center(A);
  for (Elem c : elems(A))
    if (!in(B, perp(A, c))) return false;
  return true;
}

inline bool purified(const Quantale& A) {
  const auto B = boolean_center(A);
  const auto M = minimal_primes(A);
  for (Elem p : M)
    for (Elem q : M) {
      if (p == q) continue;
      bool found = false;
      for (Elem e : B) found = found || (A.leq(e, p) && A.leq(perp(A, e), q));
      if (!found) return false;
    }
  return true;
}

inline bool hyperarchimedean(const Quantale& A) {
  const auto B = boolean_center(A);
  for (Elem c : elems(A)) {
    Elem pw = c;
    bool hit = false;
    for (std::size_t k = 0; k <= A.size() && !hit; ++k) {
      hit = in(B, pw);
      pw = A.mul(pw, c);
    }
    if (!hit) return false;
  }
  return true;
}

// Number of classes of the relation rho(a) = rho(b), i.e. |L(A)|.
inline std::size_t reticulation_size(const Quantale& A) {
  std::set<Elem> classes;
  for (Elem a : elems(A)) classes.insert(radical(A, a));
  return classes.size();
}

inline ElemSet to_set(const std::vector<Elem>& v) {
  ElemSet s;
  for (Elem x : v) s.insert(x);
  return s;
}

}  // namespace oracle

#endif  // QLAB_TESTS_ORACLE_HPP_
