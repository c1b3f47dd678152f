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

#include "qlab/quantale.hpp"

#include <utility>

namespace qlab {

std::optional<Error> Quantale::validate(const FiniteLattice& L, const MultTable& m) {
  const std::size_t n = L.size();
  if (m.size() != n)
    return Error(ErrorKind::InvalidArgument, "multiplication table has " +
                                                 std::to_string(m.size()) + " rows");
  for (Elem a = 0; a < n; ++a) {
    if (m[a].size() != n)
      return Error(ErrorKind::InvalidArgument, "row " + std::to_string(a) + " has " +
                                                   std::to_string(m[a].size()) +
                                                   " entries");
    for (Elem v : m[a])
      if (v >= n) return Error(ErrorKind::InvalidArgument, "entry out of range");
  }
  auto nm = [&](Elem e) { return L.name(e); };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (m[a][b] != m[b][a])
        return Error(ErrorKind::NotCommutative, "ab != ba", {nm(a), nm(b)});
  for (Elem a = 0; a < n; ++a)
    if (m[L.top()][a] != a)
      return Error(ErrorKind::NotIntegral, "1a != a", {nm(a)});
  for (Elem a = 0; a < n; ++a)
    if (m[a][L.bot()] != L.bot())
      return Error(ErrorKind::ZeroNotAbsorbing, "a0 != 0", {nm(a)});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c)
        if (m[a][L.join(b, c)] != L.join(m[a][b], m[a][c]))
          return Error(ErrorKind::NotDistributiveOverJoin, "a(b v c) != ab v ac",
                       {nm(a), nm(b), nm(c)});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (m[m[a][b]][c] != m[a][m[b][c]])
          return Error(ErrorKind::NotAssociative, "(ab)c != a(bc)",
                       {nm(a), nm(b), nm(c)});
  return std::nullopt;
}

Quantale Quantale::build(FiniteLattice lat, MultTable mult) {
  if (auto err = validate(lat, mult)) throw *err;
  Quantale q(std::move(lat));
  const std::size_t n = q.size();
  q.mult_.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) q.mult_[a * n + b] = mult[a][b];

  q.resid_.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      ElemSet xs;
      for (Elem x = 0; x < n; ++x)
        if (q.leq(q.mul(a, x), b)) xs.insert(x);
      q.resid_[a * n + b] = q.join_all(xs);
    }

  for (Elem p = 0; p < n; ++p)
    if (is_m_prime(q, p)) q.spec_.spec.insert(p);
  ElemSet proper = q.all();
  proper.erase(q.top());
  q.spec_.max = q.lat_.maximal(proper);
  q.spec_.min = q.lat_.minimal(q.spec_.spec);
  q.spec_.radical_of.resize(n);
  for (Elem a = 0; a < n; ++a)
    q.spec_.radical_of[a] = q.meet_all(q.spec_.spec & q.up(a));

  for (Elem e = 0; e < n; ++e)
    if (q.join(e, q.neg(e)) == q.top()) q.center_.insert(e);

  q.frame_ = true;
  for (Elem a = 0; a < n && q.frame_; ++a)
    for (Elem b = 0; b < n; ++b)
      if (q.mul(a, b) != q.meet(a, b)) {
        q.frame_ = false;
        break;
      }
  return q;
}

MultTable Quantale::mult_table() const {
  const std::size_t n = size();
  MultTable t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

ElemSet Quantale::radical_elements() const {
  ElemSet r;
  for (Elem a = 0; a < size(); ++a)
    if (radical(a) == a) r.insert(a);
  return r;
}

bool is_m_prime(const Quantale& A, Elem p) {
  if (p == A.top()) return false;
  for (Elem a = 0; a < A.size(); ++a)
    for (Elem b = a; b < A.size(); ++b)
      if (A.leq(A.mul(a, b), p) && !A.leq(a, p) && !A.leq(b, p)) return false;
  return true;
}

Elem power(const Quantale& A, Elem a, std::size_t k) {
  Elem acc = A.top();
  for (std::size_t i = 0; i < k; ++i) acc = A.mul(acc, a);
  return acc;
}

Elem stable_power(const Quantale& A, Elem a) {
  Elem cur = a;
  for (;;) {
    Elem next = A.mul(cur, a);
    if (next == cur) return cur;
    cur = next;
  }
}

Elem radical_via_powers(const Quantale& A, Elem a) {
  ElemSet cs;
  for (Elem c = 0; c < A.size(); ++c) {
    Elem p = c;
    for (std::size_t k = 1; k <= A.size(); ++k) {
      if (A.leq(p, a)) {
        cs.insert(c);
        break;
      }
      p = A.mul(p, c);
    }
  }
  return A.join_all(cs);
}

bool is_semiprime(const Quantale& A) { return A.radical(A.bot()) == A.bot(); }

bool is_hyperarchimedean(const Quantale& A) {
  const ElemSet b = A.boolean_center();
  for (Elem c = 0; c < A.size(); ++c) {
    bool hit = false;
    Elem p = c;
    for (std::size_t k = 1; k <= A.size() && !hit; ++k) {
      hit = b.contains(p);
      p = A.mul(p, c);
    }
    if (!hit) return false;
  }
  return true;
}

ElemSet lambda_set(const Quantale& A, Elem p) { return A.spec() & A.down(p); }
ElemSet v_set(const Quantale& A, Elem a) { return A.spec() & A.up(a); }
ElemSet d_set(const Quantale& A, Elem a) { return A.spec() - A.up(a); }

Quantale frame_of(const FiniteLattice& L) {
  const std::size_t n = L.size();
  MultTable m(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) m[a][b] = L.meet(a, b);
  return Quantale::build(L, std::move(m));
}

Quantale product_quantale(const Quantale& A, const Quantale& B) {
  const std::size_t na = A.size(), nb = B.size();
  if (na * nb > kMaxElements)
    throw Error(ErrorKind::TooLarge, "product exceeds the carrier cap");
  const std::size_t n = na * nb;
  std::vector<std::string> names;
  std::vector<ElemSet> up(n);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) names.push_back("<" + A.name(x) + "," + B.name(y) + ">");
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (A.leq(i / nb, j / nb) && B.leq(i % nb, j % nb)) up[i].insert(j);
  MultTable m(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      m[i][j] = A.mul(i / nb, j / nb) * nb + B.mul(i % nb, j % nb);
  return Quantale::build(FiniteLattice::from_order(std::move(names), std::move(up)),
                         std::move(m));
}

namespace {

// Induced suborder on s, indices in increasing element order.
std::pair<std::vector<Elem>, FiniteLattice> induced(const Quantale& A, ElemSet s) {
  std::vector<Elem> embed(s.begin(), s.end());
  std::vector<std::string> names;
  std::vector<ElemSet> up(embed.size());
  for (Elem i = 0; i < embed.size(); ++i) {
    names.push_back(A.name(embed[i]));
    for (Elem j = 0; j < embed.size(); ++j)
      if (A.leq(embed[i], embed[j])) up[i].insert(j);
  }
  return {embed, FiniteLattice::from_order(std::move(names), std::move(up))};
}

std::vector<std::optional<Elem>> invert(const std::vector<Elem>& embed, std::size_t n) {
  std::vector<std::optional<Elem>> idx(n);
  for (Elem i = 0; i < embed.size(); ++i) idx[embed[i]] = i;
  return idx;
}

}  // namespace

SubQuantale radical_frame(const Quantale& A) {
  auto [embed, lat] = induced(A, A.radical_elements());
  auto index = invert(embed, A.size());
  for (Elem i = 0; i < embed.size(); ++i)
    for (Elem j = 0; j < embed.size(); ++j) {
      Elem expect = A.radical(A.join(embed[i], embed[j]));
      if (embed[lat.join(i, j)] != expect || embed[lat.meet(i, j)] != A.meet(embed[i], embed[j]))
        throw Error(ErrorKind::AxiomFailure, "radical elements do not form the expected lattice",
                    {A.name(embed[i]), A.name(embed[j])});
    }
  Quantale q = frame_of(lat);
  return SubQuantale{std::move(q), std::move(embed), std::move(index)};
}

Interval interval_quantale(const Quantale& A, Elem a) {
  auto [embed, lat] = induced(A, A.up(a));
  auto index = invert(embed, A.size());
  const std::size_t k = embed.size();
  MultTable m(k, std::vector<Elem>(k));
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) m[i][j] = *index[A.join(A.mul(embed[i], embed[j]), a)];
  std::vector<Elem> u(A.size());
  for (Elem x = 0; x < A.size(); ++x) u[x] = *index[A.join(x, a)];
  return Interval{Quantale::build(std::move(lat), std::move(m)), std::move(embed), std::move(u)};
}

bool has_lifting_property(const Quantale& A, Elem a) {
  Interval iv = interval_quantale(A, a);
  ElemSet image;
  for (Elem e : A.boolean_center()) image.insert(iv.u[e]);
  return iv.q.boolean_center().subset_of(image);
}

std::vector<std::string> labels(const Quantale& A, ElemSet s) {
  return labels(A.lattice(), s);
}

}  // namespace qlab
