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

#include "qlab/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qlab/error.hpp"

namespace qlab {

Quantale gen_zn(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  std::vector<unsigned> divs;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  if (divs.size() > kMaxElements) throw Error(ErrorKind::TooLarge, "too many divisors");
  std::vector<std::string> names;
  for (unsigned d : divs)
    names.push_back(d == n && n > 1 ? "(0)" : "(" + std::to_string(d) + ")");
  const std::size_t k = divs.size();
  std::vector<ElemSet> up(k);
  std::map<unsigned, Elem> index;
  for (Elem i = 0; i < k; ++i) index[divs[i]] = i;
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      if (divs[i] % divs[j] == 0) up[i].insert(j);
  MultTable mult(k, std::vector<Elem>(k));
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) {
      unsigned long long prod = 1ULL * divs[i] * divs[j];
      mult[i][j] = index.at(static_cast<unsigned>(std::gcd(prod, 1ULL * n)));
    }
  return Quantale::build(FiniteLattice::from_order(std::move(names), std::move(up)),
                         std::move(mult));
}

namespace {

std::vector<ElemSet> strict_up(const Poset& P) {
  // Reflexive-transitive closure as up-sets of points.
  std::vector<ElemSet> up(P.n);
  for (std::size_t i = 0; i < P.n; ++i) up[i].insert(i);
  for (auto [i, j] : P.less) {
    if (i >= P.n || j >= P.n) throw Error(ErrorKind::InvalidArgument, "poset pair out of range");
    up[i].insert(j);
  }
  for (std::size_t k = 0; k < P.n; ++k)
    for (std::size_t i = 0; i < P.n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < P.n; ++i)
    for (std::size_t j : up[i])
      if (j != i && up[j].contains(i)) throw Error(ErrorKind::InvalidArgument, "not a poset");
  return up;
}

}  // namespace

FiniteLattice downset_lattice(const Poset& P) {
  if (P.n > 20) throw Error(ErrorKind::TooLarge, "poset too large");
  const std::vector<ElemSet> up = strict_up(P);
  std::vector<std::uint64_t> downs;
  for (std::uint64_t m = 0; m < (1ULL << P.n); ++m) {
    bool closed = true;
    for (std::size_t i = 0; i < P.n && closed; ++i)
      if ((m >> i) & 1U)
        for (std::size_t j = 0; j < P.n; ++j)
          if (up[j].contains(i) && !((m >> j) & 1U)) closed = false;
    if (closed) downs.push_back(m);
    if (downs.size() > kMaxElements) throw Error(ErrorKind::TooLarge, "too many down-sets");
  }
  std::vector<std::string> names;
  for (std::uint64_t m : downs) {
    std::string s;
    for (std::size_t i = 0; i < P.n; ++i)
      if ((m >> i) & 1U) s += static_cast<char>('a' + i);
    names.push_back(s.empty() ? "0" : s);
  }
  std::vector<ElemSet> order(downs.size());
  for (Elem i = 0; i < downs.size(); ++i)
    for (Elem j = 0; j < downs.size(); ++j)
      if ((downs[i] & ~downs[j]) == 0) order[i].insert(j);
  return FiniteLattice::from_order(std::move(names), std::move(order));
}

Quantale gen_downset_frame(const Poset& P) { return frame_of(downset_lattice(P)); }

FiniteLattice chain_lattice(std::size_t k) {
  if (k == 0 || k > kMaxElements) throw Error(ErrorKind::InvalidArgument, "bad chain length");
  std::vector<std::string> names;
  std::vector<ElemSet> up(k);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(i == 0 ? "0" : i + 1 == k ? "1" : "c" + std::to_string(i));
    for (std::size_t j = i; j < k; ++j) up[i].insert(j);
  }
  return FiniteLattice::from_order(std::move(names), std::move(up));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"TWO", "CHAIN3", "BOOL4", "WEDGE5", "Z12"};
  return names;
}

Quantale fixture(const std::string& name) {
  if (name == "TWO") return frame_of(chain_lattice(2));
  if (name == "CHAIN3")
    return frame_of(FiniteLattice::build({"0", "m", "1"}, {{0, 1}, {1, 2}}));
  if (name == "BOOL4")
    return frame_of(FiniteLattice::build({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  if (name == "WEDGE5")
    return frame_of(FiniteLattice::build({"0", "a", "b", "c", "1"},
                                         {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}));
  if (name == "Z12") return gen_zn(12);
  throw Error(ErrorKind::InvalidArgument, "unknown fixture " + name);
}

std::vector<Poset> posets_up_to_iso(std::size_t n) {
  if (n > 6) throw Error(ErrorKind::TooLarge, "poset enumeration limited to 6 points");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::size_t> perm(n);
  std::set<std::vector<bool>> seen;
  std::vector<Poset> out;
  for (std::uint64_t m = 0; m < (1ULL << pairs.size()); ++m) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if ((m >> t) & 1U) rel[pairs[t].first][pairs[t].second] = true;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) {
            transitive = false;
            break;
          }
    if (!transitive) continue;
    // Canonical key: lexicographically least relation matrix over all relabellings.
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> key(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) key[perm[i] * n + perm[j]] = rel[i][j];
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(best).second) continue;
    Poset P{n, {}};
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if ((m >> t) & 1U) P.less.push_back(pairs[t]);
    out.push_back(std::move(P));
  }
  return out;
}

namespace {

// Backtracking over the products of pairs of join-irreducibles. Every table is
// determined by those products, and a valid table is produced exactly once:
// by the assignment equal to its own restriction.
class TableSearch {
 public:
  explicit TableSearch(const FiniteLattice& L) : L_(L) {
    for (Elem j : L.join_irreducibles()) ji_.push_back(j);
    const std::size_t n = L.size();
    val_.assign(n * n, kUnset);
    for (std::size_t a = 0; a < ji_.size(); ++a)
      for (std::size_t b = a; b < ji_.size(); ++b) {
        Elem j = ji_[a], k = ji_[b];
        Slot s{j, k, {}};
        if (j == L.top()) {
          s.candidates.push_back(k);
        } else if (k == L.top()) {
          s.candidates.push_back(j);
        } else {
          for (Elem x : L.down(L.meet(j, k))) s.candidates.push_back(x);
        }
        slots_.push_back(std::move(s));
      }
  }

  // order(slot) permutes the candidates of a slot before it is tried. leaf
  // receives each valid quantale and returns false to stop; budget bounds
  // the number of complete assignments examined.
  void run(const std::function<void(std::vector<Elem>&)>& order,
           const std::function<bool(Quantale)>& leaf, std::size_t budget) {
    order_ = &order;
    leaf_ = &leaf;
    budget_ = budget;
    stopped_ = false;
    dfs(0);
  }

  bool exhausted() const { return budget_ == 0; }

 private:
  static constexpr Elem kUnset = ~Elem{0};
  struct Slot {
    Elem j, k;
    std::vector<Elem> candidates;
  };

  Elem& at(Elem a, Elem b) { return val_[a * L_.size() + b]; }

  bool monotone_with(Elem j, Elem k, Elem x) {
    // Compare with every assigned product j'k' where j' <= j, k' <= k or the
    // reverse, in both argument orders.
    for (Elem a : ji_)
      for (Elem b : ji_) {
        Elem y = at(a, b);
        if (y == kUnset) continue;
        if (L_.leq(a, j) && L_.leq(b, k) && !L_.leq(y, x)) return false;
        if (L_.leq(j, a) && L_.leq(k, b) && !L_.leq(x, y)) return false;
      }
    return true;
  }

  void dfs(std::size_t t) {
    if (stopped_ || budget_ == 0) return;
    if (t == slots_.size()) {
      --budget_;
      emit();
      return;
    }
    Slot& s = slots_[t];
    std::vector<Elem> cands = s.candidates;
    (*order_)(cands);
    for (Elem x : cands) {
      if (!monotone_with(s.j, s.k, x)) continue;
      at(s.j, s.k) = x;
      at(s.k, s.j) = x;
      dfs(t + 1);
      at(s.j, s.k) = kUnset;
      at(s.k, s.j) = kUnset;
      if (stopped_ || budget_ == 0) return;
    }
  }

  void emit() {
    const std::size_t n = L_.size();
    MultTable m(n, std::vector<Elem>(n, L_.bot()));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b) {
        Elem v = L_.bot();
        for (Elem j : ji_)
          if (L_.leq(j, a))
            for (Elem k : ji_)
              if (L_.leq(k, b)) v = L_.join(v, at(j, k));
        m[a][b] = m[b][a] = v;
      }
    for (Elem j : ji_)
      for (Elem k : ji_)
        if (m[j][k] != at(j, k)) return;
    if (Quantale::validate(L_, m)) return;
    if (!(*leaf_)(Quantale::build(L_, std::move(m)))) stopped_ = true;
  }

  const FiniteLattice& L_;
  std::vector<Elem> ji_;
  std::vector<Slot> slots_;
  std::vector<Elem> val_;
  const std::function<void(std::vector<Elem>&)>* order_ = nullptr;
  const std::function<bool(Quantale)>* leaf_ = nullptr;
  std::size_t budget_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::size_t enumerate_quantales(const FiniteLattice& L, std::size_t cap,
                                const std::function<bool(Quantale)>& visit) {
  if (cap == 0) return 0;
  std::size_t produced = 0;
  TableSearch search(L);
  search.run([](std::vector<Elem>&) {},
             [&](Quantale q) {
               ++produced;
               return visit(std::move(q)) && produced < cap;
             },
             static_cast<std::size_t>(-1));
  return produced;
}

std::vector<Quantale> enumerate_quantales(const FiniteLattice& L, std::size_t cap) {
  std::vector<Quantale> out;
  enumerate_quantales(L, cap, [&](Quantale q) {
    out.push_back(std::move(q));
    return true;
  });
  return out;
}

std::optional<Quantale> random_quantale(const FiniteLattice& L, std::uint64_t seed,
                                        std::size_t budget) {
  std::mt19937_64 rng(seed);
  // Fisher-Yates with plain modulo draws, so the order is the same on every
  // standard library.
  auto shuffle = [&](std::vector<Elem>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  };
  std::optional<Quantale> found;
  TableSearch search(L);
  search.run(shuffle,
             [&](Quantale q) {
               found.emplace(std::move(q));
               return false;
             },
             budget);
  if (!found && search.exhausted())
    throw Error(ErrorKind::BudgetExhausted,
                "no quantale found within " + std::to_string(budget) + " candidate tables");
  return found;
}

}  // namespace qlab
