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

#include "qlab/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>

#include "qlab/error.hpp"

namespace qlab {

Quantale relabel(const Quantale& A, const std::vector<Elem>& perm) {
  const std::size_t n = A.size();
  if (perm.size() != n) throw Error(ErrorKind::InvalidArgument, "permutation size mismatch");
  std::vector<std::string> names(n);
  std::vector<ElemSet> up(n);
  MultTable mult(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i) {
    names[perm[i]] = A.name(i);
    for (Elem j : A.up(i)) up[perm[i]].insert(perm[j]);
    for (Elem j = 0; j < n; ++j) mult[perm[i]][perm[j]] = perm[A.mul(i, j)];
  }
  return Quantale::build(FiniteLattice::from_order(std::move(names), std::move(up)),
                         std::move(mult));
}

namespace {

using Colouring = std::vector<std::size_t>;

// Splits cells until stable. A cell's new colour is the rank of its
// signature, so the result depends only on the structure.
void refine(const Quantale& A, Colouring& col) {
  const std::size_t n = A.size();
  std::vector<std::size_t> used(col.begin(), col.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (std::size_t& c : col)
    c = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
  std::size_t cells = used.size();
  while (true) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Elem x = 0; x < n; ++x) {
      std::vector<std::size_t> row;
      row.reserve(n);
      for (Elem y = 0; y < n; ++y)
        row.push_back(((col[y] * 4 + (A.leq(x, y) ? 2 : 0) + (A.leq(y, x) ? 1 : 0)) * n +
                       col[A.mul(x, y)]));
      std::sort(row.begin(), row.end());
      sig[x].push_back(col[x]);
      sig[x].insert(sig[x].end(), row.begin(), row.end());
    }
    std::vector<std::vector<std::size_t>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Elem x = 0; x < n; ++x)
      col[x] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[x]) - distinct.begin());
    if (distinct.size() == cells) return;
    cells = distinct.size();
  }
}

std::string serialize(const Quantale& A, const Colouring& pos) {
  const std::size_t n = A.size();
  std::vector<Elem> at(n);
  for (Elem x = 0; x < n; ++x) at[pos[x]] = x;
  std::string s = std::to_string(n) + ";";
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) s += A.leq(at[i], at[j]) ? '1' : '0';
  s += ';';
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      if (i || j) s += ',';
      s += std::to_string(pos[A.mul(at[i], at[j])]);
    }
  return s;
}

struct Best {
  std::optional<std::string> form;
  Colouring labelling;
};

void search(const Quantale& A, Colouring col, Best& best) {
  refine(A, col);
  const std::size_t n = A.size();
  std::vector<std::size_t> count(n, 0);
  for (std::size_t c : col) ++count[c];
  // First smallest non-singleton cell.
  std::size_t target = n, size = n + 1;
  for (std::size_t c = 0; c < n; ++c)
    if (count[c] > 1 && count[c] < size) {
      size = count[c];
      target = c;
    }
  if (target == n) {
    std::string s = serialize(A, col);
    if (!best.form || s < *best.form) {
      best.form = std::move(s);
      best.labelling = col;
    }
    return;
  }
  for (Elem v = 0; v < n; ++v) {
    if (col[v] != target) continue;
    Colouring next(n);
    for (Elem x = 0; x < n; ++x) next[x] = 2 * col[x] + (x == v ? 0 : 1);
    search(A, std::move(next), best);
  }
}

Best run(const Quantale& A) {
  Best best;
  search(A, Colouring(A.size(), 0), best);
  return best;
}

}  // namespace

std::string canonical_form(const Quantale& A) { return *run(A).form; }

std::vector<Elem> canonical_labelling(const Quantale& A) {
  Colouring c = run(A).labelling;
  return std::vector<Elem>(c.begin(), c.end());
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string canonical_id(const Quantale& A) { return fnv1a_hex(canonical_form(A)); }

}  // namespace qlab
