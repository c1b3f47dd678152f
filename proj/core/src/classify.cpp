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

#include "qlab/classify.hpp"

#include <optional>
#include <utility>

#include "qlab/error.hpp"
#include "qlab/purity.hpp"

namespace qlab {

namespace {

using Witness = std::optional<std::vector<std::string>>;

Witness normal_witness(const Quantale& A) {
  const std::size_t n = A.size();
  std::vector<ElemSet> co(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem e = 0; e < n; ++e)
      if (A.join(a, e) == A.top()) co[a].insert(e);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      if (A.join(a, b) != A.top()) continue;
      bool found = false;
      for (Elem e : co[a]) {
        for (Elem f : co[b])
          if (A.mul(e, f) == A.bot()) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return std::vector<std::string>{A.name(a), A.name(b)};
    }
  return std::nullopt;
}

Witness mp_witness(const Quantale& A) {
  for (Elem p : A.spec())
    if ((A.min() & A.down(p)).size() != 1) return std::vector<std::string>{A.name(p)};
  return std::nullopt;
}

Witness pf_witness(const Quantale& A) {
  for (Elem c = 0; c < A.size(); ++c)
    if (!is_pure(A, A.neg(c))) return std::vector<std::string>{A.name(c)};
  return std::nullopt;
}

Witness purified_witness(const Quantale& A) {
  const ElemSet b = A.boolean_center();
  for (Elem p : A.min())
    for (Elem q : A.min()) {
      if (p == q) continue;
      bool found = false;
      for (Elem e : b)
        if (A.leq(e, p) && A.leq(A.neg(e), q)) found = true;
      if (!found) return std::vector<std::string>{A.name(p), A.name(q)};
    }
  return std::nullopt;
}

Witness pp_witness(const Quantale& A) {
  const ElemSet b = A.boolean_center();
  for (Elem c = 0; c < A.size(); ++c)
    if (!b.contains(A.neg(c))) return std::vector<std::string>{A.name(c)};
  return std::nullopt;
}

}  // namespace

bool is_normal_quantale(const Quantale& A) { return !normal_witness(A); }
bool is_mp_quantale(const Quantale& A) { return !mp_witness(A); }
bool is_pf_quantale(const Quantale& A) { return !pf_witness(A); }
bool is_purified(const Quantale& A) { return !purified_witness(A); }
bool is_pp_quantale(const Quantale& A) { return !pp_witness(A); }

std::vector<std::string> implication_violations(const ClassFlags& f) {
  std::vector<std::string> v;
  if (f.pp && !f.purified) v.push_back("pp=>purified");
  if (f.pp && !f.semiprime) v.push_back("pp=>semiprime");
  if (f.pp && !f.pf) v.push_back("pp=>pf");
  if (f.pf != (f.semiprime && f.mp)) v.push_back("pf<=>semiprime&mp");
  if (f.purified && !f.mp) v.push_back("purified=>mp");
  if (f.hyperarchimedean && !f.purified) v.push_back("hyperarchimedean=>purified");
  return v;
}

ClassificationReport classify(const Quantale& A, std::string id) {
  ClassificationReport r;
  r.id = std::move(id);
  auto record = [&](const char* name, Witness w) {
    if (w) r.witnesses[name] = std::move(*w);
    return !w;
  };
  r.flags.semiprime = is_semiprime(A);
  if (!r.flags.semiprime) r.witnesses["semiprime"] = {A.name(A.radical(A.bot()))};
  r.flags.normal = record("normal", normal_witness(A));
  r.flags.mp = record("mp", mp_witness(A));
  r.flags.pf = record("pf", pf_witness(A));
  r.flags.purified = record("purified", purified_witness(A));
  r.flags.pp = record("pp", pp_witness(A));
  r.flags.hyperarchimedean = is_hyperarchimedean(A);
  auto broken = implication_violations(r.flags);
  if (!broken.empty())
    throw Error(ErrorKind::ImplicationViolation, "class implication broken: " + broken.front(),
                broken);
  return r;
}

}  // namespace qlab
