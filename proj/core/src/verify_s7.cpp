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

// Purified quantales.

#include <set>

#include "qlab/purity.hpp"
#include "verify_internal.hpp"

namespace qlab::detail {

namespace {

TheoremReport l7_1(const Analysis& X) {
  Probe P("L7.1");
  if (!X.flags().purified) return P.not_met("not purified");
  if (!X.flags().mp) P.fail("purified but not mp");
  return P.done();
}

TheoremReport l7_2(const Analysis& X) {
  Probe P("L7.2");
  const Quantale& A = X.q();
  const Elem a = A.radical(A.bot());
  const Interval& I = X.above_radical();
  // Complemented elements of [a) straight from the definition.
  ElemSet lifted;
  for (Elem e : A.boolean_center()) lifted.insert(A.join(e, a));
  for (Elem x : A.up(a)) {
    bool complemented = false;
    for (Elem y : A.up(a))
      complemented = complemented || (A.join(x, y) == A.top() && A.join(A.mul(x, y), a) == a);
    if (complemented && !lifted.contains(x)) P.fail("complement in [rho(0)) does not lift", {A.name(x)});
  }
  if (!has_lifting_property(A, a)) P.fail("lifting property predicate rejects rho(0)");
  for (Elem e : A.boolean_center()) {
    const Elem x = I.u[e];
    if (I.embed[I.q.neg(x)] != A.join(A.neg(e), a)) P.fail("negation in [rho(0)) of e v rho(0) is not -e v rho(0)", {A.name(e)});
  }
  std::vector<std::string> literal;
  for (Elem i = 0; i < I.q.size(); ++i) {
    const Elem x = I.embed[i];
    if (I.embed[I.q.neg(i)] != A.join(A.neg(x), a)) literal.push_back(A.name(x));
  }
  if (!literal.empty()) P.informational("negation in [rho(0)) is not -x v rho(0) away from the lifted Boolean elements", literal);
  return P.done();
}

TheoremReport t7_3(const Analysis& X) {
  Probe P("T7.3");
  P.condition("A purified", X.flags().purified);
  P.condition("[rho(0)) purified", is_purified(X.above_radical().q));
  P.require_all_equal();
  return P.done();
}

TheoremReport l7_4(const Analysis& X) {
  Probe P("L7.4");
  const Quantale& A = X.q();
  std::set<ElemSet> clop, ve;
  for (ElemSet U : clopens(X.flat(), X.guard())) clop.insert(U);
  for (Elem e : A.boolean_center()) ve.insert(X.points(v_set(A, e)));
  if (clop != ve) P.fail("clopens of Spec_F(A) differ from the sets V(e)");
  return P.done();
}

TheoremReport t7_5(const Analysis& X) {
  Probe P("T7.5");
  const Quantale& A = X.q();
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  const ClassFlags& f = X.flags();
  const FiniteSpace MF = subspace(X.flat(), min_points(X));
  const SeparationFlags sep = separation_flags(MF, X.guard());
  P.condition("(1) purified", f.purified);
  P.condition("(2) mp, Min_F totally separated", f.mp && sep.totally_separated);
  P.condition("(3) mp, Min_F totally disconnected", f.mp && sep.totally_disconnected);
  P.condition("(4) mp, Min_F Boolean", f.mp && sep.boolean_space);
  std::vector<ElemSet> basis;
  for (Elem e : A.boolean_center()) {
    ElemSet u;
    for (std::size_t i = 0; i < MF.size(); ++i)
      if (A.leq(e, MF.id(i))) u.insert(i);
    basis.push_back(u);
  }
  bool c5 = true;
  for (ElemSet u : basis) c5 = c5 && MF.is_open(u);
  for (ElemSet O : open_sets(MF, X.guard())) {
    ElemSet cover;
    for (ElemSet u : basis)
      if (u.subset_of(O)) cover |= u;
    c5 = c5 && cover == O;
  }
  P.condition("(5) V(e) n Min basis of Min_F", c5);
  const PurityTables& T = X.purity();
  P.condition("(6) Min regular", A.min().subset_of(T.regular));
  P.condition("(7) Min = Sp", A.min() == T.sp);
  P.condition("(8) mp, pure regular", f.mp && T.pure.subset_of(T.regular));
  P.require_all_equal();
  return P.done();
}

TheoremReport c7_6(const Analysis& X) {
  Probe P("C7.6");
  if (!X.flags().hyperarchimedean) return P.not_met("not hyperarchimedean");
  if (!X.flags().purified) P.fail("hyperarchimedean but not purified");
  return P.done();
}

TheoremReport c7_7(const Analysis& X) {
  Probe P("C7.7");
  if (!X.flags().pf) return P.not_met("not a PF-quantale");
  P.note("compactness of Min_Z is degenerate at finite scale");
  const FiniteSpace MZ = subspace(X.zariski(), min_points(X));
  if (is_compact(MZ) && !X.flags().purified) P.fail("PF with compact Min_Z but not purified");
  return P.done();
}

}  // namespace

void add_s7(std::vector<TheoremEntry>& out) {
  out.push_back({"L7.1", "s7", "purified implies mp", l7_1});
  out.push_back({"L7.2", "s7", "rho(0) has the lifting property", l7_2});
  out.push_back({"T7.3", "s7", "A purified iff [rho(0)) purified", t7_3});
  out.push_back({"L7.4", "s7", "clopens of Spec_F are the V(e)", l7_4});
  out.push_back({"T7.5", "s7", "semiprime: eight characterizations of purified", t7_5});
  out.push_back({"C7.6", "s7", "hyperarchimedean implies purified", c7_6});
  out.push_back({"C7.7", "s7", "PF with compact Min_Z implies purified", c7_7});
}

}  // namespace qlab::detail
