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

// mp-quantales, PF-quantales and the frame Vir(A) over a PF-quantale.

#include <set>

#include "qlab/purity.hpp"
#include "verify_internal.hpp"

namespace qlab::detail {

namespace {

TheoremReport l6_1(const Analysis& X) {
  Probe P("L6.1");
  P.condition("mp", X.flags().mp);
  P.condition("L(A) conormal", X.lattice_flags().conormal);
  P.require_all_equal();
  return P.done();
}

TheoremReport t6_2(const Analysis& X) {
  Probe P("T6.2");
  const Quantale& A = X.q();
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  P.note("(2) is degenerate at finite scale");
  const ElemSet mp = min_points(X);
  const FiniteSpace MZ = subspace(X.zariski(), mp);
  const FiniteSpace MF = subspace(X.flat(), mp);
  P.condition("(1) Min_Z = Min_F", same_topology(MZ, MF, X.guard()));
  P.condition("(2) Min_Z compact", is_compact(MZ));
  P.condition("(3) Min_Z Boolean", separation_flags(MZ, X.guard()).boolean_space);
  bool c4 = true;
  for (Elem c = 0; c < A.size() && c4; ++c) {
    bool found = false;
    for (Elem d = 0; d < A.size() && !found; ++d)
      found = A.mul(c, d) == A.bot() && A.neg(A.join(c, d)) == A.bot();
    c4 = found;
  }
  P.condition("(4) cd = 0 and (c v d)-perp = 0", c4);
  P.require_all_equal();
  return P.done();
}

TheoremReport t6_3(const Analysis& X) {
  Probe P("T6.3");
  const Quantale& A = X.q();
  const FiniteSpace& F = X.flat();
  guard_subsets(X, F.size());
  P.condition("(1) mp", X.flags().mp);
  bool c2 = true;
  for (Elem p : A.min())
    for (Elem q : A.min())
      if (p != q && A.join(p, q) != A.top()) c2 = false;
  P.condition("(2) p v q = 1 on Min", c2);
  P.condition("(3) R(A) mp", is_mp_quantale(X.radical().q));
  P.condition("(4) [rho(0)) mp", is_mp_quantale(X.above_radical().q));
  P.condition("(5) flat retraction onto Min", retraction_exists(F, min_points(X), X.guard()).has_value());
  P.condition("(6) Spec_F normal", is_normal_space(F, X.guard()));
  bool c7 = true;
  for (Elem p : A.min()) c7 = c7 && F.is_closed(X.points(v_set(A, p)));
  P.condition("(7) V(p) flat-closed", c7);
  P.require_all_equal();
  return P.done();
}

TheoremReport l6_4(const Analysis& X) {
  Probe P("L6.4");
  if (!X.flags().pf) return P.not_met("not a PF-quantale");
  if (!X.flags().semiprime) P.fail("(1) PF-quantale not semiprime");
  if (!X.lattice_flags().conormal) P.fail("(2) L(A) not conormal");
  return P.done();
}

TheoremReport t6_5(const Analysis& X) {
  Probe P("T6.5");
  P.condition("PF", X.flags().pf);
  P.condition("semiprime mp", X.flags().semiprime && X.flags().mp);
  P.require_all_equal();
  return P.done();
}

TheoremReport t6_6(const Analysis& X) {
  Probe P("T6.6");
  const bool min_pure = X.q().min().subset_of(X.purity().pure);
  P.condition("(1) Min pure", min_pure);
  P.condition("(2) mp", X.flags().mp);
  if (min_pure && !X.flags().mp) P.fail("(1) holds but (2) fails");
  if (X.flags().semiprime && X.flags().mp && !min_pure) P.fail("semiprime: (2) holds but (1) fails");
  return P.done();
}

TheoremReport c6_7(const Analysis& X) {
  Probe P("C6.7");
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  P.condition("PF", X.flags().pf);
  P.condition("Min pure", X.q().min().subset_of(X.purity().pure));
  P.require_all_equal();
  return P.done();
}

TheoremReport t6_8(const Analysis& X) {
  Probe P("T6.8");
  const Quantale& A = X.q();
  const std::size_t n = A.size();
  P.condition("(1) PF", X.flags().pf);
  P.condition("(2) semiprime mp", X.flags().semiprime && X.flags().mp);
  bool c3 = true, c4 = true, c5 = true;
  for (Elem c = 0; c < n; ++c) {
    c5 = c5 && X.purity().pure.contains(A.neg(c));
    for (Elem d = 0; d < n; ++d) {
      const Elem j = A.join(A.neg(c), A.neg(d));
      if (A.mul(c, d) == A.bot() && j != A.top()) c3 = false;
      if (A.neg(A.mul(c, d)) != j) c4 = false;
    }
  }
  P.condition("(3) cd = 0 implies c-perp v d-perp = 1", c3);
  P.condition("(4) (cd)-perp = c-perp v d-perp", c4);
  P.condition("(5) c-perp pure", c5);
  P.require_all_equal();
  return P.done();
}

TheoremReport p6_9(const Analysis& X) {
  Probe P("P6.9");
  const Quantale& A = X.q();
  if (!X.flags().pf) return P.not_met("not a PF-quantale");
  for (Elem p : A.spec())
    if (!A.min().contains(X.purity().o_of[p])) P.fail("O(p) is not minimal", {A.name(p)});
  return P.done();
}

TheoremReport t6_10(const Analysis& X) {
  Probe P("T6.10");
  const Quantale& A = X.q();
  if (!X.flags().pf) return P.not_met("not a PF-quantale");
  const ElemSet pure = X.purity().pure;
  const FiniteSpace& F = X.flat();
  ElemSet flat_values;
  for (ElemSet E : closed_sets(F, X.guard())) flat_values.insert(A.meet_all(A.min() & F.id_set(E)));
  if (flat_values != pure)
    P.fail("pure elements differ from meets of Min n E, E flat-closed",
           labels(A, (flat_values - pure) | (pure - flat_values)));
  ElemSet v_values;
  for (Elem x = 0; x < A.size(); ++x) v_values.insert(A.meet_all(A.min() & A.up(x)));
  if (v_values != pure)
    P.fail("pure elements differ from meets of Min n V(x)", labels(A, (v_values - pure) | (pure - v_values)));
  for (Elem a : pure)
    if (A.meet_all(A.min() & A.up(a)) != a) P.fail("pure a != /\\(Min n V(a))", {A.name(a)});
  return P.done();
}

TheoremReport l6_11(const Analysis& X) {
  Probe P("L6.11");
  const SubQuantale& V = X.vir();
  for (Elem m : V.q.max()) {
    bool found = false;
    for (Elem n : X.q().max()) found = found || V.index[X.purity().vir_of[n]] == m;
    if (!found) P.fail("maximal element of Vir(A) is not Vir(n) for maximal n", {V.q.name(m)});
  }
  return P.done();
}

TheoremReport t6_12(const Analysis& X) {
  Probe P("T6.12");
  if (!X.flags().pf) return P.not_met("not a PF-quantale");
  const ElemSet vmax = embed(X.vir(), X.vir().q.max());
  if (vmax != X.q().min())
    P.fail("Min(A) != Max(Vir(A))", labels(X.q(), (vmax - X.q().min()) | (X.q().min() - vmax)));
  return P.done();
}

TheoremReport l6_14(const Analysis& X) {
  Probe P("L6.14");
  const Quantale& A = X.q();
  if (!X.flags().pf) return P.not_met("not a PF-quantale");
  P.note("K(c) is read as /\\{O(n) : n in Max(A), c <= n}");
  const PurityTables& T = X.purity();
  std::vector<std::string> r_misses;
  for (Elem a : T.pure)
    for (Elem m : A.max() & A.up(a)) {
      bool hyp_k = true, hyp_r = true;
      for (Elem c : A.down(T.o_of[m])) {
        hyp_k = hyp_k && A.leq(kappa(A, c), a);
        hyp_r = hyp_r && A.leq(jacobson_r(A, c), a);
      }
      if (hyp_k && a != T.o_of[m]) P.fail("(*) holds but a != O(m)", {A.name(a), A.name(m)});
      if (hyp_r && a != T.o_of[m]) r_misses.push_back(A.name(a) + "/" + A.name(m));
    }
  if (!r_misses.empty()) P.informational("with K(c) = /\\(Max n V(c)) the conclusion fails", r_misses);
  return P.done();
}

TheoremReport t6_15(const Analysis& X) {
  Probe P("T6.15");
  if (!X.flags().pf) return P.not_met("not a PF-quantale");
  const Quantale& V = X.vir().q;
  if (V.spec() != V.max()) P.fail("Spec(Vir(A)) != Max(Vir(A))", labels(V, V.spec() - V.max()));
  return P.done();
}

TheoremReport r6_16(const Analysis& X) {
  Probe P("R6.16");
  if (!X.flags().pf) return P.not_met("not a PF-quantale");
  const Quantale& V = X.vir().q;
  if (!is_hyperarchimedean(V)) P.fail("Vir(A) is not hyperarchimedean");
  if (!same_topology(zariski_space(V), flat_space(V), X.guard()))
    P.fail("Zariski and flat topologies of Vir(A) differ");
  // Min_F(A) against Spec_Z(Vir(A)), both as families of elements of A.
  const FiniteSpace MF = subspace(X.flat(), min_points(X));
  const FiniteSpace& VZ = X.vir_zariski();
  if (embed(X.vir(), V.spec()) != X.q().min()) {
    P.fail("Min(A) and Spec(Vir(A)) have different points");
    return P.done();
  }
  std::set<ElemSet> a, b;
  for (ElemSet E : closed_sets(MF, X.guard())) a.insert(MF.id_set(E));
  for (ElemSet E : closed_sets(VZ, X.guard())) b.insert(embed(X.vir(), VZ.id_set(E)));
  if (a != b) P.fail("Min_F(A) and Spec_Z(Vir(A)) have different closed sets");
  return P.done();
}

}  // namespace

void add_s6(std::vector<TheoremEntry>& out) {
  out.push_back({"L6.1", "s6", "mp iff L(A) conormal", l6_1});
  out.push_back({"T6.2", "s6", "semiprime: compactness of Min_Z", t6_2});
  out.push_back({"T6.3", "s6", "seven characterizations of mp", t6_3});
  out.push_back({"L6.4", "s6", "PF-quantales are semiprime with conormal L(A)", l6_4});
  out.push_back({"T6.5", "s6", "PF iff semiprime mp", t6_5});
  out.push_back({"T6.6", "s6", "minimal primes pure against mp", t6_6});
  out.push_back({"C6.7", "s6", "semiprime: PF iff minimal primes pure", c6_7});
  out.push_back({"T6.8", "s6", "five characterizations of PF", t6_8});
  out.push_back({"P6.9", "s6", "PF: O(p) is minimal", p6_9});
  out.push_back({"T6.10", "s6", "PF: pure elements through flat-closed sets", t6_10});
  out.push_back({"L6.11", "s6", "maximal elements of Vir(A) come from Max(A)", l6_11});
  out.push_back({"T6.12", "s6", "PF: Min(A) = Max(Vir(A))", t6_12});
  out.push_back({"P6.13", "s6", "PF: K(a) is pure", kappa_pure_pf});
  out.push_back({"L6.14", "s6", "PF: a criterion for a = O(m)", l6_14});
  out.push_back({"T6.15", "s6", "PF: Spec(Vir(A)) = Max(Vir(A))", t6_15});
  out.push_back({"R6.16", "s6", "PF: Vir(A) hyperarchimedean, Min_F(A) = Spec_Z(Vir(A))", r6_16});
}

}  // namespace qlab::detail
