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

// PP-quantales, Stone reticulations and the class implications.

#include "qlab/classify.hpp"
#include "qlab/purity.hpp"
#include "verify_internal.hpp"

namespace qlab::detail {

namespace {

// Points of Spec_Id,Z(L(A)) that are minimal prime ideals.
ElemSet lattice_min_points(const Analysis& X) {
  const FiniteSpace& Y = X.lattice_zariski();
  ElemSet out;
  for (const auto& r : X.lattice_primes())
    if (r.is_minimal_prime)
      if (auto i = Y.index_of_id(r.ideal.generator)) out.insert(*i);
  return out;
}

TheoremReport l8_1(const Analysis& X) {
  Probe P("L8.1");
  if (!X.flags().pp) return P.not_met("not a PP-quantale");
  if (!X.flags().semiprime) P.fail("PP-quantale not semiprime");
  return P.done();
}

TheoremReport l8_2(const Analysis& X) {
  Probe P("L8.2");
  const Quantale& A = X.q();
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  const ElemSet B = A.boolean_center();
  for (Elem e : B)
    if (A.radical(e) != e) P.fail("(1) rho(e) != e", {A.name(e)});
  for (Elem a = 0; a < A.size(); ++a)
    if (B.contains(A.radical(a)) && A.radical(a) != a) P.fail("(2) rho(a) complemented but a != rho(a)", {A.name(a)});
  return P.done();
}

TheoremReport t8_3(const Analysis& X) {
  Probe P("T8.3");
  const bool pp = X.flags().pp;
  const bool rpp = is_pp_quantale(X.radical().q);
  const bool stone = X.lattice_flags().stone;
  P.condition("(1) A PP", pp);
  P.condition("(2) R(A) PP", rpp);
  P.condition("(3) L(A) Stone", stone);
  if (pp && !stone) P.fail("(1) holds but (3) fails");
  if (rpp != stone) P.fail("(2) and (3) disagree");
  if (X.flags().semiprime && stone && !pp) P.fail("semiprime: (3) holds but (1) fails");
  if (pp != rpp) P.informational("(1) and (2) disagree without semiprimeness");
  return P.done();
}

TheoremReport l8_4(const Analysis& X) {
  Probe P("L8.4");
  P.note("compactness of Min_Id,Z is degenerate at finite scale");
  const FiniteSpace M = subspace(X.lattice_zariski(), lattice_min_points(X));
  P.condition("L(A) Stone", X.lattice_flags().stone);
  P.condition("L(A) conormal, Min_Id,Z compact", X.lattice_flags().conormal && is_compact(M));
  P.require_all_equal();
  return P.done();
}

TheoremReport t8_5(const Analysis& X) {
  Probe P("T8.5");
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  P.note("compactness conditions are degenerate at finite scale");
  const ClassFlags& f = X.flags();
  const FiniteSpace MZ = subspace(X.zariski(), min_points(X));
  const FiniteSpace MI = subspace(X.lattice_zariski(), lattice_min_points(X));
  const bool boolean = separation_flags(MZ, X.guard()).boolean_space;
  P.condition("(1) PP", f.pp);
  P.condition("(2) L(A) Stone", X.lattice_flags().stone);
  P.condition("(3) L(A) conormal, Min_Id,Z compact", X.lattice_flags().conormal && is_compact(MI));
  P.condition("(4) PF, Min_Z compact", f.pf && is_compact(MZ));
  P.condition("(5) PF, Min_Z Boolean", f.pf && boolean);
  P.condition("(6) mp, Min_Z Boolean", f.mp && boolean);
  P.condition("(7) Spec_F normal, Min_Z Boolean", is_normal_space(X.flat(), X.guard()) && boolean);
  P.require_all_equal();
  return P.done();
}

TheoremReport l8_6(const Analysis& X) {
  Probe P("L8.6");
  if (!X.lattice_flags().conormal) return P.not_met("L(A) not conormal");
  P.condition("L(A) Stone", X.lattice_flags().stone);
  P.condition("retraction onto Min_Id,Z",
              retraction_exists(X.lattice_zariski(), lattice_min_points(X), X.guard()).has_value());
  P.require_all_equal();
  return P.done();
}

TheoremReport t8_7(const Analysis& X) {
  Probe P("T8.7");
  const Quantale& A = X.q();
  if (!X.flags().pf) return P.not_met("not a PF-quantale");
  P.note("(6) is degenerate at finite scale");
  const FiniteSpace& VZ = X.vir_zariski();
  P.condition("(1) PP", X.flags().pp);
  P.condition("(2) L(A) Stone", X.lattice_flags().stone);
  P.condition("(3) lattice retraction onto Min",
              retraction_exists(X.lattice_zariski(), lattice_min_points(X), X.guard()).has_value());
  P.condition("(4) retraction onto Min_Z", retraction_exists(X.zariski(), min_points(X), X.guard()).has_value());
  bool c5 = true;
  for (Elem c = 0; c < A.size() && c5; ++c) {
    ElemSet u;
    for (Elem p : A.min() - A.up(c)) {
      const auto vi = X.vir().index[p];
      const auto yi = vi ? VZ.index_of_id(*vi) : std::nullopt;
      if (!yi) {
        c5 = false;
        break;
      }
      u.insert(*yi);
    }
    c5 = c5 && VZ.is_open(u);
  }
  P.condition("(5) Min n D(c) open in Spec_Z(Vir(A))", c5);
  P.condition("(6) Min_Z compact", is_compact(subspace(X.zariski(), min_points(X))));
  P.require_all_equal();
  return P.done();
}

TheoremReport c8_8(const Analysis& X) {
  Probe P("C8.8");
  if (!X.flags().pp) return P.not_met("not a PP-quantale");
  if (!X.flags().purified) P.fail("PP but not purified");
  return P.done();
}

TheoremReport class_lattice(const Analysis& X) {
  Probe P("CLS");
  const auto v = implication_violations(X.flags());
  if (!v.empty()) P.fail("class implications violated", v);
  return P.done();
}

}  // namespace

void add_s8(std::vector<TheoremEntry>& out) {
  out.push_back({"L8.1", "s8", "PP-quantales are semiprime", l8_1});
  out.push_back({"L8.2", "s8", "semiprime: radicals of complemented elements", l8_2});
  out.push_back({"T8.3", "s8", "PP, R(A) PP and Stone reticulation", t8_3});
  out.push_back({"L8.4", "s8", "Stone iff conormal with compact Min_Id,Z", l8_4});
  out.push_back({"T8.5", "s8", "semiprime: seven characterizations of PP", t8_5});
  out.push_back({"L8.6", "s8", "conormal: Stone iff a retraction onto Min", l8_6});
  out.push_back({"T8.7", "s8", "PF: six characterizations of PP", t8_7});
  out.push_back({"C8.8", "s8", "PP implies purified", c8_8});
  out.push_back({"CLS", "s8", "class implications", class_lattice});
}

}  // namespace qlab::detail
