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

// Regular and max-regular elements, normal quantales and the O operator.

#include <set>

#include "qlab/purity.hpp"
#include "verify_internal.hpp"

namespace qlab::detail {

namespace {

// Sp(A): the maximal proper regular elements.
ElemSet sp_set(const Quantale& A) {
  ElemSet proper = regular_elements(A);
  proper.erase(A.top());
  return A.lattice().maximal(proper);
}

Elem t_of(const Analysis& X, Elem vir_index) {
  const Quantale& A = X.q();
  return A.join_all(A.boolean_center() & A.down(X.vir().embed[vir_index]));
}

TheoremReport l5_1(const Analysis& X) {
  Probe P("L5.1");
  const PurityTables& T = X.purity();
  if (!T.regular.subset_of(T.pure)) P.fail("regular element not pure", labels(X.q(), T.regular - T.pure));
  if (!X.q().boolean_center().subset_of(T.pure))
    P.fail("complemented element not pure", labels(X.q(), X.q().boolean_center() - T.pure));
  return P.done();
}

TheoremReport l5_2(const Analysis& X) {
  Probe P("L5.2");
  P.note("t(p) joins the complemented elements below p");
  const ElemSet sp = sp_set(X.q());
  for (Elem i : X.vir().q.spec())
    if (!sp.contains(t_of(X, i))) P.fail("t(p) is not max-regular", {X.vir().q.name(i)});
  return P.done();
}

TheoremReport p5_3(const Analysis& X) {
  Probe P("P5.3");
  const Quantale& A = X.q();
  const FiniteSpace sp = pierce_space(A);
  const FiniteSpace& VZ = X.vir_zariski();
  std::vector<std::size_t> t(VZ.size());
  ElemSet t_image;
  for (std::size_t i = 0; i < VZ.size(); ++i) {
    const auto j = sp.index_of_id(t_of(X, VZ.id(i)));
    if (!j) {
      P.fail("t(p) lies outside Sp(A)", {VZ.labels()[i]});
      return P.done();
    }
    t[i] = *j;
    t_image.insert(*j);
  }
  if (t_image != sp.all()) P.fail("t is not surjective", labels(sp, sp.all() - t_image));
  if (!is_continuous(VZ, sp, t)) P.fail("t is not continuous");
  std::vector<std::size_t> s(X.zariski().size());
  ElemSet s_image;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Elem p = X.zariski().id(i);
    const auto j = sp.index_of_id(A.join_all(A.boolean_center() & A.down(p)));
    if (!j) {
      P.fail("s(p) lies outside Sp(A)", {A.name(p)});
      return P.done();
    }
    s[i] = *j;
    s_image.insert(*j);
  }
  if (s_image != sp.all()) P.fail("s is not surjective", labels(sp, sp.all() - s_image));
  if (!is_continuous(X.zariski(), sp, s)) P.fail("s is not continuous from Spec_Z(A)");
  if (!is_continuous(X.flat(), sp, s)) P.fail("s is not continuous from Spec_F(A)");
  if (!separation_flags(sp, X.guard()).boolean_space) P.fail("Sp(A) is not a Boolean space");
  return P.done();
}

TheoremReport l5_4(const Analysis& X) {
  Probe P("L5.4");
  const Quantale& A = X.q();
  if (!X.flags().normal) return P.not_met("not normal");
  const PurityTables& T = X.purity();
  P.note("(1) ranges over maximal elements; (2) is checked for a in Max(A) and a = 1");
  std::vector<std::string> literal2;
  for (Elem m : A.max()) {
    for (Elem n : A.max())
      if (A.leq(T.o_of[m], n) != (n == m)) P.fail("(1) O(m) <= n iff n = m fails", {A.name(m), A.name(n)});
    for (Elem a = 0; a < A.size(); ++a) {
      const bool lhs = A.leq(T.ker_of[m], a), rhs = a == m || a == A.top();
      if (lhs != rhs) {
        if (A.max().contains(a) || a == A.top())
          P.fail("(2) Ker(m) <= a iff a in {m, 1} fails", {A.name(m), A.name(a)});
        else
          literal2.push_back(A.name(m) + "/" + A.name(a));
      }
      if (A.leq(T.ker_of[a], m) && !A.leq(a, m)) P.fail("(3) Ker(a) <= m but a !<= m", {A.name(a), A.name(m)});
      if (A.leq(T.vir_of[a], m) != A.leq(a, m)) P.fail("(5) Vir(a) <= m iff a <= m fails", {A.name(a), A.name(m)});
    }
    if (T.o_of[m] != T.ker_of[m] || T.ker_of[m] != T.vir_of[m] || !T.pure.contains(T.o_of[m]))
      P.fail("O(m) = Ker(m) = Vir(m) pure fails", {A.name(m)});
  }
  for (Elem a = 0; a < A.size(); ++a)
    if (T.vir_of[a] != T.ker_of[a]) P.fail("(4) Vir(a) != Ker(a)", {A.name(a)});
  if (!literal2.empty())
    P.informational("(2) over every a holds only for a in Max(A) or a = 1", literal2);
  return P.done();
}

TheoremReport p5_5(const Analysis& X) {
  Probe P("P5.5");
  P.condition("A normal", X.flags().normal);
  P.condition("L(A) normal", is_normal_lattice(X.lat()));
  P.require_all_equal();
  return P.done();
}

TheoremReport p5_6(const Analysis& X) {
  Probe P("P5.6");
  const Quantale& A = X.q();
  const PurityTables& T = X.purity();
  const FiniteSpace& Z = X.zariski();
  const ElemSet M = A.max();
  const std::size_t n = A.size();
  guard_subsets(X, Z.size());

  P.condition("(1) normal", X.flags().normal);

  bool c2 = true;
  for (Elem m : M)
    for (Elem k : M) {
      if (m == k) continue;
      bool found = false;
      for (Elem c1 = 0; c1 < n && !found; ++c1)
        for (Elem c2v = 0; c2v < n && !found; ++c2v)
          found = !A.leq(c1, m) && !A.leq(c2v, k) && A.mul(c1, c2v) == A.bot();
      c2 = c2 && found;
    }
  P.condition("(2) separating compacts", c2);

  bool c3 = true;
  const ElemSet mp = max_points(X);
  for (std::size_t i : mp)
    for (std::size_t j : mp)
      if (i != j && Z.min_neighbourhood(i).intersects(Z.min_neighbourhood(j))) c3 = false;
  P.condition("(3) Hausdorff embedding", c3);

  bool c4 = true;
  for (Elem p : A.spec()) c4 = c4 && (M & A.up(p)).size() == 1;
  P.condition("(4) unique maximal above", c4);

  P.condition("(5) Spec_Z normal", is_normal_space(Z, X.guard()));
  P.condition("(6) retraction onto Max", retraction_exists(Z, mp, X.guard()).has_value());

  bool c7 = true;
  for (Elem m : M) c7 = c7 && Z.is_closed(X.points(lambda_set(A, m)));
  P.condition("(7) Lambda(m) closed", c7);

  bool c8 = true;
  for (Elem m : M)
    for (Elem k : M)
      if (m != k && A.join(T.vir_of[m], T.vir_of[k]) != A.top()) c8 = false;
  P.condition("(8) Vir(m) v Vir(n) = 1", c8);

  bool c9 = true, c10 = T.vir_of[A.bot()] == A.bot();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (A.join(a, b) == A.top() && A.join(T.vir_of[a], T.vir_of[b]) != A.top()) c9 = false;
      if (T.vir_of[A.join(a, b)] != A.join(T.vir_of[a], T.vir_of[b])) c10 = false;
    }
  P.condition("(9) comaximality passes to Vir", c9);
  P.condition("(10) Vir preserves joins", c10);

  bool c11 = true, c12 = true, c13 = true;
  for (Elem a = 0; a < n; ++a) {
    const Elem v = T.vir_of[a];
    for (Elem m : M)
      if (A.leq(v, m) && !A.leq(a, m)) c11 = false;
    if ((M & A.up(a)) != (M & A.up(v))) c12 = false;
    if (jacobson_r(A, a) != jacobson_r(A, v)) c13 = false;
  }
  P.condition("(11) Vir(a) <= m implies a <= m", c11);
  P.condition("(12) Max n V(a) = Max n V(Vir(a))", c12);
  P.condition("(13) r(a) = r(Vir(a))", c13);

  const FiniteSpace MZ = subspace(Z, mp);
  const FiniteSpace& VZ = X.vir_zariski();
  std::vector<std::size_t> eta(MZ.size());
  bool c14 = true;
  for (std::size_t i = 0; i < MZ.size() && c14; ++i) {
    const auto vi = X.vir().index[T.vir_of[MZ.id(i)]];
    const auto yi = vi ? VZ.index_of_id(*vi) : std::nullopt;
    if (!yi) c14 = false;
    else eta[i] = *yi;
  }
  c14 = c14 && is_homeomorphism(MZ, VZ, eta);
  P.condition("(14) m -> Vir(m) homeomorphism", c14);
  P.require_all_equal();
  return P.done();
}

TheoremReport hyperarchimedean(const Analysis& X) {
  Probe P("HYP");
  const Quantale& A = X.q();
  P.condition("hyperarchimedean", X.flags().hyperarchimedean);
  P.condition("Max = Spec", A.max() == A.spec());
  P.condition("L(A) Boolean", complemented_elements(X.lat()) == X.lat().all());
  P.require_all_equal();
  return P.done();
}

TheoremReport l5_7(const Analysis& X) {
  Probe P("L5.7");
  const FiniteLattice& L = X.lat();
  for (const auto& r : X.lattice_primes()) {
    const Fractions F = lattice_of_fractions(L, r.ideal);
    const LatticeIdeal O = o_ideal(L, r.ideal);
    const auto& pi = F.projection;
    for (Elem x = 0; x < L.size(); ++x)
      if (O.contains(x) != (pi[x] == F.lattice.bot()))
        P.fail("x in O(P) iff pi_P(x) = 0 fails", {L.name(r.ideal.generator), L.name(x)});
    ElemSet image;
    for (Elem x = 0; x < L.size(); ++x) {
      image.insert(pi[x]);
      for (Elem y = 0; y < L.size(); ++y)
        if (pi[L.join(x, y)] != F.lattice.join(pi[x], pi[y]) || pi[L.meet(x, y)] != F.lattice.meet(pi[x], pi[y]))
          P.fail("pi_P is not a lattice morphism", {L.name(r.ideal.generator), L.name(x), L.name(y)});
    }
    if (image != F.lattice.all() || pi[L.bot()] != F.lattice.bot() || pi[L.top()] != F.lattice.top())
      P.fail("pi_P is not a surjective bounded morphism", {L.name(r.ideal.generator)});
  }
  return P.done();
}

TheoremReport r5_8(const Analysis& X) {
  Probe P("R5.8");
  const FiniteLattice& L = X.lat();
  for (const auto& r : X.lattice_primes()) {
    const Fractions F = lattice_of_fractions(L, r.ideal);
    std::set<ElemSet> target;
    for (const auto& s : prime_spectrum_lattice(F.lattice)) target.insert(s.ideal.members);
    std::vector<std::pair<ElemSet, ElemSet>> pairs;
    std::set<ElemSet> images;
    for (const auto& q : X.lattice_primes()) {
      if (!q.ideal.members.subset_of(r.ideal.members)) continue;
      ElemSet img;
      for (Elem x : q.ideal.members) img.insert(F.projection[x]);
      if (!target.count(img)) P.fail("image of Q is not a prime ideal of L_P", {L.name(r.ideal.generator), L.name(q.ideal.generator)});
      images.insert(img);
      pairs.emplace_back(q.ideal.members, img);
    }
    if (images != target || images.size() != pairs.size())
      P.fail("Lambda_Id(P) -> Spec_Id(L_P) is not a bijection", {L.name(r.ideal.generator)});
    for (const auto& [q1, i1] : pairs)
      for (const auto& [q2, i2] : pairs)
        if (q1.subset_of(q2) != i1.subset_of(i2))
          P.fail("Lambda_Id(P) -> Spec_Id(L_P) is not an order isomorphism", {L.name(r.ideal.generator)});
  }
  return P.done();
}

TheoremReport p5_9(const Analysis& X) {
  Probe P("P5.9");
  const FiniteLattice& L = X.lat();
  for (const auto& r : X.lattice_primes()) {
    ElemSet meet = L.all();
    for (const auto& q : X.lattice_primes())
      if (q.ideal.members.subset_of(r.ideal.members)) meet &= q.ideal.members;
    if (o_ideal(L, r.ideal).members != meet) P.fail("O(P) != intersection of Lambda_Id(P)", {L.name(r.ideal.generator)});
  }
  return P.done();
}

TheoremReport t5_10(const Analysis& X) {
  Probe P("T5.10");
  const Quantale& A = X.q();
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  for (Elem p : A.spec())
    if (X.purity().o_of[p] != A.meet_all(lambda_set(A, p))) P.fail("O(p) != /\\Lambda(p)", {A.name(p)});
  return P.done();
}

TheoremReport c5_11(const Analysis& X) {
  Probe P("C5.11");
  const Quantale& A = X.q();
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  for (Elem p : A.min())
    if (X.purity().o_of[p] != p) P.fail("O(p) != p for minimal p", {A.name(p)});
  return P.done();
}

TheoremReport c5_12(const Analysis& X) {
  Probe P("C5.12");
  const Quantale& A = X.q();
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  Elem k = A.top();
  for (Elem m : A.max()) k = A.meet(k, X.purity().o_of[m]);
  if (k != A.bot()) P.fail("/\\O(m) != 0", {A.name(k)});
  return P.done();
}

TheoremReport l5_13(const Analysis& X) {
  Probe P("L5.13");
  const Quantale& A = X.q();
  if (!X.flags().normal) return P.not_met("not normal");
  for (Elem a : X.purity().pure)
    if (kappa(A, a) != a) P.fail("a != /\\{O(m) : a <= m}", {A.name(a)});
  return P.done();
}

TheoremReport l5_14(const Analysis& X) {
  Probe P("L5.14");
  const Quantale& A = X.q();
  if (!X.flags().normal) return P.not_met("not normal");
  const PurityTables& T = X.purity();
  for (Elem m : A.max())
    if (!T.pure.contains(T.o_of[m])) P.fail("(1) O(m) is not pure", {A.name(m)});
  for (Elem p : A.spec() & T.pure)
    if (T.o_of[p] != p) P.fail("(2) pure prime p has O(p) != p", {A.name(p)});
  return P.done();
}

TheoremReport c5_15(const Analysis& X) {
  Probe P("C5.15");
  const Quantale& A = X.q();
  if (!X.flags().normal) return P.not_met("not normal");
  for (Elem m : A.max())
    if (X.purity().pure.contains(m) != (X.purity().o_of[m] == m)) P.fail("m pure iff O(m) = m fails", {A.name(m)});
  return P.done();
}

TheoremReport p5_16(const Analysis& X) {
  Probe P("P5.16");
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  P.condition("hyperarchimedean", X.flags().hyperarchimedean);
  P.condition("maximal elements pure", X.q().max().subset_of(X.purity().pure));
  P.require_all_equal();
  return P.done();
}

// K(a) as the meet of O(m) over maximal m above a decides the outcome; the
// meet of the maximal elements themselves is reported alongside.
TheoremReport kappa_pure(const Analysis& X, const char* id, bool gate, const char* why) {
  Probe P(id);
  const Quantale& A = X.q();
  if (!gate) return P.not_met(why);
  P.note("K(a) is read as /\\{O(m) : m in Max(A), a <= m}");
  std::vector<std::string> r_misses;
  for (Elem a = 0; a < A.size(); ++a) {
    if (!X.purity().pure.contains(kappa(A, a))) P.fail("K(a) is not pure", {A.name(a)});
    if (!X.purity().pure.contains(jacobson_r(A, a))) r_misses.push_back(A.name(a));
  }
  if (!r_misses.empty()) P.informational("/\\(Max(A) n V(a)) is not pure", r_misses);
  return P.done();
}

TheoremReport p5_17(const Analysis& X) { return kappa_pure(X, "P5.17", X.flags().normal, "not normal"); }

// Meets of f(m) over Max n E, E closed in Spec_Z(A), against the pure set.
TheoremReport pure_by_closed(const Analysis& X, const char* id, Elem (*f)(const Quantale&, Elem)) {
  Probe P(id);
  const Quantale& A = X.q();
  const FiniteSpace& Z = X.zariski();
  ElemSet values;
  for (ElemSet E : closed_sets(Z, X.guard())) {
    Elem k = A.top();
    for (Elem m : A.max() & Z.id_set(E)) k = A.meet(k, f(A, m));
    values.insert(k);
  }
  const ElemSet pure = X.purity().pure;
  if (!values.subset_of(pure)) P.fail("a meet over a closed set is not pure", labels(A, values - pure));
  if (!pure.subset_of(values)) P.fail("pure element not a meet over a closed set", labels(A, pure - values));
  return P.done();
}

TheoremReport t5_18(const Analysis& X) {
  if (!X.flags().normal) return Probe("T5.18").not_met("not normal");
  return pure_by_closed(X, "T5.18", o_op);
}

TheoremReport c5_19(const Analysis& X) {
  if (!X.flags().normal || !X.flags().semiprime) return Probe("C5.19").not_met("not normal and semiprime");
  return pure_by_closed(X, "C5.19", omega);
}

}  // namespace

void add_s5(std::vector<TheoremEntry>& out) {
  out.push_back({"L5.1", "s5", "regular elements are pure", l5_1});
  out.push_back({"L5.2", "s5", "t(p) is max-regular", l5_2});
  out.push_back({"P5.3", "s5", "t and s are continuous surjections onto Sp(A)", p5_3});
  out.push_back({"L5.4", "s5", "maximal elements of a normal quantale", l5_4});
  out.push_back({"P5.5", "s5", "A normal iff L(A) normal", p5_5});
  out.push_back({"P5.6", "s5", "fourteen characterizations of normality", p5_6});
  out.push_back({"HYP", "s5", "hyperarchimedean iff Max = Spec iff L(A) Boolean", hyperarchimedean});
  out.push_back({"L5.7", "s5", "O(P) is the kernel of pi_P", l5_7});
  out.push_back({"R5.8", "s5", "primes below P and primes of L_P", r5_8});
  out.push_back({"P5.9", "s5", "O(P) is the meet of the primes below P", p5_9});
  out.push_back({"T5.10", "s5", "semiprime: O(p) = /\\Lambda(p)", t5_10});
  out.push_back({"C5.11", "s5", "semiprime: O(p) = p on Min(A)", c5_11});
  out.push_back({"C5.12", "s5", "semiprime: /\\O(m) = 0", c5_12});
  out.push_back({"L5.13", "s5", "normal: pure a = /\\O(m) over m above a", l5_13});
  out.push_back({"L5.14", "s5", "normal: O(m) pure, O(p) = p on pure primes", l5_14});
  out.push_back({"C5.15", "s5", "normal: m pure iff O(m) = m", c5_15});
  out.push_back({"P5.16", "s5", "semiprime: hyperarchimedean iff maximal elements pure", p5_16});
  out.push_back({"P5.17", "s5", "normal: K(a) is pure", p5_17});
  out.push_back({"T5.18", "s5", "normal: pure elements through closed sets", t5_18});
  out.push_back({"C5.19", "s5", "normal semiprime: pure elements through Omega", c5_19});
}

// Shared with the PF-quantale checks of the next section.
TheoremReport kappa_pure_pf(const Analysis& X) {
  return kappa_pure(X, "P6.13", X.flags().pf, "not a PF-quantale");
}

}  // namespace qlab::detail
