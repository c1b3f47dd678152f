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

// Pure and w-pure elements, the operators Vir, Ker, O and O~, and their
// transfer to sigma-ideals of L(A).

#include "qlab/purity.hpp"
#include "verify_internal.hpp"

namespace qlab::detail {

namespace {

TheoremReport operators(const Analysis& X) {
  Probe P("OPS");
  const Quantale& A = X.q();
  const PurityTables& T = X.purity();
  const std::size_t n = A.size();
  for (Elem a = 0; a < n; ++a) {
    ElemSet below, any;
    for (Elem c = 0; c < n; ++c) {
      if (A.join(a, A.neg(c)) != A.top()) continue;
      any.insert(c);
      if (A.leq(c, a)) below.insert(c);
    }
    const Elem k = T.ker_of[a];
    if (k != A.join_all(below) || k != A.join_all(any)) P.fail("two forms of Ker(a) differ", {A.name(a)});
    if (!A.leq(T.vir_of[a], k) || !A.leq(k, a)) P.fail("Vir(a) <= Ker(a) <= a fails", {A.name(a)});
    if (T.pure.contains(a) != (T.vir_of[a] == a)) P.fail("a pure iff a = Vir(a) fails", {A.name(a)});
    if (T.o_of[a] != o_via_annihilator(A, a)) P.fail("O(a) over pairs differs from the annihilator form", {A.name(a)});
    if (T.pure.contains(a) != is_pure(A, a) || T.w_pure.contains(a) != is_w_pure(A, a))
      P.fail("purity tables disagree with the predicates", {A.name(a)});
  }
  for (Elem p : A.spec())
    if (!A.leq(T.o_of[p], p)) P.fail("O(p) !<= p", {A.name(p)});
  return P.done();
}

TheoremReport l4_1(const Analysis& X) {
  Probe P("L4.1");
  const Quantale& A = X.q();
  const ElemSet pure = X.purity().pure;
  for (Elem a : pure) {
    ElemSet s;
    for (Elem c = 0; c < A.size(); ++c)
      if (A.join(a, A.neg(c)) == A.top()) s.insert(c);
    if (A.join_all(s) != a) P.fail("(1) a != \\/{c : a v c-perp = 1}", {A.name(a)});
    for (Elem b : pure) {
      if (A.mul(a, b) != A.meet(a, b)) P.fail("(2) ab != a ^ b", {A.name(a), A.name(b)});
      if (!pure.contains(A.join(a, b))) P.fail("(3) a v b is not pure", {A.name(a), A.name(b)});
    }
  }
  if (!pure.contains(A.bot())) P.fail("(3) the empty join is not pure");
  const Quantale& V = X.vir().q;
  if (!V.is_frame() || !V.lattice().is_distributive()) P.fail("(4) Vir(A) is not a frame");
  return P.done();
}

TheoremReport l4_2(const Analysis& X) {
  Probe P("L4.2");
  const Quantale& A = X.q();
  const PurityTables& T = X.purity();
  const SubQuantale& V = X.vir();
  P.note("(3) treats rho as a map into R(A), whose join is rho of the join");
  for (Elem m : A.max())
    if (T.o_of[m] != T.ker_of[m]) P.fail("(1) O(m) != Ker(m)", {A.name(m)});
  for (Elem a : T.pure) {
    const ElemSet M = A.max() & A.up(a);
    Elem meet_vir = A.top();
    for (Elem m : M) meet_vir = A.meet(meet_vir, T.vir_of[m]);
    if (T.vir_of[A.meet_all(M)] != a || meet_vir != a) P.fail("(2) a != Vir(/\\M) = /\\Vir(m)", {A.name(a)});
    for (Elem b : T.pure) {
      if (a != b && A.radical(a) == A.radical(b)) P.fail("(3) rho is not injective on Vir(A)", {A.name(a), A.name(b)});
      if (A.radical(A.meet(a, b)) != A.meet(A.radical(a), A.radical(b)))
        P.fail("(3) rho does not preserve meets", {A.name(a), A.name(b)});
      if (A.radical(A.join(a, b)) != A.radical(A.join(A.radical(a), A.radical(b))))
        P.fail("(3) rho does not preserve joins", {A.name(a), A.name(b)});
    }
    for (Elem r : A.radical_elements())
      if (A.leq(A.radical(a), r) != A.leq(a, T.vir_of[r]))
        P.fail("(3) rho is not left adjoint to Vir", {A.name(a), A.name(r)});
  }
  // (4) Vir maps m-primes to primes of Vir(A), continuously; Vir(A) is spatial.
  const FiniteSpace& Y = X.vir_zariski();
  std::vector<std::size_t> f(X.zariski().size());
  bool into_spec = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Elem p = X.zariski().id(i);
    const auto vi = V.index[T.vir_of[p]];
    const auto yi = vi ? Y.index_of_id(*vi) : std::nullopt;
    if (!yi) {
      P.fail("(4) Vir(p) is not prime in Vir(A)", {A.name(p)});
      into_spec = false;
      break;
    }
    f[i] = *yi;
  }
  if (into_spec && !is_continuous(X.zariski(), Y, f)) P.fail("(4) Vir : Spec(A) -> Spec(Vir(A)) is not continuous");
  for (Elem x = 0; x < V.q.size(); ++x)
    if (V.q.meet_all(V.q.spec() & V.q.up(x)) != x) P.fail("(4) Vir(A) is not spatial", {V.q.name(x)});
  return P.done();
}

TheoremReport l4_3(const Analysis& X) {
  Probe P("L4.3");
  const Quantale& A = X.q();
  P.note("b ranges over Vir(A)");
  for (Elem a = 0; a < A.size(); ++a)
    for (Elem b : X.purity().pure)
      if (A.meet(a, b) != A.mul(a, b)) P.fail("a ^ b != ab", {A.name(a), A.name(b)});
  return P.done();
}

TheoremReport l4_4(const Analysis& X) {
  Probe P("L4.4");
  const Quantale& A = X.q();
  const PurityTables& T = X.purity();
  for (Elem p : A.spec())
    if (T.vir_of[p] != T.vir_of[T.o_of[p]]) P.fail("Vir(p) != Vir(O(p))", {A.name(p)});
  return P.done();
}

TheoremReport p4_5(const Analysis& X) {
  Probe P("P4.5");
  const Quantale& A = X.q();
  if (!X.flags().semiprime) return P.not_met("not semiprime");
  for (Elem a : X.purity().pure)
    if (A.radical(a) != a) P.fail("pure element is not radical", {A.name(a)});
  return P.done();
}

TheoremReport l4_6(const Analysis& X) {
  Probe P("L4.6");
  const Quantale& A = X.q();
  const PurityTables& T = X.purity();
  if (!T.pure.subset_of(T.w_pure)) P.fail("pure element not w-pure", labels(A, T.pure - T.w_pure));
  if (X.flags().semiprime && T.pure != T.w_pure)
    P.fail("semiprime but pure and w-pure differ", labels(A, T.w_pure - T.pure));
  return P.done();
}

TheoremReport l4_7(const Analysis& X) {
  Probe P("L4.7");
  const Quantale& A = X.q();
  const ElemSet w = X.purity().w_pure;
  if (!w.contains(A.bot())) P.fail("(2) the empty join is not w-pure");
  for (Elem a : w)
    for (Elem b : w) {
      if (!w.contains(A.mul(a, b))) P.fail("(1) ab is not w-pure", {A.name(a), A.name(b)});
      if (!w.contains(A.meet(a, b))) P.fail("(1) a ^ b is not w-pure", {A.name(a), A.name(b)});
      if (!w.contains(A.join(a, b))) P.fail("(2) a v b is not w-pure", {A.name(a), A.name(b)});
    }
  return P.done();
}

TheoremReport sigma_ker(const Analysis& X) {
  Probe P("SIGMA-KER");
  const FiniteLattice& L = X.lat();
  const Quantale idl = frame_of(L);
  for (const auto& I : all_ideals(L))
    if (sigma_set(L, I) != L.down(ker_op(idl, I.generator)))
      P.fail("sigma(I) != Ker(I) in Id(L)", {L.name(I.generator)});
  return P.done();
}

TheoremReport l4_15(const Analysis& X) {
  Probe P("L4.15");
  const Quantale& A = X.q();
  for (Elem a : X.purity().pure)
    if (X.purity().vir_of[A.radical(a)] != a) P.fail("a != Vir(rho(a))", {A.name(a)});
  return P.done();
}

TheoremReport t4_16(const Analysis& X) {
  TheoremReport base = check_w_iso(X.ret());
  if (base.failed() || !X.flags().semiprime) return base;
  // With rho(0) = 0 the lower map is itself the inverse.
  Probe P("T4.16");
  const Quantale& A = X.q();
  const Reticulation& R = X.ret();
  const FiniteLattice& L = X.lat();
  for (const auto& J : all_ideals(L)) {
    if (!is_sigma_ideal(L, J)) continue;
    const Elem lo = R.lower(J);
    if (!X.purity().pure.contains(lo) || R.star(lo) != J)
      P.fail("semiprime: J_* is not the pure preimage of J", {L.name(J.generator)});
  }
  for (Elem a : X.purity().pure)
    if (R.lower(R.star(a)) != a) P.fail("semiprime: (a*)_* != a", {A.name(a)});
  return combine("T4.16", {base, P.done()});
}

TheoremReport l4_17(const Analysis& X) {
  Probe P("L4.17");
  const Quantale& A = X.q();
  for (Elem p : A.spec()) {
    ElemSet s;
    const Elem o = X.purity().o_of[p];
    for (Elem c = 0; c < A.size(); ++c) {
      const bool perp_out = !A.leq(A.neg(c), p);
      if (perp_out && A.leq(c, p)) s.insert(c);
      if (A.leq(c, o) != perp_out) P.fail("(2) c <= O(p) iff c-perp !<= p", {A.name(c), A.name(p)});
    }
    if (o != A.join_all(s)) P.fail("(1) O(p) != \\/{c <= p : c-perp !<= p}", {A.name(p)});
  }
  return P.done();
}

TheoremReport o_tilde_below(const Analysis& X) {
  Probe P("OTILDE");
  const Quantale& A = X.q();
  const bool semiprime = X.flags().semiprime;
  // c-perp <= c -> rho(0), so O(p) <= O~(p) always; the two agree when
  // rho(0) = 0. The reverse inequality is not true in general.
  std::vector<std::string> misses;
  for (Elem p : A.spec()) {
    const Elem o = X.purity().o_of[p], ot = *X.purity().o_tilde_of[p];
    if (!A.leq(o, ot)) P.fail("O(p) !<= O~(p)", {A.name(p)});
    if (semiprime && o != ot) P.fail("semiprime but O~(p) != O(p)", {A.name(p)});
    if (!A.leq(ot, o)) misses.push_back(A.name(p));
  }
  if (!misses.empty()) P.informational("counterexample: O~(p) !<= O(p)", misses);
  return P.done();
}

TheoremReport l4_18(const Analysis& X) {
  Probe P("L4.18");
  const Quantale& A = X.q();
  const Elem r0 = A.radical(A.bot());
  for (Elem p : A.spec()) {
    const Elem ot = o_tilde(A, p);
    for (Elem c = 0; c < A.size(); ++c)
      if (A.leq(c, ot) != (A.leq(c, p) && !A.leq(A.residuum(c, r0), p)))
        P.fail("c <= O~(p) iff c <= p and c -> rho(0) !<= p", {A.name(c), A.name(p)});
  }
  return P.done();
}

}  // namespace

void add_s4(std::vector<TheoremEntry>& out) {
  out.push_back({"OPS", "s4", "definitions of Ker, Vir and O", operators});
  out.push_back({"L4.1", "s4", "pure elements form a frame", l4_1});
  out.push_back({"L4.2", "s4", "O(m) = Ker(m), rho on Vir(A), spatiality", l4_2});
  out.push_back({"L4.3", "s4", "a ^ b = ab for pure b", l4_3});
  out.push_back({"L4.4", "s4", "Vir(p) = Vir(O(p))", l4_4});
  out.push_back({"P4.5", "s4", "semiprime: pure elements are radical", p4_5});
  out.push_back({"L4.6", "s4", "pure elements are w-pure", l4_6});
  out.push_back({"L4.7", "s4", "w-pure elements are closed under products, meets, joins", l4_7});
  out.push_back({"L4.8", "s4", "a w-pure gives a sigma-ideal a*",
                 [](const Analysis& X) { return check_w_pure_star_sigma(X.ret()); }});
  out.push_back({"L4.9", "s4", "J sigma-ideal gives J_* w-pure",
                 [](const Analysis& X) { return check_sigma_lower_w_pure(X.ret()); }});
  out.push_back({"C4.10", "s4", "semiprime: J_* pure",
                 [](const Analysis& X) { return check_sigma_lower_pure(X.ret()); }});
  out.push_back({"C4.11", "s4", "rho preserves w-purity; sigma-ideals by J_*",
                 [](const Analysis& X) { return check_w_pure_radical_closure(X.ret()); }});
  out.push_back({"SIGMA-KER", "s4", "sigma(I) = Ker(I) in Id(L)", sigma_ker});
  out.push_back({"L4.12", "s4", "c <= Ker(a) iff a v c-perp = 1",
                 [](const Analysis& X) { return check_ker_membership(X.q()); }});
  out.push_back({"T4.13", "s4", "Ker against sigma",
                 [](const Analysis& X) { return check_ker_sigma(X.ret()); }});
  out.push_back({"T4.14", "s4", "w-pure radical a = rho(Ker(a)), Ker(a) = Vir(a)",
                 [](const Analysis& X) { return check_w_pure_radical_ker(X.ret()); }});
  out.push_back({"L4.15", "s4", "pure a = Vir(rho(a))", l4_15});
  out.push_back({"T4.16", "s4", "Vir(A) is isomorphic to the sigma-ideals", t4_16});
  out.push_back({"L4.17", "s4", "O(p) through compacts", l4_17});
  out.push_back({"OTILDE", "s4", "comparison of O~(p) and O(p)", o_tilde_below});
  out.push_back({"L4.18", "s4", "membership in O~(p)", l4_18});
  out.push_back({"T4.19", "s4", "O transfers to O~",
                 [](const Analysis& X) { return check_o_transfer(X.ret()); }});
  out.push_back({"C4.20", "s4", "semiprime: O transfers to O",
                 [](const Analysis& X) { return check_o_transfer_semiprime(X.ret()); }});
}

}  // namespace qlab::detail
