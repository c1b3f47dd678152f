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

// The reticulation: its axioms, the a* / I_* transfer, spectra and centres.

#include "qlab/error.hpp"
#include "verify_internal.hpp"

namespace qlab::detail {

namespace {

std::string ideal_name(const FiniteLattice& L, const LatticeIdeal& I) {
  return "(" + L.name(I.generator) + "]";
}

bool some_power_below(const Quantale& A, Elem a, Elem b) {
  for (std::size_t k = 1; k <= A.size(); ++k)
    if (A.leq(power(A, a, k), b)) return true;
  return false;
}

TheoremReport d3_1(const Analysis& X) {
  Probe P("D3.1");
  const Quantale& A = X.q();
  const Reticulation& R = X.ret();
  const FiniteLattice& L = X.lat();
  if (!L.is_distributive()) P.fail("L(A) is not distributive");
  ElemSet image;
  for (Elem a = 0; a < A.size(); ++a) image.insert(R.lambda(a));
  if (image != L.all()) P.fail("lambda is not onto L(A)");
  for (Elem a = 0; a < A.size(); ++a)
    for (Elem b = 0; b < A.size(); ++b) {
      const Elem la = R.lambda(a), lb = R.lambda(b);
      if (!L.leq(R.lambda(A.join(a, b)), L.join(la, lb)))
        P.fail("(1) lambda(a v b) !<= lambda(a) v lambda(b)", {A.name(a), A.name(b)});
      if (R.lambda(A.mul(a, b)) != L.meet(la, lb))
        P.fail("(2) lambda(ab) != lambda(a) ^ lambda(b)", {A.name(a), A.name(b)});
      if (L.leq(la, lb) != some_power_below(A, a, b))
        P.fail("(3) lambda(a) <= lambda(b) iff a^n <= b", {A.name(a), A.name(b)});
    }
  return P.done();
}

TheoremReport l3_2(const Analysis& X) {
  Probe P("L3.2");
  const Quantale& A = X.q();
  const Reticulation& R = X.ret();
  const FiniteLattice& L = X.lat();
  const std::size_t n = A.size();
  const Elem r0 = A.radical(A.bot());
  const bool semiprime = is_semiprime(A);
  if (R.lambda(A.bot()) != L.bot()) P.fail("(4) lambda(0) != 0");
  for (Elem a = 0; a < n; ++a) {
    const Elem la = R.lambda(a);
    if ((la == L.top()) != (a == A.top())) P.fail("(3) lambda(a) = 1 iff a = 1", {A.name(a)});
    bool nilpotent = false;
    for (std::size_t k = 1; k <= n; ++k) {
      nilpotent = nilpotent || power(A, a, k) == A.bot();
      if (R.lambda(power(A, a, k)) != la) P.fail("(6) lambda(a^n) != lambda(a)", {A.name(a), std::to_string(k)});
    }
    if ((la == L.bot()) != nilpotent) P.fail("(5) lambda(a) = 0 iff a^n = 0", {A.name(a)});
    if ((la == L.bot()) != A.leq(a, r0)) P.fail("(8) lambda(a) = 0 iff a <= rho(0)", {A.name(a)});
    if (semiprime && la == L.bot() && a != A.bot()) P.fail("(9) semiprime but lambda(a) = 0, a != 0", {A.name(a)});
    for (Elem b = 0; b < n; ++b) {
      const Elem lb = R.lambda(b);
      if (A.leq(a, b) && !L.leq(la, lb)) P.fail("(1) lambda is not monotone", {A.name(a), A.name(b)});
      if (R.lambda(A.join(a, b)) != L.join(la, lb)) P.fail("(2) lambda(a v b) != lambda(a) v lambda(b)", {A.name(a), A.name(b)});
      if ((A.radical(a) == A.radical(b)) != (la == lb)) P.fail("(7) rho(a) = rho(b) iff lambda(a) = lambda(b)", {A.name(a), A.name(b)});
    }
  }
  return P.done();
}

TheoremReport l3_3(const Analysis& X) {
  Probe P("L3.3");
  const Quantale& A = X.q();
  const Reticulation& R = X.ret();
  const FiniteLattice& L = X.lat();
  const std::size_t n = A.size();
  P.note("(5) is read for compact c: c* = (lambda(c)]");
  const auto ideals = all_ideals(L);
  for (Elem a = 0; a < n; ++a) {
    const LatticeIdeal& s = R.star(a);
    if (!is_ideal(L, s.members)) P.fail("(1) a* is not an ideal", {A.name(a)});
    if (!A.leq(a, R.lower(s))) P.fail("(1) a !<= (a*)_*", {A.name(a)});
    if (s != principal_ideal(L, R.lambda(a))) P.fail("(5) c* != (lambda(c)]", {A.name(a)});
    if (A.radical(a) != R.lower(s)) P.fail("(7) rho(a) != (a*)_*", {A.name(a)});
    if (s != R.star(A.radical(a))) P.fail("(7) a* != rho(a)*", {A.name(a)});
  }
  for (const auto& I : ideals) {
    const Elem lo = R.lower(I);
    if (R.star(lo) != I) P.fail("(2) (I_*)* != I", {ideal_name(L, I)});
    if (A.radical(lo) != lo) P.fail("(7) I_* is not radical", {ideal_name(L, I)});
    for (Elem c = 0; c < n; ++c)
      if (A.leq(c, lo) != I.contains(R.lambda(c))) P.fail("(6) c <= I_* iff lambda(c) in I", {A.name(c), ideal_name(L, I)});
  }
  for (Elem p : A.spec()) {
    if (R.lower(R.star(p)) != p) P.fail("(3) (p*)_* != p", {A.name(p)});
    if (!is_prime_ideal(L, R.star(p))) P.fail("(3) p* is not prime", {A.name(p)});
    for (Elem c = 0; c < n; ++c)
      if (A.leq(c, p) != R.star(p).contains(R.lambda(c))) P.fail("(8) c <= p iff lambda(c) in p*", {A.name(c), A.name(p)});
  }
  for (const auto& rec : X.lattice_primes())
    if (!A.spec().contains(R.lower(rec.ideal))) P.fail("(4) P_* is not m-prime", {ideal_name(L, rec.ideal)});
  return P.done();
}

TheoremReport l3_4(const Analysis& X) {
  Probe P("L3.4");
  const Quantale& A = X.q();
  const Reticulation& R = X.ret();
  const FiniteLattice& L = X.lat();
  const std::size_t n = A.size();
  P.note("(2) is checked on all families of at most three elements and on the whole carrier");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const LatticeIdeal m = ideal_meet(L, R.star(a), R.star(b));
      if (R.star(A.mul(a, b)) != m || R.star(A.meet(a, b)) != m)
        P.fail("(1) (ab)*, (a^b)*, a* n b* differ", {A.name(a), A.name(b)});
    }
  auto check_family = [&](ElemSet s) {
    LatticeIdeal j = principal_ideal(L, L.bot());
    for (Elem a : s) j = ideal_join(L, j, R.star(a));
    if (R.star(A.join_all(s)) != j) P.fail("(2) (\\/a_i)* != \\/a_i*", labels(A, s));
  };
  check_family(ElemSet{});
  check_family(A.all());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      for (Elem c = b; c < n; ++c) {
        ElemSet s = ElemSet::single(a);
        s.insert(b);
        s.insert(c);
        check_family(s);
      }
  return P.done();
}

TheoremReport l3_5(const Analysis& X) {
  Probe P("L3.5");
  const FiniteSpace &Z = X.zariski(), &Y = X.lattice_zariski();
  SpecTransport t;
  try {
    t = spec_transport(X.ret());
  } catch (const Error& e) {
    P.fail(e.what(), e.witness());
    return P.done();
  }
  if (!is_continuous_by_preimage(Z, Y, t.zariski_map, X.guard()))
    P.fail("u is not continuous by preimages");
  std::vector<std::size_t> inv(Y.size(), Y.size());
  for (std::size_t i = 0; i < Z.size(); ++i) inv[t.zariski_map[i]] = i;
  if (!is_continuous_by_preimage(Y, Z, inv, X.guard())) P.fail("v is not continuous by preimages");
  for (std::size_t j = 0; j < Y.size(); ++j)
    if (t.v[Y.id(j)] != Z.id(inv[j])) P.fail("v differs from the inverse of u", {Y.labels()[j]});
  return P.done();
}

TheoremReport c3_6(const Analysis& X) {
  Probe P("C3.6");
  const FiniteSpace &Z = X.zariski(), &Y = X.lattice_zariski();
  const SpecTransport t = spec_transport(X.ret());
  ElemSet lmax;
  for (const auto& rec : X.lattice_primes())
    if (rec.is_maximal) lmax.insert(*Y.index_of_id(rec.ideal.generator));
  const ElemSet zmax = max_points(X);
  ElemSet image;
  for (std::size_t i : zmax) image.insert(t.zariski_map[i]);
  if (image != lmax) {
    P.fail("u does not carry Max(A) onto the maximal ideals", labels(Y, image));
    return P.done();
  }
  const FiniteSpace a = subspace(Z, zmax), b = subspace(Y, lmax);
  std::vector<std::size_t> f(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t zi = *Z.index_of_id(a.id(i));
    f[i] = *b.index_of_id(Y.id(t.zariski_map[zi]));
  }
  if (!is_homeomorphism(a, b, f)) P.fail("Max_Z(A) and Max_Id,Z(L(A)) are not homeomorphic via u");
  return P.done();
}

TheoremReport l3_8(const Analysis& X) {
  Probe P("L3.8");
  const Quantale& A = X.q();
  const std::size_t n = A.size();
  const ElemSet B = A.boolean_center();
  P.note("(2) is read a ^ e = ae; (5) is read (a ^ b) v e = (a v e) ^ (b v e)");
  for (Elem a = 0; a < n; ++a) {
    if (B.contains(a) != (A.join(a, A.neg(a)) == A.top())) P.fail("(1) a in B(A) iff a v a-perp = 1", {A.name(a)});
    for (Elem e : B) {
      if (A.meet(a, e) != A.mul(a, e)) P.fail("(2) a ^ e != ae", {A.name(a), A.name(e)});
      if (A.residuum(e, a) != A.join(A.neg(e), a)) P.fail("(3) e -> a != e-perp v a", {A.name(e), A.name(a)});
    }
    for (Elem b = 0; b < n; ++b) {
      if (A.join(a, b) == A.top() && A.mul(a, b) == A.bot() && (!B.contains(a) || !B.contains(b)))
        P.fail("(4) a v b = 1, ab = 0 but not complemented", {A.name(a), A.name(b)});
      for (Elem e : B)
        if (A.join(A.meet(a, b), e) != A.meet(A.join(a, e), A.join(b, e)))
          P.fail("(5) (a ^ b) v e != (a v e) ^ (b v e)", {A.name(a), A.name(b), A.name(e)});
      if (A.join(a, b) != A.top()) continue;
      for (std::size_t k = 1; k <= n; ++k) {
        const Elem ak = power(A, a, k), bk = power(A, b, k);
        if (A.mul(ak, bk) == A.bot() && (!B.contains(ak) || !B.contains(bk)))
          P.fail("(6) a^n, b^n not complemented", {A.name(a), A.name(b), std::to_string(k)});
      }
    }
  }
  return P.done();
}

TheoremReport l3_9(const Analysis& X) {
  Probe P("L3.9");
  P.note("degenerate at finite scale: every element is compact");
  if (!X.q().boolean_center().subset_of(X.q().all())) P.fail("B(A) is not inside K(A)");
  return P.done();
}

}  // namespace

void add_s3(std::vector<TheoremEntry>& out) {
  out.push_back({"D3.1", "s3", "reticulation axioms", d3_1});
  out.push_back({"L3.2", "s3", "arithmetic of lambda", l3_2});
  out.push_back({"L3.3", "s3", "the maps a* and I_*", l3_3});
  out.push_back({"L3.4", "s3", "a* preserves products, meets and joins", l3_4});
  out.push_back({"L3.5", "s3", "u and v are inverse homeomorphisms", l3_5});
  out.push_back({"C3.6", "s3", "maximal spectra are homeomorphic", c3_6});
  out.push_back({"P3.7", "s3", "R(A) is isomorphic to Id(L(A))",
                 [](const Analysis& X) { return check_radical_ideal_iso(X.ret()); }});
  out.push_back({"L3.8", "s3", "complemented elements", l3_8});
  out.push_back({"L3.9", "s3", "B(A) consists of compact elements", l3_9});
  out.push_back({"L3.10", "s3", "complemented classes through powers",
                 [](const Analysis& X) { return check_boolean_powers(X.ret()); }});
  out.push_back({"C3.11", "s3", "lambda restricts to B(A) = B(L(A))",
                 [](const Analysis& X) { return check_boolean_iso(X.ret()); }});
  out.push_back({"L3.12", "s3", "annihilators inside p*",
                 [](const Analysis& X) { return check_ann_in_prime(X.ret()); }});
  out.push_back({"P3.13", "s3", "Ann(a*) = (a -> rho(0))*",
                 [](const Analysis& X) { return check_ann_of_star(X.ret()); }});
  out.push_back({"P3.14", "s3", "Ann(I)_* = I_* -> rho(0)",
                 [](const Analysis& X) { return check_lower_of_ann(X.ret()); }});
  out.push_back({"P3.15", "s3", "minimal m-prime test",
                 [](const Analysis& X) { return check_minimal_prime_test(X.ret()); }});
  out.push_back({"C3.16", "s3", "minimal m-prime test, semiprime form",
                 [](const Analysis& X) { return check_minimal_prime_test_semiprime(X.ret()); }});
}

}  // namespace qlab::detail
