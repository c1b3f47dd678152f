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

#include "qlab/reticulation.hpp"

#include <string>
#include <utility>

#include "qlab/error.hpp"

namespace qlab {

namespace {

FiniteLattice quotient_lattice(const Quantale& A, std::vector<Elem>& lambda,
                               std::vector<Elem>& reps) {
  const std::size_t n = A.size();
  lambda.assign(n, n);
  reps.clear();
  for (Elem a = 0; a < n; ++a) {
    for (Elem k = 0; k < reps.size(); ++k)
      if (A.radical(reps[k]) == A.radical(a)) {
        lambda[a] = k;
        break;
      }
    if (lambda[a] == n) {
      lambda[a] = reps.size();
      reps.push_back(a);
    }
  }
  std::vector<std::string> names;
  std::vector<ElemSet> up(reps.size());
  for (Elem i = 0; i < reps.size(); ++i) {
    names.push_back(A.name(reps[i]));
    for (Elem j = 0; j < reps.size(); ++j)
      if (A.leq(A.radical(reps[i]), A.radical(reps[j]))) up[i].insert(j);
  }
  return FiniteLattice::from_order(std::move(names), std::move(up));
}

bool some_power_below(const Quantale& A, Elem a, Elem b) {
  Elem p = a;
  for (std::size_t k = 1; k <= A.size(); ++k) {
    if (A.leq(p, b)) return true;
    p = A.mul(p, a);
  }
  return false;
}

}  // namespace

Reticulation::Reticulation(const Quantale& A)
    : src_(&A), latt_(quotient_lattice(A, lambda_, reps_)) {
  const std::size_t n = A.size();
  auto fail = [&](const std::string& axiom, std::vector<std::string> w) {
    throw Error(ErrorKind::AxiomFailure, "reticulation axiom " + axiom, std::move(w));
  };
  if (!latt_.is_distributive()) fail("distributivity", {});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem la = lambda_[a], lb = lambda_[b];
      if (!latt_.leq(lambda_[A.join(a, b)], latt_.join(la, lb)))
        fail("lambda(a v b) <= lambda(a) v lambda(b)", {A.name(a), A.name(b)});
      if (lambda_[A.mul(a, b)] != latt_.meet(la, lb))
        fail("lambda(ab) = lambda(a) ^ lambda(b)", {A.name(a), A.name(b)});
      if (latt_.leq(la, lb) != some_power_below(A, a, b))
        fail("lambda(a) <= lambda(b) iff a^n <= b", {A.name(a), A.name(b)});
    }

  star_.reserve(n);
  for (Elem a = 0; a < n; ++a) {
    ElemSet s;
    for (Elem c : A.down(a)) s.insert(lambda_[c]);
    if (!is_ideal(latt_, s) || latt_.down(latt_.join_all(s)) != s)
      fail("star is a principal ideal", {A.name(a)});
    star_.push_back(LatticeIdeal{s, latt_.join_all(s)});
  }
  lower_.reserve(size());
  for (Elem x = 0; x < size(); ++x) lower_.push_back(lower(principal_ideal(latt_, x)));
}

Elem Reticulation::lower(const LatticeIdeal& I) const {
  ElemSet cs;
  for (Elem c = 0; c < src_->size(); ++c)
    if (I.contains(lambda_[c])) cs.insert(c);
  return src_->join_all(cs);
}

SpecTransport spec_transport(const Reticulation& R) {
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  auto fail = [&](const std::string& what, std::vector<std::string> w) {
    throw Error(ErrorKind::TransportFailure, what, std::move(w));
  };
  SpecTransport t;
  t.u.assign(A.size(), L.size());
  t.v.assign(L.size(), A.size());
  ElemSet prime_gens;
  for (const auto& rec : prime_spectrum_lattice(L)) prime_gens.insert(rec.ideal.generator);
  if (prime_gens.size() != A.spec().size())
    fail("spectra differ in size", {std::to_string(A.spec().size()),
                                    std::to_string(prime_gens.size())});
  for (Elem p : A.spec()) {
    const LatticeIdeal& P = R.star(p);
    if (!is_prime_ideal(L, P)) fail("p* is not prime", {A.name(p)});
    t.u[p] = P.generator;
  }
  for (Elem g : prime_gens) {
    Elem q = R.lower_principal(g);
    if (!A.spec().contains(q)) fail("P_* is not m-prime", {L.name(g)});
    t.v[g] = q;
  }
  for (Elem p : A.spec())
    if (t.v[t.u[p]] != p) fail("v(u(p)) != p", {A.name(p)});
  for (Elem g : prime_gens)
    if (t.u[t.v[g]] != g) fail("u(v(P)) != P", {L.name(g)});
  for (Elem p : A.spec())
    for (Elem q : A.spec())
      if (A.leq(p, q) != L.leq(t.u[p], t.u[q]))
        fail("u is not an order isomorphism", {A.name(p), A.name(q)});

  FiniteSpace xz = zariski_space(A), yz = ideal_zariski_space(L);
  FiniteSpace xf = flat_space(A), yf = ideal_flat_space(L);
  t.zariski_map.resize(xz.size());
  for (std::size_t i = 0; i < xz.size(); ++i) t.zariski_map[i] = *yz.index_of_id(t.u[xz.id(i)]);
  if (!is_homeomorphism(xz, yz, t.zariski_map))
    fail("u is not a Zariski homeomorphism", {});
  if (!is_homeomorphism(xf, yf, t.zariski_map))
    fail("u is not a flat homeomorphism", {});
  return t;
}

TheoremReport check_radical_ideal_iso(const Reticulation& R) {
  Probe P("P3.7");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  const ElemSet rad = A.radical_elements();
  for (Elem a : rad) {
    if (R.lower(R.star(a)) != a) P.fail("Psi(Phi(a)) != a", {A.name(a)});
  }
  for (const auto& I : all_ideals(L)) {
    Elem a = R.lower(I);
    if (!rad.contains(a)) P.fail("Psi(I) is not radical", {"(" + L.name(I.generator) + "]"});
    if (R.star(a) != I) P.fail("Phi(Psi(I)) != I", {"(" + L.name(I.generator) + "]"});
  }
  for (Elem a : rad)
    for (Elem b : rad) {
      const auto &sa = R.star(a), &sb = R.star(b);
      if (R.star(A.meet(a, b)).members != (sa.members & sb.members))
        P.fail("Phi does not preserve meets", {A.name(a), A.name(b)});
      if (R.star(A.radical(A.join(a, b))) != ideal_join(L, sa, sb))
        P.fail("Phi does not preserve joins", {A.name(a), A.name(b)});
      if (A.leq(a, b) != sa.members.subset_of(sb.members))
        P.fail("Phi is not an order isomorphism", {A.name(a), A.name(b)});
    }
  if (R.star(A.radical(A.bot())).members != ElemSet::single(L.bot()))
    P.fail("Phi(rho(0)) is not the zero ideal", {});
  if (!is_whole(L, R.star(A.top()))) P.fail("Phi(1) is not the whole lattice", {});
  return P.done();
}

TheoremReport check_boolean_iso(const Reticulation& R) {
  Probe P("C3.11");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  const ElemSet b = A.boolean_center();
  const ElemSet bl = complemented_elements(L);
  ElemSet image;
  for (Elem e : b) {
    if (image.contains(R.lambda(e))) P.fail("lambda is not injective on B(A)", {A.name(e)});
    image.insert(R.lambda(e));
    Elem le = R.lambda(e), lc = R.lambda(A.neg(e));
    if (L.join(le, lc) != L.top() || L.meet(le, lc) != L.bot())
      P.fail("lambda(e) and lambda(neg e) are not complements", {A.name(e)});
  }
  if (image != bl) P.fail("lambda(B(A)) != B(L(A))", labels(L, (image - bl) | (bl - image)));
  for (Elem e : b)
    for (Elem f : b) {
      if (R.lambda(A.join(e, f)) != L.join(R.lambda(e), R.lambda(f)) ||
          R.lambda(A.meet(e, f)) != L.meet(R.lambda(e), R.lambda(f)))
        P.fail("lambda does not preserve Boolean operations", {A.name(e), A.name(f)});
    }
  return P.done();
}

TheoremReport check_boolean_powers(const Reticulation& R) {
  Probe P("L3.10");
  const Quantale& A = R.source();
  const ElemSet bl = complemented_elements(R.lattice());
  const ElemSet b = A.boolean_center();
  for (Elem c = 0; c < A.size(); ++c) {
    bool power_in_b = false;
    Elem p = c;
    for (std::size_t k = 1; k <= A.size(); ++k, p = A.mul(p, c))
      if (b.contains(p)) power_in_b = true;
    if (bl.contains(R.lambda(c)) != power_in_b)
      P.fail("lambda(c) complemented disagrees with some c^n in B(A)", {A.name(c)});
  }
  return P.done();
}

TheoremReport frame_transport_check(const Reticulation& R) {
  return combine("frame-transport",
                 {check_radical_ideal_iso(R), check_boolean_iso(R), check_boolean_powers(R)});
}

TheoremReport check_ann_in_prime(const Reticulation& R) {
  Probe P("L3.12");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  const Elem r0 = A.radical(A.bot());
  for (Elem c = 0; c < A.size(); ++c) {
    LatticeIdeal ann = annihilator(L, principal_ideal(L, R.lambda(c)));
    for (Elem p : A.spec())
      if (ann.members.subset_of(R.star(p).members) != A.leq(A.residuum(c, r0), p))
        P.fail("Ann(lambda(c)) in p* disagrees with c -> rho(0) <= p", {A.name(c), A.name(p)});
  }
  return P.done();
}

TheoremReport check_ann_of_star(const Reticulation& R) {
  Probe P("P3.13");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  const Elem r0 = A.radical(A.bot());
  const bool semiprime = is_semiprime(A);
  for (Elem a = 0; a < A.size(); ++a) {
    LatticeIdeal ann = annihilator(L, R.star(a));
    if (ann != R.star(A.residuum(a, r0))) P.fail("Ann(a*) != (a -> rho(0))*", {A.name(a)});
    if (semiprime && ann != R.star(A.neg(a))) P.fail("Ann(a*) != (neg a)*", {A.name(a)});
  }
  if (!semiprime) P.note("semiprime form not applicable");
  return P.done();
}

TheoremReport check_lower_of_ann(const Reticulation& R) {
  Probe P("P3.14");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  const Elem r0 = A.radical(A.bot());
  const bool semiprime = is_semiprime(A);
  for (const auto& I : all_ideals(L)) {
    Elem lhs = R.lower(annihilator(L, I));
    Elem li = R.lower(I);
    std::vector<std::string> w{"(" + L.name(I.generator) + "]"};
    if (lhs != A.residuum(li, r0)) P.fail("Ann(I)_* != I_* -> rho(0)", w);
    if (semiprime && lhs != A.neg(li)) P.fail("Ann(I)_* != neg I_*", w);
  }
  if (!semiprime) P.note("semiprime form not applicable");
  return P.done();
}

TheoremReport check_minimal_prime_test(const Reticulation& R) {
  Probe P("P3.15");
  const Quantale& A = R.source();
  const Elem r0 = A.radical(A.bot());
  for (Elem p : A.spec()) {
    bool test = true;
    for (Elem c = 0; c < A.size(); ++c)
      if (A.leq(c, p) != !A.leq(A.residuum(c, r0), p)) test = false;
    if (A.min().contains(p) != test)
      P.fail("minimality disagrees with the residuation test", {A.name(p)});
  }
  return P.done();
}

TheoremReport check_minimal_prime_test_semiprime(const Reticulation& R) {
  Probe P("C3.16");
  const Quantale& A = R.source();
  if (!is_semiprime(A)) return P.not_met("not semiprime");
  for (Elem p : A.spec()) {
    bool test = true;
    for (Elem c : A.down(p))
      if (A.leq(A.neg(c), p)) test = false;
    if (A.min().contains(p) != test)
      P.fail("minimality disagrees with the negation test", {A.name(p)});
  }
  return P.done();
}

TheoremReport annihilator_transport_check(const Reticulation& R) {
  return combine("annihilator-transport",
                 {check_ann_in_prime(R), check_ann_of_star(R), check_lower_of_ann(R),
                  check_minimal_prime_test(R), check_minimal_prime_test_semiprime(R)});
}

}  // namespace qlab
