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

// Preliminaries: residuation, spectra, radicals, interval quantales, and the
// finite topological facts the later sections lean on.

#include "qlab/purity.hpp"
#include "verify_internal.hpp"

namespace qlab::detail {

namespace {

TheoremReport residuation(const Analysis& X) {
  Probe P("RES");
  const Quantale& A = X.q();
  const std::size_t n = A.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (A.leq(a, A.residuum(b, c)) != A.leq(A.mul(a, b), c))
          P.fail("a <= b->c disagrees with ab <= c", {A.name(a), A.name(b), A.name(c)});
  for (Elem a = 0; a < n; ++a) {
    ElemSet s;
    for (Elem x = 0; x < n; ++x)
      if (A.mul(a, x) == A.bot()) s.insert(x);
    if (A.neg(a) != A.join_all(s)) P.fail("a-perp is not \\/{x : ax = 0}", {A.name(a)});
  }
  return P.done();
}

TheoremReport spectra(const Analysis& X) {
  Probe P("SPEC");
  const Quantale& A = X.q();
  const std::size_t n = A.size();
  ElemSet spec;
  for (Elem p = 0; p < n; ++p) {
    if (p == A.top()) continue;
    bool prime = true;
    for (Elem a = 0; a < n && prime; ++a)
      for (Elem b = 0; b < n && prime; ++b)
        if (A.leq(A.mul(a, b), p) && !A.leq(a, p) && !A.leq(b, p)) prime = false;
    if (prime) spec.insert(p);
  }
  if (spec != A.spec()) P.fail("m-primes differ from the definition", labels(A, spec));
  ElemSet proper = A.all();
  proper.erase(A.top());
  const ElemSet max = A.lattice().maximal(proper);
  if (max != A.max()) P.fail("maximal elements differ", labels(A, max));
  if (!max.subset_of(spec)) P.fail("a maximal element is not m-prime", labels(A, max - spec));
  if (A.lattice().minimal(spec) != A.min()) P.fail("minimal m-primes differ");
  for (Elem a : proper)
    if (!A.up(a).intersects(max)) P.fail("proper element below no maximal", {A.name(a)});
  for (Elem p : spec)
    if (!A.down(p).intersects(A.min())) P.fail("m-prime above no minimal m-prime", {A.name(p)});
  for (Elem a = 0; a < n; ++a)
    if (A.radical(a) != A.meet_all(spec & A.up(a))) P.fail("rho(a) is not /\\V(a)", {A.name(a)});
  return P.done();
}

TheoremReport l2_1(const Analysis& X) {
  Probe P("L2.1");
  const Quantale& A = X.q();
  const std::size_t n = A.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (A.join(a, b) != A.top()) continue;
      if (A.mul(a, b) != A.meet(a, b)) P.fail("(1) ab != a^b", {A.name(a), A.name(b)});
      for (std::size_t k = 1; k <= n; ++k)
        if (A.join(power(A, a, k), power(A, b, k)) != A.top())
          P.fail("(2) a^k v b^k != 1", {A.name(a), A.name(b), std::to_string(k)});
      for (Elem c = 0; c < n; ++c) {
        if (A.join(a, c) != A.top()) continue;
        if (A.join(a, A.mul(b, c)) != A.top() || A.join(a, A.meet(b, c)) != A.top())
          P.fail("(3) a v bc != 1", {A.name(a), A.name(b), A.name(c)});
      }
    }
  return P.done();
}

TheoremReport l2_2(const Analysis& X) {
  Probe P("L2.2");
  const Quantale& A = X.q();
  const std::size_t n = A.size();
  auto r = [&](Elem x) { return A.radical(x); };
  for (Elem a = 0; a < n; ++a) {
    if (!A.leq(a, r(a))) P.fail("(1) a !<= rho(a)", {A.name(a)});
    if ((r(a) == A.top()) != (a == A.top())) P.fail("(3) rho(a) = 1 iff a = 1", {A.name(a)});
    if (r(r(a)) != r(a)) P.fail("(5) rho is not idempotent", {A.name(a)});
    for (std::size_t k = 1; k <= n; ++k)
      if (r(power(A, a, k)) != r(a)) P.fail("(7) rho(a^k) != rho(a)", {A.name(a), std::to_string(k)});
    for (Elem b = 0; b < n; ++b) {
      const Elem m = A.meet(r(a), r(b));
      if (r(A.meet(a, b)) != m || r(A.mul(a, b)) != m)
        P.fail("(2) rho(a^b), rho(ab), rho(a)^rho(b) differ", {A.name(a), A.name(b)});
      if (r(A.join(a, b)) != r(A.join(r(a), r(b))))
        P.fail("(4) rho(a v b) != rho(rho(a) v rho(b))", {A.name(a), A.name(b)});
      if ((A.join(r(a), r(b)) == A.top()) != (A.join(a, b) == A.top()))
        P.fail("(6) rho(a) v rho(b) = 1 iff a v b = 1", {A.name(a), A.name(b)});
    }
  }
  return P.done();
}

TheoremReport l2_3(const Analysis& X) {
  Probe P("L2.3");
  const Quantale& A = X.q();
  const SubQuantale& R = X.radical();
  if (embed(R, R.q.spec()) != A.spec()) P.fail("Spec(A) != Spec(R(A))", labels(A, embed(R, R.q.spec())));
  if (embed(R, R.q.max()) != A.max()) P.fail("Max(A) != Max(R(A))", labels(A, embed(R, R.q.max())));
  return P.done();
}

TheoremReport l2_4(const Analysis& X) {
  Probe P("L2.4");
  const Quantale& A = X.q();
  const std::size_t n = A.size();
  for (Elem a = 0; a < n; ++a) {
    if (radical_via_powers(A, a) != A.radical(a)) P.fail("(1) power form of rho(a) differs", {A.name(a)});
    for (Elem c = 0; c < n; ++c) {
      bool some = false;
      for (std::size_t k = 1; k <= n && !some; ++k) some = A.leq(power(A, c, k), a);
      if (A.leq(c, A.radical(a)) != some) P.fail("(2) c <= rho(a) iff c^k <= a", {A.name(c), A.name(a)});
    }
  }
  return P.done();
}

TheoremReport l2_5(const Analysis& X) {
  Probe P("L2.5");
  const Quantale& A = X.q();
  const SubQuantale& R = X.radical();
  P.note("every element is compact at finite scale, so K(R(A)) is all of R(A)");
  ElemSet image;
  for (Elem a = 0; a < A.size(); ++a) image.insert(A.radical(a));
  if (embed(R, R.q.all()) != image) P.fail("R(A) is not rho(K(A))");
  if (!R.q.is_frame()) P.fail("R(A) is not a frame");
  if (!R.q.lattice().is_distributive()) P.fail("R(A) is not distributive");
  for (Elem i = 0; i < R.q.size(); ++i)
    for (Elem j = 0; j < R.q.size(); ++j) {
      const Elem a = R.embed[i], b = R.embed[j];
      if (R.embed[R.q.join(i, j)] != A.radical(A.join(a, b)))
        P.fail("join in R(A) is not rho(a v b)", {A.name(a), A.name(b)});
      if (R.embed[R.q.meet(i, j)] != A.meet(a, b))
        P.fail("meet in R(A) is not the meet of A", {A.name(a), A.name(b)});
    }
  return P.done();
}

TheoremReport l2_6(const Analysis& X) {
  Probe P("L2.6");
  const Quantale& A = X.q();
  P.note("away from a = 0 the spectra of [rho(a)) are compared with V(a)");
  for (Elem a = 0; a < A.size(); ++a) {
    const Interval iv = interval_quantale(A, A.radical(a));
    ElemSet spec, max;
    for (Elem i : iv.q.spec()) spec.insert(iv.embed[i]);
    for (Elem i : iv.q.max()) max.insert(iv.embed[i]);
    if (!is_semiprime(iv.q)) P.fail("[rho(a)) is not semiprime", {A.name(a)});
    if (spec != v_set(A, a)) P.fail("Spec([rho(a))) != V(a)", {A.name(a)});
    if (max != (A.max() & A.up(a))) P.fail("Max([rho(a))) != Max(A) n V(a)", {A.name(a)});
    if (a == A.bot() && (spec != A.spec() || max != A.max()))
      P.fail("Spec or Max of [rho(0)) differs from A");
  }
  return P.done();
}

TheoremReport l2_7(const Analysis& X) {
  Probe P("L2.7");
  const Quantale& A = X.q();
  P.note("compactness of u_a(c) holds trivially at finite scale");
  for (Elem a = 0; a < A.size(); ++a) {
    const Interval iv = interval_quantale(A, a);
    const auto& u = iv.u;
    if (u[A.bot()] != iv.q.bot()) P.fail("u_a(0) is not the bottom of [a)", {A.name(a)});
    if (u[A.top()] != iv.q.top()) P.fail("u_a(1) != 1", {A.name(a)});
    for (Elem x = 0; x < A.size(); ++x)
      for (Elem y = 0; y < A.size(); ++y) {
        if (u[A.join(x, y)] != iv.q.join(u[x], u[y]))
          P.fail("u_a does not preserve joins", {A.name(a), A.name(x), A.name(y)});
        if (u[A.mul(x, y)] != iv.q.mul(u[x], u[y]))
          P.fail("u_a does not preserve products", {A.name(a), A.name(x), A.name(y)});
      }
  }
  return P.done();
}

// -- topology --------------------------------------------------------------

TheoremReport top_orientation(const Analysis& X) {
  Probe P("TOP.orientation");
  const FiniteSpace &Z = X.zariski(), &F = X.flat();
  if (Z.ids() != F.ids()) P.fail("Zariski and flat spaces have different points");
  for (std::size_t i = 0; i < Z.size(); ++i)
    if (Z.up(i) != F.up(i)) P.fail("point orders differ", {Z.labels()[i]});
  guard_subsets(X, Z.size());
  const std::uint64_t limit = std::uint64_t{1} << Z.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const ElemSet s = ElemSet::from_bits(bits);
    if (Z.is_closed(s) != F.is_open(s)) P.fail("Zariski-closed differs from flat-open", labels(Z, s));
    if (Z.is_closed(s) != (Z.up_closure(s) == s)) P.fail("Zariski-closed set is not an up-set", labels(Z, s));
  }
  return P.done();
}

TheoremReport top_basis(const Analysis& X) {
  Probe P("TOP.basis");
  const Quantale& A = X.q();
  const FiniteSpace &Z = X.zariski(), &F = X.flat();
  std::vector<ElemSet> d_basis, v_basis;
  for (Elem c = 0; c < A.size(); ++c) {
    d_basis.push_back(X.points(d_set(A, c)));
    v_basis.push_back(X.points(v_set(A, c)));
  }
  const FiniteSpace zb = from_open_basis(Z.ids(), Z.labels(), d_basis);
  const FiniteSpace fb = from_open_basis(F.ids(), F.labels(), v_basis);
  if (!same_topology(zb, Z, X.guard())) P.fail("the sets D(c) do not generate the Zariski topology");
  if (!same_topology(fb, F, X.guard())) P.fail("the sets V(c) do not generate the flat topology");
  // Every Zariski-closed set is some V(a).
  auto closed = closed_sets(Z, X.guard());
  for (ElemSet c : closed) {
    bool found = false;
    for (ElemSet v : v_basis) found = found || v == c;
    if (!found) P.fail("a Zariski-closed set is no V(a)", labels(Z, c));
  }
  return P.done();
}

TheoremReport top_closure(const Analysis& X) {
  Probe P("TOP.closure");
  const Quantale& A = X.q();
  const FiniteSpace& F = X.flat();
  for (std::size_t i = 0; i < F.size(); ++i)
    if (F.id_set(F.closure(ElemSet::single(i))) != lambda_set(A, F.id(i)))
      P.fail("flat closure of {p} is not Lambda(p)", {F.labels()[i]});
  guard_subsets(X, F.size());
  const std::uint64_t limit = std::uint64_t{1} << F.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const ElemSet s = ElemSet::from_bits(bits);
    ElemSet u;
    for (std::size_t i : s) u |= lambda_set(A, F.id(i));
    if (F.id_set(F.closure(s)) != u) P.fail("flat closure of S is not the union of Lambda(p)", labels(F, s));
  }
  return P.done();
}

TheoremReport top_degenerate(const Analysis& X) {
  Probe P("TOP.degenerate");
  P.note("degenerate at finite scale");
  const FiniteSpace mz = subspace(X.zariski(), min_points(X));
  const FiniteSpace mf = subspace(X.flat(), min_points(X));
  for (const FiniteSpace* S : {&mz, &mf}) {
    if (closed_sets(*S, X.guard()).size() != (std::size_t{1} << S->size()))
      P.fail("Min is not discrete", S->labels());
  }
  for (const FiniteSpace* S : {&X.zariski(), &X.flat(), &mz, &mf, &X.vir_zariski(), &X.lattice_zariski()})
    if (!is_compact(*S)) P.fail("a finite space is not compact");
  return P.done();
}

TheoremReport top_continuity(const Analysis& X) {
  Probe P("TOP.continuity");
  const Quantale& A = X.q();
  const SpecTransport t = spec_transport(X.ret());
  const FiniteSpace& Y = X.lattice_zariski();
  auto agree = [&](const FiniteSpace& S, const FiniteSpace& T, const std::vector<std::size_t>& f,
                   const char* what) {
    if (is_continuous(S, T, f) != is_continuous_by_preimage(S, T, f, X.guard()))
      P.fail(std::string("continuity criteria disagree on ") + what);
  };
  agree(X.zariski(), Y, t.zariski_map, "u");
  const FiniteSpace lf = ideal_flat_space(X.lat());
  agree(X.flat(), lf, t.zariski_map, "u (flat)");
  std::vector<std::size_t> id(X.zariski().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  agree(X.zariski(), X.flat(), id, "Zariski to flat identity");
  agree(X.flat(), X.zariski(), id, "flat to Zariski identity");
  // The Pierce map s_A.
  const FiniteSpace sp = pierce_space(A);
  const Pierce pc = pierce(A, X.vir());
  std::vector<std::size_t> s(X.zariski().size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = *sp.index_of_id(pc.s_map[X.zariski().id(i)]);
  agree(X.zariski(), sp, s, "s_A (Zariski)");
  agree(X.flat(), sp, s, "s_A (flat)");
  return P.done();
}

}  // namespace

void add_s2(std::vector<TheoremEntry>& out) {
  out.push_back({"RES", "s2", "residuation and negation", residuation});
  out.push_back({"SPEC", "s2", "spectra and radical by definition", spectra});
  out.push_back({"L2.1", "s2", "comaximal elements", l2_1});
  out.push_back({"L2.2", "s2", "arithmetic of the radical", l2_2});
  out.push_back({"L2.3", "s2", "spectra of R(A)", l2_3});
  out.push_back({"L2.4", "s2", "radical through powers", l2_4});
  out.push_back({"L2.5", "s2", "R(A) is a coherent frame", l2_5});
  out.push_back({"L2.6", "s2", "[rho(a)) is semiprime", l2_6});
  out.push_back({"L2.7", "s2", "u_a is an integral morphism", l2_7});
}

void add_topology(std::vector<TheoremEntry>& out) {
  out.push_back({"TOP.orientation", "topology", "Zariski and flat orientations", top_orientation});
  out.push_back({"TOP.basis", "topology", "D(c) and V(c) bases", top_basis});
  out.push_back({"TOP.closure", "topology", "flat closure is Lambda", top_closure});
  out.push_back({"TOP.degenerate", "topology", "finite-scale degeneracies", top_degenerate});
  out.push_back({"TOP.continuity", "topology", "continuity criteria agree", top_continuity});
}

}  // namespace qlab::detail
