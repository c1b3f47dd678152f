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

#include "qlab/purity.hpp"

#include <string>
#include <utility>

#include "qlab/error.hpp"

namespace qlab {

namespace {

void require_m_prime(const Quantale& A, Elem p) {
  if (!A.spec().contains(p))
    throw Error(ErrorKind::NotMPrime, "element is not m-prime", {A.name(p)});
}

Elem join_where(const Quantale& A, ElemSet s) { return A.join_all(s); }

std::string ideal_label(const FiniteLattice& L, const LatticeIdeal& I) {
  return "(" + L.name(I.generator) + "]";
}

}  // namespace

bool is_pure(const Quantale& A, Elem a) {
  for (Elem c : A.down(a))
    if (A.join(a, A.neg(c)) != A.top()) return false;
  return true;
}

bool is_w_pure(const Quantale& A, Elem a) {
  const Elem r0 = A.radical(A.bot());
  for (Elem c : A.down(a))
    if (A.join(a, A.residuum(c, r0)) != A.top()) return false;
  return true;
}

Elem vir_op(const Quantale& A, Elem a) {
  ElemSet s;
  for (Elem b : A.down(a))
    if (is_pure(A, b)) s.insert(b);
  return join_where(A, s);
}

Elem ker_op(const Quantale& A, Elem a) {
  ElemSet s;
  for (Elem c : A.down(a))
    if (A.join(a, A.neg(c)) == A.top()) s.insert(c);
  return join_where(A, s);
}

Elem o_op(const Quantale& A, Elem a) {
  ElemSet s;
  for (Elem u = 0; u < A.size(); ++u)
    for (Elem v = 0; v < A.size(); ++v)
      if (!A.leq(v, a) && A.mul(u, v) == A.bot()) {
        s.insert(u);
        break;
      }
  return join_where(A, s);
}

Elem o_via_annihilator(const Quantale& A, Elem a) {
  ElemSet s;
  for (Elem u = 0; u < A.size(); ++u)
    if (!A.leq(A.neg(u), a)) s.insert(u);
  return join_where(A, s);
}

Elem o_tilde(const Quantale& A, Elem p) {
  require_m_prime(A, p);
  const Elem r0 = A.radical(A.bot());
  ElemSet s;
  for (Elem c : A.down(p))
    if (!A.leq(A.residuum(c, r0), p)) s.insert(c);
  return join_where(A, s);
}

Elem omega(const Quantale& A, Elem p) {
  require_m_prime(A, p);
  return A.meet_all(lambda_set(A, p));
}

Elem kappa(const Quantale& A, Elem a) {
  Elem k = A.top();
  for (Elem m : A.max())
    if (A.leq(a, m)) k = A.meet(k, o_op(A, m));
  return k;
}

Elem jacobson_r(const Quantale& A, Elem a) { return A.meet_all(A.max() & A.up(a)); }

ElemSet regular_elements(const Quantale& A) {
  const ElemSet b = A.boolean_center();
  ElemSet r;
  for (Elem x = 0; x < A.size(); ++x)
    if (A.join_all(b & A.down(x)) == x) r.insert(x);
  return r;
}

PurityTables purity_tables(const Quantale& A) {
  PurityTables t;
  const std::size_t n = A.size();
  for (Elem a = 0; a < n; ++a) {
    if (is_pure(A, a)) t.pure.insert(a);
    if (is_w_pure(A, a)) t.w_pure.insert(a);
  }
  t.regular = regular_elements(A);
  t.vir_of.resize(n);
  t.ker_of.resize(n);
  t.o_of.resize(n);
  t.o_tilde_of.resize(n);
  for (Elem a = 0; a < n; ++a) {
    t.vir_of[a] = A.join_all(t.pure & A.down(a));
    t.ker_of[a] = ker_op(A, a);
    t.o_of[a] = o_op(A, a);
    if (A.spec().contains(a)) t.o_tilde_of[a] = o_tilde(A, a);
  }
  ElemSet proper = t.regular;
  proper.erase(A.top());
  t.sp = A.lattice().maximal(proper);
  return t;
}

SubQuantale vir_frame(const Quantale& A) {
  std::vector<Elem> embed;
  std::vector<std::optional<Elem>> index(A.size());
  for (Elem a = 0; a < A.size(); ++a)
    if (is_pure(A, a)) {
      index[a] = embed.size();
      embed.push_back(a);
    }
  const std::size_t k = embed.size();
  std::vector<std::string> names;
  std::vector<ElemSet> up(k);
  for (Elem i = 0; i < k; ++i) {
    names.push_back(A.name(embed[i]));
    for (Elem j = 0; j < k; ++j)
      if (A.leq(embed[i], embed[j])) up[i].insert(j);
  }
  FiniteLattice L = FiniteLattice::from_order(std::move(names), std::move(up));
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) {
      if (embed[L.join(i, j)] != A.join(embed[i], embed[j]) ||
          embed[L.meet(i, j)] != A.meet(embed[i], embed[j]))
        throw Error(ErrorKind::AxiomFailure, "pure elements not closed under join and meet",
                    {A.name(embed[i]), A.name(embed[j])});
    }
  if (!L.is_distributive())
    throw Error(ErrorKind::AxiomFailure, "pure elements do not form a frame");
  return SubQuantale{frame_of(L), std::move(embed), std::move(index)};
}

Pierce pierce(const Quantale& A, const SubQuantale& vir) {
  const ElemSet b = A.boolean_center();
  Pierce out;
  ElemSet proper = regular_elements(A);
  proper.erase(A.top());
  out.sp = A.lattice().maximal(proper);
  out.s_map.assign(A.size(), A.top());
  ElemSet s_image, t_image;
  for (Elem p : A.spec()) {
    out.s_map[p] = A.join_all(b & A.down(p));
    s_image.insert(out.s_map[p]);
  }
  out.t_map.assign(vir.q.size(), A.top());
  for (Elem i : vir.q.spec()) {
    out.t_map[i] = A.join_all(b & A.down(vir.embed[i]));
    t_image.insert(out.t_map[i]);
  }
  if (s_image != out.sp)
    throw Error(ErrorKind::AxiomFailure, "s is not a surjection onto Sp(A)",
                labels(A, (s_image - out.sp) | (out.sp - s_image)));
  if (t_image != out.sp)
    throw Error(ErrorKind::AxiomFailure, "t is not a surjection onto Sp(A)",
                labels(A, (t_image - out.sp) | (out.sp - t_image)));
  return out;
}

FiniteSpace pierce_space(const Quantale& A) {
  ElemSet proper = regular_elements(A);
  proper.erase(A.top());
  const ElemSet sp = A.lattice().maximal(proper);
  std::vector<Elem> ids(sp.begin(), sp.end());
  std::vector<std::string> names;
  for (Elem p : ids) names.push_back(A.name(p));
  std::vector<ElemSet> basis;
  for (Elem e : A.boolean_center()) {
    ElemSet u;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (!A.leq(e, ids[i])) u.insert(i);
    basis.push_back(u);
  }
  return from_open_basis(std::move(ids), std::move(names), basis);
}

TheoremReport check_ker_sigma(const Reticulation& R) {
  Probe P("T4.13");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  const bool semiprime = is_semiprime(A);
  for (Elem a = 0; a < A.size(); ++a)
    if (R.star(ker_op(A, a)).members != sigma_set(L, R.star(a)))
      P.fail("Ker(a)* != sigma(a*)", {A.name(a)});
  // The lower side agrees with rho(Ker(I_*)) in general; the bare Ker(I_*)
  // is only reached when rho(0) = 0.
  std::vector<std::string> literal_misses;
  for (const auto& I : all_ideals(L)) {
    LatticeIdeal sig = make_ideal(L, sigma_set(L, I));
    const Elem lhs = R.lower(sig);
    const Elem k = ker_op(A, R.lower(I));
    if (lhs != A.radical(k)) P.fail("sigma(I)_* != rho(Ker(I_*))", {ideal_label(L, I)});
    if (lhs != k) {
      if (semiprime)
        P.fail("sigma(I)_* != Ker(I_*)", {ideal_label(L, I)});
      else
        literal_misses.push_back(ideal_label(L, I));
    }
  }
  if (!literal_misses.empty()) {
    std::string ids;
    for (const auto& m : literal_misses) ids += (ids.empty() ? "" : " ") + m;
    P.note("sigma(I)_* = Ker(I_*) fails without semiprimeness at " + ids + "; rho(Ker(I_*)) holds");
  }
  return P.done();
}

TheoremReport check_w_pure_star_sigma(const Reticulation& R) {
  Probe P("L4.8");
  const Quantale& A = R.source();
  for (Elem a = 0; a < A.size(); ++a)
    if (is_w_pure(A, a) && !is_sigma_ideal(R.lattice(), R.star(a)))
      P.fail("a w-pure but a* not a sigma-ideal", {A.name(a)});
  return P.done();
}

TheoremReport check_sigma_lower_w_pure(const Reticulation& R) {
  Probe P("L4.9");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  for (const auto& J : all_ideals(L))
    if (is_sigma_ideal(L, J) && !is_w_pure(A, R.lower(J)))
      P.fail("J sigma-ideal but J_* not w-pure", {ideal_label(L, J)});
  return P.done();
}

TheoremReport check_sigma_lower_pure(const Reticulation& R) {
  Probe P("C4.10");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  if (!is_semiprime(A)) return P.not_met("not semiprime");
  for (const auto& J : all_ideals(L))
    if (is_sigma_ideal(L, J) && !is_pure(A, R.lower(J)))
      P.fail("J sigma-ideal but J_* not pure", {ideal_label(L, J)});
  return P.done();
}

TheoremReport check_w_pure_radical_closure(const Reticulation& R) {
  Probe P("C4.11");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  for (Elem a = 0; a < A.size(); ++a)
    if (is_w_pure(A, a) && !is_w_pure(A, A.radical(a)))
      P.fail("a w-pure but rho(a) not w-pure", {A.name(a)});
  for (const auto& J : all_ideals(L))
    if (is_sigma_ideal(L, J) != is_w_pure(A, R.lower(J)))
      P.fail("sigma-ideal disagrees with J_* w-pure", {ideal_label(L, J)});
  return P.done();
}

TheoremReport check_ker_membership(const Quantale& A) {
  Probe P("L4.12");
  for (Elem a = 0; a < A.size(); ++a) {
    const Elem k = ker_op(A, a);
    for (Elem c = 0; c < A.size(); ++c)
      if (A.leq(c, k) != (A.join(a, A.neg(c)) == A.top()))
        P.fail("c <= Ker(a) disagrees with a v c-perp = 1", {A.name(a), A.name(c)});
  }
  return P.done();
}

TheoremReport check_w_pure_radical_ker(const Reticulation& R) {
  Probe P("T4.14");
  const Quantale& A = R.source();
  for (Elem a : A.radical_elements()) {
    if (!is_w_pure(A, a)) continue;
    const Elem k = ker_op(A, a);
    if (A.radical(k) != a) P.fail("a != rho(Ker(a))", {A.name(a)});
    if (k != vir_op(A, a)) P.fail("Ker(a) != Vir(a)", {A.name(a)});
  }
  return P.done();
}

TheoremReport check_w_iso(const Reticulation& R) {
  Probe P("T4.16");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  ElemSet pure;
  for (Elem a = 0; a < A.size(); ++a)
    if (is_pure(A, a)) pure.insert(a);
  // sigma-ideals are the pure elements of Id(L(A)); Id(L(A)) is L(A) as a frame.
  const Quantale idl = frame_of(L);
  ElemSet sigma;
  for (const auto& J : all_ideals(L)) {
    bool s = is_sigma_ideal(L, J);
    if (s != is_pure(idl, J.generator))
      P.fail("sigma-ideal disagrees with purity in Id(L(A))", {ideal_label(L, J)});
    if (s) sigma.insert(J.generator);
  }
  ElemSet image;
  for (Elem a : pure) {
    const LatticeIdeal& w = R.star(a);
    if (!sigma.contains(w.generator)) P.fail("w(a) is not a sigma-ideal", {A.name(a)});
    if (image.contains(w.generator)) P.fail("w is not injective", {A.name(a)});
    image.insert(w.generator);
    if (vir_op(A, R.lower(w)) != a) P.fail("Vir(w(a)_*) != a", {A.name(a)});
  }
  if (image != sigma) P.fail("w is not onto the sigma-ideals", labels(L, sigma - image));
  for (Elem g : sigma) {
    LatticeIdeal J = principal_ideal(L, g);
    if (R.star(vir_op(A, R.lower(J))) != J)
      P.fail("w(Vir(J_*)) != J", {ideal_label(L, J)});
  }
  for (Elem a : pure)
    for (Elem b : pure) {
      const auto &wa = R.star(a), &wb = R.star(b);
      if (R.star(A.join(a, b)) != ideal_join(L, wa, wb))
        P.fail("w does not preserve joins", {A.name(a), A.name(b)});
      if (R.star(A.meet(a, b)) != ideal_meet(L, wa, wb))
        P.fail("w does not preserve meets", {A.name(a), A.name(b)});
    }
  return P.done();
}

TheoremReport check_o_transfer(const Reticulation& R) {
  Probe P("T4.19");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  for (Elem p : A.spec())
    if (o_ideal(L, R.star(p)) != R.star(o_tilde(A, p)))
      P.fail("O(p*) != O~(p)*", {A.name(p)});
  for (const auto& rec : prime_spectrum_lattice(L)) {
    Elem lp = R.lower(rec.ideal);
    if (R.lower(o_ideal(L, rec.ideal)) != o_tilde(A, lp))
      P.fail("O(P)_* != O~(P_*)", {ideal_label(L, rec.ideal)});
  }
  return P.done();
}

TheoremReport check_o_transfer_semiprime(const Reticulation& R) {
  Probe P("C4.20");
  const Quantale& A = R.source();
  const FiniteLattice& L = R.lattice();
  if (!is_semiprime(A)) return P.not_met("not semiprime");
  for (Elem p : A.spec())
    if (o_ideal(L, R.star(p)) != R.star(o_op(A, p))) P.fail("O(p*) != O(p)*", {A.name(p)});
  for (const auto& rec : prime_spectrum_lattice(L))
    if (R.lower(o_ideal(L, rec.ideal)) != o_op(A, R.lower(rec.ideal)))
      P.fail("O(P)_* != O(P_*)", {ideal_label(L, rec.ideal)});
  return P.done();
}

TheoremReport sigma_transfer_check(const Reticulation& R) {
  return combine("sigma-transfer",
                 {check_ker_sigma(R), check_w_pure_star_sigma(R), check_sigma_lower_w_pure(R),
                  check_w_pure_radical_closure(R)});
}

TheoremReport w_iso_check(const Reticulation& R) {
  return combine("w-iso", {check_w_iso(R), check_w_pure_radical_ker(R), check_o_transfer(R),
                           check_o_transfer_semiprime(R)});
}

}  // namespace qlab
