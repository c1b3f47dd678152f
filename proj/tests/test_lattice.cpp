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

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "helpers.hpp"
#include "qlab/error.hpp"
#include "qlab/generators.hpp"
#include "qlab/lattice.hpp"

using namespace qlab;
using testing::el;

namespace {

FiniteLattice two_chain() { return FiniteLattice::build({"0", "1"}, {{0, 1}}); }
FiniteLattice bool4() { return fixture("BOOL4").lattice(); }
FiniteLattice chain3() { return fixture("CHAIN3").lattice(); }
FiniteLattice wedge5() { return fixture("WEDGE5").lattice(); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

bool brute_distributive(const FiniteLattice& L) {
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      for (Elem z = 0; z < L.size(); ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

}  // namespace

TEST_CASE("two-chain join is max and meet is min", "[lattice]") {
  const FiniteLattice L = two_chain();
  CHECK(L.join(0, 1) == 1);
  CHECK(L.meet(0, 1) == 0);
  CHECK(L.bot() == 0);
  CHECK(L.top() == 1);
}

TEST_CASE("diamond atoms join to top and meet to bottom", "[lattice]") {
  const FiniteLattice L = FiniteLattice::build({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(L.join(el(L, "a"), el(L, "b")) == el(L, "1"));
  CHECK(L.meet(el(L, "a"), el(L, "b")) == el(L, "0"));
}

TEST_CASE("poset without a top is rejected with NoBounds", "[lattice]") {
  CHECK(kind_of([] { FiniteLattice::build({"0", "x", "y"}, {{0, 1}, {0, 2}}); }) == ErrorKind::NoBounds);
}

TEST_CASE("poset with two minimal upper bounds is not a lattice", "[lattice]") {
  // 0 < a,b < c,d < 1 with both a,b below both c,d.
  const auto k = kind_of([] {
    FiniteLattice::build({"0", "a", "b", "c", "d", "1"},
                         {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  });
  CHECK(k == ErrorKind::NotALattice);
}

TEST_CASE("distributivity: chains and BOOL4 yes, M3 no", "[lattice]") {
  CHECK(two_chain().is_distributive());
  CHECK(bool4().is_distributive());
  const FiniteLattice m3 = testing::diamond_m3();
  CHECK_FALSE(m3.is_distributive());
  CHECK_FALSE(brute_distributive(m3));
  CHECK(m3.distributivity_witness().has_value());
  for (const auto& e : testing::small_corpus())
    CHECK(e.quantale.lattice().is_distributive() == brute_distributive(e.quantale.lattice()));
}

TEST_CASE("ideal closure is the down-set of the join", "[lattice]") {
  const FiniteLattice L = bool4();
  const Elem a = el(L, "a"), b = el(L, "b");
  CHECK(ideal_closure(L, ElemSet::single(a)).members == (ElemSet::single(L.bot()) | ElemSet::single(a)));
  CHECK(ideal_closure(L, ElemSet::single(a) | ElemSet::single(b)).members == L.all());
  CHECK(ideal_closure(L, ElemSet::single(L.bot())).members == ElemSet::single(L.bot()));
  CHECK(kind_of([&] { ideal_closure(L, ElemSet{}); }) == ErrorKind::EmptyGenerator);
}

TEST_CASE("every ideal is principal", "[lattice]") {
  for (const auto& e : testing::small_corpus()) {
    const FiniteLattice& L = e.quantale.lattice();
    for (const auto& I : all_ideals(L)) CHECK(I.members == L.down(L.join_all(I.members)));
  }
}

TEST_CASE("prime ideals of the small fixtures", "[lattice]") {
  {
    const auto P = prime_spectrum_lattice(two_chain());
    REQUIRE(P.size() == 1);
    CHECK(P[0].ideal.members == ElemSet::single(0));
    CHECK(P[0].is_maximal);
    CHECK(P[0].is_minimal_prime);
  }
  {
    const FiniteLattice L = bool4();
    std::set<ElemSet> got;
    for (const auto& r : prime_spectrum_lattice(L)) got.insert(r.ideal.members);
    CHECK(got == std::set<ElemSet>{L.down(el(L, "a")), L.down(el(L, "b"))});
  }
  {
    const FiniteLattice L = chain3();
    std::set<ElemSet> got;
    for (const auto& r : prime_spectrum_lattice(L)) got.insert(r.ideal.members);
    CHECK(got == std::set<ElemSet>{L.down(el(L, "0")), L.down(el(L, "m"))});
  }
  CHECK(kind_of([] { prime_spectrum_lattice(testing::diamond_m3()); }) == ErrorKind::NotDistributive);
}

TEST_CASE("prime ideal records agree with the elementwise definition", "[lattice]") {
  for (const auto& e : testing::small_corpus()) {
    const FiniteLattice& L = e.quantale.lattice();
    std::size_t primes = 0;
    for (const auto& I : all_ideals(L)) {
      bool prime = I.members != L.all();
      for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y)
          if (I.contains(L.meet(x, y)) && !I.contains(x) && !I.contains(y)) prime = false;
      CHECK(is_prime_ideal(L, I) == prime);
      primes += prime;
    }
    CHECK(prime_spectrum_lattice(L).size() == primes);
  }
}

TEST_CASE("annihilators", "[lattice]") {
  const FiniteLattice B = bool4();
  CHECK(annihilator(B, principal_ideal(B, el(B, "a"))).members == B.down(el(B, "b")));
  CHECK(annihilator(B, principal_ideal(B, B.bot())).members == B.all());
  const FiniteLattice C = chain3();
  CHECK(annihilator(C, principal_ideal(C, el(C, "m"))).members == ElemSet::single(C.bot()));
}

TEST_CASE("annihilator meets its ideal only in zero", "[lattice]") {
  for (const auto& e : testing::small_corpus()) {
    const FiniteLattice& L = e.quantale.lattice();
    for (const auto& I : all_ideals(L)) {
      const LatticeIdeal J = annihilator(L, I);
      CHECK(is_ideal(L, J.members));
      CHECK((I.members & J.members) == ElemSet::single(L.bot()));
      ElemSet brute;
      for (Elem x = 0; x < L.size(); ++x) {
        bool ok = true;
        for (Elem y : I.members) ok = ok && L.meet(x, y) == L.bot();
        if (ok) brute.insert(x);
      }
      CHECK(J.members == brute);
      CHECK(J.members == L.down(pseudocomplement(L, L.join_all(I.members))));
    }
  }
}

TEST_CASE("sigma sets and sigma-ideals", "[lattice]") {
  const FiniteLattice B = bool4();
  const LatticeIdeal Ia = principal_ideal(B, el(B, "a"));
  CHECK(sigma_set(B, Ia) == B.down(el(B, "a")));
  CHECK(is_sigma_ideal(B, Ia));
  const FiniteLattice C = chain3();
  const LatticeIdeal Im = principal_ideal(C, el(C, "m"));
  CHECK(sigma_set(C, Im) == ElemSet::single(C.bot()));
  CHECK_FALSE(is_sigma_ideal(C, Im));
  CHECK(sigma_set(C, principal_ideal(C, C.top())) == C.all());
}

TEST_CASE("sigma sets are down-closed", "[lattice]") {
  for (const auto& e : testing::small_corpus()) {
    const FiniteLattice& L = e.quantale.lattice();
    for (const auto& I : all_ideals(L)) {
      const ElemSet s = sigma_set(L, I);
      for (Elem x : s) CHECK(L.down(x).subset_of(s));
    }
  }
}

TEST_CASE("lattices of fractions", "[lattice]") {
  {
    const FiniteLattice C = chain3();
    const Fractions F = lattice_of_fractions(C, principal_ideal(C, C.bot()));
    CHECK(F.lattice.size() == 2);
    CHECK(F.projection[el(C, "m")] == F.projection[el(C, "1")]);
  }
  {
    const FiniteLattice B = bool4();
    const Fractions F = lattice_of_fractions(B, principal_ideal(B, el(B, "a")));
    CHECK(F.lattice.size() == 2);
    CHECK(F.projection[el(B, "0")] == F.projection[el(B, "a")]);
    CHECK(F.projection[el(B, "b")] == F.projection[el(B, "1")]);
  }
  {
    const FiniteLattice C = chain3();
    CHECK(kind_of([&] { lattice_of_fractions(C, principal_ideal(C, C.top())); }) == ErrorKind::NotPrime);
  }
}

TEST_CASE("O-ideals of the small fixtures", "[lattice]") {
  const FiniteLattice C = chain3();
  CHECK(o_ideal(C, principal_ideal(C, el(C, "m"))).members == ElemSet::single(C.bot()));
  const FiniteLattice B = bool4();
  CHECK(o_ideal(B, principal_ideal(B, el(B, "a"))).members == B.down(el(B, "a")));
}

TEST_CASE("O(P) is the kernel of the fraction map and the meet of primes below P", "[lattice]") {
  for (const auto& e : testing::small_corpus()) {
    const FiniteLattice& L = e.quantale.lattice();
    const auto primes = prime_spectrum_lattice(L);
    for (const auto& r : primes) {
      const LatticeIdeal O = o_ideal(L, r.ideal);
      const Fractions F = lattice_of_fractions(L, r.ideal);
      ElemSet kernel, below = L.all();
      for (Elem x = 0; x < L.size(); ++x)
        if (F.projection[x] == F.lattice.bot()) kernel.insert(x);
      for (const auto& q : primes)
        if (q.ideal.members.subset_of(r.ideal.members)) below = below & q.ideal.members;
      CHECK(O.members == kernel);
      CHECK(O.members == below);
    }
  }
}

TEST_CASE("lattice class flags of the fixtures", "[lattice]") {
  const LatticeFlags c = classify_lattice(chain3());
  CHECK(c.normal);
  CHECK(c.conormal);
  CHECK(c.stone);
  CHECK_FALSE(classify_lattice(wedge5()).conormal);
  const LatticeFlags b = classify_lattice(bool4());
  CHECK(b.normal);
  CHECK(b.conormal);
  CHECK(b.stone);
  for (const auto& e : testing::small_corpus()) {
    const LatticeFlags f = classify_lattice(e.quantale.lattice());
    if (f.stone) CHECK(f.conormal);
  }
}

TEST_CASE("cover edges of a three-chain", "[lattice]") {
  CHECK(cover_edges(chain3()).size() == 2);
  CHECK(cover_edges(bool4()).size() == 4);
}
