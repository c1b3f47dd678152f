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

#include "helpers.hpp"
#include "oracle.hpp"
#include "qlab/canonical.hpp"
#include "qlab/error.hpp"
#include "qlab/generators.hpp"
#include "qlab/quantale.hpp"

using namespace qlab;
using testing::el;
using testing::els;

namespace {

MultTable table_of(const Quantale& A) { return A.mult_table(); }

ErrorKind build_error(const FiniteLattice& L, const MultTable& m) {
  const auto e = Quantale::validate(L, m);
  REQUIRE(e.has_value());
  return e->kind();
}

}  // namespace

TEST_CASE("the meet table of any corpus lattice is a valid quantale", "[quantale]") {
  for (const auto& e : testing::small_corpus()) {
    const Quantale F = frame_of(e.quantale.lattice());
    CHECK(F.is_frame());
    CHECK_FALSE(Quantale::validate(F.lattice(), F.mult_table()).has_value());
  }
}

TEST_CASE("the Z12 table validates", "[quantale]") {
  const Quantale Z = fixture("Z12");
  CHECK_FALSE(Quantale::validate(Z.lattice(), table_of(Z)).has_value());
  CHECK(canonical_id(Z) == canonical_id(gen_zn(12)));
}

TEST_CASE("broken multiplication tables are rejected with the violated axiom", "[quantale]") {
  const Quantale C = fixture("CHAIN3");
  const Elem m = el(C, "m"), one = el(C, "1"), zero = el(C, "0");
  {
    MultTable t = table_of(C);
    t[m][m] = one;
    const auto k = build_error(C.lattice(), t);
    CHECK((k == ErrorKind::NotIntegral || k == ErrorKind::NotDistributiveOverJoin));
  }
  {
    MultTable t = table_of(C);
    t[m][zero] = m;
    t[zero][m] = m;
    CHECK(build_error(C.lattice(), t) == ErrorKind::ZeroNotAbsorbing);
  }
  {
    MultTable t = table_of(C);
    t[one][m] = zero;
    CHECK(build_error(C.lattice(), t) == ErrorKind::NotCommutative);
  }
  {
    MultTable t = table_of(C);
    t[one][m] = zero;
    t[m][one] = zero;
    CHECK(build_error(C.lattice(), t) == ErrorKind::NotIntegral);
  }
  {
    const Quantale B = fixture("BOOL4");
    MultTable t = table_of(B);
    const Elem a = el(B, "a");
    t[a][a] = B.bot();  // a.(a v b) = a but a.a v a.b = 0
    CHECK(build_error(B.lattice(), t) == ErrorKind::NotDistributiveOverJoin);
  }
  CHECK_THROWS_AS(Quantale::build(C.lattice(), MultTable(3, std::vector<Elem>(3, 0))), Error);
}

TEST_CASE("residuum and negation examples", "[quantale]") {
  const Quantale Z = fixture("Z12");
  CHECK(Z.residuum(el(Z, "(4)"), el(Z, "(6)")) == el(Z, "(3)"));
  CHECK(oracle::residuum(Z, el(Z, "(4)"), el(Z, "(6)")) == el(Z, "(3)"));
  CHECK(Z.neg(el(Z, "(2)")) == el(Z, "(6)"));
  CHECK(Z.neg(el(Z, "(3)")) == el(Z, "(4)"));
  for (const auto& e : testing::small_corpus()) {
    const Quantale& A = e.quantale;
    for (Elem b = 0; b < A.size(); ++b) CHECK(A.residuum(A.top(), b) == b);
    CHECK(A.neg(A.bot()) == A.top());
  }
}

TEST_CASE("residuation adjunction holds for every triple", "[quantale]") {
  for (const auto& e : testing::small_corpus()) {
    const Quantale& A = e.quantale;
    for (Elem a = 0; a < A.size(); ++a)
      for (Elem b = 0; b < A.size(); ++b) {
        CHECK(A.residuum(a, b) == oracle::residuum(A, a, b));
        for (Elem c = 0; c < A.size(); ++c) CHECK(A.leq(a, A.residuum(b, c)) == A.leq(A.mul(a, b), c));
      }
  }
}

TEST_CASE("frame residuum is the Heyting implication", "[quantale]") {
  const Quantale W = fixture("WEDGE5");
  for (Elem a = 0; a < W.size(); ++a)
    for (Elem b = 0; b < W.size(); ++b) {
      ElemSet xs;
      for (Elem x = 0; x < W.size(); ++x)
        if (W.leq(W.meet(a, x), b)) xs.insert(x);
      CHECK(W.residuum(a, b) == W.join_all(xs));
    }
}

TEST_CASE("spectra of the fixtures", "[quantale]") {
  const Quantale C = fixture("CHAIN3");
  CHECK(C.spec() == els(C, {"0", "m"}));
  CHECK(C.max() == els(C, {"m"}));
  CHECK(C.min() == els(C, {"0"}));
  const Quantale Z = fixture("Z12");
  CHECK(Z.spec() == els(Z, {"(2)", "(3)"}));
  CHECK(Z.max() == Z.spec());
  CHECK(Z.min() == Z.spec());
  const Quantale W = fixture("WEDGE5");
  CHECK(W.spec() == els(W, {"a", "b", "c"}));
  CHECK(W.max() == els(W, {"c"}));
  CHECK(W.min() == els(W, {"a", "b"}));
}

TEST_CASE("spectra, radicals and Boolean centers agree with the oracle", "[quantale]") {
  for (const auto& e : testing::small_corpus()) {
    const Quantale& A = e.quantale;
    INFO(e.source);
    CHECK(A.spec() == oracle::to_set(oracle::spec(A)));
    CHECK(A.max() == oracle::to_set(oracle::maximal(A)));
    CHECK(A.min() == oracle::to_set(oracle::minimal_primes(A)));
    CHECK(A.boolean_center() == oracle::to_set(oracle::boolean_center(A)));
    for (Elem a = 0; a < A.size(); ++a) {
      CHECK(A.radical(a) == oracle::radical(A, a));
      CHECK(oracle::radical_by_powers(A, a) == oracle::radical(A, a));
      CHECK(radical_via_powers(A, a) == A.radical(a));
      CHECK((A.radical(a) == A.top()) == (a == A.top()));
    }
    CHECK(A.max().subset_of(A.spec()));
    for (Elem p : A.spec()) {
      CHECK((A.min() & A.down(p)).size() >= 1);
      CHECK((A.max() & A.up(p)).size() >= 1);
    }
  }
}

TEST_CASE("radical examples", "[quantale]") {
  const Quantale Z = fixture("Z12");
  CHECK(Z.radical(el(Z, "(0)")) == el(Z, "(6)"));
  CHECK(Z.radical(Z.top()) == Z.top());
  const Quantale C = fixture("CHAIN3");
  CHECK(C.radical(C.bot()) == C.bot());
}

TEST_CASE("semiprimeness", "[quantale]") {
  CHECK(is_semiprime(fixture("CHAIN3")));
  CHECK_FALSE(is_semiprime(fixture("Z12")));
  for (const auto& e : testing::small_corpus()) {
    CHECK(is_semiprime(e.quantale) == oracle::semiprime(e.quantale));
    if (e.quantale.is_frame()) CHECK(oracle::semiprime(e.quantale));
  }
}

TEST_CASE("radical frames", "[quantale]") {
  const Quantale Z = fixture("Z12");
  const SubQuantale R = radical_frame(Z);
  CHECK(R.q.size() == 4);
  CHECK(canonical_id(R.q) == canonical_id(fixture("BOOL4")));
  ElemSet carrier;
  for (Elem x : R.embed) carrier.insert(x);
  CHECK(carrier == els(Z, {"(1)", "(2)", "(3)", "(6)"}));
  const Quantale C = fixture("CHAIN3");
  CHECK(canonical_id(radical_frame(C).q) == canonical_id(C));
}

TEST_CASE("Boolean center examples", "[quantale]") {
  const Quantale Z = fixture("Z12");
  CHECK(Z.boolean_center() == els(Z, {"(0)", "(3)", "(4)", "(1)"}));
  const Quantale C = fixture("CHAIN3");
  CHECK(C.boolean_center() == els(C, {"0", "1"}));
  const Quantale B = fixture("BOOL4");
  CHECK(B.boolean_center() == B.all());
}

TEST_CASE("hyperarchimedean examples and oracle", "[quantale]") {
  CHECK(is_hyperarchimedean(fixture("Z12")));
  CHECK_FALSE(is_hyperarchimedean(fixture("CHAIN3")));
  CHECK(is_hyperarchimedean(fixture("BOOL4")));
  for (const auto& e : testing::small_corpus()) {
    CHECK(is_hyperarchimedean(e.quantale) == oracle::hyperarchimedean(e.quantale));
    CHECK(is_hyperarchimedean(e.quantale) == (e.quantale.max() == e.quantale.spec()));
  }
}

TEST_CASE("interval quantales", "[quantale]") {
  const Quantale Z = fixture("Z12");
  {
    const Interval I = interval_quantale(Z, Z.bot());
    CHECK(I.q.size() == Z.size());
    for (Elem x = 0; x < Z.size(); ++x) CHECK(I.embed[I.u[x]] == x);
  }
  {
    const Interval I = interval_quantale(Z, el(Z, "(6)"));
    ElemSet carrier;
    for (Elem x : I.embed) carrier.insert(x);
    CHECK(carrier == els(Z, {"(6)", "(2)", "(3)", "(1)"}));
    const Elem two = I.u[el(Z, "(2)")];
    CHECK(I.embed[I.q.mul(two, two)] == el(Z, "(2)"));
  }
  CHECK(interval_quantale(Z, Z.top()).q.size() == 1);
}

TEST_CASE("interval projections preserve joins, products and the top", "[quantale]") {
  for (const auto& e : testing::small_corpus()) {
    const Quantale& A = e.quantale;
    for (Elem a = 0; a < A.size(); ++a) {
      const Interval I = interval_quantale(A, a);
      CHECK(I.q.top() == I.u[A.top()]);
      for (Elem x = 0; x < A.size(); ++x)
        for (Elem y = 0; y < A.size(); ++y) {
          CHECK(I.u[A.join(x, y)] == I.q.join(I.u[x], I.u[y]));
          CHECK(I.u[A.mul(x, y)] == I.q.mul(I.u[x], I.u[y]));
        }
    }
  }
}

TEST_CASE("lifting property examples", "[quantale]") {
  for (const auto& e : testing::small_corpus()) {
    CHECK(has_lifting_property(e.quantale, e.quantale.radical(e.quantale.bot())));
    CHECK(has_lifting_property(e.quantale, e.quantale.bot()));
  }
  const Quantale C = fixture("CHAIN3");
  CHECK(has_lifting_property(C, el(C, "m")));
}

TEST_CASE("products of quantales", "[quantale]") {
  CHECK(canonical_id(product_quantale(fixture("TWO"), fixture("TWO"))) == canonical_id(fixture("BOOL4")));
  CHECK(product_quantale(fixture("CHAIN3"), fixture("TWO")).size() == 6);
  const Quantale Z = fixture("Z12");
  CHECK(canonical_id(product_quantale(Z, gen_zn(1))) == canonical_id(Z));
}

TEST_CASE("complement facts hold for every pair", "[quantale]") {
  for (const auto& e : testing::small_corpus()) {
    const Quantale& A = e.quantale;
    for (Elem a = 0; a < A.size(); ++a)
      for (Elem b = 0; b < A.size(); ++b) {
        if (A.join(a, b) != A.top()) continue;
        CHECK(A.mul(a, b) == A.meet(a, b));
        CHECK(A.join(A.mul(a, a), A.mul(b, b)) == A.top());
        for (Elem c = 0; c < A.size(); ++c)
          if (A.join(a, c) == A.top()) CHECK(A.join(a, A.mul(b, c)) == A.top());
      }
  }
}
