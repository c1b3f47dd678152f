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

#include <set>

#include "helpers.hpp"
#include "oracle.hpp"
#include "qlab/analysis.hpp"
#include "qlab/classify.hpp"
#include "qlab/generators.hpp"
#include "qlab/verify.hpp"

using namespace qlab;

namespace {

ClassFlags flags(bool s, bool n, bool m, bool pf, bool pu, bool pp, bool h) {
  ClassFlags f;
  f.semiprime = s;
  f.normal = n;
  f.mp = m;
  f.pf = pf;
  f.purified = pu;
  f.pp = pp;
  f.hyperarchimedean = h;
  return f;
}

Status status_of(const std::string& fixture_name, const std::string& id) {
  const Analysis X(fixture(fixture_name));
  const auto r = verify(X, {id});
  REQUIRE(r.size() == 1);
  return r[0].status;
}

}  // namespace

TEST_CASE("class flags of the fixtures", "[classify]") {
  CHECK(classify(fixture("Z12")).flags == flags(false, true, true, false, true, false, true));
  CHECK(classify(fixture("CHAIN3")).flags == flags(true, true, true, true, true, true, false));
  CHECK(classify(fixture("WEDGE5")).flags == flags(true, true, false, false, false, false, false));
  const ClassFlags b = classify(fixture("BOOL4")).flags;
  CHECK(b.normal);
  CHECK(b.pp);
  CHECK(b.hyperarchimedean);
}

TEST_CASE("individual class predicates on the fixtures", "[classify]") {
  CHECK(is_normal_quantale(fixture("WEDGE5")));
  CHECK(is_normal_quantale(fixture("CHAIN3")));
  CHECK_FALSE(is_mp_quantale(fixture("WEDGE5")));
  CHECK(is_mp_quantale(fixture("Z12")));
  CHECK(is_pf_quantale(fixture("CHAIN3")));
  CHECK_FALSE(is_pf_quantale(fixture("WEDGE5")));
  CHECK_FALSE(is_pf_quantale(fixture("Z12")));
  CHECK(is_purified(fixture("Z12")));
  CHECK_FALSE(is_purified(fixture("WEDGE5")));
  CHECK(is_purified(fixture("CHAIN3")));
  CHECK(is_pp_quantale(fixture("CHAIN3")));
  CHECK_FALSE(is_pp_quantale(fixture("WEDGE5")));
}

TEST_CASE("failed class conditions carry witnesses", "[classify]") {
  const ClassificationReport r = classify(fixture("WEDGE5"));
  CHECK(r.witnesses.count("mp") == 1);
  CHECK_FALSE(r.witnesses.at("mp").empty());
  CHECK(r.witnesses.count("pf") == 1);
}

TEST_CASE("class predicates agree with the definitional oracle", "[classify]") {
  for (const auto& e : testing::small_corpus()) {
    const Quantale& A = e.quantale;
    INFO(e.source);
    const ClassFlags f = classify(A).flags;
    CHECK(f.semiprime == oracle::semiprime(A));
    CHECK(f.normal == oracle::normal(A));
    CHECK(f.mp == oracle::mp(A));
    CHECK(f.pf == oracle::pf(A));
    CHECK(f.purified == oracle::purified(A));
    CHECK(f.pp == oracle::pp(A));
    CHECK(f.hyperarchimedean == oracle::hyperarchimedean(A));
  }
}

TEST_CASE("class implications hold on every entry", "[classify]") {
  for (const auto& e : testing::small_corpus()) {
    const ClassFlags f = classify(e.quantale).flags;
    CHECK(implication_violations(f).empty());
    if (f.pp) CHECK((f.pf && f.purified && f.semiprime));
    if (f.pf) CHECK((f.semiprime && f.mp));
    if (f.semiprime && f.mp) CHECK(f.pf);
    if (f.purified) CHECK(f.mp);
    if (f.hyperarchimedean) CHECK(f.purified);
  }
}

TEST_CASE("implication checker flags an inconsistent vector", "[classify]") {
  CHECK_FALSE(implication_violations(flags(false, true, true, false, false, true, false)).empty());
  CHECK_FALSE(implication_violations(flags(false, true, false, false, false, false, true)).empty());
  CHECK(implication_violations(flags(true, true, true, true, true, true, true)).empty());
}

TEST_CASE("verify examples on the fixtures", "[verify]") {
  CHECK(status_of("Z12", "T4.13") == Status::Pass);
  CHECK(status_of("WEDGE5", "T5.10") == Status::Pass);
  CHECK(status_of("Z12", "T5.10") == Status::HypothesisNotMet);
  CHECK(status_of("Z12", "P5.16") == Status::HypothesisNotMet);
  CHECK(status_of("CHAIN3", "T8.7") == Status::Pass);
  CHECK(status_of("WEDGE5", "T6.12") == Status::HypothesisNotMet);
}

TEST_CASE("the registry covers every suite with unique ids", "[verify]") {
  std::set<std::string> ids;
  for (const auto& t : registry()) CHECK(ids.insert(t.id).second);
  for (const char* id : {"D3.1", "L3.2", "L3.3", "L3.5", "P3.7", "T4.13", "T4.16", "T4.19", "P5.6", "T5.10",
                         "P5.17", "T6.3", "T6.8", "T6.10", "T6.12", "T6.15", "R6.16", "L7.2", "T7.5", "T8.5",
                         "T8.7", "C8.8"})
    CHECK(ids.count(id) == 1);
  const auto suites = suite_names();
  for (const char* s : {"s2", "s3", "s4", "s5", "s6", "s7", "s8"})
    CHECK(std::find(suites.begin(), suites.end(), s) != suites.end());
  CHECK(resolve_suite("all").size() == registry().size());
  CHECK(resolve_suite("T4.13,T5.10") == std::vector<std::string>{"T4.13", "T5.10"});
  CHECK_FALSE(resolve_suite("s4").empty());
  CHECK_THROWS(resolve_suite("no-such-theorem"));
}

TEST_CASE("theorem aliases resolve to their canonical entries", "[verify]") {
  REQUIRE(find_theorem("R6.17") != nullptr);
  CHECK(find_theorem("R6.17")->id == "R6.16");
  REQUIRE(find_theorem("L4.5") != nullptr);
  CHECK(find_theorem("L4.5")->id == "L4.6");
}

TEST_CASE("batteries record every condition and agree", "[verify]") {
  const std::vector<std::pair<std::string, std::size_t>> sizes = {
      {"P5.6", 14}, {"T6.3", 7}, {"T6.8", 5}, {"T7.5", 8}, {"T8.5", 7}, {"T8.7", 6}};
  for (const auto& e : testing::small_corpus()) {
    const Analysis X(e.quantale, e.id);
    for (const auto& [id, n] : sizes) {
      const TheoremReport r = verify(X, {id}).front();
      if (r.status == Status::HypothesisNotMet) continue;
      CHECK(r.status == Status::Pass);
      REQUIRE(r.conditions.size() == n);
      for (const auto& c : r.conditions) CHECK(c.value == r.conditions.front().value);
    }
  }
}

TEST_CASE("hypothesis gates follow the class flags", "[verify]") {
  for (const auto& e : testing::small_corpus()) {
    const Analysis X(e.quantale, e.id);
    const ClassFlags& f = X.flags();
    CHECK((verify(X, {"T5.10"}).front().status == Status::HypothesisNotMet) == !f.semiprime);
    CHECK((verify(X, {"T6.12"}).front().status == Status::HypothesisNotMet) == !f.pf);
    CHECK((verify(X, {"C7.6"}).front().status == Status::HypothesisNotMet) == !f.hyperarchimedean);
    CHECK((verify(X, {"L8.1"}).front().status == Status::HypothesisNotMet) == !f.pp);
  }
}

TEST_CASE("full registry on the small corpus has no failures", "[verify]") {
  const auto results = verify_corpus(testing::small_corpus(), resolve_suite("all"), 2);
  for (const auto& r : results) {
    INFO(r.source);
    CHECK(r.error.empty());
    for (const auto& t : r.reports) {
      INFO(t.id << ": " << t.detail);
      CHECK_FALSE(t.failed());
    }
  }
}

TEST_CASE("failing report carries a replayable witness", "[verify]") {
  Probe P("X");
  P.fail("first", {"a"});
  P.fail("second", {"b"});
  const TheoremReport r = P.done();
  CHECK(r.status == Status::Fail);
  CHECK(r.detail == "first");
  CHECK(r.witness == std::vector<std::string>{"a"});
  Probe Q("Y");
  Q.condition("one", true);
  Q.condition("two", false);
  Q.require_all_equal();
  CHECK(Q.done().failed());
}
