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

// Acceptance run over the default corpus. Prints one PASS/FAIL line per
// criterion and exits 0 exactly when the set of failing criteria equals the
// set given with --expect-fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "qlab/analysis.hpp"
#include "qlab/canonical.hpp"
#include "qlab/classify.hpp"
#include "qlab/corpus.hpp"
#include "qlab/generators.hpp"
#include "qlab/purity.hpp"
#include "qlab/reticulation.hpp"
#include "qlab/verify.hpp"

using namespace qlab;

namespace {

// Pinned limits. All comparisons are exact; there is no numeric tolerance.
constexpr double kReticulationLimitSeconds = 60.0;
constexpr double kEndToEndLimitSeconds = 300.0;
constexpr unsigned kDefaultJobs = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void fail(const std::string& why) {
    if (pass) lines.push_back("first failure: " + why);
    pass = false;
  }
  void info(const std::string& s) { lines.push_back(s); }
};

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// Registry runs with zero-failure bookkeeping.
struct RegistryTally {
  std::size_t pass = 0, fail = 0, not_met = 0, informational = 0, errors = 0;
  std::string first;
};

RegistryTally run_registry(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& ids,
                           unsigned jobs) {
  RegistryTally t;
  for (const auto& r : verify_corpus(corpus, ids, jobs)) {
    if (!r.error.empty()) {
      ++t.errors;
      if (t.first.empty()) t.first = r.source + ": " + r.error;
    }
    for (const auto& rep : r.reports) switch (rep.status) {
        case Status::Pass: ++t.pass; break;
        case Status::HypothesisNotMet: ++t.not_met; break;
        case Status::Informational: ++t.informational; break;
        case Status::Fail:
          ++t.fail;
          if (t.first.empty()) t.first = r.source + " " + rep.id + ": " + rep.detail + " [" + join(rep.witness) + "]";
          break;
      }
  }
  return t;
}

void require_clean(Outcome& o, const RegistryTally& t, const std::string& what) {
  std::ostringstream s;
  s << what << ": " << t.pass << " pass, " << t.fail << " fail, " << t.not_met << " hypothesis-not-met, "
    << t.informational << " informational, " << t.errors << " errors";
  o.info(s.str());
  if (t.fail || t.errors) o.fail(t.first);
}

// 1. Defining axioms of the reticulation, whole corpus.
Outcome reticulation_axioms(const std::vector<CorpusEntry>& corpus, unsigned jobs) {
  Outcome o;
  const auto t0 = Clock::now();
  const auto tally = run_registry(corpus, {"D3.1", "L3.2"}, jobs);
  const double dt = seconds_since(t0);
  require_clean(o, tally, "D3.1, L3.2");
  // The axioms again, straight from the tables.
  std::size_t pairs = 0;
  for (const auto& e : corpus) {
    const Quantale& A = e.quantale;
    const Reticulation R(A);
    const FiniteLattice& L = R.lattice();
    for (Elem a = 0; a < A.size(); ++a)
      for (Elem b = 0; b < A.size(); ++b, ++pairs) {
        if (!L.leq(R.lambda(A.join(a, b)), L.join(R.lambda(a), R.lambda(b))))
          o.fail(e.source + ": lambda(a v b) not below lambda(a) v lambda(b)");
        if (R.lambda(A.mul(a, b)) != L.meet(R.lambda(a), R.lambda(b)))
          o.fail(e.source + ": lambda(ab) != lambda(a) ^ lambda(b)");
        bool power = false;
        Elem pw = a;
        for (std::size_t k = 0; k <= A.size(); ++k, pw = A.mul(pw, a)) power = power || A.leq(pw, b);
        if (L.leq(R.lambda(a), R.lambda(b)) != power) o.fail(e.source + ": order axiom");
      }
  }
  std::ostringstream s;
  s << "direct axiom scan over " << pairs << " element pairs; registry time " << dt << " s at --jobs " << jobs
    << " (limit " << kReticulationLimitSeconds << " s)";
  o.info(s.str());
  if (dt >= kReticulationLimitSeconds) o.fail("time limit exceeded");
  return o;
}

// 2. Transport suite plus a verified homeomorphism per entry.
Outcome transport_suite(const std::vector<CorpusEntry>& corpus, unsigned jobs) {
  Outcome o;
  require_clean(o, run_registry(corpus, {"L3.3", "L3.4", "L3.5", "P3.7", "C3.11", "P3.13", "P3.14", "P3.15", "C3.16"}, jobs),
                "L3.3-C3.16");
  std::size_t homeos = 0;
  for (const auto& e : corpus) {
    const Reticulation R(e.quantale);
    const SpecTransport T = spec_transport(R);
    const FiniteSpace X = zariski_space(e.quantale), Y = ideal_zariski_space(R.lattice());
    const FiniteSpace XF = flat_space(e.quantale), YF = ideal_flat_space(R.lattice());
    if (X.size() != Y.size() || !is_homeomorphism(X, Y, T.zariski_map) || !is_homeomorphism(XF, YF, T.zariski_map))
      o.fail(e.source + ": u/v is not a homeomorphism");
    else
      ++homeos;
    for (Elem p : e.quantale.spec())
      if (T.v[T.u[p]] != p) o.fail(e.source + ": v(u(p)) != p at " + e.quantale.name(p));
  }
  o.info("u/v verified homeomorphisms (Zariski and flat): " + std::to_string(homeos) + "/" +
         std::to_string(corpus.size()));
  return o;
}

// 3. Purity transfer, evaluated literally for every a and every ideal I.
Outcome purity_transfer(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  std::size_t eq1 = 0, eq2 = 0, eq2_fail = 0, eq2_fail_semiprime = 0, t414 = 0, t419 = 0;
  std::string eq2_witness;
  for (const auto& e : corpus) {
    const Quantale& A = e.quantale;
    const Reticulation R(A);
    const FiniteLattice& L = R.lattice();
    const bool semiprime = oracle::semiprime(A);
    // (Ker(a))* = sigma(a*).
    for (Elem a = 0; a < A.size(); ++a, ++eq1)
      if (R.star(ker_op(A, a)).members != sigma_set(L, R.star(a)))
        o.fail(e.source + ": (Ker(a))* != sigma(a*) at " + A.name(a));
    // (sigma(I))_* = Ker(I_*).
    for (const auto& I : all_ideals(L)) {
      ++eq2;
      const Elem lhs = R.lower(make_ideal(L, sigma_set(L, I)));
      const Elem rhs = ker_op(A, R.lower(I));
      if (lhs != rhs) {
        ++eq2_fail;
        eq2_fail_semiprime += semiprime;
        if (eq2_witness.empty())
          eq2_witness = e.source + ", I = (" + L.name(L.join_all(I.members)) + "]: (sigma(I))_* = " + A.name(lhs) +
                        ", Ker(I_*) = " + A.name(rhs);
      }
    }
    // w-pure radical elements: a = rho(Ker(a)) and Ker(a) = Vir(a).
    for (Elem a = 0; a < A.size(); ++a) {
      if (!oracle::w_pure(A, a) || oracle::radical(A, a) != a) continue;
      ++t414;
      if (oracle::radical(A, ker_op(A, a)) != a || ker_op(A, a) != vir_op(A, a))
        o.fail(e.source + ": w-pure radical transfer at " + A.name(a));
    }
    // a -> a* is a frame isomorphism from Vir(A) onto the sigma-ideals.
    std::set<ElemSet> sigma_ideals, image;
    for (const auto& I : all_ideals(L))
      if (is_sigma_ideal(L, I)) sigma_ideals.insert(I.members);
    std::vector<Elem> pure;
    for (Elem a = 0; a < A.size(); ++a)
      if (oracle::pure(A, a)) pure.push_back(a);
    for (Elem a : pure) image.insert(R.star(a).members);
    if (image != sigma_ideals || image.size() != pure.size()) o.fail(e.source + ": Vir(A) -> sigma-ideals not bijective");
    for (Elem a : pure)
      for (Elem b : pure) {
        if (A.leq(a, b) != R.star(a).members.subset_of(R.star(b).members))
          o.fail(e.source + ": Vir(A) -> sigma-ideals not an order isomorphism");
        if (R.star(A.meet(a, b)).members != (R.star(a).members & R.star(b).members))
          o.fail(e.source + ": Vir(A) -> sigma-ideals does not preserve meets");
      }
    // O(p*) = (O~(p))* and (O(P))_* = O~(P_*); with semiprime, O~ is O.
    for (Elem p : A.spec()) {
      ++t419;
      const Elem ot = oracle::o_tilde(A, p);
      if (o_ideal(L, R.star(p)) != R.star(ot)) o.fail(e.source + ": O(p*) != (O~(p))* at " + A.name(p));
      if (semiprime && o_ideal(L, R.star(p)) != R.star(oracle::o_elem(A, p)))
        o.fail(e.source + ": semiprime O(p*) != (O(p))* at " + A.name(p));
    }
    for (const auto& r : prime_spectrum_lattice(L)) {
      const Elem P = R.lower(r.ideal);
      if (R.lower(o_ideal(L, r.ideal)) != oracle::o_tilde(A, P)) o.fail(e.source + ": (O(P))_* != O~(P_*)");
      if (semiprime && R.lower(o_ideal(L, r.ideal)) != oracle::o_elem(A, P))
        o.fail(e.source + ": semiprime (O(P))_* != O(P_*)");
    }
  }
  std::ostringstream s;
  s << "first equality: " << eq1 << " elements checked; second equality: " << eq2 << " ideals checked, " << eq2_fail
    << " literal failures (" << eq2_fail_semiprime << " on semiprime entries)";
  o.info(s.str());
  o.info("w-pure radical elements checked: " + std::to_string(t414) + "; primes checked for O transfer: " +
         std::to_string(t419));
  if (eq2_fail) {
    o.fail("second equality fails literally: " + eq2_witness);
    o.info("corrected form (sigma(I))_* = rho(Ker(I_*)) is checked by the registry entry T4.13");
  }
  return o;
}

// 4. O(p) as a meet of minimal primes, plus the WEDGE5 fixture values.
Outcome o_operator(const std::vector<CorpusEntry>& corpus, unsigned jobs) {
  Outcome o;
  require_clean(o, run_registry(corpus, {"T5.10", "C5.11", "C5.12"}, jobs), "T5.10, C5.11, C5.12");
  std::size_t primes = 0, entries = 0;
  for (const auto& e : corpus) {
    const Quantale& A = e.quantale;
    if (!oracle::semiprime(A)) continue;
    ++entries;
    std::vector<Elem> om;
    for (Elem m : A.max()) om.push_back(o_op(A, m));
    if (oracle::inf(A, om) != A.bot()) o.fail(e.source + ": meet of O(m) over maximals is not 0");
    for (Elem p : A.spec()) {
      ++primes;
      const Elem expect = oracle::inf(A, oracle::lambda(A, p));
      if (o_op(A, p) != expect) o.fail(e.source + ": O(p) != meet of Lambda(p) at " + A.name(p));
      if (oracle::lambda(A, p) == std::vector<Elem>{p} && o_op(A, p) != p) o.fail(e.source + ": minimal p with O(p) != p");
    }
  }
  o.info("semiprime entries: " + std::to_string(entries) + ", primes checked: " + std::to_string(primes));
  const Quantale W = fixture("WEDGE5");
  const Elem a = *W.lattice().index_of("a"), c = *W.lattice().index_of("c");
  // Derive with the definitional oracle, then compare against the pinned values.
  const Elem oc = oracle::o_elem(W, c), oa = oracle::o_elem(W, a);
  if (oc != W.bot() || oa != a) o.fail("WEDGE5 oracle disagrees with the pinned values");
  if (o_op(W, c) != oc || o_op(W, a) != oa) o.fail("WEDGE5 library O differs from the oracle");
  o.info("WEDGE5: O(c) = " + W.name(o_op(W, c)) + ", O(a) = " + W.name(o_op(W, a)));
  return o;
}

// 5. Equivalence batteries.
Outcome batteries(const std::vector<CorpusEntry>& corpus, unsigned jobs) {
  Outcome o;
  const std::map<std::string, std::size_t> sizes = {{"P5.6", 14}, {"T6.3", 7}, {"T6.8", 5},
                                                    {"T7.5", 8},  {"T8.5", 7}, {"T8.7", 6}};
  std::vector<std::string> ids;
  for (const auto& [id, n] : sizes) ids.push_back(id);
  std::map<std::string, std::array<std::size_t, 3>> counts;  // true, false, gated
  for (const auto& r : verify_corpus(corpus, ids, jobs)) {
    if (!r.error.empty()) o.fail(r.source + ": " + r.error);
    for (const auto& rep : r.reports) {
      if (rep.status == Status::HypothesisNotMet) {
        ++counts[rep.id][2];
        continue;
      }
      if (rep.status != Status::Pass) o.fail(r.source + " " + rep.id + ": " + rep.detail);
      if (rep.conditions.size() != sizes.at(rep.id)) {
        o.fail(r.source + " " + rep.id + ": " + std::to_string(rep.conditions.size()) + " conditions");
        continue;
      }
      bool all_true = true, all_false = true;
      for (const auto& cnd : rep.conditions) {
        all_true = all_true && cnd.value;
        all_false = all_false && !cnd.value;
      }
      if (!all_true && !all_false) o.fail(r.source + " " + rep.id + ": conditions disagree");
      ++counts[rep.id][all_true ? 0 : 1];
    }
  }
  for (const auto& [id, c] : counts)
    o.info(id + " (" + std::to_string(sizes.at(id)) + " conditions): all-true " + std::to_string(c[0]) +
           ", all-false " + std::to_string(c[1]) + ", gated " + std::to_string(c[2]));
  return o;
}

// 6. Structure identities on PF entries.
Outcome structure_identities(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  std::size_t pf = 0;
  for (const auto& e : corpus) {
    const Quantale& A = e.quantale;
    if (!oracle::pf(A)) continue;
    ++pf;
    const SubQuantale V = vir_frame(A);
    ElemSet maxv, specv;
    for (Elem x : V.q.max()) maxv.insert(V.embed[x]);
    for (Elem x : V.q.spec()) specv.insert(V.embed[x]);
    if (oracle::to_set(oracle::minimal_primes(A)) != maxv) o.fail(e.source + ": Min(A) != Max(Vir(A))");
    if (specv != maxv) o.fail(e.source + ": Spec(Vir(A)) != Max(Vir(A))");
    if (!oracle::hyperarchimedean(V.q)) o.fail(e.source + ": Vir(A) not hyperarchimedean");
  }
  o.info("PF entries: " + std::to_string(pf));
  if (pf == 0) o.fail("no PF entries in the corpus");
  return o;
}

// 7. Fixture regression.
Outcome fixture_regression() {
  Outcome o;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) o.fail(what);
  };
  auto flags_are = [](const ClassFlags& f, std::map<std::string, bool> want) {
    const std::map<std::string, bool> got = {{"semiprime", f.semiprime}, {"normal", f.normal}, {"mp", f.mp},
                                             {"pf", f.pf}, {"purified", f.purified}, {"pp", f.pp},
                                             {"hyperarchimedean", f.hyperarchimedean}};
    for (const auto& [k, v] : want)
      if (got.at(k) != v) return false;
    return true;
  };
  auto oracle_flags = [](const Quantale& A) {
    ClassFlags f;
    f.semiprime = oracle::semiprime(A);
    f.normal = oracle::normal(A);
    f.mp = oracle::mp(A);
    f.pf = oracle::pf(A);
    f.purified = oracle::purified(A);
    f.pp = oracle::pp(A);
    f.hyperarchimedean = oracle::hyperarchimedean(A);
    return f;
  };

  const Quantale Z = fixture("Z12");
  const auto at = [&](const char* l) { return *Z.lattice().index_of(l); };
  expect(oracle::spec(Z).size() == 2 && Z.spec().size() == 2, "Z12 |Spec| = 2");
  expect(oracle::radical(Z, Z.bot()) == at("(6)") && Z.radical(Z.bot()) == at("(6)"), "Z12 rho(0) = (6)");
  expect(oracle::boolean_center(Z).size() == 4 && Z.boolean_center().size() == 4, "Z12 |B(A)| = 4");
  std::size_t pure = 0;
  for (Elem a = 0; a < Z.size(); ++a) pure += oracle::pure(Z, a);
  expect(pure == 4 && vir_frame(Z).q.size() == 4, "Z12 |Vir(A)| = 4");
  expect(canonical_id(frame_of(Reticulation(Z).lattice())) == canonical_id(fixture("BOOL4")), "L(Z12) = BOOL4");
  const std::map<std::string, bool> z12 = {{"semiprime", false}, {"normal", true}, {"mp", true},
                                           {"pf", false}, {"purified", true}, {"pp", false},
                                           {"hyperarchimedean", true}};
  expect(flags_are(oracle_flags(Z), z12) && flags_are(classify(Z).flags, z12), "Z12 flags");
  expect(oracle::w_pure(Z, at("(2)")) && !oracle::pure(Z, at("(2)")), "Z12 (2) w-pure, not pure (oracle)");
  expect(is_w_pure(Z, at("(2)")) && !is_pure(Z, at("(2)")), "Z12 (2) w-pure, not pure (library)");

  const Quantale W = fixture("WEDGE5");
  const std::map<std::string, bool> w5 = {{"semiprime", true}, {"normal", true}, {"mp", false},
                                          {"pf", false},       {"purified", false}, {"pp", false}};
  expect(flags_are(oracle_flags(W), w5) && flags_are(classify(W).flags, w5), "WEDGE5 flags");

  const Quantale C = fixture("CHAIN3");
  const std::map<std::string, bool> c3 = {{"semiprime", true}, {"normal", true}, {"mp", true},
                                          {"pf", true}, {"purified", true}, {"pp", true},
                                          {"hyperarchimedean", false}};
  expect(flags_are(oracle_flags(C), c3) && flags_are(classify(C).flags, c3), "CHAIN3 flags");
  o.info("Z12, WEDGE5 and CHAIN3 pinned values re-derived by the oracle and matched by the library");
  return o;
}

// 8. Class implications on the whole corpus.
Outcome implications(const std::vector<CorpusEntry>& corpus, unsigned jobs) {
  Outcome o;
  std::map<std::string, std::size_t> hits;
  for (const auto& e : corpus) {
    const ClassFlags f = classify(e.quantale).flags;
    auto imp = [&](bool a, bool b, const std::string& name) {
      if (a) ++hits[name];
      if (a && !b) o.fail(e.source + ": " + name);
    };
    imp(f.pp, f.pf, "pp => pf");
    imp(f.pf, f.semiprime && f.mp, "pf => semiprime and mp");
    imp(f.semiprime && f.mp, f.pf, "semiprime and mp => pf");
    imp(f.pp, f.purified, "pp => purified");
    imp(f.purified, f.mp, "purified => mp");
    imp(f.hyperarchimedean, f.purified, "hyperarchimedean => purified");
  }
  for (const auto& [k, v] : hits) o.info(k + ": antecedent holds on " + std::to_string(v) + " entries");
  require_clean(o, run_registry(corpus, {"CLS", "C7.6", "C8.8", "L7.1", "T6.5"}, jobs), "CLS, C7.6, C8.8, L7.1, T6.5");
  return o;
}

struct Run {
  int code = -1;
  std::string out;
  double seconds = 0;
};

Run run_command(const std::string& cmd) {
  Run r;
  const auto t0 = Clock::now();
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 65536> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.seconds = seconds_since(t0);
  return r;
}

// 9. End to end through the command-line tool.
Outcome end_to_end(const std::string& qlab, unsigned jobs) {
  Outcome o;
  if (qlab.empty()) {
    o.fail("no --qlab binary given");
    return o;
  }
  const std::string base = "'" + qlab + "' verify default --suite all --jobs " + std::to_string(jobs);
  const Run plain = run_command(base + " 2>&1");
  std::ostringstream s;
  s << "exit " << plain.code << " in " << plain.seconds << " s (limit " << kEndToEndLimitSeconds << " s)";
  o.info(s.str());
  if (!plain.out.empty()) o.info("summary: " + plain.out.substr(plain.out.rfind('\n', plain.out.size() - 2) + 1));
  if (plain.code != 0) o.fail("qlab verify exited " + std::to_string(plain.code));
  if (plain.seconds >= kEndToEndLimitSeconds) o.fail("time limit exceeded");

  const Run j1 = run_command(base + " --json");
  const Run j2 = run_command(base + " --json");
  if (j1.out != j2.out) o.fail("--json output differs between runs");
  try {
    const auto doc = nlohmann::json::parse(j1.out);
    const std::vector<std::string> top = {"schema", "theorems", "entries", "summary"};
    for (const auto& k : top)
      if (!doc.contains(k)) o.fail("--json lacks key " + k);
    if (doc.value("schema", "") != "qlab.verify/1") o.fail("unexpected schema tag");
    for (const auto& e : doc.at("entries")) {
      for (const char* k : {"id", "source", "flags", "error", "theorems"})
        if (!e.contains(k)) o.fail(std::string("entry lacks key ") + k);
      for (const auto& t : e.at("theorems"))
        for (const char* k : {"id", "status", "detail", "witness", "conditions", "note"})
          if (!t.contains(k)) o.fail(std::string("theorem report lacks key ") + k);
    }
    o.info("--json: " + std::to_string(doc.at("entries").size()) + " entries, identical across two runs, schema " +
           doc.value("schema", ""));
  } catch (const std::exception& ex) {
    o.fail(std::string("--json is not valid JSON: ") + ex.what());
  }
  return o;
}

// Counterexamples to O~(p) <= O(p), reported whatever the criteria say.
void report_o_tilde(const std::vector<CorpusEntry>& corpus, unsigned jobs) {
  std::size_t entries = 0;
  std::vector<std::string> examples;
  for (const auto& r : verify_corpus(corpus, {"OTILDE"}, jobs))
    for (const auto& rep : r.reports)
      if (rep.status == Status::Informational) {
        ++entries;
        if (examples.size() < 3) examples.push_back(r.source + " p = " + join(rep.witness));
      }
  std::cout << "\n*** O~(p) <= O(p) counterexamples: " << entries << " of " << corpus.size() << " entries";
  if (!examples.empty()) std::cout << " (e.g. " << join(examples, "; ") << ")";
  std::cout << "\n*** O(p) <= O~(p) holds everywhere and is an equality on semiprime entries (registry OTILDE)\n\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlab acceptance run"};
  unsigned jobs = kDefaultJobs;
  std::string qlab;
  std::vector<int> expect_fail;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--qlab", qlab, "path to the qlab binary for the end-to-end criterion");
  app.add_option("--expect-fail", expect_fail, "criteria expected to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const auto t0 = Clock::now();
  const std::vector<CorpusEntry> corpus = default_corpus();
  std::cout << "default corpus: " << corpus.size() << " quantales in " << seconds_since(t0) << " s\n";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reticulation axioms", [&] { return reticulation_axioms(corpus, jobs); }},
      {"transport suite", [&] { return transport_suite(corpus, jobs); }},
      {"purity transfer", [&] { return purity_transfer(corpus); }},
      {"O-operator", [&] { return o_operator(corpus, jobs); }},
      {"equivalence batteries", [&] { return batteries(corpus, jobs); }},
      {"structure identities", [&] { return structure_identities(corpus); }},
      {"fixture regression", [&] { return fixture_regression(); }},
      {"implication lattice", [&] { return implications(corpus, jobs); }},
      {"end-to-end", [&] { return end_to_end(qlab, jobs); }},
  };

  std::set<int> failed;
  std::vector<std::string> summary;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i + 1);
    const auto c0 = Clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& ex) {
      out.fail(std::string("exception: ") + ex.what());
    }
    std::ostringstream line;
    line << "criterion " << n << " " << (out.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
         << seconds_since(c0) << " s)";
    summary.push_back(line.str());
    std::cout << line.str() << "\n";
    for (const auto& l : out.lines) std::cout << "    " << l << "\n";
    if (!out.pass) failed.insert(n);
  }
  report_o_tilde(corpus, jobs);

  for (const auto& s : summary) std::cout << s << "\n";
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass";
  if (!expected.empty()) {
    std::vector<std::string> e;
    for (int k : expected) e.push_back(std::to_string(k));
    std::cout << "; expected failures: " << join(e);
  }
  std::cout << "\n";
  if (failed != expected) {
    std::cout << "acceptance: failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
