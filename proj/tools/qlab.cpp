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

// qlab: command-line front end.
//
// Exit codes: 0 success, 1 a check or verification failed, 2 usage, input or
// parse error.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qlab/analysis.hpp"
#include "qlab/canonical.hpp"
#include "qlab/classify.hpp"
#include "qlab/corpus.hpp"
#include "qlab/error.hpp"
#include "qlab/generators.hpp"
#include "qlab/io.hpp"
#include "qlab/purity.hpp"
#include "qlab/verify.hpp"
#include "report_json.hpp"

namespace {

using namespace qlab;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Thrown for bad input; mapped to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Quantale load(const std::string& path) {
  try {
    return parse_qnt(read_file(path));
  } catch (const Error& e) {
    throw InputError(path + ": " + std::string(to_string(e.kind())) + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") std::cout << text;
  else write_file(out, text);
}

std::string set_text(const Quantale& A, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s) {
    out += (first ? "" : ", ") + A.name(e);
    first = false;
  }
  return out + "}";
}

Poset parse_poset(const std::string& spec) {
  // "<n>;<i><<j>,<i><<j>,..."
  Poset P;
  const auto semi = spec.find(';');
  try {
    P.n = std::stoul(spec.substr(0, semi));
  } catch (const std::exception&) {
    throw InputError("bad poset size in '" + spec + "'");
  }
  if (semi == std::string::npos) return P;
  std::stringstream ss(spec.substr(semi + 1));
  for (std::string tok; std::getline(ss, tok, ',');) {
    const auto lt = tok.find('<');
    if (lt == std::string::npos) throw InputError("bad relation '" + tok + "'");
    std::size_t i, j;
    try {
      i = std::stoul(tok.substr(0, lt));
      j = std::stoul(tok.substr(lt + 1));
    } catch (const std::exception&) {
      throw InputError("bad relation '" + tok + "'");
    }
    if (i >= P.n || j >= P.n) throw InputError("relation out of range '" + tok + "'");
    P.less.emplace_back(i, j);
  }
  return P;
}

// ---- gen ----

struct GenArgs {
  std::string kind;
  std::string arg;
  std::string out;
  std::uint64_t seed = 1;
};

int cmd_gen(const GenArgs& g) {
  std::optional<Quantale> q;
  try {
    if (g.kind == "zn") {
      const long n = std::stol(g.arg);
      if (n < 1) throw InputError("zn needs n >= 1");
      q = gen_zn(static_cast<unsigned>(n));
    } else if (g.kind == "fixture") {
      q = fixture(g.arg);
    } else if (g.kind == "downset") {
      q = gen_downset_frame(parse_poset(g.arg));
    } else if (g.kind == "chain") {
      q = frame_of(chain_lattice(std::stoul(g.arg)));
    } else if (g.kind == "random") {
      FiniteLattice L = parse_lat(read_file(g.arg));
      q = random_quantale(L, g.seed);
      if (!q) {
        std::cerr << "qlab: no quantale exists on this lattice\n";
        return kFailed;
      }
    }
  } catch (const std::invalid_argument&) {
    throw InputError("bad argument '" + g.arg + "'");
  } catch (const std::out_of_range&) {
    throw InputError("bad argument '" + g.arg + "'");
  } catch (const Error& e) {
    throw InputError(std::string(to_string(e.kind())) + ": " + e.what());
  }
  emit(emit_qnt(*q), g.out);
  return kOk;
}

// ---- check ----

int cmd_check(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  try {
    const Quantale A = parse_qnt(text);
    std::cout << "valid quantale, " << A.size() << " elements, id " << canonical_id(A) << "\n";
    return kOk;
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what();
    if (!e.witness().empty()) {
      std::cout << " [witness:";
      for (const auto& w : e.witness()) std::cout << " " << w;
      std::cout << "]";
    }
    std::cout << "\n";
    return kFailed;
  }
}

// ---- classify ----

int cmd_classify(const std::string& path, bool as_json) {
  const Quantale A = load(path);
  const std::string id = canonical_id(A);
  ClassificationReport rep;
  try {
    rep = classify(A, id);
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return kFailed;
  }
  if (as_json) {
    json j;
    j["schema"] = tools::kClassifySchema;
    j["id"] = id;
    j["flags"] = tools::flags_json(rep.flags);
    j["witnesses"] = rep.witnesses;
    std::cout << j.dump(2) << "\n";
  } else {
    const auto f = tools::flags_json(rep.flags);
    for (auto it = f.begin(); it != f.end(); ++it)
      std::cout << it.key() << ": " << (it.value().get<bool>() ? "true" : "false") << "\n";
  }
  return kOk;
}

// ---- reticulate ----

int cmd_reticulate(const std::string& path, bool dot) {
  const Quantale A = load(path);
  const Reticulation R(A);
  if (dot) {
    std::cout << emit_dot(R);
    return kOk;
  }
  std::cout << emit_lat(R.lattice());
  std::cout << "lambda\n";
  for (Elem a = 0; a < A.size(); ++a)
    std::cout << A.name(a) << " " << R.lattice().name(R.lambda(a)) << "\n";
  return kOk;
}

// ---- purity ----

int cmd_purity(const std::string& path, bool frame) {
  const Quantale A = load(path);
  const PurityTables T = purity_tables(A);
  std::cout << "pure " << set_text(A, T.pure) << "\n";
  std::cout << "w-pure " << set_text(A, T.w_pure) << "\n";
  std::cout << "element Vir Ker O\n";
  for (Elem a = 0; a < A.size(); ++a)
    std::cout << A.name(a) << " " << A.name(T.vir_of[a]) << " " << A.name(T.ker_of[a]) << " "
              << A.name(T.o_of[a]) << "\n";
  if (frame) std::cout << emit_qnt(vir_frame(A).q);
  return kOk;
}

// ---- spectrum ----

int cmd_spectrum(const std::string& path, const std::string& topology, const std::string& sub,
                 bool dot) {
  const Quantale A = load(path);
  const FiniteSpace X = topology == "flat" ? flat_space(A) : zariski_space(A);
  ElemSet keep = A.spec();
  if (sub == "max") keep = A.max();
  if (sub == "min") keep = A.min();
  const FiniteSpace S = subspace(X, X.from_ids(keep));
  if (dot) {
    std::cout << emit_dot(S, topology + ":" + sub);
    return kOk;
  }
  std::cout << topology << " " << sub << " (" << S.size() << " points; closed sets are "
            << (S.orientation() == Orientation::ClosedUp ? "up-sets" : "down-sets") << ")\n";
  for (std::size_t i = 0; i < S.size(); ++i) {
    std::cout << S.labels()[i] << " <=";
    for (std::size_t j : S.up(i)) std::cout << " " << S.labels()[j];
    std::cout << "\n";
  }
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string target;
  std::string suite = "all";
  bool json = false;
  bool verbose = false;
  unsigned jobs = 1;
};

std::vector<CorpusEntry> load_target(const std::string& target) {
  try {
    if (target == "default") return default_corpus();
    if (std::filesystem::is_directory(target)) return load_corpus_dir(target);
    return {load_entry(target)};
  } catch (const Error& e) {
    throw InputError(std::string(to_string(e.kind())) + ": " + e.what());
  }
}

int cmd_verify(const VerifyArgs& v) {
  std::vector<std::string> ids;
  try {
    ids = resolve_suite(v.suite);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  const auto entries = load_target(v.target);
  const auto results = verify_corpus(entries, ids, std::max(1u, v.jobs));
  const auto t = tools::tally(results);
  if (v.json) {
    std::cout << tools::verify_json(results, ids).dump(2) << "\n";
  } else {
    for (const auto& e : results) {
      if (!e.error.empty()) std::cout << e.id << " (" << e.source << ") error: " << e.error << "\n";
      for (const auto& r : e.reports) {
        if (!v.verbose && r.status != Status::Fail) continue;
        std::cout << e.id << " (" << e.source << ") " << r.id << " " << to_string(r.status);
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        if (!r.witness.empty()) {
          std::cout << " [";
          for (std::size_t k = 0; k < r.witness.size(); ++k) std::cout << (k ? " " : "") << r.witness[k];
          std::cout << "]";
        }
        std::cout << "\n";
      }
    }
    std::cout << results.size() << " quantales, " << ids.size() << " theorems: " << t.pass << " pass, "
              << t.fail << " fail, " << t.not_met << " hypothesis-not-met, " << t.informational
              << " informational, " << t.errors << " errors\n";
  }
  return t.fail == 0 && t.errors == 0 ? kOk : kFailed;
}

// ---- corpus ----

int cmd_corpus(const std::string& dir, const CorpusOptions& opt) {
  const auto entries = default_corpus(opt);
  if (dir.empty()) {
    for (const auto& e : entries) std::cout << e.id << " " << e.source << " " << e.quantale.size() << "\n";
  } else {
    write_corpus_dir(entries, dir);
    std::cout << "wrote " << entries.size() << " quantales to " << dir << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlab: finite coherent quantales, reticulation and purity"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a quantale in QNT format");
  g->add_option("kind", gen.kind, "zn | fixture | downset | chain | random")
      ->required()
      ->check(CLI::IsMember({"zn", "fixture", "downset", "chain", "random"}));
  g->add_option("arg", gen.arg, "n, fixture name, poset '<n>;i<j,...', chain length or LAT file")
      ->required();
  g->add_option("-o,--output", gen.out, "output file (default stdout)");
  g->add_option("--seed", gen.seed, "seed for random");

  std::string file;
  auto* chk = app.add_subcommand("check", "validate a QNT file");
  chk->add_option("file", file, "QNT file")->required();

  bool as_json = false;
  auto* cls = app.add_subcommand("classify", "class flags of a quantale");
  cls->add_option("file", file, "QNT file")->required();
  cls->add_flag("--json", as_json, "machine-readable output");

  bool dot = false;
  auto* ret = app.add_subcommand("reticulate", "reticulation L(A) and the lambda table");
  ret->add_option("file", file, "QNT file")->required();
  ret->add_flag("--dot", dot, "Hasse diagrams of A and L(A) with lambda edges");

  bool frame = false;
  auto* pur = app.add_subcommand("purity", "pure elements and the Vir, Ker, O tables");
  pur->add_option("file", file, "QNT file")->required();
  pur->add_flag("--frame", frame, "also print Vir(A) in QNT format");

  std::string topology = "zariski", sub = "spec";
  auto* spc = app.add_subcommand("spectrum", "prime spectrum with a topology");
  spc->add_option("file", file, "QNT file")->required();
  spc->add_option("--topology", topology, "zariski (default) or flat")->check(CLI::IsMember({"zariski", "flat"}));
  spc->add_option("--subspace", sub, "spec (default), max or min")->check(CLI::IsMember({"spec", "max", "min"}));
  spc->add_flag("--dot", dot, "specialization order as a DOT graph");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run theorem checks over a file, a directory or 'default'");
  ver->add_option("target", va.target, "QNT file, directory of QNT files, or 'default'")->required();
  ver->add_option("--suite", va.suite, "all, a suite (s2..s8, topology) or comma-separated ids");
  ver->add_flag("--json", va.json, "machine-readable output");
  ver->add_flag("-v,--verbose", va.verbose, "list every report, not only failures");
  ver->add_option("--jobs", va.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  std::string outdir;
  CorpusOptions copt;
  auto* cor = app.add_subcommand("corpus", "write or list the default corpus");
  cor->add_option("-o,--output", outdir, "directory to write QNT files into");
  cor->add_option("--zn-max", copt.zn_max, "largest n for Z_n");
  cor->add_option("--poset-points", copt.poset_points, "largest poset for down-set frames");
  cor->add_option("--lattice-max", copt.lattice_max, "largest distributive lattice enumerated");
  cor->add_option("--chain-max", copt.chain_max, "largest chain enumerated, in elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*chk) return cmd_check(file);
    if (*cls) return cmd_classify(file, as_json);
    if (*ret) return cmd_reticulate(file, dot);
    if (*pur) return cmd_purity(file, frame);
    if (*spc) return cmd_spectrum(file, topology, sub, dot);
    if (*ver) return cmd_verify(va);
    if (*cor) return cmd_corpus(outdir, copt);
  } catch (const InputError& e) {
    std::cerr << "qlab: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "qlab: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
