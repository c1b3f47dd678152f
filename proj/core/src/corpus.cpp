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

#include "qlab/corpus.hpp"

#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "qlab/analysis.hpp"
#include "qlab/canonical.hpp"
#include "qlab/error.hpp"
#include "qlab/generators.hpp"
#include "qlab/io.hpp"
#include "qlab/verify.hpp"

namespace qlab {

namespace fs = std::filesystem;

namespace {

std::string poset_descriptor(const Poset& P) {
  std::ostringstream os;
  os << P.n;
  for (std::size_t k = 0; k < P.less.size(); ++k)
    os << (k ? "," : ";") << P.less[k].first << "<" << P.less[k].second;
  return os.str();
}

// Distributive lattices up to `max_size` elements, as down-set lattices of
// their posets of join-irreducibles, smallest posets first.
std::vector<std::pair<FiniteLattice, std::string>> distributive_lattices(std::size_t max_size) {
  std::vector<std::pair<FiniteLattice, std::string>> out;
  for (std::size_t n = 0; n < max_size; ++n)
    for (const Poset& P : posets_up_to_iso(n)) {
      FiniteLattice L = downset_lattice(P);
      if (L.size() <= max_size) out.emplace_back(std::move(L), "downsets(" + poset_descriptor(P) + ")");
    }
  return out;
}

const std::string kSourceTag = "# source: ";

}  // namespace

CorpusEntry make_entry(Quantale q, std::string source) {
  std::string id = canonical_id(q);
  return CorpusEntry{std::move(id), std::move(source), std::move(q)};
}

std::vector<CorpusEntry> dedup(std::vector<CorpusEntry> entries) {
  std::set<std::string> seen;
  std::vector<CorpusEntry> out;
  for (auto& e : entries)
    if (seen.insert(e.id).second) out.push_back(std::move(e));
  return out;
}

std::vector<CorpusEntry> default_corpus(const CorpusOptions& opt) {
  std::vector<CorpusEntry> all;
  auto add = [&](Quantale q, std::string src) { all.push_back(make_entry(std::move(q), std::move(src))); };
  for (const auto& name : fixture_names()) add(fixture(name), "fixture:" + name);
  for (unsigned n = 1; n <= opt.zn_max; ++n) add(gen_zn(n), "zn:" + std::to_string(n));
  for (std::size_t n = 0; n <= opt.poset_points; ++n)
    for (const Poset& P : posets_up_to_iso(n)) add(gen_downset_frame(P), "downset:" + poset_descriptor(P));
  auto lattices = distributive_lattices(opt.lattice_max);
  for (std::size_t k = opt.lattice_max + 1; k <= opt.chain_max; ++k)
    lattices.emplace_back(chain_lattice(k), "chain(" + std::to_string(k) + ")");
  for (const auto& [L, desc] : lattices) {
    std::size_t idx = 0;
    enumerate_quantales(L, opt.enum_cap, [&](Quantale q) {
      add(std::move(q), "enum:" + desc + "#" + std::to_string(idx++));
      return true;
    });
  }
  return dedup(std::move(all));
}

void write_corpus_dir(const std::vector<CorpusEntry>& entries, const std::string& dir) {
  fs::create_directories(dir);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%05zu_", i);
    const auto path = fs::path(dir) / (prefix + entries[i].id + ".qnt");
    write_file(path.string(), kSourceTag + entries[i].source + "\n" + emit_qnt(entries[i].quantale));
  }
}

CorpusEntry load_entry(const std::string& path) {
  const std::string text = read_file(path);
  std::string source = "file:" + fs::path(path).filename().string();
  if (text.rfind(kSourceTag, 0) == 0) {
    const auto end = text.find('\n');
    source = text.substr(kSourceTag.size(), end - kSourceTag.size());
  }
  try {
    return make_entry(parse_qnt(text), std::move(source));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  } catch (const Error& e) {
    std::vector<std::string> w = e.witness();
    w.insert(w.begin(), path);
    throw Error(e.kind(), path + ": " + e.what(), std::move(w));
  }
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::InvalidArgument, "not a directory: " + dir, {dir});
  std::vector<std::string> files;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".qnt") files.push_back(de.path().string());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back(load_entry(f));
  return out;
}

bool EntryResult::failed() const {
  if (!error.empty()) return true;
  for (const auto& r : reports)
    if (r.failed()) return true;
  return false;
}

std::vector<EntryResult> verify_corpus(const std::vector<CorpusEntry>& entries,
                                       const std::vector<std::string>& ids, unsigned jobs) {
  return parallel_map(entries.size(), jobs, [&](std::size_t i) {
    const CorpusEntry& e = entries[i];
    EntryResult r;
    r.id = e.id;
    r.source = e.source;
    r.flags = class_flags(e.quantale);
    try {
      const Analysis a(e.quantale, e.id);
      r.reports = verify(a, ids);
    } catch (const Error& err) {
      r.error = std::string(to_string(err.kind())) + ": " + err.what();
    }
    return r;
  });
}

}  // namespace qlab
