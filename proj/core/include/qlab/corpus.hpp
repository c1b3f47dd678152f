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

#ifndef QLAB_CORPUS_HPP_
#define QLAB_CORPUS_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qlab/classify.hpp"
#include "qlab/quantale.hpp"
#include "qlab/report.hpp"

namespace qlab {

struct CorpusEntry {
  std::string id;      // canonical_id of the quantale
  std::string source;  // generator descriptor, e.g. "zn:12"
  Quantale quantale;
};

struct CorpusOptions {
  unsigned zn_max = 500;
  std::size_t poset_points = 5;
  // Exhaustive enumeration runs on distributive lattices up to this size
  // and on chains up to chain_max elements.
  std::size_t lattice_max = 5;
  std::size_t chain_max = 6;
  std::size_t enum_cap = 100000;
};

// Fixtures, then Z_n, then down-set frames, then enumerated tables; the first
// occurrence of each isomorphism class is kept.
std::vector<CorpusEntry> default_corpus(const CorpusOptions& opt = {});

// Keeps the first entry per id, preserving order.
std::vector<CorpusEntry> dedup(std::vector<CorpusEntry> entries);

CorpusEntry make_entry(Quantale q, std::string source);

// One QNT file per entry, named by position and id. The source is kept in a
// leading comment.
void write_corpus_dir(const std::vector<CorpusEntry>& entries, const std::string& dir);
// All *.qnt files of a directory, in file-name order. Throws ParseError or
// the matching axiom error, naming the file.
std::vector<CorpusEntry> load_corpus_dir(const std::string& dir);
CorpusEntry load_entry(const std::string& path);

// f(i) for i in [0, n) on up to `jobs` threads; results stay in index order.
// The first exception (lowest index) is rethrown after all threads join.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned t = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct EntryResult {
  std::string id;
  std::string source;
  ClassFlags flags;
  std::vector<TheoremReport> reports;
  // Set when the analysis itself could not be built.
  std::string error;

  bool failed() const;
};

// Runs the given theorem ids on every entry.
std::vector<EntryResult> verify_corpus(const std::vector<CorpusEntry>& entries,
                                       const std::vector<std::string>& ids, unsigned jobs);

}  // namespace qlab

#endif  // QLAB_CORPUS_HPP_
