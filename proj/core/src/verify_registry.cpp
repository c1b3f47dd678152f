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

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <utility>

#include "qlab/error.hpp"
#include "qlab/verify.hpp"
#include "verify_internal.hpp"

namespace qlab {

namespace detail {

bool same_topology(const FiniteSpace& X, const FiniteSpace& Y, std::size_t guard) {
  if (X.size() != Y.size()) return false;
  auto a = closed_sets(X, guard), b = closed_sets(Y, guard);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void guard_subsets(const Analysis& X, std::size_t n) {
  if (n > X.guard())
    throw Error(ErrorKind::TooLarge, "subset scan beyond guard", {std::to_string(n)});
}

ElemSet embed(const SubQuantale& s, ElemSet inner) {
  ElemSet out;
  for (Elem i : inner) out.insert(s.embed[i]);
  return out;
}

}  // namespace detail

namespace {

struct Alias {
  const char* from;
  const char* to;
};

// Ids under which some statements are also cited.
constexpr Alias kAliases[] = {{"R6.17", "R6.16"}, {"L4.5", "L4.6"}};

std::vector<TheoremEntry> build_registry() {
  std::vector<TheoremEntry> r;
  detail::add_s2(r);
  detail::add_topology(r);
  detail::add_s3(r);
  detail::add_s4(r);
  detail::add_s5(r);
  detail::add_s6(r);
  detail::add_s7(r);
  detail::add_s8(r);
  return r;
}

std::string unalias(std::string_view id) {
  for (const auto& a : kAliases)
    if (id == a.from) return a.to;
  return std::string(id);
}

}  // namespace

const std::vector<TheoremEntry>& registry() {
  static const std::vector<TheoremEntry> r = build_registry();
  return r;
}

const TheoremEntry* find_theorem(std::string_view id) {
  const std::string key = unalias(id);
  for (const auto& e : registry())
    if (e.id == key) return &e;
  return nullptr;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& e : registry())
    if (std::find(out.begin(), out.end(), e.suite) == out.end()) out.push_back(e.suite);
  return out;
}

std::vector<std::string> resolve_suite(const std::string& spec) {
  std::vector<std::string> tokens;
  std::stringstream ss(spec);
  for (std::string t; std::getline(ss, t, ',');) {
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (!t.empty()) tokens.push_back(t);
  }
  if (tokens.empty()) throw Error(ErrorKind::InvalidArgument, "empty suite");
  std::set<std::string> chosen;
  for (const auto& t : tokens) {
    bool matched = false;
    for (const auto& e : registry())
      if (t == "all" || e.suite == t) {
        chosen.insert(e.id);
        matched = true;
      }
    if (matched) continue;
    const TheoremEntry* e = find_theorem(t);
    if (!e) throw Error(ErrorKind::InvalidArgument, "unknown theorem or suite: " + t, {t});
    chosen.insert(e->id);
  }
  std::vector<std::string> out;
  for (const auto& e : registry())
    if (chosen.count(e.id)) out.push_back(e.id);
  return out;
}

TheoremReport run_check(const TheoremEntry& entry, const Analysis& a) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport rep;
  try {
    rep = entry.check(a);
  } catch (const Error& err) {
    rep = TheoremReport{};
    rep.status = Status::Fail;
    rep.detail = std::string(to_string(err.kind())) + ": " + err.what();
    rep.witness = err.witness();
  }
  rep.id = entry.id;
  rep.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

std::vector<TheoremReport> verify(const Analysis& a, const std::vector<std::string>& ids) {
  std::vector<TheoremReport> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    const TheoremEntry* e = find_theorem(id);
    if (!e) throw Error(ErrorKind::InvalidArgument, "unknown theorem: " + id, {id});
    out.push_back(run_check(*e, a));
  }
  return out;
}

}  // namespace qlab
