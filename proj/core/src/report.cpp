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

#include "qlab/report.hpp"

#include <utility>

namespace qlab {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::HypothesisNotMet: return "hypothesis-not-met";
    case Status::Informational: return "informational";
  }
  return "unknown";
}

Probe::Probe(std::string id) : start_(std::chrono::steady_clock::now()) {
  report_.id = std::move(id);
}

void Probe::fail(std::string detail, std::vector<std::string> witness) {
  if (!ok()) return;
  report_.status = Status::Fail;
  report_.detail = std::move(detail);
  report_.witness = std::move(witness);
}

TheoremReport Probe::not_met(std::string why) {
  report_.status = Status::HypothesisNotMet;
  report_.detail = std::move(why);
  return done();
}

void Probe::note(std::string text) {
  if (!report_.note.empty()) report_.note += "; ";
  report_.note += std::move(text);
}

void Probe::condition(std::string name, bool value) {
  report_.conditions.push_back({std::move(name), value});
}

void Probe::require_all_equal() {
  const auto& cs = report_.conditions;
  for (const auto& c : cs)
    if (c.value != cs.front().value) {
      std::vector<std::string> w;
      for (const auto& d : cs) w.push_back(d.name + "=" + (d.value ? "true" : "false"));
      fail("conditions disagree", std::move(w));
      return;
    }
}

void Probe::informational(std::string detail, std::vector<std::string> witness) {
  if (!ok()) return;
  report_.status = Status::Informational;
  report_.detail = std::move(detail);
  report_.witness = std::move(witness);
}

TheoremReport Probe::done() {
  report_.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start_);
  return report_;
}

TheoremReport combine(std::string id, const std::vector<TheoremReport>& parts) {
  TheoremReport out;
  out.id = std::move(id);
  for (const auto& p : parts) {
    out.elapsed += p.elapsed;
    for (const auto& c : p.conditions) out.conditions.push_back({p.id + ":" + c.name, c.value});
    if (p.status == Status::Fail && out.status != Status::Fail) {
      out.status = Status::Fail;
      out.detail = p.id + ": " + p.detail;
      out.witness = p.witness;
    }
  }
  return out;
}

}  // namespace qlab
