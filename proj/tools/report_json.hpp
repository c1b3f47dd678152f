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

// JSON rendering of classification and verification results. Timings are
// left out so that repeated runs produce identical documents.

#ifndef QLAB_TOOLS_REPORT_JSON_HPP_
#define QLAB_TOOLS_REPORT_JSON_HPP_

#include <nlohmann/json.hpp>

#include "qlab/classify.hpp"
#include "qlab/corpus.hpp"
#include "qlab/report.hpp"

namespace qlab::tools {

inline constexpr const char* kVerifySchema = "qlab.verify/1";
inline constexpr const char* kClassifySchema = "qlab.classify/1";

inline nlohmann::ordered_json flags_json(const ClassFlags& f) {
  return {{"semiprime", f.semiprime}, {"normal", f.normal},     {"mp", f.mp},
          {"pf", f.pf},               {"purified", f.purified}, {"pp", f.pp},
          {"hyperarchimedean", f.hyperarchimedean}};
}

inline nlohmann::ordered_json report_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["status"] = std::string(to_string(r.status));
  j["detail"] = r.detail;
  j["witness"] = r.witness;
  nlohmann::ordered_json conds = nlohmann::ordered_json::array();
  for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"value", c.value}});
  j["conditions"] = conds;
  j["note"] = r.note;
  return j;
}

inline nlohmann::ordered_json entry_json(const EntryResult& e) {
  nlohmann::ordered_json j;
  j["id"] = e.id;
  j["source"] = e.source;
  j["flags"] = flags_json(e.flags);
  j["error"] = e.error;
  nlohmann::ordered_json th = nlohmann::ordered_json::array();
  for (const auto& r : e.reports) th.push_back(report_json(r));
  j["theorems"] = th;
  return j;
}

struct Tally {
  std::size_t pass = 0, fail = 0, not_met = 0, informational = 0, errors = 0;
};

inline Tally tally(const std::vector<EntryResult>& results) {
  Tally t;
  for (const auto& e : results) {
    if (!e.error.empty()) ++t.errors;
    for (const auto& r : e.reports) switch (r.status) {
        case Status::Pass: ++t.pass; break;
        case Status::Fail: ++t.fail; break;
        case Status::HypothesisNotMet: ++t.not_met; break;
        case Status::Informational: ++t.informational; break;
      }
  }
  return t;
}

inline nlohmann::ordered_json verify_json(const std::vector<EntryResult>& results,
                                          const std::vector<std::string>& ids) {
  nlohmann::ordered_json j;
  j["schema"] = kVerifySchema;
  j["theorems"] = ids;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : results) entries.push_back(entry_json(e));
  j["entries"] = entries;
  const Tally t = tally(results);
  j["summary"] = {{"entries", results.size()}, {"pass", t.pass},
                  {"fail", t.fail},            {"hypothesis_not_met", t.not_met},
                  {"informational", t.informational}, {"errors", t.errors}};
  return j;
}

}  // namespace qlab::tools

#endif  // QLAB_TOOLS_REPORT_JSON_HPP_
