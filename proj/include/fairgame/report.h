// Copyright 2026 The fairgame Authors.
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


#ifndef FAIRGAME_REPORT_H_
#define FAIRGAME_REPORT_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fairgame/scenario.h"

namespace fairgame {

struct CheckRecord {
  std::string id;
  std::string type;
  std::string target;
  std::string verdict;  // pass | fail | flagged | not_flagged | listed | constructed
  Json witness;         // null unless the verdict is fail or flagged
  Json details;
  std::string solution_concept;
  std::string belief_space;
  std::string grid;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct AuditReport {
  std::string scenario;
  std::string digest;  // FNV-1a of the scenario document
  std::vector<CheckRecord> records;
  Json equilibria = Json::object();          // check id -> listing
  std::map<std::string, double> timing_ms;   // outside the body

  const CheckRecord* Find(const std::string& id) const;
  friend bool operator==(const AuditReport& a, const AuditReport& b) {
    return a.scenario == b.scenario && a.digest == b.digest && a.records == b.records &&
           a.equilibria == b.equilibria;
  }
};

std::string Fnv1a(const std::string& text);

// Runs the scenario's checks, or only those whose type is in `only`.
// BudgetExceeded propagates; no partial report is produced.
AuditReport RunAudit(const Scenario& s, const std::set<std::string>& only = {},
                     bool timing = false);

Json ReportToJson(const AuditReport& r, bool with_timing = false);
AuditReport ReportFromJson(const Json& j);
std::string ReportToCsv(const AuditReport& r);

// Writes json or csv to `path`, or stdout when path is empty or "-".
void EmitReport(const AuditReport& r, const std::string& format, const std::string& path,
                bool with_timing = false);

AuditReport ReproduceCorollary(const Rational& grid_step, int group_count,
                               std::optional<unsigned> seed = std::nullopt);

// Differences between the report and the expected constant-classifier
// verdicts; empty when all hold.
std::vector<std::string> CorollaryDeviations(const AuditReport& r);

}  // namespace fairgame

#endif  // FAIRGAME_REPORT_H_
