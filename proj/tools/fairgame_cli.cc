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


#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "fairgame/errors.h"
#include "fairgame/report.h"
#include "fairgame/scenario.h"

namespace {

constexpr int kOk = 0;
constexpr int kDeviation = 1;
constexpr int kConfigError = 2;
constexpr int kBudgetExceeded = 3;

struct Options {
  std::string config;
  std::string out;
  std::string format = "json";
  std::string grid_step;
  std::string concept_name;
  long long budget = 0;
  bool timing = false;
  int groups = 2;
  std::optional<unsigned> seed;
};

fairgame::Json LoadWithOverrides(const Options& o) {
  fairgame::Json doc = fairgame::ReadJsonFile(o.config);
  if (!doc.is_object()) throw fairgame::ConfigError(o.config + ": expected a JSON object");
  if (!o.grid_step.empty()) {
    doc["market"].erase("offer_grid");
    doc["market"]["grid_step"] = o.grid_step;
  }
  if (!o.concept_name.empty()) doc["concept"] = o.concept_name;
  if (o.budget > 0) doc["budget"] = o.budget;
  return doc;
}

// Appends a check of `type` unless one of `types` is already listed.
void EnsureCheck(fairgame::Json& doc, const std::set<std::string>& types, const std::string& type) {
  if (!doc.contains("checks")) doc["checks"] = fairgame::Json::array();
  for (const auto& c : doc["checks"]) {
    if (c.contains("type") && c["type"].is_string() && types.count(c["type"].get<std::string>())) {
      return;
    }
  }
  doc["checks"].push_back({{"type", type}});
}

int RunScenario(const Options& o, const std::set<std::string>& only, const std::string& fallback) {
  fairgame::Json doc = LoadWithOverrides(o);
  if (!only.empty()) EnsureCheck(doc, only, fallback);
  fairgame::Scenario s = fairgame::ParseScenario(doc);
  auto report = fairgame::RunAudit(s, only, o.timing);
  fairgame::EmitReport(report, o.format, o.out, o.timing);
  return kOk;
}

int ReproduceCorollary(const Options& o) {
  const auto step = fairgame::Rational::Parse(o.grid_step.empty() ? "1/4" : o.grid_step);
  auto report = fairgame::ReproduceCorollary(step, o.groups, o.seed);
  fairgame::EmitReport(report, o.format, o.out, false);
  const auto deviations = fairgame::CorollaryDeviations(report);
  for (const auto& d : deviations) std::cerr << "deviation: " << d << "\n";
  return deviations.empty() ? kOk : kDeviation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairgame: fairness audits of classifiers as strategies in hiring-market games"};
  app.require_subcommand(1);
  Options o;

  auto scenario_flags = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config, "scenario JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--grid-step", o.grid_step, "override the offer grid step, p/q");
    sub->add_option("--concept", o.concept_name, "override the solution concept")
        ->check(CLI::IsMember({"nash", "sce"}));
    sub->add_option("--budget", o.budget, "override the enumeration budget")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--timing", o.timing, "include per-check timings (outside the report body)");
  };

  struct Mode {
    const char* name;
    const char* help;
    std::set<std::string> only;
    std::string fallback;
  };
  const Mode modes[] = {
      {"audit", "run every check in the scenario", {}, ""},
      {"enumerate", "list the equilibria of the scenario's game", {"enumerate"}, "enumerate"},
      {"detect-blatant", "detect blatant unfairness among the game's equilibria",
       {"detect_blatant"}, "detect_blatant"},
      {"construct", "build the scenario's constructed classifier", {"construct"}, "construct"},
      {"check-sce", "check the scenario's profile against its beliefs", {"sce", "nash"}, "sce"},
  };
  const Mode* chosen = nullptr;
  for (const auto& m : modes) {
    auto* sub = app.add_subcommand(m.name, m.help);
    scenario_flags(sub);
    sub->callback([&chosen, &m] { chosen = &m; });
  }

  bool corollary = false;
  auto* rc = app.add_subcommand("reproduce-corollary",
                                "audit the constant classifier on the canonical six-candidate "
                                "population; exits 1 if a verdict deviates");
  rc->add_option("--grid-step", o.grid_step, "offer grid step, p/q (default 1/4)");
  rc->add_option("--groups", o.groups, "number of sensitive groups")->check(CLI::PositiveNumber);
  rc->add_option("--seed", o.seed, "shuffle candidate order and group assignment");
  rc->add_option("--out", o.out, "output path (default stdout)");
  rc->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  rc->callback([&corollary] { corollary = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (corollary) return ReproduceCorollary(o);
    return RunScenario(o, chosen->only, chosen->fallback);
  } catch (const fairgame::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {  // ConfigError, HypothesisFailure, parse errors
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDeviation;
  }
}
