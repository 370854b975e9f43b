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


#ifndef FAIRGAME_TESTS_SUPPORT_ORACLES_H_
#define FAIRGAME_TESTS_SUPPORT_ORACLES_H_

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fairgame/fairness.h"
#include "fairgame/population.h"

namespace fairgame::testing {

// Oracle: independence P(u|a,v) = P(u|v) in cross-multiplied form,
// P(u,a,v) P(v) = P(u,v) P(a,v), computed straight from candidate rows.
inline bool OracleIndependent(const Population& pop, const Classifier& g, const GroupFairnessSpec& s) {
  std::set<std::string> us, vs, as;
  struct Row { std::string u, v, a; Rational p; };
  std::vector<Row> rows;
  for (const auto& c : pop.candidates) {
    for (const auto& [d, p] : g.decisions.at(c.id)) {
      rows.push_back({s.f1.Apply(d, c.label), s.f2.Apply(d, c.label), c.sensitive, c.weight * p});
      us.insert(rows.back().u);
      vs.insert(rows.back().v);
      as.insert(rows.back().a);
    }
  }
  auto mass = [&](const std::string* u, const std::string* a, const std::string* v) {
    Rational m;
    for (const auto& r : rows) {
      if ((!u || r.u == *u) && (!a || r.a == *a) && (!v || r.v == *v)) m += r.p;
    }
    return m;
  };
  for (const auto& u : us) {
    for (const auto& a : as) {
      for (const auto& v : vs) {
        if (mass(&u, &a, &v) * mass(nullptr, nullptr, &v) !=
            mass(&u, nullptr, &v) * mass(nullptr, &a, &v)) {
          return false;
        }
      }
    }
  }
  return true;
}

struct RandomInstance {
  Population pop;
  Classifier g;
  GroupFairnessSpec spec;
};

inline RandomInstance Generate(std::mt19937& rng) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  const std::vector<Rational> ds{Rational(0), Rational(3, 4), Rational(3, 2), Rational(3)};
  const int n = 2 + pick(5);
  const int nd = 1 + pick(3);
  const int ny = 1 + pick(2);
  const int na = 1 + pick(3);
  RandomInstance in;
  std::vector<int> w;
  int total = 0;
  for (int i = 0; i < n; ++i) {
    w.push_back(1 + pick(4));
    total += w.back();
  }
  for (int i = 0; i < n; ++i) {
    in.pop.candidates.push_back({"c" + std::to_string(i), {Rational(i)},
                                 std::string(1, static_cast<char>('a' + pick(na))),
                                 std::to_string(pick(ny)), Rational(w[i], total)});
    DecisionDistribution d;
    // Mostly degenerate rows so that independence holds often enough.
    if (pick(3) == 0) {
      int a = pick(nd), b = pick(nd);
      AddMass(d, ds[a], Rational(1, 2));
      AddMass(d, ds[b], Rational(1, 2));
    } else {
      d = PointMass(ds[pick(nd)]);
    }
    in.g.decisions["c" + std::to_string(i)] = d;
  }
  auto random_map = [&]() {
    switch (pick(4)) {
      case 0: return FeatureMap::Decision();
      case 1: return FeatureMap::Label();
      case 2: return FeatureMap::Constant();
      default: {
        std::map<std::pair<Rational, std::string>, std::string> t;
        for (const auto& d : ds) {
          for (int y = 0; y < 2; ++y) t[{d, std::to_string(y)}] = std::to_string(pick(2));
        }
        return FeatureMap::Table(t);
      }
    }
  };
  in.spec = {"random", random_map(), random_map()};
  return in;
}

}  // namespace fairgame::testing

#endif  // FAIRGAME_TESTS_SUPPORT_ORACLES_H_
