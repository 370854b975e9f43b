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

#ifndef FAIRGAME_DISTRIBUTION_H_
#define FAIRGAME_DISTRIBUTION_H_

#include <map>
#include <string>

#include "fairgame/rational.h"

namespace fairgame {

// Finite-support distribution keyed in canonical (ordered) form. Zero-mass
// atoms are never stored by the helpers below.
template <typename T>
using Distribution = std::map<T, Rational>;

template <typename T>
void AddMass(Distribution<T>& d, const T& key, const Rational& mass) {
  if (mass.IsZero()) return;
  auto [it, inserted] = d.try_emplace(key, mass);
  if (!inserted) {
    it->second += mass;
    if (it->second.IsZero()) d.erase(it);
  }
}

template <typename T>
Rational TotalMass(const Distribution<T>& d) {
  Rational total;
  for (const auto& [k, p] : d) total += p;
  return total;
}

// True iff every atom is non-negative and the masses sum to exactly 1.
template <typename T>
bool IsProbability(const Distribution<T>& d) {
  for (const auto& [k, p] : d) {
    if (p.IsNegative()) return false;
  }
  return TotalMass(d) == Rational(1);
}

template <typename T>
Distribution<T> PointMass(const T& key) {
  return Distribution<T>{{key, Rational(1)}};
}

// Total-variation distance: half the L1 distance between the mass vectors.
template <typename T>
Rational TotalVariation(const Distribution<T>& p, const Distribution<T>& q) {
  Rational sum;
  auto a = p.begin();
  auto b = q.begin();
  while (a != p.end() || b != q.end()) {
    if (b == q.end() || (a != p.end() && a->first < b->first)) {
      sum += Abs(a->second);
      ++a;
    } else if (a == p.end() || b->first < a->first) {
      sum += Abs(b->second);
      ++b;
    } else {
      sum += Abs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return sum / Rational(2);
}

}  // namespace fairgame

#endif  // FAIRGAME_DISTRIBUTION_H_
