// Copyright 2026 The otdp Authors
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

// Test-only reference computations. Nothing here calls into the solver
// paths under test; each routine recomputes its answer by explicit
// enumeration.

#ifndef OTDP_TESTS_SUPPORT_ORACLES_HPP_
#define OTDP_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "otdp/knapsack_reduction.hpp"
#include "otdp/model.hpp"

namespace otdp::testing {

struct PlainAtom {
  RationalVector point;
  Rational prob;
  std::vector<std::size_t> indices;
};

/// All atoms by recursion over coordinates (independent of enumerate_atoms).
inline std::vector<PlainAtom> all_atoms(const ProductDistribution& mu) {
  std::vector<PlainAtom> out;
  PlainAtom current{{}, 1, {}};
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == mu.dimension()) {
      out.push_back(current);
      return;
    }
    const Marginal& m = mu.marginals[k];
    for (std::size_t l = 0; l < m.size(); ++l) {
      const PlainAtom saved = current;
      current.point.push_back(m.support[l]);
      current.prob *= m.probs[l];
      current.indices.push_back(l);
      rec(k + 1);
      current = saved;
    }
  };
  rec(0);
  return out;
}

/// Law of x^T (y1 - y2) by enumeration; keys are loss values.
inline std::map<Rational, Rational> enumerated_loss_law(const ProductDistribution& mu,
                                                        const TwoPointTarget& target) {
  std::map<Rational, Rational> law;
  for (const auto& a : all_atoms(mu)) {
    Rational loss = 0;
    for (std::size_t k = 0; k < a.point.size(); ++k) {
      loss += a.point[k] * (target.y1[k] - target.y2[k]);
    }
    law[loss] += a.prob;
  }
  return law;
}

/// max { sum_i loss_i q_i : 0 <= q_i <= mu_i, sum q_i = t }, by filling the
/// largest losses first. Equals t * CVaR_t of the loss.
inline Rational greedy_top_mass(const ProductDistribution& mu, const TwoPointTarget& target,
                                const Rational& t) {
  std::vector<std::pair<Rational, Rational>> rows;  // (loss, prob)
  for (const auto& a : all_atoms(mu)) {
    Rational loss = 0;
    for (std::size_t k = 0; k < a.point.size(); ++k) {
      loss += a.point[k] * (target.y1[k] - target.y2[k]);
    }
    rows.emplace_back(loss, a.prob);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  Rational remaining = t;
  Rational value = 0;
  for (const auto& [loss, prob] : rows) {
    const Rational q = std::min(remaining, prob);
    value += q * loss;
    remaining -= q;
  }
  return value;
}

/// Transport cost for two targets with c = squared distance, solved as the
/// fractional knapsack over atoms sorted by c1 - c2 (ties arbitrary).
inline Rational enumerated_w2(const ProductDistribution& mu, const TwoPointTarget& target) {
  struct Row {
    Rational c1, c2, prob;
  };
  std::vector<Row> rows;
  for (const auto& a : all_atoms(mu)) {
    Rational c1 = 0;
    Rational c2 = 0;
    for (std::size_t k = 0; k < a.point.size(); ++k) {
      c1 += (a.point[k] - target.y1[k]) * (a.point[k] - target.y1[k]);
      c2 += (a.point[k] - target.y2[k]) * (a.point[k] - target.y2[k]);
    }
    rows.push_back({c1, c2, a.prob});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.c1 - a.c2 < b.c1 - b.c2; });
  Rational remaining = target.t;
  Rational total = 0;
  for (const auto& r : rows) {
    const Rational q = std::min(remaining, r.prob);
    total += q * r.c1 + (r.prob - q) * r.c2;
    remaining -= q;
  }
  return total;
}

/// Number of 0/1 vectors x with w^T x <= b, by visiting all 2^K subsets.
inline std::uint64_t enumerated_knapsack_count(const KnapsackInstance& inst) {
  const std::size_t dims = inst.weights.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dims); ++mask) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < dims; ++k) {
      if (mask >> k & 1U) total += inst.weights[k];
    }
    if (total <= inst.capacity) ++count;
  }
  return count;
}

}  // namespace otdp::testing

#endif  // OTDP_TESTS_SUPPORT_ORACLES_HPP_
