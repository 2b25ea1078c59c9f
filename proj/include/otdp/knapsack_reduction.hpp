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

// Counting knapsack solutions with a transport-distance oracle.
//
// For mu uniform on {0,1}^K, y1 = 0 and y2 = 2b w / |w|^2, an atom x prefers
// y1 exactly when w^T x < b. W(mu, nu_t) is convex and piecewise affine in t
// with breakpoints at i / 2^K, and the number of feasible subsets is the last
// breakpoint index whose slope is nonpositive. Binary search over the slopes
// needs about 2K oracle values.

#ifndef OTDP_KNAPSACK_REDUCTION_HPP_
#define OTDP_KNAPSACK_REDUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "otdp/dp_solver.hpp"
#include "otdp/model.hpp"

namespace otdp {

struct KnapsackInstance {
  std::vector<std::uint64_t> weights;
  std::uint64_t capacity = 0;
};

/// (2w, 2b + 1): same feasible subsets, even weights and odd capacity.
KnapsackInstance parity_normalize(const KnapsackInstance& inst);

struct ReductionTarget {
  ProductDistribution mu;
  RationalVector y1;
  RationalVector y2;
};

/// Uniform binary mu, y1 = 0, y2 = (2b / |w|^2) w. Throws ZeroWeights for w = 0.
ReductionTarget reduction_target(const KnapsackInstance& inst);

/// Value of W(mu, nu_t) for the fixed reduction target, as a function of t.
using OtOracle = std::function<Rational(const Rational& t)>;
using OracleFactory = std::function<OtOracle(const ReductionTarget&)>;

/// Oracle backed by the exact dynamic-programming solver.
OracleFactory exact_oracle(const SolverOptions& options = {});

enum class NoisePattern {
  kAlternating,  // +m at even breakpoints i, -m at odd ones
  kHashed,       // sign from a seeded hash of i
};

/// Wraps base so that every value at t = i / 2^K is shifted by +-magnitude.
OracleFactory noisy_oracle(OracleFactory base, Rational magnitude,
                           NoisePattern pattern = NoisePattern::kAlternating,
                           std::uint64_t seed = 0);

/// oracle(i / atom_count) - oracle((i - 1) / atom_count).
Rational slope(const Integer& i, const Integer& atom_count, const OtOracle& oracle);

struct CountResult {
  Integer count;
  std::size_t oracle_calls = 0;  // distinct t values evaluated
};

/// Number of subsets with total weight <= capacity, via binary search on
/// oracle slopes. Exact whenever each oracle value is within epsilon_bar of
/// the true distance.
CountResult count_via_ot(const KnapsackInstance& inst,
                         const OracleFactory& factory = exact_oracle());

/// Reference counter: subset-sum counting DP over capacities 0..b.
Integer count_dp(const KnapsackInstance& inst);

}  // namespace otdp

#endif  // OTDP_KNAPSACK_REDUCTION_HPP_
