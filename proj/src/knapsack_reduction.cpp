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

#include "otdp/knapsack_reduction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <utility>

#include "otdp/errors.hpp"

namespace otdp {

KnapsackInstance parity_normalize(const KnapsackInstance& inst) {
  constexpr std::uint64_t kLimit = std::numeric_limits<std::uint64_t>::max() / 2;
  KnapsackInstance out;
  out.weights.reserve(inst.weights.size());
  for (const auto w : inst.weights) {
    if (w > kLimit) throw InvalidArgument("weight too large to normalize");
    out.weights.push_back(2 * w);
  }
  if (inst.capacity >= kLimit) throw InvalidArgument("capacity too large to normalize");
  out.capacity = 2 * inst.capacity + 1;
  return out;
}

ReductionTarget reduction_target(const KnapsackInstance& inst) {
  Integer norm2 = 0;
  for (const auto w : inst.weights) norm2 += Integer(w) * Integer(w);
  if (norm2 == 0) throw ZeroWeights("reduction needs a nonzero weight vector");

  ReductionTarget target;
  const Rational scale(2 * Integer(inst.capacity), norm2);
  for (const auto w : inst.weights) {
    target.mu.marginals.push_back(Marginal{{0, 1}, {Rational(1, 2), Rational(1, 2)}});
    target.y1.push_back(0);
    target.y2.push_back(scale * Integer(w));
  }
  return target;
}

OracleFactory exact_oracle(const SolverOptions& options) {
  return [options](const ReductionTarget& target) -> OtOracle {
    auto solver = std::make_shared<const ParametricSolver>(target.mu, target.y1, target.y2, options);
    return [solver](const Rational& t) { return solver->evaluate(t).exact(); };
  };
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

OracleFactory noisy_oracle(OracleFactory base, Rational magnitude, NoisePattern pattern,
                           std::uint64_t seed) {
  return [base = std::move(base), magnitude = std::move(magnitude), pattern,
          seed](const ReductionTarget& target) -> OtOracle {
    OtOracle inner = base(target);
    const Integer atom_count = Integer(1) << static_cast<unsigned>(target.mu.dimension());
    return [inner = std::move(inner), magnitude, pattern, seed, atom_count](const Rational& t) {
      const Rational scaled = t * atom_count;
      // Off-breakpoint t values get the even-index sign.
      const Integer i = is_integer(scaled) ? numerator(scaled) : Integer(0);
      bool up = false;
      if (pattern == NoisePattern::kAlternating) {
        up = (i & 1) == 0;
      } else {
        const auto low = (i & Integer(std::numeric_limits<std::uint64_t>::max()))
                             .convert_to<std::uint64_t>();
        up = (splitmix64(low ^ seed) & 1U) == 0;
      }
      const Rational w = inner(t);
      return up ? Rational(w + magnitude) : Rational(w - magnitude);
    };
  };
}

Rational slope(const Integer& i, const Integer& atom_count, const OtOracle& oracle) {
  if (i < 1 || i > atom_count) throw InvalidArgument("slope index out of range");
  return oracle(Rational(i, atom_count)) - oracle(Rational(i - 1, atom_count));
}

CountResult count_via_ot(const KnapsackInstance& inst, const OracleFactory& factory) {
  const std::size_t dims = inst.weights.size();
  if (dims == 0) return CountResult{1, 0};
  const Integer atom_count = Integer(1) << static_cast<unsigned>(dims);
  if (std::all_of(inst.weights.begin(), inst.weights.end(), [](auto w) { return w == 0; })) {
    return CountResult{atom_count, 0};
  }

  const KnapsackInstance normalized = parity_normalize(inst);
  const OtOracle oracle = factory(reduction_target(normalized));

  std::map<Integer, Rational> memo;  // breakpoint index -> W(index / I)
  auto value_at = [&](const Integer& i) -> const Rational& {
    auto it = memo.find(i);
    if (it == memo.end()) it = memo.emplace(i, oracle(Rational(i, atom_count))).first;
    return it->second;
  };
  // a_0 is -infinity.
  auto slope_nonpositive = [&](const Integer& n) {
    if (n == 0) return true;
    return value_at(n) - value_at(n - 1) <= 0;
  };

  Integer lo = 0;
  Integer hi = atom_count;
  for (std::size_t k = 0; k < dims; ++k) {
    const Integer mid = (lo + hi) / 2;
    if (slope_nonpositive(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // hi is either a visited index with a positive slope or the never visited I.
  const Integer count = slope_nonpositive(hi) ? hi : lo;
  return CountResult{count, memo.size()};
}

Integer count_dp(const KnapsackInstance& inst) {
  std::uint64_t total = 0;
  bool saturates = false;
  for (const auto w : inst.weights) {
    if (w > std::numeric_limits<std::uint64_t>::max() - total) {
      saturates = true;
      break;
    }
    total += w;
  }
  if (!saturates && inst.capacity >= total) {
    return Integer(1) << static_cast<unsigned>(inst.weights.size());
  }
  const std::uint64_t cap = inst.capacity;
  if (cap > (std::uint64_t{1} << 28)) throw InvalidArgument("capacity too large for the DP counter");

  // ways[c] = number of subsets of the items seen so far with weight exactly c.
  std::vector<Integer> ways(cap + 1, Integer(0));
  ways[0] = 1;
  for (const auto w : inst.weights) {
    if (w > cap) continue;
    for (std::uint64_t c = cap; c + 1 > w; --c) {
      if (ways[c - w] != 0) ways[c] += ways[c - w];
      if (c == 0) break;
    }
  }
  Integer count = 0;
  for (const auto& n : ways) count += n;
  return count;
}

}  // namespace otdp
