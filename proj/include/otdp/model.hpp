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

#ifndef OTDP_MODEL_HPP_
#define OTDP_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "otdp/rational.hpp"

namespace otdp {

using RationalVector = std::vector<Rational>;

/// A finite univariate distribution: support[l] carries probability probs[l].
/// Support sizes may differ between marginals.
struct Marginal {
  RationalVector support;
  RationalVector probs;

  std::size_t size() const { return support.size(); }
};

/// Product of independent marginals. The joint distribution has
/// prod_k marginals[k].size() atoms, none of which are ever materialized
/// by the dynamic-programming path.
struct ProductDistribution {
  std::vector<Marginal> marginals;

  std::size_t dimension() const { return marginals.size(); }
};

/// t * delta(y1) + (1 - t) * delta(y2). y1 == y2 is allowed.
struct TwoPointTarget {
  RationalVector y1;
  RationalVector y2;
  Rational t;
};

enum class ValueMode { kExact, kFloat };

/// Result of a transport-distance evaluation. The exact mode holds a
/// Rational, the float mode a binary64. Grid diagnostics are filled in by the
/// dynamic-programming solver only, and only when it ran the CVaR step.
struct OtValue {
  std::variant<Rational, double> value;
  std::optional<std::size_t> grid_size;
  std::optional<std::size_t> minkowski_size;
  std::optional<std::size_t> critical_index;

  ValueMode mode() const {
    return std::holds_alternative<Rational>(value) ? ValueMode::kExact : ValueMode::kFloat;
  }
  /// Throws InvalidArgument for a float-mode value.
  const Rational& exact() const;
  double as_double() const;
};

void validate_marginal(const Marginal& marginal);

/// Checks every invariant of the instance. Throws DimensionMismatch,
/// BadProbabilities, DuplicateSupport or BadT.
void validate_instance(const ProductDistribution& mu, const TwoPointTarget& target);

/// Largest absolute integer appearing in the reduced encoding of the instance
/// (numerators and denominators of all coordinates, probabilities and t).
/// Never less than 1.
Integer compute_u(const ProductDistribution& mu, const TwoPointTarget& target);

/// x^T (y1 - y2), the loss that orders atoms between the two targets.
Rational linear_loss(const RationalVector& point, const TwoPointTarget& target);

Rational squared_distance(const RationalVector& a, const RationalVector& b);

}  // namespace otdp

#endif  // OTDP_MODEL_HPP_
