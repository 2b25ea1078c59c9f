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

#include "otdp/model.hpp"

#include <algorithm>
#include <string>

#include "otdp/errors.hpp"

namespace otdp {

const Rational& OtValue::exact() const {
  if (const auto* r = std::get_if<Rational>(&value)) return *r;
  throw InvalidArgument("value was computed in float mode");
}

double OtValue::as_double() const {
  if (const auto* r = std::get_if<Rational>(&value)) return to_double(*r);
  return std::get<double>(value);
}

void validate_marginal(const Marginal& marginal) {
  if (marginal.support.empty()) {
    throw BadProbabilities("marginal has an empty support");
  }
  if (marginal.support.size() != marginal.probs.size()) {
    throw DimensionMismatch("marginal has " + std::to_string(marginal.support.size()) +
                            " support points but " + std::to_string(marginal.probs.size()) +
                            " probabilities");
  }
  Rational total = 0;
  for (const auto& p : marginal.probs) {
    if (p < 0) throw BadProbabilities("negative probability " + to_string(p));
    total += p;
  }
  if (total != 1) {
    throw BadProbabilities("probabilities sum to " + to_string(total) + ", not 1");
  }
  RationalVector sorted = marginal.support;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw DuplicateSupport("support point " + to_string(*dup) + " listed twice");
  }
}

void validate_instance(const ProductDistribution& mu, const TwoPointTarget& target) {
  const std::size_t k = mu.dimension();
  if (k == 0) throw DimensionMismatch("product distribution needs at least one marginal");
  if (target.y1.size() != k || target.y2.size() != k) {
    throw DimensionMismatch("K = " + std::to_string(k) + " marginals but y1 has " +
                            std::to_string(target.y1.size()) + " and y2 has " +
                            std::to_string(target.y2.size()) + " coordinates");
  }
  if (target.t < 0 || target.t > 1) {
    throw BadT("t = " + to_string(target.t) + " is outside [0, 1]");
  }
  for (const auto& m : mu.marginals) validate_marginal(m);
}

namespace {

void absorb(Integer& u, const Rational& r) {
  u = std::max(u, boost::multiprecision::abs(numerator(r)));
  u = std::max(u, denominator(r));
}

}  // namespace

Integer compute_u(const ProductDistribution& mu, const TwoPointTarget& target) {
  Integer u = 1;
  for (const auto& m : mu.marginals) {
    for (const auto& x : m.support) absorb(u, x);
    for (const auto& p : m.probs) absorb(u, p);
  }
  for (const auto& y : target.y1) absorb(u, y);
  for (const auto& y : target.y2) absorb(u, y);
  absorb(u, target.t);
  return u;
}

Rational linear_loss(const RationalVector& point, const TwoPointTarget& target) {
  Rational loss = 0;
  for (std::size_t k = 0; k < point.size(); ++k) {
    loss += point[k] * (target.y1[k] - target.y2[k]);
  }
  return loss;
}

Rational squared_distance(const RationalVector& a, const RationalVector& b) {
  Rational total = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Rational d = a[k] - b[k];
    total += d * d;
  }
  return total;
}

}  // namespace otdp
