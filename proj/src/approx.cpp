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

#include "otdp/approx.hpp"

#include <map>
#include <utility>

#include "otdp/errors.hpp"

namespace otdp {

namespace {

struct Snapper {
  const Integer& scale;
  Rational max_shift = 0;

  Rational operator()(const Rational& x) {
    Rational snapped(round_half_away(x * scale), scale);
    const Rational shift = abs(snapped - x);
    if (shift > max_shift) max_shift = shift;
    return snapped;
  }
};

}  // namespace

RoundedInstance round_to_lattice(const ProductDistribution& mu, const TwoPointTarget& target,
                                 const Integer& lattice_scale) {
  if (lattice_scale < 1) throw InvalidArgument("lattice scale M must be >= 1");
  Snapper snap{lattice_scale};
  RoundedInstance out;
  for (const auto& m : mu.marginals) {
    // Keep first-seen order of the snapped points.
    std::map<Rational, std::size_t> slot;
    Marginal r;
    for (std::size_t l = 0; l < m.size(); ++l) {
      Rational x = snap(m.support[l]);
      const auto [it, inserted] = slot.emplace(x, r.support.size());
      if (inserted) {
        r.support.push_back(std::move(x));
        r.probs.push_back(m.probs[l]);
      } else {
        r.probs[it->second] += m.probs[l];
      }
    }
    out.mu.marginals.push_back(std::move(r));
  }
  for (const auto& y : target.y1) out.target.y1.push_back(snap(y));
  for (const auto& y : target.y2) out.target.y2.push_back(snap(y));
  out.target.t = target.t;

  out.report.lattice_scale = lattice_scale;
  out.report.u = compute_u(mu, target);
  out.report.max_coordinate_shift = snap.max_shift;
  out.report.guaranteed_error = error_bound(mu.dimension(), out.report.u, Rational(1, lattice_scale));
  return out;
}

Rational error_bound(std::size_t dimension, const Integer& u, const Rational& shift) {
  if (shift < 0) throw InvalidArgument("shift must be nonnegative");
  return Rational(8 * Integer(dimension) * u) * shift;
}

ApproxResult ot_approx(const ProductDistribution& mu, const TwoPointTarget& target,
                       const Rational& eps, const SolverOptions& options) {
  if (eps <= 0) throw InvalidArgument("eps must be positive, got " + to_string(eps));
  validate_instance(mu, target);
  const Integer u = compute_u(mu, target);
  const Integer scale = ceil_integer(Rational(8 * Integer(mu.dimension()) * u) / eps);
  RoundedInstance rounded = round_to_lattice(mu, target, scale);
  OtValue value = ot_exact(rounded.mu, rounded.target, options);
  return ApproxResult{std::move(value), std::move(rounded.report)};
}

}  // namespace otdp
