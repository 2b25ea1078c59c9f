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

#include "otdp/dp_solver.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "otdp/errors.hpp"

namespace otdp {

RationalVector LossTable::all_values() const {
  RationalVector values;
  for (const auto& list : entries) {
    for (const auto& e : list) values.push_back(e.value);
  }
  return values;
}

LossTable loss_table(const ProductDistribution& mu, const TwoPointTarget& target) {
  LossTable table;
  table.entries.reserve(mu.dimension());
  for (std::size_t k = 0; k < mu.dimension(); ++k) {
    const Marginal& m = mu.marginals[k];
    const Rational diff = target.y1[k] - target.y2[k];
    std::map<Rational, Rational> merged;
    for (std::size_t l = 0; l < m.size(); ++l) merged[m.support[l] * diff] += m.probs[l];
    auto& list = table.entries.emplace_back();
    for (auto& [value, prob] : merged) list.push_back({value, prob});
  }
  return table;
}

GriddedPmf convolve_losses(const LossTable& table, const RegularGrid1D& grid, std::size_t cap) {
  const std::size_t dims = table.dimension();
  if (dims == 0) throw InvalidArgument("loss table has no coordinates");
  const Integer needed = Integer(dims) * Integer(grid.count - 1) + 1;
  if (needed > Integer(cap)) {
    throw GridTooLarge("Minkowski grid needs " + needed.str() + " points, cap is " +
                       std::to_string(cap));
  }

  // Increments as (grid position, weight), with weight = prob * scale_k for
  // an integer scale_k per coordinate. Integer sums skip the gcd that every
  // rational addition pays.
  std::vector<std::vector<std::pair<std::size_t, Integer>>> steps(dims);
  Integer scale = 1;
  for (std::size_t k = 0; k < dims; ++k) {
    Integer common = 1;
    for (const auto& e : table.entries[k]) {
      if (e.prob != 0) common = boost::multiprecision::lcm(common, denominator(e.prob));
    }
    for (const auto& e : table.entries[k]) {
      const auto pos = grid.position_of(e.value);
      if (!pos) {
        throw InvalidArgument("loss value " + to_string(e.value) + " is not on the grid");
      }
      if (e.prob != 0) steps[k].emplace_back(*pos, numerator(e.prob) * (common / denominator(e.prob)));
    }
    scale *= common;
  }

  std::vector<Integer> state(grid.count);
  for (const auto& [pos, weight] : steps[0]) state[pos] += weight;

  for (std::size_t k = 1; k < dims; ++k) {
    std::vector<Integer> next((k + 1) * (grid.count - 1) + 1);
    for (std::size_t n = 0; n < state.size(); ++n) {
      if (state[n] == 0) continue;
      for (const auto& [pos, weight] : steps[k]) next[n + pos] += state[n] * weight;
    }
    state = std::move(next);
  }

  RationalVector probs(state.size());
  for (std::size_t n = 0; n < state.size(); ++n) {
    if (state[n] != 0) probs[n] = Rational(state[n], scale);
  }
  return GriddedPmf{minkowski_grid(grid, dims), std::move(probs)};
}

std::size_t critical_index(const GriddedPmf& pmf, const Rational& t) {
  if (t <= 0 || t >= 1) throw BadT("critical index needs 0 < t < 1, got " + to_string(t));
  const Rational level = 1 - t;
  Rational cumulative = 0;
  for (std::size_t n = 0; n < pmf.probs.size(); ++n) {
    cumulative += pmf.probs[n];
    if (cumulative >= level) return n + 1;
  }
  throw BadProbabilities("loss law sums to " + to_string(cumulative) + " < 1 - t");
}

Rational scaled_cvar(const GriddedPmf& pmf, const Rational& t) {
  if (t < 0 || t > 1) throw BadT("t = " + to_string(t) + " is outside [0, 1]");
  if (t == 0) return 0;
  Rational sum = 0;
  if (t == 1) {
    for (std::size_t n = 0; n < pmf.probs.size(); ++n) {
      if (pmf.probs[n] != 0) sum += pmf.probs[n] * pmf.grid.point(n);
    }
    return sum;
  }
  const std::size_t nt = critical_index(pmf, t);
  Rational head = 0;
  for (std::size_t n = 0; n < nt; ++n) head += pmf.probs[n];
  sum = (head - (1 - t)) * pmf.grid.point(nt - 1);
  for (std::size_t n = nt; n < pmf.probs.size(); ++n) {
    if (pmf.probs[n] != 0) sum += pmf.probs[n] * pmf.grid.point(n);
  }
  return sum;
}

ParametricSolver::ParametricSolver(const ProductDistribution& mu, RationalVector y1,
                                   RationalVector y2, const SolverOptions& options)
    : y1_(std::move(y1)), y2_(std::move(y2)) {
  validate_instance(mu, TwoPointTarget{y1_, y2_, 0});
  second_moment_total_ = 0;
  for (const auto& m : mu.marginals) {
    Rational first = 0;
    for (std::size_t l = 0; l < m.size(); ++l) {
      first += m.probs[l] * m.support[l];
      second_moment_total_ += m.probs[l] * m.support[l] * m.support[l];
    }
    first_moments_.push_back(first);
  }
  const LossTable table = loss_table(mu, TwoPointTarget{y1_, y2_, 0});
  const RationalVector values = table.all_values();
  const RegularGrid1D grid = detect_spanned_grid(values, options.grid_cap);
  base_grid_size_ = grid.count;
  loss_pmf_ = convolve_losses(table, grid, options.grid_cap);
}

namespace {

// sum_k E[(x_k - y_k)^2] from the coordinate moments.
Rational point_mass_cost(const Rational& second_total, const RationalVector& first,
                         const RationalVector& y) {
  Rational cost = second_total;
  for (std::size_t k = 0; k < y.size(); ++k) cost += y[k] * y[k] - 2 * y[k] * first[k];
  return cost;
}

Rational squared_norm(const RationalVector& y) {
  Rational s = 0;
  for (const auto& v : y) s += v * v;
  return s;
}

}  // namespace

OtValue ParametricSolver::evaluate(const Rational& t) const {
  if (t < 0 || t > 1) throw BadT("t = " + to_string(t) + " is outside [0, 1]");
  OtValue out{Rational(0), base_grid_size_, loss_pmf_.grid.count, std::nullopt};
  if (t == 0) {
    out.value = point_mass_cost(second_moment_total_, first_moments_, y2_);
    return out;
  }
  if (t == 1) {
    out.value = point_mass_cost(second_moment_total_, first_moments_, y1_);
    return out;
  }
  Rational cross = 0;
  for (std::size_t k = 0; k < y2_.size(); ++k) cross += first_moments_[k] * y2_[k];
  Rational w = second_moment_total_ + t * squared_norm(y1_) + (1 - t) * squared_norm(y2_) -
               2 * cross - 2 * scaled_cvar(loss_pmf_, t);
  out.value = std::move(w);
  out.critical_index = critical_index(loss_pmf_, t);
  return out;
}

OtValue ot_exact(const ProductDistribution& mu, const TwoPointTarget& target,
                 const SolverOptions& options) {
  validate_instance(mu, target);
  if (target.t == 0 || target.t == 1) {
    Rational cost = 0;
    const RationalVector& y = target.t == 0 ? target.y2 : target.y1;
    for (std::size_t k = 0; k < mu.dimension(); ++k) {
      const Marginal& m = mu.marginals[k];
      for (std::size_t l = 0; l < m.size(); ++l) {
        const Rational d = m.support[l] - y[k];
        cost += m.probs[l] * d * d;
      }
    }
    return OtValue{std::move(cost), std::nullopt, std::nullopt, std::nullopt};
  }
  return ParametricSolver(mu, target.y1, target.y2, options).evaluate(target.t);
}

PlanDescriptor plan_descriptor(const ProductDistribution& mu, const TwoPointTarget& target,
                               const SolverOptions& options) {
  validate_instance(mu, target);
  if (target.t == 0 || target.t == 1) {
    throw BadT("plan is trivial for t = " + to_string(target.t));
  }
  const ParametricSolver solver(mu, target.y1, target.y2, options);
  PlanDescriptor desc;
  desc.t = target.t;
  desc.loss_pmf = solver.loss_pmf();
  desc.critical_index = critical_index(desc.loss_pmf, target.t);
  const std::size_t at = desc.critical_index - 1;
  Rational head = 0;
  for (std::size_t n = 0; n <= at; ++n) head += desc.loss_pmf.probs[n];
  desc.threshold = desc.loss_pmf.grid.point(at);
  desc.fraction = (target.t - 1 + head) / desc.loss_pmf.probs[at];
  return desc;
}

PlanMasses plan_query(const PlanDescriptor& desc, const RationalVector& atom,
                      const Rational& atom_prob, const TwoPointTarget& target) {
  if (atom.size() != target.y1.size()) {
    throw DimensionMismatch("atom has " + std::to_string(atom.size()) + " coordinates, target " +
                            std::to_string(target.y1.size()));
  }
  if (atom_prob <= 0) throw NotAnAtom("atom probability must be positive");
  const Rational loss = linear_loss(atom, target);
  const auto pos = desc.loss_pmf.grid.position_of(loss);
  if (!pos || desc.loss_pmf.probs[*pos] == 0) {
    throw NotAnAtom("loss " + to_string(loss) + " carries no mass under mu");
  }
  Rational to_y1 = 0;
  if (loss > desc.threshold) {
    to_y1 = atom_prob;
  } else if (loss == desc.threshold) {
    to_y1 = desc.fraction * atom_prob;
  }
  Rational to_y2 = atom_prob - to_y1;
  return PlanMasses{std::move(to_y1), std::move(to_y2)};
}

PlanMasses plan_query(const PlanDescriptor& desc, const ProductDistribution& mu,
                      std::span<const std::size_t> indices, const TwoPointTarget& target) {
  if (indices.size() != mu.dimension()) {
    throw InvalidArgument("atom needs " + std::to_string(mu.dimension()) + " indices, got " +
                          std::to_string(indices.size()));
  }
  RationalVector atom;
  Rational prob = 1;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const Marginal& m = mu.marginals[k];
    if (indices[k] >= m.size()) {
      throw InvalidArgument("index " + std::to_string(indices[k]) + " out of range for marginal " +
                            std::to_string(k) + " of size " + std::to_string(m.size()));
    }
    atom.push_back(m.support[indices[k]]);
    prob *= m.probs[indices[k]];
  }
  return plan_query(desc, atom, prob, target);
}

}  // namespace otdp
