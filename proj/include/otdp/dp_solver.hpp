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

// Exact squared-Euclidean transport distance between a product distribution
// and a two-point distribution.
//
// W(mu, nu_t) splits into E|x|^2 + E|y|^2 - 2 E[x^T y2] - 2 t CVaR_t[l(x)],
// with l(x) = x^T (y1 - y2). The first three terms factor over coordinates;
// the CVaR needs the law of l(x), which is built by convolving the per
// coordinate laws on a regular grid (dense DP over grid positions).

#ifndef OTDP_DP_SOLVER_HPP_
#define OTDP_DP_SOLVER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "otdp/grid.hpp"
#include "otdp/model.hpp"

namespace otdp {

struct LossEntry {
  Rational value;
  Rational prob;
};

/// Per coordinate k: the distinct increments x_k^l (y1_k - y2_k), ascending,
/// each with the total marginal probability mapping onto it.
struct LossTable {
  std::vector<std::vector<LossEntry>> entries;

  std::size_t dimension() const { return entries.size(); }
  RationalVector all_values() const;
};

struct SolverOptions {
  std::size_t grid_cap = kDefaultGridCap;
};

LossTable loss_table(const ProductDistribution& mu, const TwoPointTarget& target);

/// Law of sum_k l_k over minkowski_grid(grid, K). Every table value must lie
/// on grid. Throws GridTooLarge if the Minkowski grid exceeds cap points.
GriddedPmf convolve_losses(const LossTable& table, const RegularGrid1D& grid,
                           std::size_t cap = kDefaultGridCap);

/// One-based index n_t with cum(n_t) >= 1 - t > cum(n_t - 1). Requires 0 < t < 1.
std::size_t critical_index(const GriddedPmf& pmf, const Rational& t);

/// t * CVaR_t of the loss law, i.e. the expected loss over the worst t mass.
/// t = 0 gives 0 and t = 1 gives the mean.
Rational scaled_cvar(const GriddedPmf& pmf, const Rational& t);

/**
 * Transport distances W(mu, nu_t) for fixed mu, y1, y2 and varying t.
 *
 * The loss law does not depend on t, so it is convolved once at construction;
 * each evaluate() afterwards costs O(|N_K|). Immutable after construction.
 */
class ParametricSolver {
 public:
  ParametricSolver(const ProductDistribution& mu, RationalVector y1, RationalVector y2,
                   const SolverOptions& options = {});

  /// Exact W for t in [0, 1].
  OtValue evaluate(const Rational& t) const;

  const GriddedPmf& loss_pmf() const { return loss_pmf_; }
  std::size_t base_grid_size() const { return base_grid_size_; }

 private:
  RationalVector y1_;
  RationalVector y2_;
  RationalVector first_moments_;
  Rational second_moment_total_;
  GriddedPmf loss_pmf_;
  std::size_t base_grid_size_ = 1;
};

/// Squared-Euclidean transport distance, exactly. t = 0 and t = 1 skip the grid.
OtValue ot_exact(const ProductDistribution& mu, const TwoPointTarget& target,
                 const SolverOptions& options = {});

/// Threshold/fraction encoding of an optimal plan: atoms whose loss exceeds
/// the threshold go entirely to y1, atoms at the threshold send `fraction` of
/// their mass to y1, atoms below go to y2.
struct PlanDescriptor {
  Rational threshold;
  Rational fraction;
  Rational t;
  std::size_t critical_index = 1;
  GriddedPmf loss_pmf;
};

struct PlanMasses {
  Rational to_y1;
  Rational to_y2;
};

/// Requires 0 < t < 1 (throws BadT otherwise).
PlanDescriptor plan_descriptor(const ProductDistribution& mu, const TwoPointTarget& target,
                               const SolverOptions& options = {});

/// Plan row of one atom. Throws NotAnAtom when atom_prob <= 0 or the atom's
/// loss carries no mass under the descriptor's loss law.
PlanMasses plan_query(const PlanDescriptor& desc, const RationalVector& atom,
                      const Rational& atom_prob, const TwoPointTarget& target);

/// Same, with the atom addressed by zero-based marginal support indices.
/// Throws InvalidArgument for out-of-range indices.
PlanMasses plan_query(const PlanDescriptor& desc, const ProductDistribution& mu,
                      std::span<const std::size_t> indices, const TwoPointTarget& target);

}  // namespace otdp

#endif  // OTDP_DP_SOLVER_HPP_
