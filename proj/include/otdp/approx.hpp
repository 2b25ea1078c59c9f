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

#ifndef OTDP_APPROX_HPP_
#define OTDP_APPROX_HPP_

#include "otdp/dp_solver.hpp"
#include "otdp/model.hpp"

namespace otdp {

struct RoundingReport {
  Integer lattice_scale;  // M: coordinates are snapped to Z / M
  Integer u;              // instance magnitude bound
  Rational max_coordinate_shift;
  Rational guaranteed_error;  // 8 K U / M
};

struct RoundedInstance {
  ProductDistribution mu;
  TwoPointTarget target;
  RoundingReport report;
};

/// Snaps every support and target coordinate to the nearest point of Z / M,
/// exact halves away from zero. Probabilities and t are untouched; support
/// points of a marginal that land on the same lattice point are merged.
RoundedInstance round_to_lattice(const ProductDistribution& mu, const TwoPointTarget& target,
                                 const Integer& lattice_scale);

/// 8 K U shift: the bound on |W - W~| when every support point moves by at
/// most `shift` in the max norm inside [-U, U]^K.
Rational error_bound(std::size_t dimension, const Integer& u, const Rational& shift);

struct ApproxResult {
  OtValue value;
  RoundingReport report;
};

/// W to within absolute error eps: rounds onto Z / M with M = ceil(8 K U / eps)
/// and solves the rounded instance exactly. Throws InvalidArgument for
/// eps <= 0 and GridTooLarge when the rounded grid exceeds the cap.
ApproxResult ot_approx(const ProductDistribution& mu, const TwoPointTarget& target,
                       const Rational& eps, const SolverOptions& options = {});

}  // namespace otdp

#endif  // OTDP_APPROX_HPP_
