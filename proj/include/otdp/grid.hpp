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

#ifndef OTDP_GRID_HPP_
#define OTDP_GRID_HPP_

#include <cstddef>
#include <optional>
#include <span>

#include "otdp/model.hpp"

namespace otdp {

inline constexpr std::size_t kDefaultGridCap = 1'000'000;

/**
 * Arithmetic progression origin, origin + spacing, ..., origin + (count-1)*spacing.
 *
 * A single-point grid has spacing 0 by convention; otherwise spacing > 0.
 * Positions are zero-based throughout the library.
 */
struct RegularGrid1D {
  Rational origin;
  Rational spacing;
  std::size_t count = 1;

  Rational point(std::size_t position) const;
  Rational last() const { return point(count - 1); }

  /// Zero-based position of value, or nullopt when value is off the grid.
  std::optional<std::size_t> position_of(const Rational& value) const;

  friend bool operator==(const RegularGrid1D&, const RegularGrid1D&) = default;
};

/// Probability mass function over the points of a regular grid.
struct GriddedPmf {
  RegularGrid1D grid;
  RationalVector probs;

  Rational total() const;
};

/**
 * Coarsest regular grid spanned by values: origin = min, last point = max,
 * spacing = rational gcd of all offsets from the minimum.
 *
 * Throws EmptyInput for an empty span and GridTooLarge when the grid would
 * hold more than cap points.
 */
RegularGrid1D detect_spanned_grid(std::span<const Rational> values,
                                  std::size_t cap = kDefaultGridCap);

/// k-fold Minkowski sum of grid with itself: same spacing, k*(count-1)+1 points.
RegularGrid1D minkowski_grid(const RegularGrid1D& grid, std::size_t k);

}  // namespace otdp

#endif  // OTDP_GRID_HPP_
