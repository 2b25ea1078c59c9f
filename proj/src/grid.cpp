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

#include "otdp/grid.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "otdp/errors.hpp"

namespace otdp {

Rational RegularGrid1D::point(std::size_t position) const {
  return origin + spacing * Rational(Integer(position));
}

std::optional<std::size_t> RegularGrid1D::position_of(const Rational& value) const {
  if (count == 1 || spacing == 0) {
    if (value == origin) return 0;
    return std::nullopt;
  }
  const Rational steps = (value - origin) / spacing;
  if (!is_integer(steps) || steps < 0) return std::nullopt;
  const Integer n = numerator(steps);
  if (n >= Integer(count)) return std::nullopt;
  return n.convert_to<std::size_t>();
}

Rational GriddedPmf::total() const {
  Rational sum = 0;
  for (const auto& p : probs) sum += p;
  return sum;
}

RegularGrid1D detect_spanned_grid(std::span<const Rational> values, std::size_t cap) {
  if (values.empty()) throw EmptyInput("cannot detect a grid spanned by no values");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  RegularGrid1D grid{*lo, 0, 1};
  if (*lo == *hi) return grid;

  Rational spacing = 0;
  for (const auto& v : values) spacing = rational_gcd(spacing, v - *lo);
  const Rational steps = (*hi - *lo) / spacing;
  assert(is_integer(steps));
  const Integer count = numerator(steps) + 1;
  if (count > Integer(cap)) {
    throw GridTooLarge("spanned grid needs " + count.str() + " points, cap is " +
                       std::to_string(cap));
  }
  grid.spacing = spacing;
  grid.count = count.convert_to<std::size_t>();
  return grid;
}

RegularGrid1D minkowski_grid(const RegularGrid1D& grid, std::size_t k) {
  if (k == 0) throw InvalidArgument("Minkowski sum needs k >= 1");
  const Rational factor{Integer(k)};
  return RegularGrid1D{grid.origin * factor, grid.spacing, k * (grid.count - 1) + 1};
}

}  // namespace otdp
