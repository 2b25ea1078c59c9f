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

// Small-instance reference solver. Enumerates every atom of the product
// distribution and solves the two-target transport problem by the sorted
// greedy (a fractional knapsack in the y1 mass). Works for any cost
// |x - y|^p with p >= 1, exactly when p is even and in binary64 otherwise.

#ifndef OTDP_BRUTE_ORACLE_HPP_
#define OTDP_BRUTE_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "otdp/model.hpp"

namespace otdp {

inline constexpr std::size_t kDefaultAtomCap = std::size_t{1} << 20;

struct Atom {
  RationalVector point;
  Rational prob;
  std::vector<std::size_t> indices;  // zero-based support index per marginal
};

/// Atoms in lexicographic order of (l_1, ..., l_K), l_1 most significant.
struct AtomList {
  std::vector<Atom> atoms;
};

/// Throws TooManyAtoms when prod_k L_k exceeds cap.
AtomList enumerate_atoms(const ProductDistribution& mu, std::size_t cap = kDefaultAtomCap);

struct BruteOptions {
  double p = 2.0;
  ValueMode mode = ValueMode::kExact;
  std::size_t atom_cap = kDefaultAtomCap;
};

/// Optimal transport cost by sorting atoms on |x-y1|^p - |x-y2|^p and sending
/// y1's mass t to the cheapest keys first. Throws OddPExact when the exact
/// mode is asked for an exponent that is not an even integer.
OtValue ot_closed_form(const ProductDistribution& mu, const TwoPointTarget& target,
                       const BruteOptions& options = {});

/// sum_i mu_i min(|x_i-y1|^p, |x_i-y2|^p), the minimum of W over t in [0, 1].
OtValue min_of_wasserstein_over_t(const ProductDistribution& mu, const RationalVector& y1,
                                  const RationalVector& y2, const BruteOptions& options = {});

/// (1 / 4I) min over atoms of the nonzero |x_i-y1|^p - |x_i-y2|^p values, I
/// being the atom count. nullopt when every difference vanishes.
std::optional<Rational> epsilon_bar(const ProductDistribution& mu, const RationalVector& y1,
                                    const RationalVector& y2, unsigned p = 2,
                                    std::size_t cap = kDefaultAtomCap);

}  // namespace otdp

#endif  // OTDP_BRUTE_ORACLE_HPP_
