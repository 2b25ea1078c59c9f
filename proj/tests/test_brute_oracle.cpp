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


#include <cmath>

#include "doctest.h"
#include "otdp/brute_oracle.hpp"
#include "otdp/dp_solver.hpp"
#include "otdp/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using otdp::BruteOptions;
using otdp::Marginal;
using otdp::ProductDistribution;
using otdp::Rational;
using otdp::RationalVector;
using otdp::TwoPointTarget;
using otdp::ValueMode;

namespace {

ProductDistribution half_zero_one() {
  return ProductDistribution{{Marginal{{0, 1}, {Rational(1, 2), Rational(1, 2)}}}};
}

ProductDistribution uniform(std::size_t dims, std::size_t size) {
  ProductDistribution mu;
  for (std::size_t k = 0; k < dims; ++k) {
    Marginal m;
    for (std::size_t l = 0; l < size; ++l) {
      m.support.push_back(Rational(static_cast<long>(l)));
      m.probs.push_back(Rational(1, static_cast<long>(size)));
    }
    mu.marginals.push_back(m);
  }
  return mu;
}

BruteOptions with_p(double p, ValueMode mode = ValueMode::kExact) {
  BruteOptions o;
  o.p = p;
  o.mode = mode;
  return o;
}

}  // namespace

TEST_CASE("enumerate_atoms examples") {
  const auto two = otdp::enumerate_atoms(uniform(2, 2));
  REQUIRE(two.atoms.size() == 4);
  for (const auto& a : two.atoms) CHECK(a.prob == Rational(1, 4));
  // Lexicographic order, first coordinate most significant.
  CHECK(two.atoms[1].indices == std::vector<std::size_t>{0, 1});
  CHECK(two.atoms[2].indices == std::vector<std::size_t>{1, 0});
  CHECK(two.atoms[2].point == RationalVector{1, 0});

  const ProductDistribution single{{Marginal{{5}, {1}}}};
  const auto one = otdp::enumerate_atoms(single);
  REQUIRE(one.atoms.size() == 1);
  CHECK(one.atoms[0].point == RationalVector{5});
  CHECK(one.atoms[0].prob == 1);

  const auto cube = otdp::enumerate_atoms(uniform(3, 3));
  REQUIRE(cube.atoms.size() == 27);
  Rational total = 0;
  for (const auto& a : cube.atoms) {
    CHECK(a.prob == Rational(1, 27));
    total += a.prob;
  }
  CHECK(total == 1);

  CHECK_THROWS_AS(otdp::enumerate_atoms(uniform(3, 3), 26), otdp::TooManyAtoms);
}

TEST_CASE("ot_closed_form on the two-atom example") {
  const TwoPointTarget t0{{1}, {2}, 0};
  // (1 + 2^p) / 2 for p = 2 and p = 4.
  CHECK(otdp::ot_closed_form(half_zero_one(), t0, with_p(2)).exact() == Rational(5, 2));
  CHECK(otdp::ot_closed_form(half_zero_one(), t0, with_p(4)).exact() == Rational(17, 2));
  CHECK(otdp::ot_closed_form(half_zero_one(), t0, with_p(6)).exact() == Rational(65, 2));

  const auto f = otdp::ot_closed_form(half_zero_one(), t0, with_p(3, ValueMode::kFloat));
  CHECK(f.mode() == ValueMode::kFloat);
  CHECK(f.as_double() == doctest::Approx(4.5));
  const auto f15 = otdp::ot_closed_form(half_zero_one(), t0, with_p(1.5, ValueMode::kFloat));
  CHECK(std::isfinite(f15.as_double()));
  CHECK(f15.as_double() == doctest::Approx(0.5 * (std::pow(2.0, 1.5) + 1.0)));
  CHECK_THROWS_AS(f15.exact(), otdp::InvalidArgument);
}

TEST_CASE("ot_closed_form errors") {
  const TwoPointTarget t0{{1}, {2}, 0};
  CHECK_THROWS_AS(otdp::ot_closed_form(half_zero_one(), t0, with_p(3)), otdp::OddPExact);
  CHECK_THROWS_AS(otdp::ot_closed_form(half_zero_one(), t0, with_p(2.5)), otdp::OddPExact);
  CHECK_THROWS_AS(otdp::ot_closed_form(half_zero_one(), t0, with_p(0.5, ValueMode::kFloat)),
                  otdp::InvalidArgument);
  BruteOptions capped = with_p(2);
  capped.atom_cap = 1;
  CHECK_THROWS_AS(otdp::ot_closed_form(half_zero_one(), t0, capped), otdp::TooManyAtoms);
}

TEST_CASE("ot_closed_form agrees with the DP solver on a binary instance") {
  const ProductDistribution mu = uniform(2, 2);
  const TwoPointTarget target{{0, 0}, {1, 1}, Rational(1, 2)};
  CHECK(otdp::ot_closed_form(mu, target).exact() == otdp::ot_exact(mu, target).exact());
}

TEST_CASE("uniform binary W matches the unweighted closed form term by term") {
  // For uniform mu over I atoms sorted by c1 - c2, W(t) = (1/I)[sum_{i<=floor(tI)} c1_i
  // + sum_{i>floor(tI)} c2_i] + (tI - floor(tI))/I (c1 - c2)_{floor(tI)+1}.
  otdp::testing::Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = otdp::testing::binary_uniform_instance(rng, 3);
    const auto atoms = otdp::testing::all_atoms(inst.mu);
    std::vector<std::pair<Rational, Rational>> costs;
    for (const auto& a : atoms) {
      costs.emplace_back(otdp::squared_distance(a.point, inst.target.y1),
                         otdp::squared_distance(a.point, inst.target.y2));
    }
    std::sort(costs.begin(), costs.end(), [](const auto& a, const auto& b) {
      return a.first - a.second < b.first - b.second;
    });
    const long count = static_cast<long>(costs.size());
    for (int j = 0; j < 5; ++j) {
      const Rational t = otdp::testing::random_t(rng, 24, false);
      const Rational scaled = t * count;
      const long whole = otdp::floor_integer(scaled).convert_to<long>();
      Rational expected = 0;
      for (long i = 0; i < count; ++i) expected += i < whole ? costs[i].first : costs[i].second;
      if (whole < count) expected += (scaled - whole) * (costs[whole].first - costs[whole].second);
      expected /= count;
      const TwoPointTarget target{inst.target.y1, inst.target.y2, t};
      CHECK(otdp::ot_closed_form(inst.mu, target).exact() == expected);
    }
  }
}

TEST_CASE("tie-breaking does not change the value") {
  // Mirror the atom order; the greedy then breaks ties the other way.
  otdp::testing::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = otdp::testing::random_instance(rng);
    ProductDistribution reversed = inst.mu;
    for (auto& m : reversed.marginals) {
      std::reverse(m.support.begin(), m.support.end());
      std::reverse(m.probs.begin(), m.probs.end());
    }
    CHECK(otdp::ot_closed_form(inst.mu, inst.target).exact() ==
          otdp::ot_closed_form(reversed, inst.target).exact());
  }
}

TEST_CASE("min_of_wasserstein_over_t") {
  // 1/2 min(1, 4) + 1/2 min(0, 1).
  CHECK(otdp::min_of_wasserstein_over_t(half_zero_one(), {1}, {2}).exact() == Rational(1, 2));

  const ProductDistribution mu{{Marginal{{0, 3}, {Rational(1, 3), Rational(2, 3)}}}};
  for (const Rational t : {Rational(0), Rational(1, 2), Rational(1)}) {
    CHECK(otdp::min_of_wasserstein_over_t(mu, {1}, {1}).exact() ==
          otdp::ot_closed_form(mu, TwoPointTarget{{1}, {1}, t}).exact());
  }

  otdp::testing::Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = otdp::testing::random_instance(rng);
    const Rational lower =
        otdp::min_of_wasserstein_over_t(inst.mu, inst.target.y1, inst.target.y2).exact();
    // Minimizer: all mass of atoms strictly preferring y1.
    Rational t_star = 0;
    for (const auto& a : otdp::testing::all_atoms(inst.mu)) {
      if (otdp::squared_distance(a.point, inst.target.y1) <
          otdp::squared_distance(a.point, inst.target.y2)) {
        t_star += a.prob;
      }
    }
    CHECK(otdp::ot_closed_form(inst.mu, TwoPointTarget{inst.target.y1, inst.target.y2, t_star}).exact() ==
          lower);
    CHECK(otdp::ot_closed_form(inst.mu, inst.target).exact() >= lower);
  }
}

TEST_CASE("epsilon_bar examples") {
  CHECK(otdp::epsilon_bar(half_zero_one(), {1}, {2}) == Rational(1, 8));
  CHECK_FALSE(otdp::epsilon_bar(half_zero_one(), {1}, {1}).has_value());
  // Differences over {0,1}^2 with y1 = 0, y2 = (2, 0): -4, -4, 0, 0; min nonzero 4, I = 4.
  CHECK(otdp::epsilon_bar(uniform(2, 2), {0, 0}, {2, 0}) == Rational(1, 4));
  CHECK_THROWS_AS(otdp::epsilon_bar(half_zero_one(), {1}, {2}, 3), otdp::OddPExact);

  otdp::testing::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = otdp::testing::random_instance(rng);
    bool some_preference = false;
    for (const auto& a : otdp::testing::all_atoms(inst.mu)) {
      some_preference = some_preference || otdp::squared_distance(a.point, inst.target.y1) !=
                                               otdp::squared_distance(a.point, inst.target.y2);
    }
    const auto eps = otdp::epsilon_bar(inst.mu, inst.target.y1, inst.target.y2);
    CHECK(eps.has_value() == some_preference);
    if (eps) CHECK(*eps > 0);
  }
}
