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

#include "otdp/brute_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "otdp/errors.hpp"

namespace otdp {

AtomList enumerate_atoms(const ProductDistribution& mu, std::size_t cap) {
  Integer total = 1;
  for (const auto& m : mu.marginals) total *= Integer(m.size());
  if (total > Integer(cap)) {
    throw TooManyAtoms(total.str() + " atoms exceed the enumeration cap " + std::to_string(cap));
  }
  AtomList list;
  const std::size_t dims = mu.dimension();
  if (dims == 0) return list;
  for (const auto& m : mu.marginals) {
    if (m.size() == 0) return list;
  }
  list.atoms.reserve(total.convert_to<std::size_t>());

  // Odometer over (l_1, ..., l_K) with the last index varying fastest.
  std::vector<std::size_t> idx(dims, 0);
  while (true) {
    Atom atom;
    atom.prob = 1;
    atom.point.reserve(dims);
    for (std::size_t k = 0; k < dims; ++k) {
      atom.point.push_back(mu.marginals[k].support[idx[k]]);
      atom.prob *= mu.marginals[k].probs[idx[k]];
    }
    atom.indices = idx;
    list.atoms.push_back(std::move(atom));

    std::size_t k = dims;
    while (k > 0) {
      --k;
      if (++idx[k] < mu.marginals[k].size()) break;
      idx[k] = 0;
      if (k == 0) return list;
    }
  }
}

namespace {

unsigned even_exponent(double p) {
  if (!(p >= 1)) throw InvalidArgument("exponent p must be >= 1");
  if (std::floor(p) != p || std::fmod(p, 2.0) != 0.0 || p > 1e6) {
    throw OddPExact("exact mode needs an even integer p, got " + std::to_string(p));
  }
  return static_cast<unsigned>(p);
}

// Costs |x - y1|^p and |x - y2|^p of one atom, in the requested scalar.
struct ExactCosts {
  unsigned half_p;
  Rational operator()(const RationalVector& x, const RationalVector& y) const {
    return pow(squared_distance(x, y), half_p);
  }
};

struct FloatCosts {
  double p;
  double operator()(const RationalVector& x, const RationalVector& y) const {
    double s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double d = to_double(x[k]) - to_double(y[k]);
      s += d * d;
    }
    return std::pow(s, p / 2.0);
  }
};

template <typename Scalar, typename Costs>
Scalar greedy_cost(const AtomList& list, const TwoPointTarget& target, const Costs& costs,
                   const Scalar& t) {
  struct Row {
    Scalar c1, c2, key, prob;
  };
  std::vector<Row> rows;
  rows.reserve(list.atoms.size());
  for (const auto& a : list.atoms) {
    Scalar c1 = costs(a.point, target.y1);
    Scalar c2 = costs(a.point, target.y2);
    Scalar key = c1 - c2;
    Scalar prob;
    if constexpr (std::is_same_v<Scalar, double>) {
      prob = to_double(a.prob);
    } else {
      prob = a.prob;
    }
    rows.push_back({std::move(c1), std::move(c2), std::move(key), std::move(prob)});
  }
  // Stable sort keeps lexicographic atom order among equal keys.
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].key < rows[b].key; });

  Scalar remaining = t;
  Scalar total = 0;
  for (const std::size_t i : order) {
    const Row& r = rows[i];
    Scalar q = remaining < r.prob ? remaining : r.prob;
    if (q < 0) q = 0;
    remaining -= q;
    total += q * r.c1 + (r.prob - q) * r.c2;
  }
  return total;
}

}  // namespace

OtValue ot_closed_form(const ProductDistribution& mu, const TwoPointTarget& target,
                       const BruteOptions& options) {
  validate_instance(mu, target);
  if (options.mode == ValueMode::kExact) {
    const unsigned p = even_exponent(options.p);
    const AtomList list = enumerate_atoms(mu, options.atom_cap);
    return OtValue{greedy_cost<Rational>(list, target, ExactCosts{p / 2}, target.t), {}, {}, {}};
  }
  if (!(options.p >= 1)) throw InvalidArgument("exponent p must be >= 1");
  const AtomList list = enumerate_atoms(mu, options.atom_cap);
  return OtValue{greedy_cost<double>(list, target, FloatCosts{options.p}, to_double(target.t)),
                 {}, {}, {}};
}

OtValue min_of_wasserstein_over_t(const ProductDistribution& mu, const RationalVector& y1,
                                  const RationalVector& y2, const BruteOptions& options) {
  validate_instance(mu, TwoPointTarget{y1, y2, 0});
  if (options.mode == ValueMode::kExact) {
    const ExactCosts costs{even_exponent(options.p) / 2};
    const AtomList list = enumerate_atoms(mu, options.atom_cap);
    Rational total = 0;
    for (const auto& a : list.atoms) total += a.prob * std::min(costs(a.point, y1), costs(a.point, y2));
    return OtValue{std::move(total), {}, {}, {}};
  }
  if (!(options.p >= 1)) throw InvalidArgument("exponent p must be >= 1");
  const FloatCosts costs{options.p};
  const AtomList list = enumerate_atoms(mu, options.atom_cap);
  double total = 0;
  for (const auto& a : list.atoms) {
    total += to_double(a.prob) * std::min(costs(a.point, y1), costs(a.point, y2));
  }
  return OtValue{total, {}, {}, {}};
}

std::optional<Rational> epsilon_bar(const ProductDistribution& mu, const RationalVector& y1,
                                    const RationalVector& y2, unsigned p, std::size_t cap) {
  validate_instance(mu, TwoPointTarget{y1, y2, 0});
  const ExactCosts costs{even_exponent(static_cast<double>(p)) / 2};
  const AtomList list = enumerate_atoms(mu, cap);
  std::optional<Rational> smallest;
  for (const auto& a : list.atoms) {
    const Rational diff = abs(costs(a.point, y1) - costs(a.point, y2));
    if (diff != 0 && (!smallest || diff < *smallest)) smallest = diff;
  }
  if (!smallest) return std::nullopt;
  return *smallest / Rational(4 * Integer(list.atoms.size()));
}

}  // namespace otdp
