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


// Empirical scaling of ot_exact in the grid size N and the dimension K.
// Not part of the test suite; prints a table and exits 0.

#include <chrono>
#include <cstdio>

#include "otdp/dp_solver.hpp"

namespace {

using namespace otdp;

double seconds_for(const ProductDistribution& mu, const TwoPointTarget& target, OtValue& out) {
  const auto start = std::chrono::steady_clock::now();
  out = ot_exact(mu, target, SolverOptions{50'000'000});
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// K coordinates, support {0, 1/s, ..., 1} with uniform weights: N = s + 1.
ProductDistribution ladder(std::size_t dims, long s) {
  ProductDistribution mu;
  for (std::size_t k = 0; k < dims; ++k) {
    Marginal m;
    for (long i = 0; i <= s; ++i) {
      m.support.push_back(Rational(i, s));
      m.probs.push_back(Rational(1, s + 1));
    }
    mu.marginals.push_back(m);
  }
  return mu;
}

}  // namespace

int main() {
  std::printf("scaling in N (K = 4)\n%10s %12s %10s\n", "N", "|N_K|", "seconds");
  for (long s = 8; s <= 1024; s *= 2) {
    const auto mu = ladder(4, s);
    const TwoPointTarget target{RationalVector(4, 1), RationalVector(4, 0), Rational(1, 3)};
    OtValue v;
    const double secs = seconds_for(mu, target, v);
    std::printf("%10zu %12zu %10.4f\n", *v.grid_size, *v.minkowski_size, secs);
  }

  std::printf("\nscaling in K (L = 3)\n%10s %12s %10s\n", "K", "|N_K|", "seconds");
  for (std::size_t dims = 2; dims <= 256; dims *= 2) {
    const auto mu = ladder(dims, 2);
    const TwoPointTarget target{RationalVector(dims, 1), RationalVector(dims, 0), Rational(1, 3)};
    OtValue v;
    const double secs = seconds_for(mu, target, v);
    std::printf("%10zu %12zu %10.4f\n", dims, *v.minkowski_size, secs);
  }
  return 0;
}
