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

// otdp: command-line front end.
//
//   otdp exact  INSTANCE
//   otdp brute  INSTANCE [--p P] [--mode exact|float] [--cap N]
//   otdp approx INSTANCE --eps R
//   otdp count  --weights w1,w2,... --capacity B [--via ot|dp|both] [--noise R]
//   otdp plan   INSTANCE --atom l1,...,lK
//
// Exit codes: 0 ok, 2 bad input, 3 grid cap, 4 atom cap, 5 ot/dp disagreement.
// OTDP_MAX_GRID overrides the default grid cap.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "otdp/approx.hpp"
#include "otdp/brute_oracle.hpp"
#include "otdp/dp_solver.hpp"
#include "otdp/errors.hpp"
#include "otdp/instance_io.hpp"
#include "otdp/knapsack_reduction.hpp"

namespace {

using nlohmann::json;
using namespace otdp;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGridCap = 3;
constexpr int kExitAtomCap = 4;
constexpr int kExitDisagree = 5;

std::size_t grid_cap_from_env() {
  const char* raw = std::getenv("OTDP_MAX_GRID");
  if (raw == nullptr || *raw == '\0') return kDefaultGridCap;
  const std::string text(raw);
  std::size_t used = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || cap == 0 || text.front() == '-') {
    throw InvalidArgument("OTDP_MAX_GRID must be a positive integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(cap);
}

template <typename T>
std::vector<T> split_list(const std::string& text, const char* what) {
  std::vector<T> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidArgument(std::string("bad ") + what + " entry '" + item + "'");
    }
    try {
      out.push_back(static_cast<T>(std::stoull(item)));
    } catch (const std::out_of_range&) {
      throw InvalidArgument(std::string(what) + " entry '" + item + "' is too large");
    }
  }
  if (text.back() == ',') throw InvalidArgument(std::string("trailing comma in ") + what);
  return out;
}

void emit(const json& doc) { std::cout << doc.dump() << std::endl; }

int run_exact(const std::string& path) {
  const InstanceDocument doc = load_instance(path);
  const OtValue v = ot_exact(doc.mu, doc.target, SolverOptions{grid_cap_from_env()});
  emit(ResultDocument::from(v, "exact").to_json());
  return kExitOk;
}

int run_brute(const std::string& path, std::optional<double> p, const std::string& mode,
              std::size_t cap) {
  const InstanceDocument doc = load_instance(path);
  BruteOptions options;
  options.p = p.value_or(doc.p);
  options.mode = mode == "float" ? ValueMode::kFloat : ValueMode::kExact;
  options.atom_cap = cap;
  const OtValue v = ot_closed_form(doc.mu, doc.target, options);
  json out = ResultDocument::from(v, mode).to_json();
  if (options.mode == ValueMode::kExact) {
    const auto eps = epsilon_bar(doc.mu, doc.target.y1, doc.target.y2,
                                 static_cast<unsigned>(options.p), cap);
    out["epsilon_bar"] = eps ? json(to_string(*eps)) : json(nullptr);
  }
  emit(out);
  return kExitOk;
}

int run_approx(const std::string& path, const std::string& eps_text) {
  const Rational eps = parse_rational(eps_text);
  if (eps <= 0) throw InvalidArgument("--eps must be positive");
  const InstanceDocument doc = load_instance(path);
  const ApproxResult r = ot_approx(doc.mu, doc.target, eps, SolverOptions{grid_cap_from_env()});
  ResultDocument out = ResultDocument::from(r.value, "approx");
  out.error_bound = r.report.guaranteed_error;
  json j = out.to_json();
  j["lattice_M"] = r.report.lattice_scale.str();
  emit(j);
  return kExitOk;
}

int run_count(const std::string& weights, std::uint64_t capacity, const std::string& via,
              const std::optional<std::string>& noise) {
  KnapsackInstance inst{split_list<std::uint64_t>(weights, "weight"), capacity};
  OracleFactory factory = exact_oracle(SolverOptions{grid_cap_from_env()});
  if (noise) {
    const Rational magnitude = parse_rational(*noise);
    if (magnitude < 0) throw InvalidArgument("--noise must be nonnegative");
    factory = noisy_oracle(std::move(factory), magnitude);
  }

  std::optional<CountResult> by_ot;
  std::optional<Integer> by_dp;
  if (via == "ot" || via == "both") by_ot = count_via_ot(inst, factory);
  if (via == "dp" || via == "both") by_dp = count_dp(inst);

  const Integer count = by_ot ? by_ot->count : *by_dp;
  ResultDocument doc;
  doc.value = Rational(count);
  doc.value_decimal = to_double(Rational(count));
  doc.mode = "exact";
  if (by_ot) doc.oracle_calls = by_ot->oracle_calls;
  json out = doc.to_json();
  out["count"] = count.str();
  out["via"] = via;
  if (by_ot && by_dp) {
    out["agree"] = by_ot->count == *by_dp;
    if (by_ot->count != *by_dp) {
      out["count_dp"] = by_dp->str();
      emit(out);
      std::cerr << "otdp: oracle count " << by_ot->count.str() << " disagrees with DP count "
                << by_dp->str() << "\n";
      return kExitDisagree;
    }
  }
  emit(out);
  return kExitOk;
}

int run_plan(const std::string& path, const std::string& atom_text) {
  const InstanceDocument doc = load_instance(path);
  const auto indices = split_list<std::size_t>(atom_text, "atom index");
  const Rational& t = doc.target.t;
  json out;
  if (t == 0 || t == 1) {
    // Every atom goes to a single target; no threshold exists.
    if (indices.size() != doc.mu.dimension()) {
      throw InvalidArgument("--atom needs " + std::to_string(doc.mu.dimension()) + " indices");
    }
    Rational prob = 1;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const Marginal& m = doc.mu.marginals[k];
      if (indices[k] >= m.size()) throw InvalidArgument("atom index out of range");
      prob *= m.probs[indices[k]];
    }
    if (prob == 0) throw NotAnAtom("atom probability is zero");
    out["threshold"] = nullptr;
    out["fraction"] = nullptr;
    out["pi1"] = to_string(t == 1 ? prob : Rational(0));
    out["pi2"] = to_string(t == 0 ? prob : Rational(0));
  } else {
    const PlanDescriptor desc =
        plan_descriptor(doc.mu, doc.target, SolverOptions{grid_cap_from_env()});
    const PlanMasses masses = plan_query(desc, doc.mu, indices, doc.target);
    out["threshold"] = to_string(desc.threshold);
    out["fraction"] = to_string(desc.fraction);
    out["pi1"] = to_string(masses.to_y1);
    out["pi2"] = to_string(masses.to_y2);
  }
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate optimal transport from product distributions "
               "to two-point distributions"};
  app.require_subcommand(1);

  std::string instance;
  auto* exact = app.add_subcommand("exact", "exact W by dynamic programming (p = 2)");
  exact->add_option("instance", instance, "instance JSON file")->required();

  std::optional<double> brute_p;
  std::string brute_mode = "exact";
  std::size_t atom_cap = kDefaultAtomCap;
  auto* brute = app.add_subcommand("brute", "W by atom enumeration and the sorted greedy");
  brute->add_option("instance", instance, "instance JSON file")->required();
  brute->add_option("--p", brute_p, "cost exponent (default: instance p)");
  brute->add_option("--mode", brute_mode, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  brute->add_option("--cap", atom_cap, "maximum number of enumerated atoms");

  std::string eps;
  auto* approx = app.add_subcommand("approx", "W within absolute error eps");
  approx->add_option("instance", instance, "instance JSON file")->required();
  approx->add_option("--eps", eps, "error tolerance as a rational string")->required();

  std::string weights;
  std::uint64_t capacity = 0;
  std::string via = "both";
  std::optional<std::string> noise;
  auto* count = app.add_subcommand("count", "count knapsack solutions");
  count->add_option("--weights", weights, "comma-separated nonnegative integers");
  count->add_option("--capacity", capacity, "knapsack capacity")->required();
  count->add_option("--via", via, "ot, dp or both")->check(CLI::IsMember({"ot", "dp", "both"}));
  count->add_option("--noise", noise, "per-call oracle offset magnitude, e.g. 1/64");

  std::string atom;
  auto* plan = app.add_subcommand("plan", "optimal plan row of one atom");
  plan->add_option("instance", instance, "instance JSON file")->required();
  plan->add_option("--atom", atom, "zero-based support index per marginal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*exact) return run_exact(instance);
    if (*brute) return run_brute(instance, brute_p, brute_mode, atom_cap);
    if (*approx) return run_approx(instance, eps);
    if (*count) return run_count(weights, capacity, via, noise);
    if (*plan) return run_plan(instance, atom);
  } catch (const GridTooLarge& e) {
    std::cerr << "otdp: " << e.what() << "\n";
    return kExitGridCap;
  } catch (const TooManyAtoms& e) {
    std::cerr << "otdp: " << e.what() << "\n";
    return kExitAtomCap;
  } catch (const Error& e) {
    std::cerr << "otdp: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
