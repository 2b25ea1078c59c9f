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

#include "otdp/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "otdp/errors.hpp"

namespace otdp {

namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + " is missing \"" + key + "\"");
  return *it;
}

Rational rational_from(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a rational string like \"3/4\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

RationalVector rationals_from(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array");
  RationalVector out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(rational_from(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json rationals_to(const RationalVector& values) {
  json arr = json::array();
  for (const auto& r : values) arr.push_back(to_string(r));
  return arr;
}

}  // namespace

InstanceDocument parse_instance(const json& doc) {
  InstanceDocument out;
  const json& marginals = member(doc, "marginals", "instance");
  if (!marginals.is_array()) throw ParseError("\"marginals\" must be an array");
  for (std::size_t k = 0; k < marginals.size(); ++k) {
    const std::string where = "marginals[" + std::to_string(k) + "]";
    Marginal m;
    m.support = rationals_from(member(marginals[k], "support", where), where + ".support");
    m.probs = rationals_from(member(marginals[k], "probs", where), where + ".probs");
    out.mu.marginals.push_back(std::move(m));
  }
  const json& target = member(doc, "target", "instance");
  out.target.y1 = rationals_from(member(target, "y1", "target"), "target.y1");
  out.target.y2 = rationals_from(member(target, "y2", "target"), "target.y2");
  out.target.t = rational_from(member(target, "t", "target"), "target.t");
  if (const auto it = doc.find("p"); it != doc.end()) {
    if (!it->is_number() || it->get<double>() <= 0) {
      throw ParseError("\"p\" must be a positive number");
    }
    out.p = it->get<double>();
  }
  validate_instance(out.mu, out.target);
  return out;
}

InstanceDocument parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

json instance_to_json(const InstanceDocument& doc) {
  json marginals = json::array();
  for (const auto& m : doc.mu.marginals) {
    marginals.push_back({{"support", rationals_to(m.support)}, {"probs", rationals_to(m.probs)}});
  }
  return {{"marginals", marginals},
          {"target",
           {{"y1", rationals_to(doc.target.y1)},
            {"y2", rationals_to(doc.target.y2)},
            {"t", to_string(doc.target.t)}}},
          {"p", doc.p}};
}

ResultDocument ResultDocument::from(const OtValue& v, std::string mode) {
  ResultDocument r;
  if (v.mode() == ValueMode::kExact) r.value = v.exact();
  r.value_decimal = v.as_double();
  r.mode = std::move(mode);
  r.grid_n = v.grid_size;
  r.minkowski_size = v.minkowski_size;
  r.n_t = v.critical_index;
  return r;
}

json ResultDocument::to_json() const {
  json out = json::object();
  if (value) out["value_rational"] = to_string(*value);
  out["value_decimal"] = value_decimal;
  out["mode"] = mode;
  out["grid_N"] = grid_n ? json(*grid_n) : json(nullptr);
  out["minkowski_size"] = minkowski_size ? json(*minkowski_size) : json(nullptr);
  if (n_t) out["n_t"] = *n_t;
  if (error_bound) out["error_bound"] = to_string(*error_bound);
  if (oracle_calls) out["oracle_calls"] = *oracle_calls;
  return out;
}

}  // namespace otdp
