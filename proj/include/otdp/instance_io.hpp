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

// JSON encodings of instances and results. Exact values always travel as
// rational strings ("a/b"), never as JSON numbers.
//
// Instance:
//   {"marginals": [{"support": ["0", "1"], "probs": ["1/2", "1/2"]}, ...],
//    "target": {"y1": ["1"], "y2": ["2"], "t": "0"},
//    "p": 2}

#ifndef OTDP_INSTANCE_IO_HPP_
#define OTDP_INSTANCE_IO_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "json.hpp"
#include "otdp/model.hpp"

namespace otdp {

struct InstanceDocument {
  ProductDistribution mu;
  TwoPointTarget target;
  double p = 2.0;
};

/// Throws ParseError on schema violations and the model errors on invalid
/// instances (the document is validated before returning).
InstanceDocument parse_instance(const nlohmann::json& doc);
InstanceDocument parse_instance_text(const std::string& text);
InstanceDocument load_instance(const std::string& path);

nlohmann::json instance_to_json(const InstanceDocument& doc);

struct ResultDocument {
  std::optional<Rational> value;  // absent in float mode
  double value_decimal = 0.0;
  std::string mode;               // "exact", "float" or "approx"
  std::optional<std::size_t> grid_n;
  std::optional<std::size_t> minkowski_size;
  std::optional<std::size_t> n_t;
  std::optional<Rational> error_bound;
  std::optional<std::size_t> oracle_calls;

  /// Sets value, value_decimal and the grid diagnostics from an OtValue.
  static ResultDocument from(const OtValue& v, std::string mode);
  nlohmann::json to_json() const;
};

}  // namespace otdp

#endif  // OTDP_INSTANCE_IO_HPP_
