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

#ifndef OTDP_ERRORS_HPP_
#define OTDP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace otdp {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define OTDP_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(what) {}      \
  }

/** Malformed text or JSON input. */
OTDP_DEFINE_ERROR(ParseError);
/** Marginal count and target dimension disagree. */
OTDP_DEFINE_ERROR(DimensionMismatch);
/** Negative probabilities, or probabilities not summing to exactly one. */
OTDP_DEFINE_ERROR(BadProbabilities);
/** A marginal lists the same support point twice. */
OTDP_DEFINE_ERROR(DuplicateSupport);
/** Mixing weight outside the range an operation accepts. */
OTDP_DEFINE_ERROR(BadT);
/** A grid (base or Minkowski) would exceed the configured point cap. */
OTDP_DEFINE_ERROR(GridTooLarge);
/** Empty input where at least one value is required. */
OTDP_DEFINE_ERROR(EmptyInput);
/** Explicit atom enumeration would exceed the configured cap. */
OTDP_DEFINE_ERROR(TooManyAtoms);
/** Exact evaluation requested for an exponent that is not an even integer. */
OTDP_DEFINE_ERROR(OddPExact);
/** Queried point carries no probability mass. */
OTDP_DEFINE_ERROR(NotAnAtom);
/** Knapsack weight vector is identically zero. */
OTDP_DEFINE_ERROR(ZeroWeights);
/** Generic precondition violation (e.g. a nonpositive tolerance). */
OTDP_DEFINE_ERROR(InvalidArgument);

#undef OTDP_DEFINE_ERROR

}  // namespace otdp

#endif  // OTDP_ERRORS_HPP_
