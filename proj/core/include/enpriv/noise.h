// Copyright 2026 The enpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENPRIV_NOISE_H_
#define ENPRIV_NOISE_H_

#include <cstdint>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "nlohmann/json.hpp"

namespace enpriv {

enum class NoiseKind {
  kExact,           // answer == true answer
  kBoundedUniform,  // true answer + Uniform(-f, f), open interval
  kRounding,        // nearest multiple of m, ties to the even multiple
  kLaplace,         // true answer + Laplace(0, b); no perturbation bound
};

absl::string_view NoiseKindName(NoiseKind kind);
absl::StatusOr<NoiseKind> ParseNoiseKind(absl::string_view name);

// How an oracle perturbs true answers. Only the parameter belonging to
// `kind` is meaningful; the others are ignored.
struct NoiseMechanism {
  NoiseKind kind = NoiseKind::kExact;
  double f = 0.0;  // bounded-uniform half-width
  double m = 0.0;  // rounding granularity
  double b = 0.0;  // laplace scale

  static NoiseMechanism Exact() { return {}; }
  static NoiseMechanism BoundedUniform(double f) {
    return {NoiseKind::kBoundedUniform, f, 0.0, 0.0};
  }
  static NoiseMechanism Rounding(double m) {
    return {NoiseKind::kRounding, 0.0, m, 0.0};
  }
  static NoiseMechanism Laplace(double b) {
    return {NoiseKind::kLaplace, 0.0, 0.0, b};
  }

  absl::Status Validate() const;

  // True if every answer is guaranteed to satisfy |answer - truth| < bound.
  // Laplace noise never qualifies.
  bool IsWithin(double bound) const;

  // Largest possible |answer - truth| (a supremum for bounded-uniform, which
  // never attains it). Infinite for laplace.
  double MaxAbsoluteError() const;

  std::string DebugString() const;
};

// Nearest multiple of `m` to `value`; exact halfway cases go to the even
// multiple. Requires m > 0.
double RoundToMultiple(double value, double m);

// A mechanism together with the oracle's RNG seed, as carried in JSON:
//   {"kind": "bounded-uniform", "f": 3, "m": 0, "b": 0, "seed": 17}
struct OracleSpec {
  NoiseMechanism mechanism;
  uint64_t seed = 0;
};

nlohmann::json ToJson(const NoiseMechanism& mechanism);
nlohmann::json ToJson(const OracleSpec& spec);
absl::StatusOr<NoiseMechanism> NoiseMechanismFromJson(const nlohmann::json& j);
absl::StatusOr<OracleSpec> OracleSpecFromJson(const nlohmann::json& j);

}  // namespace enpriv

#endif  // ENPRIV_NOISE_H_
