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

#include "enpriv/noise.h"

#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace enpriv {
namespace {

absl::StatusOr<double> OptionalNumber(const nlohmann::json& j,
                                      const char* key) {
  if (!j.contains(key) || j[key].is_null()) return 0.0;
  if (!j[key].is_number()) {
    return absl::InvalidArgumentError(
        absl::StrCat("mechanism field '", key, "' must be a number"));
  }
  return j[key].get<double>();
}

}  // namespace

absl::string_view NoiseKindName(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kExact:
      return "exact";
    case NoiseKind::kBoundedUniform:
      return "bounded-uniform";
    case NoiseKind::kRounding:
      return "rounding";
    case NoiseKind::kLaplace:
      return "laplace";
  }
  return "unknown";
}

absl::StatusOr<NoiseKind> ParseNoiseKind(absl::string_view name) {
  for (NoiseKind kind : {NoiseKind::kExact, NoiseKind::kBoundedUniform,
                         NoiseKind::kRounding, NoiseKind::kLaplace}) {
    if (NoiseKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown noise mechanism '", name, "'"));
}

absl::Status NoiseMechanism::Validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  switch (kind) {
    case NoiseKind::kExact:
      return absl::OkStatus();
    case NoiseKind::kBoundedUniform:
      if (!positive(f)) {
        return absl::InvalidArgumentError(
            absl::StrCat("bounded-uniform requires f > 0, got ", f));
      }
      return absl::OkStatus();
    case NoiseKind::kRounding:
      if (!positive(m)) {
        return absl::InvalidArgumentError(
            absl::StrCat("rounding requires m > 0, got ", m));
      }
      return absl::OkStatus();
    case NoiseKind::kLaplace:
      if (!positive(b)) {
        return absl::InvalidArgumentError(
            absl::StrCat("laplace requires b > 0, got ", b));
      }
      return absl::OkStatus();
  }
  return absl::InvalidArgumentError("unknown noise mechanism");
}

bool NoiseMechanism::IsWithin(double bound) const {
  switch (kind) {
    case NoiseKind::kExact:
      return bound > 0.0;
    case NoiseKind::kBoundedUniform:
      return f <= bound;
    case NoiseKind::kRounding:
      return m / 2.0 < bound;
    case NoiseKind::kLaplace:
      return false;
  }
  return false;
}

double NoiseMechanism::MaxAbsoluteError() const {
  switch (kind) {
    case NoiseKind::kExact:
      return 0.0;
    case NoiseKind::kBoundedUniform:
      return f;
    case NoiseKind::kRounding:
      return m / 2.0;
    case NoiseKind::kLaplace:
      return std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::infinity();
}

std::string NoiseMechanism::DebugString() const {
  switch (kind) {
    case NoiseKind::kExact:
      return "exact";
    case NoiseKind::kBoundedUniform:
      return absl::StrFormat("bounded-uniform(f=%g)", f);
    case NoiseKind::kRounding:
      return absl::StrFormat("rounding(m=%g)", m);
    case NoiseKind::kLaplace:
      return absl::StrFormat("laplace(b=%g)", b);
  }
  return "unknown";
}

double RoundToMultiple(double value, double m) {
  // nearbyint honours the default round-half-to-even mode.
  return std::nearbyint(value / m) * m;
}

nlohmann::json ToJson(const NoiseMechanism& mechanism) {
  return {{"kind", std::string(NoiseKindName(mechanism.kind))},
          {"f", mechanism.f},
          {"m", mechanism.m},
          {"b", mechanism.b}};
}

nlohmann::json ToJson(const OracleSpec& spec) {
  nlohmann::json j = ToJson(spec.mechanism);
  j["seed"] = spec.seed;
  return j;
}

absl::StatusOr<NoiseMechanism> NoiseMechanismFromJson(
    const nlohmann::json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("mechanism must be a JSON object");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    return absl::InvalidArgumentError(
        "mechanism field 'kind' is required and must be a string");
  }
  NoiseMechanism mechanism;
  absl::StatusOr<NoiseKind> kind =
      ParseNoiseKind(j["kind"].get<std::string>());
  if (!kind.ok()) return kind.status();
  mechanism.kind = *kind;
  absl::StatusOr<double> f = OptionalNumber(j, "f");
  if (!f.ok()) return f.status();
  absl::StatusOr<double> m = OptionalNumber(j, "m");
  if (!m.ok()) return m.status();
  absl::StatusOr<double> b = OptionalNumber(j, "b");
  if (!b.ok()) return b.status();
  mechanism.f = *f;
  mechanism.m = *m;
  mechanism.b = *b;
  if (absl::Status s = mechanism.Validate(); !s.ok()) return s;
  return mechanism;
}

absl::StatusOr<OracleSpec> OracleSpecFromJson(const nlohmann::json& j) {
  absl::StatusOr<NoiseMechanism> mechanism = NoiseMechanismFromJson(j);
  if (!mechanism.ok()) return mechanism.status();
  OracleSpec spec{*mechanism, 0};
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) {
      return absl::InvalidArgumentError(
          "mechanism field 'seed' must be a non-negative integer");
    }
    spec.seed = j["seed"].get<uint64_t>();
  }
  return spec;
}

}  // namespace enpriv
