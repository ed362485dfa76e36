// Copyright 2026 The FCLA Authors.
//
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

// JSON form of ExperimentSpec, shared by config files and run manifests.

#include <string>

#include "fcla/error.h"
#include "fcla/harness.h"
#include "json.hpp"

namespace fcla {
namespace {

using nlohmann::json;

const char* MatchNormName(MatchNorm norm) {
  return norm == MatchNorm::kL1 ? "l1" : "l2sq";
}

void ApplyKey(ExperimentSpec& spec, const std::string& key, const json& v) {
  if (key == "rings") {
    spec.rings = v.get<int>();
  } else if (key == "per_ring") {
    spec.per_ring = v.get<int>();
  } else if (key == "users") {
    spec.users = v.get<int>();
  } else if (key == "paths") {
    spec.paths = v.get<int>();
  } else if (key == "carrier_hz") {
    spec.carrier_hz = v.get<double>();
  } else if (key == "noise_power") {
    spec.noise_power = v.get<double>();
  } else if (key == "pattern") {
    const auto name = v.get<std::string>();
    if (name == "omni") {
      spec.pattern.kind = PatternKind::kOmni;
    } else if (name == "directional") {
      spec.pattern.kind = PatternKind::kDirectional;
    } else {
      Fail(ErrorCode::kInvalidArgument, "pattern must be omni or directional");
    }
  } else if (key == "kappa") {
    spec.pattern.kappa = v.get<double>();
  } else if (key == "min_spacing") {
    if (v.is_null()) {
      spec.min_spacing.reset();
    } else {
      spec.min_spacing = v.get<double>();
    }
  } else if (key == "grid") {
    spec.grid = v.get<int>();
  } else if (key == "snr_db") {
    spec.snr_db = v.get<double>();
  } else if (key == "iterations") {
    spec.iterations = v.get<int>();
  } else if (key == "sweep_var") {
    spec.sweep = ParseSweepVariable(v.get<std::string>());
  } else if (key == "sweep_values") {
    spec.sweep_values = v.get<std::vector<double>>();
  } else if (key == "trials") {
    spec.trials = v.get<int>();
  } else if (key == "seed") {
    spec.seed = v.get<std::uint64_t>();
  } else if (key == "alpha_rule") {
    const auto rule = v.get<std::string>();
    if (rule == "mmse") {
      spec.alpha_rule = AlphaRule::kMmse;
    } else if (rule == "fixed") {
      spec.alpha_rule = AlphaRule::kFixed;
    } else {
      Fail(ErrorCode::kInvalidArgument, "alpha_rule must be mmse or fixed");
    }
  } else if (key == "alpha") {
    spec.alpha = v.get<double>();
  } else if (key == "methods") {
    spec.methods.clear();
    for (const auto& name : v) {
      spec.methods.push_back(ParseMethod(name.get<std::string>()));
    }
  } else if (key == "match_norm") {
    const auto name = v.get<std::string>();
    if (name == "l2sq") {
      spec.match_norm = MatchNorm::kSquaredL2;
    } else if (name == "l1") {
      spec.match_norm = MatchNorm::kL1;
    } else {
      Fail(ErrorCode::kInvalidArgument, "match_norm must be l2sq or l1");
    }
  } else if (key == "jobs") {
    spec.jobs = v.get<int>();
  } else {
    Fail(ErrorCode::kInvalidArgument, "unknown experiment key '" + key + "'");
  }
}

json SpecObject(const ExperimentSpec& spec) {
  json methods = json::array();
  for (Method m : spec.methods) methods.push_back(MethodName(m));
  json out = {
      {"rings", spec.rings},
      {"per_ring", spec.per_ring},
      {"users", spec.users},
      {"paths", spec.paths},
      {"carrier_hz", spec.carrier_hz},
      {"noise_power", spec.noise_power},
      {"pattern", spec.pattern.is_omni() ? "omni" : "directional"},
      {"kappa", spec.pattern.kappa},
      {"grid", spec.grid},
      {"snr_db", spec.snr_db},
      {"iterations", spec.iterations},
      {"sweep_var", SweepVariableName(spec.sweep)},
      {"sweep_values", spec.sweep_values},
      {"trials", spec.trials},
      {"seed", spec.seed},
      {"alpha_rule", spec.alpha_rule == AlphaRule::kMmse ? "mmse" : "fixed"},
      {"alpha", spec.alpha},
      {"methods", methods},
      {"match_norm", MatchNormName(spec.match_norm)},
      {"jobs", spec.jobs},
  };
  out["min_spacing"] =
      spec.min_spacing ? json(*spec.min_spacing) : json(nullptr);
  return out;
}

}  // namespace

std::string SpecToJson(const ExperimentSpec& spec) {
  return SpecObject(spec).dump(2);
}

ExperimentSpec SpecFromJson(const std::string& json_text,
                            const ExperimentSpec& base) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kInvalidArgument,
         std::string("config is not valid JSON: ") + e.what());
  }
  Require(doc.is_object(), ErrorCode::kInvalidArgument,
          "config must be a JSON object");
  if (doc.contains("experiment")) doc = doc.at("experiment");
  ExperimentSpec spec = base;
  for (const auto& [key, value] : doc.items()) {
    try {
      ApplyKey(spec, key, value);
    } catch (const json::exception& e) {
      Fail(ErrorCode::kInvalidArgument,
           "bad value for '" + key + "': " + e.what());
    }
  }
  return spec;
}

std::string ManifestJson(const ExperimentSpec& spec) {
  json manifest = {{"generator", "fcla"},
                   {"code_version", CodeVersion()},
                   {"seed", spec.seed},
                   {"experiment", SpecObject(spec)}};
  return manifest.dump(2);
}

}  // namespace fcla
