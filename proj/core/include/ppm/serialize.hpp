// Copyright 2026 The ppm Authors
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

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ppm/pattern.hpp"

namespace ppm {

inline constexpr int kSchemaVersion = 1;

// ANF as a list of monomials, each a list of variable names.
nlohmann::ordered_json anf_to_json(const BoolFn& f);
BoolFn anf_from_json(const nlohmann::json& j);

nlohmann::ordered_json fragment_to_json(const PatternFragment& f);
// Accepts both fragments and bare patterns (no inputs or outputs).
PatternFragment fragment_from_json(const nlohmann::json& j);

std::string to_json_text(const PatternFragment& f);
PatternFragment from_json_text(const std::string& text);
std::string to_dot(const PatternFragment& f);

// format is "json" or "dot".
std::string export_fragment(const PatternFragment& f, const std::string& format);

}  // namespace ppm
