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

#include <set>
#include <string>
#include <vector>

#include "ppm/pattern.hpp"

namespace ppm {

// Round r holds the measured vertices whose choice functions read only
// outcomes from rounds < r. Variables in free_vars (input errors) are known
// before round 0. Vertices inside a round are ascending.
using Schedule = std::vector<std::vector<int>>;

Schedule dependency_schedule(const MeasurementPattern& p, const std::set<std::string>& free_vars = {});
Schedule dependency_schedule(const PatternFragment& f);

// Measured vertices each vertex waits on, ascending.
std::vector<std::vector<int>> measurement_dependencies(const MeasurementPattern& p,
                                                       const std::set<std::string>& free_vars = {});

int feed_forward_depth(const MeasurementPattern& p, const std::set<std::string>& free_vars = {});
int feed_forward_depth(const PatternFragment& f);

}  // namespace ppm
