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

namespace ppm {

// Pauli measurement bases. Choice value 0 selects X, 1 selects Z.
enum class Basis : int { X = 0, Z = 1 };

inline Basis basis_from_choice(int value) { return value ? Basis::Z : Basis::X; }
inline char basis_char(Basis b) { return b == Basis::X ? 'X' : 'Z'; }

}  // namespace ppm
