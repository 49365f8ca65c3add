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
#include <vector>

#include <Eigen/Dense>

namespace ppm {

using Matrix = Eigen::MatrixXcd;

namespace gates {

Matrix identity(int qubits);
Matrix X();
Matrix Y();
Matrix Z();
Matrix H();
Matrix S();
Matrix Sdg();
Matrix T();
Matrix Tdg();
// diag(1, e^{it})
Matrix zrot(double t);
// H zrot(t) H
Matrix xrot(double t);
// exp(-i t/2 Z@Z)
Matrix parity_phase(double t);
Matrix CZ();
// Control on the first (most significant) qubit.
Matrix CNOT();
Matrix SWAP();

}  // namespace gates

// First factor acts on the most significant qubit.
Matrix kron(const Matrix& a, const Matrix& b);
// Tensor product of X^x Z^z per wire.
Matrix pauli_frame(const std::vector<int>& z, const std::vector<int>& x);

// |tr(V^dag U)| / dim, phase-blind.
double trace_overlap(const Matrix& u, const Matrix& v);
bool is_unitary(const Matrix& u, double tol = 1e-9);
int qubits_of(const Matrix& u);

// Parses labels such as "X(pi/2)", "T@HTH", "CZ*(H@H)", "(S⊗S)·CZ",
// "HSHS" or "Z(-pi/2^3)". '*' and '·' multiply as matrices, '@' and '⊗'
// are tensor products and bind tighter. Letter words expand to products
// of H, S, Sdg, T, Tdg, X, Y, Z, I. A trailing "dg" or "†" on a
// parenthesized factor takes the adjoint.
Matrix parse_unitary(const std::string& label);

}  // namespace ppm
