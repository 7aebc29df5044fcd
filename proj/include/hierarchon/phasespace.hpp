// Copyright 2026 The Hierarchon Authors
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

#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "hierarchon/matrix.hpp"

namespace hierarchon {

/// A point (p, q) of Z_d^{2n}; components are kept reduced mod d.
struct PhasePoint {
    std::vector<int> p;
    std::vector<int> q;

    size_t qudits() const { return p.size(); }
    bool is_zero() const;
    auto operator<=>(const PhasePoint&) const = default;
};

/// omega^c Z^p X^q, omega = e^{2 pi i / d}.
struct PauliElement {
    unsigned d = 3;
    int c = 0;
    PhasePoint point;

    auto operator<=>(const PauliElement&) const = default;
};

/// n phase points spanning a Lagrangian subspace.
struct LagrangianSemibasis {
    std::vector<PhasePoint> vectors;

    auto operator<=>(const LagrangianSemibasis&) const = default;
};

int mod(long a, unsigned d);

int symplectic_form(const PhasePoint& u, const PhasePoint& v, unsigned d);

/// Weyl operator W(p, q) = omega^{-2^{-1} p.q} Z^p X^q. Throws for d = 2.
PauliElement weyl(unsigned d, const PhasePoint& v);

/// Product of two Paulis with exact phase tracking. Throws for d = 2 ("odd prime only").
PauliElement weyl_mul(const PauliElement& a, const PauliElement& b);

/// Basic gates on n qudits; qudit 0 is the least significant digit of the basis index.
ExactMatrix pauli_z(unsigned d, unsigned n, unsigned qudit);
ExactMatrix pauli_x(unsigned d, unsigned n, unsigned qudit);
/// Unnormalised Fourier matrix, entries omega^{zy}; scale2 = d.
ExactMatrix dft(unsigned d);
Cyclo omega(unsigned d, long power = 1);

ExactMatrix to_matrix(const PauliElement& p);

/// Inverse of to_matrix. With up_to_phase, any nonzero multiple of Z^p X^q matches and c = 0.
std::optional<PauliElement> recognize_pauli(const ExactMatrix& m, unsigned d, bool up_to_phase);

/// One semibasis per Lagrangian subspace of Z_d^{2n}, generators in reduced echelon
/// form (leading nonzero component 1), ordered by their (q, p) keys.
std::vector<LagrangianSemibasis> enumerate_semibases(unsigned d, unsigned n);

bool is_semibasis(const LagrangianSemibasis& b, unsigned d);

/// (e_1..e_n, f_1..f_n) with e_i = b_i and the standard symplectic Gram matrix.
std::vector<PhasePoint> extend_to_symplectic_basis(const LagrangianSemibasis& b, unsigned d);

/// A Clifford C with C Z_i C^dagger == targets[i] exactly.
/// Throws std::invalid_argument for dependent or non-commuting targets.
ScaledUnitary synthesize_clifford(std::span<const PauliElement> targets);

}  // namespace hierarchon
