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

#include <utility>
#include <vector>

#include "hierarchon/matrix.hpp"

namespace hierarchon {

/// n ordered pairs (U_i, V_i) with U_i^d = V_i^d = I, U_i V_i = omega V_i U_i, and
/// every element of one pair commuting with every element of another.
struct ConjugateTuple {
    unsigned d = 3;
    std::vector<std::pair<ScaledUnitary, ScaledUnitary>> pairs;

    size_t size() const { return pairs.size(); }
};

/// Number of qudits n with dim == d^n; throws when dim is not a power of d.
unsigned qudit_count(size_t dim, unsigned d);

bool is_conjugate_pair(const ExactMatrix& u, const ExactMatrix& v, unsigned d);
bool is_conjugate_tuple(const ConjugateTuple& t);

/// (P_1 ... P_n) e_j for the first j giving a nonzero column, P_i = d^{-1} sum_p U_i^p.
/// Returned as a column vector; throws std::domain_error("not rank one").
ExactMatrix simultaneous_unit_eigvec(const ConjugateTuple& t);

/// The gate G with G Z_i G^dagger = U_i and G X_i G^dagger = V_i, column z being
/// V_1^{z_1} ... V_n^{z_n} u_0, scale2 = |u_0|^2. Validates the tuple first.
ScaledUnitary reconstruct(const ConjugateTuple& t);

/// (G Z_i G^dagger, G X_i G^dagger) for every qudit.
ConjugateTuple tuple_of(const ScaledUnitary& g, unsigned d);

}  // namespace hierarchon
