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

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hierarchon/matrix.hpp"
#include "hierarchon/phasespace.hpp"

namespace hierarchon {

/// Two-qudit Clifford D[omega^f] Z^a X^x up to phase, with
/// f(z) = quad[0] z1^2 + quad[1] z2^2 + quad[2] z1 z2. Components reduced mod d.
struct Septuple {
    std::array<int, 3> quad{};
    std::array<int, 2> z{};
    std::array<int, 2> x{};

    auto operator<=>(const Septuple&) const = default;
};

/// Mixed-radix index with quad[0] least significant; d^7 values.
uint32_t septuple_index(const Septuple& s, unsigned d);
Septuple septuple_at(uint32_t index, unsigned d);

/// The c with U V = omega^c V U, or nullopt when U V and V U differ by more than a scalar.
std::optional<int> commutation_check(const Septuple& u, const Septuple& v, unsigned d);

/// D[omega^f] Z^a X^x on basis |z1 + d z2>.
ExactMatrix septuple_matrix(const Septuple& s, unsigned d);

/// (U, V, S, T) with UV = omega VU, ST = omega TS and the cross pairs commuting.
struct TupleQuadruple {
    Septuple u, v, s, t;

    auto operator<=>(const TupleQuadruple&) const = default;
};

bool is_valid_quadruple(const TupleQuadruple& t, unsigned d);

/// Two independent kernel vectors (xU, xV, xS, xT) of the 3x4 matrix of quadratic
/// coefficients, read as points p = (xU, xS), q = (xV, xT), with vanishing symplectic form.
/// The first such pair in lexicographic order, or nullopt.
std::optional<LagrangianSemibasis> kernel_semibasis_check(const TupleQuadruple& t, unsigned d);

struct SurveyOptions {
    unsigned jobs = 1;
    /// Check every stride-th tuple among those sharing the same U (1 = all).
    uint32_t stride = 1;
    /// Only septuples with zero quadratic part.
    bool pauli_only = false;
    size_t max_failures = 64;
};

struct SurveyReport {
    unsigned d = 3;
    uint32_t stride = 1;
    bool pauli_only = false;
    uint64_t total = 0;
    uint64_t checked = 0;
    uint64_t passed = 0;
    uint64_t failed = 0;
    std::vector<TupleQuadruple> failures;
};

/// Number of ordered conjugate pairs (U, V) among the septuples.
uint64_t count_pairs(unsigned d, bool pauli_only = false);

/// Enumerates every quadruple (ordered by the septuple indices of U, V, S, T) and applies the
/// kernel check. Only d = 3 is supported; throws std::invalid_argument otherwise.
SurveyReport survey(const SurveyOptions& opts);

nlohmann::json survey_json(const SurveyReport& r);

}  // namespace hierarchon
