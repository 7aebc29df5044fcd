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

#include <string>

#include "hierarchon/matrix.hpp"
#include "hierarchon/phasespace.hpp"

namespace hierarchon {

inline constexpr int kInterchangeVersion = 1;

/// Integers are emitted as JSON numbers when they fit in 64 bits, else as decimal strings.
nlohmann::json integer_json(const mpz_class& v);
mpz_class integer_from_json(const nlohmann::json& j);

/// [[num, den], ...] of length degree(field), coefficient i multiplying zeta^i.
nlohmann::json cyclo_json(const Cyclo& a, Conductor field);
Cyclo cyclo_from_json(const nlohmann::json& j, Conductor field);

/// Row-major entry list of `m` at conductor `field`.
nlohmann::json entries_json(const ExactMatrix& m, Conductor field);
ExactMatrix entries_from_json(const nlohmann::json& j, size_t dim, Conductor field);

/// Smallest d^m (m >= 1) holding every entry of m.
Conductor document_conductor(const ExactMatrix& m, unsigned d);

/// {version, d, n, conductor, scale2, entries}; scale2 is "p/q" when rational.
nlohmann::json gate_json(const ScaledUnitary& g, unsigned d);

struct GateDocument {
    unsigned d = 3;
    unsigned n = 1;
    ScaledUnitary gate;
};

/// Parses and validates; throws std::invalid_argument naming the violated invariant.
GateDocument gate_from_json(const nlohmann::json& j);

nlohmann::json pauli_json(const PauliElement& p);

}  // namespace hierarchon
