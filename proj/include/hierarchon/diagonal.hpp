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

#include <cstdint>
#include <vector>

#include "hierarchon/hierarchy.hpp"
#include "hierarchon/matrix.hpp"

namespace hierarchon {

/// k = (m - 1)(d - 1) + a with 1 <= a <= d - 1; m fixes the conductor d^m of level-k phases.
struct PrecisionDegree {
    unsigned k = 1;
    unsigned m = 1;
    unsigned a = 1;

    bool operator==(const PrecisionDegree&) const = default;
};

PrecisionDegree precision_degree(unsigned k, unsigned d);

/// phi(z) = sum_{j=1}^{d-1} coeffs[j-1] z^j over Z_{d^m}, no constant term.
struct RankKPoly {
    unsigned d = 3;
    unsigned m = 1;
    std::vector<uint64_t> coeffs;

    uint64_t modulus() const;
    /// Evaluates at the integer lift of z in [0, d), reducing mod d^m.
    uint64_t eval(unsigned z) const;
    /// True when coefficients above degree a are divisible by d.
    bool has_rank(unsigned k) const;
};

/// All d^k rank-k polynomials in a fixed order (coefficient of z^1 varies fastest).
std::vector<RankKPoly> rank_k_polys(unsigned d, unsigned k);

/// diag(zeta_{d^m}^{phi(z)}); fixes |0>.
ExactMatrix diagonal_gate(const RankKPoly& phi);

std::vector<ExactMatrix> gen_delta_k(unsigned d, unsigned k);

/// diag(zeta^{phi(z) - phi((z - q) mod d)}): the diagonal left behind when X^q passes D.
ExactMatrix twist(const RankKPoly& phi, unsigned q);

struct DxdStep {
    /// D X D^dagger X^dagger rescaled to fix |0>.
    ExactMatrix lower;
    /// The d phases c with (c * lower * X)^d == I.
    std::vector<Cyclo> phases;
};

/// Throws std::invalid_argument when `diag` is not diagonal.
DxdStep dxd_step(const ExactMatrix& diag, unsigned d);

struct CgkReport {
    unsigned d = 3;
    unsigned k = 1;
    size_t delta_count = 0;
    size_t diagonal_in_catalog = 0;
    std::vector<ExactMatrix> missing;  // members of Delta_k absent from the catalog
    std::vector<ExactMatrix> extra;    // diagonal catalog members outside Delta_k

    bool pass() const;
};

CgkReport verify_cgk(unsigned d, unsigned k, const LevelCatalog& catalog);

nlohmann::json cgk_json(const CgkReport& r);

}  // namespace hierarchon
