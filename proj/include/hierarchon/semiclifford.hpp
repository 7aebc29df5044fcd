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

#include <optional>
#include <vector>

#include "hierarchon/hierarchy.hpp"
#include "hierarchon/phasespace.hpp"

namespace hierarchon {

struct SemiCliffordWitness {
    LagrangianSemibasis semibasis;
    /// The monomials U^p V^q at each semibasis vector, recognised up to phase (c = 0).
    std::vector<PauliElement> pauli_images;
};

/// First semibasis, in enumerate_semibases order, whose monomials are all Paulis.
std::optional<SemiCliffordWitness> find_witness(const ScaledUnitary& g, unsigned d);
std::vector<SemiCliffordWitness> all_witnesses(const ScaledUnitary& g, unsigned d);

/// G == C1 * diag * C2 up to phase; diag fixes |0>.
struct Diagonalisation {
    ScaledUnitary c1;
    ScaledUnitary c2;
    ExactMatrix diag;
};

/// Throws std::invalid_argument when the witness does not belong to g.
Diagonalisation diagonalize(const ScaledUnitary& g, const SemiCliffordWitness& w, unsigned d);

/// canonical_rep(C1 D C2) == canonical_rep(G), D diagonal, C1 and C2 Clifford.
bool verify_diagonalisation(const ScaledUnitary& g, const Diagonalisation& r, unsigned d);

/// |Sp(1, Z_d)| = d (d^2 - 1).
uint64_t sp_order(unsigned d);

struct SemiCliffordTally {
    size_t total = 0;
    size_t semi_clifford = 0;
    /// Catalog indices of gates with no witness or a failed diagonalisation.
    std::vector<size_t> failures;
};

/// Witness search and verified diagonalisation for every catalog gate.
SemiCliffordTally survey_semiclifford(const LevelCatalog& catalog, unsigned jobs);

nlohmann::json witness_json(const SemiCliffordWitness& w);
nlohmann::json semiclifford_json(const ScaledUnitary& g, unsigned d);

}  // namespace hierarchon
