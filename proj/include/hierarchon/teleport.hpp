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

#include "hierarchon/hierarchy.hpp"
#include "hierarchon/matrix.hpp"

namespace hierarchon {

/// Unnormalised amplitudes; two-wire states index |z1, z2> as z1 + d z2.
using StateVec = std::vector<Cyclo>;

/// Branch J holds the post-correction state for outcome J, or nullopt when the outcome
/// has zero amplitude.
using Branches = std::vector<std::optional<StateVec>>;

/// a == s b for some nonzero s: every 2x2 minor vanishes and both are nonzero.
bool proportional(const StateVec& a, const StateVec& b);

StateVec apply_gate(const ExactMatrix& m, const StateVec& v);

/// Ancilla |0>, H on the ancilla, H^2 on the data, CX (ancilla controls), measure the data,
/// X^{-J} on the ancilla.
Branches x_teleport(const StateVec& psi, unsigned d);

struct GadgetSpec {
    ScaledUnitary c1;
    ScaledUnitary c2;
    ExactMatrix diag;
};

/// C1 D X^{-1} D^dagger C1^dagger, applied J times for outcome J.
ExactMatrix gadget_correction(const GadgetSpec& spec, unsigned d);

/// Magic state D|+> on wire 1, C2 then H^2 on the input (wire 2), CX, measure wire 2,
/// then C1 and the outcome's correction. Throws std::invalid_argument for non-diagonal D.
Branches gadget_run(const GadgetSpec& spec, const StateVec& psi, unsigned d);

struct TeleportReport {
    unsigned d = 3;
    uint64_t seed = 0;
    size_t samples = 0;
    size_t states_per_gate = 0;
    size_t branches_checked = 0;
    /// Sampled gates whose outcome-1 correction failed the Clifford membership test.
    std::vector<size_t> non_clifford_corrections;
    /// (catalog index, state index, outcome) of each failing branch.
    std::vector<std::array<size_t, 3>> failures;
};

/// Random exact state with small integer coefficients in Q(zeta_{d^2}).
StateVec random_state(unsigned d, uint64_t& rng_state);

/// Runs the gadget for `samples` seeded random gates of a level-3 single-qudit catalog.
TeleportReport verify_teleport(const LevelCatalog& level3, size_t samples, size_t states_per_gate, uint64_t seed,
                               unsigned jobs);

nlohmann::json teleport_json(const TeleportReport& r);

}  // namespace hierarchon
