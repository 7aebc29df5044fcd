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

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hierarchon/matrix.hpp"
#include "hierarchon/svn.hpp"

namespace hierarchon {

inline constexpr const char* kLibraryVersion = "1.0.0";

/// A gate scaled so that mat^d == I exactly; mat == phase * input.
struct PhasedGate {
    ExactMatrix mat;
    Cyclo phase;
};

/// The d rescalings c * M with (c M)^d == I when M^d is scalar and such c exists in a
/// cyclotomic field of conductor d^m; nullopt otherwise.
std::optional<std::vector<PhasedGate>> order_d_corrections(const ExactMatrix& m, unsigned d);

/// Sorted, deduplicated canonical representatives of one hierarchy level.
class LevelCatalog {
   public:
    LevelCatalog() = default;
    /// `gates` must already be canonical; they are sorted and deduplicated here.
    LevelCatalog(unsigned d, unsigned n, unsigned k, std::vector<ExactMatrix> gates);

    unsigned d() const { return d_; }
    unsigned n() const { return n_; }
    unsigned k() const { return k_; }
    size_t size() const { return gates_.size(); }
    const std::vector<ExactMatrix>& gates() const { return gates_; }
    const ExactMatrix& operator[](size_t i) const { return gates_[i]; }

    /// Lookup of an already canonical matrix.
    bool contains(const ExactMatrix& canonical) const;
    /// Canonicalises first.
    bool contains_gate(const ExactMatrix& m) const { return contains(canonical_rep(m)); }

    /// Join of the conductors of all members (at least d).
    Conductor conductor() const;

   private:
    unsigned d_ = 0, n_ = 0, k_ = 0;
    std::vector<ExactMatrix> gates_;
    std::vector<std::pair<uint64_t, uint32_t>> index_;
};

/// Recursive membership in level k. Any catalog in `catalogs` matching (d, n, level) replaces
/// the recursion at that level with a lookup.
bool membership(const ExactMatrix& g, unsigned d, unsigned k, std::span<const LevelCatalog* const> catalogs = {});

/// All d^{2n} monomials U^p V^q (U_1^{p_1}..U_n^{p_n} V_1^{q_1}..V_n^{q_n}) lie in `lower`.
bool k_closure_check(const ConjugateTuple& t, const LevelCatalog& lower);

class SizeGuardError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
    unsigned jobs = 1;
    /// Refuse when the projected level size exceeds this many gates.
    uint64_t size_limit = 2'000'000;
};

struct LevelStats {
    size_t candidates = 0;
    size_t pairs = 0;
    size_t tuples = 0;
    size_t closed_tuples = 0;
    /// Tuples failing the closure check, as (U_1, V_1, ...) canonical matrices.
    std::vector<std::vector<ExactMatrix>> non_closed;
};

/// Level k from level k-1 (ignored for k == 1). Throws std::invalid_argument for k == 0 or a
/// mismatched prerequisite, SizeGuardError when the projected size exceeds the limit.
LevelCatalog enumerate_level(unsigned d, unsigned n, unsigned k, const LevelCatalog* lower,
                             const EnumerateOptions& opts = {}, LevelStats* stats = nullptr);

/// Level size without storing gates. `distinct` counts distinct modular fingerprints of the
/// expanded gates, a lower bound on the level size; `upper_bound` is d^{2n} times the closed
/// tuples. The count is exact when the two agree.
struct LevelCount {
    uint64_t upper_bound = 0;
    uint64_t distinct = 0;
    LevelStats stats;

    bool exact() const { return upper_bound == distinct; }
};

LevelCount count_level(unsigned d, unsigned n, unsigned k, const LevelCatalog* lower, const EnumerateOptions& opts = {});

}  // namespace hierarchon
