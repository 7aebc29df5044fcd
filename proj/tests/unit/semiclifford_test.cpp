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


#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hierarchon/diagonal.hpp"
#include "hierarchon/semiclifford.hpp"

namespace hierarchon {
namespace {

using testing::catalog;

ScaledUnitary gate(const ExactMatrix& m) { return ScaledUnitary::from_matrix(m); }

ExactMatrix d9() { return ExactMatrix::diagonal(std::vector<Cyclo>{1, Cyclo::zeta(3, 2, 1), Cyclo::zeta(3, 2, 2)}); }

TEST(SemiClifford, SymplecticGroupOrder) {
    EXPECT_EQ(sp_order(3), 24u);
    EXPECT_EQ(sp_order(5), 120u);
    EXPECT_EQ(sp_order(7), 336u);
}

TEST(SemiClifford, DiagonalWitnessIsZ) {
    const auto w = find_witness(gate(d9()), 3);
    ASSERT_TRUE(w.has_value());
    ASSERT_EQ(w->semibasis.vectors.size(), 1u);
    EXPECT_EQ(w->semibasis.vectors[0], (PhasePoint{{1}, {0}}));
    ASSERT_EQ(w->pauli_images.size(), 1u);
    EXPECT_EQ(w->pauli_images[0].point, (PhasePoint{{1}, {0}}));
}

TEST(SemiClifford, TwoQuditDiagonal) {
    const ExactMatrix g = d9().kron(d9());
    const auto w = find_witness(gate(g), 3);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->semibasis.vectors, (std::vector<PhasePoint>{{{0, 1}, {0, 0}}, {{1, 0}, {0, 0}}}));
    const auto r = diagonalize(gate(g), *w, 3);
    EXPECT_TRUE(verify_diagonalisation(gate(g), r, 3));
}

TEST(SemiClifford, CliffordHasWitness) {
    const auto f = gate(dft(3));
    const auto w = find_witness(f, 3);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(all_witnesses(f, 3).size(), 4u);
    EXPECT_TRUE(verify_diagonalisation(f, diagonalize(f, *w, 3), 3));
}

TEST(SemiClifford, BuiltThenRecovered) {
    const ExactMatrix f = dft(3);
    const ExactMatrix g = f * d9() * f.adjoint() * pauli_x(3, 1, 0);
    const auto sg = gate(g);
    const auto w = find_witness(sg, 3);
    ASSERT_TRUE(w.has_value());
    const auto r = diagonalize(sg, *w, 3);
    EXPECT_TRUE(r.diag.is_diagonal());
    EXPECT_EQ(canonical_rep(r.c1.mat * r.diag * r.c2.mat), canonical_rep(g));
    EXPECT_TRUE(verify_diagonalisation(sg, r, 3));
}

TEST(SemiClifford, WitnessIsDeterministic) {
    const auto& third = catalog(3, 1, 3);
    for (size_t i = 0; i < third.size(); i += 211) {
        const auto a = find_witness(gate(third[i]), 3);
        const auto b = find_witness(gate(third[i]), 3);
        ASSERT_TRUE(a && b);
        EXPECT_EQ(a->semibasis, b->semibasis);
        EXPECT_EQ(a->pauli_images, b->pauli_images);
    }
}

TEST(SemiClifford, ThirdLevelQutritComplete) {
    const auto t = survey_semiclifford(catalog(3, 1, 3), 2);
    EXPECT_EQ(t.total, 1944u);
    EXPECT_EQ(t.semi_clifford, 1944u);
    EXPECT_TRUE(t.failures.empty());
}

TEST(SemiClifford, RecoveredCoreIsThirdLevelDiagonal) {
    auto delta = gen_delta_k(3, 3);
    const auto less = [](const ExactMatrix& a, const ExactMatrix& b) { return a.compare(b) < 0; };
    std::sort(delta.begin(), delta.end(), less);
    const auto& third = catalog(3, 1, 3);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        const auto g = gate(third[rng() % third.size()]);
        const auto w = find_witness(g, 3);
        ASSERT_TRUE(w.has_value());
        const auto r = diagonalize(g, *w, 3);
        EXPECT_TRUE(std::binary_search(delta.begin(), delta.end(), canonical_rep(r.diag), less));
    }
}

TEST(SemiClifford, CliffordAbsorption) {
    const auto& cliff = catalog(3, 1, 2);
    const auto& third = catalog(3, 1, 3);
    std::mt19937_64 rng(22);
    for (int i = 0; i < 30; ++i) {
        const ExactMatrix& c = cliff[rng() % cliff.size()];
        const ExactMatrix& g = third[rng() % third.size()];
        EXPECT_TRUE(find_witness(gate(c * g), 3).has_value());
        EXPECT_TRUE(find_witness(gate(g * c), 3).has_value());
    }
}

TEST(SemiClifford, ReportJson) {
    const auto j = semiclifford_json(gate(d9()), 3);
    EXPECT_TRUE(j["semi_clifford"].get<bool>());
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_EQ(j["gate_hash"].get<std::string>().size(), 16u);
    for (const char* key : {"C1", "C2", "D", "witness"}) EXPECT_TRUE(j.contains(key)) << key;
}

}  // namespace
}  // namespace hierarchon
