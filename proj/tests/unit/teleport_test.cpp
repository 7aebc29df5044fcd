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

#include "fixtures.hpp"
#include "hierarchon/diagonal.hpp"
#include "hierarchon/phasespace.hpp"
#include "hierarchon/teleport.hpp"

namespace hierarchon {
namespace {

using testing::catalog;

StateVec ket(unsigned d, unsigned z) {
    StateVec v(d);
    v[z] = 1;
    return v;
}

ScaledUnitary identity(unsigned d) { return ScaledUnitary::unitary(ExactMatrix::identity(d)); }

void expect_all_branches(const Branches& b, const StateVec& want) {
    size_t nonempty = 0;
    for (const auto& s : b)
        if (s) {
            ++nonempty;
            EXPECT_TRUE(proportional(*s, want));
        }
    EXPECT_GT(nonempty, 0u);
}

TEST(Teleport, Proportional) {
    const StateVec a{1, 2, 0};
    EXPECT_TRUE(proportional(a, {omega(3), omega(3) * 2, 0}));
    EXPECT_FALSE(proportional(a, {1, 2, 1}));
    EXPECT_FALSE(proportional(a, {0, 0, 0}));
    EXPECT_FALSE(proportional(a, {1, 2}));
}

TEST(Teleport, XTeleportBasisState) {
    const auto b = x_teleport(ket(3, 0), 3);
    ASSERT_EQ(b.size(), 3u);
    ASSERT_TRUE(b[0].has_value());
    EXPECT_TRUE(proportional(*b[0], ket(3, 0)));
    expect_all_branches(b, ket(3, 0));
}

TEST(Teleport, XTeleportSuperposition) {
    const StateVec psi{1, 1, 0};
    const auto b = x_teleport(psi, 3);
    for (const auto& s : b) ASSERT_TRUE(s.has_value());
    expect_all_branches(b, psi);
}

TEST(Teleport, XTeleportRandomStates) {
    for (unsigned d : {3u, 5u}) {
        uint64_t rng = 99 + d;
        for (int i = 0; i < 10; ++i) {
            const StateVec psi = random_state(d, rng);
            expect_all_branches(x_teleport(psi, d), psi);
        }
    }
    EXPECT_THROW(x_teleport(ket(4, 0), 4), std::invalid_argument);
}

TEST(Teleport, TrivialGadgetIsXTeleport) {
    const GadgetSpec spec{identity(3), identity(3), ExactMatrix::identity(3)};
    uint64_t rng = 5;
    const StateVec psi = random_state(3, rng);
    expect_all_branches(gadget_run(spec, psi, 3), psi);
}

TEST(Teleport, DiagonalGadgetOnBasisState) {
    const ExactMatrix d = ExactMatrix::diagonal(std::vector<Cyclo>{1, Cyclo::zeta(3, 2, 1), Cyclo::zeta(3, 2, 2)});
    const GadgetSpec spec{identity(3), identity(3), d};
    StateVec want(3);
    want[1] = Cyclo::zeta(3, 2, 1);
    expect_all_branches(gadget_run(spec, ket(3, 1), 3), want);
}

TEST(Teleport, RejectsNonDiagonalCore) {
    const GadgetSpec spec{identity(3), identity(3), dft(3)};
    EXPECT_THROW(gadget_run(spec, ket(3, 0), 3), std::invalid_argument);
}

TEST(Teleport, CorrectionIsClifford) {
    for (const auto& d : gen_delta_k(3, 3)) {
        const GadgetSpec spec{identity(3), identity(3), d};
        EXPECT_TRUE(membership(gadget_correction(spec, 3), 3, 2));
    }
}

TEST(Teleport, DiagonalCommutesWithControl) {
    for (unsigned d : {3u, 5u}) {
        const auto id = ExactMatrix::identity(d);
        std::vector<Cyclo> cx(d * d * d * d);
        for (unsigned a = 0; a < d; ++a)
            for (unsigned b = 0; b < d; ++b) cx[(a + d * ((a + b) % d)) * d * d + (a + d * b)] = 1;
        const ExactMatrix control = ExactMatrix::from_entries(d * d, d * d, cx);
        for (const auto& g : gen_delta_k(d, 2)) {
            const ExactMatrix on_control = id.kron(g);
            EXPECT_EQ(control * on_control, on_control * control);
        }
    }
}

TEST(Teleport, SampledThirdLevelGates) {
    const TeleportReport r = verify_teleport(catalog(3, 1, 3), 20, 3, 1234, 2);
    EXPECT_EQ(r.samples, 20u);
    EXPECT_GE(r.branches_checked, 20u * 3u);
    EXPECT_TRUE(r.failures.empty());
    EXPECT_TRUE(r.non_clifford_corrections.empty());
    const TeleportReport again = verify_teleport(catalog(3, 1, 3), 20, 3, 1234, 1);
    EXPECT_EQ(teleport_json(r), teleport_json(again));
}

}  // namespace
}  // namespace hierarchon
