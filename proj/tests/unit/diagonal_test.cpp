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

#include <set>

#include "fixtures.hpp"
#include "hierarchon/diagonal.hpp"
#include "hierarchon/phasespace.hpp"

namespace hierarchon {
namespace {

using testing::catalog;

bool less(const ExactMatrix& a, const ExactMatrix& b) { return a.compare(b) < 0; }

TEST(Diagonal, PrecisionDegree) {
    EXPECT_EQ(precision_degree(1, 3), (PrecisionDegree{1, 1, 1}));
    EXPECT_EQ(precision_degree(2, 3), (PrecisionDegree{2, 1, 2}));
    EXPECT_EQ(precision_degree(3, 3), (PrecisionDegree{3, 2, 1}));
    EXPECT_EQ(precision_degree(4, 3), (PrecisionDegree{4, 2, 2}));
    EXPECT_EQ(precision_degree(5, 3), (PrecisionDegree{5, 3, 1}));
    EXPECT_EQ(precision_degree(5, 5), (PrecisionDegree{5, 2, 1}));
    EXPECT_EQ(precision_degree(4, 5), (PrecisionDegree{4, 1, 4}));
    for (unsigned d : {3u, 5u, 7u})
        for (unsigned k = 1; k <= 12; ++k) {
            const auto p = precision_degree(k, d);
            EXPECT_EQ((p.m - 1) * (d - 1) + p.a, k);
            EXPECT_GE(p.a, 1u);
            EXPECT_LE(p.a, d - 1);
        }
}

TEST(Diagonal, RankPolynomialCount) {
    for (unsigned d : {3u, 5u})
        for (unsigned k = 1; k <= 4; ++k) {
            const auto polys = rank_k_polys(d, k);
            uint64_t want = 1;
            for (unsigned i = 0; i < k; ++i) want *= d;
            EXPECT_EQ(polys.size(), want);
            for (const auto& p : polys) EXPECT_TRUE(p.has_rank(k));
        }
}

TEST(Diagonal, DeltaSizeAndDistinctness) {
    for (unsigned k = 1; k <= 5; ++k) {
        auto delta = gen_delta_k(3, k);
        std::sort(delta.begin(), delta.end(), less);
        EXPECT_EQ(std::adjacent_find(delta.begin(), delta.end()), delta.end());
        uint64_t want = 1;
        for (unsigned i = 0; i < k; ++i) want *= 3;
        EXPECT_EQ(delta.size(), want);
        for (const auto& g : delta) {
            EXPECT_TRUE(g.is_diagonal());
            EXPECT_EQ(canonical_rep(g), g);
        }
    }
}

TEST(Diagonal, DeltaNested) {
    for (unsigned k = 2; k <= 5; ++k) {
        auto hi = gen_delta_k(3, k);
        std::sort(hi.begin(), hi.end(), less);
        for (const auto& g : gen_delta_k(3, k - 1)) EXPECT_TRUE(std::binary_search(hi.begin(), hi.end(), g, less));
    }
}

TEST(Diagonal, DeltaIsAGroup) {
    for (unsigned k : {2u, 3u}) {
        auto delta = gen_delta_k(3, k);
        std::sort(delta.begin(), delta.end(), less);
        for (const auto& a : delta)
            for (const auto& b : delta)
                ASSERT_TRUE(std::binary_search(delta.begin(), delta.end(), canonical_rep(a * b), less));
    }
}

TEST(Diagonal, TwistExample) {
    // phi(z) = z over Z_9 with q = 1 gives exponents (-2, 1, 1).
    const RankKPoly phi{3, 2, {1, 0}};
    const ExactMatrix t = twist(phi, 1);
    const ExactMatrix want = ExactMatrix::diagonal(std::vector<Cyclo>{
        Cyclo::zeta(3, 2, -2), Cyclo::zeta(3, 2, 1), Cyclo::zeta(3, 2, 1)});
    EXPECT_EQ(t, want);
    EXPECT_EQ(twist(phi, 0), ExactMatrix::identity(3));
}

TEST(Diagonal, TwistMatchesCommutator) {
    for (const auto& phi : rank_k_polys(3, 4))
        for (unsigned q = 0; q < 3; ++q) {
            const ExactMatrix d = diagonal_gate(phi);
            const ExactMatrix x = pauli_x(3, 1, 0).pow(q);
            EXPECT_EQ(twist(phi, q), d * x * d.adjoint() * x.adjoint());
        }
}

TEST(Diagonal, DxdStepLowersLevel) {
    const auto& second = catalog(3, 1, 2);
    for (const auto& g : gen_delta_k(3, 3)) {
        const DxdStep s = dxd_step(g, 3);
        EXPECT_TRUE(s.lower.is_diagonal());
        EXPECT_TRUE(second.contains(s.lower));
        EXPECT_EQ(s.phases.size(), 3u);
        for (const auto& c : s.phases)
            EXPECT_EQ((s.lower * pauli_x(3, 1, 0)).scaled(c).pow(3), ExactMatrix::identity(3));
    }
    EXPECT_THROW(dxd_step(dft(3), 3), std::invalid_argument);
}

TEST(Diagonal, ClassificationQutrit) {
    for (unsigned k = 1; k <= 4; ++k) {
        const CgkReport r = verify_cgk(3, k, catalog(3, 1, k));
        EXPECT_TRUE(r.pass()) << "k=" << k;
        EXPECT_TRUE(r.missing.empty());
        EXPECT_TRUE(r.extra.empty());
    }
    EXPECT_EQ(verify_cgk(3, 3, catalog(3, 1, 3)).diagonal_in_catalog, 27u);
}

TEST(Diagonal, ClassificationQuintit) {
    for (unsigned k = 1; k <= 2; ++k) EXPECT_TRUE(verify_cgk(5, k, catalog(5, 1, k)).pass());
}

TEST(Diagonal, CatalogMismatchRejected) {
    EXPECT_THROW(verify_cgk(3, 2, catalog(3, 1, 3)), std::invalid_argument);
}

TEST(Diagonal, ReportJson) {
    const auto j = cgk_json(verify_cgk(3, 2, catalog(3, 1, 2)));
    EXPECT_EQ(j["d"], 3);
    EXPECT_EQ(j["k"], 2);
    EXPECT_TRUE(j["missing"].empty());
}

}  // namespace
}  // namespace hierarchon
