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

#include "hierarchon/phasespace.hpp"
#include "hierarchon/svn.hpp"

namespace hierarchon {
namespace {

ScaledUnitary su(const ExactMatrix& m) { return ScaledUnitary::unitary(m); }

ConjugateTuple single(unsigned d, const ExactMatrix& u, const ExactMatrix& v) { return ConjugateTuple{d, {{su(u), su(v)}}}; }

TEST(Svn, ConjugatePairs) {
    const ExactMatrix z = pauli_z(3, 1, 0);
    const ExactMatrix x = pauli_x(3, 1, 0);
    EXPECT_TRUE(is_conjugate_pair(z, x, 3));
    EXPECT_FALSE(is_conjugate_pair(z, z, 3));
    EXPECT_TRUE(is_conjugate_pair(x.pow(2), z, 3));
    EXPECT_FALSE(is_conjugate_pair(x, z, 3));
    // Order-d condition is exact: omega-free scalar multiples fail.
    EXPECT_FALSE(is_conjugate_pair(z.scaled(Cyclo::zeta(3, 2, 1)), x, 3));
}

TEST(Svn, TupleCrossCommutation) {
    ConjugateTuple good{3, {{su(pauli_z(3, 2, 0)), su(pauli_x(3, 2, 0))}, {su(pauli_z(3, 2, 1)), su(pauli_x(3, 2, 1))}}};
    EXPECT_TRUE(is_conjugate_tuple(good));
    ConjugateTuple bad{3, {{su(pauli_z(3, 2, 0)), su(pauli_x(3, 2, 0))}, {su(pauli_z(3, 2, 0)), su(pauli_x(3, 2, 1))}}};
    EXPECT_FALSE(is_conjugate_tuple(bad));
}

TEST(Svn, UnitEigenvector) {
    const auto u0 = simultaneous_unit_eigvec(single(3, pauli_z(3, 1, 0), pauli_x(3, 1, 0)));
    EXPECT_EQ(canonical_rep(u0), ExactMatrix::column(std::vector<Cyclo>{1, 0, 0}));
    const ExactMatrix xinv = pauli_x(3, 1, 0).pow(2);
    const auto u1 = simultaneous_unit_eigvec(single(3, xinv, pauli_z(3, 1, 0)));
    EXPECT_EQ(canonical_rep(u1), ExactMatrix::column(std::vector<Cyclo>{1, 1, 1}));
    EXPECT_EQ(xinv * u1, u1);
}

TEST(Svn, ReconstructIdentityAndFourier) {
    const auto id = reconstruct(single(3, pauli_z(3, 1, 0), pauli_x(3, 1, 0)));
    EXPECT_EQ(canonical_rep(id.mat), ExactMatrix::identity(3));
    const auto f = reconstruct(single(3, pauli_x(3, 1, 0).pow(2), pauli_z(3, 1, 0)));
    EXPECT_EQ(canonical_rep(f.mat), canonical_rep(dft(3)));
    EXPECT_TRUE(f.verify());
}

TEST(Svn, ReconstructRejectsInvalid) {
    EXPECT_THROW(reconstruct(single(3, pauli_z(3, 1, 0), pauli_z(3, 1, 0))), std::invalid_argument);
}

TEST(Svn, TupleOf) {
    const auto t = tuple_of(su(ExactMatrix::identity(9)), 3);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t.pairs[1].first.mat, pauli_z(3, 2, 1));
    EXPECT_EQ(t.pairs[0].second.mat, pauli_x(3, 2, 0));
    const auto tf = tuple_of(ScaledUnitary::from_matrix(dft(3)), 3);
    EXPECT_EQ(tf.pairs[0].first.mat, pauli_x(3, 1, 0).pow(2));
    EXPECT_EQ(tf.pairs[0].second.mat, pauli_z(3, 1, 0));
}

TEST(Svn, PauliConjugatesKeepPoints) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> digit(0, 4);
    for (int trial = 0; trial < 10; ++trial) {
        const PauliElement p{5, digit(rng), PhasePoint{{digit(rng)}, {digit(rng)}}};
        const auto t = tuple_of(su(to_matrix(p)), 5);
        const auto u = recognize_pauli(t.pairs[0].first.mat, 5, false);
        const auto v = recognize_pauli(t.pairs[0].second.mat, 5, false);
        ASSERT_TRUE(u && v);
        EXPECT_EQ(u->point, (PhasePoint{{1}, {0}}));
        EXPECT_EQ(v->point, (PhasePoint{{0}, {1}}));
    }
}

// Random two-qutrit Cliffords from random symplectic targets.
ScaledUnitary random_clifford(std::mt19937_64& rng, unsigned d, unsigned n) {
    const auto bases = enumerate_semibases(d, n);
    std::uniform_int_distribution<size_t> pick(0, bases.size() - 1);
    std::uniform_int_distribution<int> digit(0, static_cast<int>(d) - 1);
    const auto& b = bases[pick(rng)];
    std::vector<PauliElement> targets;
    for (const auto& v : b.vectors) targets.push_back({d, digit(rng), v});
    const ScaledUnitary c = synthesize_clifford(targets);
    PauliElement right{d, 0, PhasePoint{std::vector<int>(n), std::vector<int>(n)}};
    for (unsigned i = 0; i < n; ++i) {
        right.point.p[i] = digit(rng);
        right.point.q[i] = digit(rng);
    }
    return ScaledUnitary{c.mat * to_matrix(right), c.scale2};
}

TEST(Svn, RoundTripRandomCliffords) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = trial % 2 ? 2 : 1;
        const ScaledUnitary g = random_clifford(rng, 3, n);
        const auto t = tuple_of(g, 3);
        ASSERT_TRUE(is_conjugate_tuple(t));
        const auto u0 = simultaneous_unit_eigvec(t);
        EXPECT_EQ(t.pairs[0].first.mat * u0, u0);
        EXPECT_EQ(canonical_rep(reconstruct(t).mat), canonical_rep(g.mat));
    }
}

void check_orthogonality(const ExactMatrix& u, const ExactMatrix& v, unsigned d) {
    ASSERT_TRUE(is_conjugate_pair(u, v, d));
    std::vector<ExactMatrix> mono;
    for (unsigned p = 0; p < d; ++p)
        for (unsigned q = 0; q < d; ++q) mono.push_back(u.pow(p) * v.pow(q));
    for (size_t i = 0; i < mono.size(); ++i) {
        if (i != 0) EXPECT_TRUE(mono[i].trace().is_zero());
        for (size_t j = 0; j < mono.size(); ++j) {
            const Cyclo ip = (mono[i].adjoint() * mono[j]).trace();
            if (i == j)
                EXPECT_EQ(ip, Cyclo(static_cast<long>(d)));
            else
                EXPECT_TRUE(ip.is_zero());
        }
    }
}

TEST(Svn, HilbertSchmidtOrthogonality) {
    for (unsigned d : {3u, 5u}) {
        check_orthogonality(pauli_z(d, 1, 0), pauli_x(d, 1, 0), d);
        const auto f = ScaledUnitary::from_matrix(dft(d));
        check_orthogonality(conjugate_action(f, pauli_z(d, 1, 0)), conjugate_action(f, pauli_x(d, 1, 0)), d);
        std::vector<Cyclo> phases;
        for (unsigned z = 0; z < d; ++z) phases.push_back(Cyclo::zeta(d, 2, static_cast<int64_t>(z) * z * z));
        const auto t = ScaledUnitary::unitary(ExactMatrix::diagonal(phases));
        const ExactMatrix v = conjugate_action(t, pauli_x(d, 1, 0));
        // Order-d correction of a non-Clifford conjugate.
        const Cyclo lambda = *v.pow(d).scalar_value();
        const auto root = dth_root(lambda.inverse(), Conductor(d, 3));
        ASSERT_TRUE(root.has_value());
        check_orthogonality(pauli_z(d, 1, 0), v.scaled(*root), d);
    }
}

}  // namespace
}  // namespace hierarchon
