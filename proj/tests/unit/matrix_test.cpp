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

#include "hierarchon/matrix.hpp"
#include "hierarchon/phasespace.hpp"

namespace hierarchon {
namespace {

ExactMatrix diag3(Cyclo a, Cyclo b, Cyclo c) {
    const std::vector<Cyclo> e{a, b, c};
    return ExactMatrix::diagonal(e);
}

TEST(ExactMatrix, CanonicalRepStripsPhase) {
    const ExactMatrix z = pauli_z(3, 1, 0);
    EXPECT_EQ(canonical_rep(z.scaled(omega(3))), canonical_rep(z));
    EXPECT_EQ(canonical_rep(z), diag3(1, omega(3), omega(3, 2)));
    EXPECT_EQ(canonical_rep(z.scaled(Cyclo::zeta(3, 3, 5))), canonical_rep(z));
}

TEST(ExactMatrix, CanonicalRepOfScaledFourier) {
    const ExactMatrix f = dft(3);
    EXPECT_EQ(canonical_rep(f.scaled(Cyclo(7) * Cyclo::zeta(3, 2, 1))), canonical_rep(f));
    EXPECT_TRUE(canonical_rep(f).at(0, 0).is_one());
}

TEST(ExactMatrix, CanonicalRepIsIdempotent) {
    const ExactMatrix x = pauli_x(5, 1, 0).scaled(omega(5, 3));
    const ExactMatrix c = canonical_rep(x);
    EXPECT_EQ(canonical_rep(c), c);
}

TEST(ExactMatrix, CanonicalRepRejectsZero) { EXPECT_THROW(canonical_rep(ExactMatrix(2, 2)), std::invalid_argument); }

TEST(ExactMatrix, ConjugateActionOfFourier) {
    const auto f = ScaledUnitary::from_matrix(dft(3));
    EXPECT_EQ(f.scale2, Cyclo(3));
    const ExactMatrix z = pauli_z(3, 1, 0);
    const ExactMatrix x = pauli_x(3, 1, 0);
    EXPECT_EQ(conjugate_action(f, z), x.pow(2));
    EXPECT_EQ(conjugate_action(f, x), z);
    EXPECT_EQ(conjugate_action(ScaledUnitary::unitary(ExactMatrix::identity(3)), z), z);
    EXPECT_EQ(conjugate_action(f, ExactMatrix::identity(3)), ExactMatrix::identity(3));
}

TEST(ExactMatrix, ConjugationPreservesProducts) {
    const auto f = ScaledUnitary::from_matrix(dft(5));
    std::vector<Cyclo> phases;
    for (int k = 0; k < 5; ++k) phases.push_back(Cyclo::zeta(5, 2, k * k));
    const ExactMatrix d = ExactMatrix::diagonal(phases);
    const ExactMatrix x = pauli_x(5, 1, 0);
    EXPECT_EQ(conjugate_action(f, d * x), conjugate_action(f, d) * conjugate_action(f, x));
}

TEST(ExactMatrix, ScaledUnitaryInvariant) {
    const auto f = ScaledUnitary::from_matrix(dft(3).kron(dft(3)));
    EXPECT_EQ(f.scale2, Cyclo(9));
    EXPECT_TRUE(f.verify());
    const ExactMatrix bad = diag3(1, 2, 1);
    EXPECT_THROW(ScaledUnitary::from_matrix(bad), std::invalid_argument);
}

TEST(ExactMatrix, KronOrdersQuditZeroLeastSignificant) {
    // pauli_x on qudit 0 of two qudits is I (x) X in big-endian kron order.
    EXPECT_EQ(pauli_x(3, 2, 0), ExactMatrix::identity(3).kron(pauli_x(3, 1, 0)));
    EXPECT_EQ(pauli_z(3, 2, 1), pauli_z(3, 1, 0).kron(ExactMatrix::identity(3)));
}

TEST(ExactMatrix, AdjointAndTrace) {
    const ExactMatrix z = pauli_z(3, 1, 0);
    EXPECT_EQ(z * z.adjoint(), ExactMatrix::identity(3));
    EXPECT_TRUE(z.trace().is_zero());
    EXPECT_EQ(ExactMatrix::identity(4).trace(), Cyclo(4));
    EXPECT_TRUE(z.is_diagonal());
    EXPECT_FALSE(dft(3).is_diagonal());
    EXPECT_EQ(z.pow(3).scalar_value(), Cyclo(1));
    EXPECT_FALSE(z.scalar_value().has_value());
}

TEST(ExactMatrix, HashRespectsEquality) {
    const ExactMatrix a = pauli_z(3, 1, 0).scaled(Cyclo::zeta(3, 2, 3));
    const ExactMatrix b = pauli_z(3, 1, 0).scaled(omega(3));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.hash(), b.hash());
}

}  // namespace
}  // namespace hierarchon
