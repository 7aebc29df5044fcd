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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hierarchon/cyclo.hpp"

namespace hierarchon {

/// Dense matrix over a cyclotomic field.
///
/// All entries share one conductor and one positive denominator; integer
/// numerators are stored entry-major, degree() per entry. The representation is
/// normalised (gcd 1, smallest conductor), so == and hash() are exact.
class ExactMatrix {
   public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols);

    static ExactMatrix identity(size_t n);
    static ExactMatrix from_entries(size_t rows, size_t cols, std::span<const Cyclo> entries);
    static ExactMatrix diagonal(std::span<const Cyclo> entries);
    static ExactMatrix column(std::span<const Cyclo> entries);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const Conductor& conductor() const { return cond_; }
    const mpz_class& denominator() const { return den_; }

    Cyclo at(size_t r, size_t c) const;
    bool is_zero_at(size_t r, size_t c) const;
    std::vector<Cyclo> entries() const;
    /// Integer numerators of entry (r, c), relative to denominator().
    std::span<const mpz_class> numerators_at(size_t r, size_t c) const;

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const Cyclo& s) const;
    ExactMatrix adjoint() const;
    ExactMatrix pow(unsigned e) const;
    ExactMatrix kron(const ExactMatrix& o) const;
    /// Promotes every entry to `target`; used for serialisation only.
    std::vector<std::vector<mpz_class>> numerators_in(Conductor target) const;

    Cyclo trace() const;
    bool is_zero() const;
    bool is_diagonal() const;
    /// c when this equals c * I.
    std::optional<Cyclo> scalar_value() const;

    bool operator==(const ExactMatrix& o) const = default;
    std::strong_ordering compare(const ExactMatrix& o) const;
    uint64_t hash() const;

   private:
    friend class MatrixBuilder;
    void normalize();
    size_t stride() const { return cond_.degree(); }

    size_t rows_ = 0;
    size_t cols_ = 0;
    Conductor cond_;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

struct MatrixHash {
    size_t operator()(const ExactMatrix& m) const { return static_cast<size_t>(m.hash()); }
};

/// A matrix M with M M^dagger = scale2 * I, scale2 real and positive.
struct ScaledUnitary {
    ExactMatrix mat;
    Cyclo scale2{1};

    /// Trusts the caller that `m` is unitary.
    static ScaledUnitary unitary(ExactMatrix m);
    /// Computes scale2 from M M^dagger; throws std::invalid_argument when M is not
    /// unitary up to a positive scale.
    static ScaledUnitary from_matrix(ExactMatrix m);

    bool verify() const;
    ScaledUnitary adjoint() const;
    ScaledUnitary operator*(const ScaledUnitary& o) const;
};

/// M divided by its first nonzero entry in row-major order. Throws on the zero matrix.
ExactMatrix canonical_rep(const ExactMatrix& m);

/// (G M G^dagger) / scale2.
ExactMatrix conjugate_action(const ScaledUnitary& g, const ExactMatrix& m);

}  // namespace hierarchon
