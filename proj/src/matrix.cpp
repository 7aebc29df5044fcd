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

#include "hierarchon/matrix.hpp"

#include <stdexcept>

#include "poly.hpp"

namespace hierarchon {

using detail::Poly;

// Writes entries of a matrix being assembled at a fixed conductor.
class MatrixBuilder {
   public:
    MatrixBuilder(size_t rows, size_t cols, Conductor c, mpz_class den) {
        m_.rows_ = rows;
        m_.cols_ = cols;
        m_.cond_ = c;
        m_.num_.resize(rows * cols * c.degree());
        m_.den_ = std::move(den);
    }

    mpz_class* entry(size_t r, size_t c) { return m_.num_.data() + (r * m_.cols_ + c) * m_.stride(); }

    ExactMatrix finish() && {
        m_.normalize();
        return std::move(m_);
    }

   private:
    ExactMatrix m_;
};

namespace {

// Numerators of every entry of m at conductor c, entry-major.
Poly promoted(const ExactMatrix& m, Conductor c) {
    const size_t k = c.degree();
    if (m.conductor() == c) {
        Poly out;
        out.reserve(m.rows() * m.cols() * k);
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t col = 0; col < m.cols(); ++col) {
                auto s = m.numerators_at(r, col);
                out.insert(out.end(), s.begin(), s.end());
            }
        return out;
    }
    Poly out(m.rows() * m.cols() * k);
    const uint64_t scale = c.order() / m.conductor().order();
    size_t e = 0;
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t col = 0; col < m.cols(); ++col, ++e) {
            auto s = m.numerators_at(r, col);
            for (size_t i = 0; i < s.size(); ++i) out[e * k + i * scale] = s[i];
        }
    return out;
}

// In-place fold of dense[0, N) onto [0, phi); the tail is left dirty.
void fold(Conductor c, Poly& dense) {
    if (c.is_rational()) return;
    const uint64_t n = c.order();
    const uint64_t step = n / c.prime;
    const uint64_t phi = n - step;
    for (uint64_t e = n; e-- > phi;) {
        if (sgn(dense[e]) == 0) continue;
        const uint64_t r = e - phi;
        for (unsigned j = 0; j + 1 < c.prime; ++j) dense[r + j * step] -= dense[e];
    }
}

}  // namespace

ExactMatrix::ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), num_(rows * cols) {}

ExactMatrix ExactMatrix::identity(size_t n) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.num_[i * n + i] = 1;
    return m;
}

ExactMatrix ExactMatrix::from_entries(size_t rows, size_t cols, std::span<const Cyclo> entries) {
    if (entries.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
    Conductor c;
    mpz_class den = 1;
    for (const auto& e : entries) {
        c = join(c, e.conductor());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.denominator().get_mpz_t());
    }
    MatrixBuilder b(rows, cols, c, den);
    const size_t k = c.degree();
    for (size_t i = 0; i < entries.size(); ++i) {
        const mpz_class factor = den / entries[i].denominator();
        const Poly nums = entries[i].numerators_in(c);
        mpz_class* out = b.entry(i / cols, i % cols);
        for (size_t j = 0; j < k; ++j) out[j] = nums[j] * factor;
    }
    return std::move(b).finish();
}

ExactMatrix ExactMatrix::diagonal(std::span<const Cyclo> entries) {
    const size_t n = entries.size();
    std::vector<Cyclo> all(n * n);
    for (size_t i = 0; i < n; ++i) all[i * n + i] = entries[i];
    return from_entries(n, n, all);
}

ExactMatrix ExactMatrix::column(std::span<const Cyclo> entries) {
    return from_entries(entries.size(), 1, entries);
}

std::span<const mpz_class> ExactMatrix::numerators_at(size_t r, size_t c) const {
    return {num_.data() + (r * cols_ + c) * stride(), stride()};
}

Cyclo ExactMatrix::at(size_t r, size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    auto s = numerators_at(r, c);
    return Cyclo::from_parts(cond_, Poly(s.begin(), s.end()), den_);
}

bool ExactMatrix::is_zero_at(size_t r, size_t c) const { return detail::all_zero(numerators_at(r, c)); }

std::vector<Cyclo> ExactMatrix::entries() const {
    std::vector<Cyclo> out;
    out.reserve(rows_ * cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

void ExactMatrix::normalize() {
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& v : num_) v = -v;
    }
    if (detail::all_zero(num_)) {
        cond_ = Conductor();
        num_.assign(rows_ * cols_, mpz_class(0));
        den_ = 1;
        return;
    }
    mpz_class g = den_;
    for (const auto& v : num_) {
        if (g == 1) break;
        if (sgn(v) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 1) {
        den_ /= g;
        for (auto& v : num_)
            if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    while (!cond_.is_rational()) {
        const size_t k = stride();
        bool ok = true;
        for (size_t e = 0; ok && e < rows_ * cols_; ++e)
            ok = detail::demotable({num_.data() + e * k, k}, cond_);
        if (!ok) break;
        Poly next;
        next.reserve(rows_ * cols_ * (cond_.exp == 1 ? 1 : k / cond_.prime));
        for (size_t e = 0; e < rows_ * cols_; ++e) {
            Poly d = detail::demote({num_.data() + e * k, k}, cond_);
            for (auto& v : d) next.push_back(std::move(v));
        }
        num_ = std::move(next);
        cond_ = Conductor(cond_.prime, cond_.exp - 1);
    }
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    const Conductor c = join(cond_, o.cond_);
    const size_t k = c.degree();
    const uint64_t n = c.order();
    const Poly a = promoted(*this, c);
    const Poly b = promoted(o, c);
    MatrixBuilder out(rows_, o.cols_, c, den_ * o.den_);
    Poly dense(n);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < o.cols_; ++j) {
            for (auto& v : dense) v = 0;
            for (size_t l = 0; l < cols_; ++l) {
                detail::mul_accumulate({a.data() + (i * cols_ + l) * k, k}, {b.data() + (l * o.cols_ + j) * k, k},
                                       n, dense);
            }
            fold(c, dense);
            mpz_class* dst = out.entry(i, j);
            for (size_t t = 0; t < k; ++t) dst[t] = dense[t];
        }
    }
    return std::move(out).finish();
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    const Conductor c = join(cond_, o.cond_);
    Poly a = promoted(*this, c);
    const Poly b = promoted(o, c);
    mpz_class den = den_;
    if (den_ == o.den_) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    } else {
        for (size_t i = 0; i < a.size(); ++i) {
            a[i] *= o.den_;
            mpz_addmul(a[i].get_mpz_t(), b[i].get_mpz_t(), den_.get_mpz_t());
        }
        den *= o.den_;
    }
    MatrixBuilder out(rows_, cols_, c, den);
    std::move(a.begin(), a.end(), out.entry(0, 0));
    return std::move(out).finish();
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(Cyclo(-1)); }

ExactMatrix ExactMatrix::scaled(const Cyclo& s) const {
    const Conductor c = join(cond_, s.conductor());
    const size_t k = c.degree();
    const Poly a = promoted(*this, c);
    const Poly sn = s.numerators_in(c);
    MatrixBuilder out(rows_, cols_, c, den_ * s.denominator());
    if (s.is_rational()) {
        for (size_t i = 0; i < a.size(); ++i) out.entry(0, 0)[i] = a[i] * sn[0];
        return std::move(out).finish();
    }
    for (size_t e = 0; e < rows_ * cols_; ++e) {
        Poly prod = detail::multiply({a.data() + e * k, k}, sn, c);
        std::move(prod.begin(), prod.end(), out.entry(0, 0) + e * k);
    }
    return std::move(out).finish();
}

ExactMatrix ExactMatrix::adjoint() const {
    MatrixBuilder out(cols_, rows_, cond_, den_);
    const size_t k = stride();
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            auto s = numerators_at(r, c);
            mpz_class* dst = out.entry(c, r);
            if (cond_.is_rational()) {
                dst[0] = s[0];
                continue;
            }
            Poly g = detail::galois(s, cond_, cond_.order() - 1);
            for (size_t t = 0; t < k; ++t) dst[t] = std::move(g[t]);
        }
    }
    return std::move(out).finish();
}

ExactMatrix ExactMatrix::pow(unsigned e) const {
    if (!is_square()) throw std::invalid_argument("power of a non-square matrix");
    ExactMatrix result = identity(rows_);
    ExactMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
    std::vector<Cyclo> out(rows_ * o.rows_ * cols_ * o.cols_);
    const auto a = entries();
    const auto b = o.entries();
    const size_t width = cols_ * o.cols_;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (a[i * cols_ + j].is_zero()) continue;
            for (size_t k = 0; k < o.rows_; ++k)
                for (size_t l = 0; l < o.cols_; ++l)
                    out[(i * o.rows_ + k) * width + j * o.cols_ + l] = a[i * cols_ + j] * b[k * o.cols_ + l];
        }
    return from_entries(rows_ * o.rows_, width, out);
}

std::vector<std::vector<mpz_class>> ExactMatrix::numerators_in(Conductor target) const {
    if (join(target, cond_) != target) throw std::invalid_argument("target conductor does not contain matrix");
    std::vector<std::vector<mpz_class>> out;
    out.reserve(rows_ * cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.push_back(detail::promote(numerators_at(r, c), cond_, target));
    return out;
}

Cyclo ExactMatrix::trace() const {
    Cyclo t;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::is_zero() const { return detail::all_zero(num_); }

bool ExactMatrix::is_diagonal() const {
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (r != c && !is_zero_at(r, c)) return false;
    return true;
}

std::optional<Cyclo> ExactMatrix::scalar_value() const {
    if (!is_square() || !is_diagonal()) return std::nullopt;
    for (size_t i = 1; i < rows_; ++i) {
        auto a = numerators_at(0, 0);
        auto b = numerators_at(i, i);
        if (!std::equal(a.begin(), a.end(), b.begin())) return std::nullopt;
    }
    return rows_ ? at(0, 0) : Cyclo();
}

std::strong_ordering ExactMatrix::compare(const ExactMatrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    if (auto c = cond_ <=> o.cond_; c != 0) return c;
    if (int c = cmp(den_, o.den_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (int c = cmp(num_[i], o.num_[i]); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

uint64_t ExactMatrix::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (uint64_t v : {uint64_t{rows_}, uint64_t{cols_}, uint64_t{cond_.prime}, uint64_t{cond_.exp}})
        h = (h ^ v) * 0x100000001b3ULL;
    h = detail::mix_hash(h, den_);
    for (const auto& v : num_) h = detail::mix_hash(h, v);
    return h;
}

ScaledUnitary ScaledUnitary::unitary(ExactMatrix m) { return ScaledUnitary{std::move(m), Cyclo(1)}; }

ScaledUnitary ScaledUnitary::from_matrix(ExactMatrix m) {
    if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("not unitary up to scale: matrix is not square");
    const auto s = (m * m.adjoint()).scalar_value();
    if (!s || s->is_zero()) throw std::invalid_argument("not unitary up to scale: M M^dagger != scale2 * I");
    return ScaledUnitary{std::move(m), *s};
}

bool ScaledUnitary::verify() const {
    if (scale2.is_zero() || scale2.conj() != scale2) return false;
    const auto s = (mat * mat.adjoint()).scalar_value();
    return s && *s == scale2;
}

ScaledUnitary ScaledUnitary::adjoint() const { return ScaledUnitary{mat.adjoint(), scale2}; }

ScaledUnitary ScaledUnitary::operator*(const ScaledUnitary& o) const {
    return ScaledUnitary{mat * o.mat, scale2 * o.scale2};
}

ExactMatrix canonical_rep(const ExactMatrix& m) {
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            if (!m.is_zero_at(r, c)) return m.scaled(m.at(r, c).inverse());
    throw std::invalid_argument("canonical_rep of the zero matrix");
}

ExactMatrix conjugate_action(const ScaledUnitary& g, const ExactMatrix& m) {
    if (g.mat.cols() != m.rows() || !m.is_square()) throw std::invalid_argument("dimension mismatch");
    ExactMatrix out = g.mat * m * g.mat.adjoint();
    if (!g.scale2.is_one()) out = out.scaled(g.scale2.inverse());
    return out;
}

}  // namespace hierarchon
