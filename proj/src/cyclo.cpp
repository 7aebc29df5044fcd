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

#include "hierarchon/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "poly.hpp"

namespace hierarchon {

namespace detail {

void reduce_dense(Conductor c, Poly& dense) {
    if (c.is_rational()) {
        dense.resize(1);
        return;
    }
    const uint64_t n = c.order();
    const uint64_t step = n / c.prime;
    const uint64_t phi = n - step;
    for (uint64_t e = n; e-- > phi;) {
        if (sgn(dense[e]) == 0) continue;
        const uint64_t r = e - phi;
        for (unsigned j = 0; j + 1 < c.prime; ++j) dense[r + j * step] -= dense[e];
    }
    dense.resize(phi);
}

void mul_accumulate(std::span<const mpz_class> a, std::span<const mpz_class> b, uint64_t order,
                    Poly& dense) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            uint64_t k = i + j;
            if (k >= order) k -= order;
            mpz_addmul(dense[k].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
}

Poly multiply(std::span<const mpz_class> a, std::span<const mpz_class> b, Conductor c) {
    Poly dense(c.order());
    mul_accumulate(a, b, c.order(), dense);
    reduce_dense(c, dense);
    return dense;
}

Poly promote(std::span<const mpz_class> a, Conductor from, Conductor to) {
    if (from == to) return Poly(a.begin(), a.end());
    const uint64_t scale = to.order() / from.order();
    Poly out(to.degree());
    for (size_t i = 0; i < a.size(); ++i) out[i * scale] = a[i];
    return out;
}

bool demotable(std::span<const mpz_class> a, Conductor c) {
    if (c.is_rational()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        const bool keep = c.exp == 1 ? i == 0 : i % c.prime == 0;
        if (!keep && sgn(a[i]) != 0) return false;
    }
    return true;
}

Poly demote(std::span<const mpz_class> a, Conductor c) {
    if (c.exp == 1) return Poly{a[0]};
    Poly out(a.size() / c.prime);
    for (size_t i = 0; i < out.size(); ++i) out[i] = a[i * c.prime];
    return out;
}

Poly galois(std::span<const mpz_class> a, Conductor c, uint64_t t) {
    if (c.is_rational()) return Poly(a.begin(), a.end());
    const uint64_t n = c.order();
    Poly dense(n);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        dense[static_cast<uint64_t>((static_cast<unsigned __int128>(i) * t) % n)] += a[i];
    }
    reduce_dense(c, dense);
    return dense;
}

namespace {

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<uint64_t>(static_cast<unsigned __int128>(r) * b % m);
        b = static_cast<uint64_t>(static_cast<unsigned __int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

}  // namespace

uint64_t unit_generator(Conductor c) {
    if (c.is_rational()) return 1;
    const uint64_t p = c.prime;
    std::vector<uint64_t> factors;
    uint64_t m = p - 1;
    for (uint64_t f = 2; f * f <= m; ++f) {
        if (m % f) continue;
        factors.push_back(f);
        while (m % f == 0) m /= f;
    }
    if (m > 1) factors.push_back(m);
    for (uint64_t g = 2;; ++g) {
        bool primitive = g % p != 0;
        for (uint64_t f : factors) primitive = primitive && powmod(g, (p - 1) / f, p) != 1;
        if (!primitive) continue;
        if (c.exp >= 2 && powmod(g, p - 1, p * p) == 1) continue;
        return g;
    }
}

bool all_zero(std::span<const mpz_class> a) {
    for (const auto& v : a)
        if (sgn(v) != 0) return false;
    return true;
}

uint64_t mix_hash(uint64_t h, const mpz_class& v) {
    constexpr uint64_t kMul = 0x100000001b3ULL;
    const mpz_srcptr z = v.get_mpz_t();
    h = (h ^ static_cast<uint64_t>(mpz_sgn(z) + 2)) * kMul;
    const size_t limbs = mpz_size(z);
    for (size_t i = 0; i < limbs; ++i) {
        h = (h ^ static_cast<uint64_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i)))) * kMul;
        h ^= h >> 29;
    }
    return h;
}

}  // namespace detail

using detail::Poly;

uint64_t Conductor::order() const {
    uint64_t n = 1;
    for (unsigned i = 0; i < exp; ++i) n *= prime;
    return n;
}

size_t Conductor::degree() const {
    if (exp == 0) return 1;
    const uint64_t n = order();
    return static_cast<size_t>(n - n / prime);
}

Conductor join(Conductor a, Conductor b) {
    if (a.is_rational()) return b;
    if (b.is_rational()) return a;
    if (a.prime != b.prime) throw std::invalid_argument("conductors of different primes");
    return a.exp >= b.exp ? a : b;
}

Cyclo::Cyclo() : num_{mpz_class(0)}, den_(1) {}

Cyclo::Cyclo(long value) : num_{mpz_class(value)}, den_(1) {}

Cyclo::Cyclo(const mpq_class& value) : num_{value.get_num()}, den_(value.get_den()) {}

Cyclo::Cyclo(Conductor c, std::vector<mpz_class> num, mpz_class den)
    : cond_(c), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

Cyclo Cyclo::zeta(unsigned prime, unsigned exp, int64_t power) {
    const Conductor c(prime, exp);
    const auto n = static_cast<int64_t>(c.order());
    int64_t t = power % n;
    if (t < 0) t += n;
    Poly dense(static_cast<size_t>(n));
    dense[static_cast<size_t>(t)] = 1;
    detail::reduce_dense(c, dense);
    return Cyclo(c, std::move(dense), 1);
}

Cyclo Cyclo::from_coeffs(Conductor c, std::span<const mpq_class> coeffs) {
    if (coeffs.size() != c.degree()) throw std::invalid_argument("coefficient count does not match conductor");
    mpz_class den = 1;
    for (const auto& q : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    Poly num(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    return Cyclo(c, std::move(num), std::move(den));
}

Cyclo Cyclo::from_parts(Conductor c, std::vector<mpz_class> numerators, mpz_class denominator) {
    if (numerators.size() != c.degree()) throw std::invalid_argument("numerator count does not match conductor");
    if (sgn(denominator) == 0) throw std::domain_error("zero divisor");
    return Cyclo(c, std::move(numerators), std::move(denominator));
}

void Cyclo::normalize() {
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& v : num_) v = -v;
    }
    if (detail::all_zero(num_)) {
        cond_ = Conductor();
        num_.assign(1, mpz_class(0));
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
    while (detail::demotable(num_, cond_)) {
        num_ = detail::demote(num_, cond_);
        cond_ = Conductor(cond_.prime, cond_.exp - 1);
    }
}

mpq_class Cyclo::coeff(size_t i) const {
    mpq_class q(num_.at(i), den_);
    q.canonicalize();
    return q;
}

std::vector<mpz_class> Cyclo::numerators_in(Conductor target) const {
    if (join(target, cond_) != target) throw std::invalid_argument("target conductor does not contain value");
    return detail::promote(num_, cond_, target);
}

std::vector<mpq_class> Cyclo::coeffs_in(Conductor target) const {
    auto nums = numerators_in(target);
    std::vector<mpq_class> out(nums.size());
    for (size_t i = 0; i < nums.size(); ++i) {
        out[i] = mpq_class(nums[i], den_);
        out[i].canonicalize();
    }
    return out;
}

bool Cyclo::is_zero() const { return cond_.is_rational() && sgn(num_[0]) == 0; }

bool Cyclo::is_one() const { return cond_.is_rational() && num_[0] == 1 && den_ == 1; }

std::optional<mpq_class> Cyclo::as_rational() const {
    if (!cond_.is_rational()) return std::nullopt;
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& v : r.num_) v = -v;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const Conductor c = join(cond_, o.cond_);
    Poly a = detail::promote(num_, cond_, c);
    const Poly b = detail::promote(o.num_, o.cond_, c);
    if (den_ == o.den_) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    } else {
        for (size_t i = 0; i < a.size(); ++i) {
            a[i] *= o.den_;
            mpz_addmul(a[i].get_mpz_t(), b[i].get_mpz_t(), den_.get_mpz_t());
        }
        den_ *= o.den_;
    }
    cond_ = c;
    num_ = std::move(a);
    normalize();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.is_zero() || b.is_zero()) return Cyclo();
    if (a.is_rational() || b.is_rational()) {
        const Cyclo& q = a.is_rational() ? a : b;
        const Cyclo& x = a.is_rational() ? b : a;
        Poly num = x.num_;
        for (auto& v : num) v *= q.num_[0];
        return Cyclo(x.cond_, std::move(num), x.den_ * q.den_);
    }
    const Conductor c = join(a.cond_, b.cond_);
    const Poly pa = detail::promote(a.num_, a.cond_, c);
    const Poly pb = detail::promote(b.num_, b.cond_, c);
    return Cyclo(c, detail::multiply(pa, pb, c), a.den_ * b.den_);
}

Cyclo& Cyclo::operator*=(const Cyclo& o) { return *this = *this * o; }

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this = *this / o; }

namespace {

// Product of sigma_{g^j}(a) for j in [0, count).
Poly conjugate_product(const Poly& a, Conductor c, uint64_t g, uint64_t count) {
    if (count == 1) return a;
    const uint64_t n = c.order();
    if (count % 2 == 0) {
        const Poly half = conjugate_product(a, c, g, count / 2);
        uint64_t shift = 1;
        for (uint64_t i = 0; i < count / 2; ++i) shift = static_cast<uint64_t>(static_cast<unsigned __int128>(shift) * g % n);
        return detail::multiply(half, detail::galois(half, c, shift), c);
    }
    const Poly rest = conjugate_product(a, c, g, count - 1);
    return detail::multiply(a, detail::galois(rest, c, g), c);
}

}  // namespace

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("zero divisor");
    if (is_rational()) return Cyclo(cond_, Poly{den_}, num_[0]);
    // a * prod_{j=1}^{phi-1} sigma_{g^j}(a) is the norm, a rational integer.
    const uint64_t g = detail::unit_generator(cond_);
    const Poly others = detail::galois(conjugate_product(num_, cond_, g, cond_.degree() - 1), cond_, g);
    const Poly norm = detail::multiply(num_, others, cond_);
    Poly num = others;
    for (auto& v : num) v *= den_;
    return Cyclo(cond_, std::move(num), norm[0]);
}

Cyclo Cyclo::conj() const {
    if (is_rational()) return *this;
    return galois(static_cast<int64_t>(cond_.order()) - 1);
}

Cyclo Cyclo::galois(int64_t t) const {
    if (is_rational()) return *this;
    const auto n = static_cast<int64_t>(cond_.order());
    int64_t s = t % n;
    if (s < 0) s += n;
    if (s % cond_.prime == 0) throw std::invalid_argument("galois exponent must be a unit");
    return Cyclo(cond_, detail::galois(num_, cond_, static_cast<uint64_t>(s)), den_);
}

Cyclo Cyclo::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result(1);
    Cyclo base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::strong_ordering Cyclo::compare(const Cyclo& o) const {
    if (auto c = cond_ <=> o.cond_; c != 0) return c;
    if (int c = cmp(den_, o.den_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (int c = cmp(num_[i], o.num_[i]); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

uint64_t Cyclo::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    h = (h ^ cond_.prime) * 0x100000001b3ULL;
    h = (h ^ cond_.exp) * 0x100000001b3ULL;
    h = detail::mix_hash(h, den_);
    for (const auto& v : num_) h = detail::mix_hash(h, v);
    return h;
}

std::complex<double> Cyclo::to_complex() const {
    const double n = static_cast<double>(cond_.order());
    std::complex<double> z = 0;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (sgn(num_[i]) == 0) continue;
        const double v = mpq_class(num_[i], den_).get_d();
        z += std::polar(v, 2 * std::numbers::pi * static_cast<double>(i) / n);
    }
    return z;
}

std::string Cyclo::to_string() const {
    if (is_rational()) return as_rational()->get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (sgn(num_[i]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff(i).get_str() << ")";
        if (i) os << "*z" << cond_.order() << "^" << i;
    }
    return os.str();
}

int64_t root_of_unity_log(const Cyclo& a) {
    return root_of_unity_log(a, a.conductor());
}

int64_t root_of_unity_log(const Cyclo& a, Conductor field) {
    const auto fail = [] { return std::domain_error("not a pure phase"); };
    if (join(field, a.conductor()) != field || a.denominator() != 1) throw fail();
    if (field.is_rational()) {
        if (a.is_one()) return 0;
        throw fail();
    }
    const Poly nums = a.numerators_in(field);
    const uint64_t step = field.order() / field.prime;
    const uint64_t phi = field.order() - step;
    std::vector<uint64_t> support;
    for (uint64_t i = 0; i < nums.size(); ++i)
        if (sgn(nums[i]) != 0) support.push_back(i);
    if (support.size() == 1 && nums[support[0]] == 1) return static_cast<int64_t>(support[0]);
    // zeta^(phi + r) = -(zeta^r + zeta^(r + step) + ... + zeta^(r + (p-2) step)).
    if (support.size() + 1 != field.prime || support[0] >= step) throw fail();
    for (size_t j = 0; j < support.size(); ++j) {
        if (support[j] != support[0] + j * step || nums[support[j]] != -1) throw fail();
    }
    return static_cast<int64_t>(phi + support[0]);
}

}  // namespace hierarchon
