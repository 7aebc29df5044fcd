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

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hierarchon {

/// Conductor prime^exp of a cyclotomic field. exp == 0 is the rational field,
/// in which case prime is stored as 0.
struct Conductor {
    unsigned prime = 0;
    unsigned exp = 0;

    Conductor() = default;
    Conductor(unsigned prime_, unsigned exp_) : prime(exp_ == 0 ? 0 : prime_), exp(exp_) {}

    uint64_t order() const;
    size_t degree() const;
    bool is_rational() const { return exp == 0; }

    auto operator<=>(const Conductor&) const = default;
};

/// Smallest conductor whose field contains both arguments.
/// Throws std::invalid_argument when the primes differ.
Conductor join(Conductor a, Conductor b);

/// Element of Q(zeta_N), N = prime^exp, in the power basis 1, zeta, ..., zeta^(phi(N)-1).
///
/// Stored as integer numerators over one positive denominator with gcd 1, at the
/// smallest conductor that contains the value. Equal values therefore have equal
/// representations, which makes == and hash() exact.
class Cyclo {
   public:
    Cyclo();
    Cyclo(long value);  // NOLINT(google-explicit-constructor): literals read naturally.
    explicit Cyclo(const mpq_class& value);

    /// zeta_{prime^exp}^power.
    static Cyclo zeta(unsigned prime, unsigned exp, int64_t power = 1);
    static Cyclo from_coeffs(Conductor c, std::span<const mpq_class> coeffs);
    static Cyclo from_parts(Conductor c, std::vector<mpz_class> numerators, mpz_class denominator);

    const Conductor& conductor() const { return cond_; }
    std::span<const mpz_class> numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }
    mpq_class coeff(size_t i) const;
    /// Power-basis coefficients after promotion to `target` (which must contain this value).
    std::vector<mpq_class> coeffs_in(Conductor target) const;
    /// Integer numerators after promotion to `target`; the denominator is unchanged.
    std::vector<mpz_class> numerators_in(Conductor target) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return cond_.is_rational(); }
    std::optional<mpq_class> as_rational() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    /// Throws std::domain_error("zero divisor") on zero.
    Cyclo inverse() const;
    /// Complex conjugate.
    Cyclo conj() const;
    /// Automorphism zeta -> zeta^t of the value's own field; t must be prime to the conductor.
    Cyclo galois(int64_t t) const;
    Cyclo pow(int64_t e) const;

    bool operator==(const Cyclo& o) const = default;
    /// Total order: conductor, denominator, then numerators lexicographically.
    std::strong_ordering compare(const Cyclo& o) const;
    uint64_t hash() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

   private:
    Cyclo(Conductor c, std::vector<mpz_class> num, mpz_class den);
    void normalize();

    Conductor cond_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

/// Exponent t in [0, N) with a == zeta_N^t, N the order of `field` (default: a's own conductor).
/// Throws std::domain_error("not a pure phase") when no such t exists.
int64_t root_of_unity_log(const Cyclo& a);
int64_t root_of_unity_log(const Cyclo& a, Conductor field);

/// Some x in Q(zeta_N) (N the order of `field`) with x^p == a, where p = field.prime,
/// or nullopt when a has no p-th root in that field. Exact; the result is verified.
std::optional<Cyclo> dth_root(const Cyclo& a, Conductor field);

struct CycloHash {
    size_t operator()(const Cyclo& a) const { return static_cast<size_t>(a.hash()); }
};

}  // namespace hierarchon
