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

// p-th roots in Q(zeta_{p^e}) via an inert prime l: the residue ring Z[zeta]/l is
// the finite field F_{l^phi}, where roots are found with the Adleman-Manders-Miller
// method, then lifted l-adically by Newton iteration and read back as integers.

#include <algorithm>
#include <stdexcept>

#include "hierarchon/cyclo.hpp"
#include "poly.hpp"

namespace hierarchon {

namespace {

using detail::Poly;
using Small = std::vector<uint64_t>;

bool is_prime_small(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Primes that stay inert in every Q(zeta_{p^e}): primitive roots modulo p^2.
std::vector<uint64_t> inert_primes(unsigned p, size_t count) {
    const uint64_t mod = uint64_t{p} * p;
    const uint64_t group = mod - p;
    std::vector<uint64_t> factors;
    uint64_t m = group;
    for (uint64_t f = 2; f * f <= m; ++f) {
        if (m % f) continue;
        factors.push_back(f);
        while (m % f == 0) m /= f;
    }
    if (m > 1) factors.push_back(m);
    std::vector<uint64_t> out;
    for (uint64_t l = 2; out.size() < count; ++l) {
        if (l == p || !is_prime_small(l)) continue;
        bool primitive = true;
        for (uint64_t f : factors) primitive = primitive && powmod(l, group / f, mod) != 1;
        if (primitive) out.push_back(l);
    }
    return out;
}

// Arithmetic in Z[zeta_N] / l = F_{l^phi}.
class ResidueField {
   public:
    ResidueField(Conductor c, uint64_t l) : c_(c), l_(l) {}

    Small reduce(std::span<const mpz_class> a) const {
        Small out(a.size());
        for (size_t i = 0; i < a.size(); ++i) out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), l_);
        return out;
    }

    Small one() const {
        Small out(c_.degree(), 0);
        out[0] = 1;
        return out;
    }

    Small mul(const Small& a, const Small& b) const {
        const uint64_t n = c_.order();
        Small dense(n, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                if (!b[j]) continue;
                uint64_t k = i + j;
                if (k >= n) k -= n;
                dense[k] = (dense[k] + a[i] * b[j]) % l_;
            }
        }
        const uint64_t step = n / c_.prime;
        const uint64_t phi = n - step;
        for (uint64_t e = n; e-- > phi;) {
            if (!dense[e]) continue;
            const uint64_t r = e - phi;
            for (unsigned j = 0; j + 1 < c_.prime; ++j) {
                uint64_t& t = dense[r + j * step];
                t = (t + l_ - dense[e]) % l_;
            }
        }
        dense.resize(phi);
        return dense;
    }

    Small pow(Small b, const mpz_class& e) const {
        Small r = one();
        const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (size_t i = bits; i-- > 0;) {
            r = mul(r, r);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
        }
        return r;
    }

    mpz_class size() const {
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), l_, c_.degree());
        return q;
    }

    // The k-th element in a fixed enumeration, base-l digits as coordinates.
    Small element(uint64_t k) const {
        Small out(c_.degree(), 0);
        for (size_t i = 0; i < out.size() && k; ++i, k /= l_) out[i] = k % l_;
        return out;
    }

   private:
    Conductor c_;
    uint64_t l_;
};

// Some x with x^p == a in the residue field, or nullopt when a is not a p-th power.
std::optional<Small> residue_root(const ResidueField& f, const Small& a, unsigned p) {
    const mpz_class qm1 = f.size() - 1;
    const mpz_class dp = p;
    if (f.pow(a, qm1 / dp) != f.one()) return std::nullopt;

    mpz_class t = qm1;
    unsigned s = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        t /= dp;
        ++s;
    }
    mpz_class ps;
    mpz_ui_pow_ui(ps.get_mpz_t(), p, s);

    Small gen;
    for (uint64_t k = 2;; ++k) {
        Small z = f.element(k);
        if (f.pow(z, qm1 / dp) != f.one()) {
            gen = f.pow(z, t);
            break;
        }
    }

    // Split a into its p-Sylow part and its prime-to-p part.
    mpz_class tinv;
    mpz_invert(tinv.get_mpz_t(), t.get_mpz_t(), ps.get_mpz_t());
    const mpz_class e_sylow = (t * tinv) % qm1;
    mpz_class e_rest = (qm1 + 1 - e_sylow) % qm1;
    const Small a_sylow = f.pow(a, e_sylow);
    const Small a_rest = f.pow(a, e_rest);

    Small x_rest = f.one();
    if (t != 1) {
        mpz_class pinv;
        mpz_invert(pinv.get_mpz_t(), dp.get_mpz_t(), t.get_mpz_t());
        x_rest = f.pow(a_rest, pinv);
    }

    // Discrete log of a_sylow to base gen, one base-p digit at a time.
    mpz_class top;
    mpz_ui_pow_ui(top.get_mpz_t(), p, s - 1);
    const Small gamma = f.pow(gen, top);
    mpz_class log = 0;
    mpz_class place = 1;
    for (unsigned i = 0; i < s; ++i) {
        mpz_class shift;
        mpz_ui_pow_ui(shift.get_mpz_t(), p, s - 1 - i);
        const Small h = f.pow(f.mul(a_sylow, f.pow(gen, ps - log)), shift);
        Small g = f.one();
        unsigned digit = 0;
        while (g != h) {
            g = f.mul(g, gamma);
            if (++digit == p) throw std::logic_error("discrete log digit not found");
        }
        log += place * digit;
        place *= dp;
    }
    const Small x = f.mul(x_rest, f.pow(gen, log / dp));
    if (f.pow(x, dp) != a) throw std::logic_error("residue root check failed");
    return x;
}

Poly mod_poly(Poly v, const mpz_class& m) {
    for (auto& x : v) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return v;
}

Poly mul_mod(const Poly& a, const Poly& b, Conductor c, const mpz_class& m) {
    return mod_poly(detail::multiply(a, b, c), m);
}

Poly pow_mod(const Poly& a, unsigned e, Conductor c, const mpz_class& m) {
    Poly r = a;
    for (unsigned i = 1; i < e; ++i) r = mul_mod(r, a, c, m);
    return r;
}

Poly pow_exact(const Poly& a, unsigned e, Conductor c) {
    Poly r = a;
    for (unsigned i = 1; i < e; ++i) r = detail::multiply(r, a, c);
    return r;
}

}  // namespace

std::optional<Cyclo> dth_root(const Cyclo& a, Conductor field) {
    if (field.is_rational()) throw std::invalid_argument("root extraction needs a prime-power conductor");
    if (join(field, a.conductor()) != field) throw std::invalid_argument("field does not contain value");
    if (a.is_zero()) return Cyclo();
    if (a.is_one()) return Cyclo(1);
    const unsigned p = field.prime;

    // x^p = a with a = A0 / den; the integral element X = x * den solves X^p = A0 * den^(p-1).
    const mpz_class& den = a.denominator();
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), p - 1);
    Poly target = a.numerators_in(field);
    for (auto& v : target) v *= scale;

    // Inert primes not dividing the target; each gives a necessary residue condition.
    std::vector<uint64_t> primes;
    for (uint64_t l : inert_primes(p, 24)) {
        bool divides = true;
        for (const auto& v : target) divides = divides && mpz_divisible_ui_p(v.get_mpz_t(), l);
        if (!divides) primes.push_back(l);
        if (primes.size() == 4) break;
    }
    if (primes.empty()) throw std::logic_error("no usable inert prime");

    std::optional<Small> root0;
    for (size_t i = 0; i < primes.size(); ++i) {
        const ResidueField f(field, primes[i]);
        auto r = residue_root(f, f.reduce(target), p);
        if (!r) return std::nullopt;
        if (i == 0) root0 = std::move(r);
    }

    const uint64_t l = primes[0];
    const ResidueField f(field, l);
    size_t target_bits = 0;
    for (const auto& v : target) target_bits = std::max(target_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    const size_t log_degree = mpz_sizeinbase(mpz_class(field.degree()).get_mpz_t(), 2);
    const size_t bound_bits = (target_bits + log_degree + 1) / p + log_degree + 16;
    const size_t cap_bits = 2 * bound_bits + 256;

    Poly x(root0->size());
    for (size_t i = 0; i < x.size(); ++i) x[i] = static_cast<unsigned long>((*root0)[i]);
    Small u0 = f.mul(f.pow(*root0, mpz_class(p - 1)), f.one());
    for (auto& v : u0) v = v * p % l;
    const Small y0 = f.pow(u0, f.size() - 2);
    Poly y(y0.size());
    for (size_t i = 0; i < y.size(); ++i) y[i] = static_cast<unsigned long>(y0[i]);

    mpz_class modulus = l;
    while (mpz_sizeinbase(modulus.get_mpz_t(), 2) <= cap_bits) {
        const mpz_class next = modulus * modulus;
        Poly fx = pow_mod(x, p, field, next);
        for (size_t i = 0; i < fx.size(); ++i) fx[i] -= target[i];
        const Poly step = mul_mod(mod_poly(fx, next), y, field, next);
        for (size_t i = 0; i < x.size(); ++i) x[i] -= step[i];
        x = mod_poly(x, next);
        Poly u = pow_mod(x, p - 1, field, next);
        for (auto& v : u) v *= p;
        Poly uy = mul_mod(u, y, field, next);
        for (auto& v : uy) v = -v;
        uy[0] += 2;
        y = mul_mod(y, uy, field, next);
        modulus = next;

        Poly sym = x;
        const mpz_class half = modulus / 2;
        for (auto& v : sym)
            if (v > half) v -= modulus;
        if (pow_exact(sym, p, field) == target) {
            Cyclo root = Cyclo::from_parts(field, std::move(sym), den);
            if (root.pow(p) != a) throw std::logic_error("root verification failed");
            return root;
        }
    }
    return std::nullopt;
}

}  // namespace hierarchon
