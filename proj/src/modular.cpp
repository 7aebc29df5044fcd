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

#include "hierarchon/modular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hierarchon {

namespace {

using u128 = unsigned __int128;

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<uint64_t>(u128(r) * b % m);
        b = static_cast<uint64_t>(u128(b) * b % m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = static_cast<uint64_t>(u128(x) * x % n);
            composite = x != n - 1;
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

ModularImage::ModularImage(unsigned p) : prime_(p) {
    uint64_t base = 1;
    while (base <= (uint64_t{1} << 40) / p) {
        base *= p;
        ++max_exp_;
    }
    const uint64_t limit = uint64_t{1} << 62;
    for (uint64_t t = limit / base; t > 0; --t) {
        if (is_prime64(t * base + 1)) {
            mod_ = t * base + 1;
            break;
        }
    }
    const uint64_t cofactor = (mod_ - 1) / base;
    for (uint64_t x = 2;; ++x) {
        const uint64_t y = powmod(x, cofactor, mod_);
        if (powmod(y, base / p, mod_) != 1) {
            root_ = y;
            break;
        }
    }
}

const ModularImage& ModularImage::for_prime(unsigned p) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<ModularImage>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[p];
    if (!slot) slot.reset(new ModularImage(p));
    return *slot;
}

uint64_t ModularImage::pow(uint64_t b, uint64_t e) const { return powmod(b, e, mod_); }

uint64_t ModularImage::zeta(unsigned exp) const {
    if (exp > max_exp_) throw std::out_of_range("conductor exceeds modular image range");
    uint64_t r = root_;
    for (unsigned i = exp; i < max_exp_; ++i) r = powmod(r, prime_, mod_);
    return r;
}

std::optional<uint64_t> ModularImage::image(const Cyclo& a) const {
    const uint64_t den = mpz_fdiv_ui(a.denominator().get_mpz_t(), mod_);
    if (den == 0) return std::nullopt;
    const uint64_t z = a.is_rational() ? 1 : zeta(a.conductor().exp);
    uint64_t acc = 0;
    uint64_t zp = 1;
    for (const auto& v : a.numerators()) {
        acc = add(acc, mul(mpz_fdiv_ui(v.get_mpz_t(), mod_), zp));
        zp = mul(zp, z);
    }
    return mul(acc, inverse(den));
}

std::optional<std::vector<uint64_t>> ModularImage::image(const ExactMatrix& m) const {
    const uint64_t den = mpz_fdiv_ui(m.denominator().get_mpz_t(), mod_);
    if (den == 0) return std::nullopt;
    const uint64_t dinv = inverse(den);
    const uint64_t z = m.conductor().is_rational() ? 1 : zeta(m.conductor().exp);
    std::vector<uint64_t> powers(m.conductor().degree());
    powers[0] = 1;
    for (size_t i = 1; i < powers.size(); ++i) powers[i] = mul(powers[i - 1], z);
    std::vector<uint64_t> out;
    out.reserve(m.rows() * m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) {
            auto nums = m.numerators_at(r, c);
            uint64_t acc = 0;
            for (size_t i = 0; i < nums.size(); ++i) {
                if (sgn(nums[i]) == 0) continue;
                acc = add(acc, mul(mpz_fdiv_ui(nums[i].get_mpz_t(), mod_), powers[i]));
            }
            out.push_back(mul(acc, dinv));
        }
    return out;
}

ModMatrix mod_mul(const ModularImage& f, const ModMatrix& a, const ModMatrix& b) {
    ModMatrix out{a.n, std::vector<uint64_t>(a.n * a.n, 0)};
    for (size_t i = 0; i < a.n; ++i)
        for (size_t k = 0; k < a.n; ++k) {
            const uint64_t x = a.v[i * a.n + k];
            if (!x) continue;
            for (size_t j = 0; j < a.n; ++j) out.v[i * a.n + j] = f.add(out.v[i * a.n + j], f.mul(x, b.v[k * a.n + j]));
        }
    return out;
}

}  // namespace hierarchon
