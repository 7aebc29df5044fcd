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

#include <cstdint>
#include <optional>
#include <vector>

#include "hierarchon/cyclo.hpp"
#include "hierarchon/matrix.hpp"

namespace hierarchon {

/// Ring homomorphism from Q(zeta_{p^e}) (denominators prime to P) onto F_P for a
/// prime P = 1 mod p^E, sending zeta_{p^e} to a fixed primitive p^e-th root.
///
/// Images only ever refute: distinct images prove distinct values, equal images
/// prove nothing and callers confirm exactly.
class ModularImage {
   public:
    static const ModularImage& for_prime(unsigned p);

    uint64_t modulus() const { return mod_; }
    unsigned max_exp() const { return max_exp_; }
    uint64_t zeta(unsigned exp) const;

    std::optional<uint64_t> image(const Cyclo& a) const;
    /// Entry images in row-major order.
    std::optional<std::vector<uint64_t>> image(const ExactMatrix& m) const;

    uint64_t add(uint64_t a, uint64_t b) const { return a + b >= mod_ ? a + b - mod_ : a + b; }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + mod_ - b; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % mod_);
    }
    uint64_t pow(uint64_t b, uint64_t e) const;
    uint64_t inverse(uint64_t a) const { return pow(a, mod_ - 2); }

   private:
    explicit ModularImage(unsigned p);

    unsigned prime_;
    unsigned max_exp_ = 0;
    uint64_t mod_ = 0;
    uint64_t root_ = 0;
};

/// Square matrix image over F_P.
struct ModMatrix {
    size_t n = 0;
    std::vector<uint64_t> v;

    uint64_t at(size_t r, size_t c) const { return v[r * n + c]; }
};

ModMatrix mod_mul(const ModularImage& f, const ModMatrix& a, const ModMatrix& b);

}  // namespace hierarchon
