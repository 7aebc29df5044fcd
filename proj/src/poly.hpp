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

// Integer polynomial kernels shared by scalars and matrices. A "reduced" vector
// has degree() entries; a "dense" vector has order() entries indexed by the
// exponent of zeta modulo N.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "hierarchon/cyclo.hpp"

namespace hierarchon::detail {

using Poly = std::vector<mpz_class>;

/// Folds a dense vector onto the power basis using Phi_N = 0.
void reduce_dense(Conductor c, Poly& dense);

/// dense[(i + j) mod N] += a[i] * b[j] for reduced a, b.
void mul_accumulate(std::span<const mpz_class> a, std::span<const mpz_class> b, uint64_t order,
                    Poly& dense);

Poly multiply(std::span<const mpz_class> a, std::span<const mpz_class> b, Conductor c);
Poly promote(std::span<const mpz_class> a, Conductor from, Conductor to);
bool demotable(std::span<const mpz_class> a, Conductor c);
Poly demote(std::span<const mpz_class> a, Conductor c);
Poly galois(std::span<const mpz_class> a, Conductor c, uint64_t t);

/// A generator of the unit group of Z/N for odd prime powers N.
uint64_t unit_generator(Conductor c);

bool all_zero(std::span<const mpz_class> a);
uint64_t mix_hash(uint64_t h, const mpz_class& v);

}  // namespace hierarchon::detail
