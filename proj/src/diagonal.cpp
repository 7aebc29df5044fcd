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

#include "hierarchon/diagonal.hpp"

#include <algorithm>
#include <stdexcept>

#include "hierarchon/interchange.hpp"
#include "hierarchon/phasespace.hpp"

namespace hierarchon {

PrecisionDegree precision_degree(unsigned k, unsigned d) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (d < 3) throw std::invalid_argument("odd prime only");
    const unsigned m = (k - 1) / (d - 1) + 1;
    return PrecisionDegree{k, m, k - (m - 1) * (d - 1)};
}

uint64_t RankKPoly::modulus() const {
    uint64_t v = 1;
    for (unsigned i = 0; i < m; ++i) v *= d;
    return v;
}

uint64_t RankKPoly::eval(unsigned z) const {
    const uint64_t mod = modulus();
    uint64_t acc = 0;
    uint64_t zp = 1;
    for (uint64_t c : coeffs) {
        zp = zp * z % mod;
        acc = (acc + c % mod * zp) % mod;
    }
    return acc;
}

bool RankKPoly::has_rank(unsigned k) const {
    const auto pd = precision_degree(k, d);
    if (pd.m != m) return false;
    for (size_t j = pd.a; j < coeffs.size(); ++j)
        if (coeffs[j] % d != 0) return false;
    return true;
}

std::vector<RankKPoly> rank_k_polys(unsigned d, unsigned k) {
    const auto pd = precision_degree(k, d);
    RankKPoly base{d, pd.m, std::vector<uint64_t>(d - 1, 0)};
    const uint64_t mod = base.modulus();
    // Coefficient j (degree j + 1) ranges over Z_{d^m}, or over d Z_{d^m} above degree a.
    std::vector<uint64_t> range(d - 1), step(d - 1);
    for (unsigned j = 0; j + 1 < d; ++j) {
        step[j] = j < pd.a ? 1 : d;
        range[j] = mod / step[j];
    }
    std::vector<RankKPoly> out;
    std::vector<uint64_t> digit(d - 1, 0);
    for (;;) {
        RankKPoly p = base;
        for (unsigned j = 0; j + 1 < d; ++j) p.coeffs[j] = digit[j] * step[j];
        out.push_back(std::move(p));
        unsigned j = 0;
        while (j + 1 < d && ++digit[j] == range[j]) digit[j++] = 0;
        if (j + 1 == d) break;
    }
    return out;
}

ExactMatrix diagonal_gate(const RankKPoly& phi) {
    std::vector<Cyclo> e;
    for (unsigned z = 0; z < phi.d; ++z) e.push_back(Cyclo::zeta(phi.d, phi.m, static_cast<int64_t>(phi.eval(z))));
    return ExactMatrix::diagonal(e);
}

std::vector<ExactMatrix> gen_delta_k(unsigned d, unsigned k) {
    std::vector<ExactMatrix> out;
    for (const auto& p : rank_k_polys(d, k)) out.push_back(diagonal_gate(p));
    return out;
}

ExactMatrix twist(const RankKPoly& phi, unsigned q) {
    std::vector<Cyclo> e;
    const auto mod = static_cast<int64_t>(phi.modulus());
    for (unsigned z = 0; z < phi.d; ++z) {
        const unsigned shifted = (z + phi.d - q % phi.d) % phi.d;
        const int64_t ex = static_cast<int64_t>(phi.eval(z)) - static_cast<int64_t>(phi.eval(shifted));
        e.push_back(Cyclo::zeta(phi.d, phi.m, ((ex % mod) + mod) % mod));
    }
    return ExactMatrix::diagonal(e);
}

DxdStep dxd_step(const ExactMatrix& diag, unsigned d) {
    if (!diag.is_square() || !diag.is_diagonal()) throw std::invalid_argument("input must be diagonal");
    const ExactMatrix x = pauli_x(d, qudit_count(diag.rows(), d), 0);
    const ExactMatrix prod = diag * x * diag.adjoint() * x.adjoint();
    DxdStep out{canonical_rep(prod), {}};
    if (auto corr = order_d_corrections(out.lower * x, d))
        for (auto& g : *corr) out.phases.push_back(std::move(g.phase));
    return out;
}

bool CgkReport::pass() const {
    size_t want = 1;
    for (unsigned i = 0; i < k; ++i) want *= d;
    return missing.empty() && extra.empty() && delta_count == want && diagonal_in_catalog == want;
}

CgkReport verify_cgk(unsigned d, unsigned k, const LevelCatalog& catalog) {
    if (catalog.d() != d || catalog.n() != 1 || catalog.k() != k)
        throw std::invalid_argument("catalog does not match (d, 1, k)");
    CgkReport r{d, k, 0, 0, {}, {}};
    auto delta = gen_delta_k(d, k);
    r.delta_count = delta.size();
    for (const auto& g : delta)
        if (!catalog.contains(canonical_rep(g))) r.missing.push_back(g);
    std::sort(delta.begin(), delta.end(), [](const ExactMatrix& a, const ExactMatrix& b) { return a.compare(b) < 0; });
    for (const auto& g : catalog.gates()) {
        if (!g.is_diagonal()) continue;
        ++r.diagonal_in_catalog;
        const bool known = std::binary_search(delta.begin(), delta.end(), g,
                                              [](const ExactMatrix& a, const ExactMatrix& b) { return a.compare(b) < 0; });
        if (!known) r.extra.push_back(g);
    }
    return r;
}

nlohmann::json cgk_json(const CgkReport& r) {
    auto list = [&](const std::vector<ExactMatrix>& v) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& g : v) {
            nlohmann::json diag = nlohmann::json::array();
            const Conductor field = document_conductor(g, r.d);
            for (size_t i = 0; i < g.rows(); ++i) diag.push_back(cyclo_json(g.at(i, i), field));
            out.push_back({{"conductor", field.order()}, {"diagonal", diag}});
        }
        return out;
    };
    return {{"d", r.d},
            {"k", r.k},
            {"delta_count", r.delta_count},
            {"diagonal_in_catalog", r.diagonal_in_catalog},
            {"missing", list(r.missing)},
            {"extra", list(r.extra)},
            {"pass", r.pass()}};
}

}  // namespace hierarchon
