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

#include "hierarchon/teleport.hpp"

#include <random>
#include <stdexcept>

#include "hierarchon/phasespace.hpp"
#include "hierarchon/semiclifford.hpp"
#include "parallel.hpp"

namespace hierarchon {

bool proportional(const StateVec& a, const StateVec& b) {
    if (a.size() != b.size()) return false;
    auto nonzero = [](const StateVec& v) {
        for (const auto& x : v)
            if (!x.is_zero()) return true;
        return false;
    };
    if (!nonzero(a) || !nonzero(b)) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

StateVec apply_gate(const ExactMatrix& m, const StateVec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("dimension mismatch");
    const ExactMatrix out = m * ExactMatrix::column(v);
    StateVec r(out.rows());
    for (size_t i = 0; i < r.size(); ++i) r[i] = out.at(i, 0);
    return r;
}

namespace {

// |z1, z2> -> |z1, z2 + z1>.
ExactMatrix controlled_x(unsigned d) {
    std::vector<Cyclo> e(size_t{d} * d * d * d);
    const size_t dim = size_t{d} * d;
    for (unsigned z1 = 0; z1 < d; ++z1)
        for (unsigned z2 = 0; z2 < d; ++z2) e[(z1 + d * ((z2 + z1) % d)) * dim + (z1 + d * z2)] = 1;
    return ExactMatrix::from_entries(dim, dim, e);
}

// Wire-1 states for each outcome J of measuring wire 2.
Branches measure_wire2(const StateVec& s, unsigned d) {
    Branches out(d);
    for (unsigned j = 0; j < d; ++j) {
        StateVec b(d);
        bool any = false;
        for (unsigned z1 = 0; z1 < d; ++z1) {
            b[z1] = s[z1 + d * j];
            any = any || !b[z1].is_zero();
        }
        if (any) out[j] = std::move(b);
    }
    return out;
}

StateVec basis(unsigned d, unsigned z) {
    StateVec v(d);
    v[z] = 1;
    return v;
}

StateVec kron_state(const StateVec& wire1, const StateVec& wire2) {
    StateVec out;
    out.reserve(wire1.size() * wire2.size());
    for (const auto& b : wire2)
        for (const auto& a : wire1) out.push_back(a * b);
    return out;
}

}  // namespace

Branches x_teleport(const StateVec& psi, unsigned d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("odd prime only");
    if (psi.size() != d) throw std::invalid_argument("state must be one qudit");
    const ExactMatrix h = dft(d);
    StateVec s = kron_state(apply_gate(h, basis(d, 0)), apply_gate(h * h, psi));
    s = apply_gate(controlled_x(d), s);
    Branches out = measure_wire2(s, d);
    const ExactMatrix x = pauli_x(d, 1, 0);
    for (unsigned j = 0; j < d; ++j)
        if (out[j]) out[j] = apply_gate(x.pow(d - j), *out[j]);
    return out;
}

ExactMatrix gadget_correction(const GadgetSpec& spec, unsigned d) {
    const ExactMatrix xinv = pauli_x(d, 1, 0).pow(d - 1);
    return spec.c1.mat * spec.diag * xinv * spec.diag.adjoint() * spec.c1.adjoint().mat;
}

Branches gadget_run(const GadgetSpec& spec, const StateVec& psi, unsigned d) {
    if (!spec.diag.is_diagonal()) throw std::invalid_argument("gadget requires diagonal core");
    if (psi.size() != d) throw std::invalid_argument("state must be one qudit");
    const ExactMatrix h = dft(d);
    StateVec plus(d, Cyclo(1));
    StateVec s = kron_state(apply_gate(spec.diag, plus), apply_gate(h * h * spec.c2.mat, psi));
    s = apply_gate(controlled_x(d), s);
    Branches out = measure_wire2(s, d);
    const ExactMatrix corr = gadget_correction(spec, d);
    for (unsigned j = 0; j < d; ++j)
        if (out[j]) out[j] = apply_gate(corr.pow(j) * spec.c1.mat, *out[j]);
    return out;
}

namespace {

uint64_t next(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

StateVec random_state(unsigned d, uint64_t& rng_state) {
    const Conductor field(d, 2);
    StateVec v;
    for (unsigned z = 0; z < d; ++z) {
        std::vector<mpq_class> coeffs(field.degree());
        for (auto& c : coeffs) c = static_cast<long>(next(rng_state) % 7) - 3;
        v.push_back(Cyclo::from_coeffs(field, coeffs));
    }
    bool any = false;
    for (const auto& x : v) any = any || !x.is_zero();
    if (!any) v[0] = 1;
    return v;
}

TeleportReport verify_teleport(const LevelCatalog& level3, size_t samples, size_t states_per_gate, uint64_t seed,
                               unsigned jobs) {
    const unsigned d = level3.d();
    TeleportReport r{d, seed, samples, states_per_gate, 0, {}, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, level3.size() - 1);
    std::vector<size_t> chosen(samples);
    for (auto& c : chosen) c = pick(rng);
    std::vector<size_t> checked(samples, 0);
    std::vector<std::vector<std::array<size_t, 3>>> failures(samples);
    std::vector<char> clifford(samples, 1);
    detail::parallel_for(samples, jobs, [&](size_t s) {
        const ScaledUnitary g = ScaledUnitary::from_matrix(level3[chosen[s]]);
        const auto w = find_witness(g, d);
        if (!w) {
            failures[s].push_back({chosen[s], 0, d});
            return;
        }
        const auto diag = diagonalize(g, *w, d);
        const GadgetSpec spec{diag.c1, diag.c2, diag.diag};
        clifford[s] = membership(gadget_correction(spec, d), d, 2);
        uint64_t state = seed ^ (0x100000001b3ULL * (s + 1));
        for (size_t i = 0; i < states_per_gate; ++i) {
            const StateVec psi = random_state(d, state);
            const StateVec want = apply_gate(g.mat, psi);
            const Branches out = gadget_run(spec, psi, d);
            for (unsigned j = 0; j < d; ++j) {
                if (!out[j]) continue;
                ++checked[s];
                if (!proportional(*out[j], want)) failures[s].push_back({chosen[s], i, j});
            }
        }
    });
    for (size_t s = 0; s < samples; ++s) {
        r.branches_checked += checked[s];
        r.failures.insert(r.failures.end(), failures[s].begin(), failures[s].end());
        if (!clifford[s]) r.non_clifford_corrections.push_back(chosen[s]);
    }
    return r;
}

nlohmann::json teleport_json(const TeleportReport& r) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures) fails.push_back({{"gate", f[0]}, {"state", f[1]}, {"outcome", f[2]}});
    return {{"d", r.d},
            {"seed", r.seed},
            {"samples", r.samples},
            {"states_per_gate", r.states_per_gate},
            {"branches_checked", r.branches_checked},
            {"non_clifford_corrections", r.non_clifford_corrections},
            {"failures", fails}};
}

}  // namespace hierarchon
