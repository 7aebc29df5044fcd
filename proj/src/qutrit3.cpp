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

#include "hierarchon/qutrit3.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

#include "parallel.hpp"

namespace hierarchon {

uint32_t septuple_index(const Septuple& s, unsigned d) {
    const int digits[7] = {s.quad[0], s.quad[1], s.quad[2], s.z[0], s.z[1], s.x[0], s.x[1]};
    uint32_t idx = 0;
    for (int i = 6; i >= 0; --i) idx = idx * d + static_cast<uint32_t>(mod(digits[i], d));
    return idx;
}

Septuple septuple_at(uint32_t index, unsigned d) {
    int digits[7];
    for (int& g : digits) {
        g = static_cast<int>(index % d);
        index /= d;
    }
    return Septuple{{digits[0], digits[1], digits[2]}, {digits[3], digits[4]}, {digits[5], digits[6]}};
}

namespace {

long quad_form(const std::array<int, 3>& f, const std::array<int, 2>& z) {
    return long{f[0]} * z[0] * z[0] + long{f[1]} * z[1] * z[1] + long{f[2]} * z[0] * z[1];
}

long dot(const std::array<int, 2>& a, const std::array<int, 2>& b) { return long{a[0]} * b[0] + long{a[1]} * b[1]; }

}  // namespace

std::optional<int> commutation_check(const Septuple& u, const Septuple& v, unsigned d) {
    // The exponent of UV (VU)^dagger must not depend on z: the polar forms of both
    // quadratic parts have to agree along the other gate's shift.
    const auto& f = u.quad;
    const auto& g = v.quad;
    const long eq1 = 2L * f[0] * v.x[0] + long{f[2]} * v.x[1] - 2L * g[0] * u.x[0] - long{g[2]} * u.x[1];
    const long eq2 = long{f[2]} * v.x[0] + 2L * f[1] * v.x[1] - long{g[2]} * u.x[0] - 2L * g[1] * u.x[1];
    if (mod(eq1, d) != 0 || mod(eq2, d) != 0) return std::nullopt;
    return mod(quad_form(g, u.x) + dot(u.z, v.x) - quad_form(f, v.x) - dot(v.z, u.x), d);
}

ExactMatrix septuple_matrix(const Septuple& s, unsigned d) {
    const size_t dim = size_t{d} * d;
    std::vector<Cyclo> e(dim * dim);
    for (unsigned z1 = 0; z1 < d; ++z1)
        for (unsigned z2 = 0; z2 < d; ++z2) {
            const std::array<int, 2> w{static_cast<int>((z1 + s.x[0]) % d), static_cast<int>((z2 + s.x[1]) % d)};
            const long power = quad_form(s.quad, w) + dot(s.z, w);
            e[(w[0] + d * w[1]) * dim + (z1 + d * z2)] = omega(d, mod(power, d));
        }
    return ExactMatrix::from_entries(dim, dim, e);
}

bool is_valid_quadruple(const TupleQuadruple& t, unsigned d) {
    auto is = [&](const Septuple& a, const Septuple& b, int c) {
        const auto r = commutation_check(a, b, d);
        return r && *r == c;
    };
    return is(t.u, t.v, 1) && is(t.s, t.t, 1) && is(t.u, t.s, 0) && is(t.u, t.t, 0) && is(t.v, t.s, 0) &&
           is(t.v, t.t, 0);
}

namespace {

PhasePoint point_of(const std::array<int, 4>& x) { return PhasePoint{{x[0], x[2]}, {x[1], x[3]}}; }

std::optional<LagrangianSemibasis> kernel_search(const std::array<std::array<int, 4>, 3>& rows, unsigned d) {
    std::vector<std::array<int, 4>> kernel;
    const unsigned total = d * d * d * d;
    for (unsigned i = 1; i < total; ++i) {
        std::array<int, 4> x{};
        unsigned r = i;
        // Lexicographic with xU most significant.
        for (int j = 3; j >= 0; --j) {
            x[j] = static_cast<int>(r % d);
            r /= d;
        }
        bool in = true;
        for (const auto& row : rows) {
            long s = 0;
            for (int j = 0; j < 4; ++j) s += long{row[j]} * x[j];
            if (mod(s, d) != 0) {
                in = false;
                break;
            }
        }
        if (in) kernel.push_back(x);
    }
    auto dependent = [&](const std::array<int, 4>& a, const std::array<int, 4>& b) {
        for (unsigned lam = 1; lam < d; ++lam) {
            bool same = true;
            for (int j = 0; j < 4; ++j) same = same && mod(long{lam} * a[j] - b[j], d) == 0;
            if (same) return true;
        }
        return false;
    };
    for (size_t i = 0; i < kernel.size(); ++i)
        for (size_t j = i + 1; j < kernel.size(); ++j) {
            const PhasePoint a = point_of(kernel[i]), b = point_of(kernel[j]);
            if (symplectic_form(a, b, d) == 0 && !dependent(kernel[i], kernel[j]))
                return LagrangianSemibasis{{a, b}};
        }
    return std::nullopt;
}

std::array<std::array<int, 4>, 3> quad_rows(const TupleQuadruple& t) {
    std::array<std::array<int, 4>, 3> rows{};
    for (int i = 0; i < 3; ++i) rows[i] = {t.u.quad[i], t.v.quad[i], t.s.quad[i], t.t.quad[i]};
    return rows;
}

}  // namespace

std::optional<LagrangianSemibasis> kernel_semibasis_check(const TupleQuadruple& t, unsigned d) {
    return kernel_search(quad_rows(t), d);
}

namespace {

constexpr unsigned kSurveyD = 3;
constexpr uint32_t kSeptuples = 2187;  // 3^7
constexpr size_t kWords = (kSeptuples + 63) / 64;

using Bits = std::array<uint64_t, kWords>;

struct Tables {
    std::vector<Septuple> sept;
    std::vector<uint32_t> active;  // septuple indices taking part
    std::vector<Bits> commuting;   // c == 0
    std::vector<Bits> partners;    // c == 1
    std::vector<std::vector<uint32_t>> partner_list;

    explicit Tables(bool pauli_only)
        : sept(kSeptuples), commuting(kSeptuples), partners(kSeptuples), partner_list(kSeptuples) {
        for (uint32_t i = 0; i < kSeptuples; ++i) {
            sept[i] = septuple_at(i, kSurveyD);
            if (!pauli_only || sept[i].quad == std::array<int, 3>{}) active.push_back(i);
        }
        for (uint32_t a : active)
            for (uint32_t b : active) {
                const auto c = commutation_check(sept[a], sept[b], kSurveyD);
                if (!c) continue;
                if (*c == 0) commuting[a][b / 64] |= uint64_t{1} << (b % 64);
                if (*c == 1) {
                    partners[a][b / 64] |= uint64_t{1} << (b % 64);
                    partner_list[a].push_back(b);
                }
            }
    }
};

template <class Fn>
void for_each_bit(const Bits& b, Fn&& fn) {
    for (size_t w = 0; w < kWords; ++w) {
        uint64_t word = b[w];
        while (word) {
            fn(static_cast<uint32_t>(w * 64 + std::countr_zero(word)));
            word &= word - 1;
        }
    }
}

// Memo of the kernel check keyed by the twelve quadratic coefficients: 0 unknown, 1 pass, 2 fail.
class KernelMemo {
   public:
    KernelMemo() : cells_(531441) {}  // 3^12

    bool pass(const TupleQuadruple& t) {
        const auto rows = quad_rows(t);
        uint32_t key = 0;
        for (const auto& row : rows)
            for (int v : row) key = key * kSurveyD + static_cast<uint32_t>(v);
        uint8_t state = cells_[key].load(std::memory_order_relaxed);
        if (state == 0) {
            state = kernel_search(rows, kSurveyD) ? 1 : 2;
            cells_[key].store(state, std::memory_order_relaxed);
        }
        return state == 1;
    }

   private:
    std::vector<std::atomic<uint8_t>> cells_;
};

struct Partial {
    uint64_t total = 0, checked = 0, passed = 0, failed = 0;
    std::vector<TupleQuadruple> failures;
};

}  // namespace

uint64_t count_pairs(unsigned d, bool pauli_only) {
    if (d != kSurveyD) throw std::invalid_argument("survey supports d = 3 only");
    const Tables tables(pauli_only);
    uint64_t n = 0;
    for (const auto& l : tables.partner_list) n += l.size();
    return n;
}

SurveyReport survey(const SurveyOptions& opts) {
    if (opts.stride == 0) throw std::invalid_argument("stride must be positive");
    const Tables tables(opts.pauli_only);
    KernelMemo memo;
    std::vector<Partial> parts(tables.active.size());
    detail::parallel_for(tables.active.size(), opts.jobs, [&](size_t slot) {
        const uint32_t u = tables.active[slot];
        Partial& out = parts[slot];
        for (uint32_t v : tables.partner_list[u]) {
            Bits compat;
            for (size_t w = 0; w < kWords; ++w) compat[w] = tables.commuting[u][w] & tables.commuting[v][w];
            for_each_bit(compat, [&](uint32_t s) {
                Bits ts;
                for (size_t w = 0; w < kWords; ++w) ts[w] = tables.partners[s][w] & compat[w];
                for_each_bit(ts, [&](uint32_t t) {
                    const uint64_t local = out.total++;
                    if (local % opts.stride != 0) return;
                    ++out.checked;
                    const TupleQuadruple q{tables.sept[u], tables.sept[v], tables.sept[s], tables.sept[t]};
                    if (memo.pass(q)) {
                        ++out.passed;
                    } else {
                        ++out.failed;
                        if (out.failures.size() < opts.max_failures) out.failures.push_back(q);
                    }
                });
            });
        }
    });
    SurveyReport r;
    r.d = kSurveyD;
    r.stride = opts.stride;
    r.pauli_only = opts.pauli_only;
    for (auto& p : parts) {
        r.total += p.total;
        r.checked += p.checked;
        r.passed += p.passed;
        r.failed += p.failed;
        for (auto& f : p.failures)
            if (r.failures.size() < opts.max_failures) r.failures.push_back(f);
    }
    return r;
}

namespace {

nlohmann::json septuple_json(const Septuple& s) { return {{"quad", s.quad}, {"z", s.z}, {"x", s.x}}; }

}  // namespace

nlohmann::json survey_json(const SurveyReport& r) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"U", septuple_json(f.u)},
                         {"V", septuple_json(f.v)},
                         {"S", septuple_json(f.s)},
                         {"T", septuple_json(f.t)}});
    return {{"version", 1},
            {"d", r.d},
            {"scope", "normal form D[omega^f] Z^a X^x for U, V, S, T; no reduction to maximal abelian subgroups"},
            {"stride", r.stride},
            {"pauli_only", r.pauli_only},
            {"total", r.total},
            {"checked", r.checked},
            {"passed", r.passed},
            {"failed", r.failed},
            {"failures", fails}};
}

}  // namespace hierarchon
