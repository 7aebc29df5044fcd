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

#include "hierarchon/phasespace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hierarchon/svn.hpp"

namespace hierarchon {

namespace {

void require_odd(unsigned d) {
    if (d % 2 == 0) throw std::invalid_argument("odd prime only");
}

int half(unsigned d) { return static_cast<int>((d + 1) / 2); }

int dot(const std::vector<int>& a, const std::vector<int>& b, unsigned d) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += long{a[i]} * b[i];
    return mod(s, d);
}

size_t ipow(size_t b, unsigned e) {
    size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<int> digits(size_t index, unsigned d, unsigned n) {
    std::vector<int> out(n);
    for (unsigned i = 0; i < n; ++i, index /= d) out[i] = static_cast<int>(index % d);
    return out;
}

size_t index_of(const std::vector<int>& z, unsigned d) {
    size_t idx = 0;
    for (size_t i = z.size(); i-- > 0;) idx = idx * d + static_cast<size_t>(z[i]);
    return idx;
}

// Key ordering semibasis generators: q block first, then p block.
std::vector<int> qp_key(const PhasePoint& v) {
    std::vector<int> k = v.q;
    k.insert(k.end(), v.p.begin(), v.p.end());
    return k;
}

std::vector<int> flat(const PhasePoint& v) {
    std::vector<int> k = v.p;
    k.insert(k.end(), v.q.begin(), v.q.end());
    return k;
}

PhasePoint unflat(const std::vector<int>& k, unsigned n) {
    return PhasePoint{std::vector<int>(k.begin(), k.begin() + n), std::vector<int>(k.begin() + n, k.end())};
}

int inverse_mod(int a, unsigned d) {
    for (int x = 1; x < static_cast<int>(d); ++x)
        if (mod(long{a} * x, d) == 1) return x;
    throw std::domain_error("zero divisor");
}

size_t rank_mod(std::vector<std::vector<int>> rows, unsigned d) {
    size_t rank = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const int inv = inverse_mod(rows[rank][c], d);
        for (auto& x : rows[rank]) x = mod(long{x} * inv, d);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const int f = rows[r][c];
            for (size_t k = 0; k < cols; ++k) rows[r][k] = mod(rows[r][k] - long{f} * rows[rank][k], d);
        }
        ++rank;
    }
    return rank;
}

// All reduced row echelon matrices of rank `rank` with `cols` columns over Z_d.
void echelon_forms(unsigned d, size_t cols, size_t rank, std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<size_t> pivots(rank);
    auto choose = [&](auto&& self, size_t i, size_t start) -> void {
        if (i == rank) {
            std::vector<std::pair<size_t, size_t>> free;  // (row, col)
            for (size_t r = 0; r < rank; ++r)
                for (size_t c = pivots[r] + 1; c < cols; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
            const size_t total = ipow(d, static_cast<unsigned>(free.size()));
            for (size_t code = 0; code < total; ++code) {
                std::vector<std::vector<int>> m(rank, std::vector<int>(cols, 0));
                for (size_t r = 0; r < rank; ++r) m[r][pivots[r]] = 1;
                size_t x = code;
                for (const auto& [r, c] : free) {
                    m[r][c] = static_cast<int>(x % d);
                    x /= d;
                }
                out.push_back(std::move(m));
            }
            return;
        }
        for (size_t c = start; c + (rank - i) <= cols; ++c) {
            pivots[i] = c;
            self(self, i + 1, c + 1);
        }
    };
    choose(choose, 0, 0);
}

}  // namespace

int mod(long a, unsigned d) {
    const long m = a % static_cast<long>(d);
    return static_cast<int>(m < 0 ? m + d : m);
}

bool PhasePoint::is_zero() const {
    return std::all_of(p.begin(), p.end(), [](int x) { return x == 0; }) &&
           std::all_of(q.begin(), q.end(), [](int x) { return x == 0; });
}

int symplectic_form(const PhasePoint& u, const PhasePoint& v, unsigned d) {
    if (u.qudits() != v.qudits()) throw std::invalid_argument("qudit count mismatch");
    return mod(long{dot(u.p, v.q, d)} - dot(v.p, u.q, d), d);
}

PauliElement weyl(unsigned d, const PhasePoint& v) {
    require_odd(d);
    PauliElement out{d, 0, v};
    for (auto& x : out.point.p) x = mod(x, d);
    for (auto& x : out.point.q) x = mod(x, d);
    out.c = mod(-long{half(d)} * dot(out.point.p, out.point.q, d), d);
    return out;
}

PauliElement weyl_mul(const PauliElement& a, const PauliElement& b) {
    require_odd(a.d);
    if (a.d != b.d || a.point.qudits() != b.point.qudits()) throw std::invalid_argument("mismatched Paulis");
    const unsigned d = a.d;
    // X^q Z^p = omega^{-p.q} Z^p X^q.
    PauliElement out{d, mod(long{a.c} + b.c - dot(a.point.q, b.point.p, d), d), a.point};
    for (size_t i = 0; i < out.point.qudits(); ++i) {
        out.point.p[i] = mod(a.point.p[i] + b.point.p[i], d);
        out.point.q[i] = mod(a.point.q[i] + b.point.q[i], d);
    }
    return out;
}

Cyclo omega(unsigned d, long power) { return Cyclo::zeta(d, 1, power); }

ExactMatrix pauli_z(unsigned d, unsigned n, unsigned qudit) {
    PauliElement p{d, 0, PhasePoint{std::vector<int>(n, 0), std::vector<int>(n, 0)}};
    p.point.p.at(qudit) = 1;
    return to_matrix(p);
}

ExactMatrix pauli_x(unsigned d, unsigned n, unsigned qudit) {
    PauliElement p{d, 0, PhasePoint{std::vector<int>(n, 0), std::vector<int>(n, 0)}};
    p.point.q.at(qudit) = 1;
    return to_matrix(p);
}

ExactMatrix dft(unsigned d) {
    std::vector<Cyclo> e(d * d);
    for (unsigned z = 0; z < d; ++z)
        for (unsigned y = 0; y < d; ++y) e[z * d + y] = omega(d, long{z} * y);
    return ExactMatrix::from_entries(d, d, e);
}

ExactMatrix to_matrix(const PauliElement& pe) {
    const unsigned d = pe.d;
    const auto n = static_cast<unsigned>(pe.point.qudits());
    const size_t dim = ipow(d, n);
    std::vector<Cyclo> phases(d);
    for (unsigned t = 0; t < d; ++t) phases[t] = omega(d, t);
    std::vector<Cyclo> e(dim * dim);
    for (size_t z = 0; z < dim; ++z) {
        auto zz = digits(z, d, n);
        for (unsigned i = 0; i < n; ++i) zz[i] = mod(zz[i] + pe.point.q[i], d);
        const int phase = mod(long{pe.c} + dot(pe.point.p, zz, d), d);
        e[index_of(zz, d) * dim + z] = phases[static_cast<size_t>(phase)];
    }
    return ExactMatrix::from_entries(dim, dim, e);
}

std::optional<PauliElement> recognize_pauli(const ExactMatrix& m, unsigned d, bool up_to_phase) {
    if (!m.is_square()) return std::nullopt;
    unsigned n = 0;
    try {
        n = qudit_count(m.rows(), d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    const size_t dim = m.rows();
    // Column 0 fixes the shift q.
    size_t row0 = dim;
    for (size_t r = 0; r < dim; ++r) {
        if (m.is_zero_at(r, 0)) continue;
        if (row0 != dim) return std::nullopt;
        row0 = r;
    }
    if (row0 == dim) return std::nullopt;
    const auto q = digits(row0, d, n);
    const Cyclo v0 = m.at(row0, 0);

    std::vector<Cyclo> phases(d);
    for (unsigned t = 0; t < d; ++t) phases[t] = v0 * omega(d, t);
    std::vector<int> p(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<int> z(n, 0);
        z[i] = 1;
        auto zq = z;
        for (unsigned j = 0; j < n; ++j) zq[j] = mod(zq[j] + q[j], d);
        const Cyclo v = m.at(index_of(zq, d), index_of(z, d));
        auto it = std::find(phases.begin(), phases.end(), v);
        if (it == phases.end()) return std::nullopt;
        p[i] = static_cast<int>(it - phases.begin());
    }
    for (size_t z = 0; z < dim; ++z) {
        auto zq = digits(z, d, n);
        const auto zz = zq;
        for (unsigned j = 0; j < n; ++j) zq[j] = mod(zq[j] + q[j], d);
        const size_t target = index_of(zq, d);
        for (size_t r = 0; r < dim; ++r) {
            if (r == target) {
                if (m.at(r, z) != phases[static_cast<size_t>(dot(p, zz, d))]) return std::nullopt;
            } else if (!m.is_zero_at(r, z)) {
                return std::nullopt;
            }
        }
    }
    PauliElement out{d, 0, PhasePoint{p, q}};
    if (up_to_phase) return out;
    // v0 = omega^{c + p.q}.
    for (unsigned t = 0; t < d; ++t) {
        if (v0 == omega(d, t)) {
            out.c = mod(long{t} - dot(p, q, d), d);
            return out;
        }
    }
    return std::nullopt;
}

bool is_semibasis(const LagrangianSemibasis& b, unsigned d) {
    std::vector<std::vector<int>> rows;
    for (const auto& v : b.vectors) rows.push_back(flat(v));
    if (rows.empty() || rank_mod(rows, d) != rows.size()) return false;
    for (const auto& u : b.vectors)
        for (const auto& v : b.vectors)
            if (symplectic_form(u, v, d) != 0) return false;
    return true;
}

std::vector<LagrangianSemibasis> enumerate_semibases(unsigned d, unsigned n) {
    require_odd(d);
    std::vector<std::vector<std::vector<int>>> forms;
    echelon_forms(d, 2 * n, n, forms);
    std::vector<std::pair<std::vector<std::vector<int>>, LagrangianSemibasis>> keyed;
    for (const auto& m : forms) {
        LagrangianSemibasis b;
        for (const auto& row : m) b.vectors.push_back(unflat(row, n));
        bool isotropic = true;
        for (size_t i = 0; i < n && isotropic; ++i)
            for (size_t j = i + 1; j < n && isotropic; ++j)
                isotropic = symplectic_form(b.vectors[i], b.vectors[j], d) == 0;
        if (!isotropic) continue;
        std::sort(b.vectors.begin(), b.vectors.end(),
                  [](const PhasePoint& x, const PhasePoint& y) { return qp_key(x) < qp_key(y); });
        std::vector<std::vector<int>> key;
        for (const auto& v : b.vectors) key.push_back(qp_key(v));
        keyed.emplace_back(std::move(key), std::move(b));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<LagrangianSemibasis> out;
    out.reserve(keyed.size());
    for (auto& [k, b] : keyed) out.push_back(std::move(b));
    return out;
}

std::vector<PhasePoint> extend_to_symplectic_basis(const LagrangianSemibasis& b, unsigned d) {
    if (!is_semibasis(b, d)) throw std::invalid_argument("not a Lagrangian semibasis");
    const auto n = static_cast<unsigned>(b.vectors.size());
    if (b.vectors[0].qudits() != n) throw std::invalid_argument("semibasis size must equal qudit count");
    const size_t total = ipow(d, 2 * n);
    std::vector<PhasePoint> fs;
    for (unsigned i = 0; i < n; ++i) {
        bool found = false;
        // Lexicographic on (p_1..p_n, q_1..q_n), first component most significant.
        for (size_t code = 0; code < total && !found; ++code) {
            std::vector<int> k(2 * n);
            size_t x = code;
            for (size_t j = 2 * n; j-- > 0; x /= d) k[j] = static_cast<int>(x % d);
            const PhasePoint f = unflat(k, n);
            bool ok = true;
            for (unsigned j = 0; j < n && ok; ++j) ok = symplectic_form(b.vectors[j], f, d) == (i == j ? 1 : 0);
            for (const auto& g : fs) ok = ok && symplectic_form(g, f, d) == 0;
            if (ok) {
                fs.push_back(f);
                found = true;
            }
        }
        if (!found) throw std::logic_error("symplectic completion failed");
    }
    std::vector<PhasePoint> out = b.vectors;
    out.insert(out.end(), fs.begin(), fs.end());
    return out;
}

ScaledUnitary synthesize_clifford(std::span<const PauliElement> targets) {
    if (targets.empty()) throw std::invalid_argument("no targets");
    const unsigned d = targets[0].d;
    const auto n = static_cast<unsigned>(targets.size());
    LagrangianSemibasis b;
    for (const auto& t : targets) {
        if (t.d != d || t.point.qudits() != n) throw std::invalid_argument("targets must act on all n qudits");
        b.vectors.push_back(t.point);
    }
    if (!is_semibasis(b, d)) throw std::invalid_argument("targets must be independent and commuting");
    const auto basis = extend_to_symplectic_basis(b, d);

    ConjugateTuple tuple{d, {}};
    for (unsigned i = 0; i < n; ++i) {
        tuple.pairs.emplace_back(ScaledUnitary::unitary(to_matrix(weyl(d, basis[i]))),
                                 ScaledUnitary::unitary(to_matrix(weyl(d, basis[n + i]))));
    }
    const ScaledUnitary c0 = reconstruct(tuple);
    // c0 Z_i c0^dagger = W(e_i); target_i = omega^{delta_i} W(e_i); X^{-delta} supplies the phase.
    PauliElement shift{d, 0, PhasePoint{std::vector<int>(n, 0), std::vector<int>(n, 0)}};
    for (unsigned i = 0; i < n; ++i) {
        const auto& t = targets[i];
        const int delta = mod(long{t.c} + long{half(d)} * dot(t.point.p, t.point.q, d), d);
        shift.point.q[i] = mod(-delta, d);
    }
    return ScaledUnitary{c0.mat * to_matrix(shift), c0.scale2};
}

}  // namespace hierarchon
