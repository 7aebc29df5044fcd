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

#include "hierarchon/semiclifford.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "hierarchon/interchange.hpp"
#include "hierarchon/svn.hpp"
#include "parallel.hpp"

namespace hierarchon {

namespace {

struct Powers {
    std::vector<std::vector<ExactMatrix>> u, v;  // [qudit][exponent]
};

Powers powers_of(const ConjugateTuple& t) {
    Powers out;
    for (const auto& [u, v] : t.pairs) {
        std::vector<ExactMatrix> pu{ExactMatrix::identity(u.mat.rows())}, pv{ExactMatrix::identity(v.mat.rows())};
        for (unsigned e = 1; e < t.d; ++e) {
            pu.push_back(pu.back() * u.mat);
            pv.push_back(pv.back() * v.mat);
        }
        out.u.push_back(std::move(pu));
        out.v.push_back(std::move(pv));
    }
    return out;
}

// U_1^{p_1}..U_n^{p_n} V_1^{q_1}..V_n^{q_n}.
ExactMatrix monomial(const Powers& pw, const PhasePoint& v) {
    ExactMatrix acc = pw.u[0][0];
    for (size_t i = 0; i < v.qudits(); ++i)
        if (v.p[i]) acc = acc * pw.u[i][static_cast<size_t>(v.p[i])];
    for (size_t i = 0; i < v.qudits(); ++i)
        if (v.q[i]) acc = acc * pw.v[i][static_cast<size_t>(v.q[i])];
    return acc;
}

std::optional<SemiCliffordWitness> test_semibasis(const Powers& pw, const LagrangianSemibasis& b, unsigned d) {
    SemiCliffordWitness w{b, {}};
    for (const auto& v : b.vectors) {
        auto p = recognize_pauli(monomial(pw, v), d, true);
        if (!p) return std::nullopt;
        w.pauli_images.push_back(*p);
    }
    return w;
}

template <class Stop>
std::vector<SemiCliffordWitness> search(const ScaledUnitary& g, unsigned d, Stop stop_after_first) {
    const ConjugateTuple t = tuple_of(g, d);
    const Powers pw = powers_of(t);
    std::vector<SemiCliffordWitness> out;
    for (const auto& b : enumerate_semibases(d, static_cast<unsigned>(t.size()))) {
        if (auto w = test_semibasis(pw, b, d)) {
            out.push_back(std::move(*w));
            if (stop_after_first) break;
        }
    }
    return out;
}

}  // namespace

std::optional<SemiCliffordWitness> find_witness(const ScaledUnitary& g, unsigned d) {
    auto all = search(g, d, true);
    if (all.empty()) return std::nullopt;
    return std::move(all.front());
}

std::vector<SemiCliffordWitness> all_witnesses(const ScaledUnitary& g, unsigned d) { return search(g, d, false); }

Diagonalisation diagonalize(const ScaledUnitary& g, const SemiCliffordWitness& w, unsigned d) {
    const auto n = static_cast<unsigned>(w.semibasis.vectors.size());
    std::vector<PauliElement> source, image;
    for (const auto& v : w.semibasis.vectors) source.push_back(PauliElement{d, 0, v});
    // S Z_i S^dagger = Z^{p_i} X^{q_i}; C2 = S^dagger.
    const ScaledUnitary s = synthesize_clifford(source);
    for (unsigned i = 0; i < n; ++i) {
        const ExactMatrix target = conjugate_action(g, conjugate_action(s, pauli_z(d, n, i)));
        auto p = recognize_pauli(target, d, false);
        if (!p) throw std::invalid_argument("witness does not belong to this gate");
        image.push_back(*p);
    }
    const ScaledUnitary c1 = synthesize_clifford(image);
    Diagonalisation r{c1, s.adjoint(), canonical_rep(c1.adjoint().mat * g.mat * s.mat)};
    if (!r.diag.is_diagonal()) throw std::logic_error("diagonalisation produced a non-diagonal core");
    return r;
}

bool verify_diagonalisation(const ScaledUnitary& g, const Diagonalisation& r, unsigned d) {
    if (!r.diag.is_diagonal()) return false;
    if (canonical_rep(r.c1.mat * r.diag * r.c2.mat) != canonical_rep(g.mat)) return false;
    return membership(r.c1.mat, d, 2) && membership(r.c2.mat, d, 2);
}

uint64_t sp_order(unsigned d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("odd prime only");
    return uint64_t{d} * (uint64_t{d} * d - 1);
}

SemiCliffordTally survey_semiclifford(const LevelCatalog& catalog, unsigned jobs) {
    std::vector<char> ok(catalog.size(), 0);
    detail::parallel_for(catalog.size(), jobs, [&](size_t i) {
        const ScaledUnitary g = ScaledUnitary::from_matrix(catalog[i]);
        const auto w = find_witness(g, catalog.d());
        if (!w) return;
        ok[i] = verify_diagonalisation(g, diagonalize(g, *w, catalog.d()), catalog.d());
    });
    SemiCliffordTally t;
    t.total = catalog.size();
    for (size_t i = 0; i < ok.size(); ++i) {
        if (ok[i])
            ++t.semi_clifford;
        else
            t.failures.push_back(i);
    }
    return t;
}

nlohmann::json witness_json(const SemiCliffordWitness& w) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : w.semibasis.vectors) basis.push_back({{"p", v.p}, {"q", v.q}});
    nlohmann::json images = nlohmann::json::array();
    for (const auto& p : w.pauli_images) images.push_back(pauli_json(p));
    return {{"semibasis", basis}, {"pauli_images", images}};
}

nlohmann::json semiclifford_json(const ScaledUnitary& g, unsigned d) {
    std::ostringstream hash;
    hash << std::hex << std::setw(16) << std::setfill('0') << canonical_rep(g.mat).hash();
    nlohmann::json out{{"gate_hash", hash.str()}};
    const auto w = find_witness(g, d);
    out["semi_clifford"] = w.has_value();
    if (!w) return out;
    out["witness"] = witness_json(*w);
    const auto r = diagonalize(g, *w, d);
    out["verified"] = verify_diagonalisation(g, r, d);
    out["C1"] = gate_json(r.c1, d);
    out["C2"] = gate_json(r.c2, d);
    out["D"] = gate_json(ScaledUnitary::from_matrix(r.diag), d);
    return out;
}

}  // namespace hierarchon
