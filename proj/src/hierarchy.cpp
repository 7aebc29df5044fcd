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

#include "hierarchon/hierarchy.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "hierarchon/modular.hpp"
#include "hierarchon/phasespace.hpp"
#include "parallel.hpp"

namespace hierarchon {

std::optional<std::vector<PhasedGate>> order_d_corrections(const ExactMatrix& m, unsigned d) {
    if (!m.is_square() || m.is_zero()) return std::nullopt;
    const auto lambda = m.pow(d).scalar_value();
    if (!lambda || lambda->is_zero()) return std::nullopt;
    const Cyclo target = lambda->inverse();
    const unsigned base = std::max(1u, join(m.conductor(), target.conductor()).exp);
    for (unsigned e : {base, base + 1}) {
        auto root = dth_root(target, Conductor(d, e));
        if (!root) continue;
        std::vector<PhasedGate> out;
        out.reserve(d);
        for (unsigned a = 0; a < d; ++a) {
            const Cyclo c = *root * omega(d, a);
            out.push_back(PhasedGate{m.scaled(c), c});
        }
        return out;
    }
    return std::nullopt;
}

LevelCatalog::LevelCatalog(unsigned d, unsigned n, unsigned k, std::vector<ExactMatrix> gates)
    : d_(d), n_(n), k_(k), gates_(std::move(gates)) {
    std::sort(gates_.begin(), gates_.end(), [](const ExactMatrix& a, const ExactMatrix& b) { return a.compare(b) < 0; });
    gates_.erase(std::unique(gates_.begin(), gates_.end()), gates_.end());
    index_.reserve(gates_.size());
    for (size_t i = 0; i < gates_.size(); ++i) index_.emplace_back(gates_[i].hash(), static_cast<uint32_t>(i));
    std::sort(index_.begin(), index_.end());
}

bool LevelCatalog::contains(const ExactMatrix& canonical) const {
    const uint64_t h = canonical.hash();
    auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<uint64_t, uint32_t>{h, 0});
    for (; it != index_.end() && it->first == h; ++it)
        if (gates_[it->second] == canonical) return true;
    return false;
}

Conductor LevelCatalog::conductor() const {
    Conductor c(d_, 1);
    for (const auto& g : gates_) c = join(c, g.conductor());
    return c;
}

bool membership(const ExactMatrix& g, unsigned d, unsigned k, std::span<const LevelCatalog* const> catalogs) {
    if (k == 0) throw std::invalid_argument("hierarchy levels start at k = 1");
    const unsigned n = qudit_count(g.rows(), d);
    for (const auto* c : catalogs)
        if (c && c->d() == d && c->n() == n && c->k() == k) return c->contains_gate(g);
    if (k == 1) return recognize_pauli(canonical_rep(g), d, true).has_value();
    ScaledUnitary su;
    try {
        su = ScaledUnitary::from_matrix(g);
    } catch (const std::invalid_argument&) {
        return false;
    }
    for (unsigned i = 0; i < n; ++i) {
        if (!membership(conjugate_action(su, pauli_z(d, n, i)), d, k - 1, catalogs)) return false;
        if (!membership(conjugate_action(su, pauli_x(d, n, i)), d, k - 1, catalogs)) return false;
    }
    return true;
}

namespace {

// U_1^{p_1}..U_n^{p_n} V_1^{q_1}..V_n^{q_n} for every (p, q), p_1 least significant.
std::vector<ExactMatrix> monomials(const std::vector<const ExactMatrix*>& us, const std::vector<const ExactMatrix*>& vs,
                                   unsigned d) {
    const size_t n = us.size();
    std::vector<ExactMatrix> gens;
    for (auto* u : us) gens.push_back(*u);
    for (auto* v : vs) gens.push_back(*v);
    // Build progressively: products over the first t generators.
    std::vector<ExactMatrix> acc{ExactMatrix::identity(us[0]->rows())};
    for (size_t t = 0; t < 2 * n; ++t) {
        std::vector<ExactMatrix> powers{ExactMatrix::identity(gens[t].rows())};
        for (unsigned e = 1; e < d; ++e) powers.push_back(powers.back() * gens[t]);
        std::vector<ExactMatrix> next;
        next.reserve(acc.size() * d);
        for (unsigned e = 0; e < d; ++e)
            for (const auto& a : acc) next.push_back(e == 0 ? a : a * powers[e]);
        acc = std::move(next);
    }
    return acc;
}

bool closed_under(const std::vector<const ExactMatrix*>& us, const std::vector<const ExactMatrix*>& vs, unsigned d,
                  const LevelCatalog& lower) {
    for (const auto& m : monomials(us, vs, d))
        if (!lower.contains_gate(m)) return false;
    return true;
}

uint64_t splitmix(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Candidate {
    const ExactMatrix* canon = nullptr;
    ExactMatrix phased;  // phased^d == I
    std::optional<std::vector<uint64_t>> image;
    std::vector<uint64_t> probe;  // canon * x mod P
};

// Refutes A B == s B A using the random probe vector; true means "possibly equal".
class RelationFilter {
   public:
    RelationFilter(const ModularImage& f, size_t dim) : f_(f), dim_(dim) {
        uint64_t seed = 0x5eed0001;
        for (size_t i = 0; i < dim; ++i) x_.push_back(splitmix(seed) % f.modulus());
    }

    void prepare(Candidate& c) const {
        c.image = f_.image(*c.canon);
        if (!c.image) return;
        c.probe.assign(dim_, 0);
        for (size_t r = 0; r < dim_; ++r)
            for (size_t k = 0; k < dim_; ++k) c.probe[r] = f_.add(c.probe[r], f_.mul((*c.image)[r * dim_ + k], x_[k]));
    }

    bool maybe(const Candidate& a, const Candidate& b, uint64_t scalar) const {
        if (!a.image || !b.image) return true;
        const auto& ia = *a.image;
        const auto& ib = *b.image;
        for (size_t r = 0; r < dim_; ++r) {
            uint64_t lhs = 0, rhs = 0;
            for (size_t k = 0; k < dim_; ++k) {
                lhs = f_.add(lhs, f_.mul(ia[r * dim_ + k], b.probe[k]));
                rhs = f_.add(rhs, f_.mul(ib[r * dim_ + k], a.probe[k]));
            }
            if (lhs != f_.mul(scalar, rhs)) return false;
        }
        return true;
    }

   private:
    const ModularImage& f_;
    size_t dim_;
    std::vector<uint64_t> x_;
};

bool commute_exact(const ExactMatrix& a, const ExactMatrix& b) { return a * b == b * a; }

}  // namespace

bool k_closure_check(const ConjugateTuple& t, const LevelCatalog& lower) {
    std::vector<const ExactMatrix*> us, vs;
    for (const auto& [u, v] : t.pairs) {
        us.push_back(&u.mat);
        vs.push_back(&v.mat);
    }
    return closed_under(us, vs, t.d, lower);
}

namespace {

std::vector<ExactMatrix> phaseless_paulis(unsigned d, unsigned n) {
    size_t paulis = 1;
    for (unsigned i = 0; i < 2 * n; ++i) paulis *= d;
    std::vector<ExactMatrix> out;
    out.reserve(paulis);
    for (size_t code = 0; code < paulis; ++code) {
        PauliElement p{d, 0, PhasePoint{std::vector<int>(n), std::vector<int>(n)}};
        size_t x = code;
        for (unsigned i = 0; i < n; ++i, x /= d) p.point.p[i] = static_cast<int>(x % d);
        for (unsigned i = 0; i < n; ++i, x /= d) p.point.q[i] = static_cast<int>(x % d);
        out.push_back(to_matrix(p));
    }
    return out;
}

void check_limit(uint64_t projected, const EnumerateOptions& opts) {
    if (projected > opts.size_limit) throw SizeGuardError("projected level size exceeds the configured limit");
}

// Steps shared by exact enumeration and counting: candidates, pairs, tuples, closure and one
// reconstruction per closed tuple, handed to `sink(tuple_index, gate)` from worker threads.
template <class Sink>
void closed_tuples(unsigned d, unsigned n, const LevelCatalog& lower, const EnumerateOptions& opts, uint64_t limit,
                   LevelStats& st, Sink&& sink) {
    const uint64_t paulis = phaseless_paulis(d, n).size();
    std::vector<std::optional<Candidate>> slots(lower.size());
    const auto& field = ModularImage::for_prime(d);
    const size_t dim = lower[0].rows();
    RelationFilter filter(field, dim);
    detail::parallel_for(lower.size(), opts.jobs, [&](size_t i) {
        const ExactMatrix& m = lower[i];
        auto corr = order_d_corrections(m, d);
        if (!corr) return;
        Candidate c;
        c.canon = &m;
        c.phased = std::move((*corr)[0].mat);
        filter.prepare(c);
        slots[i] = std::move(c);
    });
    std::vector<Candidate> cands;
    for (auto& s : slots)
        if (s) cands.push_back(std::move(*s));
    slots.clear();
    st.candidates = cands.size();

    // U V = omega V U is a phase-free relation on canonical representatives.
    const uint64_t w = field.zeta(1);
    const Cyclo omega1 = omega(d);
    std::vector<std::vector<uint32_t>> partners(cands.size());
    detail::parallel_for(cands.size(), opts.jobs, [&](size_t i) {
        for (size_t j = 0; j < cands.size(); ++j) {
            if (!filter.maybe(cands[i], cands[j], w)) continue;
            if (*cands[i].canon * *cands[j].canon == (*cands[j].canon * *cands[i].canon).scaled(omega1))
                partners[i].push_back(static_cast<uint32_t>(j));
        }
    });
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (size_t i = 0; i < cands.size(); ++i)
        for (uint32_t j : partners[i]) pairs.emplace_back(static_cast<uint32_t>(i), j);
    partners.clear();
    st.pairs = pairs.size();

    std::vector<std::vector<uint32_t>> tuples;
    if (n == 1) {
        check_limit(pairs.size() * paulis, {opts.jobs, limit});
        for (uint32_t i = 0; i < pairs.size(); ++i) tuples.push_back({i});
    } else {
        // Two pairs are compatible with probability about d^{-2n}, so the level is projected at
        // d^{2n} pairs^n / d^{2n(n-1)} gates.
        long double projected = paulis;
        for (unsigned i = 0; i < n; ++i) projected *= pairs.size();
        for (unsigned i = 0; i + 1 < n; ++i) projected /= static_cast<long double>(paulis);
        check_limit(projected > 1e18L ? UINT64_MAX : static_cast<uint64_t>(projected), {opts.jobs, limit});
        std::vector<std::vector<uint32_t>> compat(pairs.size());
        detail::parallel_for(pairs.size(), opts.jobs, [&](size_t a) {
            const size_t xs[2] = {pairs[a].first, pairs[a].second};
            for (size_t b = 0; b < pairs.size(); ++b) {
                if (a == b) continue;
                const size_t ys[2] = {pairs[b].first, pairs[b].second};
                bool ok = true;
                for (size_t x : xs)
                    for (size_t y : ys) ok = ok && filter.maybe(cands[x], cands[y], 1);
                if (!ok) continue;
                for (size_t x : xs)
                    for (size_t y : ys) ok = ok && commute_exact(*cands[x].canon, *cands[y].canon);
                if (ok) compat[a].push_back(static_cast<uint32_t>(b));
            }
        });
        std::vector<uint32_t> cur;
        auto extend = [&](auto&& self) -> void {
            if (cur.size() == n) {
                tuples.push_back(cur);
                check_limit(tuples.size() * paulis, {opts.jobs, limit});
                return;
            }
            for (uint32_t b : compat[cur.back()]) {
                bool ok = true;
                for (size_t t = 0; t + 1 < cur.size() && ok; ++t)
                    ok = std::binary_search(compat[cur[t]].begin(), compat[cur[t]].end(), b);
                if (!ok) continue;
                cur.push_back(b);
                self(self);
                cur.pop_back();
            }
        };
        for (uint32_t a = 0; a < pairs.size(); ++a) {
            cur = {a};
            extend(extend);
        }
    }
    st.tuples = tuples.size();

    std::vector<char> closed(tuples.size(), 0);
    detail::parallel_for(tuples.size(), opts.jobs, [&](size_t t) {
        std::vector<const ExactMatrix*> us, vs;
        ConjugateTuple tuple{d, {}};
        for (uint32_t pi : tuples[t]) {
            const auto& [u, v] = pairs[pi];
            us.push_back(cands[u].canon);
            vs.push_back(cands[v].canon);
            tuple.pairs.emplace_back(ScaledUnitary::unitary(cands[u].phased), ScaledUnitary::unitary(cands[v].phased));
        }
        if (!closed_under(us, vs, d, lower)) return;
        closed[t] = 1;
        sink(t, reconstruct(tuple));
    });
    for (size_t t = 0; t < tuples.size(); ++t) {
        if (closed[t]) {
            ++st.closed_tuples;
        } else if (st.non_closed.size() < 16) {
            std::vector<ExactMatrix> witness;
            for (uint32_t pi : tuples[t]) {
                witness.push_back(*cands[pairs[pi].first].canon);
                witness.push_back(*cands[pairs[pi].second].canon);
            }
            st.non_closed.push_back(std::move(witness));
        }
    }
}

void check_prerequisite(unsigned d, unsigned n, unsigned k, const LevelCatalog* lower) {
    if (k == 0) throw std::invalid_argument("hierarchy levels start at k = 1");
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (k > 1 && (!lower || lower->d() != d || lower->n() != n || lower->k() != k - 1 || lower->size() == 0))
        throw std::invalid_argument("missing prerequisite catalog for level k-1");
}

}  // namespace

LevelCatalog enumerate_level(unsigned d, unsigned n, unsigned k, const LevelCatalog* lower, const EnumerateOptions& opts,
                             LevelStats* stats) {
    check_prerequisite(d, n, k, lower);
    LevelStats local;
    LevelStats& st = stats ? *stats : local;
    st = LevelStats{};
    const auto paulis = phaseless_paulis(d, n);
    if (k == 1) {
        check_limit(paulis.size(), opts);
        std::vector<ExactMatrix> gates;
        for (const auto& p : paulis) gates.push_back(canonical_rep(p));
        return LevelCatalog(d, n, 1, std::move(gates));
    }
    std::vector<std::vector<ExactMatrix>> out;
    std::mutex mu;
    closed_tuples(d, n, *lower, opts, opts.size_limit, st, [&](size_t t, const ScaledUnitary& g) {
        std::vector<ExactMatrix> expanded;
        expanded.reserve(paulis.size());
        for (const auto& p : paulis) expanded.push_back(canonical_rep(g.mat * p));
        std::lock_guard lock(mu);
        if (out.size() <= t) out.resize(t + 1);
        out[t] = std::move(expanded);
    });
    std::vector<ExactMatrix> gates;
    for (auto& slot : out)
        for (auto& g : slot) gates.push_back(std::move(g));
    return LevelCatalog(d, n, k, std::move(gates));
}

LevelCount count_level(unsigned d, unsigned n, unsigned k, const LevelCatalog* lower, const EnumerateOptions& opts) {
    check_prerequisite(d, n, k, lower);
    LevelCount result;
    const auto paulis = phaseless_paulis(d, n);
    if (k == 1) {
        result.upper_bound = result.distinct = paulis.size();
        return result;
    }
    const auto& field = ModularImage::for_prime(d);
    std::vector<std::vector<uint64_t>> pauli_images;
    for (const auto& p : paulis) pauli_images.push_back(*field.image(p));
    const size_t dim = paulis[0].rows();
    std::vector<std::vector<uint64_t>> fingerprints;
    std::mutex mu;
    // Projective fingerprints: equal gates up to phase always share one, so distinct
    // fingerprints bound the number of distinct gates from below.
    closed_tuples(d, n, *lower, opts, std::numeric_limits<uint64_t>::max(), result.stats,
                  [&](size_t t, const ScaledUnitary& g) {
                      const auto img = field.image(g.mat);
                      if (!img) throw std::runtime_error("modular image undefined; rerun exact enumeration");
                      const ModMatrix gm{dim, *img};
                      std::vector<uint64_t> prints;
                      for (const auto& pi : pauli_images) {
                          const ModMatrix prod = mod_mul(field, gm, ModMatrix{dim, pi});
                          size_t first = 0;
                          while (prod.v[first] == 0) ++first;
                          const uint64_t inv = field.inverse(prod.v[first]);
                          uint64_t h = 0x6a09e667f3bcc908ULL;
                          for (uint64_t x : prod.v) {
                              uint64_t s = h ^ field.mul(x, inv);
                              h = splitmix(s);
                          }
                          prints.push_back(h);
                      }
                      std::lock_guard lock(mu);
                      if (fingerprints.size() <= t) fingerprints.resize(t + 1);
                      fingerprints[t] = std::move(prints);
                  });
    std::vector<uint64_t> all;
    for (auto& f : fingerprints) all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());
    result.upper_bound = result.stats.closed_tuples * paulis.size();
    result.distinct = static_cast<uint64_t>(std::unique(all.begin(), all.end()) - all.begin());
    return result;
}

}  // namespace hierarchon
