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

#include "hierarchon/svn.hpp"

#include <stdexcept>

#include "hierarchon/phasespace.hpp"

namespace hierarchon {

unsigned qudit_count(size_t dim, unsigned d) {
    unsigned n = 0;
    size_t v = 1;
    while (v < dim) {
        v *= d;
        ++n;
    }
    if (v != dim || n == 0) throw std::invalid_argument("dimension is not a power of d");
    return n;
}

bool is_conjugate_pair(const ExactMatrix& u, const ExactMatrix& v, unsigned d) {
    const auto id = ExactMatrix::identity(u.rows());
    if (u.pow(d) != id || v.pow(d) != id) return false;
    return u * v == (v * u).scaled(omega(d));
}

bool is_conjugate_tuple(const ConjugateTuple& t) {
    for (const auto& [u, v] : t.pairs)
        if (!is_conjugate_pair(u.mat, v.mat, t.d)) return false;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) {
            const ExactMatrix* a[2] = {&t.pairs[i].first.mat, &t.pairs[i].second.mat};
            const ExactMatrix* b[2] = {&t.pairs[j].first.mat, &t.pairs[j].second.mat};
            for (auto x : a)
                for (auto y : b)
                    if (*x * *y != *y * *x) return false;
        }
    return true;
}

namespace {

// d^{-1} sum_p U^p v.
ExactMatrix project(const ExactMatrix& u, const ExactMatrix& v, unsigned d) {
    ExactMatrix acc = v;
    ExactMatrix term = v;
    for (unsigned p = 1; p < d; ++p) {
        term = u * term;
        acc = acc + term;
    }
    return acc.scaled(Cyclo(mpq_class(1, d)));
}

}  // namespace

ExactMatrix simultaneous_unit_eigvec(const ConjugateTuple& t) {
    if (t.pairs.empty()) throw std::invalid_argument("empty tuple");
    const size_t dim = t.pairs[0].first.mat.rows();
    for (size_t j = 0; j < dim; ++j) {
        std::vector<Cyclo> e(dim);
        e[j] = 1;
        ExactMatrix v = ExactMatrix::column(e);
        for (size_t i = t.size(); i-- > 0;) v = project(t.pairs[i].first.mat, v, t.d);
        if (!v.is_zero()) return v;
    }
    throw std::domain_error("not rank one");
}

ScaledUnitary reconstruct(const ConjugateTuple& t) {
    if (!is_conjugate_tuple(t)) throw std::invalid_argument("invalid conjugate tuple");
    const ExactMatrix u0 = simultaneous_unit_eigvec(t);
    const size_t dim = u0.rows();
    std::vector<ExactMatrix> columns(dim);
    columns[0] = u0;
    for (size_t z = 1; z < dim; ++z) {
        size_t i = 0;
        size_t place = 1;
        while ((z / place) % t.d == 0) {
            place *= t.d;
            ++i;
        }
        columns[z] = t.pairs[i].second.mat * columns[z - place];
    }
    std::vector<Cyclo> entries(dim * dim);
    for (size_t c = 0; c < dim; ++c)
        for (size_t r = 0; r < dim; ++r) entries[r * dim + c] = columns[c].at(r, 0);
    const Cyclo norm2 = (u0.adjoint() * u0).at(0, 0);
    return ScaledUnitary{ExactMatrix::from_entries(dim, dim, entries), norm2};
}

ConjugateTuple tuple_of(const ScaledUnitary& g, unsigned d) {
    const unsigned n = qudit_count(g.mat.rows(), d);
    ConjugateTuple t{d, {}};
    for (unsigned i = 0; i < n; ++i) {
        t.pairs.emplace_back(ScaledUnitary::unitary(conjugate_action(g, pauli_z(d, n, i))),
                             ScaledUnitary::unitary(conjugate_action(g, pauli_x(d, n, i))));
    }
    return t;
}

}  // namespace hierarchon
