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

#include "hierarchon/interchange.hpp"

#include <stdexcept>

#include "hierarchon/svn.hpp"

namespace hierarchon {

using nlohmann::json;

json integer_json(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return json(static_cast<int64_t>(v.get_si()));
    return json(v.get_str());
}

mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<int64_t>()));
    if (j.is_string()) {
        mpz_class out;
        if (out.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("malformed integer");
        return out;
    }
    throw std::invalid_argument("malformed integer");
}

json cyclo_json(const Cyclo& a, Conductor field) {
    json out = json::array();
    for (const auto& c : a.coeffs_in(field)) out.push_back(json::array({integer_json(c.get_num()), integer_json(c.get_den())}));
    return out;
}

Cyclo cyclo_from_json(const json& j, Conductor field) {
    if (!j.is_array() || j.size() != field.degree()) throw std::invalid_argument("coefficient vector has wrong length");
    std::vector<mpq_class> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 2) throw std::invalid_argument("coefficient must be [num, den]");
        const mpz_class den = integer_from_json(c[1]);
        if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
        mpq_class q(integer_from_json(c[0]), den);
        q.canonicalize();
        coeffs.push_back(std::move(q));
    }
    return Cyclo::from_coeffs(field, coeffs);
}

json entries_json(const ExactMatrix& m, Conductor field) {
    json out = json::array();
    for (const auto& e : m.entries()) out.push_back(cyclo_json(e, field));
    return out;
}

ExactMatrix entries_from_json(const json& j, size_t dim, Conductor field) {
    if (!j.is_array() || j.size() != dim * dim) throw std::invalid_argument("entries must hold dim*dim values");
    std::vector<Cyclo> e;
    e.reserve(j.size());
    for (const auto& x : j) e.push_back(cyclo_from_json(x, field));
    return ExactMatrix::from_entries(dim, dim, e);
}

Conductor document_conductor(const ExactMatrix& m, unsigned d) { return join(Conductor(d, 1), m.conductor()); }

json gate_json(const ScaledUnitary& g, unsigned d) {
    const Conductor field = join(document_conductor(g.mat, d), g.scale2.conductor());
    json out;
    out["version"] = kInterchangeVersion;
    out["d"] = d;
    out["n"] = qudit_count(g.mat.rows(), d);
    out["conductor"] = field.order();
    if (auto q = g.scale2.as_rational())
        out["scale2"] = q->get_str();
    else
        out["scale2"] = cyclo_json(g.scale2, field);
    out["entries"] = entries_json(g.mat, field);
    return out;
}

namespace {

Conductor conductor_for(uint64_t order, unsigned d) {
    uint64_t v = 1;
    unsigned e = 0;
    while (v < order) {
        v *= d;
        ++e;
    }
    if (v != order || e == 0) throw std::invalid_argument("conductor must be a positive power of d");
    return Conductor(d, e);
}

bool is_odd_prime(unsigned d) {
    if (d < 3 || d % 2 == 0) return false;
    for (unsigned f = 3; f * f <= d; f += 2)
        if (d % f == 0) return false;
    return true;
}

}  // namespace

GateDocument gate_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("gate document must be an object");
    for (const char* key : {"d", "n", "conductor", "entries"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
    if (j.contains("version") && j["version"] != kInterchangeVersion) throw std::invalid_argument("unsupported version");
    GateDocument doc;
    doc.d = j["d"].get<unsigned>();
    doc.n = j["n"].get<unsigned>();
    if (!is_odd_prime(doc.d)) throw std::invalid_argument("d must be an odd prime");
    if (doc.n == 0) throw std::invalid_argument("n must be positive");
    const Conductor field = conductor_for(j["conductor"].get<uint64_t>(), doc.d);
    size_t dim = 1;
    for (unsigned i = 0; i < doc.n; ++i) dim *= doc.d;
    ExactMatrix m = entries_from_json(j["entries"], dim, field);
    doc.gate = ScaledUnitary::from_matrix(std::move(m));
    if (j.contains("scale2")) {
        const auto& s = j["scale2"];
        Cyclo declared;
        if (s.is_string()) {
            mpq_class q;
            if (q.set_str(s.get<std::string>(), 10) != 0 || sgn(q.get_den()) == 0)
                throw std::invalid_argument("malformed scale2");
            q.canonicalize();
            declared = Cyclo(q);
        } else {
            declared = cyclo_from_json(s, field);
        }
        if (declared != doc.gate.scale2) throw std::invalid_argument("scale2 does not match M M^dagger");
    }
    return doc;
}

json pauli_json(const PauliElement& p) { return json{{"c", p.c}, {"p", p.point.p}, {"q", p.point.q}}; }

}  // namespace hierarchon
