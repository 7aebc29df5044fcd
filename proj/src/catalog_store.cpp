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

#include "hierarchon/catalog_store.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hierarchon/interchange.hpp"

namespace hierarchon {

using nlohmann::json;

namespace {

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv(uint64_t& h, std::string_view s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
}

std::string hex(uint64_t v) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

// Visits the serialised form of every gate in catalog order.
template <class Fn>
void for_each_serialised(const LevelCatalog& c, Fn&& fn) {
    const Conductor field = c.conductor();
    for (const auto& g : c.gates()) fn(entries_json(g, field).dump());
}

}  // namespace

uint64_t content_hash(const LevelCatalog& c) {
    uint64_t h = kFnvOffset;
    for_each_serialised(c, [&](const std::string& s) {
        fnv(h, s);
        fnv(h, "\n");
    });
    return h;
}

void write_catalog(const LevelCatalog& c, std::ostream& os) {
    os << "{\"version\":" << kCatalogVersion << ",\"d\":" << c.d() << ",\"n\":" << c.n() << ",\"k\":" << c.k()
       << ",\"conductor\":" << c.conductor().order() << ",\"count\":" << c.size() << ",\"library_version\":"
       << json(kLibraryVersion).dump() << ",\n\"gates\":[";
    uint64_t h = kFnvOffset;
    bool first = true;
    for_each_serialised(c, [&](const std::string& s) {
        os << (first ? "\n" : ",\n") << s;
        first = false;
        fnv(h, s);
        fnv(h, "\n");
    });
    os << "],\n\"content_hash\":\"" << hex(h) << "\"}\n";
}

namespace {

// SAX handler building gates one at a time; header fields must precede "gates".
class CatalogReader : public nlohmann::json_sax<json> {
   public:
    bool null() override { return fail("unexpected null"); }
    bool boolean(bool) override { return fail("unexpected boolean"); }
    bool number_integer(number_integer_t v) override { return scalar(json(v)); }
    bool number_unsigned(number_unsigned_t v) override { return scalar(json(v)); }
    bool number_float(number_float_t, const string_t&) override { return fail("unexpected float"); }
    bool string(string_t& v) override { return scalar(json(v)); }
    bool binary(binary_t&) override { return fail("unexpected binary"); }

    bool start_object(std::size_t) override {
        if (depth_ != 0) return fail("unexpected object");
        ++depth_;
        return true;
    }
    bool end_object() override {
        --depth_;
        return true;
    }
    bool key(string_t& k) override {
        key_ = k;
        return true;
    }
    bool start_array(std::size_t) override {
        ++depth_;
        if (depth_ == 2) {
            if (key_ != "gates") return fail("unexpected array");
            if (!header_ready()) return fail("header fields must precede gates");
        } else if (depth_ == 3) {
            entries_.clear();
        } else if (depth_ == 4) {
            coeffs_.clear();
        } else if (depth_ == 5) {
            pair_.clear();
        } else if (depth_ > 5) {
            return fail("nesting too deep");
        }
        return true;
    }
    bool end_array() override {
        try {
            if (depth_ == 5) {
                if (pair_.size() != 2) return fail("coefficient must be [num, den]");
                mpq_class q(pair_[0], pair_[1]);
                q.canonicalize();
                coeffs_.push_back(std::move(q));
            } else if (depth_ == 4) {
                if (coeffs_.size() != field_.degree()) return fail("coefficient vector has wrong length");
                entries_.push_back(Cyclo::from_coeffs(field_, coeffs_));
            } else if (depth_ == 3) {
                if (entries_.size() != dim_ * dim_) return fail("entries must hold dim*dim values");
                gates_.push_back(ExactMatrix::from_entries(dim_, dim_, entries_));
            }
        } catch (const std::exception& e) {
            return fail(e.what());
        }
        --depth_;
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
        return fail(ex.what());
    }

    LevelCatalog finish() {
        if (!error_.empty()) throw std::runtime_error("catalog: " + error_);
        if (!header_ready() || !header_.contains("count") || !header_.contains("content_hash"))
            throw std::runtime_error("catalog: missing header fields");
        if (header_["version"] != kCatalogVersion) throw std::runtime_error("catalog: unsupported version");
        if (gates_.size() != header_["count"].get<size_t>()) throw std::runtime_error("catalog: count mismatch");
        LevelCatalog c(header_["d"].get<unsigned>(), header_["n"].get<unsigned>(), header_["k"].get<unsigned>(),
                       std::move(gates_));
        if (c.size() != header_["count"].get<size_t>()) throw std::runtime_error("catalog: duplicate gates");
        if (hex(content_hash(c)) != header_["content_hash"].get<std::string>())
            throw std::runtime_error("catalog: content hash mismatch");
        return c;
    }

   private:
    bool fail(const std::string& msg) {
        if (error_.empty()) error_ = msg;
        return false;
    }

    bool header_ready() const {
        for (const char* k : {"version", "d", "n", "k", "conductor"})
            if (!header_.contains(k)) return false;
        return true;
    }

    bool scalar(json v) {
        if (depth_ == 1) {
            header_[key_] = std::move(v);
            if (header_ready() && dim_ == 0) return configure();
            return true;
        }
        if (depth_ != 5) return fail("unexpected scalar");
        try {
            pair_.push_back(integer_from_json(v));
        } catch (const std::exception& e) {
            return fail(e.what());
        }
        return true;
    }

    bool configure() {
        const unsigned d = header_["d"].get<unsigned>();
        const unsigned n = header_["n"].get<unsigned>();
        const uint64_t order = header_["conductor"].get<uint64_t>();
        if (d < 3 || n == 0) return fail("bad dimensions");
        uint64_t v = 1;
        unsigned e = 0;
        while (v < order) {
            v *= d;
            ++e;
        }
        if (v != order || e == 0) return fail("conductor must be a positive power of d");
        field_ = Conductor(d, e);
        dim_ = 1;
        for (unsigned i = 0; i < n; ++i) dim_ *= d;
        return true;
    }

    int depth_ = 0;
    std::string key_;
    json header_ = json::object();
    Conductor field_;
    size_t dim_ = 0;
    std::vector<mpz_class> pair_;
    std::vector<mpq_class> coeffs_;
    std::vector<Cyclo> entries_;
    std::vector<ExactMatrix> gates_;
    std::string error_;
};

}  // namespace

LevelCatalog read_catalog(std::istream& is) {
    CatalogReader reader;
    json::sax_parse(is, &reader);
    return reader.finish();
}

std::filesystem::path CatalogStore::path_for(unsigned d, unsigned n, unsigned k) const {
    return root_ / ("d" + std::to_string(d) + "_n" + std::to_string(n)) / ("level_" + std::to_string(k) + ".json");
}

bool CatalogStore::has(unsigned d, unsigned n, unsigned k) const { return std::filesystem::exists(path_for(d, n, k)); }

std::optional<LevelCatalog> CatalogStore::load(unsigned d, unsigned n, unsigned k) const {
    const auto path = path_for(d, n, k);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    LevelCatalog c = read_catalog(in);
    if (c.d() != d || c.n() != n || c.k() != k) throw std::runtime_error("catalog: header does not match its path");
    return c;
}

void CatalogStore::save(const LevelCatalog& c) const {
    const auto path = path_for(c.d(), c.n(), c.k());
    std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        write_catalog(c, out);
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& explicit_dir) {
    if (explicit_dir && !explicit_dir->empty()) return *explicit_dir;
    if (const char* env = std::getenv("HIERARCHON_CACHE"); env && *env) return env;
    return "cache";
}

std::vector<BuiltLevel> build_up_to(unsigned d, unsigned n, unsigned max_level, const CatalogStore* store,
                                    const EnumerateOptions& opts, const std::function<void(const BuiltLevel&)>& on_level) {
    if (max_level == 0) throw std::invalid_argument("hierarchy levels start at k = 1");
    std::vector<BuiltLevel> levels;
    for (unsigned k = 1; k <= max_level; ++k) {
        BuiltLevel level;
        std::optional<LevelCatalog> cached = store ? store->load(d, n, k) : std::nullopt;
        if (cached) {
            level.catalog = std::move(*cached);
            level.from_cache = true;
        } else {
            level.catalog = enumerate_level(d, n, k, k == 1 ? nullptr : &levels.back().catalog, opts, &level.stats);
            if (store) store->save(level.catalog);
        }
        levels.push_back(std::move(level));
        if (on_level) on_level(levels.back());
    }
    return levels;
}

}  // namespace hierarchon
