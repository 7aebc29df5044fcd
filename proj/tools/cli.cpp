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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>

#include "hierarchon/catalog_store.hpp"
#include "hierarchon/diagonal.hpp"
#include "hierarchon/hierarchy.hpp"
#include "hierarchon/interchange.hpp"
#include "hierarchon/qutrit3.hpp"
#include "hierarchon/semiclifford.hpp"
#include "hierarchon/teleport.hpp"

namespace hierarchon::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    unsigned d = 3;
    unsigned n = 1;
    unsigned max_level = 1;
    std::optional<std::string> cache_dir;
    unsigned jobs = 1;
    uint64_t seed = 1;
    std::optional<std::string> out;
    std::string format = "table";

    void validate() const {
        if (d != 3 && d != 5 && d != 7) throw UsageError("--d must be 3, 5 or 7");
        if (n != 1 && n != 2) throw UsageError("--n must be 1 or 2");
        if (max_level < 1) throw UsageError("--max-level must be at least 1");
        if (jobs < 1) throw UsageError("--jobs must be at least 1");
    }

    EnumerateOptions enumerate_options() const { return {jobs, EnumerateOptions{}.size_limit}; }
};

void add_common(CLI::App* app, RunConfig& cfg, bool with_level) {
    app->add_option("--d", cfg.d, "Qudit dimension (3, 5 or 7)");
    app->add_option("--n", cfg.n, "Number of qudits (1 or 2)");
    if (with_level) app->add_option("--max-level", cfg.max_level, "Highest hierarchy level");
    app->add_option("--cache-dir", cfg.cache_dir, "Catalog cache (default $HIERARCHON_CACHE, else ./cache)");
    app->add_option("--jobs", cfg.jobs, "Worker threads");
    app->add_option("--seed", cfg.seed, "Seed for sampling commands");
    app->add_option("--out", cfg.out, "Also write the JSON report to this file");
    app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

GateDocument read_gate(const std::string& path) {
    try {
        return gate_from_json(read_json_file(path));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(const RunConfig& cfg, const json& report, const std::string& table, std::ostream& out) {
    if (cfg.out) {
        std::ofstream f(*cfg.out);
        if (!f) throw UsageError("cannot write " + *cfg.out);
        f << report.dump(2) << '\n';
    }
    if (cfg.format == "json")
        out << report.dump(2) << '\n';
    else
        out << table;
}

std::vector<BuiltLevel> levels_up_to(const RunConfig& cfg, unsigned n, unsigned k) {
    const CatalogStore store(resolve_cache_dir(cfg.cache_dir));
    return build_up_to(cfg.d, n, k, &store, cfg.enumerate_options());
}

std::string pad(const std::string& s, size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

int cmd_enumerate(const RunConfig& cfg, bool count_last, std::ostream& out, std::ostream& log) {
    cfg.validate();
    const unsigned stored = count_last ? cfg.max_level - 1 : cfg.max_level;
    const CatalogStore store(resolve_cache_dir(cfg.cache_dir));
    const auto built = build_up_to(cfg.d, cfg.n, stored, &store, cfg.enumerate_options());
    uint64_t paulis = 1;
    for (unsigned i = 0; i < 2 * cfg.n; ++i) paulis *= cfg.d;

    bool ok = true;
    json levels = json::array();
    std::string table = pad("k", 4) + pad("count", 10) + pad("reference", 10) + "status\n";
    // The source goes to the log so that warm and cold runs print the same report.
    auto row = [&](unsigned k, uint64_t count, const std::string& source, bool exact) {
        log << "level " << k << ": " << source << '\n';
        const auto ref = reference_count(cfg.d, cfg.n, k);
        const std::string status = !ref ? "-" : (*ref == count ? "MATCH" : "MISMATCH");
        json r{{"k", k}, {"count", count}, {"status", status}, {"exact", exact}};
        r["reference"] = ref ? json(*ref) : json(nullptr);
        levels.push_back(r);
        table += pad(std::to_string(k), 4) + pad(std::to_string(count), 10) + pad(ref ? std::to_string(*ref) : "-", 10) +
                 status + (exact ? "" : " (lower bound)") + "\n";
    };

    json invariants = json::array();
    for (size_t i = 0; i < built.size(); ++i) {
        const auto& c = built[i].catalog;
        row(c.k(), c.size(), built[i].from_cache ? "cache" : "computed", true);
        bool divisible = c.size() % paulis == 0;
        bool nested = true;
        if (i > 0)
            for (const auto& g : built[i - 1].catalog.gates()) nested = nested && c.contains(g);
        invariants.push_back({{"k", c.k()}, {"divisible", divisible}, {"nested", nested}});
        ok = ok && divisible && nested;
    }
    if (count_last) {
        const LevelCatalog* lower = built.empty() ? nullptr : &built.back().catalog;
        const LevelCount cnt = count_level(cfg.d, cfg.n, cfg.max_level, lower, cfg.enumerate_options());
        row(cfg.max_level, cnt.distinct, "counted", cnt.exact());
        const bool divisible = cnt.distinct % paulis == 0;
        invariants.push_back({{"k", cfg.max_level}, {"divisible", divisible}, {"upper_bound", cnt.upper_bound}});
        ok = ok && cnt.exact() && divisible;
    }
    const json report{{"version", 1}, {"d", cfg.d}, {"n", cfg.n}, {"levels", levels}, {"invariants", invariants},
                      {"invariants_ok", ok}};
    if (!ok) table += "internal invariant violated\n";
    emit(cfg, report, table, out);
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_membership(RunConfig cfg, const std::string& gate_path, unsigned k, std::ostream& out) {
    if (k < 1) throw UsageError("--k must be at least 1");
    const GateDocument doc = read_gate(gate_path);
    cfg.d = doc.d;
    cfg.n = doc.n;
    cfg.validate();
    // Cached lower levels shortcut the recursion; nothing is enumerated here.
    const CatalogStore store(resolve_cache_dir(cfg.cache_dir));
    std::vector<LevelCatalog> loaded;
    for (unsigned j = 1; j <= k; ++j)
        if (auto c = store.load(doc.d, doc.n, j)) loaded.push_back(std::move(*c));
    std::vector<const LevelCatalog*> ptrs;
    for (const auto& c : loaded) ptrs.push_back(&c);
    const bool member = membership(doc.gate.mat, doc.d, k, ptrs);
    const json report{{"d", doc.d}, {"n", doc.n}, {"k", k}, {"member", member}, {"cached_levels", loaded.size()}};
    emit(cfg, report, std::string(member ? "member" : "not a member") + " of level " + std::to_string(k) + "\n", out);
    return kExitOk;
}

int cmd_diagonal_verify(RunConfig cfg, unsigned k, std::ostream& out) {
    cfg.n = 1;
    cfg.max_level = k;
    cfg.validate();
    const auto built = levels_up_to(cfg, 1, k);
    bool ok = true;
    json levels = json::array();
    std::string table;
    for (const auto& b : built) {
        const CgkReport r = verify_cgk(cfg.d, b.catalog.k(), b.catalog);
        ok = ok && r.pass();
        levels.push_back(cgk_json(r));
        table += "k=" + std::to_string(r.k) + " classes=" + std::to_string(r.delta_count) +
                 " diagonal_in_catalog=" + std::to_string(r.diagonal_in_catalog) + (r.pass() ? " pass" : " FAIL") +
                 "\n";
    }
    emit(cfg, json{{"version", 1}, {"d", cfg.d}, {"levels", levels}, {"pass", ok}}, table, out);
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_semiclifford(RunConfig cfg, const std::optional<std::string>& gate_path, std::optional<unsigned> catalog_level,
                     bool all, std::ostream& out) {
    if (gate_path.has_value() == catalog_level.has_value())
        throw UsageError("give exactly one of --gate or --catalog");
    if (gate_path) {
        const GateDocument doc = read_gate(*gate_path);
        cfg.d = doc.d;
        cfg.n = doc.n;
        cfg.validate();
        json report = semiclifford_json(doc.gate, doc.d);
        if (all) {
            json ws = json::array();
            for (const auto& w : all_witnesses(doc.gate, doc.d)) ws.push_back(witness_json(w));
            report["all_witnesses"] = ws;
        }
        const bool semi = report["semi_clifford"].get<bool>();
        const bool verified = semi && report["verified"].get<bool>();
        emit(cfg, report,
             std::string(semi ? "semi-Clifford" : "no Lagrangian semibasis witness") +
                 (semi ? (verified ? ", diagonalisation verified\n" : ", diagonalisation FAILED\n") : "\n"),
             out);
        return semi && !verified ? kExitCheckFailed : kExitOk;
    }
    cfg.max_level = *catalog_level;
    cfg.validate();
    const auto built = levels_up_to(cfg, cfg.n, *catalog_level);
    const LevelCatalog& cat = built.back().catalog;
    const SemiCliffordTally t = survey_semiclifford(cat, cfg.jobs);
    json fails = json::array();
    for (size_t i : t.failures)
        fails.push_back({{"index", i}, {"gate", gate_json(ScaledUnitary::from_matrix(cat[i]), cfg.d)}});
    const json report{{"version", 1},
                      {"d", cfg.d},
                      {"n", cfg.n},
                      {"k", *catalog_level},
                      {"total", t.total},
                      {"semi_clifford", t.semi_clifford},
                      {"sp_order", sp_order(cfg.d)},
                      {"failures", fails}};
    emit(cfg, report,
         std::to_string(t.semi_clifford) + "/" + std::to_string(t.total) + " semi-Clifford at level " +
             std::to_string(*catalog_level) + "\n",
         out);
    return t.failures.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_teleport_verify(RunConfig cfg, size_t samples, size_t states, std::ostream& out) {
    cfg.n = 1;
    cfg.max_level = 3;
    cfg.validate();
    const auto built = levels_up_to(cfg, 1, 3);
    const TeleportReport r = verify_teleport(built.back().catalog, samples, states, cfg.seed, cfg.jobs);
    const bool ok = r.failures.empty() && r.non_clifford_corrections.empty();
    emit(cfg, teleport_json(r),
         "seed=" + std::to_string(r.seed) + " samples=" + std::to_string(r.samples) +
             " branches=" + std::to_string(r.branches_checked) + " failures=" + std::to_string(r.failures.size()) +
             " non_clifford_corrections=" + std::to_string(r.non_clifford_corrections.size()) + "\n",
         out);
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_qutrit3(RunConfig cfg, uint32_t stride, bool pauli_only, std::ostream& out) {
    if (cfg.d != 3) throw UsageError("qutrit3 survey is defined for d = 3");
    if (stride < 1) throw UsageError("--stride must be at least 1");
    cfg.validate();
    const SurveyReport r = survey({cfg.jobs, stride, pauli_only});
    emit(cfg, survey_json(r),
         "total=" + std::to_string(r.total) + " checked=" + std::to_string(r.checked) +
             " passed=" + std::to_string(r.passed) + " failed=" + std::to_string(r.failed) + "\n",
         out);
    return r.failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::optional<uint64_t> reference_count(unsigned d, unsigned n, unsigned k) {
    static const std::map<unsigned, std::vector<uint64_t>> single{
        {3, {9, 216, 1944, 7128, 22680, 69336}},
        {5, {25, 3000, 7500}},
        {7, {49, 16464, 806736}},
    };
    if (n != 1 || k < 1) return std::nullopt;
    const auto it = single.find(d);
    if (it == single.end() || k > it->second.size()) return std::nullopt;
    return it->second[k - 1];
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tools for the qudit Clifford hierarchy", "hierarchon"};
    app.set_version_flag("--version", kLibraryVersion);
    app.require_subcommand(1);
    RunConfig cfg;

    auto* enumerate = app.add_subcommand("enumerate", "Build hierarchy level catalogs and print their sizes");
    add_common(enumerate, cfg, true);
    bool count_last = false;
    enumerate->add_flag("--count-last", count_last, "Count the top level without storing it");

    auto* member = app.add_subcommand("membership", "Test a gate file for membership in a level");
    add_common(member, cfg, false);
    std::string gate_path;
    unsigned k = 1;
    member->add_option("--gate", gate_path, "Gate file")->required();
    member->add_option("--k", k, "Level")->required();

    auto* diagonal = app.add_subcommand("diagonal", "Diagonal gate classification");
    diagonal->require_subcommand(1);
    auto* diag_verify = diagonal->add_subcommand("verify", "Check diagonal catalog members against the rank-k family");
    add_common(diag_verify, cfg, false);
    unsigned diag_k = 3;
    diag_verify->add_option("--k", diag_k, "Highest level");

    auto* semi = app.add_subcommand("semiclifford", "Find witnesses and diagonalise");
    add_common(semi, cfg, false);
    std::optional<std::string> semi_gate;
    std::optional<unsigned> semi_level;
    bool all = false;
    semi->add_option("--gate", semi_gate, "Gate file");
    semi->add_option("--catalog", semi_level, "Survey every gate of this level");
    semi->add_flag("--all-witnesses", all, "List every passing semibasis (gate files only)");

    auto* teleport = app.add_subcommand("teleport", "Teleportation gadget");
    teleport->require_subcommand(1);
    auto* tel_verify = teleport->add_subcommand("verify", "Run the gadget on sampled level-3 gates");
    add_common(tel_verify, cfg, false);
    size_t samples = 100, states = 10;
    tel_verify->add_option("--samples", samples, "Gates sampled from the level-3 catalog");
    tel_verify->add_option("--states", states, "Random input states per gate");

    auto* qutrit = app.add_subcommand("qutrit3", "Two-qutrit third level survey");
    qutrit->require_subcommand(1);
    auto* q_survey = qutrit->add_subcommand("survey", "Kernel semibasis check over all conjugate tuples");
    add_common(q_survey, cfg, false);
    uint32_t stride = 1;
    bool pauli_only = false;
    q_survey->add_option("--stride", stride, "Check every stride-th tuple per leading septuple");
    q_survey->add_flag("--pauli-only", pauli_only, "Restrict to Pauli septuples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(cfg, count_last, out, err);
        if (*member) return cmd_membership(cfg, gate_path, k, out);
        if (*diag_verify) return cmd_diagonal_verify(cfg, diag_k, out);
        if (*semi) return cmd_semiclifford(cfg, semi_gate, semi_level, all, out);
        if (*tel_verify) return cmd_teleport_verify(cfg, samples, states, out);
        if (*q_survey) return cmd_qutrit3(cfg, stride, pauli_only, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SizeGuardError& e) {
        err << "refused: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace hierarchon::cli
