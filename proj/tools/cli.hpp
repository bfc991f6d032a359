#pragma once

#include "lietower/lietower.hpp"

#include <CLI11/CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace lietower::cli {

struct CliConfig {
    std::string command;
    std::string type_selector = "both";
    std::string format = "text";
    std::string golden_path;
    bool fast = false;
};

inline std::vector<RootSystemType> selected_types(const std::string& sel) {
    if (sel == "e6") return {kE6};
    if (sel == "e7") return {kE7};
    return {kE6, kE7};
}

inline Json roots_json(const RootSystem& rs) {
    Json j;
    j["type"] = rs.label();
    j["rank"] = rs.rank();
    j["count"] = rs.roots().size();
    j["positive"] = rs.positive().size();
    j["highest"] = to_json(rs.highest());
    j["roots"] = to_json(rs.roots());
    return j;
}

inline std::string roots_text(const RootSystem& rs) {
    std::ostringstream os;
    os << rs.label() << ": " << rs.roots().size() << " roots, " << rs.positive().size() << " positive, highest "
       << rs.highest().str() << "\n";
    for (const Root& r : rs.roots()) os << "  " << r.str() << "  height " << r.height() << "\n";
    return os.str();
}

inline Json parabolic_json(const ChevalleyAlgebra& alg) {
    Json j;
    j["type"] = alg.roots().label();
    j["parabolics"] = Json::array();
    for (auto name : {NamedParabolic::P, NamedParabolic::Q, NamedParabolic::R, NamedParabolic::Pg}) {
        const auto pd = named_parabolic(alg, name);
        Json p;
        p["name"] = to_string(name);
        p["levi_keep"] = pd.levi_keep;
        p["levi_type"] = pd.levi.type_label();
        p["nilradical_dim"] = pd.dim();
        p["center_dim"] = pd.center_roots.size();
        p["nilpotency_class"] = pd.nilpotency_class;
        Json layers = Json::array();
        for (int d = 1; d <= pd.max_depth; ++d) layers.push_back(pd.layer(d).size());
        p["layer_dims"] = layers;
        j["parabolics"].push_back(std::move(p));
    }
    return j;
}

inline std::string parabolic_text(const Json& j) {
    std::ostringstream os;
    os << j["type"].get<std::string>() << "\n";
    for (const auto& p : j["parabolics"])
        os << "  " << p["name"].get<std::string>() << ": Levi " << p["levi_type"].get<std::string>() << " on "
           << p["levi_keep"].dump() << ", nilradical " << p["nilradical_dim"].dump() << " (layers "
           << p["layer_dims"].dump() << "), center " << p["center_dim"].dump() << ", class "
           << p["nilpotency_class"].dump() << "\n";
    return os.str();
}

inline Json tower_json(const ChevalleyAlgebra& alg) {
    const auto t = heisenberg_tower(alg);
    const auto ps = principal_series_codim(alg, t);
    Json j;
    j["type"] = alg.roots().label();
    j["betas"] = to_json(t.betas);
    Json layers = Json::array();
    for (std::size_t k = 0; k < t.layers.size(); ++k) {
        Json l;
        l["cascade_index"] = k + 1;
        l["outer_index"] = HeisenbergTower::outer_index(k);
        l["beta"] = to_json(t.betas[k]);
        l["dim"] = t.layers[k].size();
        layers.push_back(std::move(l));
    }
    j["layers"] = layers;
    j["residual_nodes"] = t.residual_nodes();
    j["rank3_orbit_dim"] = rank3_orbit_dim(t);
    j["principal_series_codim"] = ps.codim;
    j["inequality"] = ps.inequality;
    return j;
}

inline std::string tower_text(const Json& j) {
    std::ostringstream os;
    os << j["type"].get<std::string>() << "\n";
    for (const auto& l : j["layers"])
        os << "  T" << l["cascade_index"].dump() << " (N_" << l["outer_index"].dump() << "): beta " << l["beta"].dump()
           << ", dim " << l["dim"].dump() << "\n";
    os << "  residual nodes " << j["residual_nodes"].dump() << "\n";
    os << "  rank-3 orbit dim " << j["rank3_orbit_dim"].dump() << ", principal series codim "
       << j["principal_series_codim"].dump() << ", 2 codim < orbit dim: " << j["inequality"].dump() << "\n";
    return os.str();
}

inline void emit_json_list(std::ostream& out, const std::vector<Json>& items) {
    if (items.size() == 1) {
        out << items.front().dump() << "\n";
        return;
    }
    out << Json(items).dump() << "\n";
}

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or IO error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Exact root-system, parabolic and Heisenberg-tower verification for E6 and E7", "lietower"};
    app.require_subcommand(1, 1);
    const std::vector<std::pair<std::string, std::string>> commands{
        {"roots", "list the roots"},
        {"parabolic", "named parabolics P, Q, R, Pg"},
        {"tower", "Heisenberg tower and dimension counts"},
        {"verify", "all checks, including the golden tables"},
        {"tables", "golden table checks only"},
        {"report", "all structural checks (tables when --golden is given)"}};
    for (const auto& [name, desc] : commands) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--type", cfg.type_selector, "e6, e7 or both")
            ->check(CLI::IsMember({"e6", "e7", "both"}))
            ->required();
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--golden", cfg.golden_path, "golden table file");
        sub->add_flag("--fast", cfg.fast, "sampled Jacobi check instead of the full triple loop");
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n"
            << "usage: lietower <roots|parabolic|tower|verify|tables|report> --type {e6|e7|both} [--golden PATH] "
               "[--format {text|json}] [--fast]\n";
        return 2;
    }

    const bool json = cfg.format == "json";
    const auto types = selected_types(cfg.type_selector);
    const bool needs_golden = cfg.command == "verify" || cfg.command == "tables";
    if (needs_golden && cfg.golden_path.empty()) {
        err << "error: " << cfg.command << " requires --golden PATH\n";
        return 2;
    }

    std::optional<GoldenTables> golden;
    if (!cfg.golden_path.empty()) {
        try {
            golden = load_golden(cfg.golden_path);
        } catch (const GoldenError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }

    try {
        if (cfg.command == "roots" || cfg.command == "parabolic" || cfg.command == "tower") {
            std::vector<Json> items;
            std::string text;
            for (auto t : types) {
                const auto rs = RootSystem::build(t);
                if (cfg.command == "roots") {
                    items.push_back(roots_json(rs));
                    text += roots_text(rs);
                    continue;
                }
                const auto alg = ChevalleyAlgebra::build(rs);
                if (cfg.command == "parabolic") {
                    items.push_back(parabolic_json(alg));
                    text += parabolic_text(items.back());
                } else {
                    items.push_back(tower_json(alg));
                    text += tower_text(items.back());
                }
            }
            if (json)
                emit_json_list(out, items);
            else
                out << text;
            return 0;
        }

        VerifyOptions opt;
        opt.fast = cfg.fast;
        opt.golden = golden ? &*golden : nullptr;
        opt.structural = cfg.command != "tables";
        std::vector<VerificationReport> reports;
        for (auto t : types) reports.push_back(verify_all(t, opt));
        emit_reports(out, reports, json ? Format::json : Format::text);
        for (const auto& r : reports)
            if (!r.ok()) return 1;
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lietower::cli
