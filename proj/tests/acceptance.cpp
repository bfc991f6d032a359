// Runs the command-line tool end to end and prints one PASS/FAIL line per
// acceptance criterion. Expected values live here, not in the library.

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    double seconds = 0;
};

Run run_tool(const std::string& args) {
    const std::string cmd = std::string(LIETOWER_TOOL) + " " + args + " 2>/dev/null";
    Run r;
    const auto start = std::chrono::steady_clock::now();
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 65536> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

/// Collects failures for one criterion.
class Criterion {
public:
    explicit Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) problems_.push_back(what);
    }

    bool report(const std::string& detail) const {
        std::cout << (problems_.empty() ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_;
        if (problems_.empty())
            std::cout << " (" << detail << ")";
        else
            for (const auto& p : problems_) std::cout << "\n    " << p;
        std::cout << "\n";
        return problems_.empty();
    }

private:
    int id_;
    std::string title_;
    std::vector<std::string> problems_;
};

const Json* find_check(const Json& report, const std::string& name) {
    for (const auto& c : report["checks"])
        if (c["name"] == name) return &c;
    return nullptr;
}

/// The named check exists, passed, and (when given) its actual value equals `actual`.
void expect_check(Criterion& c, const Json& report, const std::string& name, const Json& actual = nullptr) {
    const std::string where = report["type"].get<std::string>() + " " + name;
    const Json* chk = find_check(report, name);
    if (!chk) {
        c.require(false, where + ": missing");
        return;
    }
    c.require((*chk)["status"] == "pass", where + ": status " + (*chk)["status"].dump());
    if (!actual.is_null()) c.require((*chk)["actual"] == actual, where + ": actual " + (*chk)["actual"].dump() + ", want " + actual.dump());
}

/// Every check whose name starts with `prefix` passed, and there is at least one.
void expect_prefix(Criterion& c, const Json& report, const std::string& prefix) {
    std::size_t seen = 0;
    for (const auto& chk : report["checks"]) {
        const auto name = chk["name"].get<std::string>();
        if (name.rfind(prefix, 0) != 0) continue;
        ++seen;
        c.require(chk["status"] == "pass", report["type"].get<std::string>() + " " + name + ": " + chk["status"].dump());
    }
    c.require(seen > 0, report["type"].get<std::string>() + ": no checks named " + prefix + "*");
}

struct TypeData {
    std::size_t roots, positive;
    Json highest;
    std::size_t p, q, r, r_center;
    std::string r_levi;
    Json layers, residual;
    int orbit, codim;
    int big, small, stabilizer;
};

const TypeData kE6{72, 36, {1, 2, 2, 3, 2, 1}, 16, 21, 24, 8, "D4", {21, 9, 5}, {4}, 32, 15, 16, 8, 21};
const TypeData kE7{126, 63, {2, 2, 3, 4, 3, 2, 1}, 27, 33, 42, 10, "A1xD5", {33, 17, 9}, {2, 3, 5, 7}, 56, 26, 32, 16, 39};

}  // namespace

int main() {
    const std::string golden = LIETOWER_GOLDEN_TABLES;
    const std::string full_args = "verify --type both --format json --golden " + golden;

    const Run full = run_tool(full_args);
    const Run again = run_tool(full_args);
    const Run fast = run_tool("verify --type both --fast --format json --golden " + golden);

    Json reports;
    try {
        reports = Json::parse(full.out);
    } catch (const std::exception& e) {
        std::cout << "FAIL could not parse tool output: " << e.what() << "\n";
        return 1;
    }
    if (!reports.is_array() || reports.size() != 2) {
        std::cout << "FAIL expected two reports from --type both\n";
        return 1;
    }
    const Json& e6 = reports[0];
    const Json& e7 = reports[1];
    const std::array<std::pair<const Json*, const TypeData*>, 2> both{{{&e6, &kE6}, {&e7, &kE7}}};

    bool all = true;

    {
        Criterion c(1, "root counts and highest roots");
        for (const auto& [rep, d] : both) {
            expect_check(c, *rep, "roots.count", d->roots);
            expect_check(c, *rep, "roots.positive", d->positive);
            expect_check(c, *rep, "roots.highest", d->highest);
            expect_prefix(c, *rep, "roots.");
        }
        all &= c.report("72/36 and 126/63, highest (1,2,2,3,2,1), (2,2,3,4,3,2,1)");
    }
    {
        Criterion c(2, "named parabolic structure");
        for (const auto& [rep, d] : both) {
            expect_check(c, *rep, "parabolic.P.nilradical_dim", d->p);
            expect_check(c, *rep, "parabolic.P.abelian");
            expect_check(c, *rep, "parabolic.Q.nilradical_dim", d->q);
            expect_check(c, *rep, "parabolic.Q.center_dim", 1);
            expect_check(c, *rep, "parabolic.Q.heisenberg");
            expect_check(c, *rep, "parabolic.R.nilradical_dim", d->r);
            expect_check(c, *rep, "parabolic.R.center_dim", d->r_center);
            expect_check(c, *rep, "parabolic.R.levi_type", d->r_levi);
            expect_check(c, *rep, "parabolic.R.two_step");
            expect_prefix(c, *rep, "parabolic.");
        }
        all &= c.report("P 16/27 abelian, Q 21/33 Heisenberg, R 24/42 two-step with centers 8/10, D4 and A1xD5");
    }
    {
        Criterion c(3, "Heisenberg tower");
        for (const auto& [rep, d] : both) {
            expect_check(c, *rep, "tower.layer_dims", d->layers);
            expect_check(c, *rep, "tower.layers_heisenberg", true);
            expect_check(c, *rep, "tower.residual_nodes", d->residual);
            expect_check(c, *rep, "tower.strongly_orthogonal");
            expect_check(c, *rep, "tower.outer_layer_is_H");
        }
        all &= c.report("(21,9,5) residual {4}; (33,17,9) residual {2,3,5,7}");
    }
    {
        Criterion c(4, "rank-three orbit and principal series codimension");
        for (const auto& [rep, d] : both) {
            expect_check(c, *rep, "tower.rank3_orbit_dim", d->orbit);
            expect_check(c, *rep, "tower.codim_u2", d->codim);
            expect_check(c, *rep, "tower.codim_inequality", true);
            c.require(2 * d->codim < d->orbit, "inequality constants");
        }
        all &= c.report("2*15 < 32 and 2*26 < 56");
    }
    {
        Criterion c(5, "basis lemma");
        for (const auto& [rep, d] : both) {
            for (const char* part : {"a", "b", "c", "d", "e"}) expect_check(c, *rep, std::string("lemma.part_") + part, true);
            expect_check(c, *rep, "lemma.derived_identity", true);
            expect_check(c, *rep, "lemma.e1_root", d->highest);
            expect_prefix(c, *rep, "lemma.");
            expect_prefix(c, *rep, "form.");
        }
        all &= c.report("parts a-e, bracket table and [e_-1, f_i] = -e_-i for both types");
    }
    {
        Criterion c(6, "spectrum identity");
        for (const auto& [rep, d] : both) {
            expect_check(c, *rep, "spectrum.identity", "-2*t*s");
            expect_prefix(c, *rep, "spectrum.");
            expect_prefix(c, *rep, "character.");
        }
        all &= c.report("<v,v> = -2ts as polynomials; rank one isotropic, rank two anisotropic");
    }
    {
        Criterion c(7, "induced Heisenberg ranks");
        for (const auto& [rep, d] : both) {
            expect_check(c, *rep, "induced.big_rank", d->big);
            expect_check(c, *rep, "induced.small_rank", d->small);
            expect_check(c, *rep, "induced.big_random", Json::array({d->big}));
            expect_check(c, *rep, "induced.small_random", Json::array({d->small}));
        }
        all &= c.report("16/8 and 32/16 on 100 random representatives each");
    }
    {
        Criterion c(8, "stabilizer dimensions");
        for (const auto& [rep, d] : both) {
            expect_check(c, *rep, "stabilizer.e1_em1", d->stabilizer);
            expect_check(c, *rep, "stabilizer.rank_nullity");
        }
        expect_check(c, e7, "stabilizer.a1_trivial", true);
        all &= c.report("21 and 39 = 3 + 36, A1 acts by zero on Z(u)");
    }
    {
        Criterion c(9, "E7 block partition and polarization");
        expect_check(c, e7, "omega.blocks", 8);
        expect_check(c, e7, "omega.condition_a", true);
        expect_check(c, e7, "omega.condition_b", true);
        expect_prefix(c, e7, "omega.");
        expect_check(c, e7, "tables.E7.X1_Y1.lagrangian", true);
        expect_check(c, e7, "tables.E7.X1_Y1.sl2_stable", true);
        all &= c.report("8 blocks of 4, X1/Y1 Lagrangian and stable mod Z(u)");
    }
    {
        Criterion c(10, "golden tables");
        std::size_t cells = 0;
        for (const auto& [rep, d] : both) {
            expect_prefix(c, *rep, "tables.");
            for (const auto& chk : (*rep)["checks"])
                if (chk["name"].get<std::string>().rfind("tables.", 0) == 0) ++cells;
        }
        // A corrupted cell must be flagged by name.
        std::ifstream in(golden);
        std::stringstream text;
        text << in.rdbuf();
        const std::string bad =
            std::regex_replace(text.str(), std::regex(R"(\[E7\] f_3\n[0-9 ]+)"), "[E7] f_3\n0 0 0 0 0 1 1");
        c.require(bad != text.str(), "could not corrupt the f_3 cell");
        const auto tmp = std::filesystem::temp_directory_path() / "lietower_acceptance_tables.txt";
        std::ofstream(tmp) << bad;
        const Run mutated = run_tool("tables --type e7 --format json --golden " + tmp.string());
        std::filesystem::remove(tmp);
        try {
            const Json m = Json::parse(mutated.out);
            const Json* f3 = find_check(m, "tables.E7.f_3");
            c.require(f3 && (*f3)["status"] == "flagged", "corrupted f_3 not flagged");
            c.require(m["summary"]["flagged"].get<int>() >= 1, "no flagged count");
        } catch (const std::exception& e) {
            c.require(false, std::string("mutated run output: ") + e.what());
        }
        all &= c.report(std::to_string(cells) + " table checks pass; corrupted cell flagged");
    }
    {
        Criterion c(11, "E7 nilradical partition");
        expect_check(c, e7, "n.sizes", {27, 16, 10});
        expect_check(c, e7, "n.partition", true);
        c.require(16 + 10 + 1 == 27, "sizes");
        all &= c.report("27 = 16 + 10 + 1");
    }
    {
        Criterion c(12, "property suites, determinism and timing");
        for (const auto& [rep, d] : both) {
            expect_check(c, *rep, "chevalley.jacobi_exhaustive", 0);
            for (const char* p : {"P", "Q", "R", "Pg"}) expect_check(c, *rep, std::string("parabolic.") + p + ".grading", true);
            expect_check(c, *rep, "stabilizer.rank_nullity");
            c.require((*rep)["summary"]["fail"] == 0, (*rep)["type"].get<std::string>() + ": failures in report");
        }
        c.require(full.code == 0, "full run exit code " + std::to_string(full.code));
        c.require(full.out == again.out, "two full runs differ");
        c.require(full.seconds < 60.0, "full run took " + std::to_string(full.seconds) + " s");
        c.require(fast.code == 0, "fast run exit code " + std::to_string(fast.code));
        c.require(fast.seconds < 2.0, "fast run took " + std::to_string(fast.seconds) + " s");
        std::ostringstream detail;
        detail.precision(2);
        detail << std::fixed << "byte-identical reruns, full " << full.seconds << " s, fast " << fast.seconds << " s";
        all &= c.report(detail.str());
    }

    std::cout << (all ? "all acceptance criteria pass" : "some acceptance criteria fail") << "\n";
    return all ? 0 : 1;
}
