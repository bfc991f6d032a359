#include "cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace lietower;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "lietower");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"roots"}).code, 2);
    EXPECT_EQ(run_cli({"roots", "--type", "e8"}).code, 2);
    EXPECT_EQ(run_cli({"roots", "--type", "e6", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate", "--type", "e6"}).code, 2);
    const auto r = run_cli({"verify", "--type", "e6"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--golden"), std::string::npos);
    EXPECT_EQ(run_cli({"tables", "--type", "e6"}).code, 2);
    EXPECT_EQ(run_cli({"report", "--type", "e6", "--golden", "/nonexistent/file"}).code, 2);
}

TEST(Cli, RootsJson) {
    const auto r = run_cli({"roots", "--type", "e7", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["type"], "E7");
    EXPECT_EQ(j["count"], 126);
    EXPECT_EQ(j["positive"], 63);
    EXPECT_EQ(j["highest"], Json::parse("[2,2,3,4,3,2,1]"));
    EXPECT_EQ(j["roots"].size(), 126u);
}

TEST(Cli, BothEmitsArray) {
    const auto r = run_cli({"tower", "--type", "both", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["rank3_orbit_dim"], 32);
    EXPECT_EQ(j[1]["rank3_orbit_dim"], 56);
    EXPECT_EQ(j[0]["principal_series_codim"], 15);
    EXPECT_EQ(j[1]["principal_series_codim"], 26);
}

TEST(Cli, ParabolicText) {
    const auto r = run_cli({"parabolic", "--type", "e6"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Levi D4"), std::string::npos);
    EXPECT_NE(r.out.find("nilradical 16"), std::string::npos);
}

TEST(Cli, EmptyReportShape) {
    const VerificationReport empty("E6");
    EXPECT_EQ(empty.to_json().dump(), R"({"type":"E6","checks":[],"summary":{"pass":0,"fail":0,"flagged":0}})");
}

TEST(Cli, FastReportIsDeterministicAndClean) {
    const std::vector<std::string> args{"report", "--type", "e6", "--fast", "--format", "json", "--golden",
                                        LIETOWER_GOLDEN_TABLES};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = Json::parse(a.out);
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_EQ(j["summary"]["flagged"], 0);
}

TEST(Cli, TablesOnlyRunsTableChecks) {
    const auto r = run_cli({"tables", "--type", "e6", "--format", "json", "--golden", LIETOWER_GOLDEN_TABLES});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto& c : Json::parse(r.out)["checks"])
        EXPECT_EQ(c["name"].get<std::string>().rfind("tables.", 0), 0u) << c["name"];
}

TEST(Cli, MalformedGoldenExitsTwo) {
    const std::string path = ::testing::TempDir() + "bad_tables.txt";
    {
        std::ofstream f(path);
        f << "[E6] W\n0 0 0\n";
    }
    const auto r = run_cli({"tables", "--type", "e6", "--golden", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("expected 6 entries"), std::string::npos);
}
