#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

using namespace scrollres;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const ScrollSpec kS22({3, 3});

}  // namespace

TEST(ParseElement, CanonicalForms) {
    EXPECT_EQ(parse_element("x1*x6 - x2*x5", kS22).str(), "0");
    EXPECT_EQ(parse_element("x1*x3", kS22).str(), "x2^2");
    EXPECT_EQ(parse_element("-3/2*x3^2 + 1", kS22).str(), "-3/2*x3^2 + 1");
    EXPECT_EQ(parse_element("  x4 ", kS22).str(), "x4");
    EXPECT_EQ(parse_element("2", kS22).str(), "2");
    EXPECT_EQ(parse_element("x2*x2", kS22).str(), "x2^2");
}

TEST(ParseElement, Rejects) {
    for (const char* bad : {"", "x7", "x0", "x1 x2", "x1*", "3/0*x1", "y1", "x1 +", "+"})
        EXPECT_THROW((void)parse_element(bad, kS22), std::invalid_argument) << bad;
}

TEST(ParseElement, RoundTripsEveryEntry) {
    const Resolution res = field_resolution(kS22, 4);
    for (int i = 1; i <= 4; ++i)
        res.differential(i).for_each([&](std::size_t, std::size_t, const Element& e) { EXPECT_EQ(parse_element(e.str(), kS22), e); });
}

TEST(Json, MatrixRoundTrip) {
    const MatrixR d = field_resolution(kS22, 3).differential(3);
    const Json j = matrix_json(d);
    EXPECT_EQ(j["rows"], "21");
    EXPECT_EQ(j["cols"], "64");
    const Json back = Json::parse(j.dump());
    EXPECT_EQ(matrix_from_json(back, kS22), d);
}

TEST(Json, ResolutionLayout) {
    const Resolution res = field_resolution(ScrollSpec({2, 2}), 2);
    const Json j = resolution_json(res);
    EXPECT_EQ(j["spec"]["blocks"], Json::array({"2", "2"}));
    EXPECT_EQ(j["spec"]["n"], "4");
    EXPECT_EQ(j["spec"]["label"], "S(1,1)");
    EXPECT_EQ(j["target"], "field");
    EXPECT_EQ(j["ranks"], Json::array({"1", "4", "7"}));
    const Json& s1 = j.at("steps").at(0);
    EXPECT_EQ(s1["index"], "1");
    EXPECT_EQ(s1.at("entries").at(0), Json::array({"1", "1", "x1"}));
    EXPECT_EQ(spec_from_json(j["spec"]), ScrollSpec({2, 2}));
}

TEST(Json, CheckReport) {
    const Json j = report_json({{"complex", "field", true, "ok", std::nullopt, std::nullopt}, {"exact", "field d_1", false, "bad", 7, 101}});
    const Json& checks = j.at("checks");
    EXPECT_EQ(checks.at(0).at("verdict"), "pass");
    EXPECT_TRUE(checks.at(0).at("seed").is_null());
    EXPECT_EQ(checks.at(1).at("verdict"), "fail");
    EXPECT_EQ(checks.at(1).at("seed"), "7");
    EXPECT_EQ(checks.at(1).at("modulus"), "101");
}

TEST(TextMatrix, OneLinePerEntry) {
    std::ostringstream s;
    write_matrix_text(s, phi0(ScrollSpec({2, 2})));
    EXPECT_EQ(s.str(), "1 1 x2\n1 2 x4\n2 1 -x1\n2 2 -x3\n");
}

TEST(Cli, Betti) {
    const auto r = run_cli({"betti", "--scroll", "3,3", "--max", "6"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "1 6 21 64 192 576 1728\n");
    const auto j = run_cli({"betti", "--scroll", "3,3", "--max", "2", "--format", "json"});
    EXPECT_EQ(Json::parse(j.out)["betti"], Json::array({"1", "6", "21"}));
}

TEST(Cli, BettiIsExactForLargeIndices) {
    const auto r = run_cli({"betti", "--scroll", "10,10", "--max", "40"});
    ASSERT_EQ(r.code, cli::kOk);
    const std::string last = r.out.substr(r.out.rfind(' ') + 1);
    EXPECT_EQ(last, betti(ScrollSpec({10, 10}), 40).str() + "\n");
    EXPECT_GT(last.size(), 40u);
}

TEST(Cli, FacesAndHilbert) {
    EXPECT_EQ(run_cli({"faces", "--scroll", "4,3"}).out, "f = 1,7,11,5\n");
    const auto f = run_cli({"faces", "--scroll", "3,3", "--facets"});
    EXPECT_NE(f.out.find("{x1,x2,x4}"), std::string::npos);
    const auto h = run_cli({"hilbert", "--scroll", "3,3", "--terms", "4", "--format", "json"});
    const Json j = Json::parse(h.out);
    EXPECT_EQ(j["hilbert"], Json::array({"1", "6", "15", "28"}));
    EXPECT_EQ(j["poincare"], Json::array({"1", "6", "21", "64"}));
}

TEST(Cli, ResolveShapes) {
    const auto r = run_cli({"resolve", "--scroll", "2,2", "--steps", "3", "--format", "text"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("1x4"), std::string::npos);
    EXPECT_NE(r.out.find("4x7"), std::string::npos);
    EXPECT_NE(r.out.find("7x8"), std::string::npos);
}

TEST(Cli, ResolveJsonMatchesLibrary) {
    const auto r = run_cli({"resolve", "--scroll", "3,3", "--steps", "3"});
    ASSERT_EQ(r.code, cli::kOk);
    const Json j = Json::parse(r.out);
    const Resolution res = field_resolution(kS22, 3);
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(matrix_from_json(j["steps"][static_cast<std::size_t>(i - 1)], kS22), res.differential(i));
}

TEST(Cli, ResolveTextDir) {
    const auto dir = std::filesystem::temp_directory_path() / "scrollres_text_dir_test";
    std::filesystem::remove_all(dir);
    const auto r = run_cli({"resolve", "--scroll", "2,2", "--steps", "2", "--text-dir", dir.string(), "--format", "text"});
    ASSERT_EQ(r.code, cli::kOk);
    std::ifstream f(dir / "step1.txt");
    std::string line;
    std::getline(f, line);
    EXPECT_EQ(line, "1 1 x1");
    EXPECT_TRUE(std::filesystem::exists(dir / "step2.txt"));
    std::filesystem::remove_all(dir);
}

TEST(Cli, ResolveIdealTargets) {
    const auto r = run_cli({"resolve", "--scroll", "3,3", "--steps", "1", "--target", "J"});
    ASSERT_EQ(r.code, cli::kOk);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["target"], "J");
    EXPECT_EQ(j.at("steps").at(0).at("entries").at(0).at(2), "x1*x4");
    EXPECT_EQ(run_cli({"resolve", "--scroll", "3,3", "--target", "K"}).code, cli::kUsage);
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
    const std::vector<std::string> args{"verify", "--scroll", "3,3", "--steps", "5", "--checks", "complex,minimal,exact,minors,ranks,groebner"};
    const auto a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, cli::kOk) << a.out;
    EXPECT_EQ(a.out, b.out);
    const Json j = Json::parse(a.out);
    for (const auto& c : j.at("checks")) EXPECT_EQ(c["verdict"], "pass") << c.dump();
}

TEST(Cli, VerifyDetectsInjectedFaults) {
    for (const char* fault : {"sign-flip:3:10", "variable-swap:3:4", "unit-insertion:2:0"}) {
        const auto r = run_cli({"verify", "--scroll", "3,3", "--steps", "4", "--inject-fault", fault});
        EXPECT_EQ(r.code, cli::kCheckFailed) << fault << "\n" << r.out;
    }
    EXPECT_EQ(run_cli({"verify", "--scroll", "3,3", "--inject-fault", "bit-rot"}).code, cli::kUsage);
}

TEST(Cli, VerifySeedChangesOnlySeedFields) {
    const auto a = run_cli({"verify", "--scroll", "2,3", "--checks", "exact", "--seed", "1"});
    const auto b = run_cli({"verify", "--scroll", "2,3", "--checks", "exact", "--seed", "2"});
    EXPECT_EQ(a.code, cli::kOk);
    EXPECT_EQ(b.code, cli::kOk);
    EXPECT_EQ(Json::parse(a.out).at("checks").at(0).at("seed"), "1");
}

TEST(Cli, OracleCompare) {
    const auto r = run_cli({"oracle", "--scroll", "2,3", "--imax", "4", "--compare"});
    EXPECT_EQ(r.code, cli::kOk);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_EQ(j["formula"], Json::array({"1", "5", "13", "27", "54"}));
    EXPECT_EQ(run_cli({"oracle", "--scroll", "2,3", "--modulus", "100"}).code, cli::kUsage);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"betti"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"betti", "--scroll", "3,x"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"betti", "--scroll", "3,1"}).code, cli::kUsage);
    const auto k3 = run_cli({"resolve", "--scroll", "2,2,2"});
    EXPECT_EQ(k3.code, cli::kUsage);
    EXPECT_NE(k3.err.find("k = 2"), std::string::npos);
    EXPECT_EQ(run_cli({"verify", "--scroll", "3,3", "--checks", "nonsense"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"verify", "--scroll", "3,3", "--modulus", "32001"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
}

TEST(Cli, HelpNamesTheScrollConvention) {
    const auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("scrollres"), std::string::npos);
    EXPECT_NE(r.out.find("--scroll 3,3 is the scroll S(2,2)"), std::string::npos);
    const auto sub = run_cli({"verify", "--help"});
    EXPECT_EQ(sub.out.find("inject-fault"), std::string::npos);
}

TEST(Cli, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "scrollres_out_test.txt";
    const auto r = run_cli({"betti", "--scroll", "2,2", "--max", "3", "--out", path.string()});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    EXPECT_EQ(line, "1 4 7 8");
    std::filesystem::remove(path);
}
