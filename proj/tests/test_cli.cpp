#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "pfstringy/errors.hpp"

using namespace pfs;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "pfstringy");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, StringyFormats) {
    Invocation text = invoke({"stringy", "--n", "6", "--k", "2"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("factored: (q^3 - 1)*(q^5 - 1)*(q^12 - 1) / ((q - 1)*(q^2 - 1)*(q^4 - 1))"),
              std::string::npos);
    EXPECT_NE(text.out.find("polynomial: no"), std::string::npos);

    Invocation json = invoke({"stringy", "--n", "6", "--k", "2", "--kind", "modified", "--format", "json"});
    ASSERT_EQ(json.code, 0);
    auto j = nlohmann::json::parse(json.out);
    EXPECT_EQ(j["kind"], "modified");
    EXPECT_EQ(j["polynomial"], true);
    EXPECT_EQ(eval_at(parse_ratfunc(j["value"].get<std::string>()), mpq_class(2)), 21483);
    EXPECT_EQ(parse_ratfunc(j["value"].get<std::string>()), parse_ratfunc(j["factored"].get<std::string>()));

    Invocation csv = invoke({"--format", "csv", "stringy", "--n", "6", "--k", "2"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,k,kind,value,factored,polynomial");

    Invocation tex = invoke({"stringy", "--n", "6", "--k", "2", "--format", "latex"});
    ASSERT_EQ(tex.code, 0);
    EXPECT_NE(tex.out.find("\\frac"), std::string::npos);
}

TEST(Cli, MethodsAreByteIdentical) {
    for (const char *kind : {"usual", "modified"})
        for (const char *n : {"4", "6", "8"}) {
            Invocation a = invoke({"stringy", "--n", n, "--k", "2", "--kind", kind, "--method", "closed", "--format", "json"});
            Invocation b = invoke({"stringy", "--n", n, "--k", "2", "--kind", kind, "--method", "strata", "--format", "json"});
            EXPECT_EQ(a.code, 0);
            EXPECT_EQ(a.out, b.out);
        }
    Invocation a = invoke({"cut-f", "--n", "8", "--k", "2", "--i", "3"});
    Invocation b = invoke({"cut-f", "--n", "8", "--k", "2", "--i", "3", "--method", "recursive"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OtherCommands) {
    Invocation iso = invoke({"l-iso", "--k", "1", "--i", "2", "--n", "4", "--format", "json"});
    ASSERT_EQ(iso.code, 0);
    EXPECT_EQ(nlohmann::json::parse(iso.out)["value"], "q^3 + q^2 + q + 1");

    Invocation rel = invoke({"relate", "--n", "6", "--k", "1", "--l", "6", "--format", "json"});
    ASSERT_EQ(rel.code, 0);
    auto r = nlohmann::json::parse(rel.out);
    EXPECT_EQ(r["euler_gap"], "-3");
    EXPECT_EQ(r["X"], "CY");
    EXPECT_EQ(r["dim_Y"], 4);

    Invocation sod = invoke({"sod", "--n", "7", "--k", "1", "--l", "5", "--side", "X", "--format", "json"});
    ASSERT_EQ(sod.code, 0);
    auto s = nlohmann::json::parse(sod.out);
    EXPECT_EQ(s["blocks"][0]["count"], 2);
    EXPECT_EQ(s["blocks"][0]["size"], 3);

    Invocation fig = invoke({"figure-check"});
    EXPECT_EQ(fig.code, 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, cli::usage);
    EXPECT_EQ(invoke({"stringy", "--n", "6"}).code, cli::usage);
    EXPECT_EQ(invoke({"stringy", "--n", "5", "--k", "1", "--kind", "modified"}).code, cli::usage);
    EXPECT_EQ(invoke({"stringy", "--n", "6", "--k", "4"}).code, cli::usage);
    EXPECT_EQ(invoke({"stringy", "--n", "6", "--k", "1", "--kind", "odd"}).code, cli::usage);
    EXPECT_EQ(invoke({"cut-f", "--n", "7", "--k", "1", "--i", "1"}).code, cli::usage);
    EXPECT_EQ(invoke({"--format", "yaml", "stringy", "--n", "6", "--k", "1"}).code, cli::usage);
    EXPECT_EQ(invoke({"verify", "--suite", "lemma", "--grid", "x=1..2"}).code, cli::usage);
    EXPECT_EQ(invoke({"verify", "--suite", "nope"}).code, cli::usage);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::usage);
    Invocation bad = invoke({"sod", "--n", "6", "--k", "1", "--l", "99"});
    EXPECT_EQ(bad.code, cli::usage);
    EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, GridParsing) {
    cli::GridRanges g = cli::parse_grid({"n=4..14,e=-4..8", "s=3..3"});
    EXPECT_EQ(g.at("n"), std::make_pair(4L, 14L));
    EXPECT_EQ(g.at("e"), std::make_pair(-4L, 8L));
    EXPECT_EQ(g.at("s").second, 3);
    EXPECT_THROW(cli::parse_grid({"n=4-14"}), Error);
    EXPECT_THROW(cli::parse_grid({"n=9..4"}), Error);
}

TEST(Cli, VerifySuites) {
    Invocation lemma = invoke({"verify", "--suite", "lemma", "--grid", "n=4..14"});
    EXPECT_EQ(lemma.code, 0);
    EXPECT_NE(lemma.out.find("PASS"), std::string::npos);
    EXPECT_EQ(lemma.out.find("FAIL"), std::string::npos);

    Invocation json = invoke({"--threads", "2", "verify", "--suite", "f", "--grid", "n=2..8", "--format", "json"});
    ASSERT_EQ(json.code, 0);
    auto j = nlohmann::json::parse(json.out);
    EXPECT_EQ(j["passed"], true);
    EXPECT_GE(j["suites"].size(), 2u);

    Invocation csv = invoke({"verify", "--suite", "lemma", "--grid", "n=4..6", "--format", "csv"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.rfind("suite,", 0), 0u);
}

TEST(Cli, FailingReportsRender) {
    VerificationReport r;
    r.identity = "made up";
    r.grid = {{"n", 1, 2}};
    PointOutcome bad;
    bad.point = {2};
    bad.status = PointStatus::fail;
    bad.lhs = "q";
    bad.rhs = "1";
    bad.check = "lhs vs rhs";
    r.add(std::move(bad), false);
    std::string text = cli::render_reports({r}, cli::Format::text);
    EXPECT_NE(text.find("FAIL"), std::string::npos);
    auto j = nlohmann::json::parse(cli::render_reports({r}, cli::Format::json));
    EXPECT_EQ(j["passed"], false);
}

TEST(Cli, OutputFile) {
    std::string path = ::testing::TempDir() + "pfstringy_cli_out.json";
    Invocation r = invoke({"--format", "json", "-o", path, "l-iso", "--k", "1", "--i", "1", "--n", "4"});
    ASSERT_EQ(r.code, 0);
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["k"], 1);
    std::remove(path.c_str());
}

#ifdef PFSTRINGY_CLI_PATH
TEST(Cli, BinaryExitCodes) {
    auto status = [](const std::string &args) {
        std::string cmd = std::string(PFSTRINGY_CLI_PATH) + " " + args + " >/dev/null 2>&1";
        int raw = std::system(cmd.c_str());
        return WEXITSTATUS(raw);
    };
    EXPECT_EQ(status("stringy --n 6 --k 2"), 0);
    EXPECT_EQ(status("stringy --n 6"), 2);
    EXPECT_EQ(status("verify --suite lemma --grid n=4..8"), 0);
}
#endif
