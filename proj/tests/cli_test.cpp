#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "diag12/cli.hpp"
#include "diag12/report_json.hpp"

using namespace diag12;
using namespace diag12::cli;

namespace {

struct GoldenCase {
    const char* name;
    std::vector<std::string> args;
    int exit_code;
};

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {"table_1", {"table", "1"}, 0},
        {"table_4", {"table", "4"}, 0},
        {"table_5_highlight", {"table", "5", "--highlight-ones"}, 0},
        {"table_12_highlight", {"table", "12", "--highlight-ones"}, 0},
        {"table_6_csv", {"table", "6", "--format", "csv"}, 0},
        {"check_24_table", {"check", "24"}, 0},
        {"check_24_table_json", {"check", "24", "--method", "table", "--json"}, 0},
        {"check_10_table", {"check", "10"}, 1},
        {"check_7_involution", {"check", "7", "--method", "involution"}, 1},
        {"check_48_theorem", {"check", "48", "--method", "theorem"}, 1},
        {"check_8_enumerate", {"check", "8", "--poly", "--vars", "1", "--method", "enumerate", "--degree", "2"}, 1},
        {"check_8_enumerate_json", {"check", "8", "--poly", "--vars", "1", "--degree", "2", "--json"}, 1},
        {"check_24_enumerate", {"check", "24", "--poly", "--vars", "1", "--degree", "2"}, 1},
        {"check_4_enumerate", {"check", "4", "--poly", "--vars", "2", "--degree", "2"}, 0},
        {"check_12_theorem", {"check", "12", "--poly", "--vars", "2", "--method", "theorem"}, 0},
        {"check_24_theorem_poly", {"check", "24", "--poly", "--vars", "3"}, 1},
        {"invert_8", {"invert", "8", "1", "2*x1 + 1"}, 0},
        {"invert_12_constant", {"invert", "12", "1", "5"}, 0},
        {"invert_24_two_vars", {"invert", "24", "2", "6*x1 + 12*x2 + 1"}, 0},
        {"invert_8_not_unit", {"invert", "8", "1", "3*x1 + 1"}, 1},
        {"invert_8_constant_not_unit", {"invert", "8", "1", "2*x1 + 4"}, 1},
        {"survey_zn_30", {"survey", "--max-n", "30"}, 0},
        {"survey_poly_30", {"survey", "--max-n", "30", "--poly", "--vars", "2"}, 0},
        {"survey_poly_enumerate", {"survey", "--max-n", "12", "--poly", "--vars", "1", "--degree", "1"}, 0},
        {"survey_zn_json", {"survey", "--max-n", "8", "--json"}, 0},
        {"survey_poly_30_one_var", {"survey", "--max-n", "30", "--poly", "--vars", "1"}, 0},
        {"survey_1", {"survey", "--max-n", "1"}, 0},
        {"check_24_method_table", {"check", "24", "--method", "table"}, 0},
        {"check_12_theorem_json", {"check", "12", "--poly", "--vars", "2", "--method", "theorem", "--json"}, 0},
    };
    return cases;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(DIAG12_GOLDEN_DIR) + "/" + name + ".out", std::ios::binary);
    if (!in) return "<missing golden " + name + ">";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CommandOutcome run(std::vector<std::string> args, std::uint64_t budget = kDefaultEnumerationBudget) {
    CliSettings settings;
    settings.limits.enumeration_budget = budget;
    return run_command(args, settings);
}

} // namespace

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFile) {
    const GoldenCase& c = GetParam();
    CommandOutcome out = run(c.args);
    EXPECT_EQ(out.exit_code, c.exit_code) << out.stderr_diagnostics;
    EXPECT_EQ(out.stdout_payload, read_golden(c.name));
    EXPECT_TRUE(out.stderr_diagnostics.empty()) << out.stderr_diagnostics;
}

TEST_P(Golden, IsReproducible) {
    const GoldenCase& c = GetParam();
    CliSettings parallel;
    parallel.limits.workers = 3;
    CommandOutcome first = run(c.args);
    CommandOutcome second = run_command(c.args, parallel);
    EXPECT_EQ(first.stdout_payload, second.stdout_payload);
    EXPECT_EQ(first.exit_code, second.exit_code);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden_cases()),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Cli, ExpectFlag) {
    EXPECT_EQ(run({"check", "12", "--poly", "--expect", "yes"}).exit_code, kExitOk);
    EXPECT_EQ(run({"check", "12", "--poly", "--expect", "no"}).exit_code, kExitNegative);
    EXPECT_EQ(run({"check", "8", "--poly", "--expect", "no"}).exit_code, kExitOk);
    EXPECT_EQ(run({"check", "8", "--poly", "--expect", "yes"}).exit_code, kExitNegative);
    EXPECT_EQ(run({"check", "24", "--expect", "yes"}).exit_code, kExitOk);
    EXPECT_EQ(run({"check", "5", "--method", "involution", "--expect", "no"}).exit_code, kExitOk);
}

TEST(Cli, UsageErrors) {
    const std::vector<std::vector<std::string>> bad = {
        {},
        {"frobnicate"},
        {"table"},
        {"table", "0"},
        {"table", "-4"},
        {"table", "4", "--format", "xml"},
        {"table", "abc"},
        {"check", "0"},
        {"check", "12", "--vars", "2"},
        {"check", "12", "--poly", "--vars", "0"},
        {"check", "12", "--poly", "--method", "table"},
        {"check", "12", "--poly", "--method", "involution"},
        {"check", "12", "--method", "enumerate"},
        {"check", "12", "--poly", "--method", "theorem", "--degree", "2"},
        {"check", "12", "--method", "guess"},
        {"check", "12", "--expect", "maybe"},
        {"invert", "8", "1"},
        {"invert", "8", "1", "2*x2 + 1"},
        {"invert", "8", "1", "2*x1 - 1"},
        {"invert", "8", "1", "2*x1 + 1 (mod 4)"},
        {"invert", "8", "0", "1"},
        {"survey"},
        {"survey", "--max-n", "0"},
    };
    for (const auto& args : bad) {
        CommandOutcome out = run(args);
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        EXPECT_EQ(out.exit_code, kExitUsage) << joined;
        EXPECT_FALSE(out.stderr_diagnostics.empty()) << joined;
        EXPECT_TRUE(out.stdout_payload.empty()) << joined;
    }
}

TEST(Cli, HelpIsNotAnError) {
    CommandOutcome out = run({"--help"});
    EXPECT_EQ(out.exit_code, kExitOk);
}

TEST(Cli, ParseErrorReportsPosition) {
    CommandOutcome out = run({"invert", "8", "2", "2*x1 + x3"});
    EXPECT_EQ(out.exit_code, kExitUsage);
    EXPECT_NE(out.stderr_diagnostics.find("parse error"), std::string::npos);
    EXPECT_NE(out.stderr_diagnostics.find("at position 7:"), std::string::npos) << out.stderr_diagnostics;
}

TEST(Cli, BudgetRefusal) {
    CommandOutcome refused = run({"check", "4", "--poly", "--vars", "2", "--degree", "2"}, 4095);
    EXPECT_EQ(refused.exit_code, kExitUsage);
    EXPECT_NE(refused.stderr_diagnostics.find("budget exceeded"), std::string::npos);
    EXPECT_TRUE(refused.stdout_payload.empty());
    EXPECT_EQ(run({"check", "4", "--poly", "--vars", "2", "--degree", "2"}, 4096).exit_code, kExitOk);

    CommandOutcome big = run({"check", "24", "--poly", "--vars", "2", "--degree", "2"});
    EXPECT_EQ(big.exit_code, kExitUsage);
    EXPECT_NE(big.stderr_diagnostics.find("191102976"), std::string::npos) << big.stderr_diagnostics;

    EXPECT_EQ(run({"table", "100001"}).exit_code, kExitUsage);
}

TEST(Cli, JsonOutputRoundTrips) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"check", "24", "--json"},
             {"check", "10", "--json"},
             {"check", "7", "--method", "involution", "--json"},
             {"check", "9", "--method", "theorem", "--json"},
             {"check", "8", "--poly", "--degree", "2", "--json"},
             {"check", "6", "--poly", "--vars", "2", "--degree", "2", "--json"},
             {"check", "20", "--poly", "--vars", "3", "--json"},
         }) {
        CommandOutcome out = run(args);
        auto doc = nlohmann::ordered_json::parse(out.stdout_payload);
        DiagonalReport report = report_from_json(doc);
        EXPECT_TRUE(report.is_consistent());
        EXPECT_EQ(report_to_json(report).dump(2) + "\n", out.stdout_payload);
        EXPECT_EQ(out.exit_code, report.verdict ? kExitOk : kExitNegative);
    }
}

TEST(Cli, SurveyJsonListsPositives) {
    CommandOutcome out = run({"survey", "--max-n", "30", "--poly", "--vars", "1", "--json"});
    auto doc = nlohmann::ordered_json::parse(out.stdout_payload);
    EXPECT_EQ(doc["positives"], nlohmann::ordered_json::parse("[1,2,3,4,6,12]"));
    ASSERT_EQ(doc["reports"].size(), 30u);
    for (const auto& r : doc["reports"]) EXPECT_TRUE(report_from_json(r).is_consistent());
}

TEST(Cli, ParseBudget) {
    EXPECT_EQ(parse_budget("1"), 1u);
    EXPECT_EQ(parse_budget("200000000"), 200000000u);
    EXPECT_FALSE(parse_budget("").has_value());
    EXPECT_FALSE(parse_budget("0").has_value());
    EXPECT_FALSE(parse_budget("-5").has_value());
    EXPECT_FALSE(parse_budget("12abc").has_value());
    EXPECT_FALSE(parse_budget(" 12").has_value());
    EXPECT_FALSE(parse_budget("99999999999999999999999").has_value());
}
