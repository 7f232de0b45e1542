#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.h"
#include "qec/clifford.h"
#include "qec/cssea.h"
#include "qec/stabilizer.h"

namespace qec::cli {
namespace {

namespace fs = std::filesystem;

CommandOutcome call(std::vector<std::string> args, const std::string &stdin_text = "") {
    std::istringstream in(stdin_text);
    return run(args, in);
}

class TempDir : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST(Cli, BuiltinPipedIntoVerify) {
    auto code = call({"builtin", "six_qubit_degenerate"});
    ASSERT_EQ(code.exit_code, kOk);
    auto v = call({"verify"}, code.text);
    EXPECT_EQ(v.exit_code, kOk);
    EXPECT_NE(v.text.find("products corrected: 171/171"), std::string::npos) << v.text;
    auto dash = call({"verify", "-"}, code.text);
    EXPECT_EQ(dash.text, v.text);
}

TEST(Cli, DistancePrintsThree) {
    auto out = call({"distance"}, format_code(builtin_code(BuiltinCode::six_qubit_degenerate)));
    EXPECT_EQ(out.exit_code, kOk);
    EXPECT_EQ(out.text.substr(0, 2), "3\n");
    EXPECT_EQ(out.report["distance"], 3);
    auto limited = call({"distance", "--max-weight", "2"}, format_code(builtin_code(BuiltinCode::steane)));
    EXPECT_TRUE(limited.report["distance"].is_null());
    auto global = call({"--json", "distance", "--global"}, format_code(builtin_code(BuiltinCode::ea_613)));
    EXPECT_EQ(global.report["distance"], 3);
}

TEST(Cli, SearchSixQubitHasNoSurvivors) {
    auto out = call({"--json", "search", "css", "--n", "6", "--k", "1", "--d", "3"});
    EXPECT_EQ(out.exit_code, kOk);
    EXPECT_EQ(out.report["survivor_count"], 0);
    EXPECT_EQ(out.report["schema"], 1);
    EXPECT_EQ(out.report["census"].size(), 6u);
    EXPECT_NE(out.rendered().find("\"schema\": 1"), std::string::npos);
}

TEST(Cli, NonCommutingRowsExitOne) {
    auto out = call({"verify"}, "[stabilizer]\nXII\nZZI\nIZZ\n");
    EXPECT_EQ(out.exit_code, kVerificationFailure);
    EXPECT_NE(out.text.find("rows 1 2"), std::string::npos) << out.text;
    EXPECT_EQ(out.report["diagnostic"]["rows"], nlohmann::json({1, 2}));
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(call({}).exit_code, kUsageError);
    EXPECT_EQ(call({"frobnicate"}).exit_code, kUsageError);
    EXPECT_EQ(call({"distance", "--bogus"}).exit_code, kUsageError);
    EXPECT_EQ(call({"builtin", "nope"}).exit_code, kUsageError);
    EXPECT_EQ(call({"verify", "/nonexistent/file"}).exit_code, kUsageError);
    EXPECT_EQ(call({"verify"}, "[stabilizer]\nXQ\n").exit_code, kUsageError);
    auto bad = call({"--json", "search", "css", "--n", "5", "--ebits", "2"});
    EXPECT_EQ(bad.exit_code, kUsageError);
    EXPECT_EQ(bad.report["schema"], 1);
    EXPECT_TRUE(bad.report.contains("error"));
}

TEST(Cli, CapacityErrorExitsThree) {
    EXPECT_EQ(call({"search", "css", "--n", "8", "--ebits", "1"}).exit_code, kCapacityError);
    std::string wide = "[stabilizer]\n" + std::string(15, 'Z') + "\n";
    EXPECT_EQ(call({"codewords"}, wide).exit_code, kCapacityError);
}

TEST(Cli, HelpExitsZero) {
    auto out = call({"--help"});
    EXPECT_EQ(out.exit_code, kOk);
    EXPECT_NE(out.text.find("search"), std::string::npos);
}

TEST(Cli, CodewordsExactForm) {
    auto out = call({"codewords", "--eigenvalues=-1,-1,1,1,1"},
                    format_code(builtin_code(BuiltinCode::six_qubit_degenerate)));
    ASSERT_EQ(out.exit_code, kOk) << out.text;
    EXPECT_NE(out.text.find("+1/√8 |000000>"), std::string::npos) << out.text;
    EXPECT_NE(out.text.find("-1/√8 |100111>"), std::string::npos);
    EXPECT_NE(out.text.find("-1/√8 |111111>"), std::string::npos);
    EXPECT_EQ(out.report["codewords"].size(), 2u);
    EXPECT_EQ(call({"codewords", "--eigenvalues", "1,2"}, format_code(builtin_code(BuiltinCode::steane))).exit_code,
              kUsageError);
}

TEST_F(TempDir, EveryBuiltinRoundTripsThroughFiles) {
    for (auto b : all_builtins()) {
        const std::string f = path(std::string(builtin_name(b)) + ".code");
        ASSERT_EQ(call({"builtin", std::string(builtin_name(b)), "-o", f}).exit_code, kOk);
        auto v = call({"verify", f});
        EXPECT_EQ(v.exit_code, kOk) << builtin_name(b) << "\n" << v.text;
    }
}

TEST_F(TempDir, SynthWritesReplayableCircuit) {
    const std::string code_file = path("ea.code"), circ = path("enc.txt");
    save_code_file(builtin_code(BuiltinCode::ea_613), code_file);
    auto out = call({"--json", "synth", code_file, "-o", circ});
    ASSERT_EQ(out.exit_code, kOk) << out.text;
    auto circuit = CliffordCircuit::parse(read_text_file(circ), 6);
    EXPECT_EQ(circuit.size(), out.report["encoder"]["gates"].size());
    EXPECT_EQ(out.report["hash_chain"].size(), out.report["reduction"].size() + 1);
    EXPECT_EQ(out.report["columns"]["ebit"], nlohmann::json({1}));
}

TEST_F(TempDir, CssAndEaBuild) {
    const std::string h7 = path("h7.txt"), h6 = path("h6.txt");
    write_text_file(h7, format_parity_check(hamming_7_4()));
    write_text_file(h6, format_parity_check(delete_column(hamming_7_4(), 6)));
    auto steane = call({"css-build", h7, h7});
    EXPECT_EQ(steane.exit_code, kOk) << steane.text;
    EXPECT_EQ(call({"distance"}, steane.text).text.substr(0, 2), "3\n");

    auto trunc = call({"--json", "css-build", h6, h6});
    EXPECT_EQ(trunc.exit_code, kVerificationFailure);
    EXPECT_EQ(trunc.report["min_ebits"], 1);

    const std::string gens = path("gens.txt");
    write_text_file(gens, "ZIIZIZ\nIZIZZI\nIIZIZZ\nXIIXIX\nIXIXXI\nIIXIXX\n");
    auto gs = call({"--json", "gram-schmidt", gens});
    EXPECT_EQ(gs.report["ebits"], 1);
    auto ea = call({"ea-build", gens});
    ASSERT_EQ(ea.exit_code, kOk);
    auto code = parse_code(ea.text);
    EXPECT_EQ(code.ebits(), 1u);
    EXPECT_EQ(call({"verify"}, ea.text).exit_code, kOk);
}

TEST(Cli, ReduceEbitAndSteaneEquiv) {
    auto red = call({"--json", "reduce-ebit", "--qubit", "3"},
                    format_code(builtin_code(BuiltinCode::six_qubit_degenerate)));
    EXPECT_EQ(red.exit_code, kOk);
    EXPECT_EQ(red.report["code"]["bob_columns"], nlohmann::json({3}));
    EXPECT_EQ(red.report["alice_products_corrected"], red.report["alice_products_checked"]);
    EXPECT_EQ(call({"reduce-ebit", "--qubit", "0"}, format_code(builtin_code(BuiltinCode::steane))).exit_code,
              kUsageError);

    auto st = call({"--json", "steane-equiv"}, format_code(builtin_code(BuiltinCode::ea_613)));
    EXPECT_EQ(st.exit_code, kOk);
    EXPECT_EQ(st.report["code"]["n"], 7);
    EXPECT_TRUE(st.report["code"]["bob_columns"].empty());
}

TEST(Cli, JobsFromEnvironment) {
    ::setenv("QEC_JOBS", "2", 1);
    auto out = call({"--json", "search", "css", "--n", "4", "--ebits", "1"});
    ::unsetenv("QEC_JOBS");
    EXPECT_EQ(out.report["jobs"], 2);
    auto explicit_jobs = call({"--json", "search", "css", "--n", "4", "--ebits", "1", "--jobs", "3"});
    EXPECT_EQ(explicit_jobs.report["jobs"], 3);
}

TEST(Cli, ReportsAreDeterministic) {
    auto strip = [](nlohmann::json j) {
        j.erase("wall_seconds");
        j.erase("jobs");
        return j.dump();
    };
    auto a = call({"--json", "search", "css", "--n", "5", "--ebits", "1", "--jobs", "1"});
    auto b = call({"--json", "search", "css", "--n", "5", "--ebits", "1", "--jobs", "2"});
    EXPECT_EQ(strip(a.report), strip(b.report));
    EXPECT_EQ(a.report["survivor_count"], 20);
}

TEST_F(TempDir, SearchReportFile) {
    const std::string rep = path("report.json");
    ASSERT_EQ(call({"search", "css", "--n", "4", "--ebits", "1", "--report", rep}).exit_code, kOk);
    auto j = nlohmann::json::parse(read_text_file(rep));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["survivor_count"], 0);
}

#ifdef QEC_BINARY
TEST(CliBinary, ShellPipeline) {
    const std::string bin = QEC_BINARY;
    const std::string cmd = bin + " builtin six_qubit_degenerate | " + bin + " verify > /dev/null";
    EXPECT_EQ(std::system(cmd.c_str()), 0);
    const std::string bad = "printf '[stabilizer]\\nXI\\nZI\\n' | " + bin + " verify > /dev/null";
    int status = std::system(bad.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 1);
    status = std::system((bin + " nonsense 2> /dev/null").c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
}
#endif

}  // namespace
}  // namespace qec::cli
