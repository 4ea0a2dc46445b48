/*
 *   Copyright 2026 The pastures authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Runs the CLI and compares its output with files under tests/golden.
// Set PASTURES_UPDATE_GOLDEN=1 to rewrite them.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PASTURES_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden_path(const std::string& name) { return std::string(PASTURES_GOLDEN_DIR) + "/" + name; }

void check_golden(const std::string& name, const std::string& args, int expected_code = 0) {
    Run r = run(args);
    EXPECT_EQ(r.code, expected_code) << args;
    const std::string path = golden_path(name);
    if (std::getenv("PASTURES_UPDATE_GOLDEN")) {
        std::ofstream(path) << r.out;
        return;
    }
    std::ifstream in(path);
    ASSERT_TRUE(in) << "missing golden file " << path;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(r.out, ss.str()) << args;
}

}  // namespace

TEST(CliGolden, PastureJson) { check_golden("pasture_F5.json", "pasture --json F5"); }
TEST(CliGolden, ProductJson) { check_golden("pasture_F4xF5.json", "pasture --json 'F4 x F5'"); }
TEST(CliGolden, HexagonsJson) { check_golden("hexagons_F7.json", "hexagons --json F7"); }
TEST(CliGolden, HexagonsText) { check_golden("hexagons_F13.txt", "hexagons F13"); }
TEST(CliGolden, TernaryLiftJson) { check_golden("lift_ternary_F9.json", "lift --kind ternary --json F9"); }
TEST(CliGolden, GrsLiftJson) { check_golden("lift_grs_F4xF5.json", "lift --kind grs --json 'F4 x F5'"); }
TEST(CliGolden, HomJson) { check_golden("hom_H_F7.json", "hom --json --list H F7"); }
TEST(CliGolden, IsoText) { check_golden("iso_glift.txt", "iso 'Lg(F4 x F5)' G"); }
TEST(CliGolden, RepsJson) {
    check_golden("reps_U24_F5.json", "reps --json --list --matroid " + golden_path("u24.json") + " --pasture F5");
}
TEST(CliGolden, LiftCheckJson) {
    check_golden("liftcheck_U24_F4.json",
                 "lift-check --json --matroid " + golden_path("u24.json") + " --pasture F4 --kind ternary");
}
TEST(CliGolden, VerifyTable2Json) { check_golden("verify_table2.json", "verify --json table2"); }

TEST(CliExit, Codes) {
    EXPECT_EQ(run("iso F4 F5").code, 1);
    EXPECT_EQ(run("iso 'F1pm<x>//(x - x)' 'F1pm<y>//(y - y)'").code, 2);
    EXPECT_EQ(run("pasture 'F4 x'").code, 3);
    EXPECT_EQ(run("pasture F6").code, 3);
    EXPECT_EQ(run("frobnicate").code, 3);
    EXPECT_EQ(run("lift --kind sideways F5").code, 3);
    EXPECT_EQ(run("--max-candidates 5 hom U 'F13 x F11'").code, 2);
    EXPECT_EQ(run("lift-check --matroid " + golden_path("u24.json") + " --pasture F4 --kind binary").code, 1);
    EXPECT_EQ(run("verify table1 --max-q 32").code, 0);
}
