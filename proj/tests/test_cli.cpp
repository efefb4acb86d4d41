/*
   Copyright 2026, The barrier-delay authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// End-to-end checks of the command-line tool through std::system.

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace
{

class Cli : public ::testing::Test
{
protected:
    fs::path dir;

    void SetUp() override
    {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir = fs::temp_directory_path() /
              ("barrier_delay_cli_" + std::to_string(::getpid()) + "_" + info->name());
        fs::remove_all(dir);
        fs::create_directories(dir);
    }

    void TearDown() override { fs::remove_all(dir); }

    // Runs the tool with stdout and stderr captured to files in dir.
    int run(const std::string& args)
    {
        const std::string cmd = std::string("\"") + BARRIER_DELAY_CLI + "\" " + args + " >\"" +
                                (dir / "stdout.txt").string() + "\" 2>\"" + (dir / "stderr.txt").string() +
                                "\"";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    static std::string slurp(const fs::path& p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }

    std::string out() const { return slurp(dir / "stdout.txt"); }
    std::string err() const { return slurp(dir / "stderr.txt"); }
};

} // namespace

TEST_F(Cli, ScanFigureOneIsDeterministic)
{
    ASSERT_EQ(run("scan --figure 1 --outdir \"" + (dir / "a").string() + "\""), 0) << err();
    ASSERT_EQ(run("scan --figure 1 --outdir \"" + (dir / "b").string() + "\""), 0) << err();
    const auto a = slurp(dir / "a" / "scan.csv");
    ASSERT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir / "b" / "scan.csv"));
    EXPECT_EQ(a.substr(0, a.find('\n')),
              "k0a,E,a,tau_t/tau_c,tau_1/tau_c,tau_r/tau_c,T,Tc,phi1_unwrapped,phi2_unwrapped,flags");
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 2001);
}

TEST_F(Cli, ScanFigureTwoWritesBothCurves)
{
    ASSERT_EQ(run("scan --figure 2 --format both --outdir \"" + dir.string() + "\""), 0) << err();
    EXPECT_TRUE(fs::exists(dir / "scan.csv"));
    EXPECT_TRUE(fs::exists(dir / "scan_dashed.csv"));
    EXPECT_TRUE(fs::exists(dir / "scan.svg"));
    EXPECT_TRUE(fs::exists(dir / "scan_dashed.svg"));
}

TEST_F(Cli, ScanFigureThreeFlagsThreshold)
{
    ASSERT_EQ(run("scan --figure 3 --points 101 --outdir \"" + dir.string() + "\""), 0) << err();
    EXPECT_NE(out().find("1 outside the over-barrier domain"), std::string::npos) << out();
    const auto csv = slurp(dir / "scan.csv");
    EXPECT_NE(csv.find("\n0,1,,,,,,,,,domain\n"), std::string::npos);
}

TEST_F(Cli, ConfigFileAndSelectedOutputs)
{
    std::ofstream(dir / "run.json") << R"({"ratios": {"v0e": 0.95, "v1e": 0, "v2e": 0.3},
        "scan": {"points": 11, "outputs": ["tau_r", "T"]}, "format": "svg"})";
    ASSERT_EQ(run("scan --config \"" + (dir / "run.json").string() + "\" --outdir \"" + dir.string() + "\""), 0)
        << err();
    EXPECT_TRUE(fs::exists(dir / "scan.svg"));
    EXPECT_TRUE(fs::exists(dir / "scan_T.svg"));
    EXPECT_FALSE(fs::exists(dir / "scan.csv"));
}

TEST_F(Cli, MalformedInputExitsOne)
{
    EXPECT_EQ(run(""), 1);
    EXPECT_EQ(run("scan"), 1);
    EXPECT_EQ(run("scan --figure 7"), 1);
    EXPECT_EQ(run("scan --v0e 0.9"), 1);
    EXPECT_EQ(run("scan --figure 1 --k0a-min 5 --k0a-max 1"), 1);
    std::ofstream(dir / "bad.json") << "{ not json";
    EXPECT_EQ(run("scan --config \"" + (dir / "bad.json").string() + "\""), 1);
    EXPECT_NE(err().find("malformed"), std::string::npos);
}

TEST_F(Cli, DomainErrorsExitTwo)
{
    EXPECT_EQ(run("scan --v0e 1.2 --v1e 0 --v2e 0 --outdir \"" + dir.string() + "\""), 2);
    EXPECT_EQ(run("resonances --v0e 0.9 --v1e 0.1 --v2e 0.1"), 2);
    EXPECT_NE(err().find("V1 != V2"), std::string::npos);
}

TEST_F(Cli, ResonanceTable)
{
    ASSERT_EQ(run("resonances --figure 1 --max-m 3 --outdir \"" + dir.string() + "\""), 0) << err();
    const auto csv = slurp(dir / "resonances.csv");
    EXPECT_EQ(csv, out());
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    EXPECT_NE(csv.find("\n1,3.14159265359,"), std::string::npos);
    EXPECT_NE(csv.find(",2.15895382229,-21.5382096273,-19.379255805,"), std::string::npos) << csv;
}

TEST_F(Cli, PacketCheckBound)
{
    ASSERT_EQ(run("packet --figure 1 --k0a 3.141592653589793 --w 200 --check-bound"), 0) << err();
    EXPECT_NE(out().find("restriction_satisfied = no"), std::string::npos) << out();
    ASSERT_EQ(run("packet --figure 1 --margin 3 --check-bound"), 0) << err();
    EXPECT_NE(out().find("restriction_satisfied = yes"), std::string::npos) << out();
}

TEST_F(Cli, PacketRunWritesSummary)
{
    ASSERT_EQ(run("packet --figure 1 --margin 2 --n-time 1024 --outdir \"" + dir.string() + "\""), 0) << err();
    const auto summary = slurp(dir / "packet_summary.txt");
    EXPECT_EQ(summary, out());
    EXPECT_NE(summary.find("status = reliable"), std::string::npos) << summary;
    EXPECT_NE(summary.find("restriction_satisfied = yes"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir / "packet.csv"));
}

TEST_F(Cli, PacketBelowBarrierSpectrumExitsOne)
{
    EXPECT_EQ(run("packet --figure 1 --w 5 --outdir \"" + dir.string() + "\""), 1);
    EXPECT_NE(err().find("below the barrier"), std::string::npos) << err();
}

TEST_F(Cli, PacketWarnsWhenRestrictionViolated)
{
    ASSERT_EQ(run("packet --figure 1 --margin 0.5 --n-time 1024 --outdir \"" + dir.string() + "\""), 0) << err();
    EXPECT_NE(err().find("warning"), std::string::npos);
    EXPECT_NE(out().find("status = unreliable"), std::string::npos);
}
