#include "cli_runner.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

using umbral::testing::golden;
using umbral::testing::run_cli;

TEST(Cli, TextOutputs) {
    EXPECT_EQ(run_cli("bernoulli 6").out, "1, -1/2, 1/6, 0, -1/30, 0, 1/42\n");
    EXPECT_EQ(run_cli("moments uniform 3").out, "1, 1/2, 1/3, 1/4\n");
    EXPECT_EQ(run_cli("dot const:2 uniform 3").out, "1, 1, 7/6, 3/2\n");
    EXPECT_EQ(run_cli("abel const:1 3").out, "1; x; x^2+2x; x^3+6x^2+9x\n");
    EXPECT_EQ(run_cli("rising const:1 4").out, "1; x; x^2+x; x^3+3x^2+2x; x^4+6x^3+11x^2+6x\n");
    EXPECT_EQ(run_cli("appell bernoulli 2").out, "1; x-1/2; x^2-x+1/6\n");
    EXPECT_EQ(run_cli("sheffer binomial:const:1 const:1 2").out, "1; x+1; x^2+2x+1\n");
    EXPECT_EQ(run_cli("from-delta 'exp(t)-1' 3").out, "1; x; x^2-x; x^3-3x^2+2x\n");
    EXPECT_EQ(run_cli("compose 'binomial:egf:exp(exp(z)-1)' binomial:list:1,0,0,0 3").out, "1; x; x^2; x^3\n");
    EXPECT_EQ(run_cli("ksequence const:1 3 --c 0,1").out, "1; 2a_1; 2a_1^2+2a_2; 6a_1*a_2+2a_3\n");
    EXPECT_EQ(run_cli("eval '(2.a)^2' --umbra a=generic:a").out, "2a_1^2+2a_2\n");
    EXPECT_EQ(run_cli("-N 3 bernoulli").out, "1, -1/2, 1/6, 0\n");
}

TEST(Cli, Oracles) {
    EXPECT_EQ(run_cli("oracle stirling2 5 2").out, "15\n");
    EXPECT_EQ(run_cli("oracle stirling1 4 2").out, "11\n");
    EXPECT_EQ(run_cli("oracle forests 4 1 1,1,1,1").out, "125\n");
    EXPECT_EQ(run_cli("oracle difference 2 3").out, "30\n");
    auto j = nlohmann::json::parse(run_cli("--json oracle increasing 2 1 2,1").out);
    EXPECT_EQ(j.at("value"), "6");
}

TEST(Cli, JsonSequence) {
    auto r = run_cli("--json rising const:1 2");
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("entries").size(), 3u);
    EXPECT_EQ(j.at("provenance").at("origin"), "rising");
}

TEST(Cli, Blissard) {
    auto r = run_cli("blissard 1 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("P_2 = -1/12"), std::string::npos);
    EXPECT_NE(r.out.find("3/3 methods agree"), std::string::npos);
    auto j = nlohmann::json::parse(run_cli("--json blissard 2 4").out);
    EXPECT_EQ(j.at("methods_agreeing"), 3);
}

TEST(Cli, VerifySuites) {
    for (const char* suite : {"bernoulli", "blissard", "oracle", "dot", "binomial", "delta", "sheffer", "multiplicative"}) {
        auto r = run_cli(std::string("verify ") + suite);
        EXPECT_EQ(r.status, 0) << suite << "\n" << r.out;
        EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("").status, 2);
    EXPECT_EQ(run_cli("frobnicate").status, 2);
    EXPECT_EQ(run_cli("moments nope 3").status, 2);
    EXPECT_EQ(run_cli("bernoulli 0").status, 2);
    EXPECT_EQ(run_cli("verify nosuchsuite").status, 2);
    EXPECT_EQ(run_cli("moments list:1,2 5").status, 1);
    EXPECT_EQ(run_cli("eval 'v^2'").status, 2);
}

TEST(Cli, GoldenFilesAreReproduced) {
    EXPECT_EQ(run_cli("bernoulli 12").out, golden("bernoulli_12.txt"));
    EXPECT_EQ(run_cli("rising const:1 6").out, golden("rising_const1_6.txt"));
    EXPECT_EQ(run_cli("blissard 2 6").out, golden("blissard_2_6.txt"));
}
