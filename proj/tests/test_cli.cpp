#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(NICHOLSLAB_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string& name) { return std::string(NICHOLSLAB_SAMPLES) + "/" + name; }

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, RackInfoD3)
{
    const auto r = run("rack info D3");
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r);
    EXPECT_EQ(j["size"], 3);
    EXPECT_EQ(j["profile"]["k"]["3"], 2);
    EXPECT_EQ(j["profile"]["S"], "1/3");
    EXPECT_EQ(j["match"], "D3");
}

TEST(Cli, RackInfoAff75)
{
    const auto j = parse(run("rack info 'Aff(7,5)'"));
    EXPECT_EQ(j["profile"]["k"]["3"], 6);
    EXPECT_EQ(j["profile"]["S"], "1");
}

TEST(Cli, RackInfoFromFile)
{
    const auto r = run("rack info --file " + sample("trivial2.json"));
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r);
    EXPECT_FALSE(j["properties"]["indecomposable"].get<bool>());
    EXPECT_TRUE(j["profile"].contains("advisory"));
    EXPECT_TRUE(j["match"].is_null());
}

TEST(Cli, NotInjectiveSample)
{
    const auto j = parse(run("rack info " + sample("notinjective.json")));
    EXPECT_FALSE(j["properties"]["injective"].get<bool>());
}

TEST(Cli, InvalidInputsExitTwo)
{
    EXPECT_EQ(run("rack info nosuchrack").code, 2);
    EXPECT_EQ(run("rack info --file " + sample("not_a_rack.json")).code, 2);
    EXPECT_EQ(run("nichols D3 --field F4").code, 2);
    EXPECT_EQ(run("nichols D3 --rho x1=3").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("verify --scale huge").code, 2);
}

TEST(Cli, LongRunningIsGated)
{
    EXPECT_EQ(run("nichols 'Aff(7,3)'").code, 2);
    const auto r = run("nichols 'Aff(7,3)' --max-degree 3");
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r);
    EXPECT_TRUE(j["truncated"].get<bool>());
    EXPECT_EQ(j["dims"], nlohmann::json::parse("[1,7,28,84]"));
}

TEST(Cli, NicholsA)
{
    const auto j = parse(run("nichols A --rho x1=-1,x4=1 --field Q"));
    EXPECT_EQ(j["total"], 576);
    EXPECT_EQ(j["factorization"], nlohmann::json::parse("[2,2,3,3,4,4]"));
    EXPECT_TRUE(j["palindromic"].get<bool>());
}

TEST(Cli, NicholsTOverF2)
{
    const auto j = parse(run("nichols T --rho x1=-1,x4x2=1 --field F2"));
    EXPECT_EQ(j["total"], 36);
}

TEST(Cli, NicholsD3OverF7)
{
    const auto j = parse(run("nichols D3 --rho x1=-1 --field F7 --method both"));
    EXPECT_EQ(j["total"], 12);
    for (const auto& s : j["symmetrizer"]) EXPECT_EQ(s["rank"], s["engine"]);
}

TEST(Cli, IntegralWithChain)
{
    // abacbd with a, b, c, d = v1, v4, v3, v2
    const auto j = parse(run("nichols T --rho x1=-1,x4x2=1 --field F2 --integral v1v4v1v3v4v2 --chain 4,1,2,1,4,3"));
    EXPECT_TRUE(j["integral"]["is_integral"].get<bool>());
    EXPECT_EQ(j["integral"]["chain_value"], "1");
}

TEST(Cli, GroupCentralizer)
{
    const auto r = run("group T --centralizer x1,x4x2 --relation '(x4x2)^2=x1^4'");
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r);
    EXPECT_EQ(j["order"], 24);
    EXPECT_TRUE(j["centralizer"]["certified"].get<bool>());
}

TEST(Cli, RackIso)
{
    const auto j = parse(run("rack iso D3 " + sample("d3_relabelled.json")));
    EXPECT_TRUE(j["isomorphic"].get<bool>());
    EXPECT_FALSE(parse(run("rack iso A B"))["isomorphic"].get<bool>());
}

TEST(Cli, SearchAndCap)
{
    const auto j = parse(run("search --max-size 6"));
    EXPECT_FALSE(j["counterexample"].get<bool>());
    EXPECT_EQ(j["satisfying"].size(), 6u);
    EXPECT_EQ(run("search --max-size 9").code, 3);
}

TEST(Cli, CosetCapExitsThree)
{
    const std::string cfg = testing::TempDir() + "tiny_caps.json";
    FILE* f = fopen(cfg.c_str(), "w");
    ASSERT_NE(f, nullptr);
    fputs("{\"max_cosets\": 5}", f);
    fclose(f);
    EXPECT_EQ(run("--config " + cfg + " group C").code, 3);
}

TEST(Cli, VerifyIsDeterministic)
{
    const auto a = run("verify --criteria 1,5,7");
    const auto b = run("verify --criteria 1,5,7");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = parse(a);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["criteria"].size(), 3u);
}

TEST(Cli, TextFormat)
{
    const auto r = run("rack list --format text");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Aff(7,5)"), std::string::npos);
}
