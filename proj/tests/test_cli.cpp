#include <cstdio>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "qwig/io.hpp"
#include "sweep.hpp"

using namespace qwig;
using io::json;

namespace {

struct CliResult {
    int status;
    std::string out;
};

CliResult qwig_run(const std::string& args)
{
    std::string cmd = std::string(QWIG_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

// every "text"/"value" string in the document
void collect(const json& j, std::vector<std::pair<std::string, json>>& out)
{
    if (j.is_object()) {
        if (j.contains("text") && j.contains("num")) out.emplace_back(j["text"].get<std::string>(), j);
        for (const auto& [k, v] : j.items()) collect(v, out);
    } else if (j.is_array()) {
        for (const auto& v : j) collect(v, out);
    }
}

} // namespace

TEST(Cli, WignerExample)
{
    CliResult r = qwig_run("wigner --weight \"1,0|0\" --lower \"0,0\" --kind lower");
    ASSERT_EQ(r.status, 0);
    json j = json::parse(r.out);
    ASSERT_EQ(j["entries"].size(), 2u);
    EXPECT_EQ(j["entries"][0]["k"], 1);
    EXPECT_EQ(j["entries"][0]["value"], "-q^-2");
    EXPECT_EQ(j["entries"][1]["k"], 3);
    EXPECT_EQ(j["entries"][1]["value"], "1+q^-2");
    EXPECT_EQ(j["sum"], "1");
    EXPECT_EQ(j["branching"]["I0"], json({1}));
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(qwig_run("").status, 2);
    EXPECT_EQ(qwig_run("frobnicate").status, 2);
    EXPECT_EQ(qwig_run("roots --weight \"0,1|0\"").status, 2);
    EXPECT_EQ(qwig_run("roots --weight \"x|0\"").status, 2);
    EXPECT_EQ(qwig_run("wigner --weight \"1,0|0\" --lower \"0,0\" --kind sideways").status, 2);
    CliResult e = qwig_run("wigner --weight \"1|0\" --lower \"0\"");
    EXPECT_EQ(e.status, 1);
    EXPECT_EQ(json::parse(e.out)["error"]["code"], "DegenerateRoots");
    CliResult f = qwig_run("wigner --weight \"1,0|0\" --lower \"5,0\"");
    EXPECT_EQ(f.status, 1);
    EXPECT_EQ(json::parse(f.out)["error"]["code"], "NotABranching");
    EXPECT_EQ(qwig_run("roots --weight \"2,1|0\"").status, 0);
}

TEST(Cli, Subcommands)
{
    json r = json::parse(qwig_run("roots --weight \"1|0\" --variant adjoint").out);
    EXPECT_TRUE(r["roots"].contains("adjoint"));
    EXPECT_FALSE(r["roots"].contains("dual"));
    EXPECT_EQ(r["roots"]["adjoint"]["classical"], json({1, -1}));
    json r3 = json::parse(qwig_run("roots --weight \"1,0|0\" --variant adjoint").out);
    EXPECT_EQ(r3["roots"]["adjoint"]["classical"], json({1, -1, -2}));

    json b = json::parse(qwig_run("branch --weight \"1,0|0\"").out);
    ASSERT_TRUE(b.is_array());
    EXPECT_EQ(b.size(), 4u);
    EXPECT_EQ(b[0]["lower"], "0,-1|");

    json i = json::parse(qwig_run("invariants --weight \"0|0\"").out);
    EXPECT_EQ(i["C1"]["text"], "0");
    EXPECT_EQ(i["v"]["text"], "1");
    EXPECT_EQ(qwig_run("verify --m 2 --n 0").status, 2);

    json c = json::parse(qwig_run("wigner --weight \"2,0|0\" --lower \"1,0\" --coupled --form both").out);
    EXPECT_TRUE(c["coupled"]["forms_agree"].get<bool>());
    EXPECT_TRUE(c["mu"]["forms_agree"].get<bool>());

    CliResult csv = qwig_run("wigner --weight \"1,0|0\" --lower \"0,0\" --csv");
    ASSERT_EQ(csv.status, 0);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "k,r,value_string,value_json");
    EXPECT_NE(csv.out.find("3,,\"1+q^-2\""), std::string::npos);

    CliResult v = qwig_run("verify --m 1 --n 1 --suite qybe");
    EXPECT_EQ(v.status, 0);
    EXPECT_TRUE(json::parse(v.out)["pass"].get<bool>());
    CliResult vn = qwig_run("verify --m 2 --n 2 --suite coproduct --numeric 0.7");
    EXPECT_EQ(vn.status, 0);
}

TEST(Cli, OutFile)
{
    std::string path = testing::TempDir() + "qwig_out.json";
    CliResult r = qwig_run("--out " + path + " invariants --weight \"1|0\"");
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    FILE* f = fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    fclose(f);
}

TEST(Cli, Deterministic)
{
    for (const char* a : {"wigner --weight \"2,1|1\" --lower \"1,1\" --coupled --form both", "verify --m 2 --n 1 --suite wigner --jobs 3",
                          "roots --weight \"3,1|2,0\""}) {
        CliResult x = qwig_run(a), y = qwig_run(a);
        EXPECT_EQ(x.status, y.status);
        EXPECT_EQ(x.out, y.out) << a;
    }
}

// every emitted fraction string re-parses to the structured value next to it
TEST(Cli, StringsRoundTrip)
{
    std::vector<std::pair<std::string, json>> all;
    for (const char* a : {"wigner --weight \"2,1|1\" --lower \"1,1\" --coupled --form both", "wigner --weight \"2,0|1,0\" --lower \"1,0|1\" --kind raise",
                          "invariants --weight \"2,1|1,-1\""})
        collect(json::parse(qwig_run(a).out), all);
    ASSERT_GT(all.size(), 10u);
    for (const auto& [text, j] : all) EXPECT_EQ(parse_qfraction(text), io::qfraction_from_json(j)) << text;
}

// --form both over the generic sweep, through the same code path the CLI uses
TEST(Cli, FormsAgreeOnSweep)
{
    long bad = 0;
    auto st = sweep::for_each_branching(3, 2, -1, 2, [&](const BranchingData& b) {
        for (Kind k : {Kind::lower, Kind::raise}) {
            bad += !io::tables_json([&](Form f) { return omega(b, k, f); }, "both")["forms_agree"].get<bool>();
            bad += !io::tables_json([&](Form f) { return omega_coupled_table(b, k, f); }, "both")["forms_agree"].get<bool>();
            bad += !io::tables_json([&](Form f) { return mu_table(b, k, f); }, "both")["forms_agree"].get<bool>();
        }
    });
    EXPECT_EQ(bad, 0);
    EXPECT_GT(st.generic, 500);
}
