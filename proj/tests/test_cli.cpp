/*
   Copyright 2026 The lietype Authors

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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const char* exe = std::getenv("LIETYPE_CLI");
    if (!exe) exe = "./lietype";
    const std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return r;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, k);
    const int w = pclose(f);
    r.status = WIFEXITED(w) ? WEXITSTATUS(w) : -1;
    return r;
}

nlohmann::json json_of(const std::string& args) {
    const auto r = run(args + " --json");
    EXPECT_EQ(r.status, 0) << args;
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, OrdersE8) {
    auto j = json_of("orders --type E --rank 8 --q 2");
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["order"], "337804753143634806261388190614085595079991692242467651576160959909068800000");
    EXPECT_EQ(j["weyl_order"], "696729600");
    EXPECT_EQ(j["positive_roots"], 120);
}

TEST(Cli, ChartableGL22) {
    auto j = json_of("chartable --family gl --n 2 --q 2");
    EXPECT_EQ(j["degrees"], (nlohmann::json{1, 1, 2}));
    EXPECT_EQ(j["characters"].size(), 3u);
    auto t = run("chartable --family gl --n 2 --q 2 --format tsv");
    EXPECT_EQ(t.status, 0);
    EXPECT_EQ(t.out.substr(0, t.out.find('\n')), "chi\tdegree\tc0\tc1\tc2");
}

TEST(Cli, DeterministicJson) {
    for (const char* args : {"chartable --family gl --n 2 --q 3 --seed 17 --json", "duality --group gl --n 2 --q 3 --json",
                             "tori --family u --n 3 --q 2 --json", "oct verify --p 7 --samples 200 --seed 3 --json"}) {
        const auto a = run(args), b = run(args);
        EXPECT_EQ(a.status, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty());
    }
}

TEST(Cli, DLSubcommands) {
    auto d = json_of("dl dims --family gl --n 2 --q 5");
    ASSERT_EQ(d["tori"].size(), 2u);
    EXPECT_EQ(d["tori"][0]["dimension"], "-4");
    EXPECT_EQ(d["tori"][1]["dimension"], "6");
    auto g = json_of("dl green --n 2 --q 3 --chi 1 --verify");
    EXPECT_EQ(g["verified"], true);
    auto dr = json_of("dl drinfeld --q 2 --ext 2");
    EXPECT_EQ(dr["points"], 6);
    EXPECT_EQ(dr["free_action"], true);
    auto u = json_of("dl u3 --q 2");
    EXPECT_EQ(u["norm"], 6);
    EXPECT_EQ(u["pi_degree"], 2);
}

TEST(Cli, Duality) {
    auto j = json_of("duality --group gl --n 2 --q 3 --check all");
    for (const char* k : {"involution", "isometry", "trivial_to_steinberg", "irreducible_to_signed"}) EXPECT_EQ(j["checks"][k], true) << k;
}

TEST(Cli, Green) {
    auto j = json_of("green --lambda 1,1,1 --rho 2,1");
    EXPECT_EQ(j["green"][0]["polynomial"], "-q^3 + 1");
    auto all = json_of("green --n 3");
    EXPECT_EQ(all["green"].size(), 9u);
}

TEST(Cli, Octonions) {
    auto j = json_of("oct verify --p 5 --samples 500");
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["composition_failures"], 0);
}

TEST(Cli, VerifySingleCriterion) {
    auto r = run("verify --suite 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("[PASS]  1 orders"), std::string::npos);
    auto j = json_of("verify --suite exponents");
    EXPECT_EQ(j["failed"], 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("nonsense").status, 2);
    EXPECT_EQ(run("chartable --family xx").status, 2);
    EXPECT_EQ(run("orders --type Q --rank 2").status, 2);
    EXPECT_EQ(run("verify --suite nope").status, 2);
    EXPECT_EQ(run("chartable --q 6").status, 2);
    EXPECT_EQ(run("group --family gl --n 4 --q 3").status, 3);
    EXPECT_EQ(run("--help").status, 0);
}
