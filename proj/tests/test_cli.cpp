/*
 * Copyright 2026 The scgame Authors
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

#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run scg(const std::string& args)
{
    std::string cmd = std::string("\"") + SCG_CLI_PATH + "\" " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch()
{
    fs::path dir = fs::temp_directory_path() / ("scg_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

nlohmann::json as_json(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("bounds prints a bare rational for one point")
{
    Run r = scg("bounds --alpha 2 --gamma 1 --m 4");
    CHECK(r.code == 0);
    CHECK(r.out == "4/7\n");

    Run table = scg("bounds --alpha 2 --gamma 1,inf --m 4 --asymptotic");
    CHECK(table.code == 0);
    CHECK(table.out.rfind("alpha,gamma,m,fraction,decimal", 0) == 0);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(scg("bounds --no-such-flag").code == 2);
    CHECK(scg("").code == 2);
    CHECK(scg("verify nash --in /nonexistent.json --profile 1").code == 2);
    CHECK(scg("gen nothing").code == 2);
    CHECK(scg("--help").code == 0);
}

TEST_CASE("verify reports the improvement factor and exits 4 when unstable")
{
    fs::path dir = scratch();
    std::string e1 = (dir / "e1.json").string();
    REQUIRE(scg("gen example1 --r 1 --out " + e1).code == 0);

    Run r = scg("verify nash --in " + e1 + " --profile 1,2,3");
    CHECK(r.code == 4);
    auto doc = as_json(r);
    CHECK(doc["stable"] == false);
    CHECK(doc["max_factor_decimal"].get<std::string>().rfind("1.41421", 0) == 0);

    CHECK(scg("verify nash --in " + e1 + " --profile 1,2,3 --alpha 3/2").code == 0);
    CHECK(scg("verify nash --in " + e1 + " --profile 1,2").code == 2);
}

TEST_CASE("hybrid with the optimum oracle")
{
    fs::path dir = scratch();
    std::string e1 = (dir / "e1.json").string();
    REQUIRE(scg("gen example1 --r 1 --out " + e1).code == 0);
    Run r = scg("solve hybrid --in " + e1 + " --opt-oracle");
    REQUIRE(r.code == 0);
    auto doc = as_json(r);
    CHECK(doc.contains("rho"));
    CHECK(doc["factor"] == "809/500");
}

TEST_CASE("solve then verify round trip")
{
    fs::path dir = scratch();
    std::string two = (dir / "two.json").string();
    std::string three = (dir / "three.json").string();
    REQUIRE(scg("gen random --n 6 --m 2 --seed 11 --out " + two).code == 0);
    REQUIRE(scg("gen random --n 5 --m 3 --seed 12 --out " + three).code == 0);

    struct Case {
        std::string algorithm;
        std::string file;
        std::string check;
    };
    for (const Case& c : {Case{"algorithm1", two, "nash"}, Case{"strong2", two, "strong"},
                          Case{"sqrt2", three, "nash"}, Case{"oneshot --alpha 2", three, "nash"}}) {
        CAPTURE(c.algorithm);
        Run solved = scg("solve " + c.algorithm + " --in " + c.file);
        REQUIRE(solved.code == 0);
        auto doc = as_json(solved);
        std::string profile = doc["profile"];
        std::string factor = doc["factor"];
        CHECK(scg("verify " + c.check + " --in " + c.file + " --profile " + profile + " --alpha " + factor).code == 0);
    }

    std::string omega = (dir / "omega.json").string();
    REQUIRE(scg("gen random_omega --n 4 --m 3 --omega 3/4 --seed 5 --out " + omega).code == 0);
    Run lex = scg("solve lexstrong --in " + omega);
    REQUIRE(lex.code == 0);
    CHECK(scg("verify strong --in " + omega + " --profile " + as_json(lex)["profile"].get<std::string>() +
              " --alpha 4/3")
              .code == 0);

    std::string gen = (dir / "gen.json").string();
    REQUIRE(scg("gen random_supermodular --n 4 --m 2 --r 2 --seed 3 --out " + gen).code == 0);
    Run one = scg("solve oneshot-gen --in " + gen);
    REQUIRE(one.code == 0);
    auto doc = as_json(one);
    CHECK(scg("verify generalized --in " + gen + " --profile " + doc["profile"].get<std::string>() + " --alpha " +
              doc["guarantee"].get<std::string>())
              .code == 0);
}

TEST_CASE("census, payments and potential audit")
{
    fs::path dir = scratch();
    std::string g = (dir / "g.json").string();
    REQUIRE(scg("gen random_cc --n 5 --m 3 --seed 2 --out " + g).code == 0);

    Run census = scg("census --in " + g + " --format csv");
    CHECK(census.code == 0);
    CHECK(census.out.rfind("profile,welfare,max_factor,is_nash,is_strong\r\n", 0) == 0);

    CHECK(scg("payments --in " + g).code == 0);
    Run audit = scg("audit-potential --in " + g + " --trials 500");
    CHECK(audit.code == 0);
    CHECK(as_json(audit)["violations"] == 0);

    std::string big = (dir / "big.json").string();
    REQUIRE(scg("gen random --n 30 --m 3 --out " + big).code == 0);
    CHECK(scg("census --in " + big).code == 3);
}
