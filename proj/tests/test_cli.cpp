/* Copyright 2026 The digs Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "corpus.hpp"

using namespace digs::testing;

namespace {
    struct Run {
        std::string out;
        int code;
    };

    Run run(const std::string& args) {
        std::string cmd = std::string("'") + DIGS_CLI + "' " + args + " 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 4096> buf;
        while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
        int status = pclose(pipe);
        return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
    }

    std::string file(const std::string& name) { return "'" + data_path(name + ".digs") + "'"; }

    bool has(const std::string& out, const std::string& needle) { return out.find(needle) != std::string::npos; }
}  // namespace

TEST_CASE("check") {
    Run gs = run("check " + file("fghp"));
    CHECK(gs.code == 0);
    CHECK(has(gs.out, "verdict: GS"));
    CHECK(has(gs.out, "count intersection: 15"));

    Run bad = run("check " + file("ghp"));
    CHECK(bad.code == 1);
    CHECK(has(bad.out, "verdict: NotGS"));
    CHECK(has(bad.out, "witness: left-multiplication x -| h = 2 [x x x x x @ 1]"));

    Run json = run("check --json " + file("fghp"));
    CHECK(json.code == 0);
    CHECK(has(json.out, "\"verdict\": \"GS\""));
}

TEST_CASE("complete and reduce") {
    Run c = run("complete " + file("fg"));
    CHECK(c.code == 0);
    CHECK(has(c.out, "# status: Complete"));
    CHECK(has(c.out, "poly r4: [x x x x @ 2] + 1/3 [x x x x @ 1]"));

    Run r = run("reduce " + file("fghp"));
    CHECK(r.code == 0);
    CHECK(has(r.out, "poly g: "));
    CHECK(has(r.out, "poly p: "));
    CHECK(has(r.out, "[x x x x x @ 1]"));
    CHECK_FALSE(has(r.out, "poly f: "));

    CHECK(run("reduce --as-is " + file("ghp")).code == 3);
    CHECK(run("complete --fuel 1 " + file("fg")).code == 2);
}

TEST_CASE("normal forms and word problems") {
    Run nf = run("nf " + file("comm2") + " '[y x @ 1]'");
    CHECK(nf.code == 0);
    CHECK(nf.out == "[x y @ 1]\n");
    CHECK(run("wp " + file("comm2") + " '[x y @ 2]' '[y x @ 2]'").code == 0);
    CHECK(run("wp " + file("comm2") + " '[x y @ 1]' '[x y @ 2]'").code == 1);
    CHECK(run("nf " + file("fg") + " '[x x x x @ 4]'").out == "0\n");
}

TEST_CASE("irr, family and oracle") {
    Run irr = run("irr --max-len 2 " + file("x1x2"));
    CHECK(irr.code == 0);
    CHECK(has(irr.out, "[x1 x2 @ 1]"));
    CHECK_FALSE(has(irr.out, "[x1 x2 @ 2]"));

    Run fam = run("family abelian --letters 2 --bound 2");
    CHECK(fam.code == 0);
    CHECK(has(fam.out, "rel: [x2 x1 @ 1] = [x1 x2 @ 2]"));

    Run o = run("oracle " + file("ghp") + " '[x x x x x @ 1]' --bound 6");
    CHECK(o.code == 0);
    CHECK(has(o.out, "certified"));
    CHECK(run("oracle " + file("fghp") + " '[x x x @ 2]' --bound 5").code == 2);

    Run audit = run("family right-commutative --letters 2 --audit");
    CHECK((audit.code == 0 || audit.code == 1));
    CHECK(has(audit.out, "schema agrees with closed form: yes"));
}

TEST_CASE("input errors") {
    CHECK(run("check " + file("missing")).code == 3);
    CHECK(run("nf " + file("comm2") + " '[z @ 1]'").code == 3);
    CHECK(run("family free --letters 2 --bound 2").code == 3);
    CHECK(run("").code != 0);
}
