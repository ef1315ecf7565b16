/*
   Copyright 2026 the orecodes authors

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "orecodes/cli.hpp"
#include "orecodes/codes.hpp"
#include "test_util.hpp"

using namespace orecodes;

namespace {

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

std::string cfg(const char* name) {
    return testutil::config_dir() + "/" + name + ".ring";
}

std::size_t count_lines_with(const std::string& text, const std::string& prefix) {
    std::size_t count = 0;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (line.rfind(prefix, 0) == 0) ++count;
    return count;
}

}  // namespace

TEST_CASE("ring-check") {
    const CliResult r = run({"ring-check", "--ring", cfg("f4")});
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "ring: extension_field(p=2, n=2, modulus=1,1,1), |A|=4, sigma=frobenius^1, "
          "delta=zero\n"
          "elements: 4\n"
          "laws: ok (exhaustive, 16 pairs)\n");

    const CliResult tri = run({"ring-check", "--ring", cfg("tri2")});
    CHECK(tri.rc == 0);
    CHECK(tri.out.find("laws: ok (exhaustive, 64 pairs)") != std::string::npos);
}

TEST_CASE("skew arithmetic commands") {
    // the product of two displayed quadratics is t^4 + 1
    const CliResult m =
        run({"mul", "--ring", cfg("f4"), "0,1;0,1;1", "1,1;0,1;1"});
    CHECK(m.rc == 0);
    CHECK(m.out == "1,0; 0,0; 0,0; 0,0; 1,0\n");

    const CliResult d = run({"divr", "--ring", cfg("f4"), "0;0;1", "0,1;1"});
    CHECK(d.rc == 0);
    CHECK(d.out == "q: 1,1; 1,0\nr: 1,0\n");

    const CliResult l = run({"divl", "--ring", cfg("f4"), "1;0;1", "0,1;1"});
    CHECK(l.rc == 0);
    CHECK(l.out == "q: 1,1; 1,0\nr: 0\n");

    const CliResult e =
        run({"eval", "--ring", cfg("f5x"), "-1;0;0;0;0;1", "0,1"});
    CHECK(e.rc == 0);
    CHECK(e.out == "0,0,0,0,0\n");

    const CliResult lc = run({"lclm", "--ring", cfg("f5x"), "0,1", "0,1,0,0,1"});
    CHECK(lc.rc == 0);
    CHECK(lc.out == "4,0,1,0,0; 0,3,0,0,0; 1,0,0,0,0\n");
}

TEST_CASE("invariance test sets the exit status") {
    CHECK(run({"invariant", "--ring", cfg("f4"), "0;1;0;1"}).rc == 0);
    const CliResult r = run({"invariant", "--ring", cfg("f4"), "0,1;1"});
    CHECK(r.rc == 1);
    CHECK(r.out == "invariant: false\n");
}

TEST_CASE("factor search output") {
    const CliResult r =
        run({"factor-search", "--ring", cfg("f4"), "1;0;0;0;1", "2"});
    CHECK(r.rc == 0);
    CHECK(count_lines_with(r.out, "") == 7);
    CHECK(r.out.find("1,0; 0,0; 1,0 | 1,0; 0,0; 1,0") != std::string::npos);

    // byte-stable across runs
    const CliResult again =
        run({"factor-search", "--ring", cfg("f4"), "1;0;0;0;1", "2"});
    CHECK(again.out == r.out);

    // quotient rings are not field contexts
    CHECK(run({"factor-search", "--ring", cfg("f5x"), "-1;0;0;0;0;1", "1"}).rc == 2);
    // enumeration budgets refuse rather than truncate
    const CliResult budget =
        run({"factor-search", "--ring", cfg("f4"), "1;0;0;0;1", "9"});
    CHECK(budget.rc == 3);
    CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("code construction commands") {
    const std::vector<std::string> base = {"--ring", cfg("f5x"), "-1;0;0;0;0;1",
                                           "4,0,1;0,3;1"};
    auto with = [&](const char* name, std::vector<std::string> extra = {}) {
        std::vector<std::string> args = {name};
        args.insert(args.end(), base.begin(), base.end());
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args);
    };

    const CliResult build = with("code-build");
    CHECK(build.rc == 0);
    CHECK(build.out ==
          "n: 5\nk: 3\nr: 2\n"
          "h': 0,3,0,4,0; 2,0,3,0,0; 0,2,0,0,0; 1,0,0,0,0\n"
          "h: 0,3,0,4,0; 2,0,3,0,0; 0,2,0,0,0; 1,0,0,0,0\n");

    const CliResult gen = with("code-gen");
    CHECK(gen.rc == 0);
    CHECK(gen.out ==
          "4,0,1,0,0|0,3,0,0,0|1,0,0,0,0|0,0,0,0,0|0,0,0,0,0\n"
          "0,2,0,0,0|2,0,1,0,0|0,3,0,0,0|1,0,0,0,0|0,0,0,0,0\n"
          "2,0,0,0,0|0,4,0,0,0|0,0,1,0,0|0,3,0,0,0|1,0,0,0,0\n");

    const CliResult control = with("code-control");
    CHECK(control.rc == 0);
    CHECK(count_lines_with(control.out, "") == 5);

    // a generator row is a codeword, e_1 is not
    CHECK(with("code-check", {"4,0,1|0,3|1|0|0"}).rc == 0);
    CHECK(with("code-check", {"4,0,1|0,3|1|0|0"}).out == "codeword\n");
    const CliResult miss = with("code-check", {"1|0|0|0|0"});
    CHECK(miss.rc == 1);
    CHECK(miss.out == "not a codeword\n");

    const CliResult enc = with("code-encode", {"1|0|0"});
    CHECK(enc.rc == 0);
    CHECK(enc.out == "4,0,1,0,0|0,3,0,0,0|1,0,0,0,0|0,0,0,0,0|0,0,0,0,0\n");

    const CliResult syn = with("code-syndrome", {"1|0|0|0|0"});
    CHECK(syn.rc == 0);
    CHECK(syn.out == "1,0,0,0,0|0,0,0,0,0\n");

    // 3125^3 messages exceed the default budget
    CHECK(with("code-mindist").rc == 3);
}

TEST_CASE("code commands over the frobenius field") {
    const CliResult dist = run({"code-mindist", "--ring", cfg("f4"), "1;0;0;0;1",
                                "1,1;0,1;1"});
    CHECK(dist.rc == 0);
    const auto expect = SigmaDeltaCode::build(
        SkewPolynomial::parse(testutil::f4(), "1;0;0;0;1"),
        SkewPolynomial::parse(testutil::f4(), "1,1;0,1;1"))
                            .min_distance_bruteforce();
    REQUIRE(expect.has_value());
    CHECK(dist.out == std::to_string(*expect) + "\n");

    const CliResult trivial = run({"code-mindist", "--ring", cfg("f4"), "1;0;0;0;1",
                                   "1;0;0;0;1"});
    CHECK(trivial.rc == 0);
    CHECK(trivial.out == "no nonzero codewords\n");

    // a code with no left cofactor reports it and refuses the control matrix
    const std::string f = "0,0,1;0,3,0,0,4;1";
    const CliResult build =
        run({"code-build", "--ring", cfg("f5x"), f, "0,4;1"});
    CHECK(build.rc == 0);
    CHECK(build.out.find("h: none\n") != std::string::npos);
    CHECK(run({"code-control", "--ring", cfg("f5x"), f, "0,4;1"}).rc == 3);
}

TEST_CASE("wedderburn commands") {
    const CliResult both = run({"bigG", "--ring", cfg("f4")});
    CHECK(both.rc == 0);
    CHECK(both.out == "G: 0,0; 1,0; 0,0; 1,0\nG0: 1,0; 0,0; 1,0\n");

    const CliResult only = run({"bigG", "--ring", cfg("f8"), "--which", "G0"});
    CHECK(only.rc == 0);
    CHECK(only.out == "G0: 1,0,0; 0,0,0; 0,0,0; 1,0,0\n");

    CHECK(run({"bigG", "--ring", cfg("f4"), "--which", "X"}).rc == 2);
    CHECK(run({"bigG", "--ring", cfg("f5x")}).rc == 2);

    CHECK(run({"wtest", "--ring", cfg("f4"), "1;0;1"}).rc == 0);
    const CliResult not_w = run({"wtest", "--ring", cfg("f4"), "0,1;0;1"});
    CHECK(not_w.rc == 1);
    CHECK(not_w.out == "w-polynomial: false\n");

    const CliResult v =
        run({"vandermonde", "--ring", cfg("f5x"), "3", "0,1", "0,1,0,0,1"});
    CHECK(v.rc == 0);
    CHECK(v.out ==
          "1,0,0,0,0|1,0,0,0,0\n"
          "0,1,0,0,0|0,1,0,0,1\n"
          "1,0,1,0,0|3,0,1,0,0\n");
}

TEST_CASE("bundled example suite passes") {
    const CliResult r = run({"paper-examples", "--configs", testutil::config_dir()});
    CHECK(r.rc == 0);
    CHECK(count_lines_with(r.out, "PASS") == 19);
    CHECK(count_lines_with(r.out, "FAIL") == 0);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({}).rc == 2);
    CHECK(run({"frobnicate"}).rc == 2);
    CHECK(run({"mul", "0;1", "1;1"}).rc == 2);                       // missing --ring
    CHECK(run({"mul", "--ring", cfg("f4"), "0;1"}).rc == 2);         // missing operand
    CHECK(run({"mul", "--ring", "missing.ring", "1", "1"}).rc == 2);  // no such config
    CHECK(run({"mul", "--ring", cfg("f4"), "1;x", "1"}).rc == 2);    // bad literal
    CHECK(run({"lclm", "--ring", cfg("f4")}).rc == 2);               // no points
}

TEST_CASE("unavailable operations exit with status 3") {
    // left division by a non-monic divisor
    CHECK(run({"divl", "--ring", cfg("f4"), "1;0;1", "1;0,1"}).rc == 3);
    // the common-multiple closure hits a zero divisor
    const CliResult r = run({"lclm", "--ring", cfg("f5x"), "0,1", "1,2,1,1,1"});
    CHECK(r.rc == 3);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("help is exit zero") {
    const CliResult r = run({"--help"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("code-build") != std::string::npos);
}
