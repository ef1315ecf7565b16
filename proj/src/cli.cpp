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

#include "orecodes/cli.hpp"

#include <cstdint>
#include <optional>

#include "CLI11.hpp"
#include "orecodes/codes.hpp"
#include "orecodes/errors.hpp"
#include "orecodes/reference_suite.hpp"
#include "orecodes/wedderburn.hpp"

namespace orecodes {

namespace {

/// Option storage shared by the subcommands; with require_subcommand(1)
/// only one of them ever parses, so the slots never conflict.
struct Args {
    std::string ring_path;
    std::string configs_dir = "configs";
    std::string f, g, extra;        // polynomial / element / row literals
    std::vector<std::string> list;  // variadic element literals
    std::uint64_t budget = 1'000'000;
    std::uint64_t rows = 0;
    std::uint32_t degree = 0;
    std::string which = "both";
};

void print_matrix(std::ostream& out, const MatrixA& m) { out << m.str() << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic in Ore extensions A[t;sigma,delta] and the cyclic "
                 "(f,sigma,delta)-codes they define"};
    app.require_subcommand(1);
    Args a;
    int rc = 0;

    auto with_ring = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--ring", a.ring_path, "ring configuration file")->required();
        return sub;
    };
    auto ring = [&]() { return Ring::load_config(a.ring_path); };
    auto poly = [&](const std::string& lit) { return SkewPolynomial::parse(ring(), lit); };
    auto elem = [&](const std::string& lit) { return RingElement::parse(ring(), lit); };
    auto code = [&]() { return SigmaDeltaCode::build(poly(a.f), poly(a.g)); };

    // -- ring diagnostics ---------------------------------------------------
    {
        CLI::App* sub = with_ring("ring-check", "validate a ring configuration and its "
                                                "sigma/delta laws");
        sub->callback([&] {
            const RingPtr r = ring();
            const auto report = r->check_laws();
            out << "ring: " << r->describe() << '\n';
            out << "elements: " << r->cardinality() << '\n';
            out << "laws: " << (report.ok ? "ok" : "violated") << " ("
                << (report.exhaustive ? "exhaustive" : "sampled") << ", "
                << report.pairs_checked << " pairs)" << '\n';
            if (!report.ok) {
                out << "detail: " << report.detail << '\n';
                rc = 1;
            }
        });
    }

    // -- skew-polynomial arithmetic ------------------------------------------
    {
        CLI::App* sub = with_ring("mul", "multiply two skew polynomials");
        sub->add_option("f", a.f, "left factor")->required();
        sub->add_option("g", a.g, "right factor")->required();
        sub->callback([&] { out << skew_mul(poly(a.f), poly(a.g)).str() << '\n'; });
    }
    {
        CLI::App* sub = with_ring("divr", "right division: f = q*g + r");
        sub->add_option("f", a.f, "dividend")->required();
        sub->add_option("g", a.g, "divisor")->required();
        sub->callback([&] {
            const DivResult d = div_right(poly(a.f), poly(a.g));
            out << "q: " << d.q.str() << '\n' << "r: " << d.r.str() << '\n';
        });
    }
    {
        CLI::App* sub = with_ring("divl", "left division: f = g*q + r");
        sub->add_option("f", a.f, "dividend")->required();
        sub->add_option("g", a.g, "divisor")->required();
        sub->callback([&] {
            const DivResult d = div_left(poly(a.f), poly(a.g));
            out << "q: " << d.q.str() << '\n' << "r: " << d.r.str() << '\n';
        });
    }
    {
        CLI::App* sub = with_ring("eval", "right evaluation f(a), the remainder of f by t-a");
        sub->add_option("f", a.f, "polynomial")->required();
        sub->add_option("a", a.g, "evaluation point")->required();
        sub->callback([&] { out << eval_right(poly(a.f), elem(a.g)).str() << '\n'; });
    }
    {
        CLI::App* sub = with_ring("lclm", "least left common multiple of the t-a_i");
        sub->add_option("points", a.list, "evaluation points a_1 ... a_r")
            ->required()
            ->expected(-1);
        sub->callback([&] {
            std::vector<RingElement> points;
            for (const std::string& lit : a.list) points.push_back(elem(lit));
            out << lclm_linear(points).str() << '\n';
        });
    }
    {
        CLI::App* sub = with_ring("invariant", "test whether Rf = fR");
        sub->add_option("f", a.f, "monic polynomial")->required();
        sub->callback([&] {
            const bool inv = is_invariant(poly(a.f));
            out << "invariant: " << (inv ? "true" : "false") << '\n';
            if (!inv) rc = 1;
        });
    }
    {
        CLI::App* sub = with_ring("factor-search",
                                  "all monic right factors of f of the given degree");
        sub->add_option("f", a.f, "polynomial to factor")->required();
        sub->add_option("degree", a.degree, "right-factor degree")->required();
        sub->add_option("--budget", a.budget, "enumeration budget (default 10^6)");
        sub->callback([&] {
            for (const auto& [g, h] : factor_search(poly(a.f), a.degree, a.budget))
                out << g.str() << " | " << h.str() << '\n';
        });
    }

    // -- cyclic (f,sigma,delta)-codes ----------------------------------------
    auto code_cmd = [&](const char* name, const char* desc) {
        CLI::App* sub = with_ring(name, desc);
        sub->add_option("f", a.f, "ambient monic polynomial, deg f = n")->required();
        sub->add_option("g", a.g, "monic right factor generating the code")->required();
        return sub;
    };
    {
        CLI::App* sub = code_cmd("code-build", "construct the code and report its parameters");
        sub->callback([&] {
            const SigmaDeltaCode c = code();
            out << "n: " << c.n() << '\n' << "k: " << c.k() << '\n' << "r: " << c.r() << '\n';
            out << "h': " << c.h_prime().str() << '\n';
            out << "h: " << (c.h() ? c.h()->str() : "none") << '\n';
        });
    }
    {
        CLI::App* sub = code_cmd("code-gen", "print the k x n generator matrix");
        sub->callback([&] { print_matrix(out, code().generator_matrix()); });
    }
    {
        CLI::App* sub = code_cmd("code-control", "print the n x n control matrix");
        sub->callback([&] { print_matrix(out, code().control_matrix()); });
    }
    {
        CLI::App* sub = code_cmd("code-encode", "encode a length-k message row");
        sub->add_option("message", a.extra, "message row, entries separated by '|'")->required();
        sub->callback([&] {
            const SigmaDeltaCode c = code();
            out << format_row(*c.ring(), c.encode(parse_row(*c.ring(), a.extra))) << '\n';
        });
    }
    {
        CLI::App* sub = code_cmd("code-check", "test membership of a length-n vector");
        sub->add_option("vector", a.extra, "candidate row, entries separated by '|'")->required();
        sub->callback([&] {
            const SigmaDeltaCode c = code();
            if (c.is_codeword(parse_row(*c.ring(), a.extra))) {
                out << "codeword" << '\n';
            } else {
                out << "not a codeword" << '\n';
                rc = 1;
            }
        });
    }
    {
        CLI::App* sub = code_cmd("code-syndrome", "length-r right-division syndrome");
        sub->add_option("vector", a.extra, "candidate row, entries separated by '|'")->required();
        sub->callback([&] {
            const SigmaDeltaCode c = code();
            out << format_row(*c.ring(), c.syndrome(parse_row(*c.ring(), a.extra))) << '\n';
        });
    }
    {
        CLI::App* sub = code_cmd("code-mindist", "minimum distance by message sweep");
        sub->add_option("--budget", a.budget, "message-space budget (default 10^6)");
        sub->callback([&] {
            const auto d = code().min_distance_bruteforce(a.budget);
            if (d)
                out << *d << '\n';
            else
                out << "no nonzero codewords" << '\n';
        });
    }

    // -- Wedderburn structure -------------------------------------------------
    {
        CLI::App* sub = with_ring("bigG", "the universal vanishing polynomials over F_q[t;theta]");
        sub->add_option("--which", a.which, "G, G0 or both (default both)");
        sub->callback([&] {
            if (a.which == "both" || a.which == "G") out << "G: " << big_G(ring()).str() << '\n';
            if (a.which == "both" || a.which == "G0")
                out << "G0: " << big_G0(ring()).str() << '\n';
            if (a.which != "both" && a.which != "G" && a.which != "G0")
                throw CLI::ValidationError("--which must be G, G0 or both");
        });
    }
    {
        CLI::App* sub = with_ring("wtest", "test whether monic g is a Wedderburn polynomial");
        sub->add_option("g", a.g, "monic polynomial")->required();
        sub->callback([&] {
            const bool w = is_w_polynomial(poly(a.g));
            out << "w-polynomial: " << (w ? "true" : "false") << '\n';
            if (!w) rc = 1;
        });
    }
    {
        CLI::App* sub = with_ring("vandermonde", "generalized Vandermonde matrix of a root set");
        sub->add_option("rows", a.rows, "number of rows n")->required();
        sub->add_option("points", a.list, "roots a_1 ... a_r")->required()->expected(-1);
        sub->callback([&] {
            std::vector<RingElement> points;
            for (const std::string& lit : a.list) points.push_back(elem(lit));
            print_matrix(out, vandermonde_matrix(points, a.rows));
        });
    }

    // -- the bundled worked-example suite --------------------------------------
    {
        CLI::App* sub = app.add_subcommand("paper-examples",
                                           "replay the bundled worked-example fixtures");
        sub->add_option("--configs", a.configs_dir, "directory with the shipped ring configs");
        sub->callback([&] {
            const auto results = run_reference_suite(a.configs_dir);
            out << format_report(results);
            for (const FixtureResult& r : results)
                if (!r.pass) rc = 1;
        });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("orecodes");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const unavailable_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
    return rc;
}

}  // namespace orecodes
