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

#include "orecodes/reference_suite.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "orecodes/codes.hpp"
#include "orecodes/errors.hpp"
#include "orecodes/plt.hpp"
#include "orecodes/wedderburn.hpp"

namespace orecodes {

namespace {

/// Lazily loaded ring configurations plus small shared helpers.
class Suite {
   public:
    explicit Suite(std::string dir) : dir_(std::move(dir)) {}

    RingPtr ring(const std::string& name) {
        auto it = cache_.find(name);
        if (it != cache_.end()) return it->second;
        RingPtr r = Ring::load_config(dir_ + "/" + name + ".ring");
        cache_.emplace(name, r);
        return r;
    }

    SkewPolynomial poly(const std::string& ring_name, const std::string& literal) {
        return SkewPolynomial::parse(ring(ring_name), literal);
    }

    RingElement elem(const std::string& ring_name, const std::string& literal) {
        return RingElement::parse(ring(ring_name), literal);
    }

   private:
    std::string dir_;
    std::map<std::string, RingPtr> cache_;
};

/// Positions (1-based) where the computed matrix differs from the
/// transcription, given as one element literal per entry.
std::vector<std::pair<std::size_t, std::size_t>> mismatches(
    const MatrixA& got, const std::vector<std::vector<const char*>>& transcribed) {
    const Ring& ring = *got.ring();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j)
            if (got.entry(i, j) != ring.parse_element(transcribed.at(i).at(j)))
                out.emplace_back(i + 1, j + 1);
    return out;
}

bool matches(const MatrixA& got, const std::vector<std::vector<const char*>>& transcribed) {
    return mismatches(got, transcribed).empty();
}

std::string fmt_positions(const std::vector<std::pair<std::size_t, std::size_t>>& ps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) os << ' ';
        os << '(' << ps[i].first << ',' << ps[i].second << ')';
    }
    return os.str();
}

MatrixA columns_of(const MatrixA& m, const std::vector<std::size_t>& cols) {
    MatrixA out(m.ring(), m.rows(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, c, m.entry(i, cols[c]));
    return out;
}

/// All tuples in A^len by the canonical odometer, fed to a callback.
void for_each_tuple(const Ring& ring, std::size_t len,
                    const std::function<void(const std::vector<Residues>&)>& fn) {
    std::vector<Residues> tuple(len, ring.zero());
    while (true) {
        fn(tuple);
        bool more = false;
        for (std::size_t i = len; i-- > 0;) {
            if (ring.next_element(tuple[i])) {
                more = true;
                break;
            }
        }
        if (!more) break;
    }
}

// -- fixtures ---------------------------------------------------------------

// The four displayed two-by-two factorizations of t^4 + 1 over
// F_4[t;theta], as (left factor, right factor) pairs.
const std::vector<std::pair<const char*, const char*>> kF4Factorizations = {
    {"1;0;1", "1;0;1"},          // (t^2+1)(t^2+1)
    {"0,1;0,1;1", "1,1;0,1;1"},  // (t^2+at+a)(t^2+at+a^2),  a = 0,1
    {"1,1;1,1;1", "0,1;1,1;1"},  // (t^2+a^2t+a^2)(t^2+a^2t+a)
    {"1,1;0,1;1", "0,1;0,1;1"},  // (t^2+at+a^2)(t^2+at+a)
};

FixtureResult f4_factorizations(Suite& s) {
    const SkewPolynomial target = s.poly("f4", "1;0;0;0;1");  // t^4 + 1
    std::size_t good = 0;
    for (const auto& [left, right] : kF4Factorizations)
        if (skew_mul(s.poly("f4", left), s.poly("f4", right)) == target) ++good;
    return {"f4-factorizations",
            good == kF4Factorizations.size(),
            std::to_string(good) + "/4 products reproduce t^4+1"};
}

FixtureResult f4_factor_search(Suite& s) {
    const SkewPolynomial target = s.poly("f4", "1;0;0;0;1");
    const auto found = factor_search(target, 2);
    std::size_t present = 0;
    for (const auto& [left, right] : kF4Factorizations) {
        const SkewPolynomial g = s.poly("f4", right);
        const SkewPolynomial h = s.poly("f4", left);
        for (const auto& [fg, fh] : found)
            if (fg == g && fh == h) {
                ++present;
                break;
            }
    }
    return {"f4-factor-search",
            present == kF4Factorizations.size(),
            "search found " + std::to_string(found.size()) + " degree-2 right factors, " +
                std::to_string(present) + "/4 displayed pairs present"};
}

FixtureResult f5_generator_matrix(Suite& s) {
    const SigmaDeltaCode code =
        SigmaDeltaCode::build(s.poly("f5x", "-1;0;0;0;0;1"), s.poly("f5x", "4,0,1;0,3;1"));
    const std::vector<std::vector<const char*>> expected = {
        {"4,0,1", "0,3", "1", "0", "0"},
        {"0,2", "2,0,1", "0,3", "1", "0"},
        {"2", "0,4", "0,0,1", "0,3", "1"},
    };
    const bool ok = code.k() == 3 && matches(code.generator_matrix(), expected);
    return {"f5-generator-matrix", ok,
            "k=" + std::to_string(code.k()) + ", 3x5 generator matrix entry-for-entry"};
}

FixtureResult f5_cofactor(Suite& s) {
    const SkewPolynomial f = s.poly("f5x", "-1;0;0;0;0;1");
    const SkewPolynomial g = s.poly("f5x", "4,0,1;0,3;1");
    const SkewPolynomial h = s.poly("f5x", "0,3,0,4;2,0,3;0,2;1");
    const DivResult right = div_right(f, g);
    const DivResult left = div_left(f, g);
    const bool ok = right.r.is_zero() && right.q == h && left.r.is_zero() && left.q == h;
    return {"f5-cofactor", ok,
            "t^5-1 = h*g = g*h with h = " + right.q.str()};
}

FixtureResult f5_control_matrix(Suite& s) {
    const SigmaDeltaCode code =
        SigmaDeltaCode::build(s.poly("f5x", "-1;0;0;0;0;1"), s.poly("f5x", "4,0,1;0,3;1"));
    const MatrixA h = code.control_matrix();
    // the matrix as printed in the source transcription
    const std::vector<std::vector<const char*>> transcribed = {
        {"0,3,0,4", "2,0,3", "0,2", "1", "0"},
        {"3,0,2", "4,0,0,4", "4,0,3", "0,2", "1"},
        {"1,4", "2,0,4", "0,0,0,4", "1,0,3", "0,2"},
        {"4,2", "1,2", "2,0,1", "0,6,0,4", "3,0,3"},
        {"0,0,3", "1,2", "1,4", "3,0,3", "0,2,0,4"},
    };
    const auto diffs = mismatches(h, transcribed);
    const Ring& ring = *h.ring();
    const bool zero_products = mat_mul(code.generator_matrix(), h).is_zero() &&
                               vec_is_zero(ring, vec_mat_mul(ring, code.g_bar(), h));
    // the transcription is known to differ from recomputation at exactly
    // one position; report the recomputed value as the oracle
    const bool ok = zero_products && diffs == decltype(diffs){{2, 2}};
    std::string detail = "G*H=0 and gbar*H=0";
    if (!diffs.empty()) {
        detail += "; transcription differs at " + fmt_positions(diffs) + ", oracle";
        for (const auto& [i, j] : diffs)
            detail += " (" + std::to_string(i) + "," + std::to_string(j) +
                      ")=" + ring.format_element(h.entry(i - 1, j - 1));
    }
    return {"f5-control-matrix", ok, detail};
}

FixtureResult f5_derivation_square(Suite& s) {
    const RingPtr ring = s.ring("f5x");
    const SkewPolynomial g = s.poly("f5x", "0,4;0;1");  // t^2 - x
    const SkewPolynomial f = skew_mul(g, g);
    // (t^2-a)^2 expands to t^4 - 2a t^2 - 2 delta(a) t - delta^2(a) + a^2
    if (!(f == s.poly("f5x", "0,0,1;3;0,3;0;1")))
        return {"f5-derivation-square", false, "expansion of (t^2-x)^2 disagrees"};

    const SigmaDeltaCode code = SigmaDeltaCode::build(f, g);
    const MatrixA h = code.control_matrix();
    // the printed generic matrix instantiated at a = x (delta(a) = 1,
    // delta^2(a) = 0), including the sign slip in its last row
    const std::vector<std::vector<const char*>> transcribed = {
        {"0,4", "0", "1", "0"},
        {"4", "0,4", "0", "1"},
        {"0,0,4", "0", "0,1", "0"},
        {"0", "0,0,4", "1", "0,1"},
    };
    const auto diffs = mismatches(h, transcribed);
    const Ring& r5 = *ring;

    bool ok = diffs == decltype(diffs){{4, 1}};
    // gbar annihilates H, and the column relations hold:
    // H1 + H3*a + H4*delta(a) = 0 and H2 + a*H4 = 0 (the transcription
    // displays the first with a stray sign on a; the form below is the
    // one the recomputed matrix satisfies)
    ok = ok && vec_is_zero(r5, vec_mat_mul(r5, code.g_bar(), h));
    const Residues a = r5.parse_element("0,1");
    const Residues da = r5.delta(a);
    for (std::size_t i = 0; i < 4; ++i) {
        Residues rel1 = r5.add(h.entry(i, 0), r5.mul(h.entry(i, 2), a));
        rel1 = r5.add(rel1, r5.mul(h.entry(i, 3), da));
        if (!r5.is_zero(rel1)) ok = false;
        if (!r5.is_zero(r5.add(h.entry(i, 1), r5.mul(a, h.entry(i, 3))))) ok = false;
    }
    // the last two columns alone are still annihilated by the code
    const MatrixA tail = columns_of(h, {2, 3});
    const MatrixA gen = code.generator_matrix();
    for (std::size_t i = 0; i < gen.rows(); ++i)
        if (!vec_is_zero(r5, vec_mat_mul(r5, gen.row(i), tail))) ok = false;

    std::string detail = "4x4 control matrix of (t^2-x)^2 / (t^2-x)";
    if (!diffs.empty()) {
        detail += "; transcription differs at " + fmt_positions(diffs) + ", oracle";
        for (const auto& [i, j] : diffs)
            detail += " (" + std::to_string(i) + "," + std::to_string(j) +
                      ")=" + r5.format_element(h.entry(i - 1, j - 1));
    }
    return {"f5-derivation-square", ok, detail};
}

FixtureResult f5_root_census(Suite& s) {
    const RingPtr ring = s.ring("f5x");
    const SkewPolynomial f = s.poly("f5x", "-1;0;0;0;0;1");
    std::size_t roots = 0;
    bool characterized = true;
    for (const Residues& a : ring->all_elements()) {
        const bool is_root = eval_right(f, RingElement(ring, a)).is_zero();
        if (is_root) ++roots;
        // a is a root iff a_0 + a_1 + a_2 + a_3 = 1 (the x^4 entry is free)
        std::uint32_t sum = 0;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) sum += a[i];
        if (is_root != (sum % 5 == 1)) characterized = false;
    }
    return {"f5-root-census", roots == 625 && characterized,
            std::to_string(roots) + " right roots of t^5-1 among 3125 elements, "
            "coefficient-sum criterion " + (characterized ? "holds" : "fails")};
}

FixtureResult big_g_literals(Suite& s, const char* ring_name, const char* g_lit,
                             const char* g0_lit, const char* fixture) {
    const RingPtr ring = s.ring(ring_name);
    const SkewPolynomial g = big_G(ring);
    const SkewPolynomial g0 = big_G0(ring);
    bool ok = g == s.poly(ring_name, g_lit) && g0 == s.poly(ring_name, g0_lit);
    std::size_t g_roots = 0, g0_roots = 0;
    for (const Residues& a : ring->all_elements()) {
        if (eval_right(g, RingElement(ring, a)).is_zero()) ++g_roots;
        if (!ring->is_zero(a) && eval_right(g0, RingElement(ring, a)).is_zero()) ++g0_roots;
    }
    ok = ok && g_roots == ring->cardinality() && g0_roots == ring->cardinality() - 1;
    return {fixture, ok,
            "G=" + g.str() + " vanishes on " + std::to_string(g_roots) + "/" +
                std::to_string(ring->cardinality()) + ", G0=" + g0.str() + " on all nonzero"};
}

FixtureResult semi_invariance(Suite& s, const char* ring_name, const char* fixture) {
    const RingPtr ring = s.ring(ring_name);
    bool ok = check_semi_invariance_laws(ring);
    std::string detail = "G*h = theta(h)*G on random h; G0 central";
    if (std::string(ring_name) == "f4") {
        // the displayed instance h = t + alpha
        const SkewPolynomial g = big_G(ring);
        const SkewPolynomial h = s.poly("f4", "0,1;1");
        if (!(skew_mul(g, h) == skew_mul(twist_coeffs(h, 1), g))) {
            ok = false;
            detail = "displayed instance h = t+alpha fails";
        }
    }
    return {fixture, ok, detail};
}

FixtureResult f4_factor_swap(Suite& s) {
    const RingPtr ring = s.ring("f4");
    std::size_t swaps = 0, expected = 0;
    bool ok = true;
    for (BigKind which : {BigKind::G, BigKind::G0}) {
        const SkewPolynomial big = which == BigKind::G ? big_G(ring) : big_G0(ring);
        const auto factors = factor_search(big, 1);
        expected += which == BigKind::G ? 4 : 3;  // t-a for all a, resp. all a != 0
        if (factors.size() != (which == BigKind::G ? 4u : 3u)) ok = false;
        for (const auto& [g, h] : factors) {
            try {
                factor_swap(g, h, which);  // throws if the swap identity fails
                ++swaps;
            } catch (const std::exception&) {
                ok = false;
            }
        }
    }
    return {"f4-factor-swap", ok && swaps == expected,
            std::to_string(swaps) + "/" + std::to_string(expected) +
                " degree-1 factorizations of G and G0 swap"};
}

FixtureResult w_minimality(Suite& s) {
    const RingPtr f4 = s.ring("f4");
    const SkewPolynomial g = big_G(f4);
    // no monic polynomial of degree < 3 vanishes on all of F_4
    bool minimal = true;
    const auto elements = f4->all_elements();
    for (std::size_t deg = 1; deg <= 2 && minimal; ++deg) {
        for_each_tuple(*f4, deg, [&](const std::vector<Residues>& low) {
            std::vector<Residues> coeffs = low;
            coeffs.push_back(f4->one());
            const SkewPolynomial cand(f4, coeffs);
            bool vanishes = true;
            for (const Residues& a : elements)
                if (!eval_right(cand, RingElement(f4, a)).is_zero()) {
                    vanishes = false;
                    break;
                }
            if (vanishes) minimal = false;
        });
    }
    // over F_8, certify via the lclm of all elements and per-point division
    const RingPtr f8 = s.ring("f8");
    std::vector<RingElement> points;
    for (const Residues& a : f8->all_elements()) points.emplace_back(f8, a);
    const SkewPolynomial g8 = big_G(f8);
    bool f8_ok = lclm_linear(points) == g8;
    for (const RingElement& a : points)
        if (!div_right(g8, SkewPolynomial::linear(f8, a.coeffs())).r.is_zero()) f8_ok = false;
    std::vector<RingElement> points4;
    for (const Residues& a : f4->all_elements()) points4.emplace_back(f4, a);
    const bool f4_lclm = lclm_linear(points4) == g;
    return {"w-minimality", minimal && f8_ok && f4_lclm,
            "no monic degree<=2 vanishes on F_4; G = lclm of all points over F_4 and F_8"};
}

FixtureResult f4_w_characterization(Suite& s) {
    const RingPtr f4 = s.ring("f4");
    const SkewPolynomial g = big_G(f4);
    bool ok = true;
    std::string detail;
    for (std::size_t r = 1; r <= 3; ++r) {
        std::set<std::vector<Residues>> factors;
        for (const auto& [fg, fh] : factor_search(g, r)) factors.insert(fg.coeffs());
        std::set<std::vector<Residues>> lclms;
        for_each_tuple(*f4, r, [&](const std::vector<Residues>& tuple) {
            std::vector<RingElement> points;
            for (const Residues& a : tuple) points.emplace_back(f4, a);
            const SkewPolynomial l = lclm_linear(points);
            if (l.degree() == static_cast<int>(r)) lclms.insert(l.coeffs());
        });
        if (factors != lclms) ok = false;
        detail += (r > 1 ? ", " : "") + std::to_string(factors.size()) + " of degree " +
                  std::to_string(r);
        // the division-based membership test agrees on every monic candidate
        if (r <= 2)
            for_each_tuple(*f4, r, [&](const std::vector<Residues>& low) {
                std::vector<Residues> coeffs = low;
                coeffs.push_back(f4->one());
                const SkewPolynomial cand(f4, coeffs);
                if (is_w_polynomial(cand) != (factors.count(cand.coeffs()) > 0)) ok = false;
            });
    }
    return {"f4-w-characterization", ok,
            "right factors of G = lclm images, both directions: " + detail};
}

FixtureResult f4_orbit_exponent(Suite& s) {
    const RingPtr f4 = s.ring("f4");
    bool ok = orbit_exponent(s.poly("f4", "1;1")) == 1      // t - 1, fixed coefficients
              && orbit_exponent(s.poly("f4", "0,1;1")) == 2;  // t - alpha
    // the cofactor-built control matrix matches the code's own and has
    // the code as its exact left kernel
    const SkewPolynomial g = s.poly("f4", "0,1;1");
    const MatrixA h = w_control_matrix(g, BigKind::G);
    const SigmaDeltaCode code = SigmaDeltaCode::build(big_G(f4), g);
    ok = ok && h == code.control_matrix();
    for_each_tuple(*f4, 3, [&](const std::vector<Residues>& c) {
        if (vec_is_zero(*f4, vec_mat_mul(*f4, c, h)) != code.is_codeword(c)) ok = false;
    });
    return {"f4-orbit-exponent", ok,
            "orbit exponents 1 and 2; cofactor control matrix = code control matrix, "
            "left kernel = code on all 64 vectors"};
}

FixtureResult f4_g0_control(Suite& s) {
    const RingPtr f4 = s.ring("f4");
    const SkewPolynomial g = s.poly("f4", "1;1");  // t - 1, g(0) = -1 != 0
    const MatrixA h = w_control_matrix(g, BigKind::G0);
    const std::vector<std::vector<const char*>> expected = {{"1", "1"}, {"1", "1"}};
    const SigmaDeltaCode code = SigmaDeltaCode::build(big_G0(f4), g);
    bool ok = matches(h, expected) && h == code.control_matrix();
    for_each_tuple(*f4, 2, [&](const std::vector<Residues>& c) {
        if (vec_is_zero(*f4, vec_mat_mul(*f4, c, h)) != code.is_codeword(c)) ok = false;
    });
    // degenerate case g = G0: cofactor 1, kernel only the zero vector
    const MatrixA full = w_control_matrix(big_G0(f4), BigKind::G0);
    std::size_t kernel = 0;
    for_each_tuple(*f4, 2, [&](const std::vector<Residues>& c) {
        if (vec_is_zero(*f4, vec_mat_mul(*f4, c, full))) ++kernel;
    });
    ok = ok && kernel == 1;
    return {"f4-g0-control", ok,
            "G0 cofactor control matrix: rows (1,1); kernel = code on all 16 vectors; "
            "degenerate g = G0 kernel is trivial"};
}

FixtureResult f4_vandermonde_wcode(Suite& s) {
    const RingPtr f4 = s.ring("f4");
    const std::vector<RingElement> roots = {s.elem("f4", "1"), s.elem("f4", "0,1")};
    const WPolynomial w = WPolynomial::from_roots(roots);
    const SkewPolynomial f = big_G(f4);  // t^3 - t
    const SigmaDeltaCode code = SigmaDeltaCode::build(f, w.g);
    bool ok = w.g == s.poly("f4", "1;0;1");  // lclm(t-1, t-alpha) = t^2 + 1
    std::size_t agreements = 0, codewords = 0;
    for_each_tuple(*f4, 3, [&](const std::vector<Residues>& c) {
        const bool via_v = w_code_membership(c, roots);
        const bool via_code = code.is_codeword(c);
        if (via_v == via_code) ++agreements;
        if (via_code) ++codewords;
    });
    // Vandermonde composed with the generator matrix gives zero
    const MatrixA v = vandermonde_matrix(roots, 3);
    ok = ok && mat_mul(code.generator_matrix(), v).is_zero();
    ok = ok && agreements == 64 && codewords == 4;
    return {"f4-vandermonde-wcode", ok,
            "c*V = 0 agrees with is_codeword on all 64 vectors, |C| = " +
                std::to_string(codewords)};
}

FixtureResult f4_coset_lemma(Suite& s) {
    const RingPtr f4 = s.ring("f4");
    const SkewPolynomial f = big_G(f4);
    const SkewPolynomial g = s.poly("f4", "1;0;1");
    const SigmaDeltaCode code = SigmaDeltaCode::build(f, g);
    // the residues p*g for deg p < deg h' enumerate the code exactly;
    // this instance has deg h' = 1, so p ranges over the constants
    const int hdeg = code.h_prime().degree();
    std::set<RowVector> from_cosets;
    if (hdeg == 1)
        for (const Residues& p : f4->all_elements()) {
            const SkewPolynomial pg = skew_mul(SkewPolynomial::constant(f4, p), g);
            from_cosets.insert(phi_residue(pg, f));
        }
    std::set<RowVector> from_sweep;
    for_each_tuple(*f4, 3, [&](const std::vector<Residues>& c) {
        if (code.is_codeword(c)) from_sweep.insert(c);
    });
    const bool ok = hdeg == 1 && from_cosets == from_sweep && from_sweep.size() == 4;
    return {"f4-coset-lemma", ok,
            "residues of p*g over deg p < deg h' = the 4 codewords of Rg/RG"};
}

FixtureResult tri_non_inner(Suite& s) {
    const RingPtr tri = s.ring("tri2");
    const auto laws = tri->check_laws();
    const auto witness = tri->inner_delta_witness();
    const bool delta_nonzero = !tri->is_zero(tri->delta(tri->parse_element("0,1,0")));
    const bool ok = laws.ok && laws.exhaustive && !witness && delta_nonzero;
    return {"tri-non-inner", ok,
            "twisted Leibniz law exhaustive on 64 pairs; no m realizes delta as m*r - "
            "sigma(r)*m; delta != 0"};
}

}  // namespace

std::vector<FixtureResult> run_reference_suite(const std::string& config_dir) {
    Suite s(config_dir);
    using Fn = std::function<FixtureResult(Suite&)>;
    const std::vector<std::pair<const char*, Fn>> fixtures = {
        {"f4-factorizations", f4_factorizations},
        {"f4-factor-search", f4_factor_search},
        {"f5-generator-matrix", f5_generator_matrix},
        {"f5-cofactor", f5_cofactor},
        {"f5-control-matrix", f5_control_matrix},
        {"f5-derivation-square", f5_derivation_square},
        {"f5-root-census", f5_root_census},
        {"f4-big-g", [](Suite& st) { return big_g_literals(st, "f4", "0;1;0;1", "1;0;1", "f4-big-g"); }},
        {"f8-big-g", [](Suite& st) { return big_g_literals(st, "f8", "0;1;0;0;1", "1;0;0;1", "f8-big-g"); }},
        {"f4-semi-invariance", [](Suite& st) { return semi_invariance(st, "f4", "f4-semi-invariance"); }},
        {"f8-semi-invariance", [](Suite& st) { return semi_invariance(st, "f8", "f8-semi-invariance"); }},
        {"f4-factor-swap", f4_factor_swap},
        {"w-minimality", w_minimality},
        {"f4-w-characterization", f4_w_characterization},
        {"f4-orbit-exponent", f4_orbit_exponent},
        {"f4-g0-control", f4_g0_control},
        {"f4-vandermonde-wcode", f4_vandermonde_wcode},
        {"f4-coset-lemma", f4_coset_lemma},
        {"tri-non-inner", tri_non_inner},
    };

    std::vector<FixtureResult> results;
    results.reserve(fixtures.size());
    for (const auto& [name, fn] : fixtures) {
        try {
            results.push_back(fn(s));
        } catch (const std::exception& e) {
            results.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    return results;
}

std::string format_report(const std::vector<FixtureResult>& results) {
    std::ostringstream os;
    for (const FixtureResult& r : results)
        os << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << ' ' << r.detail << '\n';
    return os.str();
}

}  // namespace orecodes
