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

#ifndef ORECODES_SKEW_POLYNOMIAL_HPP
#define ORECODES_SKEW_POLYNOMIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orecodes/ring.hpp"

namespace orecodes {

/// Polynomial in A[t; sigma, delta]: sums a_0 + a_1 t + ... with the
/// commutation law t*a = sigma(a)*t + delta(a).  Coefficients ascending,
/// trailing zeros stripped; the zero polynomial is the empty sequence
/// (degree() reports -1, standing in for degree -infinity).
class SkewPolynomial {
   public:
    explicit SkewPolynomial(RingPtr ring);  // the zero polynomial
    SkewPolynomial(RingPtr ring, std::vector<Residues> coeffs);

    static SkewPolynomial zero(const RingPtr& ring) { return SkewPolynomial(ring); }
    static SkewPolynomial one(const RingPtr& ring);
    static SkewPolynomial t(const RingPtr& ring);
    static SkewPolynomial constant(const RingPtr& ring, Residues c);
    static SkewPolynomial monomial(const RingPtr& ring, Residues c, std::size_t deg);
    /// t - a
    static SkewPolynomial linear(const RingPtr& ring, const Residues& a);
    /// Semicolon-separated ascending coefficients, each a ring-element
    /// literal, e.g. "0,4,0,0,0; 0,3; 1" = (4x) + (3x)t + t^2.
    static SkewPolynomial parse(const RingPtr& ring, std::string_view text);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Residues>& coeffs() const noexcept { return coeffs_; }
    /// -1 encodes the zero polynomial ("degree minus infinity").
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;
    /// Coefficient of t^i; zero beyond the degree.
    Residues coeff(std::size_t i) const;
    RingElement leading_coeff() const;

    std::string str() const;

    friend SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b);
    friend SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b);
    friend SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b);
    SkewPolynomial operator-() const;
    bool operator==(const SkewPolynomial& other) const;
    bool operator!=(const SkewPolynomial& other) const { return !(*this == other); }

   private:
    void strip();

    RingPtr ring_;
    std::vector<Residues> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const SkewPolynomial& f);

/// Product under the commutation law; same as operator*.
SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g);

struct DivResult {
    SkewPolynomial q;
    SkewPolynomial r;
};

/// f = q*g + r with deg r < deg g.  g must be monic or have a unit
/// leading coefficient (normalized internally); otherwise
/// unavailable_error.
DivResult div_right(const SkewPolynomial& f, const SkewPolynomial& g);

/// f = g*q + r with deg r < deg g.  g must be monic; requires an
/// invertible sigma (true for every supported ring).
DivResult div_left(const SkewPolynomial& f, const SkewPolynomial& g);

/// Right evaluation: the remainder of f upon right division by (t - a),
/// computed as sum f_i * N_i(a).
RingElement eval_right(const SkewPolynomial& f, const RingElement& a);

/// N_0(a) = 1, N_{i+1}(a) = sigma(N_i(a))*a + delta(N_i(a)).
RingElement ni_value(const RingElement& a, std::uint64_t i);

/// Monic common left multiple of {t - a_i} by the conjugation-closure
/// recursion: g_1 = t - a_1, then g <- (t - c)*g with
/// c = (sigma(v)*a + delta(v))*v^{-1}, v = eval_right(g, a), skipping
/// points already annihilated (v = 0).  Over division rings this is the
/// least left common multiple; elsewhere a common multiple certified by
/// the zero-evaluation postcondition.  A non-zero non-unit v raises
/// lclm_error carrying the point index.
SkewPolynomial lclm_linear(const std::vector<RingElement>& points);

/// Coefficient-wise sigma^k (t itself is fixed).
SkewPolynomial twist_coeffs(const SkewPolynomial& f, std::uint64_t k);

/// Rf = fR, decided by two-sided divisibility of f*a, a*f, f*t, t*f
/// over all ring elements (finite rings only; budget on |A|).
bool is_invariant(const SkewPolynomial& f, std::uint64_t budget = 1u << 16);

/// f*a = sigma^k(a)*f for all a, and f*t = t*f.
bool check_semi_invariant(const SkewPolynomial& f, std::uint64_t k,
                          std::uint64_t budget = 1u << 16);

/// All monic g of degree r with div_right(f, g).r = 0, each paired with
/// its left cofactor h (f = h*g), sorted by g's coefficient sequence.
/// Field coefficients only; |A|^(r+1) must stay within the budget.
std::vector<std::pair<SkewPolynomial, SkewPolynomial>> factor_search(
    const SkewPolynomial& f, std::uint32_t r, std::uint64_t budget = 1'000'000);

}  // namespace orecodes

#endif
