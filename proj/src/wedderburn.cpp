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

#include "orecodes/wedderburn.hpp"

#include <stdexcept>
#include <string>

#include "orecodes/errors.hpp"
#include "orecodes/plt.hpp"

namespace orecodes {

namespace {

// cardinality bound below which universal properties are re-verified
// exhaustively on construction
constexpr std::uint64_t kVerifyLimit = 1u << 12;

std::uint64_t field_degree(const Ring& ring) {
    return ring.kind() == RingKind::prime_field ? 1 : ring.spec().n;
}

void require_context(const Ring& ring, const char* where) {
    if (!is_frobenius_field_context(ring))
        throw std::invalid_argument(std::string(where) +
                                    ": requires a finite field with Frobenius sigma and delta=0, got " +
                                    ring.describe());
}

const char* big_name(BigKind which) { return which == BigKind::G ? "G" : "G0"; }

SkewPolynomial big_of(const RingPtr& ring, BigKind which) {
    return which == BigKind::G ? big_G(ring) : big_G0(ring);
}

}  // namespace

bool is_frobenius_field_context(const Ring& ring) {
    const RingSpec& s = ring.spec();
    if (s.delta != DeltaKind::zero) return false;
    if (s.kind == RingKind::prime_field)
        return s.sigma == SigmaKind::identity || s.sigma == SigmaKind::frobenius_power;
    if (s.kind != RingKind::extension_field) return false;
    if (s.n == 1) return s.sigma == SigmaKind::identity || s.sigma == SigmaKind::frobenius_power;
    return s.sigma == SigmaKind::frobenius_power && s.frobenius_exp % s.n == 1;
}

SkewPolynomial big_G(const RingPtr& ring) {
    require_context(*ring, "big_G");
    const std::uint64_t d = (ring->p() - 1) * field_degree(*ring) + 1;
    std::vector<Residues> coeffs(d + 1, ring->zero());
    coeffs[d] = ring->one();
    coeffs[1] = ring->neg(ring->one());
    SkewPolynomial g(ring, std::move(coeffs));
    if (ring->cardinality() <= kVerifyLimit) {
        for (const Residues& a : ring->all_elements())
            if (!eval_right(g, RingElement(ring, a)).is_zero())
                throw std::logic_error("big_G: universal vanishing failed at " +
                                       ring->format_element(a));
    }
    return g;
}

SkewPolynomial big_G0(const RingPtr& ring) {
    require_context(*ring, "big_G0");
    const std::uint64_t d = (ring->p() - 1) * field_degree(*ring);
    std::vector<Residues> coeffs(d + 1, ring->zero());
    coeffs[d] = ring->one();
    coeffs[0] = ring->neg(ring->one());
    SkewPolynomial g(ring, std::move(coeffs));
    if (ring->cardinality() <= kVerifyLimit) {
        for (const Residues& a : ring->all_elements())
            if (!ring->is_zero(a) && !eval_right(g, RingElement(ring, a)).is_zero())
                throw std::logic_error("big_G0: vanishing on units failed at " +
                                       ring->format_element(a));
    }
    return g;
}

WPolynomial WPolynomial::from_roots(const std::vector<RingElement>& roots) {
    SkewPolynomial g = lclm_linear(roots);
    if (g.degree() != static_cast<int>(roots.size()))
        throw std::invalid_argument("WPolynomial: dependent root set, lclm has degree " +
                                    std::to_string(g.degree()) + " < " +
                                    std::to_string(roots.size()));
    return WPolynomial{std::move(g), roots};
}

MatrixA vandermonde_matrix(const std::vector<RingElement>& roots, std::size_t n) {
    if (roots.empty()) throw std::invalid_argument("vandermonde_matrix: empty root sequence");
    if (n == 0) throw std::invalid_argument("vandermonde_matrix: need at least one row");
    const RingPtr& ring = roots.front().ring();
    MatrixA v(ring, n, roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) {
        require_same_ring(*ring, *roots[j].ring(), "vandermonde_matrix");
        RingElement nij = RingElement::one(ring);  // N_0 = 1
        for (std::size_t i = 0; i < n; ++i) {
            v.set(i, j, nij.coeffs());
            if (i + 1 < n) nij = nij.sigma() * roots[j] + nij.delta();
        }
    }
    return v;
}

bool w_code_membership(const RowVector& c, const std::vector<RingElement>& roots) {
    if (roots.empty()) throw std::invalid_argument("w_code_membership: empty root sequence");
    const Ring& ring = *roots.front().ring();
    const MatrixA v = vandermonde_matrix(roots, c.size());
    return vec_is_zero(ring, vec_mat_mul(ring, c, v));
}

bool check_semi_invariance_laws(const RingPtr& ring, std::uint32_t max_deg, std::size_t trials,
                                std::uint64_t seed) {
    const SkewPolynomial g = big_G(ring);
    const SkewPolynomial g0 = big_G0(ring);
    const SkewPolynomial t = SkewPolynomial::t(ring);

    // centrality of G0: commutes with t and with every constant
    if (!(skew_mul(g0, t) == skew_mul(t, g0))) return false;
    for (const Residues& a : ring->all_elements()) {
        const SkewPolynomial ca = SkewPolynomial::constant(ring, a);
        if (!(skew_mul(g0, ca) == skew_mul(ca, g0))) return false;
        // degree-0 case of the semi-invariance law: G * a = theta(a) * G
        const SkewPolynomial cta = SkewPolynomial::constant(ring, ring->sigma(a));
        if (!(skew_mul(g, ca) == skew_mul(cta, g))) return false;
    }

    // G * h = theta(h) * G for random h, theta coefficient-wise
    std::uint64_t state = seed;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<Residues> coeffs(max_deg + 1);
        for (Residues& c : coeffs) c = ring->random_element(state);
        const SkewPolynomial h(ring, std::move(coeffs));
        if (!(skew_mul(g, h) == skew_mul(twist_coeffs(h, 1), g))) return false;
    }
    return true;
}

SkewPolynomial factor_swap(const SkewPolynomial& g, const SkewPolynomial& h, BigKind which) {
    require_same_ring(*g.ring(), *h.ring(), "factor_swap");
    if (!g.is_monic() || !h.is_monic())
        throw std::invalid_argument("factor_swap: both factors must be monic");
    const SkewPolynomial big = big_of(g.ring(), which);
    if (!(skew_mul(h, g) == big))
        throw std::invalid_argument(std::string("factor_swap: h * g is not ") + big_name(which));
    const SkewPolynomial swapped = which == BigKind::G ? twist_coeffs(g, 1) : g;
    if (!(skew_mul(swapped, h) == big))
        throw std::logic_error(std::string("factor_swap: swap identity failed for ") +
                               big_name(which));
    return swapped;
}

bool is_w_polynomial(const SkewPolynomial& g) {
    if (!g.is_monic()) throw std::invalid_argument("is_w_polynomial: g must be monic");
    return div_right(big_G(g.ring()), g).r.is_zero();
}

std::uint32_t orbit_exponent(const SkewPolynomial& g) {
    const RingPtr& ring = g.ring();
    const SkewPolynomial big = big_G(ring);
    if (!g.is_monic()) throw std::invalid_argument("orbit_exponent: g must be monic");
    const DivResult d = div_right(big, g);
    if (!d.r.is_zero())
        throw std::invalid_argument("orbit_exponent: g is not a right factor of G");

    const std::uint32_t order = ring->sigma_order();
    std::uint32_t l = 0;
    for (std::uint32_t cand = 1; cand <= order; ++cand) {
        if (twist_coeffs(g, cand) == g) {
            l = cand;
            break;
        }
    }
    if (l == 0)
        throw unavailable_error("orbit_exponent: no exponent l <= " + std::to_string(order) +
                                " fixes g; twisted-factor law violated");
    if (!(skew_mul(g, twist_coeffs(d.q, l - 1)) == big))
        throw std::logic_error("orbit_exponent: two-sided factorization G = h*g = g*theta^(l-1)(h) failed");
    return l;
}

MatrixA w_control_matrix(const SkewPolynomial& g, BigKind which) {
    const RingPtr& ring = g.ring();
    const SkewPolynomial big = big_of(ring, which);
    if (!g.is_monic()) throw std::invalid_argument("w_control_matrix: g must be monic");
    const DivResult d = div_right(big, g);
    if (!d.r.is_zero())
        throw std::invalid_argument(std::string("w_control_matrix: g is not a right factor of ") +
                                    big_name(which));

    SkewPolynomial cofactor = d.q;
    if (which == BigKind::G) {
        const std::uint32_t l = orbit_exponent(g);  // also certifies the two-sided form
        cofactor = twist_coeffs(cofactor, l - 1);
    } else {
        if (ring->is_zero(g.coeff(0)))
            throw std::invalid_argument("w_control_matrix: G0 case needs g(0) != 0");
        if (!(skew_mul(g, cofactor) == big))
            throw unavailable_error("w_control_matrix: cofactor of g in G0 is not two-sided");
    }

    const std::size_t nb = static_cast<std::size_t>(big.degree());
    const PseudoLinearMap t = plt_of(big);
    RowVector v = phi_residue(cofactor, big);
    MatrixA m(ring, nb, nb);
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = 0; j < nb; ++j) m.set(i, j, v[j]);
        if (i + 1 < nb) v = t.apply(v);
    }
    return m;
}

}  // namespace orecodes
