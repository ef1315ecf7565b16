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

// Wedderburn polynomials over F_q[t;theta] with theta the Frobenius
// a -> a^p: the universal vanishing polynomials G = t^((p-1)n+1) - t and
// G0 = t^((p-1)n) - 1, their semi-invariance and factor-swap laws, and
// generalized Vandermonde control matrices built from root sets.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orecodes/matrix.hpp"
#include "orecodes/skew_polynomial.hpp"

namespace orecodes {

/// Which universal polynomial a statement refers to.
enum class BigKind {
    G,   // t^((p-1)n+1) - t, vanishes on every element of F_q
    G0,  // t^((p-1)n) - 1, vanishes on every nonzero element; central
};

/// True when the ring is F_q (prime or extension field), delta = 0, and
/// sigma is the Frobenius a -> a^p (any sigma qualifies when n = 1,
/// where the Frobenius is the identity).
bool is_frobenius_field_context(const Ring& ring);

/// t^((p-1)n+1) - t over F_q[t;theta].  Throws std::invalid_argument
/// outside the Frobenius field context.  For small fields the universal
/// vanishing property eval_right(G, a) = 0 is re-verified on return.
SkewPolynomial big_G(const RingPtr& ring);

/// t^((p-1)n) - 1, the central part of big_G (G = G0 * t = t * G0);
/// vanishes on every nonzero a.  Same context requirements.
SkewPolynomial big_G0(const RingPtr& ring);

/// A monic polynomial together with a root set certifying that it is a
/// least left common multiple of linear factors: g = lclm(t - a_i) with
/// deg g equal to the number of roots.
struct WPolynomial {
    SkewPolynomial g;
    std::vector<RingElement> roots;

    /// Builds lclm_linear(roots) and checks the degree condition.
    /// Throws std::invalid_argument when deg(lclm) < roots.size(), i.e.
    /// the set is dependent and certifies only a smaller polynomial.
    static WPolynomial from_roots(const std::vector<RingElement>& roots);
};

/// n x r matrix with entry (i, j) = N_i(roots[j]) (0-based), the
/// generalized Vandermonde matrix of the root sequence.
MatrixA vandermonde_matrix(const std::vector<RingElement>& roots, std::size_t n);

/// True iff c * V = 0 for V = vandermonde_matrix(roots, c.size()):
/// membership in the code cut out by the root set.
bool w_code_membership(const RowVector& c, const std::vector<RingElement>& roots);

/// Checks the two structure laws: G * h = theta(h) * G for random h of
/// degree <= max_deg (theta applied coefficient-wise, fixing t), and
/// centrality of G0 (commutes with t and with every constant).
bool check_semi_invariance_laws(const RingPtr& ring, std::uint32_t max_deg = 3,
                                std::size_t trials = 100, std::uint64_t seed = 1);

/// Given a factorization h * g of G (resp. G0), returns the left-right
/// swapped factor: theta(g) with theta(g) * h = G, resp. g itself with
/// g * h = G0.  Throws std::invalid_argument when h * g is not the
/// chosen polynomial, std::logic_error if the swap identity fails.
SkewPolynomial factor_swap(const SkewPolynomial& g, const SkewPolynomial& h, BigKind which);

/// True iff monic g right-divides G, which characterizes the
/// polynomials arising as lclm of linear factors.
bool is_w_polynomial(const SkewPolynomial& g);

/// Least l in [1, order(theta)] with coefficient-wise theta^l(g) = g,
/// for g a right factor of G.  Also certifies the two-sided
/// factorization G = h * g = g * theta^(l-1)(h).
std::uint32_t orbit_exponent(const SkewPolynomial& g);

/// Control matrix of the code R g / R big (big = G or G0) computed from
/// division cofactors alone, without knowing a root set for g: rows are
/// T_big^i applied to the residue of the twisted cofactor.  For G0 the
/// constant term g(0) must be nonzero and the cofactor must be
/// two-sided (unavailable_error otherwise).
MatrixA w_control_matrix(const SkewPolynomial& g, BigKind which);

}  // namespace orecodes
