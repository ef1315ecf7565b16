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

#ifndef ORECODES_PLT_HPP
#define ORECODES_PLT_HPP

#include <cstdint>

#include "orecodes/matrix.hpp"
#include "orecodes/skew_polynomial.hpp"

namespace orecodes {

/// The pseudo-linear map v -> sigma(v) C + delta(v) attached to a square
/// matrix C (sigma, delta componentwise on row vectors).  Additive, with
/// T(a v) = sigma(a) T(v) + delta(a) v for scalars a.
class PseudoLinearMap {
   public:
    explicit PseudoLinearMap(MatrixA c);

    const MatrixA& matrix() const noexcept { return c_; }
    const RingPtr& ring() const noexcept { return c_.ring(); }
    std::size_t dim() const noexcept { return c_.rows(); }

    RowVector apply(const RowVector& v) const;
    RowVector power(RowVector v, std::uint64_t k) const;

   private:
    MatrixA c_;
};

/// Companion matrix of monic f of degree n >= 1: superdiagonal ones,
/// last row (-a_0, ..., -a_{n-1}).
MatrixA companion_matrix(const SkewPolynomial& f);

/// T_f, the pseudo-linear map of the companion matrix of f.
PseudoLinearMap plt_of(const SkewPolynomial& f);

/// p(T) applied to v: sum p_i * T^i(v), left scalar coefficients.
RowVector poly_apply(const SkewPolynomial& p, const PseudoLinearMap& t, const RowVector& v);

/// Coefficient vector of p modulo Rf (f monic of degree n): the image
/// of p + Rf under the bijection R/Rf -> A^n.  Computed by division; in
/// debug builds cross-checked against p(T_f)(e_1).
RowVector phi_residue(const SkewPolynomial& p, const SkewPolynomial& f);

/// True iff p*q lies in Rf, decided by p(T_f)(q-bar) = 0 (q-bar the
/// padded coefficient vector of q, deg q < deg f); debug builds
/// cross-check the division route on skew_mul(p, q).
bool membership_check(const SkewPolynomial& p, const SkewPolynomial& q, const SkewPolynomial& f);

/// Sum over all words in {sigma, delta} of length n with exactly i
/// letters sigma (and n-i letters delta), applied to a.  The 2^n word
/// enumeration is capped at n <= 20.
RingElement word_operator(std::uint64_t n, std::uint64_t i, const RingElement& a);

/// N_0(C) = I, N_{j+1}(C) = sigma(N_j(C)) C + delta(N_j(C)), entrywise
/// sigma and delta.
MatrixA ni_matrix(const MatrixA& c, std::uint64_t j);

}  // namespace orecodes

#endif
