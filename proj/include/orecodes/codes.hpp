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

#ifndef ORECODES_CODES_HPP
#define ORECODES_CODES_HPP

#include <cstdint>
#include <optional>

#include "orecodes/plt.hpp"

namespace orecodes {

/// The code C = phi(Rg/Rf) in A^n cut out by a monic right factor g of a
/// monic f of degree n: the length-n coefficient vectors of the left
/// multiples of g, taken modulo Rf.  k = n - deg g rows generate it as a
/// left A-module.
class SigmaDeltaCode {
   public:
    /// Requires f, g monic with div_right(f, g).r = 0; records the left
    /// cofactor h' (f = h' g) and, when g also left-divides f, the right
    /// cofactor h (f = g h) that underwrites the control matrix.
    static SigmaDeltaCode build(const SkewPolynomial& f, const SkewPolynomial& g);

    const SkewPolynomial& f() const noexcept { return f_; }
    const SkewPolynomial& g() const noexcept { return g_; }
    /// Cofactor with f = h' * g; always present.
    const SkewPolynomial& h_prime() const noexcept { return h_prime_; }
    /// Cofactor with f = g * h; absent when g is not a left factor of f.
    const std::optional<SkewPolynomial>& h() const noexcept { return h_; }
    const RingPtr& ring() const noexcept { return f_.ring(); }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t r() const noexcept { return n_ - k_; }

    /// k x n matrix, row i = T_f^i(g-bar) for i = 0..k-1.
    MatrixA generator_matrix() const;
    /// n x n matrix H, row i = T_f^{i-1}(h-bar); its left annihilator is
    /// exactly the code.  unavailable_error without the two-sided
    /// factorization.
    MatrixA control_matrix() const;

    RowVector encode(const RowVector& msg) const;

    enum class Route {
        plt_annihilator,  // sum c_i T_f^i(h-bar) = 0
        division,         // remainder of c(t) by g vanishes
        control,          // c * H = 0
    };
    /// Release-mode membership is the division route; debug builds
    /// assert all available routes agree.
    bool is_codeword(const RowVector& c) const;
    bool is_codeword_route(const RowVector& c, Route route) const;

    /// Length-r remainder coefficients of c(t) upon right division by g;
    /// zero exactly on codewords.
    RowVector syndrome(const RowVector& c) const;

    /// T_f maps every generator row back into the code.
    bool tf_stability() const;

    /// phi(g + Rf): deg-g coefficients of g padded to length n, the
    /// first generator row.
    RowVector g_bar() const;
    /// phi(h + Rf); unavailable_error when h does not exist.
    RowVector h_bar() const;

    /// Minimum Hamming weight over all |A|^k - 1 nonzero messages;
    /// nullopt for the zero code (k = 0).  budget_error when the message
    /// space exceeds the budget.
    std::optional<std::uint64_t> min_distance_bruteforce(std::uint64_t budget = 1'000'000) const;

   private:
    SigmaDeltaCode(SkewPolynomial f, SkewPolynomial g, SkewPolynomial h_prime,
                   std::optional<SkewPolynomial> h);

    SkewPolynomial f_;
    SkewPolynomial g_;
    SkewPolynomial h_prime_;
    std::optional<SkewPolynomial> h_;
    std::size_t n_ = 0, k_ = 0;
};

/// A maximal set of left-linearly independent columns of m, found by
/// column echelon reduction.  Field coefficients only (independence is
/// delicate over rings with zero divisors): unavailable_error otherwise.
/// The left annihilator of the result equals that of m.
MatrixA echelon_columns(const MatrixA& m);

}  // namespace orecodes

#endif
