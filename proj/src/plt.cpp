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

#include "orecodes/plt.hpp"

#include <cassert>

namespace orecodes {

PseudoLinearMap::PseudoLinearMap(MatrixA c) : c_(std::move(c)) {
    if (!c_.is_square()) throw std::invalid_argument("PseudoLinearMap: matrix must be square");
}

RowVector PseudoLinearMap::apply(const RowVector& v) const {
    if (v.size() != dim()) throw std::invalid_argument("PseudoLinearMap: dimension mismatch");
    const Ring& R = *ring();
    return vec_add(R, vec_mat_mul(R, vec_sigma(R, v), c_), vec_delta(R, v));
}

RowVector PseudoLinearMap::power(RowVector v, std::uint64_t k) const {
    for (std::uint64_t i = 0; i < k; ++i) v = apply(v);
    return v;
}

MatrixA companion_matrix(const SkewPolynomial& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("companion_matrix: f must be monic of degree >= 1");
    const RingPtr& rp = f.ring();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    MatrixA c(rp, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c.set(i, i + 1, rp->one());
    for (std::size_t j = 0; j < n; ++j) c.set(n - 1, j, rp->neg(f.coeff(j)));
    return c;
}

PseudoLinearMap plt_of(const SkewPolynomial& f) { return PseudoLinearMap(companion_matrix(f)); }

RowVector poly_apply(const SkewPolynomial& p, const PseudoLinearMap& t, const RowVector& v) {
    require_same_ring(*p.ring(), *t.ring(), "poly_apply");
    if (v.size() != t.dim()) throw std::invalid_argument("poly_apply: dimension mismatch");
    const Ring& R = *p.ring();
    RowVector acc = vec_zero(R, v.size());
    RowVector tv = v;  // T^i(v)
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) tv = t.apply(tv);
        if (!R.is_zero(p.coeffs()[i]))
            acc = vec_add(R, acc, vec_scale(R, p.coeffs()[i], tv));
    }
    return acc;
}

namespace {

RowVector padded_coeffs(const SkewPolynomial& p, std::size_t n) {
    RowVector v = vec_zero(*p.ring(), n);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i] = p.coeffs()[i];
    return v;
}

RowVector unit_vector(const Ring& ring, std::size_t n) {
    RowVector e1 = vec_zero(ring, n);
    e1[0] = ring.one();
    return e1;
}

}  // namespace

RowVector phi_residue(const SkewPolynomial& p, const SkewPolynomial& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("phi_residue: f must be monic of degree >= 1");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    RowVector by_division = padded_coeffs(div_right(p, f).r, n);
#ifndef NDEBUG
    RowVector by_plt = poly_apply(p, plt_of(f), unit_vector(*f.ring(), n));
    assert(by_division == by_plt && "phi_residue: division and PLT routes disagree");
#endif
    return by_division;
}

bool membership_check(const SkewPolynomial& p, const SkewPolynomial& q, const SkewPolynomial& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("membership_check: f must be monic of degree >= 1");
    if (q.degree() >= f.degree())
        throw std::invalid_argument("membership_check: deg q must be < deg f");
    const Ring& R = *f.ring();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const bool by_plt = vec_is_zero(R, poly_apply(p, plt_of(f), padded_coeffs(q, n)));
#ifndef NDEBUG
    const bool by_division = div_right(skew_mul(p, q), f).r.is_zero();
    assert(by_plt == by_division && "membership_check: PLT and division routes disagree");
#endif
    return by_plt;
}

RingElement word_operator(std::uint64_t n, std::uint64_t i, const RingElement& a) {
    if (i > n) throw std::invalid_argument("word_operator: need i <= n");
    if (n > 20) throw budget_error("word_operator: 2^n word enumeration capped at n = 20");
    const Ring& R = *a.ring();
    Residues acc = R.zero();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != i) continue;
        Residues w = a.coeffs();
        for (std::uint64_t bit = 0; bit < n; ++bit)
            w = (mask >> bit) & 1 ? R.sigma(w) : R.delta(w);
        acc = R.add(acc, w);
    }
    return RingElement(a.ring(), std::move(acc));
}

MatrixA ni_matrix(const MatrixA& c, std::uint64_t j) {
    if (!c.is_square()) throw std::invalid_argument("ni_matrix: matrix must be square");
    MatrixA n = MatrixA::identity(c.ring(), c.rows());
    for (std::uint64_t step = 0; step < j; ++step)
        n = mat_add(mat_mul(n.map_sigma(), c), n.map_delta());
    return n;
}

}  // namespace orecodes
