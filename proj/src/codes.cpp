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

#include "orecodes/codes.hpp"

#include <cassert>

namespace orecodes {

SigmaDeltaCode::SigmaDeltaCode(SkewPolynomial f, SkewPolynomial g, SkewPolynomial h_prime,
                               std::optional<SkewPolynomial> h)
    : f_(std::move(f)), g_(std::move(g)), h_prime_(std::move(h_prime)), h_(std::move(h)) {
    n_ = static_cast<std::size_t>(f_.degree());
    k_ = n_ - static_cast<std::size_t>(g_.degree());
}

SigmaDeltaCode SigmaDeltaCode::build(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_ring(*f.ring(), *g.ring(), "build_code");
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("build_code: f must be monic of degree >= 1");
    if (!g.is_monic()) throw std::invalid_argument("build_code: g must be monic");
    if (g.degree() > f.degree())
        throw std::invalid_argument("build_code: deg g must be <= deg f");

    DivResult right = div_right(f, g);
    if (!right.r.is_zero())
        throw std::invalid_argument("build_code: g does not right-divide f, remainder " +
                                    right.r.str());

    std::optional<SkewPolynomial> h;
    try {
        DivResult left = div_left(f, g);
        if (left.r.is_zero()) h = std::move(left.q);
    } catch (const unavailable_error&) {
        // left division not possible: the code still exists, but the
        // two-sided factorization (and with it the control matrix) does not
    }
    return SigmaDeltaCode(f, g, std::move(right.q), std::move(h));
}

RowVector SigmaDeltaCode::g_bar() const { return phi_residue(g_, f_); }

RowVector SigmaDeltaCode::h_bar() const {
    if (!h_)
        throw unavailable_error(
            "control data unavailable: f = g*h factorization does not exist (g is not a left "
            "factor of f)");
    return phi_residue(*h_, f_);
}

MatrixA SigmaDeltaCode::generator_matrix() const {
    const PseudoLinearMap t = plt_of(f_);
    std::vector<RowVector> rows;
    rows.reserve(k_);
    RowVector v = g_bar();
    for (std::size_t i = 0; i < k_; ++i) {
        rows.push_back(v);
        if (i + 1 < k_) v = t.apply(v);
    }
    MatrixA m(ring(), k_, n_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n_; ++j) m.set(i, j, std::move(rows[i][j]));
    return m;
}

MatrixA SigmaDeltaCode::control_matrix() const {
    const PseudoLinearMap t = plt_of(f_);
    RowVector v = h_bar();
    MatrixA m(ring(), n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) m.set(i, j, v[j]);
        if (i + 1 < n_) v = t.apply(v);
    }
    return m;
}

RowVector SigmaDeltaCode::encode(const RowVector& msg) const {
    if (msg.size() != k_) throw std::invalid_argument("encode: message length must be k");
    const Ring& R = *ring();
    const PseudoLinearMap t = plt_of(f_);
    RowVector acc = vec_zero(R, n_);
    RowVector row = g_bar();
    for (std::size_t i = 0; i < k_; ++i) {
        if (!R.is_zero(msg[i])) acc = vec_add(R, acc, vec_scale(R, msg[i], row));
        if (i + 1 < k_) row = t.apply(row);
    }
    return acc;
}

bool SigmaDeltaCode::is_codeword_route(const RowVector& c, Route route) const {
    if (c.size() != n_) throw std::invalid_argument("is_codeword: vector length must be n");
    const Ring& R = *ring();
    switch (route) {
        case Route::division:
            return vec_is_zero(R, syndrome(c));
        case Route::plt_annihilator: {
            const PseudoLinearMap t = plt_of(f_);
            RowVector acc = vec_zero(R, n_);
            RowVector w = h_bar();
            for (std::size_t i = 0; i < n_; ++i) {
                if (!R.is_zero(c[i])) acc = vec_add(R, acc, vec_scale(R, c[i], w));
                if (i + 1 < n_) w = t.apply(w);
            }
            return vec_is_zero(R, acc);
        }
        case Route::control:
            return vec_is_zero(R, vec_mat_mul(R, c, control_matrix()));
    }
    return false;
}

bool SigmaDeltaCode::is_codeword(const RowVector& c) const {
    const bool by_division = is_codeword_route(c, Route::division);
#ifndef NDEBUG
    if (h_) {
        assert(is_codeword_route(c, Route::plt_annihilator) == by_division &&
               "membership routes disagree");
        assert(is_codeword_route(c, Route::control) == by_division &&
               "membership routes disagree");
    }
#endif
    return by_division;
}

RowVector SigmaDeltaCode::syndrome(const RowVector& c) const {
    if (c.size() != n_) throw std::invalid_argument("syndrome: vector length must be n");
    const SkewPolynomial ct(ring(), c);
    const SkewPolynomial rem = div_right(ct, g_).r;
    RowVector out = vec_zero(*ring(), r());
    for (std::size_t i = 0; i < rem.coeffs().size(); ++i) out[i] = rem.coeffs()[i];
    return out;
}

bool SigmaDeltaCode::tf_stability() const {
    const PseudoLinearMap t = plt_of(f_);
    const MatrixA gen = generator_matrix();
    for (std::size_t i = 0; i < gen.rows(); ++i)
        if (!is_codeword(t.apply(gen.row(i)))) return false;
    return true;
}

std::optional<std::uint64_t> SigmaDeltaCode::min_distance_bruteforce(std::uint64_t budget) const {
    if (k_ == 0) return std::nullopt;  // no nonzero codewords
    const Ring& R = *ring();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < k_; ++i) {
        if (R.cardinality() != 0 && space > budget / R.cardinality())
            throw budget_error("min_distance_bruteforce: |A|^k exceeds budget " +
                               std::to_string(budget));
        space *= R.cardinality();
    }

    std::uint64_t best = n_ + 1;
    RowVector msg = vec_zero(R, k_);
    while (true) {
        // odometer: last component cycles fastest
        bool more = false;
        for (std::size_t i = k_; i-- > 0;) {
            if (R.next_element(msg[i])) {
                more = true;
                break;
            }
        }
        if (!more) break;
        const std::uint64_t w = vec_weight(R, encode(msg));
        if (w != 0 && w < best) best = w;
    }
    if (best > n_) return std::nullopt;
    return best;
}

MatrixA echelon_columns(const MatrixA& m) {
    const RingPtr& rp = m.ring();
    const Ring& R = *rp;
    if (!R.is_field())
        throw unavailable_error("echelon_columns: column reduction requires field coefficients");

    // Gaussian sweep over columns: reduce each candidate column by the
    // pivots found so far; accept it (by original index) if a nonzero
    // entry survives.
    std::vector<RowVector> pivots;          // reduced column vectors
    std::vector<std::size_t> pivot_rows;    // their pivot positions
    std::vector<std::size_t> chosen;        // original column indices
    for (std::size_t j = 0; j < m.cols(); ++j) {
        RowVector col(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.entry(i, j);
        for (std::size_t pk = 0; pk < pivots.size(); ++pk) {
            const Residues& lead = col[pivot_rows[pk]];
            if (R.is_zero(lead)) continue;
            RowVector scaled = vec_scale(R, lead, pivots[pk]);
            col = vec_sub(R, col, scaled);
        }
        std::size_t pivot = col.size();
        for (std::size_t i = 0; i < col.size(); ++i)
            if (!R.is_zero(col[i])) {
                pivot = i;
                break;
            }
        if (pivot == col.size()) continue;  // dependent column
        const Residues inv = *R.invert(col[pivot]);
        for (Residues& e : col) e = R.mul(inv, e);
        pivots.push_back(std::move(col));
        pivot_rows.push_back(pivot);
        chosen.push_back(j);
    }

    MatrixA out(rp, m.rows(), chosen.size());
    for (std::size_t c = 0; c < chosen.size(); ++c)
        for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, c, m.entry(i, chosen[c]));
    return out;
}

}  // namespace orecodes
