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

#include "orecodes/skew_polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace orecodes {
namespace {

// t * (sum h_i t^i) = sum (sigma(h_i) t^{i+1} + delta(h_i) t^i)
std::vector<Residues> times_t(const Ring& ring, const std::vector<Residues>& h) {
    std::vector<Residues> out(h.size() + 1, ring.zero());
    for (std::size_t i = 0; i < h.size(); ++i) {
        out[i + 1] = ring.add(out[i + 1], ring.sigma(h[i]));
        out[i] = ring.add(out[i], ring.delta(h[i]));
    }
    return out;
}

void require_monic(const SkewPolynomial& g, const char* where) {
    if (!g.is_monic())
        throw unavailable_error(std::string(where) + ": divisor must be monic, got " + g.str());
}

}  // namespace

SkewPolynomial::SkewPolynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("SkewPolynomial: null ring");
}

SkewPolynomial::SkewPolynomial(RingPtr ring, std::vector<Residues> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (!ring_) throw std::invalid_argument("SkewPolynomial: null ring");
    for (const Residues& c : coeffs_)
        if (c.size() != ring_->width())
            throw std::invalid_argument("SkewPolynomial: coefficient width mismatch");
    strip();
}

void SkewPolynomial::strip() {
    while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

SkewPolynomial SkewPolynomial::one(const RingPtr& ring) {
    return SkewPolynomial(ring, {ring->one()});
}

SkewPolynomial SkewPolynomial::t(const RingPtr& ring) {
    return SkewPolynomial(ring, {ring->zero(), ring->one()});
}

SkewPolynomial SkewPolynomial::constant(const RingPtr& ring, Residues c) {
    return SkewPolynomial(ring, {std::move(c)});
}

SkewPolynomial SkewPolynomial::monomial(const RingPtr& ring, Residues c, std::size_t deg) {
    std::vector<Residues> coeffs(deg + 1, ring->zero());
    coeffs[deg] = std::move(c);
    return SkewPolynomial(ring, std::move(coeffs));
}

SkewPolynomial SkewPolynomial::linear(const RingPtr& ring, const Residues& a) {
    return SkewPolynomial(ring, {ring->neg(a), ring->one()});
}

SkewPolynomial SkewPolynomial::parse(const RingPtr& ring, std::string_view text) {
    std::vector<Residues> coeffs;
    std::string part;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, part, ';')) coeffs.push_back(ring->parse_element(part));
    if (coeffs.empty()) throw std::invalid_argument("polynomial literal: empty");
    return SkewPolynomial(ring, std::move(coeffs));
}

bool SkewPolynomial::is_monic() const {
    return !coeffs_.empty() && ring_->is_one(coeffs_.back());
}

Residues SkewPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ring_->zero();
}

RingElement SkewPolynomial::leading_coeff() const {
    if (coeffs_.empty()) return RingElement::zero(ring_);
    return RingElement(ring_, coeffs_.back());
}

std::string SkewPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += "; ";
        s += ring_->format_element(coeffs_[i]);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const SkewPolynomial& f) { return os << f.str(); }

SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b) {
    require_same_ring(*a.ring_, *b.ring_, "polynomial +");
    const Ring& R = *a.ring_;
    std::vector<Residues> out(std::max(a.coeffs_.size(), b.coeffs_.size()), R.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.coeffs_.size()) out[i] = R.add(out[i], a.coeffs_[i]);
        if (i < b.coeffs_.size()) out[i] = R.add(out[i], b.coeffs_[i]);
    }
    return SkewPolynomial(a.ring_, std::move(out));
}

SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b) {
    return a + (-b);
}

SkewPolynomial SkewPolynomial::operator-() const {
    std::vector<Residues> out = coeffs_;
    for (Residues& c : out) c = ring_->neg(c);
    return SkewPolynomial(ring_, std::move(out));
}

bool SkewPolynomial::operator==(const SkewPolynomial& other) const {
    require_same_ring(*ring_, *other.ring_, "polynomial ==");
    return coeffs_ == other.coeffs_;
}

SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b) {
    return skew_mul(a, b);
}

SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_ring(*f.ring(), *g.ring(), "skew_mul");
    const RingPtr& rp = f.ring();
    const Ring& R = *rp;
    if (f.is_zero() || g.is_zero()) return SkewPolynomial(rp);

    // f*g = sum_i f_i * (t^i * g): walk t^i * g up by the commutation law
    std::vector<Residues> acc(f.coeffs().size() + g.coeffs().size() - 1, R.zero());
    std::vector<Residues> tig = g.coeffs();  // t^i * g, starting at i = 0
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Residues& fi = f.coeffs()[i];
        if (!R.is_zero(fi))
            for (std::size_t j = 0; j < tig.size(); ++j)
                acc[j] = R.add(acc[j], R.mul(fi, tig[j]));
        if (i + 1 < f.coeffs().size()) tig = times_t(R, tig);
    }
    return SkewPolynomial(rp, std::move(acc));
}

DivResult div_right(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_ring(*f.ring(), *g.ring(), "div_right");
    const RingPtr& rp = f.ring();
    const Ring& R = *rp;
    if (g.is_zero()) throw unavailable_error("div_right: division by the zero polynomial");
    if (!g.is_monic()) {
        // normalize a unit leading coefficient: f = q'*(u^{-1} g) + r
        // gives q = q' * u^{-1}
        auto u_inv = R.invert(g.coeffs().back());
        if (!u_inv)
            throw unavailable_error("div_right: leading coefficient of divisor is not a unit");
        std::vector<Residues> norm = g.coeffs();
        for (Residues& c : norm) c = R.mul(*u_inv, c);
        DivResult d = div_right(f, SkewPolynomial(rp, std::move(norm)));
        d.q = skew_mul(d.q, SkewPolynomial::constant(rp, *u_inv));
        return d;
    }

    const std::size_t s = static_cast<std::size_t>(g.degree());
    std::vector<Residues> r = f.coeffs();
    std::vector<Residues> q;
    if (f.degree() >= g.degree()) {
        q.assign(static_cast<std::size_t>(f.degree() - g.degree()) + 1, R.zero());
        // t^j * g stays monic of degree s + j; cache the ladder
        std::vector<std::vector<Residues>> tjg(q.size());
        tjg[0] = g.coeffs();
        for (std::size_t j = 1; j < q.size(); ++j) tjg[j] = times_t(R, tjg[j - 1]);
        while (true) {
            while (!r.empty() && R.is_zero(r.back())) r.pop_back();
            if (r.size() <= s) break;
            const std::size_t m = r.size() - 1;
            const Residues c = r[m];
            const std::size_t j = m - s;
            q[j] = R.add(q[j], c);
            const std::vector<Residues>& sub = tjg[j];
            for (std::size_t i = 0; i < sub.size(); ++i)
                r[i] = R.sub(r[i], R.mul(c, sub[i]));
        }
    }
    return {SkewPolynomial(rp, std::move(q)), SkewPolynomial(rp, std::move(r))};
}

DivResult div_left(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_ring(*f.ring(), *g.ring(), "div_left");
    const RingPtr& rp = f.ring();
    const Ring& R = *rp;
    if (g.is_zero()) throw unavailable_error("div_left: division by the zero polynomial");
    require_monic(g, "div_left");
    if (!R.sigma_invertible()) throw unavailable_error("div_left: sigma is not invertible");

    const std::size_t s = static_cast<std::size_t>(g.degree());
    SkewPolynomial r = f;
    std::vector<Residues> q(f.degree() >= g.degree()
                                ? static_cast<std::size_t>(f.degree() - g.degree()) + 1
                                : 0,
                            R.zero());
    while (r.degree() >= g.degree()) {
        const std::size_t m = static_cast<std::size_t>(r.degree());
        // lead of g*(c t^{m-s}) is sigma^s(c): untwist the target lead
        Residues c = r.coeffs()[m];
        for (std::size_t i = 0; i < s; ++i) c = R.sigma_inverse(c);
        q[m - s] = R.add(q[m - s], c);
        r = r - skew_mul(g, SkewPolynomial::monomial(rp, c, m - s));
        if (r.degree() >= static_cast<int>(m))
            throw std::logic_error("div_left: degree did not decrease");
    }
    return {SkewPolynomial(rp, std::move(q)), r};
}

RingElement eval_right(const SkewPolynomial& f, const RingElement& a) {
    require_same_ring(*f.ring(), *a.ring(), "eval_right");
    const Ring& R = *f.ring();
    Residues acc = R.zero();
    Residues ni = R.one();  // N_0
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) ni = R.add(R.mul(R.sigma(ni), a.coeffs()), R.delta(ni));
        acc = R.add(acc, R.mul(f.coeffs()[i], ni));
    }
    return RingElement(f.ring(), std::move(acc));
}

RingElement ni_value(const RingElement& a, std::uint64_t i) {
    const Ring& R = *a.ring();
    Residues ni = R.one();
    for (std::uint64_t j = 0; j < i; ++j)
        ni = R.add(R.mul(R.sigma(ni), a.coeffs()), R.delta(ni));
    return RingElement(a.ring(), std::move(ni));
}

SkewPolynomial lclm_linear(const std::vector<RingElement>& points) {
    if (points.empty()) throw std::invalid_argument("lclm_linear: empty point list");
    const RingPtr& rp = points.front().ring();
    const Ring& R = *rp;
    SkewPolynomial g = SkewPolynomial::linear(rp, points.front().coeffs());
    for (std::size_t k = 1; k < points.size(); ++k) {
        require_same_ring(R, *points[k].ring(), "lclm_linear");
        const Residues& a = points[k].coeffs();
        Residues v = eval_right(g, points[k]).coeffs();
        if (R.is_zero(v)) continue;  // point already annihilated
        auto v_inv = R.invert(v);
        if (!v_inv)
            throw lclm_error(k, "lclm_linear: step failed at point index " + std::to_string(k) +
                                    " (" + R.format_element(points[k].coeffs()) +
                                    "): evaluation value " + R.format_element(v) +
                                    " is a non-unit");
        // (sigma,delta)-conjugate of a by v
        Residues c = R.mul(R.add(R.mul(R.sigma(v), a), R.delta(v)), *v_inv);
        g = skew_mul(SkewPolynomial::linear(rp, c), g);
    }
    return g;
}

SkewPolynomial twist_coeffs(const SkewPolynomial& f, std::uint64_t k) {
    std::vector<Residues> out = f.coeffs();
    for (Residues& c : out) c = f.ring()->sigma_pow(c, k);
    return SkewPolynomial(f.ring(), std::move(out));
}

bool is_invariant(const SkewPolynomial& f, std::uint64_t budget) {
    if (!f.is_monic()) throw std::invalid_argument("is_invariant: f must be monic");
    const RingPtr& rp = f.ring();
    const Ring& R = *rp;
    if (R.cardinality() > budget)
        throw budget_error("is_invariant: ring cardinality exceeds budget");
    const SkewPolynomial t = SkewPolynomial::t(rp);
    if (!div_right(skew_mul(f, t), f).r.is_zero()) return false;
    if (!div_left(skew_mul(t, f), f).r.is_zero()) return false;
    Residues a = R.zero();
    do {
        const SkewPolynomial ca = SkewPolynomial::constant(rp, a);
        if (!div_right(skew_mul(f, ca), f).r.is_zero()) return false;
        if (!div_left(skew_mul(ca, f), f).r.is_zero()) return false;
    } while (R.next_element(a));
    return true;
}

bool check_semi_invariant(const SkewPolynomial& f, std::uint64_t k, std::uint64_t budget) {
    const RingPtr& rp = f.ring();
    const Ring& R = *rp;
    if (R.cardinality() > budget)
        throw budget_error("check_semi_invariant: ring cardinality exceeds budget");
    const SkewPolynomial t = SkewPolynomial::t(rp);
    if (skew_mul(f, t) != skew_mul(t, f)) return false;
    Residues a = R.zero();
    do {
        if (skew_mul(f, SkewPolynomial::constant(rp, a)) !=
            skew_mul(SkewPolynomial::constant(rp, R.sigma_pow(a, k)), f))
            return false;
    } while (R.next_element(a));
    return true;
}

std::vector<std::pair<SkewPolynomial, SkewPolynomial>> factor_search(const SkewPolynomial& f,
                                                                     std::uint32_t r,
                                                                     std::uint64_t budget) {
    const RingPtr& rp = f.ring();
    const Ring& R = *rp;
    if (!R.is_field())
        throw std::invalid_argument("factor_search: coefficient ring must be a field");
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i <= r; ++i) {
        if (R.cardinality() != 0 && space > budget / R.cardinality())
            throw budget_error("factor_search: |A|^(r+1) exceeds budget " + std::to_string(budget));
        space *= R.cardinality();
    }

    std::vector<std::pair<SkewPolynomial, SkewPolynomial>> found;
    std::vector<Residues> cand(r + 1, R.zero());
    cand[r] = R.one();  // monic of degree r
    bool more = true;
    while (more) {
        SkewPolynomial g(rp, cand);
        DivResult d = div_right(f, g);
        if (d.r.is_zero()) found.emplace_back(std::move(g), std::move(d.q));
        // odometer over the r low coefficients
        more = false;
        for (std::size_t i = r; i-- > 0;) {
            if (R.next_element(cand[i])) {
                more = true;
                break;
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        return x.first.coeffs() < y.first.coeffs();
    });
    return found;
}

}  // namespace orecodes
