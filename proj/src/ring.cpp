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

#include "orecodes/ring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace orecodes {
namespace {

using U64 = std::uint64_t;
using Poly = std::vector<std::uint32_t>;  // ascending residues, any length

std::uint32_t mod_p(std::int64_t v, U64 p) {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(m);
}

int poly_deg(const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly poly_trim(Poly f) {
    f.resize(static_cast<std::size_t>(poly_deg(f) + 1));
    return f;
}

Poly poly_sub(const Poly& a, const Poly& b, U64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        U64 s = (i < a.size() ? a[i] : 0u) + p - U64(i < b.size() ? b[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s % p);
    }
    return r;
}

Poly poly_scale(const Poly& a, U64 c, U64 p) {
    Poly r(a.size());
    c %= p;
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<std::uint32_t>((a[i] * c) % p);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, U64 p) {
    if (poly_deg(a) < 0 || poly_deg(b) < 0) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + U64(a[i]) * b[j]) % p);
    }
    return r;
}

U64 int_inverse(U64 a, U64 p) {
    // extended Euclid on integers; a nonzero mod a prime p
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<U64>(t);
}

// a = q*b + r with deg r < deg b; requires b nonzero (lead invertible mod
// the prime p).
void poly_divmod(const Poly& a, const Poly& b, U64 p, Poly* q_out, Poly* r_out) {
    int db = poly_deg(b);
    if (db < 0) throw std::invalid_argument("polynomial division by zero");
    Poly r = poly_trim(a);
    Poly q;
    U64 lead_inv = int_inverse(b[static_cast<std::size_t>(db)], p);
    int dr = poly_deg(r);
    if (dr >= db) q.assign(static_cast<std::size_t>(dr - db + 1), 0);
    while (dr >= db) {
        U64 c = (U64(r[static_cast<std::size_t>(dr)]) * lead_inv) % p;
        std::size_t shift = static_cast<std::size_t>(dr - db);
        q[shift] = static_cast<std::uint32_t>(c);
        for (int i = 0; i <= db; ++i) {
            std::size_t k = shift + static_cast<std::size_t>(i);
            U64 s = r[k] + p * p - (c * b[static_cast<std::size_t>(i)]) % p;
            r[k] = static_cast<std::uint32_t>(s % p);
        }
        r = poly_trim(std::move(r));
        dr = poly_deg(r);
    }
    if (q_out) *q_out = std::move(q);
    if (r_out) *r_out = std::move(r);
}

// inverse of a modulo m over F_p, or nullopt when gcd(a, m) is not a unit
std::optional<Poly> poly_inverse_mod(const Poly& a, const Poly& m, U64 p) {
    Poly r0 = poly_trim(m), r1;
    poly_divmod(a, m, p, nullptr, &r1);
    Poly s0 = {}, s1 = {1};
    while (poly_deg(r1) >= 0) {
        Poly q, rem;
        poly_divmod(r0, r1, p, &q, &rem);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly ns = poly_sub(s0, poly_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = poly_trim(std::move(ns));
    }
    if (poly_deg(r0) != 0) return std::nullopt;
    Poly inv = poly_scale(s0, int_inverse(r0[0], p), p);
    Poly out;
    poly_divmod(inv, m, p, nullptr, &out);
    return poly_trim(std::move(out));
}

bool is_prime_u32(std::uint32_t v) {
    if (v < 2) return false;
    for (U64 d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// trial division by all monic polynomials of degree <= deg/2
bool poly_irreducible(const Poly& m, U64 p, U64 budget = 4'000'000) {
    int deg = poly_deg(m);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    U64 total = 0;
    for (int d = 1; d <= deg / 2; ++d) {
        U64 count = 1;
        for (int i = 0; i < d; ++i) {
            if (count > budget / p) throw budget_error("irreducibility check: candidate divisor space too large");
            count *= p;
        }
        total += count;
        if (total > budget) throw budget_error("irreducibility check: candidate divisor space too large");
    }
    for (int d = 1; d <= deg / 2; ++d) {
        Poly cand(static_cast<std::size_t>(d) + 1, 0);
        cand[static_cast<std::size_t>(d)] = 1;
        while (true) {
            Poly rem;
            poly_divmod(m, cand, p, nullptr, &rem);
            if (poly_deg(rem) < 0) return false;
            // odometer over the d low coefficients
            int i = 0;
            for (; i < d; ++i) {
                if (++cand[static_cast<std::size_t>(i)] < p) break;
                cand[static_cast<std::size_t>(i)] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

Poly poly_pow_mod(Poly base, U64 exp, const Poly& m, U64 p) {
    Poly acc = {1};
    poly_divmod(base, m, p, nullptr, &base);
    while (exp > 0) {
        if (exp & 1) {
            acc = poly_mul(acc, base, p);
            poly_divmod(acc, m, p, nullptr, &acc);
        }
        base = poly_mul(base, base, p);
        poly_divmod(base, m, p, nullptr, &base);
        exp >>= 1;
    }
    return acc;
}

U64 sat_pow(U64 base, U64 exp) {
    U64 r = 1;
    while (exp-- > 0) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

U64 splitmix64(U64& state) {
    U64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Poly fit_width(Poly v, std::size_t width) {
    v.resize(width, 0);
    return v;
}

std::string trim_copy(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::int64_t> parse_int_list(std::string_view text, const char* what) {
    std::vector<std::int64_t> out;
    std::string tok;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, tok, ',')) {
        tok = trim_copy(tok);
        if (tok.empty())
            throw std::invalid_argument(std::string(what) + ": empty entry in list '" + std::string(text) + "'");
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty literal");
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction & validation

RingPtr Ring::create(const RingSpec& spec_in) {
    std::shared_ptr<Ring> ring(new Ring());
    RingSpec spec = spec_in;

    if (!is_prime_u32(spec.p))
        throw std::invalid_argument("ring: characteristic p must be prime, got " + std::to_string(spec.p));
    if (spec.p > (1u << 20))
        throw std::invalid_argument("ring: characteristic p must be at most 2^20");
    const U64 p = spec.p;

    // canonicalize the modulus (residues mod p, trimmed)
    for (auto& c : spec.modulus) c = static_cast<std::uint32_t>(c % p);
    spec.modulus = poly_trim(std::move(spec.modulus));

    auto require_monic_modulus = [&](std::uint32_t degree, bool irreducible, const char* why) {
        if (spec.modulus.size() != static_cast<std::size_t>(degree) + 1)
            throw std::invalid_argument(std::string("ring: ") + why + ": modulus must have degree " +
                                        std::to_string(degree));
        if (spec.modulus.back() != 1)
            throw std::invalid_argument(std::string("ring: ") + why + ": modulus must be monic");
        if (irreducible && !poly_irreducible(spec.modulus, p))
            throw std::invalid_argument(std::string("ring: ") + why + ": modulus must be irreducible over F_p");
    };

    switch (spec.kind) {
        case RingKind::prime_field:
            if (!spec.modulus.empty())
                throw std::invalid_argument("ring: prime_field takes no modulus");
            spec.n = 1;
            ring->width_ = 1;
            ring->field_flag_ = true;
            break;
        case RingKind::extension_field:
            if (spec.n < 1) throw std::invalid_argument("ring: extension degree must be >= 1");
            require_monic_modulus(spec.n, true, "extension_field");
            ring->width_ = spec.n;
            ring->field_flag_ = true;
            break;
        case RingKind::quotient_ring: {
            int deg = poly_deg(spec.modulus);
            if (deg < 1) throw std::invalid_argument("ring: quotient_ring modulus must have degree >= 1");
            if (spec.modulus.back() != 1)
                throw std::invalid_argument("ring: quotient_ring modulus must be monic");
            spec.n = static_cast<std::uint32_t>(deg);
            ring->width_ = static_cast<std::size_t>(deg);
            try {
                ring->field_flag_ = poly_irreducible(spec.modulus, p);
            } catch (const budget_error&) {
                ring->field_flag_ = std::nullopt;  // too large to decide; treated as "not known to be a field"
            }
            break;
        }
        case RingKind::triangular_ring:
            if (spec.n < 1) throw std::invalid_argument("ring: extension degree must be >= 1");
            require_monic_modulus(spec.n, true, "triangular_ring");
            ring->width_ = static_cast<std::size_t>(spec.n) + 1;
            ring->field_flag_ = false;
            break;
    }

    // sigma compatibility and effective exponent
    switch (spec.sigma) {
        case SigmaKind::identity:
            ring->sigma_exp_ = 0;
            ring->sigma_order_ = 1;
            break;
        case SigmaKind::frobenius_power:
            if (spec.kind != RingKind::prime_field && spec.kind != RingKind::extension_field)
                throw std::invalid_argument("ring: frobenius sigma requires a finite-field coefficient ring");
            ring->sigma_exp_ = spec.frobenius_exp % spec.n;
            ring->sigma_order_ =
                ring->sigma_exp_ == 0 ? 1 : spec.n / std::gcd(spec.n, ring->sigma_exp_);
            break;
        case SigmaKind::entrywise_frobenius:
            if (spec.kind != RingKind::triangular_ring)
                throw std::invalid_argument("ring: entrywise_frobenius sigma requires a triangular ring");
            ring->sigma_exp_ = 1 % spec.n;
            ring->sigma_order_ = spec.n;
            break;
    }
    if (spec.kind == RingKind::quotient_ring && spec.sigma != SigmaKind::identity)
        throw std::invalid_argument("ring: quotient_ring supports sigma=identity only");

    // delta compatibility
    switch (spec.delta) {
        case DeltaKind::zero:
            break;
        case DeltaKind::formal_ddx: {
            if (spec.kind != RingKind::quotient_ring)
                throw std::invalid_argument("ring: delta=ddx requires a quotient_ring");
            // d/dx descends to F_p[x]/(m) exactly when m' = 0 mod p
            for (std::size_t i = 1; i < spec.modulus.size(); ++i)
                if ((i % p) != 0 && spec.modulus[i] != 0)
                    throw std::invalid_argument(
                        "ring: delta=ddx needs a modulus with zero formal derivative mod p");
            break;
        }
        case DeltaKind::inner:
            if (spec.inner_element.empty())
                throw std::invalid_argument("ring: delta=inner needs a twisting element");
            break;
        case DeltaKind::triangular:
            if (spec.kind != RingKind::triangular_ring)
                throw std::invalid_argument("ring: delta=triangular requires a triangular ring");
            if (spec.sigma != SigmaKind::entrywise_frobenius)
                throw std::invalid_argument("ring: delta=triangular requires sigma=entrywise_frobenius");
            break;
    }

    ring->cardinality_ = sat_pow(p, ring->width_);
    ring->spec_ = spec;

    // embedded field F_(p^n) doing the b-entry arithmetic of a triangular ring
    if (spec.kind == RingKind::triangular_ring) {
        RingSpec base;
        base.kind = RingKind::extension_field;
        base.p = spec.p;
        base.n = spec.n;
        base.modulus = spec.modulus;
        base.sigma = spec.sigma == SigmaKind::entrywise_frobenius ? SigmaKind::frobenius_power
                                                                  : SigmaKind::identity;
        base.frobenius_exp = 1;
        base.delta = DeltaKind::zero;
        ring->tri_base_ = Ring::create(base);
    }

    // precompute sigma as an F_p-linear map: images of the power basis
    if ((spec.kind == RingKind::extension_field || spec.kind == RingKind::prime_field) &&
        ring->sigma_exp_ > 0) {
        auto basis_images = [&](std::uint32_t e) {
            Poly gamma = {0, 1};  // x
            for (std::uint32_t i = 0; i < e; ++i) gamma = poly_pow_mod(gamma, p, spec.modulus, p);
            std::vector<Residues> pows(ring->width_);
            Poly acc = {1};
            for (std::size_t i = 0; i < ring->width_; ++i) {
                pows[i] = fit_width(acc, ring->width_);
                acc = poly_mul(acc, gamma, p);
                poly_divmod(acc, spec.modulus, p, nullptr, &acc);
            }
            return pows;
        };
        ring->sigma_pows_ = basis_images(ring->sigma_exp_);
        ring->sigma_inv_pows_ = basis_images((spec.n - ring->sigma_exp_) % spec.n);
    }

    // canonicalize the inner twisting element
    if (spec.delta == DeltaKind::inner) {
        Residues raw = spec.inner_element;
        for (auto& c : raw) c = static_cast<std::uint32_t>(c % p);
        if (raw.size() > ring->width_) {
            if (spec.kind != RingKind::extension_field && spec.kind != RingKind::quotient_ring)
                throw std::invalid_argument("ring: inner element literal is too wide");
            Poly rem;
            poly_divmod(raw, spec.modulus, p, nullptr, &rem);
            raw = fit_width(std::move(rem), ring->width_);
        } else {
            raw.resize(ring->width_, 0);
        }
        ring->inner_ = raw;
        ring->spec_.inner_element = std::move(raw);
    }

    return ring;
}

bool Ring::is_field() const noexcept { return field_flag_.value_or(false); }

bool Ring::is_commutative() const noexcept {
    // every supported coefficient ring is commutative; noncommutativity
    // enters only through the skew structure (sigma, delta)
    return true;
}

bool Ring::same(const Ring& other) const noexcept {
    if (this == &other) return true;
    return spec_.kind == other.spec_.kind && spec_.p == other.spec_.p &&
           width_ == other.width_ && spec_.modulus == other.spec_.modulus &&
           spec_.sigma == other.spec_.sigma && sigma_exp_ == other.sigma_exp_ &&
           spec_.delta == other.spec_.delta && inner_ == other.inner_;
}

std::string Ring::describe() const {
    std::ostringstream os;
    auto poly_str = [&](const Residues& m) {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
        return s;
    };
    switch (spec_.kind) {
        case RingKind::prime_field:
            os << "prime_field(p=" << spec_.p << ")";
            break;
        case RingKind::extension_field:
            os << "extension_field(p=" << spec_.p << ", n=" << spec_.n
               << ", modulus=" << poly_str(spec_.modulus) << ")";
            break;
        case RingKind::quotient_ring:
            os << "quotient_ring(p=" << spec_.p << ", modulus=" << poly_str(spec_.modulus) << ")";
            break;
        case RingKind::triangular_ring:
            os << "triangular_ring(p=" << spec_.p << ", n=" << spec_.n
               << ", modulus=" << poly_str(spec_.modulus) << ")";
            break;
    }
    os << ", |A|=" << cardinality_ << ", sigma=";
    switch (spec_.sigma) {
        case SigmaKind::identity: os << "identity"; break;
        case SigmaKind::frobenius_power: os << "frobenius^" << spec_.frobenius_exp; break;
        case SigmaKind::entrywise_frobenius: os << "entrywise_frobenius"; break;
    }
    os << ", delta=";
    switch (spec_.delta) {
        case DeltaKind::zero: os << "zero"; break;
        case DeltaKind::formal_ddx: os << "ddx"; break;
        case DeltaKind::inner: os << "inner:" << format_element(inner_); break;
        case DeltaKind::triangular: os << "triangular"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// arithmetic

Residues Ring::one() const {
    Residues r(width_, 0);
    r[0] = 1;
    return r;
}

Residues Ring::from_int(std::int64_t v) const {
    Residues r(width_, 0);
    r[0] = mod_p(v, spec_.p);
    return r;
}

bool Ring::is_zero(const Residues& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

bool Ring::is_one(const Residues& a) const {
    if (a.empty() || a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](std::uint32_t c) { return c == 0; });
}

Residues Ring::add(const Residues& a, const Residues& b) const {
    Residues r(width_);
    for (std::size_t i = 0; i < width_; ++i)
        r[i] = static_cast<std::uint32_t>((U64(a[i]) + b[i]) % spec_.p);
    return r;
}

Residues Ring::sub(const Residues& a, const Residues& b) const {
    Residues r(width_);
    for (std::size_t i = 0; i < width_; ++i)
        r[i] = static_cast<std::uint32_t>((U64(a[i]) + spec_.p - b[i]) % spec_.p);
    return r;
}

Residues Ring::neg(const Residues& a) const {
    Residues r(width_);
    for (std::size_t i = 0; i < width_; ++i)
        r[i] = a[i] == 0 ? 0 : spec_.p - a[i];
    return r;
}

Residues Ring::reduce_poly(std::vector<std::uint64_t> raw) const {
    const U64 p = spec_.p;
    for (auto& c : raw) c %= p;
    const Residues& m = spec_.modulus;
    if (!m.empty() && raw.size() >= m.size()) {
        for (std::size_t i = raw.size(); i-- > 0;) {
            if (i + 1 < m.size()) break;  // below deg(m): reduced
            U64 c = raw[i];
            if (c == 0) continue;
            std::size_t shift = i + 1 - m.size();
            for (std::size_t j = 0; j < m.size(); ++j) {
                U64 s = raw[shift + j] + p * p - (c * m[j]) % p;
                raw[shift + j] = s % p;
            }
        }
    }
    Residues out(width_, 0);
    for (std::size_t i = 0; i < width_ && i < raw.size(); ++i)
        out[i] = static_cast<std::uint32_t>(raw[i]);
    return out;
}

Residues Ring::mul(const Residues& a, const Residues& b) const {
    const U64 p = spec_.p;
    switch (spec_.kind) {
        case RingKind::prime_field:
            return {static_cast<std::uint32_t>((U64(a[0]) * b[0]) % p)};
        case RingKind::extension_field:
        case RingKind::quotient_ring: {
            std::vector<U64> raw(2 * width_ - 1, 0);
            for (std::size_t i = 0; i < width_; ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < width_; ++j)
                    raw[i + j] += U64(a[i]) * b[j];
            }
            return reduce_poly(std::move(raw));
        }
        case RingKind::triangular_ring: {
            // (a0, b)(c0, d) = (a0 c0, a0 d + c0 b)
            Residues r(width_, 0);
            r[0] = static_cast<std::uint32_t>((U64(a[0]) * b[0]) % p);
            for (std::size_t i = 1; i < width_; ++i)
                r[i] = static_cast<std::uint32_t>((U64(a[0]) * b[i] + U64(b[0]) * a[i]) % p);
            return r;
        }
    }
    return zero();
}

std::optional<Residues> Ring::invert(const Residues& a) const {
    const U64 p = spec_.p;
    switch (spec_.kind) {
        case RingKind::prime_field:
            if (a[0] == 0) return std::nullopt;
            return Residues{static_cast<std::uint32_t>(int_inverse(a[0], p))};
        case RingKind::extension_field:
        case RingKind::quotient_ring: {
            if (is_zero(a)) return std::nullopt;
            auto inv = poly_inverse_mod(a, spec_.modulus, p);
            if (!inv) return std::nullopt;
            return fit_width(std::move(*inv), width_);
        }
        case RingKind::triangular_ring: {
            if (a[0] == 0) return std::nullopt;
            U64 ia = int_inverse(a[0], p);
            U64 ia2 = (ia * ia) % p;
            Residues r(width_, 0);
            r[0] = static_cast<std::uint32_t>(ia);
            for (std::size_t i = 1; i < width_; ++i)
                r[i] = static_cast<std::uint32_t>((p - (a[i] * ia2) % p) % p);
            return r;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// sigma and delta

Residues Ring::field_sigma_apply(const std::vector<Residues>& pows, const Residues& a,
                                 std::size_t /*offset*/) const {
    const U64 p = spec_.p;
    std::vector<U64> acc(width_, 0);
    for (std::size_t i = 0; i < width_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < width_; ++j) acc[j] += U64(a[i]) * pows[i][j];
    }
    Residues out(width_);
    for (std::size_t j = 0; j < width_; ++j) out[j] = static_cast<std::uint32_t>(acc[j] % p);
    return out;
}

Residues Ring::sigma(const Residues& a) const {
    switch (spec_.kind) {
        case RingKind::prime_field:
        case RingKind::quotient_ring:
            return a;
        case RingKind::extension_field:
            if (sigma_exp_ == 0) return a;
            return field_sigma_apply(sigma_pows_, a, 0);
        case RingKind::triangular_ring: {
            if (spec_.sigma == SigmaKind::identity) return a;
            Residues b(a.begin() + 1, a.end());
            Residues sb = tri_base_->sigma(b);
            Residues out(width_);
            out[0] = a[0];
            std::copy(sb.begin(), sb.end(), out.begin() + 1);
            return out;
        }
    }
    return a;
}

Residues Ring::sigma_inverse(const Residues& a) const {
    switch (spec_.kind) {
        case RingKind::prime_field:
        case RingKind::quotient_ring:
            return a;
        case RingKind::extension_field:
            if (sigma_exp_ == 0) return a;
            return field_sigma_apply(sigma_inv_pows_, a, 0);
        case RingKind::triangular_ring: {
            if (spec_.sigma == SigmaKind::identity) return a;
            Residues b(a.begin() + 1, a.end());
            Residues sb = tri_base_->sigma_inverse(b);
            Residues out(width_);
            out[0] = a[0];
            std::copy(sb.begin(), sb.end(), out.begin() + 1);
            return out;
        }
    }
    return a;
}

Residues Ring::sigma_pow(const Residues& a, std::uint64_t k) const {
    Residues r = a;
    for (std::uint64_t i = 0, reps = k % sigma_order_; i < reps; ++i) r = sigma(r);
    return r;
}

Residues Ring::delta(const Residues& a) const {
    switch (spec_.delta) {
        case DeltaKind::zero:
            return zero();
        case DeltaKind::formal_ddx: {
            Residues r(width_, 0);
            for (std::size_t i = 0; i + 1 < width_; ++i)
                r[i] = static_cast<std::uint32_t>((U64(a[i + 1]) * ((i + 1) % spec_.p)) % spec_.p);
            return r;
        }
        case DeltaKind::inner:
            return sub(mul(inner_, a), mul(sigma(a), inner_));
        case DeltaKind::triangular: {
            Residues b(a.begin() + 1, a.end());
            Residues sb = tri_base_->sigma(b);
            Residues out(width_, 0);
            std::copy(sb.begin(), sb.end(), out.begin() + 1);
            return out;
        }
    }
    return zero();
}

// ---------------------------------------------------------------------------
// enumeration and literals

bool Ring::next_element(Residues& a) const {
    for (std::size_t i = width_; i-- > 0;) {
        if (++a[i] < spec_.p) return true;
        a[i] = 0;
    }
    return false;
}

std::vector<Residues> Ring::all_elements(std::uint64_t budget) const {
    if (cardinality_ > budget)
        throw budget_error("all_elements: ring cardinality " + std::to_string(cardinality_) +
                           " exceeds budget " + std::to_string(budget));
    std::vector<Residues> out;
    out.reserve(static_cast<std::size_t>(cardinality_));
    Residues a = zero();
    do {
        out.push_back(a);
    } while (next_element(a));
    return out;
}

Residues Ring::random_element(std::uint64_t& state) const {
    Residues r(width_);
    for (auto& c : r) c = static_cast<std::uint32_t>(splitmix64(state) % spec_.p);
    return r;
}

Residues Ring::parse_element(std::string_view text) const {
    auto values = parse_int_list(text, "element literal");
    const U64 p = spec_.p;
    if (values.size() > width_) {
        if (spec_.kind == RingKind::extension_field || spec_.kind == RingKind::quotient_ring) {
            Poly raw(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) raw[i] = mod_p(values[i], p);
            Poly rem;
            poly_divmod(raw, spec_.modulus, p, nullptr, &rem);
            return fit_width(std::move(rem), width_);
        }
        throw std::invalid_argument("element literal: got " + std::to_string(values.size()) +
                                    " entries, ring width is " + std::to_string(width_));
    }
    Residues r(width_, 0);
    for (std::size_t i = 0; i < values.size(); ++i) r[i] = mod_p(values[i], p);
    return r;
}

std::string Ring::format_element(const Residues& a) const {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s;
}

// ---------------------------------------------------------------------------
// law checking

Ring::LawReport Ring::check_laws(std::uint64_t exhaustive_limit, std::uint64_t samples,
                                 std::uint64_t seed) const {
    LawReport rep;
    auto fail = [&](const std::string& what, const Residues& a, const Residues& b) {
        rep.ok = false;
        if (rep.detail.empty())
            rep.detail = what + " violated at a=" + format_element(a) + ", b=" + format_element(b);
    };

    if (!is_one(sigma(one()))) {
        rep.ok = false;
        rep.detail = "sigma(1) != 1";
        return rep;
    }
    if (!is_zero(delta(one()))) {
        rep.ok = false;
        rep.detail = "delta(1) != 0";
        return rep;
    }

    const bool sigma_trivial = sigma_exp_ == 0 && spec_.sigma != SigmaKind::entrywise_frobenius;
    const bool delta_trivial = spec_.delta == DeltaKind::zero;

    auto check_pair = [&](const Residues& a, const Residues& b) {
        if (!sigma_trivial) {
            if (sigma(add(a, b)) != add(sigma(a), sigma(b))) return fail("sigma additivity", a, b);
            if (sigma(mul(a, b)) != mul(sigma(a), sigma(b)))
                return fail("sigma multiplicativity", a, b);
        }
        if (!delta_trivial) {
            if (delta(add(a, b)) != add(delta(a), delta(b))) return fail("delta additivity", a, b);
            if (delta(mul(a, b)) != add(mul(sigma(a), delta(b)), mul(delta(a), b)))
                return fail("twisted product rule", a, b);
        }
    };

    const bool exhaustive = cardinality_ != 0 && cardinality_ <= exhaustive_limit / cardinality_;
    rep.exhaustive = exhaustive;
    if (exhaustive) {
        Residues a = zero();
        do {
            Residues b = zero();
            do {
                check_pair(a, b);
                ++rep.pairs_checked;
                if (!rep.ok) return rep;
            } while (next_element(b));
        } while (next_element(a));
    } else {
        std::uint64_t state = seed;
        for (std::uint64_t i = 0; i < samples; ++i) {
            Residues a = random_element(state);
            Residues b = random_element(state);
            check_pair(a, b);
            ++rep.pairs_checked;
            if (!rep.ok) return rep;
        }
    }
    return rep;
}

std::optional<Residues> Ring::inner_delta_witness(std::uint64_t budget) const {
    if (cardinality_ == 0 || cardinality_ > budget / cardinality_)
        throw budget_error("inner_delta_witness: search space exceeds budget");
    Residues m = zero();
    do {
        bool matches = true;
        Residues r = zero();
        do {
            if (delta(r) != sub(mul(m, r), mul(sigma(r), m))) {
                matches = false;
                break;
            }
        } while (next_element(r));
        if (matches) return m;
    } while (next_element(m));
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// configuration files

RingPtr Ring::parse_config(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss{std::string(text)};
    std::string line;
    while (std::getline(ss, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string t = trim_copy(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("ring config: expected key=value, got '" + t + "'");
        std::string key = trim_copy(t.substr(0, eq));
        std::string value = trim_copy(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("ring config: empty key or value in '" + t + "'");
        if (!kv.emplace(key, value).second)
            throw std::invalid_argument("ring config: duplicate key '" + key + "'");
    }

    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    RingSpec spec;
    auto kind = take("kind");
    if (!kind) throw std::invalid_argument("ring config: missing 'kind'");
    if (*kind == "prime_field") spec.kind = RingKind::prime_field;
    else if (*kind == "extension_field") spec.kind = RingKind::extension_field;
    else if (*kind == "quotient_ring") spec.kind = RingKind::quotient_ring;
    else if (*kind == "triangular_ring") spec.kind = RingKind::triangular_ring;
    else throw std::invalid_argument("ring config: unknown kind '" + *kind + "'");

    auto pstr = take("p");
    if (!pstr) throw std::invalid_argument("ring config: missing 'p'");
    auto parse_u32 = [](const std::string& s, const char* what) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("ring config: bad ") + what + " '" + s + "'");
        }
        if (used != s.size() || v > UINT32_MAX)
            throw std::invalid_argument(std::string("ring config: bad ") + what + " '" + s + "'");
        return static_cast<std::uint32_t>(v);
    };
    spec.p = parse_u32(*pstr, "p");

    if (auto nstr = take("n")) spec.n = parse_u32(*nstr, "n");
    if (auto mstr = take("modulus")) {
        for (std::int64_t v : parse_int_list(*mstr, "modulus"))
            spec.modulus.push_back(mod_p(v, spec.p));
    }
    if (auto sstr = take("sigma")) {
        if (*sstr == "identity") spec.sigma = SigmaKind::identity;
        else if (*sstr == "entrywise_frobenius") spec.sigma = SigmaKind::entrywise_frobenius;
        else if (*sstr == "frobenius") { spec.sigma = SigmaKind::frobenius_power; spec.frobenius_exp = 1; }
        else if (sstr->rfind("frobenius^", 0) == 0) {
            spec.sigma = SigmaKind::frobenius_power;
            spec.frobenius_exp = parse_u32(sstr->substr(10), "frobenius exponent");
        } else throw std::invalid_argument("ring config: unknown sigma '" + *sstr + "'");
    }
    if (auto dstr = take("delta")) {
        if (*dstr == "zero") spec.delta = DeltaKind::zero;
        else if (*dstr == "ddx") spec.delta = DeltaKind::formal_ddx;
        else if (*dstr == "triangular") spec.delta = DeltaKind::triangular;
        else if (dstr->rfind("inner:", 0) == 0) {
            spec.delta = DeltaKind::inner;
            for (std::int64_t v : parse_int_list(dstr->substr(6), "inner element"))
                spec.inner_element.push_back(mod_p(v, spec.p));
        } else throw std::invalid_argument("ring config: unknown delta '" + *dstr + "'");
    }

    if (!kv.empty())
        throw std::invalid_argument("ring config: unknown key '" + kv.begin()->first + "'");
    return create(spec);
}

RingPtr Ring::load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("ring config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingPtr ring, Residues coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (!ring_) throw std::invalid_argument("RingElement: null ring");
    if (coeffs_.size() != ring_->width())
        throw std::invalid_argument("RingElement: coefficient width mismatch");
}

RingElement RingElement::zero(const RingPtr& ring) { return {ring, ring->zero()}; }
RingElement RingElement::one(const RingPtr& ring) { return {ring, ring->one()}; }

RingElement RingElement::parse(const RingPtr& ring, std::string_view text) {
    return {ring, ring->parse_element(text)};
}

std::optional<RingElement> RingElement::inverse() const {
    auto inv = ring_->invert(coeffs_);
    if (!inv) return std::nullopt;
    return RingElement{ring_, std::move(*inv)};
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(*a.ring_, *b.ring_, "operator+");
    return {a.ring_, a.ring_->add(a.coeffs_, b.coeffs_)};
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(*a.ring_, *b.ring_, "operator-");
    return {a.ring_, a.ring_->sub(a.coeffs_, b.coeffs_)};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(*a.ring_, *b.ring_, "operator*");
    return {a.ring_, a.ring_->mul(a.coeffs_, b.coeffs_)};
}

bool RingElement::operator==(const RingElement& other) const {
    require_same_ring(*ring_, *other.ring_, "operator==");
    return coeffs_ == other.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const RingElement& a) { return os << a.str(); }

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (!a.same(b))
        throw std::invalid_argument(std::string(where) + ": operands live in different rings (" +
                                    a.describe() + " vs " + b.describe() + ")");
}

}  // namespace orecodes
