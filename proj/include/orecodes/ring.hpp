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

#ifndef ORECODES_RING_HPP
#define ORECODES_RING_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orecodes/errors.hpp"

namespace orecodes {

/// Canonical element representation: a fixed-width vector of residues
/// mod p.  What the entries mean depends on the ring kind:
///   prime_field       width 1      the residue itself
///   extension_field   width n      coefficients of 1, x, ..., x^(n-1)
///   quotient_ring     width deg m  coefficients of 1, x, ..., x^(m-1)
///   triangular_ring   width 1+n    (a, b0, ..., b(n-1)) for the matrix
///                                  [[a, b], [0, a]] with b in F_(p^n)
using Residues = std::vector<std::uint32_t>;

enum class RingKind {
    prime_field,
    extension_field,
    quotient_ring,
    triangular_ring,
};

enum class SigmaKind {
    identity,
    frobenius_power,      // a -> a^(p^k) on a field
    entrywise_frobenius,  // (a, b) -> (a, b^p) on a triangular ring
};

enum class DeltaKind {
    zero,
    formal_ddx,  // coefficientwise d/dx on F_p[x]/(m), needs m' = 0
    inner,       // r -> a*r - sigma(r)*a for a fixed element a
    triangular,  // (a, b) -> (0, b^p) on a triangular ring
};

struct RingSpec {
    RingKind kind = RingKind::prime_field;
    std::uint32_t p = 2;
    std::uint32_t n = 1;    // extension degree (extension/triangular kinds)
    Residues modulus;       // ascending coefficients, constant term first
    SigmaKind sigma = SigmaKind::identity;
    std::uint32_t frobenius_exp = 1;  // the k in frobenius^k
    DeltaKind delta = DeltaKind::zero;
    Residues inner_element;  // the twisting element for DeltaKind::inner
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A coefficient ring A together with an endomorphism sigma and a
/// sigma-derivation delta.  Immutable after construction; all element
/// operations work on canonical Residues vectors of length width().
class Ring {
   public:
    /// Validates the spec (primality, monic/irreducible moduli,
    /// sigma/delta compatibility) and precomputes the sigma tables.
    /// Throws std::invalid_argument on a bad spec, budget_error if an
    /// irreducibility check would be too large to run.
    static RingPtr create(const RingSpec& spec);

    /// key=value configuration, one pair per line, '#' comments.
    static RingPtr parse_config(std::string_view text);
    static RingPtr load_config(const std::string& path);

    const RingSpec& spec() const noexcept { return spec_; }
    RingKind kind() const noexcept { return spec_.kind; }
    std::uint32_t p() const noexcept { return spec_.p; }
    std::size_t width() const noexcept { return width_; }
    std::uint64_t cardinality() const noexcept { return cardinality_; }
    bool is_field() const noexcept;
    bool is_commutative() const noexcept;

    /// Structural equality (same kind, characteristic, modulus, maps).
    bool same(const Ring& other) const noexcept;

    /// A short human-readable description, e.g. "F_4 = F_2[x]/(1,1,1)".
    std::string describe() const;

    // -- element arithmetic ------------------------------------------------
    Residues zero() const { return Residues(width_, 0); }
    Residues one() const;
    /// The canonical image of an integer (n * 1 in the ring).
    Residues from_int(std::int64_t v) const;
    bool is_zero(const Residues& a) const;
    bool is_one(const Residues& a) const;
    Residues add(const Residues& a, const Residues& b) const;
    Residues sub(const Residues& a, const Residues& b) const;
    Residues neg(const Residues& a) const;
    Residues mul(const Residues& a, const Residues& b) const;
    /// Multiplicative inverse, or nullopt if the element is not a unit.
    std::optional<Residues> invert(const Residues& a) const;

    // -- the twist maps ----------------------------------------------------
    Residues sigma(const Residues& a) const;
    Residues sigma_pow(const Residues& a, std::uint64_t k) const;
    /// Order of sigma as an automorphism (sigma^order = identity).
    std::uint32_t sigma_order() const noexcept { return sigma_order_; }
    /// All supported configurations have invertible sigma.
    bool sigma_invertible() const noexcept { return true; }
    Residues sigma_inverse(const Residues& a) const;
    Residues delta(const Residues& a) const;

    // -- enumeration -------------------------------------------------------
    /// Lexicographic odometer over canonical vectors: start from zero(),
    /// call until it returns false (the vector has wrapped to zero).
    /// Index 0 is the most significant digit; the last entry cycles
    /// fastest.
    bool next_element(Residues& a) const;
    /// All elements in odometer order.  Throws budget_error if the
    /// cardinality exceeds the budget.
    std::vector<Residues> all_elements(std::uint64_t budget = 1u << 20) const;
    /// Uniformly random element from a caller-provided generator state
    /// (splitmix64 step; deterministic across platforms).
    Residues random_element(std::uint64_t& state) const;

    // -- literals ----------------------------------------------------------
    /// Comma-separated residues, ascending.  Short literals are padded
    /// with zeros; integers are reduced mod p; for polynomial-quotient
    /// kinds, literals longer than the width are reduced by the modulus.
    Residues parse_element(std::string_view text) const;
    std::string format_element(const Residues& a) const;

    // -- law checking ------------------------------------------------------
    struct LawReport {
        bool ok = true;
        bool exhaustive = false;
        std::uint64_t pairs_checked = 0;
        std::string detail;  // first violation, if any
    };
    /// Checks that sigma is a unital ring endomorphism and that delta is
    /// additive and satisfies the twisted product rule
    /// delta(ab) = sigma(a) delta(b) + delta(a) b.  Exhaustive over all
    /// pairs when cardinality^2 <= exhaustive_limit, sampled otherwise.
    LawReport check_laws(std::uint64_t exhaustive_limit = 1ull << 24,
                         std::uint64_t samples = 20000,
                         std::uint64_t seed = 1) const;

    /// Searches for an element m with delta(r) = m*r - sigma(r)*m for
    /// every r.  Returns the witness m if delta is inner of that form,
    /// nullopt if it is not.  Exhaustive; throws budget_error when
    /// cardinality^2 exceeds the budget.
    std::optional<Residues> inner_delta_witness(std::uint64_t budget = 1ull << 24) const;

   private:
    Ring() = default;

    Residues reduce_poly(std::vector<std::uint64_t> raw) const;
    Residues field_sigma_apply(const std::vector<Residues>& pows,
                               const Residues& a, std::size_t offset) const;

    RingSpec spec_;
    std::size_t width_ = 1;
    std::uint64_t cardinality_ = 0;
    std::uint32_t sigma_exp_ = 0;    // effective Frobenius exponent mod n
    std::uint32_t sigma_order_ = 1;
    // Precomputed images of the power basis under sigma / sigma^(-1),
    // so both apply as F_p-linear maps on coefficient vectors.
    std::vector<Residues> sigma_pows_;
    std::vector<Residues> sigma_inv_pows_;
    Residues inner_;        // canonicalized twisting element
    RingPtr tri_base_;      // F_(p^n) doing the b-entry work of a triangular ring
    std::optional<bool> field_flag_;  // nullopt: too large to decide
};

/// Value-semantic element handle carrying its ring.  Mixing elements of
/// structurally different rings throws std::invalid_argument.
class RingElement {
   public:
    RingElement(RingPtr ring, Residues coeffs);
    static RingElement zero(const RingPtr& ring);
    static RingElement one(const RingPtr& ring);
    static RingElement parse(const RingPtr& ring, std::string_view text);

    const RingPtr& ring() const noexcept { return ring_; }
    const Residues& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const { return ring_->is_zero(coeffs_); }
    bool is_one() const { return ring_->is_one(coeffs_); }

    RingElement sigma() const { return {ring_, ring_->sigma(coeffs_)}; }
    RingElement delta() const { return {ring_, ring_->delta(coeffs_)}; }
    std::optional<RingElement> inverse() const;
    std::string str() const { return ring_->format_element(coeffs_); }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement operator-() const { return {ring_, ring_->neg(coeffs_)}; }
    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

   private:
    RingPtr ring_;
    Residues coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& a);

/// Throws std::invalid_argument unless both rings are structurally equal.
void require_same_ring(const Ring& a, const Ring& b, const char* where);

}  // namespace orecodes

#endif
