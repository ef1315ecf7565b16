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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "orecodes/ring.hpp"
#include "test_util.hpp"

using namespace orecodes;
using testutil::elem;

namespace {

RingPtr make_f5() {
    RingSpec s;
    s.kind = RingKind::prime_field;
    s.p = 5;
    return Ring::create(s);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    const RingPtr r = make_f5();
    CHECK(r->width() == 1);
    CHECK(r->cardinality() == 5);
    CHECK(r->is_field());
    CHECK(r->is_commutative());

    CHECK(r->from_int(7) == Residues{2});
    CHECK(r->from_int(-3) == Residues{2});
    CHECK(r->add({3}, {4}) == Residues{2});
    CHECK(r->sub({1}, {3}) == Residues{3});
    CHECK(r->neg({2}) == Residues{3});
    CHECK(r->mul({2}, {4}) == Residues{3});
    CHECK(r->invert({2}) == Residues{3});
    CHECK(r->invert({4}) == Residues{4});
    CHECK_FALSE(r->invert({0}).has_value());

    // sigma and delta default to the identity and the zero map
    CHECK(r->sigma({3}) == Residues{3});
    CHECK(r->delta({3}) == Residues{0});
    CHECK(r->sigma_order() == 1);
}

TEST_CASE("frobenius on a prime field is the identity") {
    RingSpec s;
    s.kind = RingKind::prime_field;
    s.p = 7;
    s.sigma = SigmaKind::frobenius_power;
    s.frobenius_exp = 3;
    const RingPtr r = Ring::create(s);
    for (std::uint32_t a = 0; a < 7; ++a) CHECK(r->sigma({a}) == Residues{a});
    CHECK(r->sigma_order() == 1);
}

TEST_CASE("invalid specs are rejected") {
    RingSpec s;
    s.kind = RingKind::prime_field;

    SUBCASE("composite characteristic") {
        s.p = 4;
        CHECK_THROWS_AS(Ring::create(s), std::invalid_argument);
    }
    SUBCASE("characteristic above the hard cap") {
        s.p = 1048583;  // prime, but > 2^20
        CHECK_THROWS_AS(Ring::create(s), std::invalid_argument);
    }
    SUBCASE("reducible extension modulus") {
        s.kind = RingKind::extension_field;
        s.p = 2;
        s.n = 2;
        s.modulus = {1, 0, 1};  // x^2 + 1 = (x+1)^2 over F_2
        CHECK_THROWS_AS(Ring::create(s), std::invalid_argument);
    }
    SUBCASE("frobenius on a quotient ring") {
        s.kind = RingKind::quotient_ring;
        s.p = 5;
        s.modulus = {4, 0, 0, 0, 0, 1};
        s.sigma = SigmaKind::frobenius_power;
        CHECK_THROWS_AS(Ring::create(s), std::invalid_argument);
    }
    SUBCASE("formal d/dx needs a modulus with zero derivative") {
        s.kind = RingKind::quotient_ring;
        s.p = 5;
        s.modulus = {1, 0, 1};  // (x^2+1)' = 2x != 0
        s.delta = DeltaKind::formal_ddx;
        CHECK_THROWS_AS(Ring::create(s), std::invalid_argument);
    }
    SUBCASE("triangular delta needs the entrywise frobenius") {
        s.kind = RingKind::triangular_ring;
        s.p = 2;
        s.n = 2;
        s.modulus = {1, 1, 1};
        s.sigma = SigmaKind::identity;
        s.delta = DeltaKind::triangular;
        CHECK_THROWS_AS(Ring::create(s), std::invalid_argument);
    }
}

TEST_CASE("extension field tables") {
    const RingPtr& r = testutil::f4();
    CHECK(r->width() == 2);
    CHECK(r->cardinality() == 4);
    CHECK(r->is_field());

    const Residues a = {0, 1};   // the residue of x
    const Residues a2 = {1, 1};  // x^2 = x + 1
    CHECK(r->mul(a, a) == a2);
    CHECK(r->mul(a, a2) == r->one());  // x^3 = 1
    CHECK(r->invert(a) == a2);
    CHECK(r->invert(a2) == a);
    CHECK_FALSE(r->invert(r->zero()).has_value());

    // sigma is squaring; it has order 2 and fixes the prime subfield
    CHECK(r->sigma(a) == a2);
    CHECK(r->sigma(a2) == a);
    CHECK(r->sigma(r->one()) == r->one());
    CHECK(r->sigma_order() == 2);
    CHECK(r->sigma_inverse(r->sigma(a)) == a);
    CHECK(r->delta(a) == r->zero());
}

TEST_CASE("frobenius exponent is reduced modulo the extension degree") {
    RingSpec s;
    s.kind = RingKind::extension_field;
    s.p = 2;
    s.n = 2;
    s.modulus = {1, 1, 1};
    s.sigma = SigmaKind::frobenius_power;
    s.frobenius_exp = 2;  // acts as the identity on F_4
    const RingPtr r = Ring::create(s);
    CHECK(r->sigma({0, 1}) == Residues{0, 1});
    CHECK(r->sigma_order() == 1);
}

TEST_CASE("quotient ring with formal derivative") {
    const RingPtr& r = testutil::f5x();
    CHECK(r->width() == 5);
    CHECK(r->cardinality() == 3125);
    CHECK_FALSE(r->is_field());
    CHECK(r->is_commutative());

    const Residues x = {0, 1, 0, 0, 0};
    // x * x^4 = x^5 = 1 in F_5[x]/(x^5 - 1)
    CHECK(r->mul(x, {0, 0, 0, 0, 1}) == r->one());
    CHECK(r->invert(x) == Residues{0, 0, 0, 0, 1});
    // x - 1 divides the modulus, so it is a zero divisor
    CHECK_FALSE(r->invert({4, 1, 0, 0, 0}).has_value());

    CHECK(r->delta(x) == r->one());
    CHECK(r->delta({0, 0, 1, 0, 0}) == Residues{0, 2, 0, 0, 0});  // (x^2)' = 2x
    CHECK(r->delta(r->one()) == r->zero());
    // d/dx wraps around the relation x^5 = 1: (x^4)' = 4x^3
    CHECK(r->delta({0, 0, 0, 0, 1}) == Residues{0, 0, 0, 4, 0});
}

TEST_CASE("triangular ring operations") {
    const RingPtr& r = testutil::tri2();
    CHECK(r->width() == 3);
    CHECK(r->cardinality() == 8);
    CHECK_FALSE(r->is_field());
    CHECK(r->is_commutative());

    // elements are (a, b) for the matrix [[a, b], [0, a]], b in F_4
    const Residues u = {1, 0, 1};  // a = 1, b = y
    CHECK(r->sigma(u) == Residues{1, 1, 1});  // b -> b^2 = y + 1
    CHECK(r->delta(u) == Residues{0, 1, 1});  // (a, b) -> (0, b^2)
    CHECK(r->delta({1, 0, 0}) == r->zero());

    // (1, b)^-1 = (1, -b) and (0, b) is not invertible
    CHECK(r->invert({1, 1, 0}) == Residues{1, 1, 0});
    CHECK_FALSE(r->invert({0, 1, 0}).has_value());

    // multiplication is (a, b)(c, d) = (ac, ad + bc)
    CHECK(r->mul({1, 1, 0}, {1, 0, 1}) == Residues{1, 1, 1});
    CHECK(r->mul({0, 1, 0}, {0, 0, 1}) == r->zero());
}

TEST_CASE("element enumeration is canonical-lexicographic") {
    const RingPtr& r = testutil::f4();
    const auto all = r->all_elements();
    REQUIRE(all.size() == 4);
    CHECK(all[0] == Residues{0, 0});
    CHECK(all[1] == Residues{0, 1});
    CHECK(all[2] == Residues{1, 0});
    CHECK(all[3] == Residues{1, 1});

    Residues a = r->zero();
    CHECK(r->next_element(a));
    CHECK(a == Residues{0, 1});

    CHECK(testutil::f5x()->all_elements().size() == 3125);
    CHECK(testutil::tri2()->all_elements().size() == 8);
    CHECK_THROWS_AS(testutil::f5x()->all_elements(100), budget_error);
}

TEST_CASE("element parsing and formatting") {
    const RingPtr& r4 = testutil::f4();
    CHECK(r4->parse_element("1") == Residues{1, 0});       // short literals pad
    CHECK(r4->parse_element("-1") == Residues{1, 0});      // negatives reduce mod p
    CHECK(r4->parse_element("1,1,1") == Residues{0, 0});   // long literals reduce
    CHECK(r4->parse_element("0, 1") == Residues{0, 1});    // spaces are fine
    CHECK(r4->format_element({0, 1}) == "0,1");

    const RingPtr& r5 = testutil::f5x();
    CHECK(r5->parse_element("-1") == Residues{4, 0, 0, 0, 0});
    CHECK(r5->format_element({4, 0, 1, 0, 0}) == "4,0,1,0,0");
    // x^5 reduces to 1
    CHECK(r5->parse_element("0,0,0,0,0,1") == r5->one());

    CHECK_THROWS_AS(r4->parse_element(""), std::invalid_argument);
    CHECK_THROWS_AS(r4->parse_element("1,x"), std::invalid_argument);
    // a long literal cannot be reduced without a modulus
    CHECK_THROWS_AS(make_f5()->parse_element("1,2"), std::invalid_argument);
}

TEST_CASE("law checking") {
    const auto rep4 = testutil::f4()->check_laws();
    CHECK(rep4.ok);
    CHECK(rep4.exhaustive);
    CHECK(rep4.pairs_checked == 16);

    const auto rep_tri = testutil::tri2()->check_laws();
    CHECK(rep_tri.ok);
    CHECK(rep_tri.exhaustive);
    CHECK(rep_tri.pairs_checked == 64);

    // force sampling on the 3125-element ring: still clean
    const auto rep5 = testutil::f5x()->check_laws(1, 2000, 7);
    CHECK(rep5.ok);
    CHECK_FALSE(rep5.exhaustive);
}

TEST_CASE("inner derivation witness search") {
    // the zero derivation is inner with witness 0
    const auto w4 = testutil::f4()->inner_delta_witness();
    REQUIRE(w4.has_value());
    CHECK(testutil::f4()->is_zero(*w4));

    // d/dx on a commutative ring cannot be inner (all inner maps vanish)
    CHECK_FALSE(testutil::f5x()->inner_delta_witness().has_value());

    // the triangular derivation is the textbook non-inner example
    CHECK_FALSE(testutil::tri2()->inner_delta_witness().has_value());
}

TEST_CASE("inner derivations") {
    // delta(r) = m*r - sigma(r)*m for the configured element m
    const RingPtr f4i = Ring::parse_config(
        "kind = extension_field\n"
        "p = 2\n"
        "n = 2\n"
        "modulus = 1,1,1\n"
        "sigma = frobenius\n"
        "delta = inner:0,1\n");
    const Residues a = {0, 1};
    CHECK(f4i->delta(f4i->zero()) == f4i->zero());
    CHECK(f4i->delta(f4i->one()) == f4i->zero());
    CHECK(f4i->delta(a) == a);
    CHECK(f4i->delta({1, 1}) == a);
    CHECK(f4i->check_laws().ok);
    CHECK(f4i->describe() ==
          "extension_field(p=2, n=2, modulus=1,1,1), |A|=4, sigma=frobenius^1, delta=inner:0,1");

    // the witness search recovers the twisting element (unique in this ring)
    const auto w = f4i->inner_delta_witness();
    REQUIRE(w.has_value());
    CHECK(*w == a);

    // inner derivations are accepted on non-field rings too
    const RingPtr ti = Ring::parse_config(
        "kind = triangular_ring\n"
        "p = 2\n"
        "n = 2\n"
        "modulus = 1,1,1\n"
        "sigma = entrywise_frobenius\n"
        "delta = inner:1,1,0\n");
    CHECK(ti->delta({0, 0, 1}) == Residues{0, 1, 0});
    CHECK(ti->delta({1, 1, 0}) == Residues{0, 0, 0});
    CHECK(ti->check_laws().ok);

    // several elements induce the same map here; the search returns the first,
    // and its map must agree with delta everywhere
    const auto wt = ti->inner_delta_witness();
    REQUIRE(wt.has_value());
    CHECK(*wt == Residues{1, 0, 0});
    for (const Residues& r : ti->all_elements())
        CHECK(ti->delta(r) == ti->sub(ti->mul(*wt, r), ti->mul(ti->sigma(r), *wt)));

    // outside the polynomial-quotient kinds the twisting element must fit the width
    RingSpec s;
    s.kind = RingKind::triangular_ring;
    s.p = 2;
    s.n = 2;
    s.modulus = {1, 1, 1};
    s.sigma = SigmaKind::entrywise_frobenius;
    s.delta = DeltaKind::inner;
    s.inner_element = {1, 1, 0, 1};
    CHECK_THROWS_AS(Ring::create(s), std::invalid_argument);
}

TEST_CASE("configuration parsing") {
    const RingPtr r = Ring::parse_config(
        "# comment\n"
        "kind = extension_field\n"
        "p = 2\n"
        "n = 2\n"
        "modulus = 1,1,1\n"
        "sigma = frobenius\n"
        "delta = zero\n");
    CHECK(r->same(*testutil::f4()));
    CHECK(r->describe() == testutil::f4()->describe());

    CHECK_THROWS_AS(Ring::parse_config("kind = prime_field\np = 5\np = 7\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(Ring::parse_config("kind = prime_field\np = 5\nflavor = mild\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(Ring::parse_config("p = 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(Ring::load_config(testutil::config_dir() + "/no-such.ring"),
                    std::invalid_argument);
}

TEST_CASE("shipped configurations load") {
    CHECK(testutil::f4()->describe() ==
          "extension_field(p=2, n=2, modulus=1,1,1), |A|=4, sigma=frobenius^1, delta=zero");
    CHECK(testutil::f8()->cardinality() == 8);
    CHECK(testutil::f8()->sigma_order() == 3);
    CHECK(testutil::tri2()->sigma_order() == 2);
    CHECK_FALSE(testutil::f4()->same(*testutil::f8()));
}
