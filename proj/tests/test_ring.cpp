#include "doctest.h"
#include "hsd/ring.hpp"
#include "hsd/tables.hpp"

using namespace hsd;

// Nibble names for readability: w = omega, elements are a + b*u with
// nibble a | (b << 2).
namespace {
constexpr uint8_t W = 2, W1 = 3, U = 4, WU = 8;
}

TEST_CASE("basic arithmetic") {
    CHECK(gf::mul(W, W) == W1);           // w^2 = 1+w
    CHECK(gf::add(1 | U, 1) == U);        // (1+u) + 1 = u
    CHECK(gf::mul(U, U) == 0);            // u^2 = 0
    CHECK(gf::mul(W, W1) == 1);           // w * w^2 = w^3 = 1
    CHECK_THROWS_AS(gf::inv(U), NotAUnit);
    CHECK_THROWS_AS(gf::inv(0), NotAUnit);
    for (int x = 1; x < 16; ++x)
        if (gf::is_unit(uint8_t(x))) CHECK(gf::mul(uint8_t(x), gf::inv(uint8_t(x))) == 1);
}

TEST_CASE("conjugation") {
    CHECK(gf::conj(W) == W1);
    CHECK(gf::conj(1) == 1);
    CHECK(gf::conj(uint8_t(1 | WU)) == (1 | (W1 << 2)));  // conj(1+wu) = 1+(1+w)u
    // homomorphism and involution, exhaustive over F4U
    for (int x = 0; x < 16; ++x) {
        CHECK(gf::conj(gf::conj(uint8_t(x))) == x);
        CHECK(gf::add(uint8_t(x), uint8_t(x)) == 0);  // characteristic 2
        for (int y = 0; y < 16; ++y) {
            CHECK(gf::conj(gf::mul(uint8_t(x), uint8_t(y))) ==
                  gf::mul(gf::conj(uint8_t(x)), gf::conj(uint8_t(y))));
            CHECK(gf::conj(gf::add(uint8_t(x), uint8_t(y))) ==
                  gf::add(gf::conj(uint8_t(x)), gf::conj(uint8_t(y))));
        }
    }
}

TEST_CASE("hex codec") {
    CHECK(hex_decode(RingId::F4U, '5') == (1 | U));      // 1+u
    CHECK(hex_decode(RingId::F4U, 'A') == (W | WU));     // w+wu
    CHECK(hex_encode(RingId::F4, W1) == '3');
    CHECK_THROWS_AS(hex_decode(RingId::F4, '4'), BadSymbol);
    CHECK_THROWS_AS(hex_decode(RingId::F4U, 'G'), BadSymbol);
    for (uint8_t v = 0; v < 16; ++v)
        CHECK(hex_decode(RingId::F4U, hex_encode(RingId::F4U, v)) == v);
    for (uint8_t v = 0; v < 4; ++v)
        CHECK(hex_decode(RingId::F4, hex_encode(RingId::F4, v)) == v);
}

TEST_CASE("unitary elements") {
    CHECK(unitary_elements(RingId::F4) == std::vector<uint8_t>{1, 2, 3});
    CHECK(unitary_elements(RingId::F4U) == std::vector<uint8_t>{1, 2, 3, 5, 0xA, 0xF});
    for (uint8_t x : unitary_elements(RingId::F4U)) CHECK(gf::mul(x, gf::conj(x)) == 1);
}

TEST_CASE("checked element type") {
    RingElement x{RingId::F4, W}, y{RingId::F4U, W};
    CHECK_THROWS_AS((void)(x + y), MixedRings);
    CHECK_THROWS_AS((void)(x * y), MixedRings);
    CHECK((x * x) == RingElement{RingId::F4, W1});
    CHECK_THROWS_AS(RingElement(RingId::F4, 5), BadSymbol);
}

TEST_CASE("every table lambda and mu is unitary in its ring") {
    for (const auto& t : fixtures()) {
        if (t.ctor != Construction::Thm1 && t.ctor != Construction::Thm2) continue;
        for (const auto& row : t.rows) {
            CHECK(gf::is_unitary(hex_decode(t.ring, row.f[0][0])));
            CHECK(gf::is_unitary(hex_decode(t.ring, row.f[1][0])));
        }
    }
}
