#pragma once

// Arithmetic for GF(4) and GF(4)+uGF(4).
//
// Elements are stored as packed coordinates over the basis {1, w, u, wu}:
//   bit 0 : coefficient of 1      (part of a)
//   bit 1 : coefficient of w      (part of a)
//   bit 2 : coefficient of u      (part of b)
//   bit 3 : coefficient of wu     (part of b)
// so an element a+bu has nibble value a | (b << 2), w^2 = w+1 and u^2 = 0.
// The nibble value coincides with the hexadecimal table notation, GF(4)
// elements occupy nibbles 0..3.
//
// Both rings have characteristic 2: addition is XOR and -x == x, so every
// "-1" appearing in the source theorems is implemented as 1.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hsd/errors.hpp"

namespace hsd {

enum class RingId : uint8_t { F4, F4U };

constexpr int ring_size(RingId r) { return r == RingId::F4 ? 4 : 16; }
constexpr uint8_t ring_mask(RingId r) { return r == RingId::F4 ? 0x3 : 0xF; }

std::string ring_name(RingId r);
RingId ring_from_name(const std::string& name);

namespace gf {

constexpr uint8_t mul4(uint8_t x, uint8_t y) {
    const uint8_t x0 = x & 1, x1 = x >> 1, y0 = y & 1, y1 = y >> 1;
    const uint8_t r0 = (x0 & y0) ^ (x1 & y1);
    const uint8_t r1 = (x0 & y1) ^ (x1 & y0) ^ (x1 & y1);
    return static_cast<uint8_t>(r0 | (r1 << 1));
}

constexpr uint8_t mul16(uint8_t x, uint8_t y) {
    const uint8_t a = x & 3, b = x >> 2, c = y & 3, d = y >> 2;
    return static_cast<uint8_t>(mul4(a, c) | ((mul4(a, d) ^ mul4(b, c)) << 2));
}

namespace detail {

constexpr std::array<std::array<uint8_t, 16>, 16> make_mul_table() {
    std::array<std::array<uint8_t, 16>, 16> t{};
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) t[x][y] = mul16(uint8_t(x), uint8_t(y));
    return t;
}

// a |-> a^2 on GF(4) extended coefficient-wise: conj(a+bu) = a^2 + b^2 u.
constexpr std::array<uint8_t, 16> make_conj_table() {
    std::array<uint8_t, 16> t{};
    constexpr uint8_t c4[4] = {0, 1, 3, 2};
    for (int x = 0; x < 16; ++x) t[x] = static_cast<uint8_t>(c4[x & 3] | (c4[x >> 2] << 2));
    return t;
}

constexpr std::array<uint8_t, 16> make_inv_table() {
    std::array<uint8_t, 16> t{};  // 0 marks non-units
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y)
            if (mul16(uint8_t(x), uint8_t(y)) == 1) t[x] = uint8_t(y);
    return t;
}

}  // namespace detail

inline constexpr auto MUL = detail::make_mul_table();
inline constexpr auto CONJ = detail::make_conj_table();
inline constexpr auto INV = detail::make_inv_table();

inline constexpr uint8_t add(uint8_t x, uint8_t y) { return x ^ y; }
inline constexpr uint8_t mul(uint8_t x, uint8_t y) { return MUL[x][y]; }
inline constexpr uint8_t conj(uint8_t x) { return CONJ[x]; }

// Units are exactly the elements whose GF(4) part is nonzero.
inline constexpr bool is_unit(uint8_t x) { return (x & 3) != 0; }

inline uint8_t inv(uint8_t x) {
    if (!is_unit(x)) throw NotAUnit("element " + std::to_string(int(x)));
    return INV[x];
}

inline constexpr bool is_unitary(uint8_t x) { return mul(x, conj(x)) == 1; }

}  // namespace gf

// Checked value type for the public API; hot paths use the raw gf:: helpers.
struct RingElement {
    RingId ring = RingId::F4;
    uint8_t v = 0;

    RingElement() = default;
    RingElement(RingId r, uint8_t value) : ring(r), v(value) {
        if (v > ring_mask(r)) throw BadSymbol(static_cast<char>('0' + v));
    }

    friend RingElement operator+(RingElement x, RingElement y) {
        if (x.ring != y.ring) throw MixedRings();
        return {x.ring, gf::add(x.v, y.v)};
    }
    friend RingElement operator*(RingElement x, RingElement y) {
        if (x.ring != y.ring) throw MixedRings();
        return {x.ring, gf::mul(x.v, y.v)};
    }
    friend bool operator==(RingElement x, RingElement y) { return x.ring == y.ring && x.v == y.v; }

    RingElement conj() const { return {ring, gf::conj(v)}; }
    RingElement inv() const { return {ring, gf::inv(v)}; }
    bool is_unit() const { return gf::is_unit(v); }
    bool is_unitary() const { return gf::is_unitary(v); }
};

// U' = { x : x*conj(x) = 1 }, by exhaustive test over the ring.
std::vector<uint8_t> unitary_elements(RingId ring);

char hex_encode(RingId ring, uint8_t v);
uint8_t hex_decode(RingId ring, char c);

}  // namespace hsd
