#include "hsd/ring.hpp"

namespace hsd {

std::string ring_name(RingId r) { return r == RingId::F4 ? "f4" : "f4u"; }

RingId ring_from_name(const std::string& name) {
    if (name == "f4") return RingId::F4;
    if (name == "f4u") return RingId::F4U;
    throw ParseError("unknown ring '" + name + "'");
}

std::vector<uint8_t> unitary_elements(RingId ring) {
    std::vector<uint8_t> out;
    for (int x = 0; x <= ring_mask(ring); ++x)
        if (gf::is_unitary(uint8_t(x))) out.push_back(uint8_t(x));
    return out;
}

char hex_encode(RingId ring, uint8_t v) {
    if (v > ring_mask(ring)) throw BadSymbol(static_cast<char>('0' + v));
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('A' + v - 10);
}

uint8_t hex_decode(RingId ring, char c) {
    int v;
    if (c >= '0' && c <= '9')
        v = c - '0';
    else if (c >= 'A' && c <= 'F')
        v = c - 'A' + 10;
    else if (c >= 'a' && c <= 'f')
        v = c - 'a' + 10;
    else
        throw BadSymbol(c);
    if (v > ring_mask(ring)) throw BadSymbol(c);
    return uint8_t(v);
}

}  // namespace hsd
