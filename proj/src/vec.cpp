#include "hsd/vec.hpp"

namespace hsd {

RingVec parse_vec(RingId ring, const std::string& s) {
    std::string body = s;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    RingVec out(ring, {});
    out.v.reserve(body.size());
    for (char c : body) out.v.push_back(hex_decode(ring, c));
    return out;
}

std::string format_vec(const RingVec& x) {
    std::string s = "(";
    for (uint8_t e : x.v) s += hex_encode(x.ring, e);
    s += ")";
    return s;
}

std::vector<uint8_t> conj_vec(std::span<const uint8_t> x) {
    std::vector<uint8_t> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = gf::conj(x[i]);
    return out;
}

uint8_t herm_dot(std::span<const uint8_t> x, std::span<const uint8_t> y) {
    if (x.size() != y.size()) throw DimensionMismatch("herm_dot on unequal lengths");
    uint8_t s = 0;
    for (size_t i = 0; i < x.size(); ++i) s ^= gf::mul(x[i], gf::conj(y[i]));
    return s;
}

}  // namespace hsd
