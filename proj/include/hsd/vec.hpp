#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hsd/ring.hpp"

namespace hsd {

struct RingVec {
    RingId ring = RingId::F4;
    std::vector<uint8_t> v;

    RingVec() = default;
    RingVec(RingId r, std::vector<uint8_t> values) : ring(r), v(std::move(values)) {}
    size_t size() const { return v.size(); }
    bool operator==(const RingVec&) const = default;
};

// Paper-style parenthesized hex vectors, e.g. "(000333)" or "(5B6)".
RingVec parse_vec(RingId ring, const std::string& s);
std::string format_vec(const RingVec& x);

std::vector<uint8_t> conj_vec(std::span<const uint8_t> x);

// <x,y>_H = sum_i x_i * conj(y_i)
uint8_t herm_dot(std::span<const uint8_t> x, std::span<const uint8_t> y);

}  // namespace hsd
