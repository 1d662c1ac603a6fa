#pragma once

// Gray map phi: a+bu |-> (b, a+b) from GF(4)+uGF(4)^n to GF(4)^2n, and the
// Lee weight. phi is GF(4)-linear and an isometry from Lee to Hamming
// weight, where n1 counts only *nonzero* components with a = b or b = 0
// (counting the zero component would break the isometry).

#include <cstdint>
#include <span>
#include <vector>

#include "hsd/matrix.hpp"
#include "hsd/ring.hpp"

namespace hsd {

std::vector<uint8_t> gray_map(std::span<const uint8_t> v);

int lee_weight(std::span<const uint8_t> v);

int hamming_weight(std::span<const uint8_t> v);

// Generator of phi(C) for a free F4U code given by k generator rows:
// the 2k rows phi(r_i), phi(u * r_i). Output is over F4, length doubled,
// full rank but generally not in standard form.
GeneratorMatrix gray_image(const GeneratorMatrix& g);

}  // namespace hsd
