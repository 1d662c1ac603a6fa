#pragma once

// Builders and Theta-based condition checkers for the three circulant
// constructions and the building-up extension.
//
// Both rings have characteristic 2, so every minus sign in the source
// constructions is the identity; the builders route signs through negate()
// to keep the one place where they would matter over other rings visible.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hsd/circulant.hpp"
#include "hsd/matrix.hpp"
#include "hsd/ring.hpp"

namespace hsd {

inline uint8_t negate(uint8_t x) { return x; }  // char 2
inline DenseMatrix negate(DenseMatrix m) { return m; }

// [4n,2n] codes: G = (I | X), X = ((A^T C J, conj(B)), (B^T C J, conj(A)))
// with A, B lambda-circulant and C mu-circulant (or any unitary dense C).
struct Theorem1Params {
    RingId ring = RingId::F4;
    uint8_t lambda = 1, mu = 1;
    std::vector<uint8_t> a, b, c;
    std::optional<DenseMatrix> dense_c;  // overrides c when set; must be unitary

    size_t n() const { return a.size(); }
};

// [2kn,kn] codes: X = block lambda-circulant of k mu-circulant blocks.
struct Theorem2Params {
    RingId ring = RingId::F4;
    uint8_t lambda = 1, mu = 1;
    std::vector<std::vector<uint8_t>> a_blocks;

    size_t k() const { return a_blocks.size(); }
    size_t n() const { return a_blocks[0].size(); }
};

// [2(kn+1),kn+1] codes: bordered plain block circulant, corner x1, borders
// of repeated x2 / x3.
struct Theorem3Params {
    RingId ring = RingId::F4;
    uint8_t x1 = 0, x2 = 0, x3 = 0;
    std::vector<std::vector<uint8_t>> a_blocks;

    size_t k() const { return a_blocks.size(); }
    size_t n() const { return a_blocks[0].size(); }
};

bool thm1_conditions(const Theorem1Params& p);
GeneratorMatrix thm1_build(const Theorem1Params& p);

bool thm2_conditions(const Theorem2Params& p);
GeneratorMatrix thm2_build(const Theorem2Params& p);

bool thm3_conditions(const Theorem3Params& p);
GeneratorMatrix thm3_build(const Theorem3Params& p);

// Extends a self-dual [2n,n] code to [2n+2,n+1]: first row (1, 0, delta),
// then rows (gamma_i, eps*gamma_i, r_i) with gamma_i = <r_i, delta>_H.
// The O(n^3) input self-duality check is optional (off in search hot paths).
GeneratorMatrix building_up(const GeneratorMatrix& g, std::span<const uint8_t> delta,
                            uint8_t epsilon, bool validate_input = true);

}  // namespace hsd
