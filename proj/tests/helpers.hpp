#pragma once

// Shared test utilities: deterministic RNG draws and independent dense
// oracles used to cross-check the Theta-based fast paths.

#include <cstdint>
#include <random>
#include <vector>

#include "hsd/circulant.hpp"
#include "hsd/matrix.hpp"
#include "hsd/ring.hpp"

namespace hsdtest {

inline uint8_t rand_sym(std::mt19937& rng, hsd::RingId ring) {
    return uint8_t(rng() % uint32_t(hsd::ring_size(ring)));
}

inline std::vector<uint8_t> rand_vec(std::mt19937& rng, hsd::RingId ring, size_t n) {
    std::vector<uint8_t> v(n);
    for (auto& x : v) x = rand_sym(rng, ring);
    return v;
}

inline uint8_t rand_unitary(std::mt19937& rng, hsd::RingId ring) {
    const auto u = hsd::unitary_elements(ring);
    return u[rng() % uint32_t(u.size())];
}

// Literal transcription of the Theta definition, independent of the
// library's implementation.
inline uint8_t naive_theta(const std::vector<uint8_t>& x, const std::vector<uint8_t>& y,
                           size_t j, uint8_t lambda) {
    const size_t n = x.size();
    uint8_t plain = 0, wrapped = 0;
    for (size_t i = 0; i + j <= n - 1; ++i) plain ^= hsd::gf::mul(x[(i + j) % n], y[i]);
    for (size_t i = n - j; i <= n - 1 && j > 0; ++i) wrapped ^= hsd::gf::mul(x[(i + j) % n], y[i]);
    return uint8_t(plain ^ hsd::gf::mul(lambda, wrapped));
}

// True iff M * conj(M)^T equals the identity.
inline bool dense_unitary(const hsd::DenseMatrix& m) {
    return hsd::mat_mul(m, hsd::mat_transpose(hsd::mat_conj(m))) ==
           hsd::identity(m.ring, m.rows);
}

}  // namespace hsdtest
