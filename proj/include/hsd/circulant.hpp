#pragma once

// Lambda-circulant matrix algebra and the Theta mapping.
//
// Theta evaluates entries of products of lambda-circulant matrices directly
// from generating vectors, so condition checks never materialize a matrix.
// Dense materialization exists for oracles and generator assembly only.

#include <cstdint>
#include <span>
#include <vector>

#include "hsd/matrix.hpp"
#include "hsd/ring.hpp"
#include "hsd/vec.hpp"

namespace hsd {

// Compressed form of the n x n lambda-circulant matrix generated by `gen`:
// each row is the previous row shifted right, wrapped entries scaled by
// lambda.
struct CirculantSpec {
    RingId ring = RingId::F4;
    uint8_t lambda = 1;
    std::vector<uint8_t> gen;

    size_t n() const { return gen.size(); }
};

// All cyclic index arithmetic goes through this single helper.
inline size_t mod_index(size_t i, size_t n) { return i < n ? i : i - n; }

// Theta(x, y, j)[lambda] =
//   sum_{i=0}^{n-j-1} x_{[i+j]_n} y_i + lambda * sum_{i=n-j}^{n-1} x_{[i+j]_n} y_i,
// with the j = 0 case the plain dot product (independent of lambda).
uint8_t theta(std::span<const uint8_t> x, std::span<const uint8_t> y, size_t j, uint8_t lambda);

// v_j = Theta(b, conj(a), j)[conj(lambda)]; sigma_lambda(v) = B * conj(A)^T.
std::vector<uint8_t> theta_product(std::span<const uint8_t> b, std::span<const uint8_t> a,
                                   uint8_t lambda);

enum class UnitaryTarget { PlusOne, MinusOne };  // identical in characteristic 2

// True iff A*conj(A)^T = I_n for A = sigma_lambda(gen), decided from the
// floor(n/2)+1 leading Theta values.
bool is_hermitian_unitary(const CirculantSpec& spec,
                          UnitaryTarget target = UnitaryTarget::PlusOne);

DenseMatrix materialize(const CirculantSpec& spec);

// Block lambda-circulant assembly from k materialized n x n blocks.
DenseMatrix block_circulant(RingId ring, uint8_t lambda, const std::vector<DenseMatrix>& blocks);

}  // namespace hsd
