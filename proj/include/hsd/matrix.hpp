#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsd/ring.hpp"

namespace hsd {

// Row-major dense matrix over GF(4) or GF(4)+uGF(4). Dense matrices exist
// for oracles and final generator assembly; the search hot path works on
// generating vectors only.
struct DenseMatrix {
    RingId ring = RingId::F4;
    size_t rows = 0, cols = 0;
    std::vector<uint8_t> e;

    DenseMatrix() = default;
    DenseMatrix(RingId r, size_t nrows, size_t ncols)
        : ring(r), rows(nrows), cols(ncols), e(nrows * ncols, 0) {}

    uint8_t& at(size_t i, size_t j) { return e[i * cols + j]; }
    uint8_t at(size_t i, size_t j) const { return e[i * cols + j]; }
    std::span<const uint8_t> row(size_t i) const { return {e.data() + i * cols, cols}; }

    bool operator==(const DenseMatrix&) const = default;
};

DenseMatrix identity(RingId ring, size_t n);
DenseMatrix exchange(RingId ring, size_t n);  // J_n, anti-diagonal

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_transpose(const DenseMatrix& a);
DenseMatrix mat_conj(const DenseMatrix& a);
DenseMatrix mat_scale(uint8_t s, const DenseMatrix& a);

// Row rank by Gaussian elimination (works over both rings via unit pivots
// and u-row handling; all generators handled here are over fields or have
// unit pivots, which is asserted).
size_t mat_rank(const DenseMatrix& a);

// Generator matrix of a linear code; rows = rank k, cols = length.
// Standard form (I_k | X) is the common case but not required everywhere
// (Gray images and building-up outputs are plain full-rank generators).
struct GeneratorMatrix {
    DenseMatrix m;

    size_t rank() const { return m.rows; }
    size_t length() const { return m.cols; }
    RingId ring() const { return m.ring; }
    bool is_standard_form() const;
};

}  // namespace hsd
