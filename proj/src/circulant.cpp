#include "hsd/circulant.hpp"

namespace hsd {

uint8_t theta(std::span<const uint8_t> x, std::span<const uint8_t> y, size_t j, uint8_t lambda) {
    const size_t n = x.size();
    if (y.size() != n) throw DimensionMismatch("theta on unequal lengths");
    if (j >= n) throw IndexOutOfRange("theta shift j=" + std::to_string(j));
    if (j == 0) {
        uint8_t s = 0;
        for (size_t i = 0; i < n; ++i) s ^= gf::mul(x[i], y[i]);
        return s;
    }
    uint8_t aligned = 0, wrapped = 0;
    for (size_t i = 0; i < n - j; ++i) aligned ^= gf::mul(x[i + j], y[i]);
    for (size_t i = n - j; i < n; ++i) wrapped ^= gf::mul(x[i + j - n], y[i]);
    return aligned ^ gf::mul(lambda, wrapped);
}

std::vector<uint8_t> theta_product(std::span<const uint8_t> b, std::span<const uint8_t> a,
                                   uint8_t lambda) {
    if (!gf::is_unitary(lambda)) throw NotUnitaryLambda();
    const size_t n = a.size();
    const auto ca = conj_vec(a);
    const uint8_t cl = gf::conj(lambda);
    std::vector<uint8_t> v(n);
    for (size_t j = 0; j < n; ++j) v[j] = theta(b, ca, j, cl);
    return v;
}

bool is_hermitian_unitary(const CirculantSpec& spec, UnitaryTarget) {
    if (!gf::is_unitary(spec.lambda)) throw NotUnitaryLambda();
    const size_t n = spec.n();
    const auto ca = conj_vec(spec.gen);
    const uint8_t cl = gf::conj(spec.lambda);
    if (theta(spec.gen, ca, 0, cl) != 1) return false;  // both targets are 1 in char 2
    for (size_t j = 1; j <= n / 2; ++j)
        if (theta(spec.gen, ca, j, cl) != 0) return false;
    return true;
}

DenseMatrix materialize(const CirculantSpec& spec) {
    const size_t n = spec.n();
    DenseMatrix m(spec.ring, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = j >= i ? spec.gen[j - i] : gf::mul(spec.lambda, spec.gen[n + j - i]);
    return m;
}

DenseMatrix block_circulant(RingId ring, uint8_t lambda, const std::vector<DenseMatrix>& blocks) {
    const size_t k = blocks.size();
    const size_t n = blocks[0].rows;
    DenseMatrix out(ring, k * n, k * n);
    for (size_t bi = 0; bi < k; ++bi)
        for (size_t bj = 0; bj < k; ++bj) {
            const bool wrap = bj < bi;
            const DenseMatrix& blk = blocks[wrap ? k + bj - bi : bj - bi];
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    const uint8_t e = blk.at(i, j);
                    out.at(bi * n + i, bj * n + j) = wrap ? gf::mul(lambda, e) : e;
                }
        }
    return out;
}

}  // namespace hsd
