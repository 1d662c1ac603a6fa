#include "hsd/matrix.hpp"

namespace hsd {

DenseMatrix identity(RingId ring, size_t n) {
    DenseMatrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseMatrix exchange(RingId ring, size_t n) {
    DenseMatrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
    return m;
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.ring != b.ring) throw MixedRings();
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("add");
    DenseMatrix out(a.ring, a.rows, a.cols);
    for (size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] ^ b.e[i];
    return out;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.ring != b.ring) throw MixedRings();
    if (a.cols != b.rows) throw DimensionMismatch("mul");
    DenseMatrix out(a.ring, a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t t = 0; t < a.cols; ++t) {
            const uint8_t s = a.at(i, t);
            if (!s) continue;
            for (size_t j = 0; j < b.cols; ++j) out.at(i, j) ^= gf::mul(s, b.at(t, j));
        }
    return out;
}

DenseMatrix mat_transpose(const DenseMatrix& a) {
    DenseMatrix out(a.ring, a.cols, a.rows);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
    return out;
}

DenseMatrix mat_conj(const DenseMatrix& a) {
    DenseMatrix out = a;
    for (auto& x : out.e) x = gf::conj(x);
    return out;
}

DenseMatrix mat_scale(uint8_t s, const DenseMatrix& a) {
    DenseMatrix out = a;
    for (auto& x : out.e) x = gf::mul(s, x);
    return out;
}

size_t mat_rank(const DenseMatrix& a) {
    // Unit-pivot elimination; over GF(4) this is the usual rank, over
    // GF(4)+uGF(4) it is the free rank (torsion rows are not counted).
    DenseMatrix w = a;
    size_t r = 0;
    for (size_t col = 0; col < w.cols && r < w.rows; ++col) {
        size_t piv = w.rows;
        for (size_t i = r; i < w.rows; ++i)
            if (gf::is_unit(w.at(i, col))) {
                piv = i;
                break;
            }
        if (piv == w.rows) continue;
        for (size_t j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(piv, j));
        const uint8_t inv = gf::inv(w.at(r, col));
        for (size_t j = 0; j < w.cols; ++j) w.at(r, j) = gf::mul(inv, w.at(r, j));
        for (size_t i = 0; i < w.rows; ++i) {
            if (i == r) continue;
            const uint8_t f = w.at(i, col);
            if (!f) continue;
            for (size_t j = 0; j < w.cols; ++j) w.at(i, j) ^= gf::mul(f, w.at(r, j));
        }
        ++r;
    }
    return r;
}

bool GeneratorMatrix::is_standard_form() const {
    if (m.cols < m.rows) return false;
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.rows; ++j)
            if (m.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace hsd
