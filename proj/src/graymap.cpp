#include "hsd/graymap.hpp"

namespace hsd {

std::vector<uint8_t> gray_map(std::span<const uint8_t> v) {
    const size_t n = v.size();
    std::vector<uint8_t> out(2 * n);
    for (size_t i = 0; i < n; ++i) {
        const uint8_t a = v[i] & 3, b = v[i] >> 2;
        out[i] = b;
        out[n + i] = a ^ b;
    }
    return out;
}

int lee_weight(std::span<const uint8_t> v) {
    int w = 0;
    for (uint8_t e : v) {
        if (!e) continue;
        const uint8_t a = e & 3, b = e >> 2;
        w += (a == b || b == 0) ? 1 : 2;
    }
    return w;
}

int hamming_weight(std::span<const uint8_t> v) {
    int w = 0;
    for (uint8_t e : v) w += e != 0;
    return w;
}

GeneratorMatrix gray_image(const GeneratorMatrix& g) {
    if (g.ring() != RingId::F4U) throw MixedRings();
    const size_t k = g.rank(), n = g.length();
    DenseMatrix out(RingId::F4, 2 * k, 2 * n);
    for (size_t i = 0; i < k; ++i) {
        const auto row = g.m.row(i);
        const auto img = gray_map(row);
        std::vector<uint8_t> urow(n);
        for (size_t j = 0; j < n; ++j) urow[j] = uint8_t((row[j] & 3) << 2);  // u * x
        const auto uimg = gray_map(urow);
        for (size_t j = 0; j < 2 * n; ++j) {
            out.at(i, j) = img[j];
            out.at(k + i, j) = uimg[j];
        }
    }
    return {out};
}

}  // namespace hsd
