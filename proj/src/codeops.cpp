#include "hsd/codeops.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <thread>

#include "hsd/graymap.hpp"
#include "hsd/vec.hpp"

namespace hsd {

namespace {

// Codewords packed 2 bits per GF(4) symbol, up to 64 symbols.
struct Packed {
    uint64_t w0 = 0, w1 = 0;

    Packed operator^(const Packed& o) const { return {w0 ^ o.w0, w1 ^ o.w1}; }
    void operator^=(const Packed& o) {
        w0 ^= o.w0;
        w1 ^= o.w1;
    }
};

inline int packed_weight(const Packed& p) {
    constexpr uint64_t lo = 0x5555555555555555ull;
    return std::popcount((p.w0 | (p.w0 >> 1)) & lo) + std::popcount((p.w1 | (p.w1 >> 1)) & lo);
}

Packed pack_row(std::span<const uint8_t> row) {
    Packed p;
    for (size_t i = 0; i < row.size(); ++i) {
        const uint64_t v = row[i] & 3;
        if (i < 32)
            p.w0 |= v << (2 * i);
        else
            p.w1 |= v << (2 * (i - 32));
    }
    return p;
}

using ScaledRows = std::vector<std::array<Packed, 4>>;  // rows[i][s] = s * row_i

GeneratorMatrix as_f4(const GeneratorMatrix& g) {
    return g.ring() == RingId::F4 ? g : gray_image(g);
}

ScaledRows scale_rows(const DenseMatrix& m) {
    if (m.cols > 64) throw DimensionMismatch("packed enumeration supports length <= 64");
    ScaledRows rows(m.rows);
    for (size_t i = 0; i < m.rows; ++i) {
        std::vector<uint8_t> scaled(m.cols);
        for (uint8_t s = 1; s < 4; ++s) {
            for (size_t j = 0; j < m.cols; ++j) scaled[j] = gf::mul(s, m.at(i, j));
            rows[i][s] = pack_row(scaled);
        }
    }
    return rows;
}

// Reflected base-4 Gray walk over all 4^count messages for digits
// [first, first+count): one scaled-row XOR per visited codeword.
template <class Visit>
void gray_walk(const ScaledRows& rows, size_t first, size_t count, Packed cw, Visit&& visit) {
    const size_t k = count;
    std::vector<uint8_t> digit(k, 0);
    std::vector<size_t> focus(k + 1);
    std::vector<int8_t> dir(k, 1);
    for (size_t i = 0; i <= k; ++i) focus[i] = i;
    visit(cw);
    for (;;) {
        const size_t j = focus[0];
        focus[0] = 0;
        if (j == k) break;
        const uint8_t old = digit[j];
        digit[j] = uint8_t(int(old) + dir[j]);
        if (digit[j] == 0 || digit[j] == 3) {
            dir[j] = int8_t(-dir[j]);
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        cw ^= rows[first + j][old ^ digit[j]];
        visit(cw);
    }
}

// Full message space, partitioned over the trailing digits so results are
// identical for any worker count.
std::vector<uint64_t> count_weights(const ScaledRows& rows, size_t length, int workers) {
    const size_t k = rows.size();
    size_t fixed = 0;
    while (workers > 1 && (size_t(1) << (2 * fixed)) < size_t(workers) && fixed < k) ++fixed;
    const size_t parts = size_t(1) << (2 * fixed);
    const size_t split = k - fixed;

    std::vector<std::vector<uint64_t>> local(size_t(workers),
                                             std::vector<uint64_t>(length + 1, 0));
    auto run = [&](int w) {
        auto& counts = local[size_t(w)];
        for (size_t part = size_t(w); part < parts; part += size_t(workers)) {
            Packed base;
            for (size_t t = 0; t < fixed; ++t) {
                const uint8_t v = uint8_t((part >> (2 * t)) & 3);
                if (v) base ^= rows[split + t][v];
            }
            gray_walk(rows, 0, split, base,
                      [&](const Packed& cw) { ++counts[size_t(packed_weight(cw))]; });
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::vector<uint64_t> counts(length + 1, 0);
    for (const auto& l : local)
        for (size_t i = 0; i <= length; ++i) counts[i] += l[i];
    return counts;
}

void check_budget(size_t k, uint64_t budget) {
    if (k >= 32 || (uint64_t(1) << (2 * k)) > budget)
        throw BudgetExceeded("4^" + std::to_string(k) + " messages");
}

// Information sets for the Brouwer-Zimmermann style bound: greedily build
// sets preferring columns not in any previous set; sigma = count of reused
// columns. Unenumerated codewords at level r have weight
// >= sum_i max(0, r+1-sigma_i).
struct InfoSet {
    ScaledRows rows;
    size_t sigma = 0;
};

std::vector<InfoSet> build_info_sets(const DenseMatrix& g) {
    const size_t k = g.rows, n = g.cols;
    std::vector<bool> used(n, false);
    std::vector<InfoSet> sets;
    for (;;) {
        DenseMatrix w = g;
        std::vector<size_t> pivots;
        size_t fresh = 0;
        // two passes over candidate columns: unused first, then used
        for (int pass = 0; pass < 2 && pivots.size() < k; ++pass) {
            for (size_t col = 0; col < n && pivots.size() < k; ++col) {
                if (used[col] != (pass == 1)) continue;
                if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
                const size_t r = pivots.size();
                size_t piv = w.rows;
                for (size_t i = r; i < w.rows; ++i)
                    if (gf::is_unit(w.at(i, col))) {
                        piv = i;
                        break;
                    }
                if (piv == w.rows) continue;
                for (size_t j = 0; j < n; ++j) std::swap(w.at(r, j), w.at(piv, j));
                const uint8_t inv = gf::inv(w.at(r, col));
                for (size_t j = 0; j < n; ++j) w.at(r, j) = gf::mul(inv, w.at(r, j));
                for (size_t i = 0; i < w.rows; ++i) {
                    if (i == r) continue;
                    const uint8_t f = w.at(i, col);
                    if (!f) continue;
                    for (size_t j = 0; j < n; ++j) w.at(i, j) ^= gf::mul(f, w.at(r, j));
                }
                pivots.push_back(col);
                if (!used[col]) ++fresh;
            }
        }
        if (pivots.size() < k) {
            if (sets.empty()) throw NoProgress();
            break;
        }
        if (fresh == 0) break;
        for (size_t col : pivots) used[col] = true;
        sets.push_back({scale_rows(w), k - fresh});
        if (sets.size() == 4) break;
    }
    return sets;
}

// Combinations of exactly `rem` scaled rows starting at `start`.
template <class Visit>
void combos(const ScaledRows& rows, size_t start, size_t rem, const Packed& cw, Visit&& visit) {
    for (size_t p = start; p + rem <= rows.size(); ++p)
        for (uint8_t s = 1; s < 4; ++s) {
            const Packed next = cw ^ rows[p][s];
            if (rem == 1)
                visit(next);
            else
                combos(rows, p + 1, rem - 1, next, visit);
        }
}

// Runs the information-set bound until lower >= upper (exact distance) or
// until the bound proves d >= stop_at (early accept) or some codeword
// drops below stop_at (early reject). stop_at = 0 computes the exact d.
int info_set_distance(const GeneratorMatrix& g, int stop_at) {
    auto sets = build_info_sets(g.m);
    const size_t k = g.rank();
    int ub = int(g.length()) + 1;
    for (size_t r = 1; r <= k; ++r) {
        for (auto& set : sets)
            combos(set.rows, 0, r, Packed{}, [&](const Packed& cw) {
                const int w = packed_weight(cw);
                if (w < ub) ub = w;
            });
        int lb = 0;
        for (const auto& set : sets) lb += std::max<int>(0, int(r) + 1 - int(set.sigma));
        if (stop_at > 0) {
            if (ub < stop_at) return ub;
            if (lb >= stop_at) return std::min(lb, ub);
        }
        if (lb >= ub) return ub;
    }
    return ub;
}

}  // namespace

std::string WeightDistribution::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : counts) {
        if (!first) out << " ";
        out << w << ":" << c;
        first = false;
    }
    return out.str();
}

bool verify_hermitian_self_dual(const GeneratorMatrix& g) {
    const size_t k = g.rank(), n = g.length();
    if (n % 2 != 0 || k != n / 2) return false;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j)
            if (herm_dot(g.m.row(i), g.m.row(j)) != 0) return false;
    return mat_rank(g.m) == k;
}

WeightDistribution weight_distribution_exhaustive(const GeneratorMatrix& g,
                                                  std::optional<int> cutoff,
                                                  const EnumOptions& opt) {
    const GeneratorMatrix f4 = as_f4(g);
    check_budget(f4.rank(), opt.budget);
    const auto counts = count_weights(scale_rows(f4.m), f4.length(), opt.workers);
    WeightDistribution dist;
    dist.length = int(f4.length());
    dist.truncation = cutoff;
    dist.complete = !cutoff || *cutoff >= dist.length;
    for (int w = 0; w <= dist.length; ++w) {
        if (cutoff && w > *cutoff) break;
        if (counts[size_t(w)]) dist.counts[w] = counts[size_t(w)];
    }
    return dist;
}

int min_distance(const GeneratorMatrix& g, DistanceMethod method, const EnumOptions& opt) {
    const GeneratorMatrix f4 = as_f4(g);
    if (method == DistanceMethod::Exhaustive) {
        check_budget(f4.rank(), opt.budget);
        const auto counts = count_weights(scale_rows(f4.m), f4.length(), opt.workers);
        for (size_t w = 1; w < counts.size(); ++w)
            if (counts[w]) return int(w);
        return int(f4.length()) + 1;  // zero code
    }
    return info_set_distance(f4, 0);
}

bool distance_at_least(const GeneratorMatrix& g, int target) {
    return info_set_distance(as_f4(g), target) >= target;
}

int distance_bound(int length) { return 2 * (length / 6) + 2; }

int alpha_weight_for_length(int length) {
    switch (length) {
        case 26: return 8;
        case 32: return 10;
        case 36: return 12;
        case 38: return 12;
        case 40: return 12;
        default: throw UnknownEnumeratorLength(length);
    }
}

int64_t second_coefficient(int length, int64_t alpha) {
    switch (length) {
        case 26: return 10725 - 5 * alpha;
        case 32: return 67704 - 7 * alpha;
        case 36: return 771120 - 12 * alpha;
        case 38: return 430236 - 9 * alpha;
        case 40: return 232560 - 6 * alpha;
        default: throw UnknownEnumeratorLength(length);
    }
}

int64_t alpha_of(const GeneratorMatrix& g, std::optional<int> explicit_weight,
                 const EnumOptions& opt) {
    const GeneratorMatrix f4 = as_f4(g);
    const int w = explicit_weight ? *explicit_weight : alpha_weight_for_length(int(f4.length()));
    const auto dist = weight_distribution_exhaustive(f4, w + 2, opt);
    const auto it = dist.counts.find(w);
    return it == dist.counts.end() ? 0 : int64_t(it->second);
}

}  // namespace hsd
