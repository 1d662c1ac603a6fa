// Acceptance gate: one check per published claim the artifact must
// reproduce. Every comparison is an exact integer match; there are no
// tolerances anywhere in this file. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fail.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "hsd/codeops.hpp"
#include "hsd/constructions.hpp"
#include "hsd/graymap.hpp"
#include "hsd/search.hpp"
#include "hsd/tables.hpp"
#include "hsd/vec.hpp"

using namespace hsd;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << detail
              << std::endl;
    failures += !pass;
}

uint8_t rand_sym(std::mt19937& rng, RingId ring) {
    return uint8_t(rng() % uint32_t(ring_size(ring)));
}

std::vector<uint8_t> rand_vec(std::mt19937& rng, RingId ring, size_t n) {
    std::vector<uint8_t> v(n);
    for (auto& x : v) x = rand_sym(rng, ring);
    return v;
}

uint8_t rand_unitary(std::mt19937& rng, RingId ring) {
    const auto u = unitary_elements(ring);
    return u[rng() % uint32_t(u.size())];
}

bool dense_unitary(const DenseMatrix& m) {
    return mat_mul(m, mat_transpose(mat_conj(m))) == identity(m.ring, m.rows);
}

// Dense assemblies of X for the oracle-equivalence criterion; the library
// condition checkers must agree with X * conj(X)^T == I on every instance.
DenseMatrix dense_x_thm1(const Theorem1Params& p) {
    const size_t n = p.n();
    const DenseMatrix a = materialize({p.ring, p.lambda, p.a});
    const DenseMatrix b = materialize({p.ring, p.lambda, p.b});
    const DenseMatrix c = materialize({p.ring, p.mu, p.c});
    const DenseMatrix j = exchange(p.ring, n);
    const DenseMatrix tl = mat_mul(mat_mul(mat_transpose(a), c), j);
    const DenseMatrix bl = mat_mul(mat_mul(mat_transpose(b), c), j);
    const DenseMatrix tr = mat_conj(b), br = mat_conj(a);
    DenseMatrix x(p.ring, 2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t jj = 0; jj < n; ++jj) {
            x.at(i, jj) = tl.at(i, jj);
            x.at(i, n + jj) = tr.at(i, jj);
            x.at(n + i, jj) = bl.at(i, jj);
            x.at(n + i, n + jj) = br.at(i, jj);
        }
    return x;
}

DenseMatrix dense_x_thm2(const Theorem2Params& p) {
    std::vector<DenseMatrix> blocks;
    for (const auto& a : p.a_blocks) blocks.push_back(materialize({p.ring, p.mu, a}));
    return block_circulant(p.ring, p.lambda, blocks);
}

DenseMatrix dense_x_thm3(const Theorem3Params& p) {
    const size_t kn = p.k() * p.n();
    std::vector<DenseMatrix> blocks;
    for (const auto& a : p.a_blocks) blocks.push_back(materialize({p.ring, 1, a}));
    const DenseMatrix y = block_circulant(p.ring, 1, blocks);
    DenseMatrix x(p.ring, kn + 1, kn + 1);
    x.at(0, 0) = p.x1;
    for (size_t j = 0; j < kn; ++j) x.at(0, j + 1) = p.x2;
    for (size_t i = 0; i < kn; ++i) x.at(i + 1, 0) = p.x3;
    for (size_t i = 0; i < kn; ++i)
        for (size_t j = 0; j < kn; ++j) x.at(i + 1, j + 1) = y.at(i, j);
    return x;
}

int hw() { return int(std::min<unsigned>(8, std::max<unsigned>(2, std::thread::hardware_concurrency()))); }

// Criterion 1: unitary circulant counts from the remark after theorem 1.
void criterion_1() {
    const uint64_t f4 = enumerate_unitary_circulants(RingId::F4, 10).total();
    const uint64_t f4u = enumerate_unitary_circulants(RingId::F4U, 5).total();
    report(1, f4 == 4320 && f4u == 8640,
           "N_C(F4,10)=" + std::to_string(f4) + " (expect 4320), N_C(F4U,5)=" +
               std::to_string(f4u) + " (expect 8640)");
}

// Criterion 2: all 20 rows of table 26-1 pass conditions, build self-dual
// [24,12] codes, and exhaustive enumeration gives d = 8 exactly.
void criterion_2() {
    const FixtureTable& t = fixture("26-1");
    VerifyOptions opt;
    opt.workers = hw();
    const TableReport rep = verify_table("26-1", opt);
    bool conds = true;
    for (const auto& row : t.rows) {
        Theorem1Params p{t.ring, hex_decode(t.ring, row.f[0][0]), hex_decode(t.ring, row.f[1][0]),
                         parse_vec(t.ring, row.f[2]).v, parse_vec(t.ring, row.f[3]).v,
                         parse_vec(t.ring, row.f[4]).v, std::nullopt};
        conds = conds && thm1_conditions(p);
    }
    report(2, conds && rep.rows_checked == 20 && rep.all_pass(),
           "table 26-1: " + std::to_string(rep.rows_passed) + "/20 rows pass, d=8 exhaustive");
}

// Criterion 3: building-up samples reproduce alpha and the A_10 identity.
void criterion_3() {
    VerifyOptions opt;
    opt.workers = hw();
    opt.max_rows = 10;
    const TableReport a = verify_table("26-2", opt);
    opt.max_rows = 5;
    const TableReport b = verify_table("26-4", opt);
    report(3, a.rows_checked == 10 && a.all_pass() && b.rows_checked == 5 && b.all_pass(),
           "26-2: " + std::to_string(a.rows_passed) + "/10, 26-4: " +
               std::to_string(b.rows_passed) + "/5 rows pass with exact alpha and A_10 identity");
}

// Criterion 4: the [38,19,12] code; d by the information-set method.
void criterion_4() {
    const TableReport rep = verify_table("38-1");
    report(4, rep.all_pass() && rep.rows[0].d == 12,
           "table 38-1: d=" + std::to_string(rep.rows[0].d) + " (expect 12, info_set)");
}

// Criterion 5: samples of the remaining tables; exact d via info_set.
// Alpha at these dimensions (k >= 16) is hours-scale and gated behind
// --extended in the CLI; the second-coefficient identity is enforced by
// verify_table wherever a distribution is computed.
void criterion_5() {
    bool ok = true;
    std::string detail;
    for (const std::string& id : {"32-1", "32-2", "36-1", "40-1", "40-2", "40-3"}) {
        VerifyOptions opt;
        opt.max_rows = 5;
        const TableReport rep = verify_table(id, opt);
        ok = ok && rep.all_pass();
        if (!detail.empty()) detail += ", ";
        detail += id + ": " + std::to_string(rep.rows_passed) + "/" +
                  std::to_string(rep.rows_checked);
    }
    report(5, ok, detail + " rows pass with exact d");
}

// Criterion 6: Theta-based condition checks vs dense X*conj(X)^T oracle.
void criterion_6() {
    std::mt19937 rng(101);
    int checked = 0, disagree = 0, accepted = 0;
    for (int it = 0; it < 1000; ++it) {
        for (RingId ring : {RingId::F4, RingId::F4U}) {
            const size_t n = 1 + rng() % 4, k = 1 + rng() % 3;
            Theorem1Params p1;
            p1.ring = ring;
            p1.lambda = rand_unitary(rng, ring);
            p1.mu = rand_unitary(rng, ring);
            p1.a = rand_vec(rng, ring, 2 * n);  // n <= 8
            p1.b = rand_vec(rng, ring, 2 * n);
            p1.c = rand_vec(rng, ring, 2 * n);
            const bool ok1 = thm1_conditions(p1);
            disagree += ok1 != dense_unitary(dense_x_thm1(p1));
            accepted += ok1;

            Theorem2Params p2;
            p2.ring = ring;
            p2.lambda = rand_unitary(rng, ring);
            p2.mu = rand_unitary(rng, ring);
            for (size_t i = 0; i < k; ++i) p2.a_blocks.push_back(rand_vec(rng, ring, n));
            const bool ok2 = thm2_conditions(p2);
            disagree += ok2 != dense_unitary(dense_x_thm2(p2));
            accepted += ok2;

            Theorem3Params p3;
            p3.ring = ring;
            p3.x1 = rand_sym(rng, ring);
            p3.x2 = rand_sym(rng, ring);
            p3.x3 = rand_sym(rng, ring);
            for (size_t i = 0; i < k; ++i) p3.a_blocks.push_back(rand_vec(rng, ring, n));
            const bool ok3 = thm3_conditions(p3);
            disagree += ok3 != dense_unitary(dense_x_thm3(p3));
            accepted += ok3;
            checked += 3;
        }
    }
    report(6, disagree == 0 && accepted > 0,
           std::to_string(checked) + " instances, " + std::to_string(disagree) +
               " disagreements, " + std::to_string(accepted) + " accepted");
}

// Criterion 7: lemma 1, remark 1, lemma 2, proposition 3.
void criterion_7() {
    std::mt19937 rng(103);
    int bad = 0;

    // lemma 1, exhaustive n = 2 over F4 plus 10^4 random larger cases
    auto lemma1 = [&](const std::vector<uint8_t>& x, const std::vector<uint8_t>& y, size_t j,
                      uint8_t lam) {
        const size_t n = x.size();
        const uint8_t rhs = j == 0 ? gf::mul(lam, gf::mul(gf::conj(lam), theta(y, x, 0, 1)))
                                   : gf::mul(lam, theta(y, x, n - j, gf::conj(lam)));
        bad += theta(x, y, j, lam) != rhs;
    };
    for (int xi = 0; xi < 16; ++xi)
        for (int yi = 0; yi < 16; ++yi)
            for (size_t j = 0; j < 2; ++j)
                for (uint8_t lam : {1, 2, 3})
                    lemma1({uint8_t(xi & 3), uint8_t(xi >> 2)},
                           {uint8_t(yi & 3), uint8_t(yi >> 2)}, j, lam);
    for (int it = 0; it < 10000; ++it) {
        const size_t n = 2 + rng() % 7;
        lemma1(rand_vec(rng, RingId::F4, n), rand_vec(rng, RingId::F4, n), rng() % n,
               rand_unitary(rng, RingId::F4));
    }

    for (int it = 0; it < 10000; ++it) {
        const RingId ring = it % 2 ? RingId::F4U : RingId::F4;
        const size_t n = 2 + rng() % 5;
        const uint8_t lam = rand_unitary(rng, ring);
        const auto a = rand_vec(rng, ring, n), b = rand_vec(rng, ring, n);
        // lemma 2: sigma_lambda(theta_product) equals the dense product
        const auto v = theta_product(b, a, lam);
        bad += materialize({ring, lam, v}) !=
               mat_mul(materialize({ring, lam, b}),
                       mat_transpose(mat_conj(materialize({ring, lam, a}))));
        // remark 1: reflection determines the upper half
        const auto w = theta_product(a, a, lam);
        for (size_t j = 1; j < n; ++j) bad += w[j] != gf::conj(gf::mul(lam, w[n - j]));
        // proposition 3: Theta criterion vs dense unitarity
        const CirculantSpec spec{ring, lam, a};
        bad += is_hermitian_unitary(spec, UnitaryTarget::MinusOne) !=
               dense_unitary(materialize(spec));
    }
    report(7, bad == 0, "lemma/remark identities, " + std::to_string(bad) + " failures");
}

// Criterion 8: Gray isometry on 10^5 vectors and image self-duality for
// every F4U table row.
void criterion_8() {
    std::mt19937 rng(107);
    int bad = 0;
    for (int it = 0; it < 100000; ++it) {
        const auto v = rand_vec(rng, RingId::F4U, 1 + rng() % 16);
        bad += lee_weight(v) != hamming_weight(gray_map(v));
    }
    int rows = 0;
    for (const std::string& id : {"26-3", "32-2", "40-2"}) {
        const FixtureTable& t = fixture(id);
        for (const auto& row : t.rows) {
            bad += !verify_hermitian_self_dual(gray_image(build_fixture_code(t, row)));
            ++rows;
        }
    }
    report(8, bad == 0, "10^5 isometry checks and " + std::to_string(rows) +
                            " Gray-image self-duality checks, " + std::to_string(bad) +
                            " failures");
}

// Criterion 9: the d(n) <= 2*floor(n/6)+2 bound and even weights. The
// bound is checked for every fixture row (d = claimed value, verified in
// criteria 2-5); parity is checked on two complete distributions.
void criterion_9() {
    bool ok = true;
    for (const auto& t : fixtures()) ok = ok && t.expected_d <= distance_bound(t.code_length);

    EnumOptions opt;
    opt.workers = hw();
    for (const std::string& id : {"26-1", "26-2"}) {
        const FixtureTable& t = fixture(id);
        const GeneratorMatrix g = build_fixture_code(t, t.rows[0]);
        const auto dist = weight_distribution_exhaustive(g, std::nullopt, opt);
        uint64_t total = 0;
        for (const auto& [w, c] : dist.counts) {
            ok = ok && (w == 0 || w % 2 == 0);
            total += c;
        }
        ok = ok && total == (uint64_t(1) << (2 * g.rank()));
        int d = 0;
        for (const auto& [w, c] : dist.counts)
            if (w > 0) {
                d = w;
                break;
            }
        ok = ok && d <= distance_bound(int(g.length()));
    }
    report(9, ok, "distance bound and even-weight property");
}

// Criterion 10: seeded search smoke at n = 6 over F4 within 10^7
// candidates, with byte-identical single-worker replay.
void criterion_10() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hsd_acceptance_search";
    fs::create_directories(dir);

    SearchConfig cfg;
    cfg.ctor = Construction::Thm1;
    cfg.ring = RingId::F4;
    cfg.n = 6;
    cfg.target_d = 8;
    cfg.budget = 10'000'000;
    cfg.seed = 2026;
    cfg.workers = 1;
    cfg.out = (dir / "run1.rec").string();
    cfg.cache_dir = dir.string();

    const auto records = run_search(cfg);
    bool ok = !records.empty();
    for (const auto& rec : records) {
        ok = ok && rec.d >= 8 && rec.n == 6;
        const GeneratorMatrix g = rebuild_record(rec);
        ok = ok && verify_hermitian_self_dual(g) && g.length() == 24;
    }

    cfg.out = (dir / "run2.rec").string();
    (void)run_search(cfg);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    };
    const std::string run1 = slurp(dir / "run1.rec"), run2 = slurp(dir / "run2.rec");
    ok = ok && !run1.empty() && run1 == run2;
    report(10, ok, std::to_string(records.size()) +
                       " [24,12,d>=8] records in 10^7 candidates, replay byte-identical");
    fs::remove_all(dir);
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0);
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria FAIL")
              << " (" << secs.count() << "s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
