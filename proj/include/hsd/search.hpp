#pragma once

// Randomized parameter search, unitary-circulant pre-enumeration, table
// verification, and the one-line record format shared with the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsd/codeops.hpp"
#include "hsd/matrix.hpp"
#include "hsd/ring.hpp"
#include "hsd/tables.hpp"

namespace hsd {

// One found code, rebuildable from its serialized parameters alone.
// For thm3, vectors[0] holds the border scalars (x1 x2 x3) and the block
// generators follow; lambda and mu are fixed to 1 in that case.
struct CodeRecord {
    Construction ctor = Construction::Thm1;
    RingId ring = RingId::F4;
    int n = 0;           // circulant block length
    int k = 1;           // block count
    uint8_t lambda = 1, mu = 1;
    std::vector<std::string> vectors;  // parenthesized hex, paper notation
    int d = 0;
    int64_t alpha = -1;
    uint64_t seed = 0;

    std::string serialize() const;
    static CodeRecord parse(const std::string& line);  // throws ParseError
};

// Rebuilds the generator matrix a record claims (round-trip integrity).
GeneratorMatrix rebuild_record(const CodeRecord& rec);

// All generating vectors c (per mu in U') with sigma_mu(c)*conj(.)^T = I.
struct UnitaryCirculantTable {
    RingId ring = RingId::F4;
    size_t n = 0;
    std::vector<std::pair<uint8_t, std::vector<std::vector<uint8_t>>>> per_mu;

    uint64_t total() const;
};

// Exhaustive over all |ring|^n generating vectors for every mu in U'.
// When cache_dir is nonempty the result is loaded from / saved to
// "<cache_dir>/unitary_<ring>_<n>.tbl".
UnitaryCirculantTable enumerate_unitary_circulants(RingId ring, size_t n,
                                                   const std::string& cache_dir = "");

struct SearchConfig {
    Construction ctor = Construction::Thm1;
    RingId ring = RingId::F4;
    int n = 0;
    int k = 2;                // thm2/thm3 block count
    int target_d = 0;
    uint64_t budget = 1'000'000;
    uint64_t seed = 0;
    std::vector<uint8_t> lambda_set;  // empty = full unitary set
    std::vector<uint8_t> mu_set;      // empty = full unitary set (thm2 only)
    std::string out;                  // record file, sorted at close
    std::string cache_dir;            // unitary table cache (thm1)
    int workers = 1;
    bool extended = false;            // allow alpha at dimensions 14..16
};

// Draws candidates from the seeded stream, rejects via the Theta condition
// checks, and emits records for survivors with d >= target_d. Single-worker
// runs are fully reproducible from the seed.
std::vector<CodeRecord> run_search(const SearchConfig& cfg);

// One record per (code length, ring, d, alpha), first occurrence kept.
std::vector<CodeRecord> dedupe_records(const std::vector<CodeRecord>& records);

struct VerifyOptions {
    bool extended = false;
    int workers = 1;
    uint64_t budget = uint64_t(1) << 28;
    size_t max_rows = 0;  // 0 = all rows
};

struct RowReport {
    int index = 0;
    bool pass = false;
    int d = -1;               // -1 when not determined
    int64_t alpha = -1;       // -1 when not computed
    std::string note;
};

struct TableReport {
    std::string id;
    size_t rows_checked = 0, rows_passed = 0;
    std::vector<RowReport> rows;

    bool all_pass() const { return rows_checked > 0 && rows_passed == rows_checked; }
    std::string to_string() const;
};

// Rebuilds each fixture row and checks: self-duality (ring level and Gray
// image for F4U), claimed d, the d(n) bound, and, where enumeration fits
// the budget, alpha plus the W_n second-coefficient identity.
TableReport verify_table(const std::string& id, const VerifyOptions& opt = {});

}  // namespace hsd
