#include "hsd/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "hsd/constructions.hpp"
#include "hsd/graymap.hpp"
#include "hsd/vec.hpp"

namespace hsd {

namespace {

bool has_enumerator(int length) {
    return length == 26 || length == 32 || length == 36 || length == 38 || length == 40;
}

std::string field(const std::string& line, const std::string& key) {
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok.size() > key.size() && tok.compare(0, key.size(), key) == 0 &&
            tok[key.size()] == '=')
            return tok.substr(key.size() + 1);
    }
    throw ParseError("record missing field '" + key + "': " + line);
}

}  // namespace

std::string CodeRecord::serialize() const {
    std::ostringstream out;
    out << "construction=" << construction_name(ctor) << " ring=" << ring_name(ring)
        << " n=" << n << " k=" << k << " lambda=" << hex_encode(ring, lambda)
        << " mu=" << hex_encode(ring, mu) << " vectors=";
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (i) out << ",";
        out << vectors[i];
    }
    out << " d=" << d << " alpha=" << alpha << " seed=" << seed;
    return out.str();
}

CodeRecord CodeRecord::parse(const std::string& line) {
    CodeRecord rec;
    rec.ctor = construction_from_name(field(line, "construction"));
    rec.ring = ring_from_name(field(line, "ring"));
    rec.n = std::stoi(field(line, "n"));
    rec.k = std::stoi(field(line, "k"));
    rec.lambda = hex_decode(rec.ring, field(line, "lambda")[0]);
    rec.mu = hex_decode(rec.ring, field(line, "mu")[0]);
    std::istringstream vs(field(line, "vectors"));
    std::string v;
    while (std::getline(vs, v, ','))
        if (!v.empty()) rec.vectors.push_back(v);
    rec.d = std::stoi(field(line, "d"));
    rec.alpha = std::stoll(field(line, "alpha"));
    rec.seed = std::stoull(field(line, "seed"));
    return rec;
}

GeneratorMatrix rebuild_record(const CodeRecord& rec) {
    switch (rec.ctor) {
        case Construction::Thm1: {
            Theorem1Params p;
            p.ring = rec.ring;
            p.lambda = rec.lambda;
            p.mu = rec.mu;
            p.a = parse_vec(rec.ring, rec.vectors.at(0)).v;
            p.b = parse_vec(rec.ring, rec.vectors.at(1)).v;
            p.c = parse_vec(rec.ring, rec.vectors.at(2)).v;
            return thm1_build(p);
        }
        case Construction::Thm2: {
            Theorem2Params p;
            p.ring = rec.ring;
            p.lambda = rec.lambda;
            p.mu = rec.mu;
            for (const auto& v : rec.vectors) p.a_blocks.push_back(parse_vec(rec.ring, v).v);
            return thm2_build(p);
        }
        case Construction::Thm3: {
            Theorem3Params p;
            p.ring = rec.ring;
            const auto border = parse_vec(rec.ring, rec.vectors.at(0)).v;
            if (border.size() != 3) throw ParseError("thm3 record needs (x1 x2 x3)");
            p.x1 = border[0];
            p.x2 = border[1];
            p.x3 = border[2];
            for (size_t i = 1; i < rec.vectors.size(); ++i)
                p.a_blocks.push_back(parse_vec(rec.ring, rec.vectors[i]).v);
            return thm3_build(p);
        }
        case Construction::BuildingUp:
            throw ConfigInvalid("building_up records are not rebuildable without a parent code");
    }
    throw ParseError("bad construction tag");
}

uint64_t UnitaryCirculantTable::total() const {
    uint64_t t = 0;
    for (const auto& [mu, vecs] : per_mu) t += vecs.size();
    return t;
}

namespace {

std::string cache_path(const std::string& dir, RingId ring, size_t n) {
    return dir + "/unitary_" + ring_name(ring) + "_" + std::to_string(n) + ".tbl";
}

std::optional<UnitaryCirculantTable> load_table(const std::string& path, RingId ring, size_t n) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string magic, version, rname;
    size_t file_n = 0;
    uint64_t total = 0;
    if (!(in >> magic >> version >> rname >> file_n >> total)) return std::nullopt;
    if (magic != "hsd-unitary-table" || version != "v1" || rname != ring_name(ring) ||
        file_n != n)
        return std::nullopt;
    UnitaryCirculantTable t{ring, n, {}};
    std::string mu_s, vec_s;
    while (in >> mu_s >> vec_s) {
        const uint8_t mu = hex_decode(ring, mu_s[0]);
        if (t.per_mu.empty() || t.per_mu.back().first != mu) t.per_mu.push_back({mu, {}});
        t.per_mu.back().second.push_back(parse_vec(ring, vec_s).v);
    }
    if (t.total() != total) return std::nullopt;
    return t;
}

void save_table(const std::string& path, const UnitaryCirculantTable& t) {
    std::ofstream out(path);
    out << "hsd-unitary-table v1 " << ring_name(t.ring) << " " << t.n << " " << t.total()
        << "\n";
    for (const auto& [mu, vecs] : t.per_mu)
        for (const auto& v : vecs)
            out << hex_encode(t.ring, mu) << " " << format_vec({t.ring, v}) << "\n";
}

}  // namespace

UnitaryCirculantTable enumerate_unitary_circulants(RingId ring, size_t n,
                                                   const std::string& cache_dir) {
    if (n == 0) throw ConfigInvalid("n must be positive");
    const int q = ring_size(ring);
    double space = 1;
    for (size_t i = 0; i < n; ++i) space *= q;
    if (space > double(uint64_t(1) << 28)) throw BudgetExceeded("|ring|^n unitary enumeration");

    if (!cache_dir.empty())
        if (auto cached = load_table(cache_path(cache_dir, ring, n), ring, n)) return *cached;

    UnitaryCirculantTable t{ring, n, {}};
    for (uint8_t mu : unitary_elements(ring)) t.per_mu.push_back({mu, {}});

    std::vector<uint8_t> gen(n, 0);
    const uint64_t count = uint64_t(space);
    for (uint64_t idx = 0; idx < count; ++idx) {
        uint64_t x = idx;
        for (size_t i = 0; i < n; ++i) {
            gen[i] = uint8_t(x % uint64_t(q));
            x /= uint64_t(q);
        }
        for (auto& [mu, vecs] : t.per_mu)
            if (is_hermitian_unitary({ring, mu, gen})) vecs.push_back(gen);
    }

    if (!cache_dir.empty()) save_table(cache_path(cache_dir, ring, n), t);
    return t;
}

namespace {

struct Draw {
    std::mt19937_64 rng;
    RingId ring;

    uint8_t symbol() { return uint8_t(rng() % uint64_t(ring_size(ring))); }
    std::vector<uint8_t> vec(size_t n) {
        std::vector<uint8_t> v(n);
        for (auto& x : v) x = symbol();
        return v;
    }
    template <class T>
    const T& pick(const std::vector<T>& set) {
        return set[size_t(rng() % uint64_t(set.size()))];
    }
};

void validate(const SearchConfig& cfg) {
    if (cfg.n < 1) throw ConfigInvalid("n must be positive");
    if (cfg.budget < 1) throw ConfigInvalid("budget must be positive");
    if (cfg.workers < 1) throw ConfigInvalid("workers must be positive");
    if (cfg.target_d < 0) throw ConfigInvalid("target d must be nonnegative");
    if (cfg.ctor == Construction::BuildingUp)
        throw ConfigInvalid(
            "building_up search needs a parent code, which the record format cannot carry");
    if ((cfg.ctor == Construction::Thm2 || cfg.ctor == Construction::Thm3) && cfg.k < 1)
        throw ConfigInvalid("k must be positive");
    for (uint8_t x : cfg.lambda_set)
        if (!gf::is_unitary(x)) throw ConfigInvalid("lambda restriction set contains non-unitary");
    for (uint8_t x : cfg.mu_set)
        if (!gf::is_unitary(x)) throw ConfigInvalid("mu restriction set contains non-unitary");
}

// Exact d and alpha for one surviving candidate; alpha only when the code
// length has a W_n enumerator and the dimension fits the exhaustive budget.
CodeRecord finish_record(const SearchConfig& cfg, GeneratorMatrix g, CodeRecord rec) {
    const GeneratorMatrix img = g.ring() == RingId::F4U ? gray_image(g) : g;
    rec.d = min_distance(img, DistanceMethod::InfoSet);
    const int len = int(img.length());
    const size_t kf4 = img.rank();
    if (has_enumerator(len) && (kf4 <= 13 || (cfg.extended && kf4 <= 16))) {
        EnumOptions eo;
        eo.budget = std::max<uint64_t>(eo.budget, uint64_t(1) << (2 * kf4));
        eo.workers = 1;
        rec.alpha = alpha_of(img, std::nullopt, eo);
    }
    rec.seed = cfg.seed;
    return rec;
}

std::vector<CodeRecord> search_worker(const SearchConfig& cfg, int worker, uint64_t candidates,
                                      const UnitaryCirculantTable* ctab) {
    std::seed_seq ss{cfg.seed, uint64_t(worker)};
    Draw draw{std::mt19937_64(ss), cfg.ring};
    const std::vector<uint8_t> lambdas =
        cfg.lambda_set.empty() ? unitary_elements(cfg.ring) : cfg.lambda_set;
    const std::vector<uint8_t> mus = cfg.mu_set.empty() ? unitary_elements(cfg.ring) : cfg.mu_set;
    std::vector<std::pair<uint8_t, const std::vector<uint8_t>*>> flat_c;
    if (ctab)
        for (const auto& [mu, vecs] : ctab->per_mu)
            for (const auto& v : vecs) flat_c.push_back({mu, &v});

    std::vector<CodeRecord> found;
    const size_t n = size_t(cfg.n);
    for (uint64_t i = 0; i < candidates; ++i) {
        switch (cfg.ctor) {
            case Construction::Thm1: {
                Theorem1Params p;
                p.ring = cfg.ring;
                p.lambda = draw.pick(lambdas);
                const auto& [mu, c] = draw.pick(flat_c);
                p.mu = mu;
                p.c = *c;
                p.a = draw.vec(n);
                p.b = draw.vec(n);
                if (!thm1_conditions(p)) break;
                GeneratorMatrix g = thm1_build(p);
                if (cfg.target_d > 0 && !distance_at_least(g, cfg.target_d)) break;
                CodeRecord rec{Construction::Thm1, cfg.ring, cfg.n, 1, p.lambda, p.mu,
                               {format_vec({cfg.ring, p.a}), format_vec({cfg.ring, p.b}),
                                format_vec({cfg.ring, p.c})}};
                rec = finish_record(cfg, std::move(g), std::move(rec));
                if (rec.d >= cfg.target_d) found.push_back(std::move(rec));
                break;
            }
            case Construction::Thm2: {
                Theorem2Params p;
                p.ring = cfg.ring;
                p.lambda = draw.pick(lambdas);
                p.mu = draw.pick(mus);
                for (int b = 0; b < cfg.k; ++b) p.a_blocks.push_back(draw.vec(n));
                if (!thm2_conditions(p)) break;
                GeneratorMatrix g = thm2_build(p);
                if (cfg.target_d > 0 && !distance_at_least(g, cfg.target_d)) break;
                CodeRecord rec{Construction::Thm2, cfg.ring, cfg.n, cfg.k, p.lambda, p.mu, {}};
                for (const auto& a : p.a_blocks) rec.vectors.push_back(format_vec({cfg.ring, a}));
                rec = finish_record(cfg, std::move(g), std::move(rec));
                if (rec.d >= cfg.target_d) found.push_back(std::move(rec));
                break;
            }
            case Construction::Thm3: {
                Theorem3Params p;
                p.ring = cfg.ring;
                p.x1 = draw.symbol();
                p.x2 = draw.symbol();
                p.x3 = draw.symbol();
                for (int b = 0; b < cfg.k; ++b) p.a_blocks.push_back(draw.vec(n));
                if (!thm3_conditions(p)) break;
                GeneratorMatrix g = thm3_build(p);
                if (cfg.target_d > 0 && !distance_at_least(g, cfg.target_d)) break;
                CodeRecord rec{Construction::Thm3, cfg.ring, cfg.n, cfg.k, 1, 1,
                               {format_vec({cfg.ring, {p.x1, p.x2, p.x3}})}};
                for (const auto& a : p.a_blocks) rec.vectors.push_back(format_vec({cfg.ring, a}));
                rec = finish_record(cfg, std::move(g), std::move(rec));
                if (rec.d >= cfg.target_d) found.push_back(std::move(rec));
                break;
            }
            case Construction::BuildingUp:
                break;  // rejected by validate()
        }
    }
    return found;
}

}  // namespace

std::vector<CodeRecord> run_search(const SearchConfig& cfg) {
    validate(cfg);
    std::optional<UnitaryCirculantTable> ctab;
    if (cfg.ctor == Construction::Thm1) {
        ctab = enumerate_unitary_circulants(cfg.ring, size_t(cfg.n), cfg.cache_dir);
        if (!cfg.mu_set.empty()) {
            std::erase_if(ctab->per_mu, [&](const auto& pm) {
                return std::find(cfg.mu_set.begin(), cfg.mu_set.end(), pm.first) ==
                       cfg.mu_set.end();
            });
        }
        if (ctab->total() == 0) throw ConfigInvalid("empty unitary circulant table");
    }

    std::vector<std::vector<CodeRecord>> per_worker(size_t(cfg.workers));
    auto run = [&](int w) {
        const uint64_t share =
            cfg.budget / uint64_t(cfg.workers) + (uint64_t(w) < cfg.budget % uint64_t(cfg.workers));
        per_worker[size_t(w)] = search_worker(cfg, w, share, ctab ? &*ctab : nullptr);
    };
    if (cfg.workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::vector<CodeRecord> all;
    for (auto& v : per_worker)
        for (auto& rec : v) all.push_back(std::move(rec));

    if (!cfg.out.empty()) {
        std::vector<std::string> lines;
        lines.reserve(all.size());
        for (const auto& rec : all) lines.push_back(rec.serialize());
        std::sort(lines.begin(), lines.end(), [&](const std::string& x, const std::string& y) {
            const int64_t ax = CodeRecord::parse(x).alpha, ay = CodeRecord::parse(y).alpha;
            return ax != ay ? ax < ay : x < y;
        });
        std::ofstream out(cfg.out);
        for (const auto& l : lines) out << l << "\n";
    }
    return all;
}

std::vector<CodeRecord> dedupe_records(const std::vector<CodeRecord>& records) {
    std::vector<CodeRecord> kept;
    auto key_seen = [&](const CodeRecord& r) {
        for (const auto& k : kept)
            if (k.ring == r.ring && k.n == r.n && k.k == r.k && k.ctor == r.ctor &&
                k.d == r.d && k.alpha == r.alpha)
                return true;
        return false;
    };
    for (const auto& r : records)
        if (!key_seen(r)) kept.push_back(r);
    return kept;
}

TableReport verify_table(const std::string& id, const VerifyOptions& opt) {
    const FixtureTable& t = fixture(id);
    if (fixture_fnv(t) != t.checksum) throw UnknownFixture(id + " (checksum mismatch)");
    TableReport report;
    report.id = id;
    const size_t nrows =
        opt.max_rows ? std::min(opt.max_rows, t.rows.size()) : t.rows.size();

    for (size_t r = 0; r < nrows; ++r) {
        const FixtureRow& row = t.rows[r];
        RowReport rr;
        rr.index = row.index;
        try {
            GeneratorMatrix g = build_fixture_code(t, row);
            if (!verify_hermitian_self_dual(g)) throw Error("not self-dual over its ring");
            const GeneratorMatrix img = g.ring() == RingId::F4U ? gray_image(g) : std::move(g);
            if (int(img.length()) != t.code_length || img.rank() != size_t(t.code_length) / 2)
                throw Error("unexpected dimensions");
            if (t.ring == RingId::F4U && !verify_hermitian_self_dual(img))
                throw Error("Gray image not self-dual");

            const int len = int(img.length());
            const size_t kf4 = img.rank();
            const bool want_alpha =
                has_enumerator(len) && (kf4 <= 13 || (opt.extended && kf4 <= 16));
            EnumOptions eo;
            eo.budget = std::max(opt.budget, uint64_t(1) << (2 * std::min<size_t>(kf4, 16)));
            eo.workers = opt.workers;

            if (want_alpha) {
                const int wstar = alpha_weight_for_length(len);
                const auto dist = weight_distribution_exhaustive(img, wstar + 2, eo);
                for (const auto& [w, c] : dist.counts) {
                    if (w == 0) continue;
                    if (w % 2 != 0) throw Error("odd-weight codeword found");
                    if (rr.d < 0) rr.d = w;
                }
                const auto a_it = dist.counts.find(wstar);
                rr.alpha = a_it == dist.counts.end() ? 0 : int64_t(a_it->second);
                const auto s_it = dist.counts.find(wstar + 2);
                const int64_t second = s_it == dist.counts.end() ? 0 : int64_t(s_it->second);
                if (second != second_coefficient(len, rr.alpha))
                    throw Error("second-coefficient identity violated");
                if (row.alpha >= 0 && rr.alpha != row.alpha)
                    throw Error("alpha=" + std::to_string(rr.alpha) + " expected " +
                                std::to_string(row.alpha));
            } else {
                rr.d = kf4 <= 12 ? min_distance(img, DistanceMethod::Exhaustive, eo)
                                 : min_distance(img, DistanceMethod::InfoSet);
            }
            if (rr.d != t.expected_d)
                throw Error("d=" + std::to_string(rr.d) + " expected " +
                            std::to_string(t.expected_d));
            if (rr.d > distance_bound(len)) throw Error("d exceeds 2*floor(n/6)+2");
            rr.pass = true;
        } catch (const Error& e) {
            rr.note = e.what();
        }
        report.rows_checked += 1;
        report.rows_passed += rr.pass ? 1 : 0;
        report.rows.push_back(std::move(rr));
    }
    return report;
}

std::string TableReport::to_string() const {
    std::ostringstream out;
    for (const auto& rr : rows) {
        out << "row " << rr.index << ": " << (rr.pass ? "pass" : "FAIL");
        if (rr.d >= 0) out << " d=" << rr.d;
        if (rr.alpha >= 0) out << " alpha=" << rr.alpha;
        if (!rr.note.empty()) out << " (" << rr.note << ")";
        out << "\n";
    }
    out << rows_passed << "/" << rows_checked << " rows pass\n";
    return out.str();
}

}  // namespace hsd
