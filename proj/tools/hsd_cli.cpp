// Command-line front end: verification of the shipped tables, randomized
// search, and one-off weight/distance/gray computations.
//
// Exit codes: 0 success / all pass, 1 verification failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsd/codeops.hpp"
#include "hsd/constructions.hpp"
#include "hsd/graymap.hpp"
#include "hsd/search.hpp"
#include "hsd/tables.hpp"
#include "hsd/vec.hpp"

namespace {

struct CodeArgs {
    std::string construction = "thm1";
    std::string ring = "f4";
    std::string lambda = "1", mu = "1";
    std::vector<std::string> vectors;
};

void add_code_args(CLI::App* cmd, CodeArgs& args) {
    cmd->add_option("--construction", args.construction, "thm1, thm2 or thm3")
        ->check(CLI::IsMember({"thm1", "thm2", "thm3"}));
    cmd->add_option("--ring", args.ring, "f4 or f4u")->check(CLI::IsMember({"f4", "f4u"}));
    cmd->add_option("--lambda", args.lambda, "lambda as one hex symbol");
    cmd->add_option("--mu", args.mu, "mu as one hex symbol");
    cmd->add_option("--vec", args.vectors,
                    "generating vectors, paper notation, e.g. (000333); thm1 expects a, b, c; "
                    "thm3 expects (x1 x2 x3) then the blocks")
        ->required();
}

hsd::GeneratorMatrix build_code(const CodeArgs& args) {
    hsd::CodeRecord rec;
    rec.ctor = hsd::construction_from_name(args.construction);
    rec.ring = hsd::ring_from_name(args.ring);
    rec.lambda = hsd::hex_decode(rec.ring, args.lambda.at(0));
    rec.mu = hsd::hex_decode(rec.ring, args.mu.at(0));
    rec.vectors = args.vectors;
    return hsd::rebuild_record(rec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermitian self-dual codes over GF(4) and GF(4)+uGF(4): "
                 "circulant constructions, verification and search"};
    app.require_subcommand(1);

    // verify-table
    std::string table_id;
    bool extended = false;
    int workers = 1;
    uint64_t budget = uint64_t(1) << 28;
    std::size_t max_rows = 0;
    auto* verify = app.add_subcommand("verify-table", "re-check a shipped code table");
    verify->add_option("--id", table_id, "table id, e.g. 26-1")->required();
    verify->add_flag("--extended", extended, "enable hours-scale alpha checks");
    verify->add_option("--workers", workers);
    verify->add_option("--budget", budget, "max messages for exhaustive enumeration");
    verify->add_option("--max-rows", max_rows, "check only the first N rows");

    // search
    hsd::SearchConfig cfg;
    std::string s_ctor = "thm1", s_ring = "f4";
    auto* search = app.add_subcommand("search", "randomized parameter search");
    search->add_option("--construction", s_ctor)->check(CLI::IsMember({"thm1", "thm2", "thm3"}));
    search->add_option("--ring", s_ring)->check(CLI::IsMember({"f4", "f4u"}));
    search->add_option("--n", cfg.n, "circulant block length")->required();
    search->add_option("--k", cfg.k, "block count (thm2/thm3)");
    search->add_option("--target-d", cfg.target_d)->required();
    search->add_option("--budget", cfg.budget, "candidate budget");
    search->add_option("--seed", cfg.seed);
    search->add_option("--workers", cfg.workers);
    search->add_option("--out", cfg.out, "record file (sorted by alpha at close)");
    search->add_option("--cache-dir", cfg.cache_dir, "unitary table cache directory");
    search->add_flag("--extended", cfg.extended);

    // wdist
    CodeArgs w_args;
    int w_cutoff = -1;
    auto* wdist = app.add_subcommand("wdist", "weight distribution of a built code");
    add_code_args(wdist, w_args);
    wdist->add_option("--cutoff", w_cutoff, "record weights <= cutoff only");
    wdist->add_option("--workers", workers);
    wdist->add_option("--budget", budget);

    // mindist
    CodeArgs m_args;
    std::string method = "info_set";
    auto* mindist = app.add_subcommand("mindist", "minimum distance of a built code");
    add_code_args(mindist, m_args);
    mindist->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "info_set"}));
    mindist->add_option("--workers", workers);
    mindist->add_option("--budget", budget);

    // gray
    std::string gray_in;
    auto* gray = app.add_subcommand("gray", "Gray image of one vector over f4u");
    gray->add_option("--in", gray_in, "vector, e.g. (5B6)")->required();

    // unitary-count
    std::string u_ring = "f4";
    int u_n = 0;
    std::string u_cache;
    auto* ucount = app.add_subcommand("unitary-count", "count unitary circulant matrices");
    ucount->add_option("--ring", u_ring)->check(CLI::IsMember({"f4", "f4u"}));
    ucount->add_option("--n", u_n)->required();
    ucount->add_option("--cache-dir", u_cache);

    // check-params
    CodeArgs c_args;
    auto* check = app.add_subcommand("check-params", "run the construction condition check only");
    add_code_args(check, c_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            hsd::VerifyOptions opt{extended, workers, budget, max_rows};
            const hsd::TableReport report = hsd::verify_table(table_id, opt);
            std::cout << "table " << report.id << "\n" << report.to_string();
            return report.all_pass() ? 0 : 1;
        }
        if (*search) {
            cfg.ctor = hsd::construction_from_name(s_ctor);
            cfg.ring = hsd::ring_from_name(s_ring);
            const auto records = hsd::run_search(cfg);
            for (const auto& rec : records) std::cout << rec.serialize() << "\n";
            std::cerr << records.size() << " record(s) found\n";
            return 0;
        }
        if (*wdist) {
            const auto g = build_code(w_args);
            hsd::EnumOptions eo{budget, workers};
            const auto dist = hsd::weight_distribution_exhaustive(
                g, w_cutoff >= 0 ? std::optional<int>(w_cutoff) : std::nullopt, eo);
            std::cout << dist.to_string() << "\n";
            return 0;
        }
        if (*mindist) {
            const auto g = build_code(m_args);
            hsd::EnumOptions eo{budget, workers};
            const int d = hsd::min_distance(g,
                                            method == "exhaustive"
                                                ? hsd::DistanceMethod::Exhaustive
                                                : hsd::DistanceMethod::InfoSet,
                                            eo);
            std::cout << d << "\n";
            return 0;
        }
        if (*gray) {
            const auto v = hsd::parse_vec(hsd::RingId::F4U, gray_in);
            std::cout << hsd::format_vec({hsd::RingId::F4, hsd::gray_map(v.v)}) << "\n";
            return 0;
        }
        if (*ucount) {
            const auto t = hsd::enumerate_unitary_circulants(hsd::ring_from_name(u_ring),
                                                             std::size_t(u_n), u_cache);
            std::cout << t.total() << "\n";
            return 0;
        }
        if (*check) {
            bool ok = false;
            try {
                (void)build_code(c_args);
                ok = true;
            } catch (const hsd::ConditionsNotMet&) {
                ok = false;
            }
            std::cout << (ok ? "conditions met" : "conditions not met") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const hsd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
