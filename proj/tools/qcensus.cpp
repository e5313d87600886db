// Command-line front end: conjugacy-class and real-class censuses of the
// finite quotients U_1/U_k of the Sylow pro-2 subgroup of PGL_1(D), where D is
// the degree-9 division algebra over the 2-adic numbers, plus the verification
// suites for the algebra and group structure behind them.
//
//   qcensus census --k 7..10 --format json
//   qcensus verify --suite claims-s8
//   qcensus export --k 7 --cache-dir /tmp/qc
//
// Exit codes: 0 success, 1 invariant/check failure, 2 usage error,
// 3 feasibility refusal.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qcensus/census.hpp"
#include "qcensus/report.hpp"
#include "qcensus/sampling.hpp"

using namespace qcensus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct Options {
    std::string k_spec;
    int r_param = 1;
    std::string mode = "exhaustive";
    int workers = 0;  // 0: pick from hardware
    std::string format = "text";
    std::string cache_dir;
    std::string suite;
    std::uint64_t seed = 12345;
};

int effective_workers(const Options& o) {
    if (o.workers > 0) return o.workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<int> parse_k_range(const std::string& spec) {
    auto dots = spec.find("..");
    std::vector<int> ks;
    if (dots == std::string::npos) {
        ks.push_back(std::stoi(spec));
    } else {
        int lo = std::stoi(spec.substr(0, dots));
        int hi = std::stoi(spec.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty k range");
        for (int k = lo; k <= hi; ++k) ks.push_back(k);
    }
    return ks;
}

std::filesystem::path cache_directory(const Options& o) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    if (const char* env = std::getenv("QCENSUS_CACHE_DIR")) return env;
    return {};
}

void emit_report(const CensusReport& rep, const std::string& format, bool first) {
    if (format == "json") {
        std::cout << report_to_json(rep).dump() << "\n";
    } else if (format == "csv") {
        if (first) std::cout << csv_header() << "\n";
        std::cout << report_to_csv_row(rep) << "\n";
    } else {
        std::cout << report_to_text(rep);
    }
}

CensusReport census_with_cache(const QuotientContext& ctx, CensusMode mode, int workers,
                               const std::filesystem::path& dir, bool write_back) {
    if (mode == CensusMode::Fast || dir.empty()) return full_census(ctx, mode, workers);
    auto path = dir / cache_file_name(ctx);
    std::string why;
    if (auto ids = read_cache(path, ctx, &why)) return report_from_class_ids(ctx, *ids);
    if (std::filesystem::exists(path))
        std::cerr << "warning: ignoring cache " << path.string() << " (" << why
                  << "), recomputing\n";
    ClassPartition part;
    CensusReport rep = full_census_exhaustive(ctx, workers, &part);
    if (write_back) {
        std::filesystem::create_directories(dir);
        if (!write_cache(path, ctx, part.class_id))
            std::cerr << "warning: could not write cache " << path.string() << "\n";
    }
    return rep;
}

int cmd_census(const Options& o) {
    std::vector<int> ks = parse_k_range(o.k_spec);
    for (int k : ks) {
        if (k < 4) throw CLI::ValidationError("--k", "census supports k >= 4");
        if (o.mode == "exhaustive" && k > 10)
            throw InfeasibleError("exhaustive mode supports k <= 10; class table would need " +
                                      std::to_string((4ull << QuotientContext(k).bits()) >> 20) +
                                      " MiB",
                                  0);
        if (o.mode == "fast" && k < 8)
            throw CLI::ValidationError("--mode", "fast mode requires k >= 8");
    }
    CensusMode mode = o.mode == "fast" ? CensusMode::Fast : CensusMode::Exhaustive;
    auto dir = cache_directory(o);
    bool first = true;
    for (int k : ks) {
        QuotientContext ctx(k, o.r_param);
        CensusReport rep = census_with_cache(ctx, mode, effective_workers(o), dir, !dir.empty());
        emit_report(rep, o.format, first);
        first = false;
    }
    return kExitOk;
}

int cmd_export(const Options& o) {
    auto dir = cache_directory(o);
    if (dir.empty())
        throw CLI::ValidationError("--cache-dir", "export needs a cache directory (flag or "
                                                  "QCENSUS_CACHE_DIR)");
    for (int k : parse_k_range(o.k_spec)) {
        if (k < 4 || k > 10)
            throw CLI::ValidationError("--k", "export supports exhaustive censuses, k = 4..10");
        QuotientContext ctx(k, o.r_param);
        auto path = dir / cache_file_name(ctx);
        std::string why;
        if (auto ids = read_cache(path, ctx, &why)) {
            std::cout << "cache up to date: " << path.string() << "\n";
            continue;
        }
        ClassPartition part;
        full_census_exhaustive(ctx, effective_workers(o), &part);
        std::filesystem::create_directories(dir);
        if (!write_cache(path, ctx, part.class_id))
            throw std::runtime_error("cannot write " + path.string());
        std::cout << "wrote " << path.string() << " (" << part.class_id.size() << " entries)\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

void print_items(const std::vector<CheckItem>& items, int& failures) {
    for (const auto& it : items) {
        std::cout << (it.pass ? "PASS  " : "FAIL  ") << it.name;
        if (!it.details.empty()) std::cout << " (" << it.details << ")";
        std::cout << "\n";
        if (!it.pass) ++failures;
    }
}

CheckReport suite_oracle_f8() {
    CheckReport rep;
    for (int i = 1; i <= 9; ++i) {
        bool bij = f8_power_map_bijective(i);
        rep.add("power-map-bijective-i" + std::to_string(i), bij == (i % 3 != 0),
                std::string("b -> b^(2^(2i)-1) on F8* is ") + (bij ? "bijective" : "degenerate"));
    }
    for (int i = 1; i <= 9; ++i)
        rep.add("artin-schreier-unsolvable-i" + std::to_string(i),
                !f8_artin_schreier_solvable(i), "b^(2^(2i)) - b = 1 has no root in F8");
    return rep;
}

CheckReport suite_algebra(std::uint64_t seed) {
    CheckReport rep;
    AlgebraConfig cfg = AlgebraConfig::make(1, 6);
    std::mt19937_64 rng(seed);
    int fail_norm = 0, fail_trace = 0, fail_bracket = 0, fail_assoc = 0;
    for (int t = 0; t < 1000; ++t) {
        DElem x = sample_d(rng, cfg), y = sample_d(rng, cfg), z = sample_d(rng, cfg);
        if ((x * y).reduced_norm() != x.reduced_norm() * y.reduced_norm()) ++fail_norm;
        if ((x * y).reduced_trace() != (y * x).reduced_trace()) ++fail_trace;
        if (!lie_bracket(x, y).reduced_trace().is_zero()) ++fail_bracket;
        if ((x * y) * z != x * (y * z)) ++fail_assoc;
    }
    rep.add("nrd-multiplicative", fail_norm == 0, "1000 samples, precision 6");
    rep.add("trd-symmetric", fail_trace == 0, "trd(xy) = trd(yx), 1000 samples");
    rep.add("bracket-trace-zero", fail_bracket == 0, "trd([x,y]) = 0, 1000 samples");
    rep.add("mul-associative", fail_assoc == 0, "1000 sample triples");
    rep.add("nrd-pi-is-2", DElem::pi(cfg).reduced_norm().value() == 2,
            "determinant of the regular representation of pi");
    rep.add("trd-pi-is-0", DElem::pi(cfg).reduced_trace().is_zero(),
            "trace of the regular representation of pi");
    return rep;
}

CheckReport suite_prop_pgl1d(int workers) {
    CheckReport rep;
    for (int k = 4; k <= 8; ++k) {
        QuotientContext ctx(k);
        CheckReport sub = ctx.structure_checks(workers);
        for (auto& it : sub.items) {
            it.name = "k" + std::to_string(k) + "-" + it.name;
            rep.items.push_back(std::move(it));
        }
    }
    return rep;
}

CheckReport suite_claims_s8(std::uint64_t seed, int workers) {
    CheckReport rep;
    {
        QuotientContext ctx(7);
        std::mt19937_64 rng(seed);
        int done = 0;
        while (done < 5) {
            CosetElement x{rng() & (ctx.order() - 1)};
            if (ctx.layer_of(x) != 1) continue;
            rep.items.push_back(centralizer_transfer_check(ctx, x, 3));
            rep.items.push_back(centralizer_transfer_check(ctx, x, 5));
            ++done;
        }

        ClassPartition part =
            conjugacy_partition(ctx, ctx.enumerate_subquotient(4), ctx.generators());
        RealCountSummary rc = real_class_count(ctx, part);
        rep.add("subquotient-25-classes", rc.total_classes == 25 && rc.real_classes == 25,
                std::to_string(rc.total_classes) + " classes, all real");
        rep.add("subquotient-breakdown-14-7-4",
                rc.real_by_layer[4] == 14 && rc.real_by_layer[5] == 7 &&
                    rc.real_by_layer[6] + rc.real_by_layer[7] == 4,
                "by layer: 14 / 7 / 4");
        bool idx_ok = true;
        for (std::size_t c = 0; c < part.num_classes(); ++c) {
            CosetElement x{part.reps[c]};
            int layer = ctx.layer_of(x);
            if (layer == 4 && centralizer_product_index(ctx, x, 3) != 16) idx_ok = false;
            if (layer == 5 && centralizer_product_index(ctx, x, 2) != 4) idx_ok = false;
        }
        rep.add("centralizer-indices-2^4-2^2", idx_ok,
                "|U_1 : C(x)U_3| = 16 on the 14, |U_1 : C(x)U_2| = 4 on the 7");
    }
    for (int k : {10, 11}) {
        QuotientContext ctx(k);
        Order4ScanResult res = order4_real_scan(ctx, workers);
        rep.add("no-real-order-4-k" + std::to_string(k), res.real_class_reps.empty(),
                std::to_string(res.candidate_count) + " order-4 elements, none real");
    }
    return rep;
}

CheckReport suite_parity_s2(int workers) {
    CheckReport rep = real_monotonicity_check(1, 4, 7, workers);
    QuotientContext ctx(5);
    CheckReport sub = parity_and_bound_checks(ctx);
    for (auto& it : sub.items) rep.items.push_back(std::move(it));
    return rep;
}

int cmd_verify(const Options& o) {
    CheckReport rep;
    int workers = effective_workers(o);
    if (o.suite == "oracle-f8")
        rep = suite_oracle_f8();
    else if (o.suite == "algebra")
        rep = suite_algebra(o.seed);
    else if (o.suite == "prop-pgl1d")
        rep = suite_prop_pgl1d(workers);
    else if (o.suite == "claims-s8")
        rep = suite_claims_s8(o.seed, workers);
    else if (o.suite == "parity-s2")
        rep = suite_parity_s2(workers);
    else
        throw CLI::ValidationError("--suite", "unknown suite '" + o.suite + "'");

    int failures = 0;
    print_items(rep.items, failures);
    std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
              << " (" << rep.items.size() << " total)\n";
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"censuses of the finite 2-group quotients of the unit filtration of the "
                 "degree-9 division algebra over Q_2"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_k) {
        auto* kopt = sub->add_option("--k", o.k_spec, "modulus depth k or range lo..hi");
        if (needs_k) kopt->required();
        sub->add_option("--r-param", o.r_param, "twist parameter (1 or 2)")
            ->check(CLI::IsMember({1, 2}));
        sub->add_option("--workers", o.workers, "worker threads (default: hardware)");
        sub->add_option("--cache-dir", o.cache_dir, "partition cache directory");
        sub->add_option("--seed", o.seed, "seed for property sampling");
        return sub;
    };

    CLI::App* census = add_common(app.add_subcommand("census", "run class censuses"), true);
    census->add_option("--mode", o.mode, "exhaustive or fast")
        ->check(CLI::IsMember({"exhaustive", "fast"}));
    census->add_option("--format", o.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    CLI::App* verify = add_common(app.add_subcommand("verify", "run a verification suite"), false);
    verify->add_option("--suite", o.suite,
                       "algebra, prop-pgl1d, claims-s8, parity-s2 or oracle-f8")
        ->required();

    add_common(app.add_subcommand("export", "compute and cache a partition"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("census")) return cmd_census(o);
        if (app.got_subcommand("verify")) return cmd_verify(o);
        if (app.got_subcommand("export")) return cmd_export(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InternalCheckFailure& e) {
        std::cerr << "internal invariant failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
