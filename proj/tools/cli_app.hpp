#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bclique/edge_list_io.hpp"
#include "bclique/enumeration.hpp"
#include "bclique/generator.hpp"
#include "bclique/maximum_search.hpp"
#include "bclique/oracle.hpp"
#include "bclique/reduction.hpp"

namespace bclique::cli {

struct CommonArgs {
    std::string input;
    std::string format = "triple";
    std::string output = "text";
    std::string label_map;
    std::uint64_t seed = 1;
    int threads = 1;
    double time_budget_secs = 0.0;
};

inline EdgeListFormat parse_format(const std::string& s) {
    return s == "snap-sign" ? EdgeListFormat::snap_sign : EdgeListFormat::triple;
}

inline void add_common(CLI::App* cmd, CommonArgs& c, bool needs_input = true) {
    auto* in = cmd->add_option("--input,-i", c.input, "input edge-list file");
    if (needs_input) in->required();
    cmd->add_option("--format", c.format, "input format")
        ->check(CLI::IsMember({"triple", "snap-sign"}));
    cmd->add_option("--output", c.output, "output mode")
        ->check(CLI::IsMember({"text", "jsonl", "count"}));
    cmd->add_option("--seed", c.seed, "rng seed");
    cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 1024));
    cmd->add_option("--time-budget-secs", c.time_budget_secs, "wall-clock budget, 0 = unlimited")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--label-map", c.label_map, "write 'id label' pairs to this file");
}

inline SignedGraph load_input(const CommonArgs& c) {
    SignedGraph g = load_edge_list_file(c.input, parse_format(c.format));
    if (!c.label_map.empty()) {
        std::ofstream lm(c.label_map);
        if (!lm) throw std::runtime_error("cannot open label-map file: " + c.label_map);
        write_label_map(g, lm);
    }
    return g;
}

inline void print_clique(std::ostream& out, const BalancedClique& c, const std::string& mode) {
    if (mode == "jsonl") {
        out << "{\"left\":[";
        for (std::size_t i = 0; i < c.left.size(); ++i) out << (i ? "," : "") << c.left[i];
        out << "],\"right\":[";
        for (std::size_t i = 0; i < c.right.size(); ++i) out << (i ? "," : "") << c.right[i];
        out << "]}\n";
    } else {
        out << c << '\n';
    }
}

inline void print_timeout(std::ostream& out, const std::string& command, double budget) {
    out << "{\"event\":\"timeout\",\"command\":\"" << command << "\",\"budget_secs\":" << budget
        << "}\n";
}

inline void print_regions(std::ostream& out, const std::vector<RegionTraceRow>& rows) {
    for (const RegionTraceRow& r : rows)
        out << "region index=" << r.index << " kappa_lo=" << r.kappa_lo
            << " kappa_hi=" << r.kappa_hi << " pos_edges=" << r.pos_edges
            << " neg_edges=" << r.neg_edges << " epsilon=" << r.epsilon << '\n';
}

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 124;

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"balanced clique toolkit for signed networks"};
    app.require_subcommand(1);

    // ---- enum ----
    CommonArgs enum_args;
    int enum_k = 1;
    std::string enum_algo = "star", enum_pivot = "on", enum_et = "on", enum_order = "degeneracy";
    std::string enum_store = "naive", enum_reduce = "on", enum_deg_order = "on";
    CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate maximal balanced cliques");
    add_common(enum_cmd, enum_args);
    enum_cmd->add_option("--k", enum_k, "minimum size of each clique side")->check(CLI::PositiveNumber);
    enum_cmd->add_option("--algo", enum_algo)->check(CLI::IsMember({"basic", "star"}));
    enum_cmd->add_option("--pivot", enum_pivot)->check(CLI::IsMember({"on", "off"}));
    enum_cmd->add_option("--et", enum_et)->check(CLI::IsMember({"on", "off"}));
    enum_cmd->add_option("--order", enum_order)->check(CLI::IsMember({"degeneracy", "id"}));
    enum_cmd->add_option("--store", enum_store)->check(CLI::IsMember({"naive", "partitioned"}));
    enum_cmd->add_option("--reduce", enum_reduce, "pre-enumeration vertex/edge reduction")
        ->check(CLI::IsMember({"on", "off"}));
    enum_cmd->add_option("--degree-order", enum_deg_order)->check(CLI::IsMember({"on", "off"}));

    // ---- max ----
    CommonArgs max_args;
    int max_k = 1;
    std::string max_algo = "ssp-star", max_store = "naive";
    std::string max_domination = "on", max_coloring = "on", max_vr = "on", max_er = "on";
    double slow_threshold = 20.0;
    bool trace_regions = false;
    CLI::App* max_cmd = app.add_subcommand("max", "find a maximum balanced clique");
    add_common(max_cmd, max_args);
    max_cmd->add_option("--k", max_k, "minimum size of each clique side")->check(CLI::PositiveNumber);
    max_cmd->add_option("--algo", max_algo)->check(CLI::IsMember({"baseline", "ssp", "ssp-star"}));
    max_cmd->add_option("--slow-threshold-secs", slow_threshold)->check(CLI::NonNegativeNumber);
    max_cmd->add_flag("--trace-regions", trace_regions, "print one row per search region");
    max_cmd->add_option("--store", max_store)->check(CLI::IsMember({"naive", "partitioned"}));
    max_cmd->add_option("--domination", max_domination)->check(CLI::IsMember({"on", "off"}))->group("");
    max_cmd->add_option("--coloring", max_coloring)->check(CLI::IsMember({"on", "off"}))->group("");
    max_cmd->add_option("--vertex-reduction-plus", max_vr)->check(CLI::IsMember({"on", "off"}))->group("");
    max_cmd->add_option("--edge-reduction-plus", max_er)->check(CLI::IsMember({"on", "off"}))->group("");

    // ---- reduce ----
    CommonArgs reduce_args;
    int reduce_k = 1, kappa_lo = -1, kappa_hi = -1;
    std::string reduce_mode = "both";
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "prune vertices/edges, emit the reduced edge list");
    add_common(reduce_cmd, reduce_args);
    reduce_cmd->add_option("--k", reduce_k)->check(CLI::PositiveNumber);
    reduce_cmd->add_option("--kappa-lo", kappa_lo, "min-side bound for --mode plus");
    reduce_cmd->add_option("--kappa-hi", kappa_hi, "max-side bound for --mode plus");
    reduce_cmd->add_option("--mode", reduce_mode)
        ->check(CLI::IsMember({"vertex", "edge", "both", "plus"}));

    // ---- stats ----
    CommonArgs stats_args;
    CLI::App* stats_cmd = app.add_subcommand("stats", "print graph summary counts");
    add_common(stats_cmd, stats_args);

    // ---- gen ----
    CommonArgs gen_args;
    std::string gen_base;
    int gen_n = 0;
    std::int64_t gen_m = 0;
    CLI::App* gen_cmd = app.add_subcommand("gen", "sign a base graph by a 4:1 two-group split");
    add_common(gen_cmd, gen_args, /*needs_input=*/false);
    gen_cmd->add_option("--base", gen_base, "unsigned edge-list file (u v per line)");
    gen_cmd->add_option("--random-n", gen_n, "vertices of a random base graph");
    gen_cmd->add_option("--random-m", gen_m, "edges of a random base graph");

    // ---- bench ----
    CommonArgs bench_args;
    int bench_k = 1;
    std::string bench_algo = "ssp-star", bench_store = "naive";
    bool bench_trace = false;
    double bench_slow = 20.0;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run one algorithm, report frames and wall time");
    add_common(bench_cmd, bench_args);
    bench_cmd->add_option("--k", bench_k)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--algo", bench_algo)
        ->check(CLI::IsMember({"basic", "star", "baseline", "ssp", "ssp-star"}));
    bench_cmd->add_flag("--trace-regions", bench_trace);
    bench_cmd->add_option("--store", bench_store)->check(CLI::IsMember({"naive", "partitioned"}));
    bench_cmd->add_option("--slow-threshold-secs", bench_slow)->check(CLI::NonNegativeNumber);

    // ---- oracle (test tooling) ----
    CommonArgs oracle_args;
    int oracle_k = 1;
    std::string oracle_mode = "enum";
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference (small graphs)");
    oracle_cmd->group("");
    add_common(oracle_cmd, oracle_args);
    oracle_cmd->add_option("--k", oracle_k)->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--mode", oracle_mode)->check(CLI::IsMember({"enum", "max"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bclique");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (enum_cmd->parsed()) {
            SignedGraph g = load_input(enum_args);
            if (enum_reduce == "on") g = reduce_for_enum(g, enum_k);
            EnumOptions opt;
            opt.pivot = enum_pivot == "on";
            opt.et_rules = enum_et == "on";
            opt.degree_order = enum_deg_order == "on";
            opt.root_order = enum_order == "id" ? RootOrder::by_id : RootOrder::degeneracy;
            opt.store = enum_store == "naive" ? StoreKind::naive : StoreKind::partitioned;
            opt.threads = enum_args.threads;
            opt.time_budget_secs = enum_args.time_budget_secs;
            CliqueSink sink;
            if (enum_args.output != "count")
                sink = [&](const BalancedClique& c) { print_clique(out, c, enum_args.output); };
            EnumResult res = enum_algo == "basic" ? mbc_enum(g, enum_k, sink, opt)
                                                  : mbc_enum_star(g, enum_k, sink, opt);
            if (res.timed_out) {
                print_timeout(out, "enum", enum_args.time_budget_secs);
                return kExitTimeout;
            }
            if (enum_args.output == "count") out << res.emitted << '\n';
            return kExitOk;
        }

        if (max_cmd->parsed()) {
            SignedGraph g = load_input(max_args);
            SearchOptions opt;
            opt.slow_threshold_secs = slow_threshold;
            opt.domination = max_domination == "on";
            opt.coloring = max_coloring == "on";
            opt.candidate_reduction = max_vr == "on";
            opt.edge_reduction = max_er == "on";
            opt.store = max_store == "naive" ? StoreKind::naive : StoreKind::partitioned;
            opt.threads = max_args.threads;
            opt.time_budget_secs = max_args.time_budget_secs;
            SearchResult res = max_algo == "baseline" ? mbcs_baseline(g, max_k, opt)
                               : max_algo == "ssp"    ? mbcs_ssp(g, max_k, opt)
                                                      : mbcs_ssp_star(g, max_k, opt);
            if (trace_regions) print_regions(out, res.regions);
            if (res.timed_out) {
                print_timeout(out, "max", max_args.time_budget_secs);
                return kExitTimeout;
            }
            if (max_args.output == "count") {
                out << (res.best ? res.best->size() : 0) << '\n';
            } else if (res.best) {
                print_clique(out, *res.best, max_args.output);
            } else {
                out << "no result\n";
            }
            return kExitOk;
        }

        if (reduce_cmd->parsed()) {
            SignedGraph g = load_input(reduce_args);
            SignedGraph r;
            if (reduce_mode == "vertex") r = vertex_reduction(g, reduce_k);
            else if (reduce_mode == "edge") r = edge_reduction(g, reduce_k);
            else if (reduce_mode == "both") r = reduce_for_enum(g, reduce_k);
            else {
                if (kappa_lo < 0 || kappa_hi < 0)
                    throw std::runtime_error("--mode plus needs --kappa-lo and --kappa-hi");
                r = edge_reduction_plus(g, kappa_lo, kappa_hi);
            }
            serialize_edge_list(r, out, parse_format(reduce_args.format));
            return kExitOk;
        }

        if (stats_cmd->parsed()) {
            GraphStats s = load_input(stats_args).stats();
            out << "n=" << s.n << " m_pos=" << s.m_pos << " m_neg=" << s.m_neg
                << " max_pos_degree=" << s.max_pos_degree
                << " max_neg_degree=" << s.max_neg_degree << '\n';
            return kExitOk;
        }

        if (gen_cmd->parsed()) {
            std::vector<std::pair<int, int>> base;
            int n = 0;
            if (!gen_base.empty()) {
                std::ifstream in(gen_base);
                if (!in) throw std::runtime_error("cannot open base file: " + gen_base);
                std::string line;
                std::size_t line_no = 0;
                std::unordered_map<std::string, int> ids;
                while (std::getline(in, line)) {
                    ++line_no;
                    std::istringstream ls(line);
                    std::string a, b;
                    if (!(ls >> a)) continue;
                    if (a[0] == '#') continue;
                    if (!(ls >> b)) throw ParseError(line_no, "expected 'u v'");
                    auto intern = [&](const std::string& t) {
                        auto [it, fresh] = ids.emplace(t, n);
                        if (fresh) ++n;
                        return it->second;
                    };
                    int u = intern(a), v = intern(b);
                    if (u != v) base.emplace_back(u, v);
                }
            } else if (gen_n > 0) {
                n = gen_n;
                base = random_base_graph(gen_n, gen_m, gen_args.seed);
            } else {
                throw std::runtime_error("gen needs --base or --random-n/--random-m");
            }
            SignedGraph g = synthesize_signed(n, base, gen_args.seed);
            serialize_edge_list(g, out, parse_format(gen_args.format));
            return kExitOk;
        }

        if (bench_cmd->parsed()) {
            SignedGraph g = load_input(bench_args);
            auto t0 = Clock::now();
            if (bench_algo == "basic" || bench_algo == "star") {
                if (bench_algo == "star") g = reduce_for_enum(g, bench_k);
                EnumOptions opt;
                opt.store = bench_store == "naive" ? StoreKind::naive : StoreKind::partitioned;
                opt.threads = bench_args.threads;
                opt.time_budget_secs = bench_args.time_budget_secs;
                EnumResult res = bench_algo == "basic" ? mbc_enum(g, bench_k, nullptr, opt)
                                                       : mbc_enum_star(g, bench_k, nullptr, opt);
                if (res.timed_out) {
                    print_timeout(out, "bench", bench_args.time_budget_secs);
                    return kExitTimeout;
                }
                out << "frames=" << res.frames << '\n' << "emitted=" << res.emitted << '\n';
            } else {
                SearchOptions opt;
                opt.slow_threshold_secs = bench_slow;
                opt.store = bench_store == "naive" ? StoreKind::naive : StoreKind::partitioned;
                opt.threads = bench_args.threads;
                opt.time_budget_secs = bench_args.time_budget_secs;
                SearchResult res = bench_algo == "baseline" ? mbcs_baseline(g, bench_k, opt)
                                   : bench_algo == "ssp"    ? mbcs_ssp(g, bench_k, opt)
                                                            : mbcs_ssp_star(g, bench_k, opt);
                if (bench_trace) print_regions(out, res.regions);
                if (res.timed_out) {
                    print_timeout(out, "bench", bench_args.time_budget_secs);
                    return kExitTimeout;
                }
                out << "frames=" << res.frames << '\n'
                    << "best_size=" << (res.best ? res.best->size() : 0) << '\n';
            }
            double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            out << "time_wall_secs=" << secs << '\n';
            return kExitOk;
        }

        if (oracle_cmd->parsed()) {
            SignedGraph g = load_input(oracle_args);
            if (oracle_mode == "enum") {
                for (const BalancedClique& c : brute_enum(g, oracle_k))
                    print_clique(out, c, oracle_args.output == "jsonl" ? "jsonl" : "text");
            } else {
                auto best = brute_max(g, oracle_k);
                if (best)
                    print_clique(out, *best, oracle_args.output == "jsonl" ? "jsonl" : "text");
                else
                    out << "no result\n";
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace bclique::cli
