#pragma once

#include <replpath/bmm.hpp>
#include <replpath/generators.hpp>
#include <replpath/msrp.hpp>
#include <replpath/oracle.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace replpath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMismatch = 2;

/// Decimal or 0x-prefixed hex.
inline std::uint64_t parse_seed(const std::string &text) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
            v = std::stoull(text.substr(2), &used, 16);
            used += 2;
        } else {
            v = std::stoull(text, &used, 10);
        }
    } catch (const std::exception &) {
        throw ValidationError("bad seed '" + text + "'");
    }
    if (used != text.size() || text.front() == '-') throw ValidationError("bad seed '" + text + "'");
    return v;
}

inline std::vector<Vertex> parse_sources(const std::string &text) {
    std::vector<Vertex> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) throw ValidationError("empty entry in --sources");
        item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
        auto v = detail::parse_uints(item, 1, 0)[0];
        if (v > std::numeric_limits<Vertex>::max()) throw ValidationError("source id too large");
        out.push_back(static_cast<Vertex>(v));
    }
    if (out.empty()) throw ValidationError("--sources is empty");
    return out;
}

/// sigma distinct vertices chosen by the seed, ascending.
inline std::vector<Vertex> random_sources(std::size_t n, std::size_t sigma, std::uint64_t seed) {
    if (sigma == 0 || sigma > n) throw ValidationError("--sigma must be in [1, n]");
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(sigma);
    std::sort(all.begin(), all.end());
    return all;
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline nlohmann::ordered_json dist_json(Dist d) { return reachable(d) ? nlohmann::ordered_json(d) : nlohmann::ordered_json(nullptr); }

inline std::string records_json(const std::vector<ReplacementRecord> &recs) {
    // one record per line keeps large outputs diffable
    std::string out = "[";
    for (std::size_t k = 0; k < recs.size(); ++k) {
        const auto &r = recs[k];
        nlohmann::ordered_json j{{"source", r.source},
                                 {"target", r.target},
                                 {"edge", {r.endpoints.u, r.endpoints.v}},
                                 {"dist", dist_json(r.dist)}};
        out += (k ? ",\n " : "\n ") + j.dump();
    }
    return out + "\n]\n";
}

inline std::string records_csv(const std::vector<ReplacementRecord> &recs) {
    std::string out = "source,target,u,v,dist\n";
    for (const auto &r : recs) {
        out += std::to_string(r.source) + ',' + std::to_string(r.target) + ',' + std::to_string(r.endpoints.u) + ',' +
               std::to_string(r.endpoints.v) + ',' + (reachable(r.dist) ? std::to_string(r.dist) : "") + '\n';
    }
    return out;
}

inline nlohmann::ordered_json counters_json(const Counters &c) {
    return {{"aux_nodes", c.aux_nodes.load()},
            {"aux_arcs", c.aux_arcs.load()},
            {"dijkstra_pops", c.dijkstra_pops.load()},
            {"far_candidates", c.far_candidates.load()},
            {"max_far_per_target", c.max_far_per_target.load()},
            {"large_near_candidates", c.large_near_candidates.load()},
            {"interval_overruns", c.interval_overruns.load()}};
}

inline nlohmann::ordered_json report_json(const VerifyReport &rep) {
    auto mism = nlohmann::ordered_json::array();
    for (const auto &m : rep.mismatches) {
        mism.push_back({{"source", m.source},
                        {"target", m.target},
                        {"edge", {m.edge.u, m.edge.v}},
                        {"expected", dist_json(m.expected)},
                        {"got", dist_json(m.got)},
                        {"class", m.edge_class}});
    }
    return {{"checked", rep.checked}, {"missing_rows", rep.missing_rows}, {"mismatches", mism}};
}

/// Shared flags; filled by CLI11 and resolved after parsing.
struct Options {
    std::string graph;
    std::string sources;
    std::size_t sigma = 0;
    std::string seed;
    std::string format = "json";
    std::string out;
    std::optional<double> near_threshold;
    unsigned parallel = 1;
    // gen
    std::string kind;
    std::size_t n = 0, w = 0, h = 0, chords = 0;
    double p = 0.0;
    // bmm
    std::string a, b;
    std::size_t bmm_sigma = 1;
    // bench
    bool skip_baseline = false;
};

class Runner {
public:
    Runner(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

    int run(std::vector<std::string> args) {
        CLI::App app{"Replacement paths for undirected unweighted graphs"};
        app.require_subcommand(1, 1);
        auto *gen = app.add_subcommand("gen", "generate a graph as an edge list");
        auto *ssrp = app.add_subcommand("ssrp", "single-source replacement paths");
        auto *msrp = app.add_subcommand("msrp", "multi-source replacement paths");
        auto *verify = app.add_subcommand("verify", "run msrp and compare against brute force");
        auto *bmm = app.add_subcommand("bmm", "boolean matrix product through the reduction");
        auto *bench = app.add_subcommand("bench", "time a run and report work counters");

        for (auto *sub : {gen, ssrp, msrp, verify, bmm, bench}) {
            sub->add_option("--seed", o_.seed, "RNG seed, decimal or 0x-hex (env REPLANEPATH_SEED)");
            sub->add_option("--out", o_.out, "output file (default stdout)");
        }
        for (auto *sub : {ssrp, msrp, verify, bench}) {
            sub->add_option("--graph", o_.graph, "edge-list file");
            sub->add_option("--sources", o_.sources, "comma-separated source ids");
            sub->add_option("--sigma", o_.sigma, "number of random sources");
            sub->add_option("--override-near-threshold", o_.near_threshold, "fix the near threshold and unit scale");
            sub->add_option("--parallel", o_.parallel, "worker threads (0 = hardware)");
        }
        for (auto *sub : {ssrp, msrp}) sub->add_option("--format", o_.format)->check(CLI::IsMember({"json", "csv"}));
        for (auto *sub : {gen, bench}) {
            sub->add_option("--kind", o_.kind)->check(
                CLI::IsMember({"erdos-renyi", "cycle", "path", "grid", "path-plus-chords"}));
            sub->add_option("--n", o_.n);
            sub->add_option("--p", o_.p);
            sub->add_option("--width", o_.w);
            sub->add_option("--height", o_.h);
            sub->add_option("--chords", o_.chords);
        }
        bmm->add_option("--a", o_.a)->required();
        bmm->add_option("--b", o_.b)->required();
        bmm->add_option("--sigma", o_.bmm_sigma, "sources per reduction graph");
        bmm->add_option("--parallel", o_.parallel);
        bench->add_flag("--skip-baseline", o_.skip_baseline, "do not time the per-edge BFS baseline");

        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp &) {
            out_ << app.help();
            return kExitOk;
        } catch (const CLI::ParseError &e) {
            err_ << "error: " << e.what() << "\n";
            return kExitInvalid;
        }

        try {
            if (*gen) return cmd_gen();
            if (*ssrp) return cmd_table(false);
            if (*msrp) return cmd_table(true);
            if (*verify) return cmd_verify();
            if (*bmm) return cmd_bmm();
            if (*bench) return cmd_bench();
        } catch (const ParseError &e) {
            err_ << "parse error: " << e.what() << "\n";
        } catch (const ValidationError &e) {
            err_ << "invalid input: " << e.what() << "\n";
        } catch (const std::exception &e) {
            err_ << "error: " << e.what() << "\n";
        }
        return kExitInvalid;
    }

private:
    std::uint64_t seed() const {
        if (!o_.seed.empty()) return parse_seed(o_.seed);
        if (const char *env = std::getenv("REPLANEPATH_SEED"); env && *env) return parse_seed(env);
        return AlgoConfig{}.seed;
    }

    AlgoConfig config() const {
        AlgoConfig cfg;
        cfg.seed = seed();
        cfg.threshold_override = o_.near_threshold;
        cfg.parallel = o_.parallel;
        cfg.validate();
        return cfg;
    }

    Graph generated() const {
        const auto s = seed();
        if (o_.kind == "erdos-renyi") return gen::erdos_renyi(o_.n, o_.p, s);
        if (o_.kind == "cycle") return gen::cycle(o_.n);
        if (o_.kind == "path") return gen::path(o_.n);
        if (o_.kind == "grid") return gen::grid(o_.w, o_.h);
        if (o_.kind == "path-plus-chords") return gen::path_plus_chords(o_.n, o_.chords, s);
        throw ValidationError("--kind is required");
    }

    Graph load() const {
        if (o_.graph.empty()) throw ValidationError("--graph is required");
        return load_graph(read_file(o_.graph));
    }

    std::vector<Vertex> pick_sources(const Graph &g) const {
        if (!o_.sources.empty() && o_.sigma != 0) throw ValidationError("give --sources or --sigma, not both");
        std::vector<Vertex> src;
        if (!o_.sources.empty()) {
            src = parse_sources(o_.sources);
        } else if (o_.sigma != 0) {
            src = random_sources(g.num_vertices(), o_.sigma, seed());
        } else {
            throw ValidationError("--sources or --sigma is required");
        }
        for (Vertex s : src)
            if (s >= g.num_vertices()) throw ValidationError("source " + std::to_string(s) + " out of range");
        return src;
    }

    void emit(const std::string &text) const {
        if (o_.out.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(o_.out, std::ios::binary);
        if (!file) throw ValidationError("cannot write " + o_.out);
        file << text;
    }

    int cmd_gen() {
        emit(generated().to_edge_list());
        return kExitOk;
    }

    int cmd_table(bool multi) {
        const auto g = load();
        const auto cfg = config();
        const auto src = pick_sources(g);
        ReplacementTable table;
        if (multi) {
            table = run_msrp(g, src, cfg);
        } else {
            if (src.size() != 1) throw ValidationError("ssrp takes exactly one source");
            table = run_ssrp(g, src[0], cfg);
        }
        const auto recs = table.records(g);
        emit(o_.format == "csv" ? records_csv(recs) : records_json(recs));
        return kExitOk;
    }

    int cmd_verify() {
        const auto g = load();
        const auto cfg = config();
        const auto src = pick_sources(g);
        const auto table = run_msrp(g, src, cfg);
        const auto rep = verify_table(g, table, Scales::make(g.num_vertices(), table.sources().size(), cfg));
        emit(report_json(rep).dump(1) + "\n");
        return rep.ok() ? kExitOk : kExitMismatch;
    }

    int cmd_bmm() {
        const auto A = BoolMatrix::parse(read_file(o_.a));
        const auto B = BoolMatrix::parse(read_file(o_.b));
        AlgoConfig cfg;
        cfg.seed = seed();
        cfg.parallel = o_.parallel;
        emit(boolean_multiply(A, B, o_.bmm_sigma, cfg).to_string());
        return kExitOk;
    }

    int cmd_bench() {
        const auto g = o_.graph.empty() ? generated() : load();
        const auto cfg = config();
        const auto src = pick_sources(g);
        using clock = std::chrono::steady_clock;
        auto seconds = [](clock::time_point a, clock::time_point b) { return std::chrono::duration<double>(b - a).count(); };

        Counters counters;
        const auto t0 = clock::now();
        const auto table = src.size() == 1 ? run_ssrp(g, src[0], cfg, &counters) : run_msrp(g, src, cfg, &counters);
        const auto t1 = clock::now();

        const auto n = g.num_vertices();
        const double far_bound = kFarWorkConstant * static_cast<double>(n) * std::log2(std::max<double>(2, n));
        nlohmann::ordered_json j{{"n", n},
                         {"m", g.num_edges()},
                         {"sigma", table.sources().size()},
                         {"seconds", seconds(t0, t1)},
                         {"triples", table.size()},
                         {"counters", counters_json(counters)},
                         {"far_work_bound_per_target", far_bound},
                         {"far_work_within_bound", static_cast<double>(counters.max_far_per_target.load()) <= far_bound}};
        if (!o_.skip_baseline) {
            const auto b0 = clock::now();
            const auto naive = brute_force_table(g, src);
            const auto b1 = clock::now();
            j["baseline_seconds"] = seconds(b0, b1);
            j["baseline_triples"] = naive.size();
        }
        emit(j.dump(1) + "\n");
        return kExitOk;
    }

    std::ostream &out_;
    std::ostream &err_;
    Options o_;
};

/// argv without the program name. Returns the process exit code.
inline int run_command(const std::vector<std::string> &args, std::ostream &out = std::cout,
                       std::ostream &err = std::cerr) {
    return Runner(out, err).run(args);
}

} // namespace replpath::cli
