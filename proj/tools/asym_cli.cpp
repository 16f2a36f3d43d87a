// Command line front end: generate the construction families, analyze
// automorphisms, scan minimality, compute Berge connectivity, build duals.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asym/aut.hpp"
#include "asym/connectivity.hpp"
#include "asym/constructions.hpp"
#include "asym/io.hpp"
#include "asym/minimality.hpp"

namespace {

using asym::Error;
using asym::ErrorKind;
using asym::Hypergraph;

int exit_code_for(const Error& e) {
    return e.kind() == ErrorKind::IoError ? 3 : 2;
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump() << "\n"; }

std::string default_gen_path(const std::string& family, int k, int t, int t_prime,
                             const std::vector<int>& ts, int n, int r, std::uint64_t seed) {
    if (family == "G") return "G_" + std::to_string(k) + "_" + std::to_string(t) + ".json";
    if (family == "H") {
        std::string tail;
        for (int x : ts) tail += std::to_string(x);
        return "H_" + std::to_string(k) + "_" + tail + ".json";
    }
    if (family == "H3") return "H3_" + std::to_string(t) + std::to_string(t_prime) + ".json";
    if (family == "H5") return "H5_" + std::to_string(t) + std::to_string(t_prime) + ".json";
    if (family == "frucht") return "frucht.json";
    return "RR_" + std::to_string(n) + "_" + std::to_string(r) + "_s" + std::to_string(seed) + ".json";
}

nlohmann::json summary_json(const Hypergraph& h) {
    nlohmann::json doc;
    doc["k"] = h.k;
    doc["n"] = h.vertex_count();
    doc["m"] = h.edge_count();
    doc["max_degree"] = asym::max_degree(h);
    doc["linear"] = h.vertex_count() >= 2 ? nlohmann::json(asym::is_linear(h)) : nlohmann::json(nullptr);
    return doc;
}

int resolve_vertex(const Hypergraph& h, const std::string& label) {
    auto v = h.vertex_index(label);
    if (!v) throw Error(ErrorKind::InvalidParams, "no vertex labeled \"" + label + "\"");
    return *v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymmetric hypergraph toolkit"};
    app.require_subcommand(1);

    int jobs = 1;
    if (const char* env = std::getenv("ASYM_JOBS")) jobs = std::max(1, std::atoi(env));

    // gen
    auto* gen = app.add_subcommand("gen", "generate a construction and write it to a file");
    std::string family, out_path, format = "json";
    int g_k = 0, g_t = 0, g_tprime = 0, g_n = 0, g_r = 0;
    std::vector<int> g_ts;
    std::uint64_t g_seed = 0;
    gen->add_option("family", family, "G | H | H3 | H5 | frucht | random_regular")->required();
    gen->add_option("--k", g_k, "edge size");
    gen->add_option("--t", g_t, "cycle parameter t");
    gen->add_option("--tprime", g_tprime, "second cycle parameter t'");
    gen->add_option("--ts", g_ts, "comma separated t_1<...<t_{k-1}")->delimiter(',');
    gen->add_option("--n", g_n, "vertex count (random_regular)");
    gen->add_option("--r", g_r, "regularity (random_regular)");
    gen->add_option("--seed", g_seed, "RNG seed (random_regular)");
    gen->add_option("--out", out_path, "output file (default derived from the parameters)");
    gen->add_option("--format", format, "json | txt")->check(CLI::IsMember({"json", "txt"}));

    // aut
    auto* aut = app.add_subcommand("aut", "automorphism analysis of a hypergraph file");
    std::string aut_path, stabilize, expect;
    long long aut_limit = 500;
    bool aut_group = false;
    aut->add_option("file", aut_path)->required();
    aut->add_flag("--group", aut_group, "enumerate the full group (up to --limit elements)");
    aut->add_option("--limit", aut_limit, "group enumeration cap")->capture_default_str();
    aut->add_option("--stabilize", stabilize, "find a non-trivial automorphism fixing this edge setwise");
    aut->add_option("--expect", expect, "asym | sym: exit 1 when the verdict differs")
        ->check(CLI::IsMember({"asym", "sym"}));

    // minimal
    auto* minimal = app.add_subcommand("minimal", "scan induced sub-hypergraphs for symmetry");
    std::string min_path, mode = "deletion1";
    asym::MinimalityOptions min_opts;
    minimal->add_option("file", min_path)->required();
    minimal->add_option("--mode", mode, "exhaustive | deletion1 | sample")
        ->check(CLI::IsMember({"exhaustive", "deletion1", "sample"}))
        ->capture_default_str();
    minimal->add_option("--samples", min_opts.samples, "sampled subsets (sample mode)")->capture_default_str();
    minimal->add_option("--seed", min_opts.seed, "sampling seed")->capture_default_str();
    minimal->add_option("--max-exhaustive", min_opts.max_exhaustive_n, "vertex cap for exhaustive mode")
        ->capture_default_str();
    minimal->add_option("--jobs", jobs, "worker threads for the subset scan (env ASYM_JOBS)");

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "hypergraph dual of a regular graph");
    std::string dual_path, dual_out;
    dual_cmd->add_option("file", dual_path)->required();
    dual_cmd->add_option("--out", dual_out, "output file (default <input>_dual.json)");

    // connect
    auto* connect = app.add_subcommand("connect", "maximum edge-disjoint Berge paths between two vertices");
    std::string conn_path, conn_from, conn_to;
    int conn_min = 0;
    connect->add_option("file", conn_path)->required();
    connect->add_option("--from", conn_from, "vertex label")->required();
    connect->add_option("--to", conn_to, "vertex label")->required();
    connect->add_option("--min", conn_min, "exit 1 when fewer paths exist")->capture_default_str();

    // stats
    auto* stats = app.add_subcommand("stats", "structural statistics of a hypergraph file");
    std::string stats_path;
    stats->add_option("file", stats_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            Hypergraph h;
            if (family == "G") h = asym::gen_G(g_k, g_t);
            else if (family == "H") h = asym::gen_H(g_k, g_ts);
            else if (family == "H3") h = asym::gen_H3(g_t, g_tprime);
            else if (family == "H5") h = asym::gen_H5(g_t, g_tprime);
            else if (family == "frucht") h = asym::frucht();
            else if (family == "random_regular") h = asym::random_regular(g_n, g_r, g_seed);
            else throw Error(ErrorKind::InvalidParams, "unknown family \"" + family + "\"");

            if (out_path.empty())
                out_path = default_gen_path(family, g_k, g_t, g_tprime, g_ts, g_n, g_r, g_seed);
            asym::save_hypergraph(h, out_path,
                                  format == "json" ? asym::FileFormat::json : asym::FileFormat::text);
            emit(summary_json(h));
            if (auto warning = h.meta.find("warning"); warning != h.meta.end())
                std::cerr << "warning: " << warning->second << "\n";
            std::cerr << family << " -> " << out_path << ": " << h.vertex_count() << " vertices, "
                      << h.edge_count() << " edges\n";
            return 0;
        }

        if (*aut) {
            Hypergraph h = asym::load_hypergraph(aut_path);
            if (!stabilize.empty()) {
                auto e = h.edge_index_by_name(stabilize);
                if (!e) throw Error(ErrorKind::InvalidParams, "no edge named \"" + stabilize + "\"");
                auto witness = asym::edge_stabilizer_nontrivial(h, *e);
                nlohmann::json doc;
                doc["edge"] = stabilize;
                doc["edge_index"] = *e;
                doc["nontrivial"] = witness.has_value();
                doc["witness"] = witness ? asym::permutation_to_json(*witness) : nlohmann::json(nullptr);
                emit(doc);
                std::cerr << "stabilizer of " << stabilize << ": "
                          << (witness ? "non-trivial element found" : "trivial") << "\n";
                return 0;
            }
            asym::AutReport report =
                aut_group ? asym::automorphism_group(h, aut_limit) : asym::analyze_symmetry(h);
            emit(aut_report_to_json(report));
            std::cerr << (report.asymmetric ? "asymmetric" : "symmetric");
            if (report.group_order) std::cerr << ", group order " << *report.group_order;
            std::cerr << "\n";
            if (expect == "asym" && !report.asymmetric) return 1;
            if (expect == "sym" && report.asymmetric) return 1;
            return 0;
        }

        if (*minimal) {
            Hypergraph h = asym::load_hypergraph(min_path);
            min_opts.jobs = jobs;
            min_opts.mode = mode == "exhaustive" ? asym::ScanMode::exhaustive
                          : mode == "sample"     ? asym::ScanMode::sample
                                                 : asym::ScanMode::deletion1;
            asym::MinimalityReport report = asym::check_minimal(h, min_opts);
            emit(minimality_report_to_json(report, h));
            std::cerr << scan_mode_name(report.mode) << " scan: root "
                      << (report.asymmetric_root ? "asymmetric" : "symmetric") << ", "
                      << report.subsets_checked << " subsets, "
                      << (report.all_symmetric ? "all symmetric" : "counterexample found") << "\n";
            return report.asymmetric_root && report.all_symmetric ? 0 : 1;
        }

        if (*dual_cmd) {
            Hypergraph g = asym::load_hypergraph(dual_path);
            Hypergraph h = asym::dual(g);
            if (dual_out.empty()) {
                dual_out = dual_path;
                if (auto dot = dual_out.rfind(".json"); dot != std::string::npos)
                    dual_out.resize(dot);
                dual_out += "_dual.json";
            }
            asym::save_hypergraph(h, dual_out, asym::FileFormat::json);
            emit(summary_json(h));
            std::cerr << "dual -> " << dual_out << ": " << h.vertex_count() << " vertices, "
                      << h.edge_count() << " edges, " << h.k << "-uniform\n";
            return 0;
        }

        if (*connect) {
            Hypergraph h = asym::load_hypergraph(conn_path);
            const int u = resolve_vertex(h, conn_from);
            const int v = resolve_vertex(h, conn_to);
            asym::ConnectivityResult result = asym::max_edge_disjoint_paths(h, u, v);
            emit(connectivity_to_json(result, h));
            std::cerr << conn_from << " - " << conn_to << ": " << result.count
                      << " edge-disjoint Berge paths\n";
            return result.count >= conn_min ? 0 : 1;
        }

        if (*stats) {
            Hypergraph h = asym::load_hypergraph(stats_path);
            emit(stats_to_json(h));
            std::cerr << h.vertex_count() << " vertices, " << h.edge_count() << " edges, k=" << h.k
                      << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
