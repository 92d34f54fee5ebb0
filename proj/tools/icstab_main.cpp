// icstab: exact computations around integral closures of powers of edge
// ideals -- invariants, closures, associated primes, depth, stability
// indices, and theorem verification over graph corpora.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "icstab/homology.hpp"
#include "icstab/io.hpp"
#include "icstab/newton.hpp"
#include "icstab/staircase.hpp"
#include "icstab/verify.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitViolation = 2;
constexpr int kExitOperational = 1;

int default_jobs() {
    if (const char* env = std::getenv("ICSTAB_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);
    out << text << "\n";
}

void print_config(const std::string& line) { std::cerr << "# icstab " << line << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stability experiments for integral closures of edge ideal powers"};
    app.require_subcommand(1);

    std::string graph_path, ideal_path, out_path, checks_arg = "all";
    bool closure_flag = false;
    int power_n = 1;
    bool use_ordinary = false, paranoid = false, csv = false;
    int exhaustive_n = 0, random_count = 0, random_max = 8;
    long long seed = -1;
    int jobs = default_jobs();
    bool connected_only = false, pseudoforest_only = false, no_c4 = false;

    auto* inv = app.add_subcommand("invariants", "graph invariants (n0, n1, phi0, phi1, ...)");
    inv->add_option("--graph", graph_path, "edge-list or .g6 file")->required();
    inv->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* clo = app.add_subcommand("closure", "minimal generators of closure(I^n)");
    clo->add_option("--graph", graph_path, "graph file; uses its edge ideal");
    clo->add_option("--ideal", ideal_path, "ideal JSON file");
    clo->add_option("--power", power_n, "power n")->required();
    clo->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* ass = app.add_subcommand("ass", "associated primes of (the closure of) I(G)^n");
    ass->add_option("--graph", graph_path)->required();
    ass->add_option("--power", power_n)->required();
    ass->add_flag("--ordinary", use_ordinary, "use the ordinary power instead of its closure");
    ass->add_flag("--closure", closure_flag, "use the integral closure (default)");
    ass->add_option("--out", out_path);

    auto* dep = app.add_subcommand("depth", "depth of R/(closure of) I(G)^n with Betti summary");
    dep->add_option("--graph", graph_path)->required();
    dep->add_option("--power", power_n)->required();
    dep->add_flag("--ordinary", use_ordinary);
    dep->add_flag("--closure", closure_flag, "use the integral closure (default)");
    dep->add_option("--out", out_path);

    auto* stab = app.add_subcommand("stability", "full stability report for one graph");
    stab->add_option("--graph", graph_path)->required();
    stab->add_flag("--csv", csv, "emit a CSV row instead of JSON");
    stab->add_flag("--paranoid", paranoid, "disable the bipartite ordinary-power shortcut");
    stab->add_option("--out", out_path);

    auto* ver = app.add_subcommand("verify", "theorem checks over a graph corpus");
    ver->add_option("--exhaustive", exhaustive_n, "connected graphs up to N vertices");
    ver->add_option("--random-pseudoforest", random_count, "number of random pseudoforests");
    ver->add_option("--max-vertices", random_max, "vertex cap for random graphs");
    ver->add_option("--seed", seed, "seed for random corpora (required there)");
    ver->add_option("--graphs", graph_path, "file corpus");
    ver->add_option("--checks", checks_arg, "comma list from counterexample,t0,t1,t2,bounds");
    ver->add_option("--jobs", jobs, "worker threads");
    ver->add_flag("--include-disconnected", connected_only,
                  "also compose disconnected unions in exhaustive mode");
    ver->add_flag("--paranoid", paranoid);
    ver->add_option("--out", out_path, "write the JSON report here");

    auto* cor = app.add_subcommand("corpus", "emit a graph corpus as edge-list blocks");
    cor->add_option("--exhaustive", exhaustive_n);
    cor->add_option("--random-pseudoforest", random_count);
    cor->add_option("--max-vertices", random_max);
    cor->add_option("--seed", seed);
    cor->add_flag("--include-disconnected", connected_only);
    cor->add_flag("--pseudoforest-only", pseudoforest_only);
    cor->add_flag("--no-c4", no_c4);
    cor->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        using nlohmann::json;
        if (inv->parsed()) {
            print_config("invariants --graph " + graph_path);
            icstab::Graph g = icstab::read_graph_file(graph_path);
            bool all_nonbip = true;
            for (const auto& p : icstab::component_profiles(g))
                if (p.is_bipartite) all_nonbip = false;
            json j{{"vertices", g.vertex_count()},
                   {"edges", g.edge_count()},
                   {"leaf_edges", icstab::leaf_edge_count(g)},
                   {"components", icstab::components(g).size()},
                   {"bipartite", icstab::is_bipartite(g)},
                   {"pseudoforest", icstab::is_pseudoforest(g)},
                   {"odd_girth", icstab::odd_girth(g) ? json(*icstab::odd_girth(g)) : json()},
                   {"max_cycle", icstab::max_cycle(g)},
                   {"n0", icstab::n0(g)},
                   {"n1", all_nonbip ? json(icstab::n1(g)) : json()},
                   {"phi0", icstab::phi0(g)},
                   {"phi1", icstab::phi1(g)}};
            emit(j.dump(2), out_path);
        } else if (clo->parsed()) {
            if (graph_path.empty() == ideal_path.empty())
                throw CLI::ValidationError("closure", "pass exactly one of --graph/--ideal");
            print_config("closure --power " + std::to_string(power_n));
            icstab::MonomialIdeal ideal = graph_path.empty()
                                              ? icstab::read_ideal_file(ideal_path)
                                              : icstab::edge_ideal(icstab::read_graph_file(graph_path));
            emit(icstab::ideal_to_json(icstab::closure_power(ideal, power_n)).dump(2), out_path);
        } else if (ass->parsed()) {
            print_config("ass --graph " + graph_path + " --power " + std::to_string(power_n) +
                         (use_ordinary ? " --ordinary" : " --closure"));
            icstab::Graph g = icstab::read_graph_file(graph_path);
            icstab::MonomialIdeal ideal = icstab::edge_ideal(g);
            icstab::MonomialIdeal target =
                use_ordinary ? icstab::power(ideal, power_n) : icstab::closure_power(ideal, power_n);
            emit(icstab::ass_to_json(icstab::associated_primes(target)).dump(2), out_path);
        } else if (dep->parsed()) {
            print_config("depth --graph " + graph_path + " --power " + std::to_string(power_n) +
                         (use_ordinary ? " --ordinary" : " --closure"));
            icstab::Graph g = icstab::read_graph_file(graph_path);
            icstab::MonomialIdeal ideal = icstab::edge_ideal(g);
            icstab::MonomialIdeal target =
                use_ordinary ? icstab::power(ideal, power_n) : icstab::closure_power(ideal, power_n);
            icstab::BettiTable betti = icstab::betti_numbers(target);
            json totals = json::array();
            for (auto [i, total] : betti.totals())
                totals.push_back({{"i", i}, {"total", total}});
            json j{{"power", power_n},
                   {"closure", !use_ordinary},
                   {"ambient", g.vertex_count()},
                   {"depth", icstab::depth_quotient(target, g.vertex_count())},
                   {"projective_dimension_of_quotient", betti.projective_dimension() + 1},
                   {"betti_totals", std::move(totals)},
                   {"char", "0"}};
            emit(j.dump(2), out_path);
        } else if (stab->parsed()) {
            print_config("stability --graph " + graph_path + (paranoid ? " --paranoid" : ""));
            icstab::Graph g = icstab::read_graph_file(graph_path);
            icstab::StabilityOptions opts;
            opts.bipartite_shortcut = !paranoid;
            icstab::StabilityReport rep = icstab::report(g, opts);
            if (csv)
                emit(icstab::stability_csv_header() + "\n" + icstab::report_to_csv_row(rep),
                     out_path);
            else
                emit(icstab::report_to_json(rep).dump(2), out_path);
        } else if (ver->parsed()) {
            icstab::CorpusSpec spec;
            if (exhaustive_n > 0) {
                spec.mode = icstab::CorpusSpec::Mode::exhaustive;
                spec.max_vertices = exhaustive_n;
                spec.connected_only = !connected_only;
                if (exhaustive_n >= 7)
                    std::cerr << "# warning: exhaustive corpora beyond 6 vertices are "
                                 "expensive; expect long runtimes\n";
            } else if (random_count > 0) {
                if (seed < 0)
                    throw CLI::ValidationError("verify", "--seed is required for random corpora");
                spec.mode = icstab::CorpusSpec::Mode::random_pseudoforest;
                spec.count = random_count;
                spec.max_vertices = random_max;
                spec.seed = static_cast<uint64_t>(seed);
                spec.connected_only = false;
            } else if (!graph_path.empty()) {
                spec.mode = icstab::CorpusSpec::Mode::file;
                spec.path = graph_path;
                spec.connected_only = false;
            } else {
                throw CLI::ValidationError(
                    "verify", "pick --exhaustive, --random-pseudoforest, or --graphs");
            }
            icstab::RunOptions opts;
            opts.jobs = jobs;
            opts.stability.bipartite_shortcut = !paranoid;
            if (checks_arg != "all") {
                opts.checks.clear();
                std::stringstream ss(checks_arg);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (item != "counterexample" && item != "t0" && item != "t1" &&
                        item != "t2" && item != "bounds")
                        throw CLI::ValidationError("verify", "unknown check: " + item);
                    opts.checks.push_back(item);
                }
            }
            {
                std::ostringstream os;
                os << "verify checks=" << checks_arg << " jobs=" << jobs;
                if (spec.mode == icstab::CorpusSpec::Mode::random_pseudoforest)
                    os << " seed=" << seed;
                print_config(os.str());
            }
            icstab::VerificationReport rep = icstab::run(spec, opts);
            emit(icstab::verification_to_json(rep).dump(2), out_path);
            for (const auto& c : rep.checks)
                std::cerr << "# " << c.name << ": " << c.pass << " pass, " << c.fail << " fail ("
                          << c.ms << " ms)\n";
            if (!rep.all_pass) return kExitViolation;
        } else if (cor->parsed()) {
            icstab::CorpusSpec spec;
            if (exhaustive_n > 0) {
                spec.mode = icstab::CorpusSpec::Mode::exhaustive;
                spec.max_vertices = exhaustive_n;
                spec.connected_only = !connected_only;
            } else if (random_count > 0) {
                if (seed < 0)
                    throw CLI::ValidationError("corpus", "--seed is required for random corpora");
                spec.mode = icstab::CorpusSpec::Mode::random_pseudoforest;
                spec.count = random_count;
                spec.max_vertices = random_max;
                spec.seed = static_cast<uint64_t>(seed);
                spec.connected_only = false;
            } else {
                throw CLI::ValidationError("corpus", "pick --exhaustive or --random-pseudoforest");
            }
            spec.pseudoforest_only = pseudoforest_only;
            spec.no_c4 = no_c4;
            print_config("corpus");
            std::ostringstream os;
            for (const auto& g : icstab::generate_corpus(spec)) os << icstab::format_edge_list(g);
            emit(os.str(), out_path);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const icstab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    }
    return 0;
}
