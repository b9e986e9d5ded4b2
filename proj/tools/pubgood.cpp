// pubgood: equilibria, prices, and worst-case revenues for posted-price
// sales of locally public goods on networks.
//
// Exit codes: 0 success, 1 usage or input error, 2 validation failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pubgood/cnf.hpp"
#include "pubgood/distribution.hpp"
#include "pubgood/equilibrium.hpp"
#include "pubgood/graph.hpp"
#include "pubgood/pricing.hpp"
#include "pubgood/repro.hpp"
#include "pubgood/sequential.hpp"
#include "pubgood/simulate.hpp"
#include "pubgood/worstcase.hpp"

namespace {

using nlohmann::json;
using namespace pubgood;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write output file: " + out_path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Table rows (array of uniform objects) as CSV.
std::string table_to_csv(const json& table) {
    if (!table.is_array() || table.empty()) return "";
    std::ostringstream os;
    std::vector<std::string> cols;
    for (const auto& [key, val] : table.front().items()) cols.push_back(key);
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
    os << "\n";
    for (const auto& row : table) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            os << (c ? "," : "");
            const json& v = row.contains(cols[c]) ? row.at(cols[c]) : json();
            if (v.is_string()) {
                os << v.get<std::string>();
            } else {
                os << v.dump();
            }
        }
        os << "\n";
    }
    return os.str();
}

PriceVector load_prices(int n, double price, const std::string& price_file) {
    if (price_file.empty()) return PriceVector::uniform(n, price);
    json arr = json::parse(read_file(price_file));
    if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
        throw std::invalid_argument("price file must hold a json array with one price per node");
    }
    PriceVector pv;
    for (const auto& v : arr) pv.p.push_back(v.get<double>());
    pv.validate();
    return pv;
}

int run(int argc, char** argv) {
    CLI::App app{"posted prices for locally public goods on networks"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and write it as json");
    std::string gen_kind, gen_out;
    GeneratorParams gp;
    gen->add_option("--kind", gen_kind, "clique|cycle|path|empty|d_regular_bipartite|"
                                        "pentagon_gadget|random_gnp|random_d_regular")
        ->required();
    gen->add_option("--n", gp.n, "node count");
    gen->add_option("--d", gp.d, "degree");
    gen->add_option("--N", gp.per_triple, "pentagon gadget group size");
    gen->add_option("--prob", gp.prob, "edge probability for random_gnp");
    gen->add_option("--seed", gp.seed, "seed for random kinds");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // sat
    auto* sat = app.add_subcommand("sat", "build the 3-SAT reduction graph from a DIMACS file");
    std::string sat_cnf, sat_out;
    int sat_L = 1;
    std::size_t sat_budget = 200000;
    sat->add_option("--cnf", sat_cnf, "DIMACS cnf path")->required();
    sat->add_option("--L", sat_L, "clause-node exponent (k^L nodes per clause)");
    sat->add_option("--budget", sat_budget, "node budget");
    sat->add_option("--out", sat_out, "output path (default stdout)");

    // eq
    auto* eq = app.add_subcommand("eq", "solve for an equilibrium and report revenue");
    std::string eq_graph, eq_dist = "uniform:0,1", eq_price_file, eq_out;
    double eq_price = 0.5, eq_tol = 1e-10;
    eq->add_option("--graph", eq_graph, "graph json path")->required();
    eq->add_option("--dist", eq_dist, "uniform:lo,hi | exp:rate | table:path");
    eq->add_option("--price", eq_price, "uniform price");
    eq->add_option("--price-file", eq_price_file, "per-node price json array");
    eq->add_option("--tol", eq_tol, "solver tolerance");
    eq->add_option("--out", eq_out, "output path (default stdout)");

    // price
    auto* price = app.add_subcommand("price", "recommended price for a setting");
    std::string price_setting, price_dist = "uniform:0,1", price_out;
    int price_n = 0, price_d = 0;
    price->add_option("--setting", price_setting, "clique|d-regular|uniform-general")->required();
    price->add_option("--n", price_n, "clique size");
    price->add_option("--d", price_d, "degree");
    price->add_option("--dist", price_dist, "value distribution");
    price->add_option("--out", price_out, "output path (default stdout)");

    // worstcase
    auto* wc = app.add_subcommand("worstcase", "worst-case revenue for uniform(0,1) values");
    std::string wc_graph, wc_out;
    double wc_p = 0.5;
    bool wc_exact = false, wc_bounds = false;
    wc->add_option("--graph", wc_graph, "graph json path")->required();
    wc->add_option("--p", wc_p, "uniform price in (0,1)");
    wc->add_flag("--exact", wc_exact, "exact minimization over program vertices");
    wc->add_flag("--bounds", wc_bounds, "bounds only, from min sum x");
    wc->add_option("--out", wc_out, "output path (default stdout)");

    // hardness
    auto* hard = app.add_subcommand("hardness", "run the reduction separation experiment");
    std::string hard_cnf, hard_out;
    int hard_L = 1;
    hard->add_option("--cnf", hard_cnf, "DIMACS cnf path")->required();
    hard->add_option("--L", hard_L, "clause-node exponent");
    hard->add_option("--out", hard_out, "output path (default stdout)");

    // seq
    auto* seq = app.add_subcommand("seq", "sequential revenue under a fixed ordering");
    std::string seq_graph, seq_ordering, seq_dist = "uniform:0,1", seq_out;
    double seq_p = 0.5;
    seq->add_option("--graph", seq_graph, "graph json path")->required();
    seq->add_option("--ordering", seq_ordering, "ordering json array (default identity)");
    seq->add_option("--dist", seq_dist, "value distribution");
    seq->add_option("--p", seq_p, "posted price");
    seq->add_option("--out", seq_out, "output path (default stdout)");

    // seq-clique
    auto* seqc = app.add_subcommand("seq-clique", "sequential pricing on the n-clique");
    int seqc_n = 10, seqc_restarts = 8;
    bool seqc_commit = false;
    std::uint64_t seqc_seed = 7;
    std::string seqc_out;
    seqc->add_option("--n", seqc_n, "clique size")->required();
    seqc->add_flag("--commit", seqc_commit, "optimize a committed price vector");
    seqc->add_option("--restarts", seqc_restarts, "optimizer restarts");
    seqc->add_option("--seed", seqc_seed, "optimizer seed");
    seqc->add_option("--out", seqc_out, "output path (default stdout)");

    // sim
    auto* sim = app.add_subcommand("sim", "Monte Carlo playout of a threshold profile");
    std::string sim_graph, sim_thresholds, sim_dist = "uniform:0,1", sim_price_file, sim_out,
                sim_csv;
    double sim_price = 0.5;
    long sim_trials = 100000;
    std::uint64_t sim_seed = 7;
    sim->add_option("--graph", sim_graph, "graph json path")->required();
    sim->add_option("--thresholds", sim_thresholds,
                    "thresholds json array (numbers or \"never\"); default: solve");
    sim->add_option("--dist", sim_dist, "value distribution");
    sim->add_option("--price", sim_price, "uniform price");
    sim->add_option("--price-file", sim_price_file, "per-node price json array");
    sim->add_option("--trials", sim_trials, "trial count");
    sim->add_option("--seed", sim_seed, "stream seed");
    sim->add_option("--csv", sim_csv, "write leading per-trial outcomes as csv");
    sim->add_option("--out", sim_out, "output path (default stdout)");

    // repro
    auto* rep = app.add_subcommand("repro", "run a named reproduction experiment");
    std::string rep_name, rep_out, rep_format = "json";
    ReproOptions rep_opt;
    rep->add_option("name", rep_name, "experiment name or 'all'")->required();
    rep->add_option("--seed", rep_opt.seed, "experiment seed");
    rep->add_option("--N", rep_opt.pentagon_n, "pentagon-gap group size override");
    rep->add_option("--p", rep_opt.pentagon_p, "pentagon-gap price");
    rep->add_option("--format", rep_format, "json|csv table output");
    rep->add_option("--out", rep_out, "table output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (gen->parsed()) {
        Graph g = generate(gen_kind, gp);
        emit(graph_to_json(g), gen_out);
        return kExitOk;
    }

    if (sat->parsed()) {
        ReductionSpec spec{load_cnf(sat_cnf), sat_L, sat_budget};
        emit(graph_to_json(sat_reduction(spec)), sat_out);
        return kExitOk;
    }

    if (eq->parsed()) {
        std::vector<std::string> warnings;
        Graph g = load_graph(eq_graph, &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        ValueDistribution dist = ValueDistribution::parse(eq_dist);
        PriceVector prices = load_prices(g.node_count(), eq_price, eq_price_file);
        SolveOptions opt;
        opt.tol = eq_tol;
        ThresholdVector t;
        try {
            t = solve_fixed_point(g, dist, prices, opt);
        } catch (const std::runtime_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitValidation;
        }
        RevenueReport report = expected_revenue(prices, t, dist);
        if (g.is_clique() && g.node_count() >= 1) {
            try {
                report.annotations["myerson_upper_bound"] =
                    myerson_upper_bound(dist, g.node_count());
            } catch (const std::exception&) {
                // non-regular distribution: no quadrature bound
            }
        }
        emit(revenue_report_to_json(report), eq_out);
        return kExitOk;
    }

    if (price->parsed()) {
        ValueDistribution dist = ValueDistribution::parse(price_dist);
        PriceRecommendation rec;
        if (price_setting == "clique") {
            rec = price_clique(dist, price_n);
        } else if (price_setting == "d-regular") {
            rec = price_d_regular(dist, price_d);
        } else if (price_setting == "uniform-general") {
            rec = price_uniform_general(dist);
        } else {
            throw std::invalid_argument("unknown setting: " + price_setting);
        }
        emit(price_recommendation_to_json(rec), price_out);
        return kExitOk;
    }

    if (wc->parsed()) {
        Graph g = load_graph(wc_graph);
        if (wc_exact && wc_bounds) {
            throw std::invalid_argument("choose one of --exact / --bounds");
        }
        WorstCaseResult r = (wc_bounds || (!wc_exact && g.node_count() > 16))
                                ? worst_case_revenue_bounds(g, wc_p)
                                : worst_case_revenue_exact(g, wc_p);
        emit(worst_case_to_json(r), wc_out);
        return kExitOk;
    }

    if (hard->parsed()) {
        ReductionSpec spec{load_cnf(hard_cnf), hard_L};
        emit(hardness_to_json(hardness_experiment(spec)), hard_out);
        return kExitOk;
    }

    if (seq->parsed()) {
        Graph g = load_graph(seq_graph);
        ValueDistribution dist = ValueDistribution::parse(seq_dist);
        Ordering order;
        if (seq_ordering.empty()) {
            for (int i = 0; i < g.node_count(); ++i) order.push_back(i);
        } else {
            json arr = json::parse(read_file(seq_ordering));
            for (const auto& v : arr) order.push_back(v.get<int>());
        }
        SequentialRevenue r = sequential_revenue(g, order, dist, seq_p);
        std::vector<int> live = live_set(g, order);
        std::vector<int> greedy = greedy_reverse_mis(g, order);
        json j;
        j["price"] = seq_p;
        j["live_set"] = live;
        j["revenue"] = r.revenue;
        j["optimal_price"] = r.optimal_price;
        j["optimal_revenue"] = r.optimal_revenue;
        j["greedy_reverse_set"] = greedy;
        j["rule_mismatch"] = live != greedy;  // diagnostic: the two rules can disagree
        emit(j.dump(2) + "\n", seq_out);
        return kExitOk;
    }

    if (seqc->parsed()) {
        if (seqc_commit) {
            CommittedOptimum com = clique_committed_optimum(seqc_n, seqc_restarts, seqc_seed);
            json j;
            j["prices"] = com.prices;
            j["thresholds"] = com.thresholds;
            j["revenue"] = com.revenue;
            j["stagnated"] = com.stagnated;
            emit(j.dump(2) + "\n", seqc_out);
        } else {
            emit(sequential_policy_to_json(clique_subgame_perfect(seqc_n)), seqc_out);
        }
        return kExitOk;
    }

    if (sim->parsed()) {
        Graph g = load_graph(sim_graph);
        ValueDistribution dist = ValueDistribution::parse(sim_dist);
        PriceVector prices = load_prices(g.node_count(), sim_price, sim_price_file);
        ThresholdVector t = sim_thresholds.empty()
                                ? solve_fixed_point(g, dist, prices)
                                : thresholds_from_json(read_file(sim_thresholds));
        if (t.size() != g.node_count()) {
            throw std::invalid_argument("threshold count does not match the graph");
        }
        SimulateOptions sopt;
        if (!sim_csv.empty()) sopt.sample_cap = static_cast<int>(std::min<long>(sim_trials, 10000));
        SimulationSummary s = simulate(g, dist, prices, t, sim_trials, sim_seed, sopt);
        if (!sim_csv.empty()) {
            std::ofstream csv(sim_csv);
            if (!csv) throw std::invalid_argument("cannot write csv: " + sim_csv);
            csv << "trial,revenue,welfare_public,welfare_hipster,buyers\n";
            for (std::size_t i = 0; i < s.sampled_outcomes.size(); ++i) {
                const Outcome& o = s.sampled_outcomes[i];
                csv << i << "," << o.revenue_realized << "," << o.welfare_public << ","
                    << o.welfare_hipster << ",";
                for (std::size_t b = 0; b < o.buyers.size(); ++b) {
                    csv << (b ? ";" : "") << o.buyers[b];
                }
                csv << "\n";
            }
        }
        json j;
        j["trials"] = s.trials;
        j["mean_revenue"] = s.mean_revenue;
        j["stderr_revenue"] = s.stderr_revenue;
        j["mean_welfare_public"] = s.mean_welfare_public;
        j["stderr_welfare_public"] = s.stderr_welfare_public;
        j["mean_welfare_hipster"] = s.mean_welfare_hipster;
        j["stderr_welfare_hipster"] = s.stderr_welfare_hipster;
        emit(j.dump(2) + "\n", sim_out);
        return kExitOk;
    }

    if (rep->parsed()) {
        std::vector<ExperimentResult> results;
        if (rep_name == "all") {
            results = run_all_repro(rep_opt);
        } else {
            results.push_back(run_repro(rep_name, rep_opt));
        }
        bool all_pass = true;
        json tables = json::object();
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.seconds
                      << "s): " << r.detail << "\n";
            all_pass = all_pass && r.pass;
            tables[r.name] = r.table;
        }
        if (!rep_out.empty()) {
            if (rep_format == "csv") {
                std::string text;
                for (const auto& r : results) text += table_to_csv(r.table);
                emit(text, rep_out);
            } else {
                emit(tables.dump(2) + "\n", rep_out);
            }
        }
        return all_pass ? kExitOk : kExitValidation;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
