#include "pubgood/worstcase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "pubgood/detail/simplex.hpp"

namespace pubgood {

using nlohmann::json;

namespace {

constexpr double kTol = 1e-9;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<double> snap(std::vector<double> x) {
    for (double& v : x) {
        if (std::fabs(v) < 1e-11) v = 0.0;
        if (std::fabs(v - 1.0) < 1e-11) v = 1.0;
    }
    return x;
}

// x = indicator of a maximal independent set is always feasible for the
// program: members have closed sum exactly 1, non-members are dominated.
std::vector<double> greedy_mis_assignment(const Graph& g, bool high_degree_first) {
    int n = g.node_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return high_degree_first ? g.degree(a) > g.degree(b) : g.degree(a) < g.degree(b);
    });
    std::vector<char> blocked(n, 0);
    std::vector<double> x(n, 0.0);
    for (int i : order) {
        if (blocked[i]) continue;
        x[i] = 1.0;
        blocked[i] = 1;
        for (int j : g.neighbors(i)) blocked[j] = 1;
    }
    return x;
}

struct BnbContext {
    const Graph& g;
    long budget;
    long used = 0;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;

    // state: 0 undecided, 1 forced zero, 2 forced tight
    void run(std::vector<char>& state) {
        if (++used > budget) {
            throw std::runtime_error("min_sum_x search budget exhausted");
        }
        int n = g.node_count();
        detail::SimpleLp lp(n);
        lp.set_objective(std::vector<double>(n, 1.0));
        for (int i = 0; i < n; ++i) {
            std::vector<std::pair<int, double>> terms{{i, 1.0}};
            for (int j : g.neighbors(i)) terms.emplace_back(j, 1.0);
            lp.add_row(std::move(terms), state[i] == 2 ? '=' : '>', 1.0);
        }
        for (int i = 0; i < n; ++i) {
            lp.add_row({{i, 1.0}}, '<', state[i] == 1 ? 0.0 : 1.0);
        }
        detail::LpResult res = lp.solve();
        if (res.status == detail::LpStatus::Infeasible) return;
        if (res.status != detail::LpStatus::Optimal) {
            throw std::runtime_error("min_sum_x: internal LP did not terminate");
        }
        if (res.objective >= best_value - 1e-9) return;

        // Most-violated complementarity node, if any.
        int pick = -1;
        double worst = 1e-9;
        std::vector<double> sums(n, 0.0);
        for (int i = 0; i < n; ++i) {
            double s = res.x[i];
            for (int j : g.neighbors(i)) s += res.x[j];
            sums[i] = s;
        }
        for (int i = 0; i < n; ++i) {
            if (state[i] != 0) continue;
            double v = std::min(res.x[i], sums[i] - 1.0);
            if (v > worst) {
                worst = v;
                pick = i;
            }
        }
        if (pick < 0) {
            std::vector<double> x = snap(res.x);
            FeasibleAssignment a = make_assignment(g, x);
            if (assignment_feasible(g, a, 1e-7)) {
                double value = a.sum();
                if (value < best_value) {
                    best_value = value;
                    best_x = std::move(a.x);
                }
            }
            return;
        }
        state[pick] = 1;
        run(state);
        state[pick] = 2;
        run(state);
        state[pick] = 0;
    }
};

}  // namespace

MinSumResult min_sum_x(const Graph& g, const MinSumOptions& opt) {
    int n = g.node_count();
    if (n > opt.max_nodes) {
        fail("min_sum_x limited to " + std::to_string(opt.max_nodes) +
             " nodes (got " + std::to_string(n) + "); use the bounds-only path for larger graphs");
    }
    if (n == 0) return {0.0, {}};

    BnbContext ctx{g, opt.max_search_nodes};
    // Incumbents from maximal independent sets, both degree orders.
    for (bool hi : {true, false}) {
        FeasibleAssignment a = make_assignment(g, greedy_mis_assignment(g, hi));
        if (!assignment_feasible(g, a, kTol)) {
            throw std::runtime_error("min_sum_x: maximal-independent-set seed infeasible");
        }
        if (a.sum() < ctx.best_value) {
            ctx.best_value = a.sum();
            ctx.best_x = a.x;
        }
    }
    std::vector<char> state(n, 0);
    ctx.run(state);
    if (ctx.best_x.empty()) {
        throw std::runtime_error("min_sum_x: feasible set unexpectedly empty");
    }
    MinSumResult out;
    out.argmin = make_assignment(g, ctx.best_x);
    if (!assignment_feasible(g, out.argmin, 1e-7)) {
        throw std::runtime_error("min_sum_x: argmin failed the feasibility invariants");
    }
    out.value = out.argmin.sum();
    return out;
}

std::vector<FeasibleAssignment> equilibrium_vertices(const Graph& g, const VertexOptions& opt) {
    int n = g.node_count();
    if (n > opt.max_nodes) {
        fail("vertex enumeration limited to " + std::to_string(opt.max_nodes) + " nodes (got " +
             std::to_string(n) + ")");
    }
    if (n == 0) return {};
    if (n >= 31) fail("vertex enumeration uses 32-bit support masks");

    std::vector<std::vector<int>> closed(n);
    for (int i = 0; i < n; ++i) {
        closed[i] = g.neighbors(i);
        closed[i].push_back(i);
    }

    std::map<std::vector<long>, FeasibleAssignment> found;
    auto consider = [&](std::vector<double> xfull) {
        xfull = snap(std::move(xfull));
        FeasibleAssignment a = make_assignment(g, std::move(xfull));
        if (!assignment_feasible(g, a, kTol)) return;
        std::vector<long> key(n);
        for (int i = 0; i < n; ++i) key[i] = std::lround(a.x[i] * 1e7);
        found.emplace(std::move(key), std::move(a));
    };

    std::vector<int> support;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        support.clear();
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) support.push_back(i);
        }
        int s = static_cast<int>(support.size());
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(s, s);
        for (int r = 0; r < s; ++r) {
            for (int c = 0; c < s; ++c) {
                int i = support[r], j = support[c];
                if (i == j || g.has_edge(i, j)) A(r, c) = 1.0;
            }
        }
        Eigen::VectorXd b = Eigen::VectorXd::Ones(s);
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
        Eigen::VectorXd xp = cod.solve(b);
        if ((A * xp - b).lpNorm<Eigen::Infinity>() > 1e-8) continue;  // inconsistent support
        int rank = static_cast<int>(cod.rank());
        int k = s - rank;

        auto expand = [&](const Eigen::VectorXd& xs) {
            std::vector<double> xfull(n, 0.0);
            for (int r = 0; r < s; ++r) xfull[support[r]] = xs(r);
            return xfull;
        };

        if (k == 0) {
            consider(expand(xp));
            continue;
        }

        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        Eigen::MatrixXd N = lu.kernel();  // s x k
        if (N.cols() != k) k = static_cast<int>(N.cols());

        // Candidate active rows in the k-dimensional residual space. Vertices
        // with a zero coordinate inside the support are vertices of the
        // smaller support's piece, so only upper bounds and off-support tight
        // rows are needed here.
        std::vector<Eigen::VectorXd> rows;
        std::vector<double> rhs;
        for (int r = 0; r < s; ++r) {
            rows.push_back(N.row(r).transpose());
            rhs.push_back(1.0 - xp(r));
        }
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) continue;
            Eigen::RowVectorXd ai = Eigen::RowVectorXd::Zero(s);
            for (int r = 0; r < s; ++r) {
                int j = support[r];
                if (j == i || g.has_edge(i, j)) ai(r) = 1.0;
            }
            rows.push_back((ai * N).transpose());
            rhs.push_back(1.0 - ai * xp);
        }
        int total = static_cast<int>(rows.size());
        double combos = 1.0;
        for (int i = 0; i < k; ++i) combos *= static_cast<double>(total - i) / (i + 1);
        if (combos > 5e6) {
            fail("vertex enumeration: support too degenerate (active-set combinations exceed 5e6)");
        }
        std::vector<int> pickrows(k);
        std::function<void(int, int)> choose = [&](int start, int depth) {
            if (depth == k) {
                Eigen::MatrixXd M(k, k);
                Eigen::VectorXd d(k);
                for (int r = 0; r < k; ++r) {
                    M.row(r) = rows[pickrows[r]].transpose();
                    d(r) = rhs[pickrows[r]];
                }
                Eigen::FullPivLU<Eigen::MatrixXd> msol(M);
                if (msol.rank() < k) return;
                Eigen::VectorXd z = msol.solve(d);
                consider(expand(xp + N * z));
                return;
            }
            for (int r = start; r < total; ++r) {
                pickrows[depth] = r;
                choose(r + 1, depth + 1);
            }
        };
        choose(0, 0);
    }

    std::vector<FeasibleAssignment> out;
    out.reserve(found.size());
    for (auto& [key, a] : found) out.push_back(std::move(a));
    return out;
}

double x_objective(const std::vector<double>& x, double p) {
    double logp = std::log(1.0 / p);
    double total = 0.0;
    for (double xi : x) total += 1.0 - std::exp(-xi * logp);
    return p * total;
}

WorstCaseResult worst_case_revenue_exact(const Graph& g, double p, const VertexOptions& opt) {
    if (!(p >= 1e-6 && p <= 1.0 - 1e-6)) {
        fail("worst-case revenue requires p in [1e-6, 1-1e-6]");
    }
    std::vector<FeasibleAssignment> verts = equilibrium_vertices(g, opt);
    if (verts.empty()) {
        throw std::runtime_error("worst_case_revenue_exact: no feasible vertices found");
    }
    WorstCaseResult out;
    out.price = p;
    double best = std::numeric_limits<double>::infinity();
    double best_sum = std::numeric_limits<double>::infinity();
    const FeasibleAssignment* best_a = nullptr;
    for (const auto& a : verts) {
        double r = x_objective(a.x, p);
        if (r < best) {
            best = r;
            best_a = &a;
        }
        best_sum = std::min(best_sum, a.sum());
    }
    out.min_sum_x = best_sum;
    out.lower_bound = p * (1.0 - p) * best_sum;
    out.upper_bound = p * std::log(1.0 / p) * best_sum;
    out.exact_min_revenue = best;
    out.argmin = *best_a;
    for (int i = 0; i < g.node_count(); ++i) {
        if (best_a->x[i] < 1e-9 && std::fabs(best_a->closed_nbhd_sums[i] - 1.0) <= 1e-9) {
            out.boundary_flagged = true;  // point sits on the closure of both branches
        }
    }

    // The argmin must map back to a verified equilibrium of the game.
    ThresholdVector t = thresholds_from_x(best_a->x, p);
    auto uniform01 = ValueDistribution::uniform(0.0, 1.0);
    PriceVector prices = PriceVector::uniform(g.node_count(), p);
    VerifyResult check = verify_equilibrium(g, uniform01, prices, t, 1e-8);
    if (!check.valid) {
        throw std::runtime_error(
            "worst_case_revenue_exact: argmin failed equilibrium verification, residual " +
            std::to_string(check.residual));
    }
    return out;
}

WorstCaseResult worst_case_revenue_bounds(const Graph& g, double p, const MinSumOptions& opt) {
    if (!(p >= 1e-6 && p <= 1.0 - 1e-6)) {
        fail("worst-case revenue requires p in [1e-6, 1-1e-6]");
    }
    MinSumResult ms = min_sum_x(g, opt);
    WorstCaseResult out;
    out.price = p;
    out.min_sum_x = ms.value;
    out.lower_bound = p * (1.0 - p) * ms.value;
    out.upper_bound = p * std::log(1.0 / p) * ms.value;
    out.argmin = std::move(ms.argmin);
    return out;
}

HardnessResult hardness_experiment(const ReductionSpec& spec, const MinSumOptions& opt) {
    Graph g = sat_reduction(spec);
    MinSumResult ms = min_sum_x(g, opt);
    HardnessResult out;
    out.min_sum_x = ms.value;
    out.low_threshold = 3.0 * spec.formula.num_vars;
    out.high_threshold = out.low_threshold + static_cast<double>(spec.clause_multiplicity());
    out.argmin = std::move(ms.argmin);

    if (ms.value <= out.low_threshold + 0.5) {
        out.satisfiable_verdict = true;
    } else if (ms.value >= out.high_threshold - 1e-6) {
        out.satisfiable_verdict = false;
    } else {
        throw std::runtime_error(
            "hardness experiment: min_sum_x fell strictly between the separation thresholds");
    }

    for (int v = 0; v < spec.formula.num_vars; ++v) {
        double xu = out.argmin.x[6 * v], xv = out.argmin.x[6 * v + 1];
        auto binary = [](double z) { return std::fabs(z) < 1e-6 || std::fabs(z - 1.0) < 1e-6; };
        bool ok = binary(xu) && binary(xv) && !(xu > 0.5 && xv > 0.5);
        if (!ok) out.gadget_integrality = false;
    }
    return out;
}

std::string worst_case_to_json(const WorstCaseResult& r) {
    json j;
    j["price"] = r.price;
    j["min_sum_x"] = r.min_sum_x;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    if (r.exact_min_revenue) j["exact_min_revenue"] = *r.exact_min_revenue;
    if (r.argmin) {
        j["argmin_x"] = r.argmin->x;
        j["argmin_support"] = r.argmin->support;
    }
    j["boundary_flagged"] = r.boundary_flagged;
    return j.dump(2) + "\n";
}

std::string hardness_to_json(const HardnessResult& r) {
    json j;
    j["min_sum_x"] = r.min_sum_x;
    j["low_threshold"] = r.low_threshold;
    j["high_threshold"] = r.high_threshold;
    j["verdict"] = r.satisfiable_verdict ? "low" : "high";
    j["gadget_integrality"] = r.gadget_integrality;
    j["argmin_x"] = r.argmin.x;
    return j.dump(2) + "\n";
}

}  // namespace pubgood
