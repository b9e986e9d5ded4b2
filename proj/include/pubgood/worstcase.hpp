#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pubgood/cnf.hpp"
#include "pubgood/equilibrium.hpp"
#include "pubgood/graph.hpp"

namespace pubgood {

struct MinSumOptions {
    int max_nodes = 100;
    long max_search_nodes = 5000000;
};

struct MinSumResult {
    double value = 0.0;
    FeasibleAssignment argmin;
};

/// Exact min of sum(x) over the program-X feasible set: branch and bound on
/// the per-node disjunction (x_i = 0 or closed sum = 1) with LP relaxations.
MinSumResult min_sum_x(const Graph& g, const MinSumOptions& opt = {});

struct VertexOptions {
    int max_nodes = 16;
};

/// All extreme points of the program-X feasible set (union over support
/// pieces). Exhaustive support enumeration: 2^n pieces, so small n only.
std::vector<FeasibleAssignment> equilibrium_vertices(const Graph& g,
                                                     const VertexOptions& opt = {});

struct WorstCaseResult {
    double price = 0.0;
    double min_sum_x = 0.0;
    double lower_bound = 0.0;  // p (1-p) min_sum_x
    double upper_bound = 0.0;  // p log(1/p) min_sum_x
    std::optional<double> exact_min_revenue;
    std::optional<FeasibleAssignment> argmin;
    bool boundary_flagged = false;  // some argmin coordinate sits on both branch closures
};

/// Exact worst-case revenue at uniform price p for uniform(0,1) values:
/// minimizes the concave objective p sum(1 - exp(-x_i log(1/p))) over the
/// program-X vertices. The argmin maps back to a verified equilibrium.
WorstCaseResult worst_case_revenue_exact(const Graph& g, double p, const VertexOptions& opt = {});

/// Same result with bounds only, from the single combinatorial quantity
/// min_sum_x.
WorstCaseResult worst_case_revenue_bounds(const Graph& g, double p, const MinSumOptions& opt = {});

/// Concave objective of the transformed program at price p.
double x_objective(const std::vector<double>& x, double p);

struct HardnessResult {
    double min_sum_x = 0.0;
    double low_threshold = 0.0;   // 3m
    double high_threshold = 0.0;  // 3m + k^L
    bool satisfiable_verdict = false;  // true when min == 3m ("low")
    bool gadget_integrality = true;    // every (x_T, x_F) pair in {(0,1),(1,0),(0,0)}
    FeasibleAssignment argmin;
};

/// Runs the reduction and classifies min_sum_x against the 3m vs 3m + k^L
/// separation; also checks the 0/1 structure of the variable gadgets.
HardnessResult hardness_experiment(const ReductionSpec& spec, const MinSumOptions& opt = {});

std::string worst_case_to_json(const WorstCaseResult& r);
std::string hardness_to_json(const HardnessResult& r);

}  // namespace pubgood
