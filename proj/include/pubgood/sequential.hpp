#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pubgood/distribution.hpp"
#include "pubgood/graph.hpp"

namespace pubgood {

/// Visiting order: a permutation of 0..n-1; each player is approached once.
using Ordering = std::vector<int>;

void validate_ordering(const Graph& g, const Ordering& order);

/// Players whose whole neighborhood is approached before them: the only ones
/// who consider buying under the fixed-order rule. Always an independent set.
std::vector<int> live_set(const Graph& g, const Ordering& order);

struct SequentialRevenue {
    double revenue = 0.0;        // |live| * p * (1 - F(p))
    int live_count = 0;
    double optimal_price = 0.0;  // the Myerson reserve
    double optimal_revenue = 0.0;
};

SequentialRevenue sequential_revenue(const Graph& g, const Ordering& order,
                                     const ValueDistribution& dist, double p);

struct BestOrdering {
    double revenue = 0.0;
    Ordering ordering;
    int mis_size = 0;  // independence number alpha(G)
};

/// Best revenue over orderings: alpha(G) times the single-agent reserve
/// revenue, achieved by approaching a maximum independent set last.
/// Exact MIS via branch and bound; n <= 25.
BestOrdering best_ordering_revenue(const Graph& g, const ValueDistribution& dist);

/// Maximal independent set built greedily along the reverse of the ordering.
/// Can differ from live_set (diagnostic for the ordering-rule mismatch).
std::vector<int> greedy_reverse_mis(const Graph& g, const Ordering& order);

struct SequentialPolicy {
    std::vector<double> prices;       // per stage, first approached first
    std::vector<double> thresholds;
    std::vector<double> sale_probs;   // unconditional per-stage sale probability
    double total_revenue = 0.0;
};

/// Subgame-perfect seller on the n-clique with uniform(0,1) values: backward
/// induction over the number of players remaining.
SequentialPolicy clique_subgame_perfect(int n);

/// prod_{k=1..n} (1 - 2^{-k}): the subgame-perfect first price, in closed form.
double pn_formula(int n);

struct CommittedOptimum {
    std::vector<double> prices;
    std::vector<double> thresholds;
    double revenue = 0.0;
    bool stagnated = false;
};

/// Best committed price vector on the n-clique, uniform(0,1): induced
/// thresholds by backward substitution, revenue maximized by multi-start
/// coordinate descent plus pattern search. Deterministic given the seed.
CommittedOptimum clique_committed_optimum(int n, int restarts, std::uint64_t seed);

std::string sequential_policy_to_json(const SequentialPolicy& p);

}  // namespace pubgood
