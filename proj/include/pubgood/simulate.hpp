#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pubgood/distribution.hpp"
#include "pubgood/equilibrium.hpp"
#include "pubgood/graph.hpp"

namespace pubgood {

/// One realized play of the game.
struct Outcome {
    std::vector<double> values;
    std::vector<int> buyers;        // S = {i : v_i >= T_i}
    double revenue_realized = 0.0;  // identical under public-goods and hipster utilities
    double welfare_public = 0.0;
    double welfare_hipster = 0.0;
};

struct SimulationSummary {
    long trials = 0;
    double mean_revenue = 0.0, stderr_revenue = 0.0;
    double mean_welfare_public = 0.0, stderr_welfare_public = 0.0;
    double mean_welfare_hipster = 0.0, stderr_welfare_hipster = 0.0;
    std::vector<Outcome> sampled_outcomes;  // first sample_cap trials when requested
};

struct SimulateOptions {
    int sample_cap = 0;  // keep this many leading per-trial outcomes
};

/// Plays `trials` i.i.d. games. Values come from counter-based per-agent
/// streams, so aggregates are bit-identical for a given seed regardless of
/// the worker count.
SimulationSummary simulate(const Graph& g, const ValueDistribution& dist,
                           const PriceVector& prices, const ThresholdVector& t, long trials,
                           std::uint64_t seed, const SimulateOptions& opt = {});

Outcome play_once(const Graph& g, const ValueDistribution& dist, const PriceVector& prices,
                  const ThresholdVector& t, std::uint64_t seed, std::uint64_t trial);

struct MwisResult {
    double weight = 0.0;
    std::vector<int> set;
};

/// Exact maximum weighted independent set, branch-and-bound with
/// degree-ordered branching. Limited to n <= 25.
MwisResult mwis_exact(const Graph& g, std::span<const double> weights);

struct HipsterCheck {
    long violations = 0;          // trials where hipster welfare exceeded the MWIS weight
    long revenue_mismatches = 0;  // trials where the two games' revenue streams differed
    double mean_revenue = 0.0;
    double mwis_mean = 0.0;
    double mwis_stderr = 0.0;
};

/// Per-trial pointwise check: hipster welfare <= MWIS(values), and the public
/// and hipster revenue streams agree bit for bit.
HipsterCheck check_hipster_welfare_bound(const Graph& g, const ValueDistribution& dist,
                                         const PriceVector& prices, const ThresholdVector& t,
                                         long trials, std::uint64_t seed);

}  // namespace pubgood
