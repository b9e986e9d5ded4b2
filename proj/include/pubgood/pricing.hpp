#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pubgood/distribution.hpp"
#include "pubgood/graph.hpp"

namespace pubgood {

enum class PriceSetting { Clique, DRegular, UniformGeneral };

struct PriceRecommendation {
    double price = 0.0;
    PriceSetting setting = PriceSetting::Clique;
    int parameter = 0;           // n for cliques, d for d-regular graphs
    double threshold_t = 0.0;    // F^{-1}(1-1/n) resp. F^{-1}(1-1/d); 0 when not applicable
    double guarantee_factor = 0.0;
    std::string guarantee_note;
    std::optional<double> symmetric_revenue;  // clique: n T (1-F(T)) F(T)^{n-1}
};

/// Clique price F^{-1}(1-1/n) (1-1/n)^{n-1}: every equilibrium at this price
/// earns a constant fraction of the best revenue of any price vector.
PriceRecommendation price_clique(const ValueDistribution& dist, int n);

/// Degree-only price F^{-1}(1-1/d) (1-1/d)^d for d-regular graphs; competitive
/// against the worst-case revenue of any network-specific uniform price.
PriceRecommendation price_d_regular(const ValueDistribution& dist, int d);

/// Uniform(0,1) values on an arbitrary network: price 1/2, within e/4 of the
/// best uniform price's worst-case revenue.
PriceRecommendation price_uniform_general(const ValueDistribution& dist);

/// R^M_n: no equilibrium of any price vector on the clique beats it.
double myerson_upper_bound(const ValueDistribution& dist, int n);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    int trials = 0;
};

/// Monte Carlo E[MWIS] with exact per-sample solves; an upper bound on the
/// revenue of every equilibrium on g. Requires n <= 25.
MonteCarloEstimate mwis_upper_bound(const Graph& g, const ValueDistribution& dist, int trials,
                                    std::uint64_t seed);

std::string price_recommendation_to_json(const PriceRecommendation& rec);

}  // namespace pubgood
