#include "pubgood/pricing.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pubgood/detail/rng.hpp"
#include "pubgood/simulate.hpp"

namespace pubgood {

using nlohmann::json;

PriceRecommendation price_clique(const ValueDistribution& dist, int n) {
    if (n < 2) {
        throw std::invalid_argument(
            "clique pricing requires n >= 2; for a single agent use the Myerson reserve");
    }
    PriceRecommendation rec;
    rec.setting = PriceSetting::Clique;
    rec.parameter = n;
    rec.threshold_t = dist.quantile(1.0 - 1.0 / n);
    rec.price = rec.threshold_t * std::pow(1.0 - 1.0 / n, n - 1);
    double ft = 1.0 - 1.0 / n;
    rec.symmetric_revenue = n * rec.threshold_t * (1.0 - ft) * std::pow(ft, n - 1);
    rec.guarantee_factor = 0.25;
    rec.guarantee_note =
        "every equilibrium at this price earns at least 1/4 of the optimal single-item "
        "revenue bound for n bidders";
    return rec;
}

PriceRecommendation price_d_regular(const ValueDistribution& dist, int d) {
    if (d <= 1) {
        throw std::invalid_argument(
            "d-regular pricing is degenerate for d <= 1: F^{-1}(0) sits at the support edge");
    }
    PriceRecommendation rec;
    rec.setting = PriceSetting::DRegular;
    rec.parameter = d;
    rec.threshold_t = dist.quantile(1.0 - 1.0 / d);
    rec.price = rec.threshold_t * std::pow(1.0 - 1.0 / d, d);
    rec.guarantee_factor = 1.0 / 16.0;
    rec.guarantee_note =
        "worst-case revenue at this price is a constant fraction of the worst-case revenue "
        "of any network-specific uniform price, for every d-regular graph";
    return rec;
}

PriceRecommendation price_uniform_general(const ValueDistribution& dist) {
    if (dist.kind() != ValueDistribution::Kind::Uniform || dist.support_lo() != 0.0 ||
        dist.support_hi() != 1.0) {
        throw std::domain_error(
            "the general-network price guarantee holds for uniform(0,1) values only");
    }
    PriceRecommendation rec;
    rec.setting = PriceSetting::UniformGeneral;
    rec.price = 0.5;
    rec.threshold_t = 0.0;
    rec.guarantee_factor = std::exp(1.0) / 4.0;
    rec.guarantee_note =
        "on any network, worst-case revenue at price 1/2 is at least e/4 of the best "
        "uniform price's worst-case revenue";
    return rec;
}

double myerson_upper_bound(const ValueDistribution& dist, int n) {
    return myerson_revenue_n(dist, n).revenue;
}

MonteCarloEstimate mwis_upper_bound(const Graph& g, const ValueDistribution& dist, int trials,
                                    std::uint64_t seed) {
    int n = g.node_count();
    if (n > 25) {
        throw std::invalid_argument(
            "mwis_upper_bound needs exact per-sample solves and supports at most 25 nodes; "
            "omit the sampling bound for larger graphs");
    }
    if (trials < 1) throw std::invalid_argument("mwis_upper_bound requires trials >= 1");
    double sum = 0.0, sumsq = 0.0;
    std::vector<double> values(n);
    for (int trial = 0; trial < trials; ++trial) {
        for (int i = 0; i < n; ++i) {
            values[i] = dist.quantile(detail::unit_draw(seed, trial, static_cast<std::uint64_t>(i)));
        }
        double w = mwis_exact(g, values).weight;
        sum += w;
        sumsq += w * w;
    }
    MonteCarloEstimate est;
    est.trials = trials;
    est.estimate = sum / trials;
    double var = trials > 1 ? std::max(0.0, (sumsq - sum * sum / trials) / (trials - 1)) : 0.0;
    est.stderr_ = std::sqrt(var / trials);
    return est;
}

std::string price_recommendation_to_json(const PriceRecommendation& rec) {
    json j;
    j["price"] = rec.price;
    switch (rec.setting) {
        case PriceSetting::Clique:
            j["setting"] = "clique";
            j["n"] = rec.parameter;
            j["threshold_T"] = rec.threshold_t;
            break;
        case PriceSetting::DRegular:
            j["setting"] = "d-regular";
            j["d"] = rec.parameter;
            j["threshold_T"] = rec.threshold_t;
            break;
        case PriceSetting::UniformGeneral:
            j["setting"] = "uniform-general";
            break;
    }
    j["guarantee_factor"] = rec.guarantee_factor;
    j["guarantee_note"] = rec.guarantee_note;
    if (rec.symmetric_revenue) j["symmetric_revenue"] = *rec.symmetric_revenue;
    return j.dump(2) + "\n";
}

}  // namespace pubgood
