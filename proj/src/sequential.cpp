#include "pubgood/sequential.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pubgood/detail/parallel.hpp"
#include "pubgood/detail/quadrature.hpp"
#include "pubgood/simulate.hpp"

namespace pubgood {

using nlohmann::json;

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

void validate_ordering(const Graph& g, const Ordering& order) {
    int n = g.node_count();
    if (static_cast<int>(order.size()) != n) fail("ordering must list every node exactly once");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) fail("ordering is not a permutation of the nodes");
        seen[v] = 1;
    }
}

std::vector<int> live_set(const Graph& g, const Ordering& order) {
    validate_ordering(g, order);
    int n = g.node_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<int> live;
    for (int i = 0; i < n; ++i) {
        bool last = true;
        for (int j : g.neighbors(i)) {
            if (pos[j] > pos[i]) {
                last = false;
                break;
            }
        }
        if (last) live.push_back(i);
    }
    // A live pair cannot be adjacent: each would have to precede the other.
    for (std::size_t a = 0; a < live.size(); ++a) {
        for (std::size_t b = a + 1; b < live.size(); ++b) {
            if (g.has_edge(live[a], live[b])) {
                throw std::runtime_error("live set is not independent (internal error)");
            }
        }
    }
    return live;
}

SequentialRevenue sequential_revenue(const Graph& g, const Ordering& order,
                                     const ValueDistribution& dist, double p) {
    SequentialRevenue out;
    out.live_count = static_cast<int>(live_set(g, order).size());
    out.revenue = out.live_count * p * dist.survival(p);
    out.optimal_price = myerson_reserve(dist);
    out.optimal_revenue = out.live_count * out.optimal_price * dist.survival(out.optimal_price);
    return out;
}

BestOrdering best_ordering_revenue(const Graph& g, const ValueDistribution& dist) {
    int n = g.node_count();
    if (n > 25) fail("best_ordering_revenue supports at most 25 nodes");
    std::vector<double> unit(n, 1.0);
    MwisResult mis = mwis_exact(g, unit);
    BestOrdering out;
    out.mis_size = static_cast<int>(mis.set.size());
    std::vector<char> in_mis(n, 0);
    for (int v : mis.set) in_mis[v] = 1;
    for (int i = 0; i < n; ++i) {
        if (!in_mis[i]) out.ordering.push_back(i);
    }
    for (int v : mis.set) out.ordering.push_back(v);
    double r = myerson_reserve(dist);
    out.revenue = out.mis_size * r * dist.survival(r);

    // The chosen ordering realizes alpha(G) live players.
    if (static_cast<int>(live_set(g, out.ordering).size()) != out.mis_size) {
        throw std::runtime_error("best ordering does not realize the maximum independent set");
    }
    return out;
}

std::vector<int> greedy_reverse_mis(const Graph& g, const Ordering& order) {
    validate_ordering(g, order);
    int n = g.node_count();
    std::vector<char> taken(n, 0);
    std::vector<int> result;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        bool blocked = false;
        for (int j : g.neighbors(v)) {
            if (taken[j]) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            taken[v] = 1;
            result.push_back(v);
        }
    }
    std::sort(result.begin(), result.end());
    // Maximality: every node outside has a taken neighbor.
    for (int i = 0; i < n; ++i) {
        if (taken[i]) continue;
        bool dominated = false;
        for (int j : g.neighbors(i)) {
            if (taken[j]) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            throw std::runtime_error("greedy reverse set is not maximal (internal error)");
        }
    }
    return result;
}

SequentialPolicy clique_subgame_perfect(int n) {
    if (n < 1) fail("clique_subgame_perfect requires n >= 1");
    // Stage values by number of players remaining: with continuation revenue
    // R and continuation sale probability s, the seller maximizes
    // (1-T) T (1-s) + T R over the induced threshold T = p / (1-s).
    std::vector<double> thr(n + 1, 0.0), price(n + 1, 0.0), rev(n + 1, 0.0), sale(n + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        double c = 1.0 - sale[k - 1];
        if (c <= 0.0) {
            thr[k] = 1.0;
            price[k] = 0.0;
            rev[k] = rev[k - 1];
            sale[k] = sale[k - 1];
            continue;
        }
        double t = std::clamp(0.5 + rev[k - 1] / (2.0 * c), 0.0, 1.0);
        thr[k] = t;
        price[k] = t * c;
        rev[k] = c * t * (1.0 - t) + t * rev[k - 1];
        sale[k] = (1.0 - t) + t * sale[k - 1];
    }
    SequentialPolicy pol;
    pol.prices.resize(n);
    pol.thresholds.resize(n);
    pol.sale_probs.resize(n);
    double reach = 1.0;
    for (int stage = 0; stage < n; ++stage) {
        int k = n - stage;  // players remaining at this stage
        pol.prices[stage] = price[k];
        pol.thresholds[stage] = thr[k];
        pol.sale_probs[stage] = reach * (1.0 - thr[k]);
        reach *= thr[k];
    }
    pol.total_revenue = rev[n];
    return pol;
}

double pn_formula(int n) {
    if (n < 1) fail("pn_formula requires n >= 1");
    double prod = 1.0;
    for (int k = 1; k <= n; ++k) prod *= 1.0 - std::ldexp(1.0, -k);
    return prod;
}

namespace {

// Revenue of a committed price vector on the clique: thresholds backward,
// reach probabilities forward.
double committed_revenue(const std::vector<double>& prices, std::vector<double>* thresholds) {
    int n = static_cast<int>(prices.size());
    std::vector<double> t(n);
    double s = 0.0;  // probability someone after the current stage buys
    for (int i = n - 1; i >= 0; --i) {
        double c = 1.0 - s;
        t[i] = c <= 0.0 ? 1.0 : std::min(1.0, prices[i] / c);
        s = (1.0 - t[i]) + t[i] * s;
    }
    double reach = 1.0, revenue = 0.0;
    for (int i = 0; i < n; ++i) {
        revenue += prices[i] * (1.0 - t[i]) * reach;
        reach *= t[i];
    }
    if (thresholds) *thresholds = std::move(t);
    return revenue;
}

double polish(std::vector<double>& prices) {
    int n = static_cast<int>(prices.size());
    double value = committed_revenue(prices, nullptr);
    // Coordinate descent with golden-section line searches.
    for (int sweep = 0; sweep < 200; ++sweep) {
        double before = value;
        for (int i = 0; i < n; ++i) {
            double best = detail::golden_max(
                [&](double pi) {
                    double saved = prices[i];
                    prices[i] = pi;
                    double r = committed_revenue(prices, nullptr);
                    prices[i] = saved;
                    return r;
                },
                0.0, 1.0, 1e-12);
            double saved = prices[i];
            prices[i] = best;
            double r = committed_revenue(prices, nullptr);
            if (r > value) {
                value = r;
            } else {
                prices[i] = saved;
            }
        }
        if (value - before < 1e-13) break;
    }
    // Compass pattern search shakes off coordinate-wise local stalls.
    for (double step = 0.05; step > 1e-10;) {
        bool improved = false;
        for (int i = 0; i < n; ++i) {
            for (double dir : {+1.0, -1.0}) {
                double trial = std::clamp(prices[i] + dir * step, 0.0, 1.0);
                if (trial == prices[i]) continue;
                double saved = prices[i];
                prices[i] = trial;
                double r = committed_revenue(prices, nullptr);
                if (r > value + 1e-15) {
                    value = r;
                    improved = true;
                } else {
                    prices[i] = saved;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return value;
}

}  // namespace

CommittedOptimum clique_committed_optimum(int n, int restarts, std::uint64_t seed) {
    if (n < 1 || n > 20) fail("clique_committed_optimum requires 1 <= n <= 20");
    if (restarts < 1) fail("clique_committed_optimum requires restarts >= 1");

    std::vector<std::vector<double>> starts;
    starts.push_back(clique_subgame_perfect(n).prices);
    starts.emplace_back(n, 0.5);
    starts.emplace_back(n, std::exp(-1.0));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (static_cast<int>(starts.size()) < restarts + 3) {
        std::vector<double> s(n);
        for (double& v : s) v = u(rng);
        starts.push_back(std::move(s));
    }

    struct RestartResult {
        double value = -1.0;
        double gain = 0.0;
        std::vector<double> prices;
    };
    std::vector<RestartResult> results(starts.size());
    detail::parallel_for_chunks(static_cast<long>(starts.size()), [&](long idx) {
        std::vector<double> prices = starts[idx];
        double initial = committed_revenue(prices, nullptr);
        double value = polish(prices);
        results[idx] = {value, value - initial, std::move(prices)};
    });

    CommittedOptimum out;
    double best = -1.0;
    double max_gain = 0.0;
    for (const auto& r : results) {  // fixed order: deterministic under any worker count
        max_gain = std::max(max_gain, r.gain);
        if (r.value > best) {
            best = r.value;
            out.prices = r.prices;
        }
    }
    out.revenue = committed_revenue(out.prices, &out.thresholds);
    out.stagnated = max_gain < 1e-12 && n > 1;
    return out;
}

std::string sequential_policy_to_json(const SequentialPolicy& p) {
    json j;
    j["prices"] = p.prices;
    j["thresholds"] = p.thresholds;
    j["sale_probs"] = p.sale_probs;
    j["total_revenue"] = p.total_revenue;
    return j.dump(2) + "\n";
}

}  // namespace pubgood
