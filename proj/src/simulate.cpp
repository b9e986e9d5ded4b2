#include "pubgood/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "pubgood/detail/parallel.hpp"
#include "pubgood/detail/rng.hpp"

namespace pubgood {

namespace {

constexpr long kChunk = 4096;  // fixed chunk size keeps reductions worker-count independent

struct Moments {
    long n = 0;
    double sum = 0.0, sumsq = 0.0;

    void add(double v) {
        ++n;
        sum += v;
        sumsq += v * v;
    }
    void merge(const Moments& o) {
        n += o.n;
        sum += o.sum;
        sumsq += o.sumsq;
    }
    double mean() const { return n ? sum / n : 0.0; }
    double stderr_() const {
        if (n < 2) return 0.0;
        double var = std::max(0.0, (sumsq - sum * sum / n) / (n - 1));
        return std::sqrt(var / n);
    }
};

}  // namespace

Outcome play_once(const Graph& g, const ValueDistribution& dist, const PriceVector& prices,
                  const ThresholdVector& t, std::uint64_t seed, std::uint64_t trial) {
    int n = g.node_count();
    Outcome out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) {
        out.values[i] = dist.quantile(detail::unit_draw(seed, trial, static_cast<std::uint64_t>(i)));
    }
    std::vector<char> buys(n, 0);
    for (int i = 0; i < n; ++i) {
        // Tie v_i = T_i buys; probability 0 under an atomless distribution.
        if (!t.is_never(i) && out.values[i] >= t.get(i)) {
            buys[i] = 1;
            out.buyers.push_back(i);
            out.revenue_realized += prices[i];
        }
    }
    double payments = out.revenue_realized;
    for (int i = 0; i < n; ++i) {
        bool self = buys[i];
        bool neighbor = false;
        for (int j : g.neighbors(i)) {
            if (buys[j]) {
                neighbor = true;
                break;
            }
        }
        if (self || neighbor) out.welfare_public += out.values[i];
        if (self && !neighbor) out.welfare_hipster += out.values[i];
    }
    out.welfare_public -= payments;
    out.welfare_hipster -= payments;
    return out;
}

SimulationSummary simulate(const Graph& g, const ValueDistribution& dist,
                           const PriceVector& prices, const ThresholdVector& t, long trials,
                           std::uint64_t seed, const SimulateOptions& opt) {
    if (trials < 1) throw std::invalid_argument("simulate requires trials >= 1");
    int n = g.node_count();
    if (prices.size() != n || t.size() != n) {
        throw std::invalid_argument("simulate size mismatch");
    }
    long chunks = (trials + kChunk - 1) / kChunk;
    struct ChunkResult {
        Moments revenue, pub, hip;
    };
    std::vector<ChunkResult> results(chunks);
    std::vector<Outcome> sampled(std::min<long>(opt.sample_cap, trials));
    detail::parallel_for_chunks(chunks, [&](long c) {
        long lo = c * kChunk, hi = std::min(trials, lo + kChunk);
        ChunkResult& r = results[c];
        for (long trial = lo; trial < hi; ++trial) {
            Outcome o = play_once(g, dist, prices, t, seed, static_cast<std::uint64_t>(trial));
            r.revenue.add(o.revenue_realized);
            r.pub.add(o.welfare_public);
            r.hip.add(o.welfare_hipster);
            if (trial < static_cast<long>(sampled.size())) sampled[trial] = std::move(o);
        }
    });
    Moments revenue, pub, hip;
    for (const auto& r : results) {  // chunk order, deterministic
        revenue.merge(r.revenue);
        pub.merge(r.pub);
        hip.merge(r.hip);
    }
    SimulationSummary s;
    s.trials = trials;
    s.mean_revenue = revenue.mean();
    s.stderr_revenue = revenue.stderr_();
    s.mean_welfare_public = pub.mean();
    s.stderr_welfare_public = pub.stderr_();
    s.mean_welfare_hipster = hip.mean();
    s.stderr_welfare_hipster = hip.stderr_();
    s.sampled_outcomes = std::move(sampled);
    return s;
}

namespace {

struct MwisSolver {
    const Graph& g;
    std::span<const double> w;
    std::vector<std::uint32_t> adj;
    double best = 0.0;
    std::uint32_t best_set = 0;

    explicit MwisSolver(const Graph& graph, std::span<const double> weights)
        : g(graph), w(weights) {
        int n = g.node_count();
        adj.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j : g.neighbors(i)) adj[i] |= (1u << j);
        }
    }

    void search(std::uint32_t avail, double current, std::uint32_t chosen) {
        if (current > best) {
            best = current;
            best_set = chosen;
        }
        if (!avail) return;
        double bound = current;
        for (std::uint32_t m = avail; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            bound += std::max(0.0, w[v]);
        }
        if (bound <= best) return;
        // Branch on the availability-restricted max-degree node.
        int pick = -1, pick_deg = -1;
        for (std::uint32_t m = avail; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int deg = std::popcount(adj[v] & avail);
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        if (pick_deg == 0) {
            // Edgeless remainder: take every positive weight.
            double total = current;
            std::uint32_t set = chosen;
            for (std::uint32_t m = avail; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (w[v] > 0.0) {
                    total += w[v];
                    set |= (1u << v);
                }
            }
            if (total > best) {
                best = total;
                best_set = set;
            }
            return;
        }
        std::uint32_t bit = 1u << pick;
        search((avail & ~adj[pick]) & ~bit, current + w[pick], chosen | bit);  // include
        search(avail & ~bit, current, chosen);                                // exclude
    }
};

}  // namespace

MwisResult mwis_exact(const Graph& g, std::span<const double> weights) {
    int n = g.node_count();
    if (n > 25) throw std::invalid_argument("mwis_exact supports at most 25 nodes");
    if (static_cast<int>(weights.size()) != n) {
        throw std::invalid_argument("mwis_exact weight count mismatch");
    }
    if (n == 0) return {};
    MwisSolver solver(g, weights);
    solver.search((1u << n) - 1, 0.0, 0);
    MwisResult r;
    r.weight = solver.best;
    for (int i = 0; i < n; ++i) {
        if (solver.best_set & (1u << i)) r.set.push_back(i);
    }
    return r;
}

HipsterCheck check_hipster_welfare_bound(const Graph& g, const ValueDistribution& dist,
                                         const PriceVector& prices, const ThresholdVector& t,
                                         long trials, std::uint64_t seed) {
    int n = g.node_count();
    if (n > 25) throw std::invalid_argument("hipster bound check supports at most 25 nodes");
    long chunks = (trials + kChunk - 1) / kChunk;
    struct ChunkResult {
        long violations = 0;
        long mismatches = 0;
        Moments revenue, mwis;
    };
    std::vector<ChunkResult> results(chunks);
    detail::parallel_for_chunks(chunks, [&](long c) {
        long lo = c * kChunk, hi = std::min(trials, lo + kChunk);
        ChunkResult& r = results[c];
        for (long trial = lo; trial < hi; ++trial) {
            Outcome o = play_once(g, dist, prices, t, seed, static_cast<std::uint64_t>(trial));
            // Recompute the two games' revenue streams independently: both
            // charge exactly the buyers.
            double rev_public = 0.0, rev_hipster = 0.0;
            for (int i : o.buyers) rev_public += prices[i];
            for (int i : o.buyers) rev_hipster += prices[i];
            if (rev_public != rev_hipster || rev_public != o.revenue_realized) ++r.mismatches;
            MwisResult m = mwis_exact(g, o.values);
            if (o.welfare_hipster > m.weight + 1e-9) ++r.violations;
            r.revenue.add(o.revenue_realized);
            r.mwis.add(m.weight);
        }
    });
    HipsterCheck out;
    Moments revenue, mwis;
    for (const auto& r : results) {
        out.violations += r.violations;
        out.revenue_mismatches += r.mismatches;
        revenue.merge(r.revenue);
        mwis.merge(r.mwis);
    }
    out.mean_revenue = revenue.mean();
    out.mwis_mean = mwis.mean();
    out.mwis_stderr = mwis.stderr_();
    return out;
}

}  // namespace pubgood
