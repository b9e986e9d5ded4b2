#include "pubgood/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pubgood {

using nlohmann::json;

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Product of neighbor CDF factors; NEVER_BUY neighbors contribute F = 1.
double neighbor_factor(const Graph& g, const ValueDistribution& dist, const ThresholdVector& t,
                       int i) {
    double prod = 1.0;
    for (int j : g.neighbors(i)) {
        if (t.is_never(j)) continue;
        prod *= dist.cdf(t.get(j));
        if (prod == 0.0) break;
    }
    return prod;
}
}  // namespace

PriceVector PriceVector::uniform(int n, double price) {
    PriceVector pv;
    pv.p.assign(n, price);
    return pv;
}

bool PriceVector::is_uniform() const {
    return std::adjacent_find(p.begin(), p.end(), std::not_equal_to<>()) == p.end();
}

void PriceVector::validate() const {
    for (double v : p) {
        if (!(v >= 0.0) || !std::isfinite(v)) fail("prices must be finite and nonnegative");
    }
}

ThresholdVector ThresholdVector::never(int n) {
    ThresholdVector t(n);
    for (int i = 0; i < n; ++i) t.set_never(i);
    return t;
}

double FeasibleAssignment::sum() const { return std::accumulate(x.begin(), x.end(), 0.0); }

FeasibleAssignment make_assignment(const Graph& g, std::vector<double> x) {
    if (static_cast<int>(x.size()) != g.node_count()) fail("assignment size mismatch");
    FeasibleAssignment a;
    a.x = std::move(x);
    a.closed_nbhd_sums.resize(a.x.size());
    for (int i = 0; i < g.node_count(); ++i) {
        double s = a.x[i];
        for (int j : g.neighbors(i)) s += a.x[j];
        a.closed_nbhd_sums[i] = s;
        if (a.x[i] > 1e-12) a.support.push_back(i);
    }
    return a;
}

bool assignment_feasible(const Graph& g, const FeasibleAssignment& a, double tol) {
    for (int i = 0; i < g.node_count(); ++i) {
        if (a.x[i] < -tol || a.x[i] > 1.0 + tol) return false;
        if (a.closed_nbhd_sums[i] < 1.0 - tol) return false;
        if (a.x[i] > 1e-12 && std::fabs(a.closed_nbhd_sums[i] - 1.0) > tol) return false;
    }
    return true;
}

ThresholdVector best_response(const Graph& g, const ValueDistribution& dist,
                              const PriceVector& prices, const ThresholdVector& t) {
    int n = g.node_count();
    if (prices.size() != n || t.size() != n) fail("best_response size mismatch");
    ThresholdVector out(n);
    for (int i = 0; i < n; ++i) {
        double prod = neighbor_factor(g, dist, t, i);
        if (prod == 0.0) {
            out.set_never(i);
            continue;
        }
        double psi = prices[i] / prod;
        if (psi >= dist.support_hi()) {
            out.set_never(i);
        } else {
            out.set(i, psi);
        }
    }
    return out;
}

ThresholdVector solve_fixed_point(const Graph& g, const ValueDistribution& dist,
                                  const PriceVector& prices, const SolveOptions& opt) {
    int n = g.node_count();
    if (prices.size() != n) fail("solve_fixed_point size mismatch");
    prices.validate();

    ThresholdVector result(n);
    enum class State { Active, Buyer, Never };
    std::vector<State> state(n, State::Active);

    const double cap = dist.support_hi();

    // Nodes priced above the top of the support can never sell.
    for (int i = 0; i < n; ++i) {
        if (!dist.unbounded() && prices[i] >= cap) {
            state[i] = State::Never;
            result.set_never(i);
        }
    }
    // Peel nodes that buy deterministically (F(p_i) = 0): they keep T_i = p_i
    // and force their neighbors to never buy. Processed greedily in index
    // order, so adjacent zero-CDF nodes resolve to buyer + never.
    for (int i = 0; i < n; ++i) {
        if (state[i] == State::Active && dist.cdf(prices[i]) == 0.0) {
            state[i] = State::Buyer;
            result.set(i, prices[i]);
            for (int j : g.neighbors(i)) {
                if (state[j] == State::Active) {
                    state[j] = State::Never;
                    result.set_never(j);
                }
            }
        }
    }

    std::vector<int> active;
    for (int i = 0; i < n; ++i) {
        if (state[i] == State::Active) active.push_back(i);
    }

    // Lower corner of the box B.
    for (int i : active) result.set(i, prices[i]);

    // Damped iteration, with a collapse pass after each convergence: actives
    // whose raw best response reached the support cap become NEVER_BUY, and
    // the rest are re-polished until nothing changes.
    long iter_budget = opt.max_iter;
    std::vector<double> next(active.size()), prev2(active.size(), -1.0);
    for (int round = 0; round < n + 2; ++round) {
        double residual = 0.0;
        bool converged = active.empty();
        while (!converged) {
            if (iter_budget-- <= 0) {
                std::ostringstream os;
                os << "fixed-point iteration did not converge after " << opt.max_iter
                   << " iterations; best residual " << residual;
                throw std::runtime_error(os.str());
            }
            residual = 0.0;
            for (std::size_t a = 0; a < active.size(); ++a) {
                int i = active[a];
                double prod = neighbor_factor(g, dist, result, i);
                double psi = prod == 0.0 ? cap : std::min(prices[i] / prod, cap);
                double cur = std::min(result.get(i), cap);
                residual = std::max(residual, std::fabs(psi - cur));
                double mixed = (1.0 - opt.damping) * cur + opt.damping * psi;
                if (mixed < prices[i] - 1e-12) {
                    throw std::runtime_error("solver left the box B: iterate fell below its price");
                }
                next[a] = std::max(mixed, prices[i]);
            }
            converged = residual <= opt.tol;
            // Period-2 oscillation: the even subsequence stalls while the
            // residual stays large. With damping 0.5 this should not trigger,
            // but the dynamics carry no general convergence guarantee.
            double drift = 0.0;
            for (std::size_t a = 0; a < active.size(); ++a) {
                drift = std::max(drift, std::fabs(next[a] - prev2[a]));
                prev2[a] = result.get(active[a]);
            }
            if (drift < 1e-15 && residual > opt.tol) {
                std::ostringstream os;
                os << "fixed-point iteration oscillates with period 2; even-iterate residual "
                   << residual;
                throw std::runtime_error(os.str());
            }
            for (std::size_t a = 0; a < active.size(); ++a) result.set(active[a], next[a]);
        }
        // Collapse pass.
        std::vector<int> still_active;
        bool changed = false;
        for (int i : active) {
            double prod = neighbor_factor(g, dist, result, i);
            if (prod == 0.0 || prices[i] / prod >= cap) {
                result.set_never(i);
                changed = true;
            } else {
                still_active.push_back(i);
            }
        }
        if (!changed) break;
        active = std::move(still_active);
        next.assign(active.size(), 0.0);
        prev2.assign(active.size(), -1.0);
    }
    VerifyResult check = verify_equilibrium(g, dist, prices, result, std::max(opt.tol * 10.0, 1e-9));
    if (!check.valid) {
        std::ostringstream os;
        os << "fixed point converged but failed verification with residual " << check.residual;
        throw std::runtime_error(os.str());
    }
    result.residual = check.residual;
    result.status = ThresholdVector::Status::Verified;
    return result;
}

double symmetric_threshold(int d, const ValueDistribution& dist, double p) {
    if (d < 0) fail("symmetric_threshold requires d >= 0");
    if (!(p >= 0.0) || !std::isfinite(p)) fail("symmetric_threshold requires finite p >= 0");
    if (d == 0 || dist.cdf(p) == 0.0) return p;  // degenerate branch
    if (p == 0.0) return 0.0;
    if (!dist.unbounded() && p > dist.support_hi()) {
        fail("symmetric_threshold: price above the value support");
    }

    // Monotone residual in log space: h(T) = log T + d log F(T) - log p.
    auto h = [&](double t) { return std::log(t) + d * dist.log_cdf(t) - std::log(p); };

    double lo = p;
    // Bracket upper end: the interval [p, p / F(p)^d] always contains the
    // root, but its top can be astronomically loose for large d, so switch
    // to doubling when the analytic endpoint is far away.
    double hi;
    double log_hi = std::log(p) - d * dist.log_cdf(p);
    if (log_hi < std::log(std::max(p, 1.0)) + 14.0) {  // within ~e^14 of the start
        hi = std::exp(log_hi);
    } else {
        hi = std::max(2.0 * p, 1.0);
        while (h(hi) < 0.0) hi *= 2.0;
    }
    if (!dist.unbounded()) hi = std::min(hi, dist.support_hi());
    if (hi <= lo) return lo;

    for (int it = 0; it < 2000 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        (h(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

VerifyResult verify_equilibrium(const Graph& g, const ValueDistribution& dist,
                                const PriceVector& prices, const ThresholdVector& t, double tol) {
    int n = g.node_count();
    if (prices.size() != n || t.size() != n) fail("verify_equilibrium size mismatch");
    VerifyResult out;
    out.valid = true;
    double hi = dist.support_hi();
    for (int i = 0; i < n; ++i) {
        double prod = neighbor_factor(g, dist, t, i);
        double res;
        if (t.is_never(i) || t.get(i) >= hi) {
            // Capped case: never buying is a best response iff even the top
            // value would not cover the price.
            res = dist.unbounded() ? (prod == 0.0 ? 0.0 : ThresholdVector::kNeverBuy)
                                   : std::max(0.0, hi * prod - prices[i]);
        } else {
            res = std::fabs(t.get(i) * prod - prices[i]);
        }
        if (!(res <= tol)) {
            out.valid = false;
            out.witnesses.push_back(i);
        }
        if (std::isfinite(res)) {
            out.residual = std::max(out.residual, res);
        } else {
            out.residual = ThresholdVector::kNeverBuy;
        }
    }
    return out;
}

RevenueReport expected_revenue(const PriceVector& prices, const ThresholdVector& t,
                               const ValueDistribution& dist) {
    int n = t.size();
    if (prices.size() != n) fail("expected_revenue size mismatch");
    RevenueReport rep;
    rep.prices = prices;
    rep.thresholds = t;
    rep.per_node_sale_prob.resize(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        double q = t.is_never(i) ? 0.0 : dist.survival(t.get(i));
        rep.per_node_sale_prob[i] = q;
        total += prices[i] * q;
    }
    rep.expected_revenue = total;
    return rep;
}

FeasibleAssignment x_from_thresholds(const Graph& g, const ValueDistribution& dist,
                                     const ThresholdVector& t, double p) {
    if (dist.kind() != ValueDistribution::Kind::Uniform || dist.support_lo() != 0.0 ||
        dist.support_hi() != 1.0) {
        throw std::domain_error("x/T transformation is supported for uniform(0,1) only");
    }
    if (!(p > 0.0 && p < 1.0)) fail("x/T transformation requires p in (0,1)");
    std::vector<double> x(t.size());
    double logp = std::log(p);
    for (int i = 0; i < t.size(); ++i) {
        if (t.is_never(i) || t.get(i) >= 1.0) {
            x[i] = 0.0;
            continue;
        }
        double ti = t.get(i);
        if (ti < p - 1e-9 || ti > 1.0 + 1e-9) {
            fail("threshold outside [p,1] has no program-X image");
        }
        x[i] = std::log(std::clamp(ti, p, 1.0)) / logp;
    }
    return make_assignment(g, std::move(x));
}

ThresholdVector thresholds_from_x(const std::vector<double>& x, double p) {
    if (!(p > 0.0 && p < 1.0)) fail("x/T transformation requires p in (0,1)");
    ThresholdVector t(static_cast<int>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= 0.0 && x[i] <= 1.0 + 1e-9)) fail("x values must lie in [0,1]");
        if (x[i] <= 0.0) {
            t.set_never(static_cast<int>(i));
        } else {
            t.set(static_cast<int>(i), std::pow(p, std::min(x[i], 1.0)));
        }
    }
    return t;
}

std::string thresholds_to_json(const ThresholdVector& t) {
    json arr = json::array();
    for (int i = 0; i < t.size(); ++i) {
        if (t.is_never(i)) {
            arr.push_back("never");
        } else {
            arr.push_back(t.get(i));
        }
    }
    return arr.dump() + "\n";
}

ThresholdVector thresholds_from_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("thresholds json parse error: ") + e.what());
    }
    if (!arr.is_array()) fail("thresholds json must be an array");
    ThresholdVector t(static_cast<int>(arr.size()));
    int i = 0;
    for (const auto& v : arr) {
        if (v.is_string()) {
            if (v.get<std::string>() != "never") fail("threshold entries are numbers or \"never\"");
            t.set_never(i);
        } else {
            t.set(i, v.get<double>());
        }
        ++i;
    }
    return t;
}

std::string revenue_report_to_json(const RevenueReport& rep) {
    json j;
    j["prices"] = rep.prices.p;
    json th = json::array();
    for (int i = 0; i < rep.thresholds.size(); ++i) {
        if (rep.thresholds.is_never(i)) {
            th.push_back("never");
        } else {
            th.push_back(rep.thresholds.get(i));
        }
    }
    j["thresholds"] = std::move(th);
    j["expected_revenue"] = rep.expected_revenue;
    j["per_node_sale_prob"] = rep.per_node_sale_prob;
    if (!rep.annotations.empty()) j["annotations"] = rep.annotations;
    if (rep.thresholds.status == ThresholdVector::Status::Verified) {
        j["status"] = "verified";
        j["residual"] = rep.thresholds.residual;
    } else {
        j["status"] = "candidate";
    }
    return j.dump(2) + "\n";
}

}  // namespace pubgood
