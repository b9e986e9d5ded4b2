#include "pubgood/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pubgood/detail/quadrature.hpp"

namespace pubgood {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

ValueDistribution ValueDistribution::uniform(double lo, double hi) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        fail("uniform distribution requires finite lo < hi");
    }
    ValueDistribution d;
    d.kind_ = Kind::Uniform;
    d.lo_ = lo;
    d.hi_ = hi;
    std::ostringstream os;
    os << "uniform:" << lo << "," << hi;
    d.name_ = os.str();
    return d;
}

ValueDistribution ValueDistribution::exponential(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) fail("exponential distribution requires rate > 0");
    ValueDistribution d;
    d.kind_ = Kind::Exponential;
    d.lo_ = 0.0;
    d.hi_ = kInf;
    d.rate_ = rate;
    std::ostringstream os;
    os << "exp:" << rate;
    d.name_ = os.str();
    return d;
}

ValueDistribution ValueDistribution::tabulated(std::vector<std::pair<double, double>> grid,
                                               std::string name) {
    if (grid.size() < 2) fail("tabulated distribution needs at least two grid points");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(grid[i].first < grid[i + 1].first)) {
            fail("tabulated grid values must be strictly increasing");
        }
        if (grid[i].second > grid[i + 1].second + 1e-15) {
            fail("tabulated grid cdf must be nondecreasing");
        }
    }
    if (std::fabs(grid.front().second) > 1e-9 || std::fabs(grid.back().second - 1.0) > 1e-9) {
        fail("tabulated grid cdf must start at 0 and end at 1");
    }
    grid.front().second = 0.0;
    grid.back().second = 1.0;
    ValueDistribution d;
    d.kind_ = Kind::Tabulated;
    d.lo_ = grid.front().first;
    d.hi_ = grid.back().first;
    d.name_ = std::move(name);
    d.grid_x_.reserve(grid.size());
    d.grid_c_.reserve(grid.size());
    for (auto& [x, c] : grid) {
        d.grid_x_.push_back(x);
        d.grid_c_.push_back(std::clamp(c, 0.0, 1.0));
    }
    return d;
}

ValueDistribution ValueDistribution::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open distribution csv: " + path);
    std::vector<std::pair<double, double>> grid;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double x, c;
        if (!(ls >> x >> c)) {
            if (lineno == 1) continue;  // header
            fail("malformed csv line " + std::to_string(lineno) + " in " + path);
        }
        grid.emplace_back(x, c);
    }
    return tabulated(std::move(grid), "table:" + path);
}

ValueDistribution ValueDistribution::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) fail("distribution spec must look like kind:params, got " + text);
    std::string kind = text.substr(0, colon);
    std::string params = text.substr(colon + 1);
    if (kind == "uniform") {
        auto comma = params.find(',');
        if (comma == std::string::npos) fail("uniform needs lo,hi: " + text);
        return uniform(std::stod(params.substr(0, comma)), std::stod(params.substr(comma + 1)));
    }
    if (kind == "exp") return exponential(std::stod(params));
    if (kind == "table") return from_csv(params);
    fail("unknown distribution kind: " + kind);
}

double ValueDistribution::cdf(double x) const {
    if (x <= lo_) return 0.0;
    switch (kind_) {
        case Kind::Uniform:
            return x >= hi_ ? 1.0 : (x - lo_) / (hi_ - lo_);
        case Kind::Exponential:
            return -std::expm1(-rate_ * x);
        case Kind::Tabulated: {
            if (x >= hi_) return 1.0;
            auto it = std::upper_bound(grid_x_.begin(), grid_x_.end(), x);
            std::size_t i = static_cast<std::size_t>(it - grid_x_.begin()) - 1;
            double t = (x - grid_x_[i]) / (grid_x_[i + 1] - grid_x_[i]);
            return grid_c_[i] + t * (grid_c_[i + 1] - grid_c_[i]);
        }
    }
    return 0.0;
}

double ValueDistribution::pdf(double x) const {
    if (x < lo_ || x > hi_) return 0.0;
    switch (kind_) {
        case Kind::Uniform:
            return 1.0 / (hi_ - lo_);
        case Kind::Exponential:
            return rate_ * std::exp(-rate_ * x);
        case Kind::Tabulated: {
            auto it = std::upper_bound(grid_x_.begin(), grid_x_.end(), x);
            std::size_t i = it == grid_x_.end() ? grid_x_.size() - 1
                                                : static_cast<std::size_t>(it - grid_x_.begin());
            if (i == 0) i = 1;
            return (grid_c_[i] - grid_c_[i - 1]) / (grid_x_[i] - grid_x_[i - 1]);
        }
    }
    return 0.0;
}

double ValueDistribution::survival(double x) const {
    if (x <= lo_) return 1.0;
    switch (kind_) {
        case Kind::Uniform:
            return x >= hi_ ? 0.0 : (hi_ - x) / (hi_ - lo_);
        case Kind::Exponential:
            return std::exp(-rate_ * x);
        case Kind::Tabulated:
            return 1.0 - cdf(x);
    }
    return 0.0;
}

double ValueDistribution::log_cdf(double x) const {
    double s = survival(x);
    if (s >= 1.0) return -kInf;
    return std::log1p(-s);
}

double ValueDistribution::quantile(double q) const {
    if (!(q >= 0.0 && q <= 1.0)) fail("quantile argument must be in [0,1]");
    switch (kind_) {
        case Kind::Uniform:
            return lo_ + q * (hi_ - lo_);
        case Kind::Exponential:
            return q >= 1.0 ? kInf : -std::log1p(-q) / rate_;
        case Kind::Tabulated: {
            // Minimal preimage: lower_bound lands on the first grid cdf >= q,
            // so flats at level q resolve to their left edge.
            auto it = std::lower_bound(grid_c_.begin(), grid_c_.end(), q);
            std::size_t i = static_cast<std::size_t>(it - grid_c_.begin());
            if (i == 0) return grid_x_[0];
            double t = (q - grid_c_[i - 1]) / (grid_c_[i] - grid_c_[i - 1]);
            return grid_x_[i - 1] + t * (grid_x_[i] - grid_x_[i - 1]);
        }
    }
    return lo_;
}

double ValueDistribution::effective_hi() const {
    return unbounded() ? quantile(1.0 - 1e-12) : hi_;
}

Evaluation evaluate(const ValueDistribution& dist, double x) {
    if (!std::isfinite(x)) fail("evaluate requires finite x");
    return {dist.cdf(x), dist.pdf(x)};
}

double quantile(const ValueDistribution& dist, double q) { return dist.quantile(q); }

double virtual_value(const ValueDistribution& dist, double x) {
    if (!(x > dist.support_lo()) || !(x < dist.support_hi())) {
        fail("virtual value requires x strictly inside the support");
    }
    double f = dist.pdf(x);
    if (!(f > 0.0)) {
        std::ostringstream os;
        os << "virtual value singular at x=" << x << ": pdf is 0";
        throw std::domain_error(os.str());
    }
    return x - dist.survival(x) / f;
}

double myerson_reserve(const ValueDistribution& dist) {
    switch (dist.kind()) {
        case ValueDistribution::Kind::Uniform: {
            double r = dist.support_hi() / 2.0;  // root of phi(x) = 2x - hi
            if (r < dist.support_lo() - 1e-15) {
                throw std::domain_error(
                    "myerson reserve: no reserve in support (virtual value has no sign change)");
            }
            return std::max(r, dist.support_lo());
        }
        case ValueDistribution::Kind::Exponential:
            // phi(x) = x - 1/rate crosses zero at the value with rate*x = 1,
            // i.e. the (1 - e^{-1}) quantile.
            return dist.quantile(1.0 - std::exp(-1.0));
        case ValueDistribution::Kind::Tabulated:
            break;
    }
    // Tabulated: probe phi on a quantile grid for a sign change, then bisect.
    const int probes = 4096;
    double prev_x = 0.0, prev_phi = 0.0;
    bool have_prev = false;
    for (int i = 1; i < probes; ++i) {
        double q = static_cast<double>(i) / probes;
        double x = dist.quantile(q);
        if (!(x > dist.support_lo()) || !(x < dist.support_hi()) || !(dist.pdf(x) > 0.0)) continue;
        double phi = virtual_value(dist, x);
        if (have_prev && prev_phi < 0.0 && phi >= 0.0) {
            double lo = prev_x, hi = x;
            while (hi - lo > 1e-12) {
                double mid = 0.5 * (lo + hi);
                (virtual_value(dist, mid) < 0.0 ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_x = x;
        prev_phi = phi;
        have_prev = true;
    }
    throw std::domain_error("myerson reserve: no reserve in support (virtual value has no sign change)");
}

QuantilePoint revenue_curve(const ValueDistribution& dist, double q) {
    if (!(q >= 0.0 && q <= 1.0)) fail("revenue curve argument must be in [0,1]");
    QuantilePoint pt;
    pt.q = q;
    pt.value = dist.quantile(1.0 - q);
    pt.revenue = q * pt.value;
    if (q == 0.0) pt.revenue = 0.0;  // 0 * inf for unbounded support
    return pt;
}

RegularityReport check_regularity(const ValueDistribution& dist, int grid_size) {
    if (grid_size < 2) fail("check_regularity requires grid_size >= 2");
    RegularityReport rep;
    rep.regular = true;
    rep.revenue_concave = true;

    std::vector<double> phis;
    phis.reserve(grid_size);
    for (int i = 1; i <= grid_size; ++i) {
        double q = static_cast<double>(i) / (grid_size + 1);
        double x = dist.quantile(q);
        if (!(x > dist.support_lo()) || !(x < dist.support_hi()) || !(dist.pdf(x) > 0.0)) continue;
        phis.push_back(virtual_value(dist, x));
    }
    for (std::size_t i = 0; i + 1 < phis.size(); ++i) {
        double drop = phis[i] - phis[i + 1];
        rep.worst_violation = std::max(rep.worst_violation, drop);
    }
    rep.regular = rep.worst_violation <= 1e-9;

    // Concavity of R(q) on an equispaced q-grid via second differences.
    int m = std::max(grid_size, 8);
    double h = 1.0 / (m + 1);
    std::vector<double> rv(m);
    for (int i = 0; i < m; ++i) rv[i] = revenue_curve(dist, (i + 1) * h).revenue;
    for (int i = 1; i + 1 < m; ++i) {
        double second = rv[i - 1] - 2.0 * rv[i] + rv[i + 1];
        rep.worst_concavity_violation = std::max(rep.worst_concavity_violation, second);
    }
    rep.revenue_concave = rep.worst_concavity_violation <= 1e-6;
    return rep;
}

MyersonRevenue myerson_revenue_n(const ValueDistribution& dist, int n) {
    if (n < 1) fail("myerson_revenue_n requires n >= 1");
    RegularityReport reg = check_regularity(dist, 512);
    if (!reg.regular) {
        throw std::domain_error(
            "myerson_revenue_n requires a regular distribution (max-order-statistic shortcut)");
    }
    double r = myerson_reserve(dist);
    double hi = dist.effective_hi();
    MyersonRevenue out;
    out.reserve_bound = n * r * dist.survival(r);
    if (!(r < hi)) {
        out.revenue = 0.0;
        return out;
    }
    auto integrand = [&](double v) {
        double f = dist.pdf(v);
        if (f <= 0.0) return 0.0;
        double F = dist.cdf(v);
        double phi = v - dist.survival(v) / f;
        return phi * n * std::pow(F, n - 1) * f;
    };
    double scale = std::max(out.reserve_bound, 1e-6);
    out.revenue = detail::integrate(integrand, r, hi, 1e-9 * scale);
    return out;
}

ProphetPrice prophet_price(const ValueDistribution& dist, int n) {
    if (n < 1) fail("prophet_price requires n >= 1");
    auto seq_revenue = [&](double t) {
        double Fn = std::exp(n * dist.log_cdf(t));
        return t * (1.0 - Fn);
    };
    double lo = dist.support_lo();
    double hi = dist.effective_hi();
    // Coarse grid to isolate the basin, then golden-section refinement.
    const int grid = 2048;
    double best_t = lo, best_v = -1.0;
    for (int i = 0; i <= grid; ++i) {
        double t = lo + (hi - lo) * i / grid;
        double v = seq_revenue(t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    }
    double a = std::max(lo, best_t - (hi - lo) / grid);
    double b = std::min(hi, best_t + (hi - lo) / grid);
    double t_star = detail::golden_max(seq_revenue, a, b, 1e-9 * std::max(1.0, hi - lo));
    ProphetPrice out{t_star, seq_revenue(t_star)};
    if (out.seq_revenue < best_v) out = {best_t, best_v};

    if (check_regularity(dist, 256).regular) {
        double target = 0.5 * myerson_revenue_n(dist, n).revenue;
        if (out.seq_revenue < target - 1e-9 * std::max(1.0, target)) {
            std::ostringstream os;
            os << "prophet price internal consistency failure: revenue " << out.seq_revenue
               << " below half of optimal " << target;
            throw std::runtime_error(os.str());
        }
    }
    return out;
}

}  // namespace pubgood
