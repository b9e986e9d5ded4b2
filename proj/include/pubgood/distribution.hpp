#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace pubgood {

/// A point on the revenue curve: selling with ex ante probability q at value
/// F^{-1}(1-q) yields revenue q * value.
struct QuantilePoint {
    double q = 0.0;
    double value = 0.0;
    double revenue = 0.0;
};

struct Evaluation {
    double cdf = 0.0;
    double pdf = 0.0;
};

struct RegularityReport {
    bool regular = false;
    double worst_violation = 0.0;  // largest decrease of the virtual value on the grid
    bool revenue_concave = false;
    double worst_concavity_violation = 0.0;  // largest positive second difference of R(q)
};

struct MyersonRevenue {
    double revenue = 0.0;        // optimal single-item revenue with n i.i.d. bidders
    double reserve_bound = 0.0;  // n * r * (1 - F(r)), always an upper bound
};

struct ProphetPrice {
    double price = 0.0;
    double seq_revenue = 0.0;  // revenue of the uniform sequential posting at this price
};

/// Atomless value distribution: CDF/PDF/quantile bundle. Immutable after
/// construction; all member functions are pure and thread-safe.
class ValueDistribution {
public:
    enum class Kind { Uniform, Exponential, Tabulated };

    static ValueDistribution uniform(double lo, double hi);
    static ValueDistribution exponential(double rate);
    /// Monotone piecewise-linear CDF through (value, cdf) grid points.
    /// Grid must have strictly increasing values, nondecreasing cdf, cdf
    /// starting at 0 and ending at 1.
    static ValueDistribution tabulated(std::vector<std::pair<double, double>> grid,
                                       std::string name = "table");
    /// CSV with one "value,cdf" pair per line; a non-numeric header line is skipped.
    static ValueDistribution from_csv(const std::string& path);
    /// Parses "uniform:lo,hi" | "exp:rate" | "table:path".
    static ValueDistribution parse(const std::string& text);

    double cdf(double x) const;       // clamped to [0,1] outside the support
    double pdf(double x) const;       // 0 outside the support
    double survival(double x) const;  // 1 - cdf, computed without cancellation
    double log_cdf(double x) const;   // log F(x), -inf when F(x) = 0
    double quantile(double q) const;  // minimal preimage min{x : F(x) = q}

    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }  // +inf for exponential
    bool unbounded() const { return hi_ == std::numeric_limits<double>::infinity(); }
    /// Finite integration cap: support_hi when bounded, else quantile(1 - 1e-12).
    double effective_hi() const;

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    ValueDistribution() = default;

    Kind kind_ = Kind::Uniform;
    double lo_ = 0.0, hi_ = 1.0;
    double rate_ = 1.0;  // exponential only
    std::vector<double> grid_x_, grid_c_;  // tabulated only
    std::string name_;
};

Evaluation evaluate(const ValueDistribution& dist, double x);

double quantile(const ValueDistribution& dist, double q);

/// phi(x) = x - (1 - F(x)) / f(x). Requires x strictly inside the support and
/// f(x) > 0; throws otherwise.
double virtual_value(const ValueDistribution& dist, double x);

/// Root of the virtual value (the optimal single-agent posted price).
double myerson_reserve(const ValueDistribution& dist);

QuantilePoint revenue_curve(const ValueDistribution& dist, double q);

/// Samples phi on a quantile-equispaced grid; regular iff no decrease beyond
/// 1e-9. Also reports concavity of the revenue curve on the same grid.
RegularityReport check_regularity(const ValueDistribution& dist, int grid_size);

/// R^M_n for a regular distribution, via quadrature of phi against the
/// max-order-statistic density n F^{n-1} f above the reserve.
MyersonRevenue myerson_revenue_n(const ValueDistribution& dist, int n);

/// Uniform price maximizing the sequential posted-price revenue T (1 - F(T)^n).
/// For regular distributions the result is checked against the half-of-optimal
/// guarantee; a failure signals an internal quadrature/optimizer bug.
ProphetPrice prophet_price(const ValueDistribution& dist, int n);

}  // namespace pubgood
