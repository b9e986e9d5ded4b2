#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "pubgood/distribution.hpp"
#include "pubgood/graph.hpp"

namespace pubgood {

/// Per-node prices, with a uniform fast path.
struct PriceVector {
    std::vector<double> p;

    static PriceVector uniform(int n, double price);
    bool is_uniform() const;
    double operator[](int i) const { return p.at(i); }
    int size() const { return static_cast<int>(p.size()); }
    void validate() const;  // nonnegative, finite
};

/// Threshold strategy vector. NEVER_BUY means the threshold is at or above
/// the top of the value support; it compares greater than any finite
/// threshold and never enters arithmetic.
class ThresholdVector {
public:
    enum class Status { Candidate, Verified };

    static constexpr double kNeverBuy = std::numeric_limits<double>::infinity();

    ThresholdVector() = default;
    explicit ThresholdVector(int n) : t_(n, 0.0) {}
    static ThresholdVector never(int n);

    int size() const { return static_cast<int>(t_.size()); }
    bool is_never(int i) const { return t_.at(i) == kNeverBuy; }
    double get(int i) const { return t_.at(i); }  // kNeverBuy sentinel when never
    void set(int i, double v) { t_.at(i) = v; }
    void set_never(int i) { t_.at(i) = kNeverBuy; }

    Status status = Status::Candidate;
    double residual = std::numeric_limits<double>::quiet_NaN();

private:
    std::vector<double> t_;
};

struct RevenueReport {
    PriceVector prices;
    ThresholdVector thresholds;
    double expected_revenue = 0.0;
    std::vector<double> per_node_sale_prob;
    std::map<std::string, double> annotations;
};

struct VerifyResult {
    bool valid = false;
    double residual = 0.0;
    std::vector<int> witnesses;
};

struct SolveOptions {
    double damping = 0.5;
    long max_iter = 100000;
    double tol = 1e-10;
};

/// Program-X point for the uniform(0,1) transformation T_i = p^{x_i}.
struct FeasibleAssignment {
    std::vector<double> x;
    std::vector<int> support;               // indices with x_i > 1e-12
    std::vector<double> closed_nbhd_sums;   // sum over N(i) and i itself

    double sum() const;
};

FeasibleAssignment make_assignment(const Graph& g, std::vector<double> x);
/// Checks the program-X invariants: closed sums >= 1 - tol everywhere and
/// equal to 1 within tol on the support, 0 <= x <= 1.
bool assignment_feasible(const Graph& g, const FeasibleAssignment& a, double tol = 1e-9);

/// Best-response map: Psi_i = p_i / prod_{j in N(i)} F(T_j). Empty products
/// are 1; a zero factor or a result at/above the top of the support yields
/// NEVER_BUY.
ThresholdVector best_response(const Graph& g, const ValueDistribution& dist,
                              const PriceVector& prices, const ThresholdVector& t);

/// Damped fixed-point iteration from the lower corner T_i = p_i. Nodes with
/// F(p_i) = 0 are peeled first: they buy deterministically and their
/// neighbors never buy. Throws on non-convergence, carrying the residual.
ThresholdVector solve_fixed_point(const Graph& g, const ValueDistribution& dist,
                                  const PriceVector& prices, const SolveOptions& opt = {});

/// The symmetric fixed point: T with T * F(T)^d = p, by bisection (log-space
/// residual, so degrees up to 10^6 are fine).
double symmetric_threshold(int d, const ValueDistribution& dist, double p);

/// Node i passes when either |T_i * prod F(T_j) - p_i| <= tol (finite T_i
/// below the support top), or support_hi * prod F(T_j) <= p_i + tol (never /
/// capped case).
VerifyResult verify_equilibrium(const Graph& g, const ValueDistribution& dist,
                                const PriceVector& prices, const ThresholdVector& t,
                                double tol = 1e-9);

/// R(p, T) = sum_i p_i (1 - F(T_i)); never-buyers contribute 0.
RevenueReport expected_revenue(const PriceVector& prices, const ThresholdVector& t,
                               const ValueDistribution& dist);

// Uniform(0,1) transformation x_i = log(1/T_i)/log(1/p), T_i = p^{x_i}.
// NEVER_BUY maps to x_i = 0 and back to the T_i = 1 cap.
FeasibleAssignment x_from_thresholds(const Graph& g, const ValueDistribution& dist,
                                     const ThresholdVector& t, double p);
ThresholdVector thresholds_from_x(const std::vector<double>& x, double p);

// JSON helpers: thresholds serialize as arrays with "never" sentinel strings.
std::string thresholds_to_json(const ThresholdVector& t);
ThresholdVector thresholds_from_json(const std::string& text);
std::string revenue_report_to_json(const RevenueReport& report);

}  // namespace pubgood
