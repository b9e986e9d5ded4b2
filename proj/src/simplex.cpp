#include "pubgood/detail/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pubgood::detail {

namespace {
constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-8;
}  // namespace

void SimpleLp::set_objective(std::vector<double> c) {
    if (static_cast<int>(c.size()) != num_vars_) {
        throw std::invalid_argument("objective size mismatch");
    }
    objective_ = std::move(c);
}

void SimpleLp::add_row(std::vector<std::pair<int, double>> terms, char rel, double rhs) {
    if (rel != '<' && rel != '=' && rel != '>') throw std::invalid_argument("bad relation");
    rows_.push_back({std::move(terms), rel, rhs});
}

LpResult SimpleLp::solve() const {
    const int m = static_cast<int>(rows_.size());
    // Column layout: structural variables, then one slack/surplus per
    // inequality row, then one artificial per row that needs one.
    int num_slack = 0;
    for (const auto& r : rows_) {
        if (r.rel != '=') ++num_slack;
    }
    const int slack_base = num_vars_;
    const int art_base = num_vars_ + num_slack;

    // Dense tableau: m rows of [columns | rhs]. Built in normalized form with
    // rhs >= 0 so slacks of '<' rows can seed the basis.
    std::vector<std::vector<double>> t(m);
    std::vector<int> basis(m, -1);
    int num_art = 0;
    {
        int slack_idx = 0;
        // First pass to count artificials so the tableau width is known.
        for (const auto& r : rows_) {
            double rhs = r.rhs;
            char rel = r.rel;
            if (rhs < 0.0) rel = (rel == '<') ? '>' : (rel == '>') ? '<' : '=';
            if (rel != '<') ++num_art;
        }
        const int width = num_vars_ + num_slack + num_art + 1;
        int art_idx = 0;
        for (int i = 0; i < m; ++i) {
            const Row& r = rows_[i];
            t[i].assign(width, 0.0);
            double sign = r.rhs < 0.0 ? -1.0 : 1.0;
            for (auto [j, a] : r.terms) {
                if (j < 0 || j >= num_vars_) throw std::invalid_argument("row index out of range");
                t[i][j] += sign * a;
            }
            t[i][width - 1] = sign * r.rhs;
            char rel = r.rel;
            if (sign < 0.0) rel = (rel == '<') ? '>' : (rel == '>') ? '<' : '=';
            if (rel == '<') {
                t[i][slack_base + slack_idx] = 1.0;
                basis[i] = slack_base + slack_idx;
                ++slack_idx;
            } else {
                if (rel == '>') {
                    t[i][slack_base + slack_idx] = -1.0;
                    ++slack_idx;
                }
                t[i][art_base + art_idx] = 1.0;
                basis[i] = art_base + art_idx;
                ++art_idx;
            }
        }
    }
    const int total_cols = num_vars_ + num_slack + num_art;
    const int rhs_col = total_cols;

    // Reduced-cost row, kept in sync with the tableau across pivots.
    std::vector<double> zrow(rhs_col + 1, 0.0);

    auto pivot = [&](int prow, int pcol) {
        double piv = t[prow][pcol];
        for (double& v : t[prow]) v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == prow) continue;
            double factor = t[i][pcol];
            if (factor == 0.0) continue;
            for (int j = 0; j <= rhs_col; ++j) t[i][j] -= factor * t[prow][j];
        }
        double zfactor = zrow[pcol];
        if (zfactor != 0.0) {
            for (int j = 0; j <= rhs_col; ++j) zrow[j] -= zfactor * t[prow][j];
        }
        basis[prow] = pcol;
    };

    // Bland's rule simplex over the current cost vector; cols with
    // allowed[c] == false never enter.
    auto run_simplex = [&](const std::vector<double>& cost,
                           const std::vector<char>& allowed) -> LpStatus {
        for (int j = 0; j <= rhs_col; ++j) zrow[j] = j < total_cols ? cost[j] : 0.0;
        for (int i = 0; i < m; ++i) {
            double cb = cost[basis[i]];
            if (cb == 0.0) continue;
            for (int j = 0; j <= rhs_col; ++j) zrow[j] -= cb * t[i][j];
        }
        const long max_pivots = 20000L + 50L * static_cast<long>(m) * total_cols;
        for (long step = 0; step < max_pivots; ++step) {
            int enter = -1;
            for (int j = 0; j < total_cols; ++j) {
                if (allowed[j] && zrow[j] < -kPivotTol) {
                    enter = j;
                    break;  // Bland: lowest index
                }
            }
            if (enter < 0) return LpStatus::Optimal;
            int leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] > kPivotTol) {
                    double ratio = t[i][rhs_col] / t[i][enter];
                    if (ratio < best_ratio - 1e-12 ||
                        (ratio < best_ratio + 1e-12 &&
                         (leave < 0 || basis[i] < basis[leave]))) {
                        best_ratio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave < 0) return LpStatus::IterationLimit;  // unbounded; not expected here
            pivot(leave, enter);
        }
        return LpStatus::IterationLimit;
    };

    std::vector<char> allowed(total_cols, 1);
    LpResult result;

    if (num_art > 0) {
        std::vector<double> phase1(total_cols, 0.0);
        for (int j = art_base; j < total_cols; ++j) phase1[j] = 1.0;
        LpStatus st = run_simplex(phase1, allowed);
        if (st == LpStatus::IterationLimit) {
            result.status = st;
            return result;
        }
        double art_sum = 0.0;
        for (int i = 0; i < m; ++i) {
            if (basis[i] >= art_base) art_sum += t[i][rhs_col];
        }
        if (art_sum > kFeasTol) {
            result.status = LpStatus::Infeasible;
            return result;
        }
        // Drive remaining zero-level artificials out of the basis.
        for (int i = 0; i < m; ++i) {
            if (basis[i] < art_base) continue;
            int col = -1;
            for (int j = 0; j < art_base; ++j) {
                if (std::fabs(t[i][j]) > kPivotTol) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) pivot(i, col);
            // else: redundant row, artificial stays basic at level 0.
        }
        for (int j = art_base; j < total_cols; ++j) allowed[j] = 0;
    }

    std::vector<double> phase2(total_cols, 0.0);
    for (int j = 0; j < num_vars_; ++j) phase2[j] = objective_[j];
    LpStatus st = run_simplex(phase2, allowed);
    if (st != LpStatus::Optimal) {
        result.status = st;
        return result;
    }

    result.status = LpStatus::Optimal;
    result.x.assign(num_vars_, 0.0);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < num_vars_) result.x[basis[i]] = t[i][rhs_col];
    }
    result.objective = 0.0;
    for (int j = 0; j < num_vars_; ++j) result.objective += objective_[j] * result.x[j];
    return result;
}

}  // namespace pubgood::detail
