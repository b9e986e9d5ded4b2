#pragma once

#include <utility>
#include <vector>

namespace pubgood::detail {

enum class LpStatus { Optimal, Infeasible, IterationLimit };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

/// Small dense LP: minimize c'x subject to sparse rows (<=, ==, >=) and
/// x >= 0. Two-phase tableau simplex with Bland's rule, intended for the
/// desk-scale subproblems of the worst-case solver (tens of variables).
class SimpleLp {
public:
    explicit SimpleLp(int num_vars) : num_vars_(num_vars), objective_(num_vars, 0.0) {}

    void set_objective(std::vector<double> c);
    void add_row(std::vector<std::pair<int, double>> terms, char rel, double rhs);

    LpResult solve() const;

private:
    struct Row {
        std::vector<std::pair<int, double>> terms;
        char rel;  // '<', '=', '>'
        double rhs;
    };

    int num_vars_;
    std::vector<double> objective_;
    std::vector<Row> rows_;
};

}  // namespace pubgood::detail
