#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "pubgood/graph.hpp"

namespace pubgood {

/// 3-CNF formula. Literals are signed 1-based variable indices; a clause may
/// repeat a variable.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

/// DIMACS CNF reader. Clauses with fewer than 3 literals are padded by
/// repeating their last literal; longer clauses are rejected.
CnfFormula load_cnf(const std::string& path);
CnfFormula cnf_from_string(const std::string& text);

/// Every sign pattern over the given variable count; unsatisfiable for any
/// m >= 1 (2^m clauses). The m=3 case is the canonical 26-node instance.
CnfFormula all_sign_patterns(int num_vars);

struct ReductionSpec {
    CnfFormula formula;
    int exponent = 1;              // L; each clause gets k^L nodes
    std::size_t node_budget = 200000;

    long clause_multiplicity() const;  // k^L
    long node_count() const;           // 6m + k * k^L
};

/// Variable gadgets (T, F, two leaves each) plus k^L nodes per clause, each
/// adjacent to the gadget nodes of its literals (T-node for positive, F-node
/// for negative; repeated variables connect once). Node order: per variable
/// v, nodes 6v..6v+5 = T, F, two T-leaves, two F-leaves; then clause groups.
Graph sat_reduction(const ReductionSpec& spec);

}  // namespace pubgood
