#include "pubgood/cnf.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pubgood {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

CnfFormula cnf_from_string(const std::string& text) {
    std::istringstream in(text);
    CnfFormula f;
    int declared_clauses = -1;
    bool have_header = false;
    std::vector<int> current;
    std::string tok;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        ls >> tok;
        if (!ls || tok.empty()) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf") {
                fail("dimacs line " + std::to_string(lineno) + ": bad problem line");
            }
            have_header = true;
            continue;
        }
        ls.clear();
        ls.seekg(0);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty()) fail("dimacs line " + std::to_string(lineno) + ": empty clause");
                if (current.size() > 3) {
                    fail("dimacs line " + std::to_string(lineno) + ": clause has " +
                         std::to_string(current.size()) + " literals, want at most 3");
                }
                while (current.size() < 3) current.push_back(current.back());
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) fail("dimacs: unterminated clause at end of input");
    if (!have_header) fail("dimacs: missing 'p cnf' header");
    for (const auto& cl : f.clauses) {
        for (int lit : cl) {
            int v = std::abs(lit);
            if (v < 1 || v > f.num_vars) {
                fail("dimacs: literal " + std::to_string(lit) + " out of range 1.." +
                     std::to_string(f.num_vars));
            }
        }
    }
    if (declared_clauses >= 0 && declared_clauses != f.num_clauses()) {
        fail("dimacs: header declares " + std::to_string(declared_clauses) + " clauses, found " +
             std::to_string(f.num_clauses()));
    }
    return f;
}

CnfFormula load_cnf(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open cnf file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return cnf_from_string(buf.str());
    } catch (const std::invalid_argument& e) {
        fail(path + ": " + e.what());
    }
}

CnfFormula all_sign_patterns(int num_vars) {
    if (num_vars < 1 || num_vars > 20) fail("all_sign_patterns requires 1 <= m <= 20");
    CnfFormula f;
    f.num_vars = num_vars;
    for (int mask = 0; mask < (1 << num_vars); ++mask) {
        std::vector<int> lits;
        for (int v = 1; v <= num_vars; ++v) {
            lits.push_back((mask >> (v - 1)) & 1 ? v : -v);
        }
        while (lits.size() < 3) lits.push_back(lits.back());
        if (lits.size() > 3) fail("all_sign_patterns supports at most 3 variables");
        f.clauses.push_back({lits[0], lits[1], lits[2]});
    }
    return f;
}

long ReductionSpec::clause_multiplicity() const {
    if (exponent < 1) fail("reduction exponent L must be >= 1");
    long k = formula.num_clauses();
    long mult = 1;
    for (int i = 0; i < exponent; ++i) {
        if (k != 0 && mult > static_cast<long>(node_budget)) return mult;  // caller checks budget
        mult *= k;
    }
    return mult;
}

long ReductionSpec::node_count() const {
    return 6L * formula.num_vars + formula.num_clauses() * clause_multiplicity();
}

Graph sat_reduction(const ReductionSpec& spec) {
    const CnfFormula& f = spec.formula;
    if (f.num_vars < 1) fail("sat reduction requires at least one variable");
    long total = spec.node_count();
    if (total > static_cast<long>(spec.node_budget)) {
        fail("sat reduction would create " + std::to_string(total) +
             " nodes, exceeding the node budget of " + std::to_string(spec.node_budget));
    }
    Graph g(static_cast<int>(total));
    for (int v = 0; v < f.num_vars; ++v) {
        int base = 6 * v;
        int t = base, fnode = base + 1;
        g.add_edge(t, fnode);
        g.add_edge(t, base + 2);
        g.add_edge(t, base + 3);
        g.add_edge(fnode, base + 4);
        g.add_edge(fnode, base + 5);
        g.set_label(t, "T-node");
        g.set_label(fnode, "F-node");
        for (int leaf = base + 2; leaf <= base + 5; ++leaf) g.set_label(leaf, "leaf");
    }
    long mult = spec.clause_multiplicity();
    int next = 6 * f.num_vars;
    for (const auto& clause : f.clauses) {
        for (long copy = 0; copy < mult; ++copy, ++next) {
            g.set_label(next, "clause-node");
            for (int lit : clause) {
                int v = std::abs(lit) - 1;
                int target = 6 * v + (lit > 0 ? 0 : 1);
                g.add_edge(next, target);  // repeated literals collapse to one edge
            }
        }
    }
    return g;
}

}  // namespace pubgood
