#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pubgood {

/// Undirected simple graph on nodes 0..n-1. No self-loops, no duplicate
/// edges; neighbor lists kept sorted. Immutable in spirit: generators build
/// it, everything downstream only reads.
class Graph {
public:
    explicit Graph(int n);

    int node_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int i) const { return adj_.at(i); }
    int degree(int i) const { return static_cast<int>(adj_.at(i).size()); }
    bool has_edge(int i, int j) const;

    /// Adds the edge; returns false (and leaves the graph unchanged) when the
    /// edge already exists. Throws on self-loops and out-of-range endpoints.
    bool add_edge(int i, int j);

    void set_label(int i, std::string label);
    const std::map<int, std::string>& labels() const { return labels_; }

    /// Canonical edge list: each edge once as (i, j) with i < j, sorted.
    std::vector<std::array<int, 2>> edges() const;

    bool is_clique() const;

private:
    std::vector<std::vector<int>> adj_;
    std::map<int, std::string> labels_;
    std::size_t edge_count_ = 0;
};

// Generators. All are deterministic; the random ones are pure given the seed.
Graph make_clique(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_empty(int n);
/// d-regular bipartite circulant on n nodes (n even, d <= n/2); sides are
/// labeled "left"/"right".
Graph make_d_regular_bipartite(int n, int d);
/// 5-cycle plus, for each of the 10 triples of cycle nodes, N extra nodes
/// adjacent to exactly that triple. Cycle nodes are 0..4; the group for
/// triple t (lexicographic order, see pentagon_triples) occupies nodes
/// 5 + t*N .. 5 + (t+1)*N - 1. Total 10N + 5 nodes.
Graph make_pentagon_gadget(int per_triple);
Graph make_random_gnp(int n, double prob, std::uint64_t seed);
/// Configuration-model d-regular graph; resamples on loops or duplicate
/// edges and errors out after a bounded number of retries.
Graph make_random_d_regular(int n, int d, std::uint64_t seed);

/// The 10 3-subsets of {0..4} in lexicographic order.
const std::vector<std::array<int, 3>>& pentagon_triples();

/// Dispatch by kind name, for the CLI: clique | cycle | path | empty |
/// d_regular_bipartite | pentagon_gadget | random_gnp | random_d_regular.
struct GeneratorParams {
    int n = 0;
    int d = 0;
    int per_triple = 0;
    double prob = 0.0;
    std::uint64_t seed = 0;
};
Graph generate(const std::string& kind, const GeneratorParams& params);

// JSON file I/O: {"n": int, "edges": [[i,j],...], "labels": {"i": "tag", ...}}.
// Duplicate edges are collapsed with a warning appended to *warnings.
Graph load_graph(const std::string& path, std::vector<std::string>* warnings = nullptr);
void save_graph(const Graph& g, const std::string& path);
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text, std::vector<std::string>* warnings = nullptr);

}  // namespace pubgood
