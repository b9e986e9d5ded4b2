#include "pubgood/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pubgood {

using nlohmann::json;

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

Graph::Graph(int n) {
    if (n < 0) fail("graph node count must be nonnegative");
    adj_.resize(n);
}

bool Graph::has_edge(int i, int j) const {
    const auto& nb = adj_.at(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

bool Graph::add_edge(int i, int j) {
    int n = node_count();
    if (i < 0 || j < 0 || i >= n || j >= n) {
        fail("edge endpoint out of range: [" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
    if (i == j) fail("self-loop at node " + std::to_string(i));
    if (has_edge(i, j)) return false;
    auto& ni = adj_[i];
    auto& nj = adj_[j];
    ni.insert(std::upper_bound(ni.begin(), ni.end(), j), j);
    nj.insert(std::upper_bound(nj.begin(), nj.end(), i), i);
    ++edge_count_;
    return true;
}

void Graph::set_label(int i, std::string label) {
    if (i < 0 || i >= node_count()) fail("label index out of range");
    labels_[i] = std::move(label);
}

std::vector<std::array<int, 2>> Graph::edges() const {
    std::vector<std::array<int, 2>> out;
    out.reserve(edge_count_);
    for (int i = 0; i < node_count(); ++i) {
        for (int j : adj_[i]) {
            if (j > i) out.push_back({i, j});
        }
    }
    return out;
}

bool Graph::is_clique() const {
    int n = node_count();
    return edge_count_ == static_cast<std::size_t>(n) * (n - 1) / 2;
}

Graph make_clique(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) fail("cycle requires n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) g.set_label(i, "cycle-node");
    return g;
}

Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_empty(int n) { return Graph(n); }

Graph make_d_regular_bipartite(int n, int d) {
    if (n <= 0 || n % 2 != 0) fail("d-regular bipartite requires even n > 0");
    int side = n / 2;
    if (d < 0 || d > side) fail("d-regular bipartite requires 0 <= d <= n/2");
    Graph g(n);
    for (int i = 0; i < side; ++i) {
        for (int k = 0; k < d; ++k) g.add_edge(i, side + (i + k) % side);
    }
    for (int i = 0; i < side; ++i) g.set_label(i, "left");
    for (int i = side; i < n; ++i) g.set_label(i, "right");
    return g;
}

const std::vector<std::array<int, 3>>& pentagon_triples() {
    static const std::vector<std::array<int, 3>> triples = [] {
        std::vector<std::array<int, 3>> t;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c) t.push_back({a, b, c});
        return t;
    }();
    return triples;
}

Graph make_pentagon_gadget(int per_triple) {
    if (per_triple < 0) fail("pentagon gadget requires N >= 0");
    const auto& triples = pentagon_triples();
    int n = 5 + static_cast<int>(triples.size()) * per_triple;
    Graph g(n);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.set_label(i, "cycle-node");
    }
    int next = 5;
    for (const auto& triple : triples) {
        for (int k = 0; k < per_triple; ++k, ++next) {
            for (int v : triple) g.add_edge(next, v);
            g.set_label(next, "clause-node");
        }
    }
    return g;
}

Graph make_random_gnp(int n, double prob, std::uint64_t seed) {
    if (!(prob >= 0.0 && prob <= 1.0)) fail("gnp probability must be in [0,1]");
    Graph g(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (u(rng) < prob) g.add_edge(i, j);
        }
    }
    return g;
}

Graph make_random_d_regular(int n, int d, std::uint64_t seed) {
    if (n <= 0 || d < 0 || d >= n) fail("random d-regular requires 0 <= d < n");
    if ((static_cast<long>(n) * d) % 2 != 0) fail("random d-regular requires n*d even");
    std::mt19937_64 rng(seed);
    const int max_retries = 2000;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < d; ++k) stubs.push_back(i);
        }
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (std::size_t s = 0; s + 1 < stubs.size(); s += 2) {
            int a = stubs[s], b = stubs[s + 1];
            if (a == b || g.has_edge(a, b)) {
                ok = false;
                break;
            }
            g.add_edge(a, b);
        }
        if (ok) return g;
    }
    throw std::runtime_error("random d-regular: configuration model failed after " +
                             std::to_string(max_retries) + " retries");
}

Graph generate(const std::string& kind, const GeneratorParams& p) {
    if (kind == "clique") return make_clique(p.n);
    if (kind == "cycle") return make_cycle(p.n);
    if (kind == "path") return make_path(p.n);
    if (kind == "empty") return make_empty(p.n);
    if (kind == "d_regular_bipartite") return make_d_regular_bipartite(p.n, p.d);
    if (kind == "pentagon_gadget") return make_pentagon_gadget(p.per_triple);
    if (kind == "random_gnp") return make_random_gnp(p.n, p.prob, p.seed);
    if (kind == "random_d_regular") return make_random_d_regular(p.n, p.d, p.seed);
    fail("unknown graph kind: " + kind);
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.node_count();
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e[0], e[1]});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [node, tag] : g.labels()) labels[std::to_string(node)] = tag;
        j["labels"] = std::move(labels);
    }
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text, std::vector<std::string>* warnings) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("graph json parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        fail("graph json must be an object with integer field \"n\"");
    }
    Graph g(j["n"].get<int>());
    for (const auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2) fail("graph edge must be a pair [i,j]");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (!g.add_edge(a, b) && warnings) {
            warnings->push_back("duplicate edge [" + std::to_string(a) + "," + std::to_string(b) +
                                "] collapsed");
        }
    }
    if (j.contains("labels")) {
        for (const auto& [key, val] : j["labels"].items()) {
            g.set_label(std::stoi(key), val.get<std::string>());
        }
    }
    return g;
}

Graph load_graph(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) fail("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return graph_from_json(buf.str(), warnings);
    } catch (const std::invalid_argument& e) {
        fail(path + ": " + e.what());
    }
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("cannot write graph file: " + path);
    out << graph_to_json(g);
}

}  // namespace pubgood
