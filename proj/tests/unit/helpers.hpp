#ifndef IASI_TEST_HELPERS_HPP
#define IASI_TEST_HELPERS_HPP

#include <functional>
#include <initializer_list>
#include <random>
#include <utility>

#include "iasi/error.hpp"
#include "iasi/graph.hpp"

namespace testutil {

inline bool fails_with(iasi::ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const iasi::Error& e) {
        return e.kind() == kind;
    }
    return false;
}

inline iasi::Graph graph_of(std::initializer_list<std::pair<int, int>> edges,
                            std::initializer_list<int> isolated = {}) {
    iasi::Graph g;
    for (auto [u, v] : edges) g.add_edge(u, v);
    for (int v : isolated) g.add_vertex(v);
    return g;
}

inline iasi::Graph random_graph(int n, double p, std::mt19937& rng) {
    iasi::Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline iasi::Graph random_subgraph(const iasi::Graph& g, std::mt19937& rng) {
    std::bernoulli_distribution keep(0.7);
    iasi::Graph h;
    for (int v : g.vertices())
        if (keep(rng)) h.add_vertex(v);
    for (auto [u, v] : g.edges())
        if (h.has_vertex(u) && h.has_vertex(v) && keep(rng)) h.add_edge(u, v);
    return h;
}

inline iasi::Graph random_tree(int n, std::mt19937& rng) {
    iasi::Graph g;
    g.add_vertex(0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    return g;
}

} // namespace testutil

#endif
