#ifndef IASI_GRAPH_HPP
#define IASI_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iasi {

/// Undirected edge, stored canonically with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph over non-negative integer vertex ids.
/// Ids need not be contiguous; operations such as intersection keep the
/// original ids of the surviving vertices. No self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    // Standard family generators. Vertices are 0-based and contiguous.
    // make_path(k) has k vertices and k-1 edges; make_cycle(k) has k vertices
    // and k edges (a cycle of length k).
    static Graph make_path(int k);
    static Graph make_cycle(int k);
    static Graph make_complete(int k);
    static Graph make_complete_bipartite(int a, int b);

    void add_vertex(int id);
    /// Adds the edge u-v, inserting missing endpoints. Self-loops are rejected.
    void add_edge(int u, int v);

    bool has_vertex(int id) const;
    bool has_edge(int u, int v) const;

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return verts_.empty(); }

    /// Vertex ids in ascending order.
    const std::vector<int>& vertices() const { return verts_; }
    /// Canonical edges (u < v) in ascending (u, v) order.
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    bool is_regular() const;
    bool is_connected() const;

    bool is_subgraph_of(const Graph& g) const;

    /// Copy with every vertex id shifted by offset (offset >= 0 keeps ids valid).
    Graph relabeled_shifted(int offset) const;

    // Optional short text aliases; unique within one graph.
    void set_name(int v, const std::string& name);
    std::optional<std::string> name(int v) const;

    bool operator==(const Graph& other) const {
        return verts_ == other.verts_ && edges_ == other.edges_;
    }

private:
    std::vector<int> verts_;  // sorted ascending
    std::vector<Edge> edges_; // canonical, sorted ascending
    std::map<int, std::string> names_;
};

// Graph operations. union/intersection identify vertices by id; join requires
// disjoint id spaces and throws otherwise.
Graph graph_union(const Graph& g1, const Graph& g2);
Graph graph_intersection(const Graph& g1, const Graph& g2);
Graph graph_join(const Graph& g1, const Graph& g2);
/// Symmetric difference of edge sets; vertices left with degree 0 are dropped.
Graph ring_sum(const Graph& g1, const Graph& g2);
/// Same vertex set, complemented edge set. Involution.
Graph complement(const Graph& g);
/// ring_sum(g, h) with the precondition that h is a subgraph of g.
Graph subgraph_complement(const Graph& g, const Graph& h);

struct BipartiteResult {
    bool bipartite = true;
    std::vector<int> side_a; // valid 2-coloring when bipartite
    std::vector<int> side_b;
    std::vector<int> odd_cycle; // closed walk witness when not bipartite
};

BipartiteResult is_bipartite(const Graph& g);

} // namespace iasi

#endif
