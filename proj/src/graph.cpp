#include "iasi/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "iasi/error.hpp"

namespace iasi {

namespace {

// Merge names from src into dst for ids dst already contains, keeping the
// per-graph uniqueness invariant (first assignment wins, collisions skipped).
void adopt_names(Graph& dst, const Graph& src) {
    for (int v : dst.vertices()) {
        if (dst.name(v).has_value()) continue;
        auto n = src.name(v);
        if (!n) continue;
        bool taken = false;
        for (int w : dst.vertices()) {
            if (dst.name(w) == n) { taken = true; break; }
        }
        if (!taken) dst.set_name(v, *n);
    }
}

} // namespace

Graph Graph::make_path(int k) {
    if (k < 1) fail(ErrorKind::InvalidParameter, "make_path: k must be >= 1");
    Graph g;
    for (int i = 0; i < k; ++i) g.add_vertex(i);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::make_cycle(int k) {
    if (k < 3) fail(ErrorKind::InvalidParameter, "make_cycle: k must be >= 3");
    Graph g;
    for (int i = 0; i < k; ++i) g.add_vertex(i);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, k - 1);
    return g;
}

Graph Graph::make_complete(int k) {
    if (k < 1) fail(ErrorKind::InvalidParameter, "make_complete: k must be >= 1");
    Graph g;
    for (int i = 0; i < k; ++i) g.add_vertex(i);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        fail(ErrorKind::InvalidParameter, "make_complete_bipartite: parts must be >= 1");
    Graph g;
    for (int i = 0; i < a + b; ++i) g.add_vertex(i);
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j) g.add_edge(i, j);
    return g;
}

void Graph::add_vertex(int id) {
    if (id < 0) fail(ErrorKind::InvalidParameter, "vertex ids must be non-negative");
    auto it = std::lower_bound(verts_.begin(), verts_.end(), id);
    if (it == verts_.end() || *it != id) verts_.insert(it, id);
}

void Graph::add_edge(int u, int v) {
    if (u == v) fail(ErrorKind::InvalidParameter, "self-loops are not allowed");
    add_vertex(u);
    add_vertex(v);
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool Graph::has_vertex(int id) const {
    return std::binary_search(verts_.begin(), verts_.end(), id);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

std::vector<int> Graph::neighbors(int v) const {
    if (!has_vertex(v)) fail(ErrorKind::UnknownVertex, "neighbors: unknown vertex " + std::to_string(v));
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        else if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const {
    if (!has_vertex(v)) fail(ErrorKind::UnknownVertex, "degree: unknown vertex " + std::to_string(v));
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v : verts_) best = std::max(best, degree(v));
    return best;
}

bool Graph::is_regular() const {
    if (verts_.empty()) return true;
    int d = degree(verts_.front());
    for (int v : verts_)
        if (degree(v) != d) return false;
    return true;
}

bool Graph::is_connected() const {
    if (verts_.size() <= 1) return true;
    std::set<int> seen{verts_.front()};
    std::deque<int> queue{verts_.front()};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : neighbors(v)) {
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return seen.size() == verts_.size();
}

bool Graph::is_subgraph_of(const Graph& g) const {
    return std::includes(g.verts_.begin(), g.verts_.end(), verts_.begin(), verts_.end()) &&
           std::includes(g.edges_.begin(), g.edges_.end(), edges_.begin(), edges_.end());
}

Graph Graph::relabeled_shifted(int offset) const {
    Graph g;
    for (int v : verts_) g.add_vertex(v + offset);
    for (const auto& [u, v] : edges_) g.add_edge(u + offset, v + offset);
    for (const auto& [v, n] : names_) g.set_name(v + offset, n);
    return g;
}

void Graph::set_name(int v, const std::string& name) {
    if (!has_vertex(v)) fail(ErrorKind::UnknownVertex, "set_name: unknown vertex " + std::to_string(v));
    for (const auto& [w, n] : names_)
        if (n == name && w != v)
            fail(ErrorKind::InvalidParameter, "vertex name '" + name + "' already in use");
    names_[v] = name;
}

std::optional<std::string> Graph::name(int v) const {
    auto it = names_.find(v);
    if (it == names_.end()) return std::nullopt;
    return it->second;
}

Graph graph_union(const Graph& g1, const Graph& g2) {
    Graph g;
    for (int v : g1.vertices()) g.add_vertex(v);
    for (int v : g2.vertices()) g.add_vertex(v);
    for (const auto& [u, v] : g1.edges()) g.add_edge(u, v);
    for (const auto& [u, v] : g2.edges()) g.add_edge(u, v);
    adopt_names(g, g1);
    adopt_names(g, g2);
    return g;
}

Graph graph_intersection(const Graph& g1, const Graph& g2) {
    Graph g;
    for (int v : g1.vertices())
        if (g2.has_vertex(v)) g.add_vertex(v);
    for (const auto& [u, v] : g1.edges())
        if (g2.has_edge(u, v)) g.add_edge(u, v);
    adopt_names(g, g1);
    return g;
}

Graph graph_join(const Graph& g1, const Graph& g2) {
    for (int v : g1.vertices())
        if (g2.has_vertex(v))
            fail(ErrorKind::DisjointnessViolation,
                 "graph_join: operands share vertex id " + std::to_string(v));
    Graph g = graph_union(g1, g2);
    for (int u : g1.vertices())
        for (int v : g2.vertices()) g.add_edge(u, v);
    return g;
}

Graph ring_sum(const Graph& g1, const Graph& g2) {
    Graph g;
    auto keep = [&](const Edge& e, const Graph& other) {
        if (!other.has_edge(e.first, e.second)) g.add_edge(e.first, e.second);
    };
    for (const auto& e : g1.edges()) keep(e, g2);
    for (const auto& e : g2.edges()) keep(e, g1);
    // isolated vertices are left out by definition; add_edge added all others
    adopt_names(g, g1);
    adopt_names(g, g2);
    return g;
}

Graph complement(const Graph& g) {
    Graph out;
    const auto& vs = g.vertices();
    for (int v : vs) out.add_vertex(v);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) out.add_edge(vs[i], vs[j]);
    adopt_names(out, g);
    return out;
}

Graph subgraph_complement(const Graph& g, const Graph& h) {
    if (!h.is_subgraph_of(g))
        fail(ErrorKind::NotASubgraph, "subgraph_complement: h is not a subgraph of g");
    return ring_sum(g, h);
}

BipartiteResult is_bipartite(const Graph& g) {
    BipartiteResult res;
    std::map<int, int> color;  // 0 / 1
    std::map<int, int> parent;
    for (int start : g.vertices()) {
        if (color.count(start)) continue;
        color[start] = 0;
        parent[start] = -1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (!color.count(w)) {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    // reconstruct an odd closed walk through the BFS tree paths
                    res.bipartite = false;
                    std::vector<int> pv, pw;
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
                    // trim to the lowest common ancestor
                    while (pv.size() > 1 && pw.size() > 1 &&
                           pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    res.odd_cycle.assign(pv.begin(), pv.end()); // v .. lca
                    for (auto it = std::next(pw.rbegin()); it != pw.rend(); ++it)
                        res.odd_cycle.push_back(*it); // .. w, closed by edge wv
                    return res;
                }
            }
        }
    }
    for (const auto& [v, c] : color)
        (c == 0 ? res.side_a : res.side_b).push_back(v);
    return res;
}

} // namespace iasi
