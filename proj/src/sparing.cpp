#include "iasi/sparing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "iasi/error.hpp"

namespace iasi {

namespace {

constexpr int kOracleLimit = 24; // 2^n subset scans stay interactive up to here
constexpr int kExactLimit = 64;  // one mask word

// Dense 0..n-1 view of a graph with adjacency bitmasks.
struct DenseView {
    std::vector<int> ids;            // dense index -> vertex id (ascending)
    std::vector<std::uint64_t> adj;  // dense adjacency rows
    int n = 0;

    static DenseView of(const Graph& g, int limit, const char* who) {
        DenseView d;
        d.ids = g.vertices();
        d.n = static_cast<int>(d.ids.size());
        if (d.n > limit)
            fail(ErrorKind::TooLargeInput,
                 std::string(who) + ": graph has " + std::to_string(d.n) +
                     " vertices, limit is " + std::to_string(limit));
        d.adj.assign(d.n, 0);
        for (const auto& [u, v] : g.edges()) {
            int iu = d.index_of(u);
            int iv = d.index_of(v);
            d.adj[iu] |= std::uint64_t{1} << iv;
            d.adj[iv] |= std::uint64_t{1} << iu;
        }
        return d;
    }

    int index_of(int id) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), id);
        return static_cast<int>(it - ids.begin());
    }

    bool independent(std::uint64_t s) const {
        for (int v = 0; v < n; ++v)
            if ((s >> v & 1) && (adj[v] & s)) return false;
        return true;
    }

    // Edges with neither endpoint in s.
    int uncovered(std::uint64_t s) const {
        int twice = 0;
        for (int v = 0; v < n; ++v)
            if (!(s >> v & 1)) twice += std::popcount(adj[v] & ~s);
        return twice / 2;
    }
};

std::uint64_t expanded_mask(const DenseView& d, const Graph& g, const Pattern& p) {
    std::uint64_t s = 0;
    for (int v : p.expanded) {
        if (!g.has_vertex(v))
            fail(ErrorKind::UnknownVertex, "pattern names unknown vertex " + std::to_string(v));
        s |= std::uint64_t{1} << d.index_of(v);
    }
    return s;
}

// Phase 1: minimum uncovered-edge count over independent sets.
// Branch order is descending degree (ties by ascending index), include-first.
struct ValueSearch {
    const DenseView& d;
    std::vector<int> order;
    int best;

    explicit ValueSearch(const DenseView& dv) : d(dv), best(dv.uncovered(0)) {
        for (int v = 0; v < d.n; ++v)
            if (d.adj[v]) order.push_back(v);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::popcount(d.adj[a]) > std::popcount(d.adj[b]);
        });
    }

    void run() { dfs(0, 0); }

    void dfs(std::size_t pos, std::uint64_t s) {
        if (best == 0) return;
        int u = d.uncovered(s);
        int coverable = 0;
        for (std::size_t i = pos; i < order.size(); ++i) {
            int v = order[i];
            if (d.adj[v] & s) continue; // can never join s
            coverable += std::popcount(d.adj[v] & ~s);
        }
        if (u - coverable >= best) return;
        if (pos == order.size()) {
            best = u;
            return;
        }
        int v = order[pos];
        if (!(d.adj[v] & s)) dfs(pos + 1, s | (std::uint64_t{1} << v));
        dfs(pos + 1, s);
    }
};

// Phase 2: among patterns achieving the optimum, pick maximum cardinality,
// then the lexicographically smallest id set. Include-first DFS in ascending
// id order visits sets in exactly that order, so the first strict cardinality
// improvement is the canonical answer.
struct PatternSearch {
    const DenseView& d;
    std::vector<int> cand; // degree >= 1 vertices; isolated ones stay mono
    int target;
    int best_size = -1;
    std::uint64_t best_mask = 0;

    PatternSearch(const DenseView& dv, int value) : d(dv), target(value) {
        for (int v = 0; v < d.n; ++v)
            if (d.adj[v]) cand.push_back(v);
    }

    void run() { dfs(0, 0, 0, 0); }

    void dfs(std::size_t pos, std::uint64_t s, std::uint64_t out, int fixed_uncovered) {
        if (fixed_uncovered > target) return;
        int possible = std::popcount(s);
        for (std::size_t i = pos; i < cand.size(); ++i)
            if (!(d.adj[cand[i]] & s)) ++possible;
        if (possible <= best_size) return;
        if (pos == cand.size()) {
            if (fixed_uncovered == target) {
                best_size = std::popcount(s);
                best_mask = s;
            }
            return;
        }
        int v = cand[pos];
        std::uint64_t bit = std::uint64_t{1} << v;
        if (!(d.adj[v] & s)) dfs(pos + 1, s | bit, out, fixed_uncovered);
        dfs(pos + 1, s, out | bit, fixed_uncovered + std::popcount(d.adj[v] & out));
    }
};

} // namespace

bool pattern_feasible(const Graph& g, const Pattern& p) {
    DenseView d = DenseView::of(g, kExactLimit, "pattern_feasible");
    return d.independent(expanded_mask(d, g, p));
}

int pattern_mono_count(const Graph& g, const Pattern& p) {
    DenseView d = DenseView::of(g, kExactLimit, "pattern_mono_count");
    std::uint64_t s = expanded_mask(d, g, p);
    if (!d.independent(s))
        fail(ErrorKind::InfeasiblePattern, "pattern is not an independent set");
    return d.uncovered(s);
}

SparingCertificate sparing_exact(const Graph& g) {
    DenseView d = DenseView::of(g, kExactLimit, "sparing_exact");

    ValueSearch value(d);
    value.run();

    PatternSearch pick(d, value.best);
    pick.run();

    SparingCertificate cert;
    cert.value = value.best;
    for (int v = 0; v < d.n; ++v)
        if (pick.best_mask >> v & 1) cert.pattern.expanded.push_back(d.ids[v]);
    cert.labeling = realize_labeling(g, cert.pattern);
    cert.mono_edges = mono_indexed_edges(g, cert.labeling);
    return cert;
}

int sparing_oracle(const Graph& g) {
    DenseView d = DenseView::of(g, kOracleLimit, "sparing_oracle");
    int best = d.uncovered(0);
    const std::uint64_t end = std::uint64_t{1} << d.n;
    for (std::uint64_t s = 1; s < end; ++s) {
        if (!d.independent(s)) continue;
        best = std::min(best, d.uncovered(s));
    }
    return best;
}

std::set<int> mono_count_spectrum(const Graph& g) {
    DenseView d = DenseView::of(g, kOracleLimit, "mono_count_spectrum");
    std::set<int> out;
    const std::uint64_t end = std::uint64_t{1} << d.n;
    for (std::uint64_t s = 0; s < end; ++s) {
        if (!d.independent(s)) continue;
        out.insert(d.uncovered(s));
    }
    return out;
}

Labeling realize_labeling(const Graph& g, const Pattern& p) {
    DenseView d = DenseView::of(g, kExactLimit, "realize_labeling");
    std::uint64_t s = expanded_mask(d, g, p);
    if (!d.independent(s))
        fail(ErrorKind::InfeasiblePattern, "pattern is not an independent set");

    Labeling f;
    std::int64_t base = 1;
    std::int64_t rank = 0;
    for (int i = 0; i < d.n; ++i) {
        if (base > std::numeric_limits<std::int64_t>::max() / 3)
            fail(ErrorKind::Overflow,
                 "realize_labeling: base 3^" + std::to_string(i + 1) + " exceeds 64-bit range");
        base *= 3;
        if (s >> i & 1) {
            ++rank;
            f.emplace(d.ids[i], LabelSet{base, base + rank});
        } else {
            f.emplace(d.ids[i], LabelSet{base});
        }
    }
    return f;
}

ConcurrentResult concurrent_min_mono(const Graph& g) {
    DenseView d = DenseView::of(g, kExactLimit, "concurrent_min_mono");
    DenseView dc = DenseView::of(complement(g), kExactLimit, "concurrent_min_mono");

    // Any two vertices are adjacent in g or in its complement, so the only
    // candidates feasible in both are the empty pattern and the singletons.
    ConcurrentResult best;
    best.mono_in_graph = d.uncovered(0);
    best.mono_in_complement = dc.uncovered(0);
    bool have = false;
    auto consider = [&](std::uint64_t mask, std::vector<int> ids) {
        int in_c = dc.uncovered(mask);
        int in_g = d.uncovered(mask);
        if (!have || in_c < best.mono_in_complement ||
            (in_c == best.mono_in_complement && in_g < best.mono_in_graph)) {
            best = {in_g, in_c, Pattern{std::move(ids)}};
            have = true;
        }
    };
    for (int v = 0; v < d.n; ++v)
        consider(std::uint64_t{1} << v, {d.ids[v]});
    consider(0, {});
    return best;
}

} // namespace iasi
