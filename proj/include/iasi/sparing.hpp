#ifndef IASI_SPARING_HPP
#define IASI_SPARING_HPP

#include <set>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/label.hpp"

namespace iasi {

/// The vertices designated non-singleton (set-indexing number >= 2).
/// Feasible for a weak IASI exactly when it is an independent set.
struct Pattern {
    std::vector<int> expanded; // ascending vertex ids

    bool operator==(const Pattern&) const = default;
};

/// True iff no edge of g has both endpoints in p.expanded.
bool pattern_feasible(const Graph& g, const Pattern& p);

/// Number of edges with both endpoints outside p.expanded (the edges forced
/// mono-indexed by the pattern). Requires a feasible pattern.
int pattern_mono_count(const Graph& g, const Pattern& p);

struct SparingCertificate {
    int value = 0;           // the sparing number
    Pattern pattern;         // an optimal pattern (tie-broken deterministically)
    Labeling labeling;       // concrete witness, passes is_weak_iasi
    std::vector<Edge> mono_edges; // exactly the mono-indexed edges, |.| == value
};

/// Exact sparing number with certificate. Branch and bound over vertex
/// inclusion; deterministic tie-break: maximum |expanded|, then
/// lexicographically smallest id set. Isolated vertices stay mono-indexed.
SparingCertificate sparing_exact(const Graph& g);

/// Independent brute force over all 2^n vertex subsets; |V| <= 24.
int sparing_oracle(const Graph& g);

/// { pattern_mono_count(g, S) : S independent in g }, ascending; |V| <= 24.
std::set<int> mono_count_spectrum(const Graph& g);

/// Deterministic witness labeling for a feasible pattern. Vertex with index i
/// (0-based in ascending id order) gets base 3^(i+1); expanded vertices get a
/// second element base + r + 1 where r is the vertex's rank within the
/// expanded set. Distinct powers of 3 keep all labels and sumsets distinct.
/// Throws ErrorKind::Overflow once bases leave the 64-bit range (~39 vertices).
Labeling realize_labeling(const Graph& g, const Pattern& p);

struct ConcurrentResult {
    int mono_in_graph = 0;
    int mono_in_complement = 0;
    Pattern pattern;
};

/// Over patterns feasible in both g and complement(g) — hence at most one
/// expanded vertex when |V| >= 2 — minimizes mono_in_complement, breaking ties
/// by mono_in_graph, then by lowest vertex id (the empty pattern loses ties).
ConcurrentResult concurrent_min_mono(const Graph& g);

} // namespace iasi

#endif
