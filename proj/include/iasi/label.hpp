#ifndef IASI_LABEL_HPP
#define IASI_LABEL_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "iasi/graph.hpp"

namespace iasi {

/// Finite nonempty set of non-negative integers, kept strictly ascending.
/// The cardinality of a label is the set-indexing number of the element
/// carrying it.
class LabelSet {
public:
    LabelSet(std::initializer_list<std::int64_t> xs)
        : LabelSet(std::vector<std::int64_t>(xs)) {}
    explicit LabelSet(std::vector<std::int64_t> elements);

    const std::vector<std::int64_t>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool is_singleton() const { return elems_.size() == 1; }

    bool operator==(const LabelSet&) const = default;
    bool operator<(const LabelSet& other) const { return elems_ < other.elems_; }

private:
    std::vector<std::int64_t> elems_;
};

/// {x+y : x in a, y in b}. Throws ErrorKind::Overflow instead of wrapping.
LabelSet sumset(const LabelSet& a, const LabelSet& b);

/// Total assignment vertex id -> label over the vertices of one graph.
/// Injectivity is not an invariant here; is_iasi diagnoses it.
using Labeling = std::map<int, LabelSet>;

enum class ViolationKind {
    VertexLabelCollision,
    EdgeLabelCollision,
    WeakConditionFailed,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<int> vertices; // offending vertices, when applicable
    std::vector<Edge> edges;   // offending edges, when applicable
    std::string detail;
};

struct VerificationReport {
    bool verdict = true;
    std::vector<Violation> violations;

    explicit operator bool() const { return verdict; }
};

/// One entry per edge of g; entry for uv is sumset(f(u), f(v)).
std::map<Edge, LabelSet> induced_edge_labels(const Graph& g, const Labeling& f);

/// f injective as a map to sets and the induced edge labeling injective.
/// Reports every colliding pair, not just the first.
VerificationReport is_iasi(const Graph& g, const Labeling& f);

/// is_iasi plus |f(u)+f(v)| == max(|f(u)|,|f(v)|) on every edge.
VerificationReport is_weak_iasi(const Graph& g, const Labeling& f);

std::size_t set_indexing_number(const Labeling& f, int vertex);
std::size_t set_indexing_number(const Graph& g, const Labeling& f, const Edge& e);

/// Edges whose induced label is a singleton, i.e. both endpoints singleton.
/// Ascending (u, v) order.
std::vector<Edge> mono_indexed_edges(const Graph& g, const Labeling& f);

/// Restriction of f to the vertices of h.
Labeling restrict_to(const Labeling& f, const Graph& h);

/// Weak IASI for both g and its complement ("concurrent set-labeling").
VerificationReport is_concurrent_weak(const Graph& g, const Labeling& f);

} // namespace iasi

#endif
