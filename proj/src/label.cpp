#include "iasi/label.hpp"

#include <algorithm>
#include <set>

#include "iasi/error.hpp"

namespace iasi {

LabelSet::LabelSet(std::vector<std::int64_t> elements) : elems_(std::move(elements)) {
    if (elems_.empty())
        fail(ErrorKind::InvalidParameter, "label sets must be nonempty");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.front() < 0)
        fail(ErrorKind::InvalidParameter, "label sets contain non-negative integers only");
}

LabelSet sumset(const LabelSet& a, const LabelSet& b) {
    std::vector<std::int64_t> out;
    out.reserve(a.size() * b.size());
    for (std::int64_t x : a.elements()) {
        for (std::int64_t y : b.elements()) {
            std::int64_t s = 0;
            if (__builtin_add_overflow(x, y, &s))
                fail(ErrorKind::Overflow, "sumset: element sum exceeds 64-bit range");
            out.push_back(s);
        }
    }
    return LabelSet(std::move(out));
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::VertexLabelCollision: return "vertex-label-collision";
        case ViolationKind::EdgeLabelCollision: return "edge-label-collision";
        case ViolationKind::WeakConditionFailed: return "weak-condition-failed";
    }
    return "?";
}

namespace {

const LabelSet& label_of(const Labeling& f, int v) {
    auto it = f.find(v);
    if (it == f.end())
        fail(ErrorKind::IncompleteLabeling, "vertex " + std::to_string(v) + " has no label");
    return it->second;
}

std::string edge_str(const Edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

} // namespace

std::map<Edge, LabelSet> induced_edge_labels(const Graph& g, const Labeling& f) {
    std::map<Edge, LabelSet> out;
    for (const Edge& e : g.edges())
        out.emplace(e, sumset(label_of(f, e.first), label_of(f, e.second)));
    return out;
}

VerificationReport is_iasi(const Graph& g, const Labeling& f) {
    VerificationReport report;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const LabelSet& a = label_of(f, vs[i]);
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (a == label_of(f, vs[j])) {
                report.violations.push_back(
                    {ViolationKind::VertexLabelCollision,
                     {vs[i], vs[j]},
                     {},
                     "vertices " + std::to_string(vs[i]) + " and " + std::to_string(vs[j]) +
                         " share a label"});
            }
        }
    }
    auto edge_labels = induced_edge_labels(g, f);
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (edge_labels.at(es[i]) == edge_labels.at(es[j])) {
                report.violations.push_back(
                    {ViolationKind::EdgeLabelCollision,
                     {},
                     {es[i], es[j]},
                     "edges " + edge_str(es[i]) + " and " + edge_str(es[j]) +
                         " share an induced label"});
            }
        }
    }
    report.verdict = report.violations.empty();
    return report;
}

VerificationReport is_weak_iasi(const Graph& g, const Labeling& f) {
    VerificationReport report = is_iasi(g, f);
    for (const Edge& e : g.edges()) {
        const LabelSet& a = label_of(f, e.first);
        const LabelSet& b = label_of(f, e.second);
        std::size_t got = sumset(a, b).size();
        std::size_t want = std::max(a.size(), b.size());
        if (got != want) {
            report.violations.push_back(
                {ViolationKind::WeakConditionFailed,
                 {},
                 {e},
                 "edge " + edge_str(e) + " has |sumset| = " + std::to_string(got) +
                     ", expected max(|f(u)|,|f(v)|) = " + std::to_string(want)});
        }
    }
    report.verdict = report.violations.empty();
    return report;
}

std::size_t set_indexing_number(const Labeling& f, int vertex) {
    return label_of(f, vertex).size();
}

std::size_t set_indexing_number(const Graph& g, const Labeling& f, const Edge& e) {
    if (!g.has_edge(e.first, e.second))
        fail(ErrorKind::UnknownVertex, "set_indexing_number: no such edge " + edge_str(e));
    return sumset(label_of(f, e.first), label_of(f, e.second)).size();
}

std::vector<Edge> mono_indexed_edges(const Graph& g, const Labeling& f) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (label_of(f, e.first).is_singleton() && label_of(f, e.second).is_singleton())
            out.push_back(e);
    return out;
}

Labeling restrict_to(const Labeling& f, const Graph& h) {
    Labeling out;
    for (int v : h.vertices())
        out.emplace(v, label_of(f, v));
    return out;
}

VerificationReport is_concurrent_weak(const Graph& g, const Labeling& f) {
    VerificationReport report = is_weak_iasi(g, f);
    VerificationReport co = is_weak_iasi(complement(g), f);
    report.violations.insert(report.violations.end(), co.violations.begin(), co.violations.end());
    report.verdict = report.violations.empty();
    return report;
}

} // namespace iasi
