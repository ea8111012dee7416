#include "iasi/label.hpp"

#include <cstdint>
#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "iasi/error.hpp"
#include "iasi/graph.hpp"

using namespace iasi;
using testutil::fails_with;
using testutil::graph_of;

namespace {

std::vector<std::int64_t> elems(const LabelSet& s) { return s.elements(); }

// Every nonempty subset of {0..max_element} as a LabelSet.
std::vector<LabelSet> all_subsets(int max_element) {
    std::vector<LabelSet> out;
    int n = max_element + 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::int64_t> xs;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) xs.push_back(i);
        out.emplace_back(std::move(xs));
    }
    return out;
}

} // namespace

TEST_CASE("label set validation") {
    CHECK(LabelSet{3, 1, 2}.elements() == std::vector<std::int64_t>{1, 2, 3});
    CHECK(LabelSet{5, 5}.size() == 1);
    CHECK(fails_with(ErrorKind::InvalidParameter, [] { LabelSet(std::vector<std::int64_t>{}); }));
    CHECK(fails_with(ErrorKind::InvalidParameter, [] { LabelSet{-1, 2}; }));
}

TEST_CASE("sumset examples") {
    CHECK(elems(sumset({0}, {0, 1, 2})) == std::vector<std::int64_t>{0, 1, 2});
    CHECK(elems(sumset({1, 3}, {2})) == std::vector<std::int64_t>{3, 5});
    CHECK(elems(sumset({1, 2}, {1, 3})) == std::vector<std::int64_t>{2, 3, 4, 5});
}

TEST_CASE("sumset overflow is reported, not wrapped") {
    LabelSet big{std::int64_t{1} << 62};
    CHECK(fails_with(ErrorKind::Overflow, [&] { sumset(big, big); }));
}

TEST_CASE("sumset cardinality laws, exhaustive on small universes") {
    auto sets = all_subsets(5); // 63 sets; the acceptance suite covers {0..8}
    for (const auto& a : sets) {
        for (const auto& b : sets) {
            LabelSet s = sumset(a, b);
            std::size_t lo = std::max(a.size(), b.size());
            CHECK(s.size() >= lo);
            CHECK(s.size() <= a.size() * b.size());
            // the load-bearing reduction: equality with max iff one side singleton
            CHECK((s.size() == lo) == (std::min(a.size(), b.size()) == 1));
            CHECK(sumset(b, a) == s);
        }
    }
}

TEST_CASE("sumset identity element") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> value(0, 1000);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::int64_t> xs;
        for (int i = 0; i < 1 + trial % 5; ++i) xs.push_back(value(rng));
        LabelSet a(std::move(xs));
        CHECK(sumset(a, {0}) == a);
    }
}

TEST_CASE("induced edge labels") {
    Graph p3 = Graph::make_path(3);
    Labeling f{{0, {3}}, {1, {9, 10}}, {2, {27}}};
    auto labels = induced_edge_labels(p3, f);
    CHECK(labels.at({0, 1}).elements() == std::vector<std::int64_t>{12, 13});
    CHECK(labels.at({1, 2}).elements() == std::vector<std::int64_t>{36, 37});

    Graph p2 = Graph::make_path(2);
    Labeling g{{0, {1}}, {1, {2}}};
    CHECK(induced_edge_labels(p2, g).at({0, 1}).elements() == std::vector<std::int64_t>{3});

    Labeling incomplete{{0, {1}}};
    CHECK(fails_with(ErrorKind::IncompleteLabeling,
                     [&] { induced_edge_labels(p2, incomplete); }));
}

TEST_CASE("constant labeling collides everywhere") {
    Graph c3 = Graph::make_cycle(3);
    Labeling f{{0, {0}}, {1, {0}}, {2, {0}}};
    auto labels = induced_edge_labels(c3, f);
    for (const auto& [e, l] : labels) CHECK(l == LabelSet{0});
    CHECK_FALSE(is_iasi(c3, f).verdict);
}

TEST_CASE("is_iasi examples") {
    Graph p3 = Graph::make_path(3);
    CHECK(is_iasi(p3, {{0, {3}}, {1, {9, 10}}, {2, {27}}}).verdict);

    Graph p2 = Graph::make_path(2);
    auto rep = is_iasi(p2, {{0, {5}}, {1, {5}}});
    CHECK_FALSE(rep.verdict);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations.front().kind == ViolationKind::VertexLabelCollision);
    CHECK(rep.violations.front().vertices == std::vector<int>{0, 1});

    // f(a)={1}, f(b)={2}, f(c)={1,2}: edge labels {3} and {3,4} are distinct
    CHECK(is_iasi(p3, {{0, {1}}, {1, {2}}, {2, {1, 2}}}).verdict);
}

TEST_CASE("is_weak_iasi examples") {
    Graph p3 = Graph::make_path(3);
    CHECK(is_weak_iasi(p3, {{0, {3}}, {1, {9, 10}}, {2, {27}}}).verdict);

    Graph p2 = Graph::make_path(2);
    auto rep = is_weak_iasi(p2, {{0, {1, 2}}, {1, {1, 3}}});
    CHECK_FALSE(rep.verdict);
    bool has_weak_violation = false;
    for (const auto& v : rep.violations)
        if (v.kind == ViolationKind::WeakConditionFailed) has_weak_violation = true;
    CHECK(has_weak_violation);

    // 1-uniform labeling with distinct singletons and pairwise distinct sums
    Graph c3 = Graph::make_cycle(3);
    CHECK(is_weak_iasi(c3, {{0, {1}}, {1, {2}}, {2, {4}}}).verdict);
}

TEST_CASE("set indexing numbers") {
    Graph p2 = Graph::make_path(2);
    Labeling f{{0, {5}}, {1, {9, 10}}};
    CHECK(set_indexing_number(f, 0) == 1);
    CHECK(set_indexing_number(f, 1) == 2);
    CHECK(set_indexing_number(p2, f, {0, 1}) == 2);
    CHECK(fails_with(ErrorKind::IncompleteLabeling, [&] { set_indexing_number(f, 7); }));
}

TEST_CASE("mono indexed edges") {
    Graph p3 = Graph::make_path(3);
    CHECK(mono_indexed_edges(p3, {{0, {3}}, {1, {9, 10}}, {2, {27}}}).empty());

    Graph c3 = Graph::make_cycle(3);
    CHECK(mono_indexed_edges(c3, {{0, {1}}, {1, {2}}, {2, {4}}}).size() == 3);

    auto mono = mono_indexed_edges(p3, {{0, {1}}, {1, {2}}, {2, {4, 8}}});
    CHECK(mono == std::vector<Edge>{{0, 1}});
}

TEST_CASE("restriction") {
    Graph c4 = Graph::make_cycle(4);
    Labeling f{{0, {3, 4}}, {1, {9}}, {2, {27, 28}}, {3, {81}}};
    REQUIRE(is_weak_iasi(c4, f).verdict);

    CHECK(restrict_to(f, c4) == f);

    Graph p3 = graph_of({{0, 1}, {1, 2}});
    Labeling r = restrict_to(f, p3);
    CHECK(r.size() == 3);
    CHECK(is_weak_iasi(p3, r).verdict);

    Graph single = graph_of({}, {2});
    CHECK(restrict_to(f, single).size() == 1);

    Graph alien = graph_of({}, {9});
    CHECK(fails_with(ErrorKind::IncompleteLabeling, [&] { restrict_to(f, alien); }));
}

TEST_CASE("concurrent weak labelings") {
    // K3 with distinct singleton Sidon values: complement is edgeless
    Graph k3 = Graph::make_complete(3);
    CHECK(is_concurrent_weak(k3, {{0, {1}}, {1, {2}}, {2, {4}}}).verdict);

    // C5 with two non-adjacent expanded vertices: they meet in the complement
    Graph c5 = Graph::make_cycle(5);
    Labeling two{{0, {3, 4}}, {1, {9}}, {2, {27, 29}}, {3, {81}}, {4, {243}}};
    REQUIRE(is_weak_iasi(c5, two).verdict);
    CHECK_FALSE(is_concurrent_weak(c5, two).verdict);

    // all-singleton labeling with pairwise distinct sums is weak on both sides
    Labeling sidon{{0, {1}}, {1, {2}}, {2, {4}}, {3, {8}}, {4, {16}}};
    CHECK(is_concurrent_weak(c5, sidon).verdict);
}
