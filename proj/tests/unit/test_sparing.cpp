#include "iasi/sparing.hpp"

#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "iasi/error.hpp"

using namespace iasi;
using testutil::fails_with;
using testutil::graph_of;
using testutil::random_graph;
using testutil::random_subgraph;
using testutil::random_tree;

TEST_CASE("pattern feasibility") {
    Graph c4 = Graph::make_cycle(4);
    CHECK(pattern_feasible(c4, {{0, 2}}));
    CHECK_FALSE(pattern_feasible(c4, {{0, 1}}));
    CHECK(pattern_feasible(c4, {}));
    CHECK(fails_with(ErrorKind::UnknownVertex, [&] { pattern_feasible(c4, {{7}}); }));
}

TEST_CASE("pattern mono counts") {
    CHECK(pattern_mono_count(Graph::make_cycle(5), {{0, 2}}) == 1);
    CHECK(pattern_mono_count(Graph::make_cycle(4), {{0, 2}}) == 0);
    CHECK(pattern_mono_count(Graph::make_complete(5), {{0}}) == 6);
    CHECK(fails_with(ErrorKind::InfeasiblePattern,
                     [] { pattern_mono_count(Graph::make_cycle(4), {{0, 1}}); }));
}

TEST_CASE("sparing_exact pinned values") {
    CHECK(sparing_exact(Graph::make_cycle(4)).value == 0);
    CHECK(sparing_exact(Graph::make_cycle(5)).value == 1);
    CHECK(sparing_exact(Graph::make_complete(5)).value == 6);

    // wheel W6 = join(K1, C5)
    Graph hub;
    hub.add_vertex(5);
    Graph w6 = graph_join(Graph::make_cycle(5), hub);
    CHECK(sparing_exact(w6).value == 4);

    CHECK(sparing_exact(Graph()).value == 0);
    CHECK(sparing_exact(Graph()).labeling.empty());
}

TEST_CASE("sparing_exact deterministic tie-break") {
    // C4: optimal patterns {0,2} and {1,3}; max size ties, lex picks {0,2}
    CHECK(sparing_exact(Graph::make_cycle(4)).pattern.expanded == std::vector<int>{0, 2});
    // C5: five optimal pairs; {0,2} is lexicographically least
    CHECK(sparing_exact(Graph::make_cycle(5)).pattern.expanded == std::vector<int>{0, 2});
    // P2: {0} and {1} tie at value 0 and size 1
    CHECK(sparing_exact(Graph::make_path(2)).pattern.expanded == std::vector<int>{0});
    // isolated vertices stay out of the pattern
    Graph mixed = graph_of({{0, 1}}, {5});
    CHECK(sparing_exact(mixed).pattern.expanded == std::vector<int>{0});
}

TEST_CASE("sparing_oracle pinned values and limit") {
    CHECK(sparing_oracle(Graph::make_path(4)) == 0);
    CHECK(sparing_oracle(Graph::make_cycle(7)) == 1);
    CHECK(sparing_oracle(Graph::make_complete(4)) == 3);
    CHECK(fails_with(ErrorKind::TooLargeInput, [] { sparing_oracle(Graph::make_path(25)); }));
}

TEST_CASE("mono count spectra") {
    CHECK(mono_count_spectrum(Graph::make_cycle(5)) == std::set<int>{1, 3, 5});
    CHECK(mono_count_spectrum(Graph::make_cycle(4)) == std::set<int>{0, 2, 4});
    CHECK(mono_count_spectrum(Graph::make_complete(3)) == std::set<int>{1, 3});
}

TEST_CASE("cycle spectrum parity matches the cycle parity") {
    for (int n = 3; n <= 12; ++n) {
        for (int count : mono_count_spectrum(Graph::make_cycle(n)))
            CHECK(count % 2 == n % 2);
    }
}

TEST_CASE("realize_labeling construction") {
    Graph p3 = Graph::make_path(3);
    Labeling f = realize_labeling(p3, {{1}});
    CHECK(f.at(0) == LabelSet{3});
    CHECK(f.at(1) == LabelSet{9, 10});
    CHECK(f.at(2) == LabelSet{27});
    auto labels = induced_edge_labels(p3, f);
    CHECK(labels.at({0, 1}) == LabelSet{12, 13});
    CHECK(labels.at({1, 2}) == LabelSet{36, 37});

    Graph c4 = Graph::make_cycle(4);
    Labeling empty_pattern = realize_labeling(c4, {});
    CHECK(is_weak_iasi(c4, empty_pattern).verdict);
    for (const auto& [v, l] : empty_pattern) CHECK(l.is_singleton());

    Labeling alt = realize_labeling(c4, {{0, 2}});
    CHECK(is_weak_iasi(c4, alt).verdict);
    CHECK(mono_indexed_edges(c4, alt).empty());

    CHECK(fails_with(ErrorKind::InfeasiblePattern,
                     [&] { realize_labeling(c4, {{0, 1}}); }));
}

TEST_CASE("realize_labeling 64-bit boundary") {
    CHECK(is_weak_iasi(Graph::make_path(39), realize_labeling(Graph::make_path(39), {})).verdict);
    CHECK(fails_with(ErrorKind::Overflow,
                     [] { realize_labeling(Graph::make_path(40), {}); }));
}

TEST_CASE("concurrent_min_mono") {
    auto c5 = concurrent_min_mono(Graph::make_cycle(5));
    CHECK(c5.mono_in_graph == 3);
    CHECK(c5.mono_in_complement == 3);
    CHECK(c5.pattern.expanded.size() == 1);

    auto k2 = concurrent_min_mono(Graph::make_path(2));
    CHECK(k2.mono_in_graph == 0);
    CHECK(k2.mono_in_complement == 0);
    CHECK(k2.pattern.expanded == std::vector<int>{0});

    // the complement count for cycles, by the one-expanded-vertex reduction
    for (int n = 5; n <= 9; ++n) {
        auto res = concurrent_min_mono(Graph::make_cycle(n));
        CHECK(res.mono_in_complement == (n - 2) * (n - 3) / 2);
    }
}

TEST_CASE("tie-break matches the brute-force canonical pattern") {
    // canonical: minimum value, then maximum |expanded|, then lexicographically
    // smallest id set, never touching isolated vertices
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + trial % 7;
        Graph g = random_graph(n, 0.15 + 0.12 * (trial % 6), rng);
        std::vector<int> candidates;
        for (int v : g.vertices())
            if (g.degree(v) > 0) candidates.push_back(v);

        int best_value = g.edge_count() + 1;
        std::vector<int> best_set;
        bool have = false;
        for (unsigned mask = 0; mask < (1u << candidates.size()); ++mask) {
            std::vector<int> ids;
            for (std::size_t i = 0; i < candidates.size(); ++i)
                if (mask >> i & 1) ids.push_back(candidates[i]);
            Pattern p{ids};
            if (!pattern_feasible(g, p)) continue;
            int value = pattern_mono_count(g, p);
            bool better = !have || value < best_value ||
                          (value == best_value && ids.size() > best_set.size()) ||
                          (value == best_value && ids.size() == best_set.size() &&
                           ids < best_set);
            if (better) {
                best_value = value;
                best_set = ids;
                have = true;
            }
        }
        auto cert = sparing_exact(g);
        CHECK(cert.value == best_value);
        CHECK(cert.pattern.expanded == best_set);
    }
}

TEST_CASE("oracle equivalence on random graphs") {
    std::mt19937 rng(20240812);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + trial % 7;
        Graph g = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
        auto cert = sparing_exact(g);
        CHECK(cert.value == sparing_oracle(g));
        CHECK(is_weak_iasi(g, cert.labeling).verdict);
        CHECK(static_cast<int>(cert.mono_edges.size()) == cert.value);
        CHECK(mono_indexed_edges(g, cert.labeling) == cert.mono_edges);
    }
}

TEST_CASE("certificate pattern matches the non-singleton vertices") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(8, 0.35, rng);
        auto cert = sparing_exact(g);
        std::vector<int> expanded;
        for (const auto& [v, label] : cert.labeling)
            if (!label.is_singleton()) expanded.push_back(v);
        CHECK(expanded == cert.pattern.expanded);
    }
}

TEST_CASE("subgraph monotonicity") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(9, 0.4, rng);
        Graph h = random_subgraph(g, rng);
        CHECK(sparing_exact(h).value <= sparing_exact(g).value);
    }
}

TEST_CASE("bipartite graphs have sparing number zero") {
    std::mt19937 rng(23);
    for (int k = 1; k <= 10; ++k) CHECK(sparing_exact(Graph::make_path(k)).value == 0);
    for (int k = 4; k <= 12; k += 2) CHECK(sparing_exact(Graph::make_cycle(k)).value == 0);
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            CHECK(sparing_exact(Graph::make_complete_bipartite(a, b)).value == 0);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(sparing_exact(random_tree(3 + trial % 9, rng)).value == 0);
}

TEST_CASE("complete graphs match the closed form") {
    for (int n = 2; n <= 9; ++n)
        CHECK(sparing_exact(Graph::make_complete(n)).value == (n - 1) * (n - 2) / 2);
}

TEST_CASE("sparing is additive over disjoint unions") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g1 = random_graph(3 + trial % 6, 0.5, rng);
        Graph g2 = random_graph(3 + (trial / 3) % 6, 0.5, rng).relabeled_shifted(10);
        Graph u = graph_union(g1, g2);
        CHECK(sparing_exact(u).value == sparing_exact(g1).value + sparing_exact(g2).value);
    }
}

TEST_CASE("heredity: weak restrictions stay weak") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(4 + trial % 7, 0.4, rng);
        Labeling f = sparing_exact(g).labeling;
        Graph h = random_subgraph(g, rng);
        CHECK(is_weak_iasi(h, restrict_to(f, h)).verdict);
    }
}

TEST_CASE("realize_labeling is sound for arbitrary feasible patterns") {
    std::mt19937 rng(515);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = random_graph(3 + trial % 8, 0.35, rng);
        // greedy random independent set, isolated vertices excluded
        std::vector<int> order = g.vertices();
        std::shuffle(order.begin(), order.end(), rng);
        Pattern p;
        for (int v : order) {
            if (g.degree(v) == 0) continue;
            bool clash = false;
            for (int u : p.expanded)
                if (g.has_edge(u, v)) clash = true;
            if (!clash) p.expanded.push_back(v);
        }
        std::sort(p.expanded.begin(), p.expanded.end());

        Labeling f = realize_labeling(g, p);
        CHECK(is_weak_iasi(g, f).verdict);
        CHECK(static_cast<int>(mono_indexed_edges(g, f).size()) == pattern_mono_count(g, p));
        for (int v : g.vertices()) {
            bool expanded = std::binary_search(p.expanded.begin(), p.expanded.end(), v);
            CHECK(f.at(v).size() == (expanded ? 2u : 1u));
        }
    }
}

TEST_CASE("spectrum brackets: contains the optimum and the empty pattern") {
    std::mt19937 rng(929);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(3 + trial % 7, 0.4, rng);
        auto spectrum = mono_count_spectrum(g);
        REQUIRE_FALSE(spectrum.empty());
        CHECK(*spectrum.begin() == sparing_exact(g).value);
        CHECK(spectrum.count(g.edge_count()) == 1);
    }
}

TEST_CASE("patterns feasible in both a graph and its complement are tiny") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 6;
        Graph g = random_graph(n, 0.5, rng);
        Graph co = complement(g);
        // exhaustive: any subset independent in both has at most one vertex
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> ids;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) ids.push_back(v);
            Pattern p{ids};
            if (pattern_feasible(g, p) && pattern_feasible(co, p))
                CHECK(ids.size() <= 1);
        }
    }
}
