#include <doctest.h>

#include <lmg/anterior.hpp>
#include <lmg/corpus.hpp>
#include <lmg/separation.hpp>
#include <lmg/structure.hpp>

#include "support.hpp"

using namespace lmg;
using namespace lmg::testing;

namespace {

std::vector<MixedGraph> random_graphs(std::uint64_t seed, std::size_t count, std::size_t max_nodes,
                                      CorpusConstraint constraint = CorpusConstraint::None) {
    CorpusSpec spec;
    spec.min_nodes = 2;
    spec.max_nodes = max_nodes;
    spec.p_multi = 0.15;
    spec.constraint = constraint;
    spec.seed = seed;
    spec.count = count;
    return generate_corpus(spec);
}

NodeSet from_mask(const MixedGraph& g, std::uint32_t m) {
    NodeSet s = g.empty_set();
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (m >> v & 1u) s.insert(v);
    return s;
}

}  // namespace

TEST_SUITE_BEGIN("separation");

TEST_CASE("fig3: a collider opens when a descendant is conditioned on") {
    auto g = fixture("fig3");
    MSeparation engine(g);
    const NodeId i = g.id_of("i"), j = g.id_of("j");

    CHECK_FALSE(engine.connected(i, j, g.empty_set()));
    auto w = engine.witness(i, j, nodes(g, {"l"}));
    REQUIRE(w.has_value());
    CHECK(format_path(g, *w) == "i -> h <- j");
    CHECK(is_m_connecting(g, *w, nodes(g, {"l"})));
    CHECK_FALSE(engine.witness(i, j, g.empty_set()).has_value());
    CHECK(engine.connected(i, j, nodes(g, {"k"})));
    CHECK(engine.connected(i, j, nodes(g, {"l", "h"})));
    CHECK(m_separated(g, {nodes(g, {"i"}), nodes(g, {"j"}), g.empty_set()}));
    CHECK(oracle_m_separated(g, {nodes(g, {"i"}), nodes(g, {"j"}), g.empty_set()}));
    CHECK_FALSE(oracle_m_separated(g, {nodes(g, {"i"}), nodes(g, {"j"}), nodes(g, {"p"})}));
}

TEST_CASE("conditioning on a non-collider blocks") {
    auto g = graph("a -- b\nb -> c\nc <-> d\n");
    CHECK(m_separated(g, {nodes(g, {"a"}), nodes(g, {"c"}), nodes(g, {"b"})}));
    CHECK_FALSE(m_separated(g, {nodes(g, {"a"}), nodes(g, {"c"}), g.empty_set()}));
    CHECK(m_separated(g, {nodes(g, {"a"}), nodes(g, {"d"}), g.empty_set()}));
    CHECK_FALSE(m_separated(g, {nodes(g, {"a", "b"}), nodes(g, {"d"}), nodes(g, {"c"})}));
}

TEST_CASE("query validation") {
    auto g = fixture("fig3");
    MSeparation engine(g);
    const NodeId i = g.id_of("i");
    CHECK_THROWS_AS(engine.connected(i, i, g.empty_set()), std::invalid_argument);
    CHECK_THROWS_AS(engine.connected(i, g.id_of("j"), nodes(g, {"i"})), std::invalid_argument);
    CHECK_THROWS_AS(engine.separated({g.empty_set(), nodes(g, {"j"}), g.empty_set()}), std::invalid_argument);
    CHECK_THROWS_AS(engine.separated({nodes(g, {"i", "j"}), nodes(g, {"j"}), g.empty_set()}), std::invalid_argument);
    CHECK_THROWS_AS(engine.separated({NodeSet(3, {0}), NodeSet(3, {1}), NodeSet(3)}), std::invalid_argument);
    auto looped = parse_graph("a -> a\na -- b\n", ParseOptions{true}).graph;
    CHECK_THROWS_AS(MSeparation{looped}, std::invalid_argument);
}

TEST_CASE("a connecting walk need not give a connecting path") {
    // x -> v <- y with a line at v: the walk x -> v -- w -- v <- y passes v
    // twice as a non-collider, but the only x-y path has v as a collider.
    auto g = graph("x -> v\ny -> v\nv -- w\nv -- w\n");
    const NodeId x = g.id_of("x"), y = g.id_of("y");
    CHECK(m_connecting_walk_exists(g, x, y, g.empty_set()));
    auto walk = find_m_connecting_walk(g, x, y, g.empty_set());
    REQUIRE(walk.has_value());
    CHECK(is_walk(g, *walk));
    CHECK_FALSE(is_path(g, *walk));

    CHECK_FALSE(m_connecting_path_exists(g, x, y, g.empty_set()));
    CHECK_FALSE(find_m_connecting_path_by_matching(g, x, y, g.empty_set()).has_value());
    CHECK(oracle_m_separated(g, {NodeSet(4, {x}), NodeSet(4, {y}), g.empty_set()}));
    CHECK(MSeparation(g).separated({NodeSet(4, {x}), NodeSet(4, {y}), g.empty_set()}));
    CHECK_FALSE(MSeparation(g).uses_walk_search_only());

    // A single line suffices: the walk may use the same edge twice.
    auto single = graph("x -> v\ny -> v\nv -- w\n");
    CHECK(m_connecting_walk_exists(single, single.id_of("x"), single.id_of("y"), single.empty_set()));
    CHECK_FALSE(m_connecting_path_exists(single, single.id_of("x"), single.id_of("y"), single.empty_set()));
}

TEST_CASE("all_paths counts parallel edges separately") {
    auto g = graph("a -> b\na <-> b\nb -- c\n");
    CHECK(all_paths(g, g.id_of("a"), g.id_of("c")).size() == 2);
    CHECK(all_paths(g, g.id_of("a"), g.id_of("a")).empty());
    auto big = graph("a -- b\nb -- c\nc -- d\nd -- e\ne -- f\nf -- g\ng -- h\nh -- i\n");
    CHECK_THROWS_AS(all_paths(big, 0, 1), LimitError);
    CHECK(all_paths(big, 0, 8, 9).size() == 1);
}

TEST_CASE("engine, matching search, library oracle and reference oracle agree") {
    std::size_t queries = 0;
    for (const auto& g : random_graphs(301, 250, 6)) {
        CAPTURE(serialize_graph(g));
        MSeparation engine(g);
        const std::size_t n = g.node_count();
        for (NodeId x = 0; x < n; ++x) {
            for (NodeId y = 0; y < n; ++y) {
                if (x == y) continue;
                for (std::uint32_t m = 0; m < (1u << n); ++m) {
                    if (m >> x & 1u || m >> y & 1u) continue;
                    NodeSet c = from_mask(g, m);
                    const bool reference = brute_connected(g, x, y, bits(g, c));
                    const bool fast = engine.connected(x, y, c);
                    REQUIRE(fast == reference);
                    CHECK(find_m_connecting_path_by_matching(g, x, y, c).has_value() == reference);
                    CHECK(oracle_m_separated(g, {NodeSet(n, {x}), NodeSet(n, {y}), c}) == !reference);
                    if (reference) {
                        auto w = engine.witness(x, y, c);
                        REQUIRE(w.has_value());
                        CHECK(w->front() == x);
                        CHECK(w->back() == y);
                        CHECK(is_path(g, *w));
                        CHECK(is_m_connecting(g, *w, c));
                    }
                    // The walk search over-approximates and is exact on anterior graphs.
                    if (reference) CHECK(m_connecting_walk_exists(g, x, y, c));
                    if (is_anterior_graph(g)) CHECK(m_connecting_walk_exists(g, x, y, c) == reference);
                    ++queries;
                }
            }
        }
    }
    CHECK(queries > 10000);
}

TEST_CASE("set queries reduce to singleton queries") {
    for (const auto& g : random_graphs(302, 60, 5)) {
        const std::size_t n = g.node_count();
        MSeparation engine(g);
        // Every assignment of nodes to A, B, C or nothing.
        std::size_t total = 1;
        for (std::size_t k = 0; k < n; ++k) total *= 4;
        for (std::size_t code = 0; code < total; ++code) {
            SeparationQuery q{g.empty_set(), g.empty_set(), g.empty_set()};
            std::size_t rest = code;
            for (NodeId v = 0; v < n; ++v, rest /= 4) {
                if (rest % 4 == 1) q.a.insert(v);
                if (rest % 4 == 2) q.b.insert(v);
                if (rest % 4 == 3) q.c.insert(v);
            }
            if (q.a.empty() || q.b.empty()) continue;
            CHECK(engine.separated(q) == oracle_m_separated(g, q));
        }
    }
}

TEST_CASE("combining m-connecting paths in anterior graphs of ribbonless graphs") {
    std::size_t combined = 0;
    for (const auto& rg : random_graphs(303, 120, 5, CorpusConstraint::Ribbonless)) {
        const MixedGraph g = anterior_graph(rg);
        CAPTURE(serialize_graph(g));
        const std::size_t n = g.node_count();
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            NodeSet c = from_mask(g, m);
            // All m-connecting paths given C, grouped by start node.
            std::vector<Path> connecting;
            for (NodeId x = 0; x < n; ++x)
                for (NodeId y = 0; y < n; ++y)
                    if (x != y && !c.contains(x) && !c.contains(y))
                        for (auto& p : all_paths(g, x, y))
                            if (is_m_connecting(g, p, c)) connecting.push_back(std::move(p));
            for (const auto& p1 : connecting) {
                for (const auto& p2 : connecting) {
                    if (p1.back() != p2.front() || p1.front() == p2.back() || c.contains(p1.back())) continue;
                    auto kind = combination_case(g, p1, p2, c);
                    if (kind == CombinationCase::None) continue;
                    auto joined = combine_m_connecting(g, p1, p2, c);
                    REQUIRE(joined.has_value());
                    CAPTURE(format_path(g, p1));
                    CAPTURE(format_path(g, p2));
                    CAPTURE(to_string(kind));
                    CHECK(is_path(g, *joined));
                    CHECK(is_m_connecting(g, *joined, c));
                    ++combined;
                }
            }
        }
    }
    CHECK(combined > 1000);
}

TEST_CASE("combination cases") {
    auto g = graph("a -> h\nb -> h\nh -> c\n");
    const NodeId a = g.id_of("a"), b = g.id_of("b"), h = g.id_of("h"), c = g.id_of("c");
    Path ah{{a, h}, {0}};
    Path hb{{h, b}, {1}};
    Path hc{{h, c}, {2}};
    CHECK(combination_case(g, ah, hb, nodes(g, {"c"})) == CombinationCase::ColliderInAncestors);
    CHECK(combination_case(g, ah, hb, g.empty_set()) == CombinationCase::None);
    CHECK(combination_case(g, ah, hc, g.empty_set()) == CombinationCase::NonColliderOutsideC);
    CHECK_FALSE(combine_m_connecting(g, ah, hb, g.empty_set()).has_value());
    CHECK(combine_m_connecting(g, ah, hc, g.empty_set())->nodes == std::vector<NodeId>{a, h, c});

    // Shared neighbour: the two paths leave h through the same node.
    auto s = graph("x -- k\nk -- h\nk -- y\n");
    const NodeId x = s.id_of("x"), k = s.id_of("k"), hh = s.id_of("h"), y = s.id_of("y");
    Path to_h{{x, k, hh}, {0, 1}};
    Path from_h{{hh, k, y}, {1, 2}};
    CHECK(combination_case(s, to_h, from_h, s.empty_set()) == CombinationCase::SharedNeighbourNoHead);
    CHECK(combine_m_connecting(s, to_h, from_h, s.empty_set())->nodes == std::vector<NodeId>{x, k, y});

    CHECK_THROWS_AS(combination_case(fixture("fig2a"), ah, hb, g.empty_set()), std::invalid_argument);
    CHECK_THROWS_AS(combination_case(g, Path{{a, h, c}, {0, 2}}, Path{{c, h, b}, {2, 1}}, nodes(g, {"h"})),
                    std::invalid_argument);
}

TEST_SUITE_END();
