#include <bit>
#include <random>

#include <doctest.h>

#include <lmg/anterior.hpp>
#include <lmg/corpus.hpp>
#include <lmg/independence.hpp>
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
    spec.p_multi = 0.1;
    spec.constraint = constraint;
    spec.seed = seed;
    spec.count = count;
    return generate_corpus(spec);
}

// Random statements over a ground set of `n` labels, each side nonempty.
IndependenceModel random_model(std::mt19937_64& rng, std::size_t n, std::size_t statements) {
    std::vector<std::string> ground;
    for (std::size_t k = 0; k < n; ++k) ground.push_back(std::string(1, static_cast<char>('a' + k)));
    IndependenceModel m(ground);
    std::uniform_int_distribution<unsigned> role(0, 3);
    while (m.size() < statements) {
        Statement s;
        for (std::size_t k = 0; k < n; ++k) {
            unsigned r = role(rng);
            if (r == 1) s.a |= Mask{1} << k;
            if (r == 2) s.b |= Mask{1} << k;
            if (r == 3) s.c |= Mask{1} << k;
        }
        m.insert(s);
    }
    return m;
}

Statement stmt(const IndependenceModel& m, const char* text) { return parse_statement(m, text); }

}  // namespace

TEST_SUITE_BEGIN("indmodel");

TEST_CASE("model basics") {
    IndependenceModel m({"i", "j", "k", "l"});
    CHECK(m.full_mask() == 0xF);
    CHECK(m.mask_of({"j", "l"}) == 0b1010);
    CHECK(m.labels_of(0b0101) == std::vector<std::string>{"i", "k"});

    Statement s = m.statement({"i"}, {"j", "k"}, {"l"});
    CHECK(m.insert(s));
    CHECK_FALSE(m.insert(s));
    CHECK(m.contains(s));
    CHECK_FALSE(m.contains(s.mirrored()));
    CHECK_FALSE(m.is_symmetric());
    m.insert(s.mirrored());
    CHECK(m.is_symmetric());
    CHECK(m.size() == 2);

    SUBCASE("trivial statements are members without being stored") {
        Statement t = m.statement({}, {"i"}, {"j"});
        CHECK(m.contains(t));
        CHECK_FALSE(m.insert(t));
        CHECK(m.size() == 2);
    }

    SUBCASE("invalid statements") {
        CHECK_THROWS_AS(m.validate({0b1, 0b1, 0}), std::invalid_argument);
        CHECK_THROWS_AS(m.validate({0b1, 0b10000, 0}), std::invalid_argument);
        CHECK_THROWS_AS(m.mask_of({"x"}), std::invalid_argument);
        CHECK_THROWS_AS(IndependenceModel({"a", "a"}), std::invalid_argument);
        CHECK_THROWS_AS(parse_statement(m, "{i} _||_ {x} | {}"), std::invalid_argument);
    }

    SUBCASE("formatting round-trips") {
        CHECK(format_statement(m, s) == "{i} _||_ {j,k} | {l}");
        CHECK(format_statement(m, m.statement({"i"}, {"j"}, {})) == "{i} _||_ {j} | {}");
        CHECK(parse_statement(m, "{i} _||_ {j,k} | {l}") == s);
        CHECK(parse_statement(m, "i _||_ {j,k} | l") == s);
        for (const auto& t : m.statements()) CHECK(parse_statement(m, format_statement(m, t)) == t);
    }

    SUBCASE("statements are listed smallest first") {
        m.insert(m.statement({"i"}, {"j"}, {}));
        auto all = m.statements();
        REQUIRE(all.size() == 3);
        CHECK(format_statement(m, all[0]) == "{i} _||_ {j} | {}");
    }
}

TEST_CASE("axiom sets") {
    CHECK(parse_axiom_set("graphoid") == graphoid);
    CHECK(parse_axiom_set("compositional_semi_graphoid") == compositional_semi_graphoid);
    CHECK(parse_axiom_set("symmetry,weak-union") == AxiomSet{Axiom::Symmetry, Axiom::WeakUnion});
    CHECK_THROWS_AS(parse_axiom_set("graphoids"), std::invalid_argument);
    CHECK(compositional_graphoid.members().size() == 6);
    CHECK_FALSE(compositional_semi_graphoid.contains(Axiom::Intersection));
    CHECK(graphoid.without(Axiom::Intersection) == semi_graphoid);
}

TEST_CASE("a lone oriented statement fails symmetry") {
    IndependenceModel m({"i", "j"});
    Statement s = m.statement({"i"}, {"j"}, {});
    m.insert(s);
    auto v = check_axiom(m, Axiom::Symmetry);
    REQUIRE(v.has_value());
    CHECK(v->axiom == Axiom::Symmetry);
    CHECK(v->premises == std::vector<Statement>{s});
    CHECK(v->missing == s.mirrored());
    CHECK_FALSE(check_axiom(m, Axiom::Decomposition).has_value());
    CHECK(check_axioms(m, compositional_graphoid)->axiom == Axiom::Symmetry);
}

TEST_CASE("separation models") {
    auto g = fixture("fig3");
    auto model = enumerate_model(g, false);
    CHECK(model.contains(stmt(model, "i _||_ j | {}")));
    CHECK_FALSE(model.contains(stmt(model, "i _||_ j | l")));
    CHECK(model == brute_model(g));
    CHECK(model.is_symmetric());
    CHECK_FALSE(check_axioms(model, compositional_graphoid).has_value());

    auto edgeless = enumerate_model(graph("node i\nnode j\n"), false);
    CHECK(edgeless.size() == 2);
    CHECK(edgeless.contains(stmt(edgeless, "i _||_ j | {}")));
    CHECK(edgeless.contains(stmt(edgeless, "j _||_ i | {}")));

    auto bidirected = enumerate_model(fixture("fig9b"), false);
    CHECK(bidirected.contains(stmt(bidirected, "i _||_ {k,l} | {}")));
    CHECK_FALSE(bidirected.contains(stmt(bidirected, "i _||_ k | j")));
    CHECK(bidirected == brute_model(fixture("fig9b")));

    SUBCASE("limits") {
        auto seven = fixture("fig7");
        CHECK_THROWS_AS(enumerate_model(seven, false), LimitError);
        CHECK_NOTHROW(enumerate_model(seven, true));
        ModelLimits tight;
        tight.singleton_model = 6;
        CHECK_THROWS_AS(enumerate_model(seven, true, tight), LimitError);
        IndependenceModel six({"a", "b", "c", "d", "e", "f"});
        CHECK_THROWS_AS(closure(six, graphoid), LimitError);
        CHECK_NOTHROW(closure(six, graphoid, 6));
    }
}

TEST_CASE("separation models match the reference and are compositional graphoids") {
    for (const auto& g : random_graphs(501, 150, 5)) {
        CAPTURE(serialize_graph(g));
        auto full = enumerate_model(g, false);
        REQUIRE(full == brute_model(g));
        CHECK_FALSE(check_axioms(full, compositional_graphoid).has_value());
        CHECK(conforms(full, g));
        CHECK(satisfies_global(full, g).holds);

        // Singleton statements determine the rest.
        auto singles = enumerate_model(g, true);
        CHECK(singles.is_subset_of(full));
        for (const auto& s : singles.statements()) CHECK(std::popcount(s.a) + std::popcount(s.b) == 2);
        CHECK(closure(singles, compositional_graphoid) == full);
    }
}

TEST_CASE("closure matches the reference fixpoint") {
    std::mt19937_64 rng(502);
    const AxiomSet sets[] = {semi_graphoid, graphoid, compositional_graphoid, compositional_semi_graphoid,
                             AxiomSet{Axiom::Symmetry}, AxiomSet{Axiom::Decomposition, Axiom::Composition},
                             AxiomSet{Axiom::Contraction}, AxiomSet{Axiom::Intersection, Axiom::WeakUnion}};
    for (int round = 0; round < 120; ++round) {
        const std::size_t n = 3 + round % 2;
        auto start = random_model(rng, n, 1 + round % 4);
        for (AxiomSet axioms : sets) {
            auto closed = closure(start, axioms);
            REQUIRE(closed == brute_closure(start, axioms));
            CHECK(start.is_subset_of(closed));
            CHECK(closure(closed, axioms) == closed);
            CHECK_FALSE(check_axioms(closed, axioms).has_value());
        }
        // Monotone in the starting model.
        auto bigger = start;
        for (const auto& s : random_model(rng, n, 2).statements()) bigger.insert(s);
        CHECK(closure(start, graphoid).is_subset_of(closure(bigger, graphoid)));
    }
    IndependenceModel empty({"a", "b", "c"});
    for (AxiomSet axioms : sets) CHECK(closure(empty, axioms).empty());
}

TEST_CASE("pairwise models") {
    auto dag = fixture("fig9c");
    auto p = pairwise_model(dag);
    CHECK(p.size() == 6);
    CHECK(p.is_symmetric());
    CHECK(p.contains(stmt(p, "i _||_ k | {}")));
    CHECK(p.contains(stmt(p, "i _||_ l | {j,k}")));
    CHECK(p.contains(stmt(p, "k _||_ l | {i,j}")));

    CHECK(pairwise_model(graph("a -- b\nb -> c\na <-> c\n")).empty());

    auto seven = pairwise_model(fixture("fig7"));
    CHECK(seven.contains(stmt(seven, "i _||_ m | {h,k,l}")));
    CHECK(seven.contains(stmt(seven, "l _||_ p | {h,m}")));
}

TEST_CASE("pairwise statements need intersection or composition to reach global ones") {
    SUBCASE("undirected: intersection") {
        auto p = pairwise_model(fixture("fig9a"));
        Statement target = stmt(p, "i _||_ {k,l} | j");
        CHECK(closure(p, graphoid).contains(target));
        CHECK_FALSE(closure(p, compositional_semi_graphoid).contains(target));
        CHECK(closure(p, compositional_graphoid) == enumerate_model(fixture("fig9a"), false));
    }
    SUBCASE("bidirected: composition") {
        auto p = pairwise_model(fixture("fig9b"));
        Statement target = stmt(p, "i _||_ {k,l} | {}");
        CHECK_FALSE(closure(p, graphoid).contains(target));
        CHECK(closure(p, compositional_semi_graphoid).contains(target));
        CHECK(closure(p, compositional_semi_graphoid) == enumerate_model(fixture("fig9b"), false));
    }
    SUBCASE("directed acyclic: intersection") {
        auto p = pairwise_model(fixture("fig9c"));
        Statement target = stmt(p, "l _||_ {i,k} | j");
        CHECK(closure(p, graphoid).contains(target));
        CHECK_FALSE(closure(p, compositional_semi_graphoid).contains(target));
    }
}

TEST_CASE("conformity") {
    auto g = fixture("fig1");
    IndependenceModel good(g.labels());
    good.insert(good.statement({"i"}, {"l"}, {"j"}));
    good.insert(good.statement({"i"}, {"k"}, {}));
    CHECK(conforms(good, g));

    IndependenceModel bad(g.labels());
    bad.insert(bad.statement({"i"}, {"l"}, {"j"}));
    bad.insert(bad.statement({"i"}, {"j"}, {}));
    CHECK_FALSE(conforms(bad, g));
    CHECK(*first_nonconforming(bad, g) == bad.statement({"i"}, {"j"}, {}));

    IndependenceModel sets(g.labels());
    sets.insert(sets.statement({"i", "k"}, {"j"}, {"l"}));
    CHECK_FALSE(conforms(sets, g));

    CHECK(conforms(IndependenceModel(g.labels()), g));
    CHECK_THROWS_AS(conforms(IndependenceModel({"a"}), g), std::invalid_argument);
}

TEST_CASE("pairwise and global Markov properties of separation models") {
    auto six = fixture("fig6");
    auto check = satisfies_pairwise(enumerate_model(six, true), six);
    CHECK_FALSE(check.holds);
    REQUIRE(check.violation.has_value());

    auto seven = fixture("fig7");
    auto model = enumerate_model(seven, true);
    CHECK(satisfies_pairwise(model, seven).holds);
    CHECK(pairwise_model(seven).is_subset_of(model));

    auto p = pairwise_model(fixture("fig9b"));
    CHECK(satisfies_pairwise(p, fixture("fig9b")).holds);
    auto global = satisfies_global(p, fixture("fig9b"));
    CHECK_FALSE(global.holds);
    REQUIRE(global.violation.has_value());
    CHECK_FALSE(p.contains(*global.violation));
    CHECK_THROWS_AS(satisfies_pairwise(p, fixture("fig3")), std::invalid_argument);
}

TEST_CASE("Markov equivalence") {
    auto g = fixture("fig4a");
    CHECK(markov_equivalent(g, g));
    CHECK_FALSE(markov_equivalent(g, anterior_graph(g)));
    CHECK_THROWS_AS(markov_equivalent(g, fixture("fig3")), std::invalid_argument);
    for (const auto& rg : random_graphs(503, 150, 6, CorpusConstraint::Ribbonless)) {
        CAPTURE(serialize_graph(rg));
        CHECK(markov_equivalent(rg, anterior_graph(rg)));
    }
}

TEST_CASE("marginal models") {
    auto g = fixture("fig3");
    auto model = enumerate_model(g, false);
    CHECK(marginal_model(model, {}) == model);

    auto without_p = marginal_model(model, {"p"});
    CHECK(without_p.ground_size() == 5);
    for (const auto& s : without_p.statements()) {
        auto t = model.statement(without_p.labels_of(s.a), without_p.labels_of(s.b), without_p.labels_of(s.c));
        CHECK(model.contains(t));
    }
    CHECK_THROWS_AS(marginal_model(model, {"x"}), std::invalid_argument);

    auto seven = enumerate_model(fixture("fig7"), true);
    auto marginal = marginal_model(seven, {"p"});
    for (const auto& label : marginal.ground()) CHECK(label != "p");
    CHECK(marginal.size() > 0);

    for (const auto& h : random_graphs(504, 60, 5)) {
        if (h.node_count() < 3) continue;
        auto full = enumerate_model(h, false);
        auto reduced = marginal_model(full, {h.label(0)});
        CHECK_FALSE(check_axioms(reduced, compositional_graphoid).has_value());
    }
}

TEST_SUITE_END();
