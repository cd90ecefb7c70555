#include <lmg/independence.hpp>

#include <vector>

namespace lmg {

namespace {

// Non-empty proper subsets and the full mask itself are visited; the empty
// subset is skipped.
template <class F>
void for_each_nonempty_subset(Mask m, F&& f) {
    for (Mask sub = m; sub != 0; sub = (sub - 1) & m) f(sub);
}

std::optional<AxiomViolation> check_instance(const IndependenceModel& j, Axiom axiom, Mask a, Mask b, Mask c,
                                             Mask d) {
    auto has = [&](Mask x, Mask y, Mask z) { return j.contains({x, y, z}); };
    auto fail = [&](std::vector<Statement> premises, Statement missing) {
        return std::optional<AxiomViolation>(AxiomViolation{axiom, std::move(premises), missing});
    };
    switch (axiom) {
        case Axiom::Symmetry:
            if (has(a, b, c) && !has(b, a, c)) return fail({{a, b, c}}, {b, a, c});
            break;
        case Axiom::Decomposition:
            if (has(a, b | d, c)) {
                if (!has(a, b, c)) return fail({{a, b | d, c}}, {a, b, c});
                if (!has(a, d, c)) return fail({{a, b | d, c}}, {a, d, c});
            }
            break;
        case Axiom::WeakUnion:
            if (has(a, b | d, c)) {
                if (!has(a, b, c | d)) return fail({{a, b | d, c}}, {a, b, c | d});
                if (!has(a, d, c | b)) return fail({{a, b | d, c}}, {a, d, c | b});
            }
            break;
        case Axiom::Contraction:
            if (has(a, b, c | d) && has(a, d, c) && !has(a, b | d, c))
                return fail({{a, b, c | d}, {a, d, c}}, {a, b | d, c});
            if (has(a, b | d, c)) {
                if (!has(a, b, c | d)) return fail({{a, b | d, c}}, {a, b, c | d});
                if (!has(a, d, c)) return fail({{a, b | d, c}}, {a, d, c});
            }
            break;
        case Axiom::Intersection:
            if (has(a, b, c | d) && has(a, d, c | b) && !has(a, b | d, c))
                return fail({{a, b, c | d}, {a, d, c | b}}, {a, b | d, c});
            break;
        case Axiom::Composition:
            if (has(a, b, c) && has(a, d, c) && !has(a, b | d, c)) return fail({{a, b, c}, {a, d, c}}, {a, b | d, c});
            break;
    }
    return std::nullopt;
}

}  // namespace

std::optional<AxiomViolation> check_axiom(const IndependenceModel& model, Axiom axiom) {
    const std::size_t n = model.ground_size();
    std::vector<unsigned> role(n, 0);  // 0 none, 1 A, 2 B, 3 C, 4 D
    while (true) {
        Mask m[5] = {0, 0, 0, 0, 0};
        for (std::size_t k = 0; k < n; ++k) m[role[k]] |= Mask{1} << k;
        if (m[1] != 0 && m[2] != 0 && !(axiom == Axiom::Symmetry && m[4] != 0))
            if (auto v = check_instance(model, axiom, m[1], m[2], m[3], m[4])) return v;
        std::size_t k = 0;
        while (k < n && role[k] == 4) role[k++] = 0;
        if (k == n) break;
        ++role[k];
    }
    return std::nullopt;
}

std::optional<AxiomViolation> check_axioms(const IndependenceModel& model, AxiomSet axioms) {
    for (Axiom a : axioms.members())
        if (auto v = check_axiom(model, a)) return v;
    return std::nullopt;
}

IndependenceModel closure(const IndependenceModel& model, AxiomSet axioms, std::size_t ground_limit) {
    if (model.ground_size() > ground_limit)
        throw LimitError("closure is limited to " + std::to_string(ground_limit) + " elements, model has " +
                         std::to_string(model.ground_size()));
    IndependenceModel out = model;
    std::vector<Statement> work = model.statements();
    auto add = [&](Statement t) {
        if (out.insert(t)) work.push_back(t);
    };
    const Mask full = model.full_mask();
    const bool sym = axioms.contains(Axiom::Symmetry);
    const bool dec = axioms.contains(Axiom::Decomposition);
    const bool wu = axioms.contains(Axiom::WeakUnion);
    const bool con = axioms.contains(Axiom::Contraction);
    const bool inter = axioms.contains(Axiom::Intersection);
    const bool comp = axioms.contains(Axiom::Composition);

    while (!work.empty()) {
        const Statement s = work.back();
        work.pop_back();
        const Mask a = s.a, b = s.b, c = s.c;
        const Mask free = full & ~(a | b | c);

        if (sym) add({b, a, c});
        if (dec || wu || con) {
            for_each_nonempty_subset(b, [&](Mask part) {
                if (part == b) return;
                const Mask rest = b ^ part;
                if (dec) add({a, part, c});
                if (wu || con) add({a, part, c | rest});
                if (con) add({a, rest, c});
            });
        }
        if (con) {
            // s as <A, B | C ∪ D> with partner <A, D | C>.
            for_each_nonempty_subset(c, [&](Mask d) {
                if (out.contains({a, d, c ^ d})) add({a, b | d, c ^ d});
            });
            // s as <A, D | C> with partner <A, B | C ∪ D>.
            for_each_nonempty_subset(free, [&](Mask other) {
                if (out.contains({a, other, c | b})) add({a, other | b, c});
            });
        }
        if (inter) {
            for_each_nonempty_subset(c, [&](Mask d) {
                if (out.contains({a, d, (c ^ d) | b})) add({a, b | d, c ^ d});
            });
        }
        if (comp) {
            for_each_nonempty_subset(free, [&](Mask d) {
                if (out.contains({a, d, c})) add({a, b | d, c});
            });
        }
    }
    return out;
}

}  // namespace lmg
