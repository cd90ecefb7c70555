#include <lmg/structure.hpp>

#include <algorithm>
#include <tuple>

#include <lmg/anterior.hpp>

namespace lmg {

const char* to_string(RibbonFlavor f) { return f == RibbonFlavor::Straight ? "straight" : "cyclic"; }

std::vector<Ribbon> find_ribbons(const MixedGraph& g) {
    require_loopless(g);
    const NodeSet lines = line_endpoints(g);
    NodeSet cyclic = g.empty_set();
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (on_directed_cycle(g, v)) cyclic.insert(v);

    std::vector<Ribbon> out;
    std::vector<std::tuple<NodeId, NodeId, NodeId, Mark, Mark>> seen;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        NodeSet down = descendants(g, i);
        down.insert(i);
        auto straight = down & lines;
        auto on_cycle = down & cyclic;
        if (straight.empty() && on_cycle.empty()) continue;
        RibbonFlavor flavor = straight.empty() ? RibbonFlavor::Cyclic : RibbonFlavor::Straight;
        NodeId witness = straight.empty() ? on_cycle.members().front() : straight.members().front();

        const auto& inc = g.incident(i);
        for (std::size_t x = 0; x < inc.size(); ++x) {
            for (std::size_t y = x + 1; y < inc.size(); ++y) {
                EdgeId e1 = inc[x];
                EdgeId e2 = inc[y];
                if (!g.edge(e1).head_at(i) || !g.edge(e2).head_at(i)) continue;
                NodeId h = g.edge(e1).other(i);
                NodeId j = g.edge(e2).other(i);
                if (h == j) continue;
                if (h > j) {
                    std::swap(h, j);
                    std::swap(e1, e2);
                }
                Mark at_h = g.edge(e1).mark_at(h);
                Mark at_j = g.edge(e2).mark_at(j);
                bool shortcut = false;
                for (EdgeId f : g.incident(h)) {
                    const auto& e = g.edge(f);
                    if (e.joins(h, j) && e.mark_at(h) == at_h && e.mark_at(j) == at_j) {
                        shortcut = true;
                        break;
                    }
                }
                if (shortcut) continue;
                auto key = std::make_tuple(h, i, j, at_h, at_j);
                if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
                seen.push_back(key);
                out.push_back({h, i, j, e1, e2, flavor, witness});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Ribbon& a, const Ribbon& b) {
        return std::tie(a.h, a.i, a.j, a.first, a.second) < std::tie(b.h, b.i, b.j, b.first, b.second);
    });
    return out;
}

bool is_ribbonless(const MixedGraph& g) { return find_ribbons(g).empty(); }

bool is_ancestral(const MixedGraph& g) {
    if (!g.is_loopless() || has_directed_cycle(g) || !is_anterior_graph(g)) return false;
    for (const auto& e : g.edges()) {
        if (e.kind() != EdgeKind::Arc) continue;
        if (ancestors(g, e.a).contains(e.b) || ancestors(g, e.b).contains(e.a)) return false;
    }
    return true;
}

GraphClass classify(const MixedGraph& g) {
    GraphClass c;
    c.loopless_mixed = g.is_loopless();
    if (!c.loopless_mixed) return c;
    auto all_of_kind = [&](EdgeKind k) {
        return std::all_of(g.edges().begin(), g.edges().end(), [k](const Edge& e) { return e.kind() == k; });
    };
    bool no_lines = std::none_of(g.edges().begin(), g.edges().end(),
                                 [](const Edge& e) { return e.kind() == EdgeKind::Line; });
    bool cycle = has_directed_cycle(g);
    c.undirected = all_of_kind(EdgeKind::Line);
    c.bidirected = all_of_kind(EdgeKind::Arc);
    c.dag = all_of_kind(EdgeKind::Arrow) && !cycle;
    c.acyclic_directed_mixed = no_lines && !cycle;
    c.ancestral = is_ancestral(g);
    c.ribbonless = is_ribbonless(g);
    c.maximal = c.ribbonless && is_maximal(g);
    return c;
}

std::vector<std::string> hierarchy_violations(const GraphClass& c) {
    struct Rule {
        bool GraphClass::*from;
        bool GraphClass::*to;
        const char* text;
    };
    static const Rule rules[] = {
        {&GraphClass::ribbonless, &GraphClass::loopless_mixed, "ribbonless => loopless mixed"},
        {&GraphClass::ancestral, &GraphClass::ribbonless, "ancestral => ribbonless"},
        {&GraphClass::acyclic_directed_mixed, &GraphClass::ribbonless, "acyclic directed mixed => ribbonless"},
        {&GraphClass::undirected, &GraphClass::ancestral, "undirected => ancestral"},
        {&GraphClass::bidirected, &GraphClass::ancestral, "bidirected => ancestral"},
        {&GraphClass::bidirected, &GraphClass::acyclic_directed_mixed, "bidirected => acyclic directed mixed"},
        {&GraphClass::dag, &GraphClass::ancestral, "dag => ancestral"},
        {&GraphClass::dag, &GraphClass::acyclic_directed_mixed, "dag => acyclic directed mixed"},
        {&GraphClass::undirected, &GraphClass::maximal, "undirected => maximal"},
        {&GraphClass::bidirected, &GraphClass::maximal, "bidirected => maximal"},
        {&GraphClass::dag, &GraphClass::maximal, "dag => maximal"},
        {&GraphClass::maximal, &GraphClass::ribbonless, "maximal => ribbonless"},
    };
    std::vector<std::string> out;
    for (const auto& r : rules)
        if (c.*(r.from) && !(c.*(r.to))) out.emplace_back(r.text);
    return out;
}

}  // namespace lmg
