#include <lmg/anterior.hpp>

#include <deque>

namespace lmg {

namespace {

// Walks arrows backwards (towards tails) when `backwards`, else forwards.
NodeSet directed_reach(const MixedGraph& g, const NodeSet& start, bool backwards) {
    NodeSet seen = g.empty_set();
    std::deque<NodeId> queue;
    auto expand = [&](NodeId v) {
        for (EdgeId id : g.incident(v)) {
            const auto& e = g.edge(id);
            if (e.kind() != EdgeKind::Arrow || e.is_loop()) continue;
            // backwards: arrow u -> v, step to u
            bool step = backwards ? e.head_at(v) : !e.head_at(v);
            if (!step) continue;
            NodeId w = e.other(v);
            if (!seen.contains(w)) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    };
    for (NodeId v : start.members()) expand(v);
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        expand(v);
    }
    return seen;
}

}  // namespace

NodeSet ancestors(const MixedGraph& g, const NodeSet& s) { return directed_reach(g, s, true); }

NodeSet ancestors(const MixedGraph& g, NodeId i) {
    g.check_node(i);
    return ancestors(g, NodeSet(g.node_count(), {i}));
}

NodeSet descendants(const MixedGraph& g, const NodeSet& s) { return directed_reach(g, s, false); }

NodeSet descendants(const MixedGraph& g, NodeId i) {
    g.check_node(i);
    return descendants(g, NodeSet(g.node_count(), {i}));
}

bool on_directed_cycle(const MixedGraph& g, NodeId i) { return ancestors(g, i).contains(i); }

bool has_directed_cycle(const MixedGraph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (on_directed_cycle(g, v)) return true;
    return false;
}

bool is_anterior_graph(const MixedGraph& g) {
    NodeSet lines = line_endpoints(g);
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        if ((e.at_a == Mark::Head && lines.contains(e.a)) || (e.at_b == Mark::Head && lines.contains(e.b)))
            return false;
    }
    return true;
}

MixedGraph anterior_graph(const MixedGraph& g) {
    require_loopless(g);
    auto edges = g.edges();
    bool changed = true;
    while (changed) {
        changed = false;
        NodeSet lines = g.empty_set();
        for (const auto& e : edges) {
            if (e.at_a == Mark::Tail && e.at_b == Mark::Tail) {
                lines.insert(e.a);
                lines.insert(e.b);
            }
        }
        for (auto& e : edges) {
            if (e.at_a == Mark::Head && lines.contains(e.a)) {
                e.at_a = Mark::Tail;
                changed = true;
            }
            if (e.at_b == Mark::Head && lines.contains(e.b)) {
                e.at_b = Mark::Tail;
                changed = true;
            }
        }
    }
    return g.with_edges(std::move(edges));
}

MixedGraph anterior_graph_in_order(const MixedGraph& g, const std::vector<std::size_t>& order) {
    require_loopless(g);
    auto edges = g.edges();
    NodeSet lines = line_endpoints(g);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t end : order) {
            auto& e = edges.at(end / 2);
            bool at_a = end % 2 == 0;
            Mark& mark = at_a ? e.at_a : e.at_b;
            NodeId node = at_a ? e.a : e.b;
            if (mark != Mark::Head || !lines.contains(node)) continue;
            mark = Mark::Tail;
            changed = true;
            if (e.at_a == Mark::Tail && e.at_b == Mark::Tail) {
                lines.insert(e.a);
                lines.insert(e.b);
            }
        }
    }
    return g.with_edges(std::move(edges));
}

NodeSet anteriors_in_anterior_graph(const MixedGraph& gstar, NodeId i) {
    gstar.check_node(i);
    NodeSet arrows_in = ancestors(gstar, i);
    NodeSet seen = arrows_in;
    seen.insert(i);
    std::deque<NodeId> queue;
    for (NodeId v : seen.members()) queue.push_back(v);
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (EdgeId id : gstar.incident(v)) {
            const auto& e = gstar.edge(id);
            if (e.kind() != EdgeKind::Line) continue;
            NodeId w = e.other(v);
            if (!seen.contains(w)) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    seen.erase(i);
    return seen;
}

NodeSet anteriors(const MixedGraph& g, NodeId i) {
    g.check_node(i);
    return anteriors_in_anterior_graph(anterior_graph(g), i);
}

}  // namespace lmg
