#include <lmg/separation.hpp>

#include <functional>

#include <lmg/anterior.hpp>

namespace lmg {

std::vector<Path> all_paths(const MixedGraph& g, NodeId x, NodeId y, std::size_t node_limit) {
    if (g.node_count() > node_limit)
        throw LimitError("path enumeration is limited to " + std::to_string(node_limit) + " nodes, graph has " +
                         std::to_string(g.node_count()));
    g.check_node(x);
    g.check_node(y);
    std::vector<Path> out;
    std::vector<bool> on_path(g.node_count(), false);
    Path current = Path::single(x);
    on_path[x] = true;

    std::function<void(NodeId)> extend = [&](NodeId v) {
        if (v == y && current.nodes.size() > 1) {
            out.push_back(current);
            return;
        }
        for (EdgeId id : g.incident(v)) {
            const auto& e = g.edge(id);
            if (e.is_loop()) continue;
            NodeId w = e.other(v);
            if (on_path[w]) continue;
            on_path[w] = true;
            current.nodes.push_back(w);
            current.edges.push_back(id);
            extend(w);
            current.nodes.pop_back();
            current.edges.pop_back();
            on_path[w] = false;
        }
    };
    if (x == y) return out;
    extend(x);
    return out;
}

bool oracle_m_separated(const MixedGraph& g, const SeparationQuery& q, std::size_t node_limit) {
    if (g.node_count() > node_limit)
        throw LimitError("oracle is limited to " + std::to_string(node_limit) + " nodes, graph has " +
                         std::to_string(g.node_count()));
    require_loopless(g);
    if (q.a.intersects(q.b) || q.a.intersects(q.c) || q.b.intersects(q.c))
        throw std::invalid_argument("separation query sets must be pairwise disjoint");
    for (NodeId i : q.a.members())
        for (NodeId j : q.b.members())
            for (const auto& p : all_paths(g, i, j, node_limit))
                if (is_m_connecting(g, p, q.c)) return false;
    return true;
}

const char* to_string(CombinationCase c) {
    switch (c) {
        case CombinationCase::None: return "none";
        case CombinationCase::ColliderInAncestors: return "collider-in-ancestors";
        case CombinationCase::SharedNeighbourHeads: return "shared-neighbour-heads";
        case CombinationCase::NonColliderOutsideC: return "non-collider-outside-c";
        case CombinationCase::SharedNeighbourNoHead: return "shared-neighbour-no-head";
    }
    return "?";
}

CombinationCase combination_case(const MixedGraph& gstar, const Path& p1, const Path& p2, const NodeSet& c) {
    if (!is_anterior_graph(gstar)) throw std::invalid_argument("graph has an arrowhead at a line endpoint");
    if (p1.edges.empty() || p2.edges.empty() || p1.back() != p2.front())
        throw std::invalid_argument("paths must have edges and meet at a shared node");
    if (!is_m_connecting(gstar, p1, c) || !is_m_connecting(gstar, p2, c))
        throw std::invalid_argument("both paths must be m-connecting");

    NodeId h = p1.back();
    NodeId before = p1.nodes[p1.nodes.size() - 2];
    NodeId after = p2.nodes[1];
    bool head1 = gstar.edge(p1.edges.back()).head_at(h);
    bool head2 = gstar.edge(p2.edges.front()).head_at(h);
    NodeSet reach = c | ancestors(gstar, c);

    if (before != after) {
        bool collider = head1 && head2;
        if (collider && reach.contains(h)) return CombinationCase::ColliderInAncestors;
        if (!collider && !c.contains(h)) return CombinationCase::NonColliderOutsideC;
        return CombinationCase::None;
    }
    if (head1 && head2) return reach.contains(h) ? CombinationCase::SharedNeighbourHeads : CombinationCase::None;
    return CombinationCase::SharedNeighbourNoHead;
}

std::optional<Path> combine_m_connecting(const MixedGraph& gstar, const Path& p1, const Path& p2, const NodeSet& c) {
    if (combination_case(gstar, p1, p2, c) == CombinationCase::None) return std::nullopt;
    Path combined = combine_paths(p1, p2);
    if (combined.edges.empty()) return std::nullopt;
    return combined;
}

}  // namespace lmg
