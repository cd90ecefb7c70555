#include <lmg/separation.hpp>

#include <deque>
#include <limits>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <lmg/anterior.hpp>

namespace lmg {

namespace {

void check_pair_query(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c) {
    g.check_node(x);
    g.check_node(y);
    if (x == y) throw std::invalid_argument("m-connection needs two distinct nodes");
    if (c.universe() != g.node_count()) throw std::invalid_argument("conditioning set built for another graph");
    if (c.contains(x) || c.contains(y)) throw std::invalid_argument("query endpoint lies in the conditioning set");
    require_loopless(g);
}

struct WalkSearch {
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    // state = 2 * node + arrived_with_head
    std::vector<std::size_t> parent_state;
    std::vector<EdgeId> parent_edge;
    std::size_t goal = none;
};

WalkSearch walk_search(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c, const NodeSet& reach) {
    WalkSearch s;
    std::size_t states = 2 * g.node_count();
    s.parent_state.assign(states, WalkSearch::none);
    s.parent_edge.assign(states, 0);
    std::vector<bool> seen(states, false);
    std::deque<std::size_t> queue;
    const std::size_t start = WalkSearch::none - 1;

    auto visit = [&](std::size_t from, EdgeId id, NodeId w) {
        std::size_t st = 2 * static_cast<std::size_t>(w) + (g.edge(id).head_at(w) ? 1 : 0);
        if (seen[st]) return false;
        seen[st] = true;
        s.parent_state[st] = from;
        s.parent_edge[st] = id;
        if (w == y) {
            s.goal = st;
            return true;
        }
        queue.push_back(st);
        return false;
    };

    for (EdgeId id : g.incident(x)) {
        NodeId w = g.edge(id).other(x);
        if (visit(start, id, w)) return s;
    }
    while (!queue.empty()) {
        std::size_t st = queue.front();
        queue.pop_front();
        auto v = static_cast<NodeId>(st / 2);
        bool head_in = st % 2 == 1;
        for (EdgeId id : g.incident(v)) {
            const auto& e = g.edge(id);
            bool collider = head_in && e.head_at(v);
            if (collider ? !reach.contains(v) : c.contains(v)) continue;
            NodeId w = e.other(v);
            if (w == x) continue;
            if (visit(st, id, w)) return s;
        }
    }
    return s;
}

Path walk_from(NodeId x, const WalkSearch& s) {
    Path p;
    std::size_t st = s.goal;
    while (st != WalkSearch::none - 1) {
        p.nodes.push_back(static_cast<NodeId>(st / 2));
        p.edges.push_back(s.parent_edge[st]);
        st = s.parent_state[st];
    }
    p.nodes.push_back(x);
    return p.reversed();
}

NodeSet collider_reach(const MixedGraph& g, const NodeSet& c) { return c | ancestors(g, c); }

}  // namespace

std::optional<Path> find_m_connecting_walk(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c) {
    check_pair_query(g, x, y, c);
    auto s = walk_search(g, x, y, c, collider_reach(g, c));
    if (s.goal == WalkSearch::none) return std::nullopt;
    return walk_from(x, s);
}

bool m_connecting_walk_exists(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c) {
    return find_m_connecting_walk(g, x, y, c).has_value();
}

namespace {

// Gadget graph: every edge contributes one vertex per end, joined to each
// other (edge unused). Every inner node contributes two vertices joined to
// each other (node unused) and to the ends it may be entered or left by;
// the two query endpoints contribute one vertex each. A perfect matching
// then selects a path from x to y plus disjoint cycles, and the per-node
// wiring enforces the collider conditions:
//   in C                 both slots take arrowhead ends only
//   in an(C) \ C         both slots take any end
//   outside C ∪ an(C)    one slot takes any end, the other tail ends only
std::optional<Path> matching_search(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c, const NodeSet& reach) {
    using Gadget = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const std::size_t m = g.edge_count();
    const std::size_t n = g.node_count();

    auto end_vertex = [&](EdgeId id, NodeId at) { return 2 * static_cast<std::size_t>(id) + (g.edge(id).a == at ? 0 : 1); };
    std::vector<std::size_t> first_slot(n);
    std::size_t count = 2 * m;
    for (NodeId v = 0; v < n; ++v) {
        first_slot[v] = count;
        count += (v == x || v == y) ? 1 : 2;
    }

    Gadget h(count);
    for (std::size_t id = 0; id < m; ++id) boost::add_edge(2 * id, 2 * id + 1, h);
    for (NodeId v = 0; v < n; ++v) {
        std::size_t s0 = first_slot[v];
        if (v == x || v == y) {
            for (EdgeId id : g.incident(v)) boost::add_edge(s0, end_vertex(id, v), h);
            continue;
        }
        std::size_t s1 = s0 + 1;
        boost::add_edge(s0, s1, h);
        bool in_c = c.contains(v);
        bool free = !in_c && reach.contains(v);
        for (EdgeId id : g.incident(v)) {
            bool head = g.edge(id).head_at(v);
            std::size_t ev = end_vertex(id, v);
            if (in_c) {
                if (!head) continue;
                boost::add_edge(s0, ev, h);
                boost::add_edge(s1, ev, h);
            } else if (free) {
                boost::add_edge(s0, ev, h);
                boost::add_edge(s1, ev, h);
            } else {
                boost::add_edge(s0, ev, h);
                if (!head) boost::add_edge(s1, ev, h);
            }
        }
    }

    std::vector<boost::graph_traits<Gadget>::vertex_descriptor> mate(count);
    boost::edmonds_maximum_cardinality_matching(h, &mate[0]);
    const auto null = boost::graph_traits<Gadget>::null_vertex();
    for (auto v : mate)
        if (v == null) return std::nullopt;

    Path p = Path::single(x);
    std::size_t slot = first_slot[x];
    NodeId at = x;
    while (true) {
        std::size_t ev = mate[slot];
        auto id = static_cast<EdgeId>(ev / 2);
        NodeId next = g.edge(id).other(at);
        std::size_t far_end = end_vertex(id, next);
        std::size_t entry = mate[far_end];
        p.edges.push_back(id);
        p.nodes.push_back(next);
        if (next == y) break;
        at = next;
        slot = entry == first_slot[next] ? first_slot[next] + 1 : first_slot[next];
    }
    return p;
}

}  // namespace

std::optional<Path> find_m_connecting_path_by_matching(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c) {
    check_pair_query(g, x, y, c);
    return matching_search(g, x, y, c, collider_reach(g, c));
}

MSeparation::MSeparation(const MixedGraph& g) : g_(&g), anterior_(false) {
    require_loopless(g);
    anterior_ = is_anterior_graph(g);
}

std::optional<Path> MSeparation::witness(NodeId x, NodeId y, const NodeSet& c) const {
    check_pair_query(*g_, x, y, c);
    NodeSet reach = collider_reach(*g_, c);
    auto s = walk_search(*g_, x, y, c, reach);
    if (s.goal == WalkSearch::none) return std::nullopt;
    if (anterior_) return walk_from(x, s);
    return matching_search(*g_, x, y, c, reach);
}

bool MSeparation::connected(NodeId x, NodeId y, const NodeSet& c) const { return witness(x, y, c).has_value(); }

bool MSeparation::separated(const SeparationQuery& q) const {
    const auto n = g_->node_count();
    if (q.a.universe() != n || q.b.universe() != n || q.c.universe() != n)
        throw std::invalid_argument("query sets built for another graph");
    if (q.a.empty() || q.b.empty()) throw std::invalid_argument("separation query needs non-empty A and B");
    if (q.a.intersects(q.b) || q.a.intersects(q.c) || q.b.intersects(q.c))
        throw std::invalid_argument("separation query sets must be pairwise disjoint");
    for (NodeId i : q.a.members())
        for (NodeId j : q.b.members())
            if (connected(i, j, q.c)) return false;
    return true;
}

bool m_connecting_path_exists(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c) {
    return MSeparation(g).connected(x, y, c);
}

std::optional<Path> find_m_connecting_path(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c) {
    return MSeparation(g).witness(x, y, c);
}

bool m_separated(const MixedGraph& g, const SeparationQuery& q) { return MSeparation(g).separated(q); }

bool is_m_connecting(const MixedGraph& g, const Path& p, const NodeSet& c) {
    if (!is_path(g, p)) return false;
    NodeSet reach = collider_reach(g, c);
    for (std::size_t k = 1; k + 1 < p.nodes.size(); ++k) {
        NodeId v = p.nodes[k];
        if (is_collider(g, v, p.edges[k - 1], p.edges[k])) {
            if (!reach.contains(v)) return false;
        } else if (c.contains(v)) {
            return false;
        }
    }
    return true;
}

}  // namespace lmg
