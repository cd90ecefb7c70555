#include <lmg/structure.hpp>

#include <deque>
#include <functional>

#include <lmg/anterior.hpp>

namespace lmg {

namespace {

void check_pair(const MixedGraph& g, NodeId i, NodeId j) {
    g.check_node(i);
    g.check_node(j);
    if (i == j) throw std::invalid_argument("inducing paths need two distinct nodes");
    require_loopless(g);
}

NodeSet pair_ancestors(const MixedGraph& g, NodeId i, NodeId j) {
    return ancestors(g, NodeSet(g.node_count(), {i, j}));
}

// Pairs with a primitive inducing path, without the ribbonless precondition.
std::vector<MaximalityViolation> inducing_violations(const MixedGraph& g, bool first_only) {
    std::vector<MaximalityViolation> out;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        for (NodeId j = i + 1; j < g.node_count(); ++j) {
            if (g.adjacent(i, j)) continue;
            if (auto p = shortest_primitive_inducing_path(g, i, j)) {
                out.push_back({i, j, std::move(*p)});
                if (first_only) return out;
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Path> find_primitive_inducing_paths(const MixedGraph& g, NodeId i, NodeId j, std::size_t limit) {
    check_pair(g, i, j);
    const NodeSet inner_ok = pair_ancestors(g, i, j);
    std::vector<Path> out;
    std::vector<bool> on_path(g.node_count(), false);
    Path current = Path::single(i);
    on_path[i] = true;

    // Invariant: every inner node on `current` is a collider in an({i, j}),
    // and the last node, if not i, was entered through an arrowhead.
    std::function<bool(NodeId)> extend = [&](NodeId v) {
        for (EdgeId id : g.incident(v)) {
            const auto& e = g.edge(id);
            if (v != i && (id == current.edges.back() || !e.head_at(v))) continue;
            NodeId w = e.other(v);
            if (on_path[w]) continue;
            if (w != j && (!inner_ok.contains(w) || !e.head_at(w))) continue;
            current.nodes.push_back(w);
            current.edges.push_back(id);
            if (w == j) {
                out.push_back(current);
                if (limit != 0 && out.size() >= limit) return true;
            } else {
                on_path[w] = true;
                if (extend(w)) return true;
                on_path[w] = false;
            }
            current.nodes.pop_back();
            current.edges.pop_back();
        }
        return false;
    };
    extend(i);
    return out;
}

std::optional<Path> shortest_primitive_inducing_path(const MixedGraph& g, NodeId i, NodeId j) {
    check_pair(g, i, j);
    for (EdgeId id : g.incident(i))
        if (g.edge(id).other(i) == j) return edge_path(g, id, i);

    // Every inner node is entered and left through arrowheads, so a state is
    // just the node; a shortest walk of that form never repeats a node.
    const NodeSet inner_ok = pair_ancestors(g, i, j);
    constexpr EdgeId no_edge = static_cast<EdgeId>(-1);
    std::vector<EdgeId> via(g.node_count(), no_edge);
    std::deque<NodeId> queue;
    for (EdgeId id : g.incident(i)) {
        NodeId w = g.edge(id).other(i);
        if (w == i || !inner_ok.contains(w) || !g.edge(id).head_at(w) || via[w] != no_edge) continue;
        via[w] = id;
        queue.push_back(w);
    }
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (EdgeId id : g.incident(v)) {
            const auto& e = g.edge(id);
            if (!e.head_at(v)) continue;
            NodeId w = e.other(v);
            if (w == i) continue;
            if (w == j) {
                Path p = Path::single(j);
                p.edges.push_back(id);
                for (NodeId at = v;; at = g.edge(via[at]).other(at)) {
                    p.nodes.push_back(at);
                    if (at == i) break;
                    p.edges.push_back(via[at]);
                }
                return p.reversed();
            }
            if (!inner_ok.contains(w) || !e.head_at(w) || via[w] != no_edge) continue;
            via[w] = id;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

MaximalityReport check_maximal(const MixedGraph& g) {
    if (!is_ribbonless(g)) throw std::invalid_argument("maximality test requires a ribbonless graph");
    MaximalityReport r;
    r.violations = inducing_violations(g, false);
    r.maximal = r.violations.empty();
    return r;
}

bool is_maximal(const MixedGraph& g) { return check_maximal(g).maximal; }

std::optional<NodeSet> oracle_find_separator(const MixedGraph& g, NodeId i, NodeId j, std::size_t node_limit) {
    if (g.node_count() > node_limit)
        throw LimitError("separator search is limited to " + std::to_string(node_limit) + " nodes");
    check_pair(g, i, j);
    std::vector<NodeId> rest;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (v != i && v != j) rest.push_back(v);
    SeparationQuery q{NodeSet(g.node_count(), {i}), NodeSet(g.node_count(), {j}), g.empty_set()};
    for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
        q.c = g.empty_set();
        for (std::size_t k = 0; k < rest.size(); ++k)
            if (mask >> k & 1u) q.c.insert(rest[k]);
        if (oracle_m_separated(g, q, node_limit)) return q.c;
    }
    return std::nullopt;
}

bool oracle_is_maximal(const MixedGraph& g, std::size_t node_limit) {
    for (NodeId i = 0; i < g.node_count(); ++i)
        for (NodeId j = i + 1; j < g.node_count(); ++j)
            if (!g.adjacent(i, j) && !oracle_find_separator(g, i, j, node_limit)) return false;
    return true;
}

NodeSet anterior_separator(const MixedGraph& g, NodeId i, NodeId j) {
    g.check_node(i);
    g.check_node(j);
    MixedGraph gstar = anterior_graph(g);
    NodeSet s = anteriors_in_anterior_graph(gstar, i) | anteriors_in_anterior_graph(gstar, j);
    s.erase(i);
    s.erase(j);
    return s;
}

NodeSet pairwise_separator(const MixedGraph& g, NodeId i, NodeId j) {
    check_pair(g, i, j);
    if (g.adjacent(i, j)) throw std::invalid_argument("nodes are adjacent");
    if (shortest_primitive_inducing_path(g, i, j))
        throw std::invalid_argument("nodes are joined by a primitive inducing path");
    return anterior_separator(g, i, j);
}

Edge endpoint_identical_edge(const MixedGraph& g, const Path& p) {
    if (p.edges.empty() || p.front() == p.back()) throw std::invalid_argument("path needs two distinct endpoints");
    return {p.front(), p.back(), g.edge(p.edges.front()).mark_at(p.front()), g.edge(p.edges.back()).mark_at(p.back())};
}

MixedGraph maximalize(const MixedGraph& g) {
    if (!is_ribbonless(g)) throw std::invalid_argument("maximal completion requires a ribbonless graph");
    MixedGraph current = g;
    while (true) {
        auto found = inducing_violations(current, true);
        if (found.empty()) return current;
        current = current.with_edge(endpoint_identical_edge(current, found.front().path));
    }
}

}  // namespace lmg
