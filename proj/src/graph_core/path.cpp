#include <lmg/path.hpp>

#include <algorithm>
#include <map>

namespace lmg {

Path Path::reversed() const {
    Path r{nodes, edges};
    std::reverse(r.nodes.begin(), r.nodes.end());
    std::reverse(r.edges.begin(), r.edges.end());
    return r;
}

bool is_walk(const MixedGraph& g, const Path& p) {
    if (p.nodes.empty() || p.edges.size() + 1 != p.nodes.size()) return false;
    for (NodeId n : p.nodes)
        if (n >= g.node_count()) return false;
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
        if (p.edges[k] >= g.edge_count()) return false;
        if (!g.edge(p.edges[k]).joins(p.nodes[k], p.nodes[k + 1])) return false;
    }
    return true;
}

bool is_path(const MixedGraph& g, const Path& p) {
    if (!is_walk(g, p)) return false;
    auto nodes = p.nodes;
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) return false;
    auto edges = p.edges;
    std::sort(edges.begin(), edges.end());
    return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

Path edge_path(const MixedGraph& g, EdgeId e, NodeId from) {
    const auto& edge = g.edge(e);
    if (edge.a != from && edge.b != from) throw std::invalid_argument("edge is not incident to the start node");
    return {{from, edge.other(from)}, {e}};
}

Path combine_paths(const Path& p1, const Path& p2) {
    if (p1.nodes.empty() || p2.nodes.empty() || p1.back() != p2.front())
        throw std::invalid_argument("paths do not share the junction node");
    for (std::size_t p = 0; p < p1.nodes.size(); ++p) {
        auto it = std::find(p2.nodes.begin(), p2.nodes.end(), p1.nodes[p]);
        if (it == p2.nodes.end()) continue;
        auto q = static_cast<std::size_t>(it - p2.nodes.begin());
        Path out;
        out.nodes.assign(p1.nodes.begin(), p1.nodes.begin() + static_cast<std::ptrdiff_t>(p) + 1);
        out.nodes.insert(out.nodes.end(), p2.nodes.begin() + static_cast<std::ptrdiff_t>(q) + 1, p2.nodes.end());
        out.edges.assign(p1.edges.begin(), p1.edges.begin() + static_cast<std::ptrdiff_t>(p));
        out.edges.insert(out.edges.end(), p2.edges.begin() + static_cast<std::ptrdiff_t>(q), p2.edges.end());
        return out;
    }
    // unreachable: the junction node lies on both paths
    throw std::logic_error("combine_paths: no common node");
}

TripathKind classify_tripath(const MixedGraph& g, const Path& t) {
    if (t.nodes.size() != 3 || !is_path(g, t)) throw std::invalid_argument("not a tripath of the graph");
    return is_collider(g, t.nodes[1], t.edges[0], t.edges[1]) ? TripathKind::Collider : TripathKind::NonCollider;
}

bool endpoint_identical(const MixedGraph& g, const Path& p1, const Path& p2) {
    if (!is_walk(g, p1) || !is_walk(g, p2) || p1.edges.empty() || p2.edges.empty())
        throw std::invalid_argument("endpoint identity needs paths with at least one edge");
    auto ends = [&](const Path& p) {
        std::map<NodeId, bool> heads;
        heads[p.front()] = g.edge(p.edges.front()).head_at(p.front());
        heads[p.back()] = g.edge(p.edges.back()).head_at(p.back());
        return heads;
    };
    auto e1 = ends(p1);
    auto e2 = ends(p2);
    if (e1.size() != 2 || e2.size() != 2) throw std::invalid_argument("paths must have distinct endpoints");
    for (const auto& [node, head] : e1) {
        auto it = e2.find(node);
        if (it == e2.end()) throw std::invalid_argument("paths do not share both endpoints");
        if (it->second != head) return false;
    }
    return true;
}

std::string format_path(const MixedGraph& g, const Path& p) {
    std::string out;
    for (std::size_t k = 0; k < p.nodes.size(); ++k) {
        if (k > 0) {
            const auto& e = g.edge(p.edges[k - 1]);
            bool head_prev = e.head_at(p.nodes[k - 1]);
            bool head_here = e.head_at(p.nodes[k]);
            out += head_prev ? (head_here ? " <-> " : " <- ") : (head_here ? " -> " : " -- ");
        }
        out += g.label(p.nodes[k]);
    }
    return out;
}

}  // namespace lmg
