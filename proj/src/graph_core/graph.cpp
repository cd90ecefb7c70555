#include <lmg/graph.hpp>

#include <algorithm>
#include <tuple>

namespace lmg {

const char* to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Line: return "line";
        case EdgeKind::Arrow: return "arrow";
        case EdgeKind::Arc: return "arc";
    }
    return "?";
}

EdgeKind Edge::kind() const {
    if (at_a == Mark::Tail && at_b == Mark::Tail) return EdgeKind::Line;
    if (at_a == Mark::Head && at_b == Mark::Head) return EdgeKind::Arc;
    return EdgeKind::Arrow;
}

MixedGraph::MixedGraph(std::vector<std::string> labels, const std::vector<EdgeSpec>& edges) {
    for (const auto& l : labels)
        if (l.empty()) throw std::invalid_argument("empty node label");
    std::sort(labels.begin(), labels.end());
    if (auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end())
        throw std::invalid_argument("duplicate node label '" + *dup + "'");
    labels_ = std::move(labels);
    incident_.resize(labels_.size());

    for (const auto& spec : edges) {
        auto from = find(spec.from);
        auto to = find(spec.to);
        if (!from) throw std::invalid_argument("edge endpoint '" + spec.from + "' is not a declared node");
        if (!to) throw std::invalid_argument("edge endpoint '" + spec.to + "' is not a declared node");
        Edge e;
        switch (spec.kind) {
            case EdgeKind::Line: e = Edge::line(*from, *to); break;
            case EdgeKind::Arrow: e = Edge::arrow(*from, *to); break;
            case EdgeKind::Arc: e = Edge::arc(*from, *to); break;
        }
        auto id = static_cast<EdgeId>(edges_.size());
        edges_.push_back(e);
        incident_[e.a].push_back(id);
        if (e.b != e.a) incident_[e.b].push_back(id);
    }
}

MixedGraph MixedGraph::from_edges(std::vector<std::string> labels, std::vector<Edge> edges) {
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("labels must be sorted and unique");
    MixedGraph g;
    g.labels_ = std::move(labels);
    g.incident_.resize(g.labels_.size());
    g.edges_ = std::move(edges);
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const auto& e = g.edges_[id];
        if (e.a >= g.labels_.size() || e.b >= g.labels_.size())
            throw std::invalid_argument("edge endpoint out of range");
        g.incident_[e.a].push_back(id);
        if (e.b != e.a) g.incident_[e.b].push_back(id);
    }
    return g;
}

std::optional<NodeId> MixedGraph::find(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<NodeId>(it - labels_.begin());
}

NodeId MixedGraph::id_of(std::string_view label) const {
    if (auto id = find(label)) return *id;
    throw std::invalid_argument("unknown node '" + std::string(label) + "'");
}

void MixedGraph::check_node(NodeId id) const {
    if (id >= labels_.size()) throw std::invalid_argument("unknown node id " + std::to_string(id));
}

bool MixedGraph::adjacent(NodeId u, NodeId v) const {
    for (EdgeId e : incident_.at(u))
        if (edges_[e].joins(u, v)) return true;
    return false;
}

bool MixedGraph::is_loopless() const {
    return std::none_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

NodeSet MixedGraph::node_set(std::span<const std::string> labels) const {
    NodeSet s = empty_set();
    for (const auto& l : labels) s.insert(id_of(l));
    return s;
}

std::vector<std::string> MixedGraph::labels_of(const NodeSet& s) const {
    std::vector<std::string> out;
    for (NodeId id : s.members()) out.push_back(labels_.at(id));
    return out;
}

MixedGraph MixedGraph::with_edge(Edge e) const {
    auto edges = edges_;
    edges.push_back(e);
    return from_edges(labels_, std::move(edges));
}

MixedGraph MixedGraph::with_edges(std::vector<Edge> edges) const {
    return from_edges(labels_, std::move(edges));
}

namespace {

using EdgeKey = std::tuple<NodeId, NodeId, Mark, Mark>;

EdgeKey normalized(const Edge& e) {
    if (e.a <= e.b) return {e.a, e.b, e.at_a, e.at_b};
    return {e.b, e.a, e.at_b, e.at_a};
}

std::vector<EdgeKey> sorted_keys(const MixedGraph& g) {
    std::vector<EdgeKey> keys;
    keys.reserve(g.edge_count());
    for (const auto& e : g.edges()) keys.push_back(normalized(e));
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

bool structurally_equal(const MixedGraph& g, const MixedGraph& h) {
    return g.labels() == h.labels() && sorted_keys(g) == sorted_keys(h);
}

bool is_loopless(const MixedGraph& g) { return g.is_loopless(); }

void require_loopless(const MixedGraph& g) {
    if (!g.is_loopless()) throw std::invalid_argument("graph contains a loop");
}

MixedGraph simplify(const MixedGraph& g) {
    std::vector<EdgeKey> seen;
    std::vector<Edge> kept;
    for (const auto& e : g.edges()) {
        auto key = normalized(e);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        kept.push_back(e);
    }
    return g.with_edges(std::move(kept));
}

NodeSet parents(const MixedGraph& g, NodeId i) {
    g.check_node(i);
    NodeSet out = g.empty_set();
    for (EdgeId id : g.incident(i)) {
        const auto& e = g.edge(id);
        if (e.kind() == EdgeKind::Arrow && e.head_at(i) && !e.is_loop()) out.insert(e.other(i));
    }
    return out;
}

NodeSet children(const MixedGraph& g, NodeId i) {
    g.check_node(i);
    NodeSet out = g.empty_set();
    for (EdgeId id : g.incident(i)) {
        const auto& e = g.edge(id);
        if (e.kind() == EdgeKind::Arrow && !e.head_at(i) && !e.is_loop()) out.insert(e.other(i));
    }
    return out;
}

NodeSet neighbors_by_kind(const MixedGraph& g, NodeId i, EdgeKind kind) {
    g.check_node(i);
    NodeSet out = g.empty_set();
    for (EdgeId id : g.incident(i)) {
        const auto& e = g.edge(id);
        if (e.kind() == kind) out.insert(e.other(i));
    }
    return out;
}

NodeSet line_endpoints(const MixedGraph& g) {
    NodeSet out = g.empty_set();
    for (const auto& e : g.edges()) {
        if (e.kind() == EdgeKind::Line && !e.is_loop()) {
            out.insert(e.a);
            out.insert(e.b);
        }
    }
    return out;
}

}  // namespace lmg
