#ifndef LMG_GRAPH_HPP
#define LMG_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <lmg/node_set.hpp>

namespace lmg {

/// End-mark of an edge at one of its endpoints.
enum class Mark : std::uint8_t { Tail, Head };

/// Line = (tail, tail), Arrow = (tail, head), Arc = (head, head).
enum class EdgeKind : std::uint8_t { Line, Arrow, Arc };

const char* to_string(EdgeKind kind);

/// An edge in mark form. An Arrow points from the tail end to the head end.
struct Edge {
    NodeId a = 0;
    NodeId b = 0;
    Mark at_a = Mark::Tail;
    Mark at_b = Mark::Tail;

    static Edge line(NodeId u, NodeId v) { return {u, v, Mark::Tail, Mark::Tail}; }
    static Edge arrow(NodeId from, NodeId to) { return {from, to, Mark::Tail, Mark::Head}; }
    static Edge arc(NodeId u, NodeId v) { return {u, v, Mark::Head, Mark::Head}; }

    EdgeKind kind() const;
    bool is_loop() const { return a == b; }
    bool joins(NodeId u, NodeId v) const { return (a == u && b == v) || (a == v && b == u); }
    NodeId other(NodeId n) const { return n == a ? b : a; }
    /// Mark at endpoint `n`. For a loop the mark at `a` is returned.
    Mark mark_at(NodeId n) const { return n == a ? at_a : at_b; }
    bool head_at(NodeId n) const { return mark_at(n) == Mark::Head; }
    /// True for an arrow whose head is at `to`.
    bool is_arrow_into(NodeId to) const { return kind() == EdgeKind::Arrow && head_at(to) && !is_loop(); }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Label-level edge description used to build graphs. For arrows `from -> to`.
struct EdgeSpec {
    std::string from;
    std::string to;
    EdgeKind kind = EdgeKind::Line;
};

/// Labeled mixed multigraph with lines, arrows and arcs.
///
/// Node ids are assigned in lexicographic order of labels, so iteration over
/// ids is iteration in label order. Edges keep their insertion order and
/// parallel edges of any kind are kept. Instances are immutable.
class MixedGraph {
public:
    MixedGraph() = default;

    /// Throws std::invalid_argument on an empty or duplicate label or an edge
    /// endpoint that is not in `labels`.
    MixedGraph(std::vector<std::string> labels, const std::vector<EdgeSpec>& edges);

    /// Builds from id-level edges; `labels` must be sorted and unique.
    static MixedGraph from_edges(std::vector<std::string> labels, std::vector<Edge> edges);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(NodeId id) const { return labels_.at(id); }
    std::optional<NodeId> find(std::string_view label) const;
    /// Throws std::invalid_argument for an unknown label.
    NodeId id_of(std::string_view label) const;

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }
    const std::vector<EdgeId>& incident(NodeId id) const { return incident_.at(id); }

    bool adjacent(NodeId u, NodeId v) const;
    bool is_loopless() const;

    NodeSet empty_set() const { return NodeSet(node_count()); }
    NodeSet node_set(std::span<const std::string> labels) const;
    std::vector<std::string> labels_of(const NodeSet& s) const;

    MixedGraph with_edge(Edge e) const;
    MixedGraph with_edges(std::vector<Edge> edges) const;

    void check_node(NodeId id) const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// Equal node labels and equal edge multisets (edge order ignored).
bool structurally_equal(const MixedGraph& g, const MixedGraph& h);

bool is_loopless(const MixedGraph& g);

/// Collapses parallel edges of the same kind and direction.
MixedGraph simplify(const MixedGraph& g);

NodeSet parents(const MixedGraph& g, NodeId i);
NodeSet children(const MixedGraph& g, NodeId i);
/// Nodes joined to `i` by at least one edge of `kind`, in either direction.
NodeSet neighbors_by_kind(const MixedGraph& g, NodeId i, EdgeKind kind);

/// Nodes that are an endpoint of some non-loop line.
NodeSet line_endpoints(const MixedGraph& g);

void require_loopless(const MixedGraph& g);

}  // namespace lmg

#endif
