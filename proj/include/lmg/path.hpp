#ifndef LMG_PATH_HPP
#define LMG_PATH_HPP

#include <string>
#include <vector>

#include <lmg/graph.hpp>

namespace lmg {

/// Alternating node/edge sequence; `edges[k]` joins `nodes[k]` and `nodes[k+1]`.
/// Edge ids disambiguate parallel edges.
struct Path {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;

    static Path single(NodeId n) { return {{n}, {}}; }

    NodeId front() const { return nodes.front(); }
    NodeId back() const { return nodes.back(); }
    std::size_t length() const { return edges.size(); }

    Path reversed() const;

    friend bool operator==(const Path&, const Path&) = default;
};

/// Each edge joins its flanking nodes; no repeated node or edge.
bool is_path(const MixedGraph& g, const Path& p);

/// Checks well-formedness (edge endpoints match) without the no-repeat rule.
bool is_walk(const MixedGraph& g, const Path& p);

/// The path through the unique edge `e`, oriented from `from`.
Path edge_path(const MixedGraph& g, EdgeId e, NodeId from);

/// p1 followed by p2, cut at the first node of p1 that lies on p2.
/// Fully overlapping inputs yield a single-node path.
/// Throws std::invalid_argument if p1 does not end where p2 starts.
Path combine_paths(const Path& p1, const Path& p2);

enum class TripathKind { Collider, NonCollider };

/// Throws std::invalid_argument unless `t` is a 3-node path in `g`.
TripathKind classify_tripath(const MixedGraph& g, const Path& t);

/// Collider test for the inner node `v` between edges `in` and `out`.
inline bool is_collider(const MixedGraph& g, NodeId v, EdgeId in, EdgeId out) {
    return g.edge(in).head_at(v) && g.edge(out).head_at(v);
}

/// Whether two paths between the same endpoints agree on the presence of an
/// arrowhead at each endpoint. Throws std::invalid_argument if the endpoint
/// sets differ or either path has no edge.
bool endpoint_identical(const MixedGraph& g, const Path& p1, const Path& p2);

std::string format_path(const MixedGraph& g, const Path& p);

}  // namespace lmg

#endif
