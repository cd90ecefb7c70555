#ifndef LMG_STRUCTURE_HPP
#define LMG_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include <lmg/graph.hpp>
#include <lmg/path.hpp>
#include <lmg/separation.hpp>

namespace lmg {

enum class RibbonFlavor { Straight, Cyclic };

const char* to_string(RibbonFlavor f);

/// Collider tripath <h, i, j> (h < j) with no endpoint-identical hj-edge,
/// where i or a descendant of i is a line endpoint (straight) or lies on a
/// direction-preserving cycle (cyclic). `witness` is that node.
struct Ribbon {
    NodeId h = 0;
    NodeId i = 0;
    NodeId j = 0;
    EdgeId first = 0;   ///< edge between h and i
    EdgeId second = 0;  ///< edge between i and j
    RibbonFlavor flavor = RibbonFlavor::Straight;
    NodeId witness = 0;
};

/// Throws std::invalid_argument on a graph with loops.
std::vector<Ribbon> find_ribbons(const MixedGraph& g);
bool is_ribbonless(const MixedGraph& g);

/// Paths between i and j whose inner nodes are all colliders on the path and
/// all in an({i, j}); every i-j edge is such a path. Depth-first in edge
/// order; `limit` caps the count (0 = no cap).
std::vector<Path> find_primitive_inducing_paths(const MixedGraph& g, NodeId i, NodeId j, std::size_t limit = 1000);

/// A shortest primitive inducing path, if any.
std::optional<Path> shortest_primitive_inducing_path(const MixedGraph& g, NodeId i, NodeId j);

struct MaximalityViolation {
    NodeId i = 0;
    NodeId j = 0;
    Path path;  ///< a primitive inducing path between the non-adjacent pair
};

struct MaximalityReport {
    bool maximal = true;
    std::vector<MaximalityViolation> violations;  ///< ordered by (i, j)
};

/// Ribbonless graphs only (std::invalid_argument otherwise): maximal iff no
/// non-adjacent pair is joined by a primitive inducing path.
MaximalityReport check_maximal(const MixedGraph& g);
bool is_maximal(const MixedGraph& g);

/// Some C ⊆ V \ {i, j} that m-separates i and j, searched by brute force.
std::optional<NodeSet> oracle_find_separator(const MixedGraph& g, NodeId i, NodeId j,
                                             std::size_t node_limit = default_oracle_limit);

/// Every non-adjacent pair has a separating set, checked with the path oracle.
bool oracle_is_maximal(const MixedGraph& g, std::size_t node_limit = default_oracle_limit);

/// (ant(i) ∪ ant(j)) \ {i, j} with no further checks.
NodeSet anterior_separator(const MixedGraph& g, NodeId i, NodeId j);

/// As `anterior_separator`, after checking that i and j are non-adjacent and
/// not joined by a primitive inducing path (std::invalid_argument otherwise).
NodeSet pairwise_separator(const MixedGraph& g, NodeId i, NodeId j);

/// The edge between the endpoints of `p` with the same end-marks as `p`.
Edge endpoint_identical_edge(const MixedGraph& g, const Path& p);

/// Adds edges endpoint-identical to primitive inducing paths between
/// non-adjacent pairs, lexicographically smallest pair first, rescanning
/// after every addition until none remain. Ribbonless input only.
MixedGraph maximalize(const MixedGraph& g);

struct GraphClass {
    bool loopless_mixed = false;
    bool ribbonless = false;
    bool ancestral = false;
    bool acyclic_directed_mixed = false;
    bool undirected = false;
    bool bidirected = false;
    bool dag = false;
    bool maximal = false;
};

bool is_ancestral(const MixedGraph& g);
GraphClass classify(const MixedGraph& g);

/// Descriptions of subclass implications that `c` breaks; empty when consistent.
std::vector<std::string> hierarchy_violations(const GraphClass& c);

}  // namespace lmg

#endif
