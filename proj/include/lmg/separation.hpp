#ifndef LMG_SEPARATION_HPP
#define LMG_SEPARATION_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include <lmg/graph.hpp>
#include <lmg/path.hpp>

namespace lmg {

/// Raised when a brute-force routine is asked to run above its size limit.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SeparationQuery {
    NodeSet a;
    NodeSet b;
    NodeSet c;
};

inline constexpr std::size_t default_oracle_limit = 8;

/// m-separation queries against one graph.
///
/// C ∪ an(C) is computed once per conditioning set. Connection is decided by
/// a breadth-first search over (node, arrived-with-arrowhead) states. A walk
/// found that way is always a path when no arrowhead meets a line (G* = G);
/// on other graphs a walk may revisit a node in a way no path can, so the
/// answer is then settled by an exact path search that reduces the question
/// to a perfect matching in a gadget graph.
class MSeparation {
public:
    explicit MSeparation(const MixedGraph& g);

    const MixedGraph& graph() const { return *g_; }
    bool uses_walk_search_only() const { return anterior_; }

    /// Throws std::invalid_argument for x == y, unknown nodes, or x, y in C.
    bool connected(NodeId x, NodeId y, const NodeSet& c) const;
    std::optional<Path> witness(NodeId x, NodeId y, const NodeSet& c) const;

    /// Pairwise test over A x B. Throws std::invalid_argument unless A, B, C
    /// are pairwise disjoint and A, B are non-empty.
    bool separated(const SeparationQuery& q) const;

private:
    const MixedGraph* g_;
    bool anterior_;
};

/// Literal m-connection predicate: `p` is a path, every inner collider is in
/// C ∪ an(C) and every inner non-collider is outside C.
bool is_m_connecting(const MixedGraph& g, const Path& p, const NodeSet& c);

/// Walk-state reachability alone. Exact when G* = G, an over-approximation
/// of path connection otherwise.
bool m_connecting_walk_exists(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c);
std::optional<Path> find_m_connecting_walk(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c);

/// Exact path search for any loopless graph via maximum matching.
std::optional<Path> find_m_connecting_path_by_matching(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c);

bool m_connecting_path_exists(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c);
std::optional<Path> find_m_connecting_path(const MixedGraph& g, NodeId x, NodeId y, const NodeSet& c);
bool m_separated(const MixedGraph& g, const SeparationQuery& q);

/// Every simple path from x to y, parallel edges giving distinct paths.
/// Throws LimitError above `node_limit` nodes.
std::vector<Path> all_paths(const MixedGraph& g, NodeId x, NodeId y, std::size_t node_limit = default_oracle_limit);

/// Ground truth by exhaustive path enumeration.
bool oracle_m_separated(const MixedGraph& g, const SeparationQuery& q, std::size_t node_limit = default_oracle_limit);

/// Which sufficient condition for combining two m-connecting paths at their
/// shared node h applies, if any.
enum class CombinationCase {
    None,
    ColliderInAncestors,       ///< distinct neighbours of h, collider at h, h in C ∪ an(C)
    SharedNeighbourHeads,      ///< same neighbour, arrowheads at h on both edges, h in C ∪ an(C)
    NonColliderOutsideC,       ///< distinct neighbours, non-collider at h, h outside C
    SharedNeighbourNoHead,     ///< same neighbour, some edge without arrowhead at h
};

const char* to_string(CombinationCase c);

/// Throws std::invalid_argument if `gstar` has an arrowhead at a line
/// endpoint, or either path is not m-connecting given C, or they do not meet.
CombinationCase combination_case(const MixedGraph& gstar, const Path& p1, const Path& p2, const NodeSet& c);

/// p1 ∘ p2 when one of the combination conditions holds; none otherwise or
/// when the combination degenerates to a single node.
std::optional<Path> combine_m_connecting(const MixedGraph& gstar, const Path& p1, const Path& p2, const NodeSet& c);

}  // namespace lmg

#endif
