#ifndef LMG_ANTERIOR_HPP
#define LMG_ANTERIOR_HPP

#include <vector>

#include <lmg/graph.hpp>

namespace lmg {

/// an(S): nodes with a direction-preserving path of length >= 1 into S.
/// A member of S is included only if it reaches S along such a path, e.g.
/// when it lies on a directed cycle.
NodeSet ancestors(const MixedGraph& g, const NodeSet& s);
NodeSet ancestors(const MixedGraph& g, NodeId i);

/// de(S): nodes reachable from S along a direction-preserving path of length >= 1.
NodeSet descendants(const MixedGraph& g, const NodeSet& s);
NodeSet descendants(const MixedGraph& g, NodeId i);

/// True iff `i` lies on a direction-preserving cycle.
bool on_directed_cycle(const MixedGraph& g, NodeId i);
bool has_directed_cycle(const MixedGraph& g);

/// True iff no arrowhead points to an endpoint of a line, i.e. G* = G.
bool is_anterior_graph(const MixedGraph& g);

/// G*: repeatedly turns arrowheads that point at a line endpoint into tails.
/// Throws std::invalid_argument on a graph with loops.
MixedGraph anterior_graph(const MixedGraph& g);

/// Same fixpoint, but removes one arrowhead at a time in the order given by
/// `order` (edge-end indices 2*e and 2*e+1). Used to check order independence.
MixedGraph anterior_graph_in_order(const MixedGraph& g, const std::vector<std::size_t>& order);

/// ant(i) in G: nodes with a lines-then-arrows path to `i` in G*. Never contains `i`.
NodeSet anteriors(const MixedGraph& g, NodeId i);

/// Same as `anteriors` for a graph already known to satisfy G* = G.
NodeSet anteriors_in_anterior_graph(const MixedGraph& gstar, NodeId i);

}  // namespace lmg

#endif
