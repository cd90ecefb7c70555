// Fixture loading and brute-force reference implementations written
// directly from the definitions, sharing no code with the library's
// algorithms beyond the graph container.
#ifndef LMG_TEST_SUPPORT_HPP
#define LMG_TEST_SUPPORT_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include <lmg/graph.hpp>
#include <lmg/independence.hpp>
#include <lmg/text_format.hpp>

namespace lmg::testing {

inline MixedGraph fixture(const std::string& name) {
    return read_graph_file(std::string(LMG_FIXTURE_DIR) + "/" + name + ".lmg").graph;
}

inline MixedGraph graph(std::string_view text) { return parse_graph(text).graph; }

inline std::set<std::string> label_set(const MixedGraph& g, const NodeSet& s) {
    auto v = g.labels_of(s);
    return {v.begin(), v.end()};
}

inline NodeSet nodes(const MixedGraph& g, std::initializer_list<const char*> labels) {
    NodeSet s = g.empty_set();
    for (const char* l : labels) s.insert(g.id_of(l));
    return s;
}

// an(S) by fixpoint over arrows u -> v with v already reached or in S.
inline std::vector<bool> brute_ancestors(const MixedGraph& g, const std::vector<bool>& s) {
    std::vector<bool> an(g.node_count(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : g.edges()) {
            if (e.kind() != EdgeKind::Arrow) continue;
            NodeId from = e.head_at(e.b) ? e.a : e.b;
            NodeId to = e.other(from);
            if ((s[to] || an[to]) && !an[from]) an[from] = changed = true;
        }
    }
    return an;
}

// Every simple path between x and y, checked against the m-connection definition.
inline bool brute_connected(const MixedGraph& g, NodeId x, NodeId y, const std::vector<bool>& c) {
    auto an = brute_ancestors(g, c);
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeId> path_nodes{x};
    std::vector<EdgeId> path_edges;
    seen[x] = true;
    std::function<bool(NodeId)> dfs = [&](NodeId v) -> bool {
        if (v == y) {
            for (std::size_t k = 1; k + 1 < path_nodes.size(); ++k) {
                NodeId u = path_nodes[k];
                bool collider = g.edge(path_edges[k - 1]).head_at(u) && g.edge(path_edges[k]).head_at(u);
                if (collider && !(c[u] || an[u])) return false;
                if (!collider && c[u]) return false;
            }
            return true;
        }
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            const auto& e = g.edge(id);
            if (e.is_loop() || (e.a != v && e.b != v)) continue;
            NodeId w = e.other(v);
            if (seen[w]) continue;
            seen[w] = true;
            path_nodes.push_back(w);
            path_edges.push_back(id);
            bool found = dfs(w);
            path_nodes.pop_back();
            path_edges.pop_back();
            seen[w] = false;
            if (found) return true;
        }
        return false;
    };
    return dfs(x);
}

inline std::vector<bool> bits(const MixedGraph& g, const NodeSet& s) {
    std::vector<bool> out(g.node_count(), false);
    for (NodeId v : s.members()) out[v] = true;
    return out;
}

inline std::vector<bool> bits_of_mask(std::size_t n, Mask m) {
    std::vector<bool> out(n, false);
    for (std::size_t k = 0; k < n; ++k) out[k] = (m >> k & 1u) != 0;
    return out;
}

// G*: flip any arrowhead sitting on a line endpoint to a tail until none is left.
inline MixedGraph brute_anterior_graph(const MixedGraph& g) {
    std::vector<Edge> edges = g.edges();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<bool> line_end(g.node_count(), false);
        for (const auto& e : edges)
            if (e.at_a == Mark::Tail && e.at_b == Mark::Tail && !e.is_loop()) line_end[e.a] = line_end[e.b] = true;
        for (auto& e : edges) {
            if (e.at_a == Mark::Head && line_end[e.a]) e.at_a = Mark::Tail, changed = true;
            if (e.at_b == Mark::Head && line_end[e.b]) e.at_b = Mark::Tail, changed = true;
        }
    }
    return MixedGraph::from_edges(g.labels(), edges);
}

// ant(i): nodes with a path to i in G* made of lines and arrows pointing towards i.
inline std::set<std::string> brute_anteriors(const MixedGraph& g, NodeId i) {
    MixedGraph gs = brute_anterior_graph(g);
    std::vector<bool> reached(g.node_count(), false);
    std::vector<NodeId> stack{i};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (const auto& e : gs.edges()) {
            if (e.is_loop() || (e.a != v && e.b != v)) continue;
            NodeId u = e.other(v);
            if (e.head_at(u)) continue;
            if (!reached[u]) {
                reached[u] = true;
                stack.push_back(u);
            }
        }
    }
    std::set<std::string> out;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (reached[v] && v != i) out.insert(g.label(v));
    return out;
}

// J_m(G) over all disjoint (A, B, C), from the brute path oracle.
inline IndependenceModel brute_model(const MixedGraph& g) {
    const std::size_t n = g.node_count();
    IndependenceModel m(g.labels());
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        Statement s;
        std::size_t rest = code;
        for (std::size_t k = 0; k < n; ++k, rest /= 4) {
            if (rest % 4 == 1) s.a |= Mask{1} << k;
            if (rest % 4 == 2) s.b |= Mask{1} << k;
            if (rest % 4 == 3) s.c |= Mask{1} << k;
        }
        if (s.trivial()) continue;
        bool sep = true;
        for (NodeId x = 0; x < n && sep; ++x)
            for (NodeId y = 0; y < n && sep; ++y)
                if ((s.a >> x & 1u) && (s.b >> y & 1u)) sep = !brute_connected(g, x, y, bits_of_mask(n, s.c));
        if (sep) m.insert(s);
    }
    return m;
}

// Least fixpoint by re-applying every axiom instance over all disjoint
// A, B, C, D until nothing changes. Exponentially slower than `closure`.
inline IndependenceModel brute_closure(const IndependenceModel& start, AxiomSet axioms) {
    IndependenceModel m = start;
    const std::size_t n = m.ground_size();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<unsigned> role(n, 0);
        while (true) {
            Mask r[5] = {0, 0, 0, 0, 0};
            for (std::size_t k = 0; k < n; ++k) r[role[k]] |= Mask{1} << k;
            const Mask a = r[1], b = r[2], c = r[3], d = r[4];
            auto has = [&](Mask x, Mask y, Mask z) { return m.contains({x, y, z}); };
            auto add = [&](Mask x, Mask y, Mask z) {
                if (m.insert({x, y, z})) changed = true;
            };
            if (a && b) {
                if (axioms.contains(Axiom::Symmetry) && has(a, b, c)) add(b, a, c);
                if (axioms.contains(Axiom::Decomposition) && has(a, b | d, c)) add(a, b, c);
                if (axioms.contains(Axiom::WeakUnion) && has(a, b | d, c)) add(a, b, c | d);
                if (axioms.contains(Axiom::Contraction)) {
                    if (has(a, b, c | d) && has(a, d, c)) add(a, b | d, c);
                    if (has(a, b | d, c)) {
                        add(a, b, c | d);
                        add(a, d, c);
                    }
                }
                if (axioms.contains(Axiom::Intersection) && has(a, b, c | d) && has(a, d, c | b)) add(a, b | d, c);
                if (axioms.contains(Axiom::Composition) && has(a, b, c) && has(a, d, c)) add(a, b | d, c);
            }
            std::size_t k = 0;
            while (k < n && role[k] == 4) role[k++] = 0;
            if (k == n) break;
            ++role[k];
        }
    }
    return m;
}

}  // namespace lmg::testing

#endif
