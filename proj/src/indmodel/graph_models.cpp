#include <lmg/independence.hpp>

#include <lmg/structure.hpp>

namespace lmg {

namespace {

NodeSet to_node_set(const MixedGraph& g, Mask m) {
    NodeSet s = g.empty_set();
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (m >> v & 1u) s.insert(v);
    return s;
}

Mask bit(NodeId v) { return Mask{1} << v; }

void require_same_ground(const IndependenceModel& model, const MixedGraph& g) {
    if (model.ground() != g.labels()) throw std::invalid_argument("model and graph have different node sets");
}

// sep[x][y][C] for x != y and C avoiding both: singleton m-separation.
class PairTable {
public:
    explicit PairTable(const MixedGraph& g) : n_(g.node_count()), bits_(n_ * n_ << n_, false) {
        MSeparation engine(g);
        for (NodeId x = 0; x < n_; ++x) {
            for (NodeId y = x + 1; y < n_; ++y) {
                const Mask others = static_cast<Mask>((1u << n_) - 1) & ~bit(x) & ~bit(y);
                Mask c = 0;
                do {
                    bool sep = !engine.connected(x, y, to_node_set(g, c));
                    bits_[slot(x, y, c)] = sep;
                    bits_[slot(y, x, c)] = sep;
                    c = (c - others) & others;
                } while (c != 0);
            }
        }
    }

    bool separated(NodeId x, NodeId y, Mask c) const { return bits_[slot(x, y, c)]; }

private:
    std::size_t slot(NodeId x, NodeId y, Mask c) const { return ((x * n_ + y) << n_) | c; }

    std::size_t n_;
    std::vector<bool> bits_;
};

}  // namespace

IndependenceModel enumerate_model(const MixedGraph& g, bool singleton_only, const ModelLimits& limits) {
    require_loopless(g);
    const std::size_t limit = singleton_only ? limits.singleton_model : limits.full_model;
    if (g.node_count() > limit)
        throw LimitError(std::string(singleton_only ? "singleton" : "full") + " model enumeration is limited to " +
                         std::to_string(limit) + " nodes, graph has " + std::to_string(g.node_count()));
    IndependenceModel out(g.labels());
    const PairTable table(g);
    const std::size_t n = g.node_count();

    if (singleton_only) {
        for (NodeId x = 0; x < n; ++x) {
            for (NodeId y = 0; y < n; ++y) {
                if (x == y) continue;
                const Mask others = out.full_mask() & ~bit(x) & ~bit(y);
                Mask c = 0;
                do {
                    if (table.separated(x, y, c)) out.insert({bit(x), bit(y), c});
                    c = (c - others) & others;
                } while (c != 0);
            }
        }
        return out;
    }

    std::vector<unsigned> role(n, 0);  // 0 none, 1 A, 2 B, 3 C
    while (true) {
        Statement s;
        for (std::size_t k = 0; k < n; ++k) {
            if (role[k] == 1) s.a |= bit(static_cast<NodeId>(k));
            if (role[k] == 2) s.b |= bit(static_cast<NodeId>(k));
            if (role[k] == 3) s.c |= bit(static_cast<NodeId>(k));
        }
        if (!s.trivial()) {
            bool sep = true;
            for (NodeId x = 0; x < n && sep; ++x)
                for (NodeId y = 0; y < n && sep; ++y)
                    if ((s.a & bit(x)) && (s.b & bit(y))) sep = table.separated(x, y, s.c);
            if (sep) out.insert(s);
        }
        std::size_t k = 0;
        while (k < n && role[k] == 3) role[k++] = 0;
        if (k == n) break;
        ++role[k];
    }
    return out;
}

IndependenceModel pairwise_model(const MixedGraph& g) {
    require_loopless(g);
    IndependenceModel out(g.labels());
    for (NodeId i = 0; i < g.node_count(); ++i) {
        for (NodeId j = i + 1; j < g.node_count(); ++j) {
            if (g.adjacent(i, j)) continue;
            Mask c = 0;
            for (NodeId v : anterior_separator(g, i, j).members()) c |= bit(v);
            out.insert({bit(i), bit(j), c});
            out.insert({bit(j), bit(i), c});
        }
    }
    return out;
}

MarkovCheck satisfies_pairwise(const IndependenceModel& model, const MixedGraph& g) {
    require_same_ground(model, g);
    for (const auto& s : pairwise_model(g).statements())
        if (!model.contains(s)) return {false, s};
    return {};
}

MarkovCheck satisfies_global(const IndependenceModel& model, const MixedGraph& g, const ModelLimits& limits) {
    require_same_ground(model, g);
    for (const auto& s : enumerate_model(g, false, limits).statements())
        if (!model.contains(s)) return {false, s};
    return {};
}

std::optional<Statement> first_nonconforming(const IndependenceModel& model, const MixedGraph& g) {
    require_same_ground(model, g);
    for (const auto& s : model.statements())
        for (NodeId x = 0; x < g.node_count(); ++x)
            for (NodeId y = 0; y < g.node_count(); ++y)
                if ((s.a & bit(x)) && (s.b & bit(y)) && g.adjacent(x, y)) return s;
    return std::nullopt;
}

bool conforms(const IndependenceModel& model, const MixedGraph& g) { return !first_nonconforming(model, g); }

bool markov_equivalent(const MixedGraph& g1, const MixedGraph& g2, const ModelLimits& limits) {
    if (g1.labels() != g2.labels()) throw std::invalid_argument("graphs have different node sets");
    return enumerate_model(g1, true, limits) == enumerate_model(g2, true, limits);
}

}  // namespace lmg
