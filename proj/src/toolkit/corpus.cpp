#include <lmg/corpus.hpp>

#include <algorithm>
#include <cstdio>
#include <random>

#include <lmg/structure.hpp>

namespace lmg {

const char* to_string(CorpusConstraint c) {
    switch (c) {
        case CorpusConstraint::None: return "none";
        case CorpusConstraint::Ribbonless: return "ribbonless";
        case CorpusConstraint::MaximalRibbonless: return "maximal-ribbonless";
    }
    return "?";
}

CorpusConstraint parse_corpus_constraint(std::string_view text) {
    for (auto c : {CorpusConstraint::None, CorpusConstraint::Ribbonless, CorpusConstraint::MaximalRibbonless})
        if (text == to_string(c)) return c;
    throw std::invalid_argument("unknown constraint '" + std::string(text) + "'");
}

std::vector<std::string> corpus_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + k)) : "v" + std::to_string(k));
    if (n > 26) std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Explicit arithmetic instead of std distributions, whose output is
// implementation-defined, so a seed gives the same corpus everywhere.
class Draws {
public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(unit() * static_cast<double>(n)); }

private:
    std::mt19937_64 rng_;
};

MixedGraph draw_graph(const CorpusSpec& spec, Draws& d) {
    const std::size_t n = spec.min_nodes + d.below(spec.max_nodes - spec.min_nodes + 1);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            const double probs[] = {spec.p_line, spec.p_arrow, spec.p_arc};
            for (int kind = 0; kind < 3; ++kind) {
                if (!d.chance(probs[kind])) continue;
                const int copies = d.chance(spec.p_multi) ? 2 : 1;
                for (int c = 0; c < copies; ++c) {
                    switch (kind) {
                        case 0: edges.push_back(Edge::line(i, j)); break;
                        case 1: edges.push_back(d.chance(0.5) ? Edge::arrow(i, j) : Edge::arrow(j, i)); break;
                        default: edges.push_back(Edge::arc(i, j)); break;
                    }
                }
            }
        }
    }
    return MixedGraph::from_edges(corpus_labels(n), std::move(edges));
}

void validate(const CorpusSpec& spec) {
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob(spec.p_line) || !prob(spec.p_arrow) || !prob(spec.p_arc) || !prob(spec.p_multi))
        throw std::invalid_argument("edge probabilities must lie in [0, 1]");
    if (spec.min_nodes > spec.max_nodes) throw std::invalid_argument("min_nodes exceeds max_nodes");
    if (spec.attempts_per_graph == 0) throw std::invalid_argument("attempts_per_graph must be positive");
}

}  // namespace

std::vector<MixedGraph> generate_corpus(const CorpusSpec& spec) {
    validate(spec);
    Draws d(spec.seed);
    std::vector<MixedGraph> out;
    const std::size_t budget = spec.count * spec.attempts_per_graph;
    std::size_t attempts = 0;
    while (out.size() < spec.count) {
        if (attempts == budget) {
            char rate[32];
            std::snprintf(rate, sizeof rate, "%.4f", static_cast<double>(out.size()) / static_cast<double>(attempts));
            throw CorpusError("rejection budget exhausted after " + std::to_string(attempts) + " attempts with " +
                              std::to_string(out.size()) + " of " + std::to_string(spec.count) +
                              " graphs accepted (acceptance rate " + rate + ")");
        }
        ++attempts;
        MixedGraph g = draw_graph(spec, d);
        if (spec.constraint == CorpusConstraint::None) {
            out.push_back(std::move(g));
            continue;
        }
        if (!is_ribbonless(g)) continue;
        if (spec.constraint == CorpusConstraint::MaximalRibbonless) {
            g = maximalize(g);
            if (!is_ribbonless(g) || !is_maximal(g)) continue;
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace lmg
