#ifndef LMG_CORPUS_HPP
#define LMG_CORPUS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <lmg/graph.hpp>

namespace lmg {

enum class CorpusConstraint { None, Ribbonless, MaximalRibbonless };

const char* to_string(CorpusConstraint c);
/// "none", "ribbonless" or "maximal-ribbonless"; throws std::invalid_argument otherwise.
CorpusConstraint parse_corpus_constraint(std::string_view text);

/// Random loopless graphs: for every unordered pair and every edge kind an
/// edge is drawn independently with that kind's probability (arrows get a
/// random direction), and each drawn edge gets a parallel copy of the same
/// kind with probability `p_multi`.
struct CorpusSpec {
    std::size_t min_nodes = 3;
    std::size_t max_nodes = 5;
    double p_line = 0.2;
    double p_arrow = 0.3;
    double p_arc = 0.2;
    double p_multi = 0.0;
    CorpusConstraint constraint = CorpusConstraint::None;
    std::uint64_t seed = 1;
    std::size_t count = 10;
    /// Rejection budget per requested graph.
    std::size_t attempts_per_graph = 1000;
};

class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument on an invalid spec and CorpusError when the
/// rejection budget runs out; the message reports the acceptance rate.
std::vector<MixedGraph> generate_corpus(const CorpusSpec& spec);

/// Node labels used by the generator: a, b, ... for up to 26 nodes, v0, v1, ... beyond.
std::vector<std::string> corpus_labels(std::size_t n);

}  // namespace lmg

#endif
