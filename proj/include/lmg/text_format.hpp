#ifndef LMG_TEXT_FORMAT_HPP
#define LMG_TEXT_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <lmg/graph.hpp>

namespace lmg {

struct SourcePosition {
    std::size_t line = 0;  ///< 1-based
    std::size_t column = 0;  ///< 1-based
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePosition pos, const std::string& message, const std::string& file = {});
    SourcePosition position() const { return pos_; }
    const std::string& message() const { return message_; }

private:
    SourcePosition pos_;
    std::string message_;
};

struct GraphDocument {
    std::string source;
    MixedGraph graph;
    std::vector<SourcePosition> node_positions;  ///< by node id, first mention
    std::vector<SourcePosition> edge_positions;  ///< by edge id
};

struct ParseOptions {
    bool allow_loops = false;
};

/// One declaration per line:
///
///     node <label>
///     <label> -- <label>
///     <label> -> <label>
///     <label> <-> <label>
///
/// `#` starts a comment. Labels are runs of letters, digits, `_`, `.` and `'`.
/// Nodes are declared implicitly by edges; repeated edge lines are parallel edges.
GraphDocument parse_graph(std::string_view text, const ParseOptions& options = {});
GraphDocument read_graph_file(const std::string& path, const ParseOptions& options = {});

/// Edge declarations such as `i -> h`, in the order `serialize_graph` writes them.
std::vector<std::string> edge_declarations(const MixedGraph& g);

/// Nodes, then edges sorted by endpoints and kind. Lines and arcs are written
/// with the smaller label first.
std::string serialize_graph(const MixedGraph& g);

std::string to_dot(const MixedGraph& g, std::string_view name = "G");

}  // namespace lmg

#endif
