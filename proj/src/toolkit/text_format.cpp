#include <lmg/text_format.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace lmg {

ParseError::ParseError(SourcePosition pos, const std::string& message, const std::string& file)
    : std::runtime_error((file.empty() ? "" : file + ":") + std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

namespace {

bool label_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '\'';
}

struct RawEdge {
    std::string from;
    std::string to;
    EdgeKind kind;
    SourcePosition pos;
};

class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
    }
    bool done() {
        skip_space();
        return at_ >= text_.size();
    }
    SourcePosition here() const { return {line_, at_ + 1}; }

    std::string label(const char* what) {
        skip_space();
        std::size_t start = at_;
        while (at_ < text_.size() && label_char(text_[at_])) ++at_;
        if (start == at_) throw ParseError(here(), std::string("expected ") + what);
        return std::string(text_.substr(start, at_ - start));
    }

    EdgeKind op() {
        skip_space();
        auto rest = text_.substr(at_);
        if (rest.starts_with("<->")) {
            at_ += 3;
            return EdgeKind::Arc;
        }
        if (rest.starts_with("->")) {
            at_ += 2;
            return EdgeKind::Arrow;
        }
        if (rest.starts_with("--")) {
            at_ += 2;
            return EdgeKind::Line;
        }
        throw ParseError(here(), "expected '--', '->' or '<->'");
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t at_ = 0;
};

}  // namespace

GraphDocument parse_graph(std::string_view text, const ParseOptions& options) {
    std::map<std::string, SourcePosition> nodes;
    std::vector<RawEdge> raw;
    auto mention = [&](const std::string& label, SourcePosition pos) { nodes.emplace(label, pos); };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        LineScanner scan(line, line_no);
        if (!scan.done()) {
            SourcePosition first = scan.here();
            std::string head = scan.label("a node label or 'node'");
            scan.skip_space();
            if (head == "node" && !scan.done() && label_char(line[scan.here().column - 1])) {
                SourcePosition pos = scan.here();
                mention(scan.label("a node label"), pos);
            } else {
                EdgeKind kind = scan.op();
                scan.skip_space();
                SourcePosition second = scan.here();
                std::string to = scan.label("a node label");
                if (head == to && !options.allow_loops) throw ParseError(first, "loop at '" + head + "' is not allowed");
                mention(head, first);
                mention(to, second);
                raw.push_back({head, to, kind, first});
            }
            if (!scan.done()) throw ParseError(scan.here(), "unexpected text after declaration");
        }
        if (end == text.size()) break;
        start = end + 1;
    }

    GraphDocument doc;
    doc.source = std::string(text);
    std::vector<std::string> labels;
    for (const auto& [label, pos] : nodes) {
        labels.push_back(label);
        doc.node_positions.push_back(pos);
    }
    std::vector<EdgeSpec> specs;
    for (const auto& e : raw) {
        specs.push_back({e.from, e.to, e.kind});
        doc.edge_positions.push_back(e.pos);
    }
    doc.graph = MixedGraph(std::move(labels), specs);
    return doc;
}

GraphDocument read_graph_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph(buf.str(), options);
    } catch (const ParseError& e) {
        throw ParseError(e.position(), e.message(), path);
    }
}

namespace {

struct EdgeLine {
    NodeId left;
    NodeId right;
    EdgeKind kind;
    friend auto operator<=>(const EdgeLine&, const EdgeLine&) = default;
};

std::vector<EdgeLine> edge_lines(const MixedGraph& g) {
    std::vector<EdgeLine> out;
    for (const auto& e : g.edges()) {
        switch (e.kind()) {
            case EdgeKind::Arrow:
                out.push_back({e.head_at(e.b) ? e.a : e.b, e.head_at(e.b) ? e.b : e.a, EdgeKind::Arrow});
                break;
            default:
                out.push_back({std::min(e.a, e.b), std::max(e.a, e.b), e.kind()});
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const char* op_text(EdgeKind k) {
    switch (k) {
        case EdgeKind::Line: return "--";
        case EdgeKind::Arrow: return "->";
        case EdgeKind::Arc: return "<->";
    }
    return "?";
}

std::string dot_id(const std::string& label) {
    std::string out = "\"";
    for (char ch : label) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::vector<std::string> edge_declarations(const MixedGraph& g) {
    std::vector<std::string> out;
    for (const auto& e : edge_lines(g)) out.push_back(g.label(e.left) + " " + op_text(e.kind) + " " + g.label(e.right));
    return out;
}

std::string serialize_graph(const MixedGraph& g) {
    std::string out;
    for (const auto& l : g.labels()) out += "node " + l + "\n";
    for (const auto& e : edge_declarations(g)) out += e + "\n";
    return out;
}

std::string to_dot(const MixedGraph& g, std::string_view name) {
    std::string out = "digraph " + dot_id(std::string(name)) + " {\n";
    for (const auto& l : g.labels()) out += "  " + dot_id(l) + ";\n";
    for (const auto& e : edge_lines(g)) {
        out += "  " + dot_id(g.label(e.left)) + " -> " + dot_id(g.label(e.right));
        switch (e.kind) {
            case EdgeKind::Line: out += " [dir=none, arrowtail=none, arrowhead=none]"; break;
            case EdgeKind::Arrow: out += " [dir=forward, arrowtail=none, arrowhead=normal]"; break;
            case EdgeKind::Arc: out += " [dir=both, arrowtail=normal, arrowhead=normal]"; break;
        }
        out += ";\n";
    }
    return out + "}\n";
}

}  // namespace lmg
