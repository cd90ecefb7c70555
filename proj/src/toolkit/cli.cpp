#include <lmg/cli.hpp>

#include <algorithm>
#include <deque>
#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include <lmg/anterior.hpp>
#include <lmg/corpus.hpp>
#include <lmg/independence.hpp>
#include <lmg/separation.hpp>
#include <lmg/structure.hpp>
#include <lmg/text_format.hpp>

namespace lmg {

namespace {

using json = nlohmann::ordered_json;

struct Report {
    json query = json::object();
    json graph;
    json result;
    json witness;
    json counterexample;
    std::vector<std::string> lines;
};

struct Globals {
    std::string format = "text";
    bool allow_loops = false;
    std::size_t limit = 0;
};

std::string braced(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t k = 0; k < labels.size(); ++k) out += (k ? "," : "") + labels[k];
    return out + "}";
}

json graph_json(const std::string& file, const MixedGraph& g) {
    json j = json::object();
    if (!file.empty()) j["file"] = file;
    j["nodes"] = g.labels();
    j["edges"] = edge_declarations(g);
    return j;
}

json path_json(const MixedGraph& g, const Path& p) {
    std::vector<std::string> nodes;
    for (NodeId v : p.nodes) nodes.push_back(g.label(v));
    return {{"nodes", nodes}, {"text", format_path(g, p)}};
}

json statement_json(const IndependenceModel& m, const Statement& s) {
    return {{"a", m.labels_of(s.a)}, {"b", m.labels_of(s.b)}, {"c", m.labels_of(s.c)}, {"text", format_statement(m, s)}};
}

std::string without_final_newline(std::string text) {
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return text;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Runner {
public:
    explicit Runner(const Globals& globals) : globals_(globals) {}

    const MixedGraph& load(const std::string& file, Report& r) {
        docs_.push_back(read_graph_file(file, ParseOptions{globals_.allow_loops}));
        if (r.graph.is_null()) r.graph = graph_json(file, docs_.back().graph);
        return docs_.back().graph;
    }

    std::size_t limit_or(std::size_t fallback) const { return globals_.limit ? globals_.limit : fallback; }

private:
    const Globals& globals_;
    std::deque<GraphDocument> docs_;
};

IndependenceModel source_model(const MixedGraph& g, const std::string& from, std::size_t full_limit) {
    if (from == "pairwise") return pairwise_model(g);
    ModelLimits limits;
    limits.full_model = full_limit;
    return enumerate_model(g, false, limits);
}

void list_statements(Report& r, const IndependenceModel& m) {
    r.result = json::array();
    for (const auto& s : m.statements()) {
        r.result.push_back(format_statement(m, s));
        r.lines.push_back(format_statement(m, s));
    }
}

void print(const Report& r, const Globals& globals, std::ostream& out) {
    if (globals.format == "json") {
        json j = json::object();
        j["query"] = r.query;
        j["graph"] = r.graph;
        j["result"] = r.result;
        if (!r.witness.is_null()) j["witness"] = r.witness;
        if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& line : r.lines) out << line << '\n';
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals globals;
    CLI::App app{"Markov properties of loopless mixed graphs", "lmg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--format", globals.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--allow-loops", globals.allow_loops, "Accept loop edges when reading graphs");
    app.add_option("--limit", globals.limit, "Size or count limit for the command (0 = default)");

    Report report;
    Runner runner(globals);
    std::function<int()> action;
    std::string file;
    auto set_query = [&](const std::string& command) {
        report.query["command"] = command;
        if (!file.empty()) report.query["file"] = file;
    };

    std::string file2;
    std::vector<std::string> set_a;
    std::vector<std::string> set_b;
    std::vector<std::string> set_c;
    std::vector<std::string> nodes;
    std::string node_i;
    std::string node_j;
    std::string axiom_set = "compositional-graphoid";
    std::string from;
    std::string check_contains;
    bool singleton = false;
    CorpusSpec corpus;
    std::string constraint = "none";

    auto add_file = [&](CLI::App* sub) { sub->add_option("graph", file, "Graph file")->required(); };

    auto* validate = app.add_subcommand("validate", "Parse a graph file and report whether it is loopless");
    add_file(validate);
    validate->callback([&] {
        action = [&] {
            set_query("validate");
            const auto& g = runner.load(file, report);
            report.result = g.is_loopless();
            report.lines = {"nodes: " + std::to_string(g.node_count()), "edges: " + std::to_string(g.edge_count()),
                            std::string("loopless: ") + yes_no(g.is_loopless())};
            return g.is_loopless() ? 0 : 1;
        };
    });

    auto* msep = app.add_subcommand("msep", "Test A _||_ B | C by m-separation");
    add_file(msep);
    msep->add_option("--a", set_a, "Nodes of A")->delimiter(',')->required();
    msep->add_option("--b", set_b, "Nodes of B")->delimiter(',')->required();
    msep->add_option("--c", set_c, "Nodes of C")->delimiter(',');
    msep->callback([&] {
        action = [&] {
            set_query("msep");
            const auto& g = runner.load(file, report);
            SeparationQuery q{g.node_set(set_a), g.node_set(set_b), g.node_set(set_c)};
            report.query["a"] = g.labels_of(q.a);
            report.query["b"] = g.labels_of(q.b);
            report.query["c"] = g.labels_of(q.c);
            MSeparation engine(g);
            bool sep = engine.separated(q);
            report.result = sep;
            report.lines.push_back("query: " + braced(g.labels_of(q.a)) + " _||_ " + braced(g.labels_of(q.b)) +
                                   " | " + braced(g.labels_of(q.c)));
            report.lines.push_back(std::string("result: ") + (sep ? "separated" : "connected"));
            if (!sep) {
                for (NodeId x : q.a.members()) {
                    for (NodeId y : q.b.members()) {
                        if (auto p = engine.witness(x, y, q.c)) {
                            report.witness = path_json(g, *p);
                            report.lines.push_back("witness: " + format_path(g, *p));
                            return 1;
                        }
                    }
                }
            }
            return sep ? 0 : 1;
        };
    });

    auto* anterior = app.add_subcommand("anterior", "Print the anterior graph G*");
    add_file(anterior);
    anterior->callback([&] {
        action = [&] {
            set_query("anterior");
            MixedGraph gstar = anterior_graph(runner.load(file, report));
            report.result = graph_json("", gstar);
            report.lines.push_back(without_final_newline(serialize_graph(gstar)));
            return 0;
        };
    });

    auto* ants = app.add_subcommand("anteriors", "Print ant(i) for the given nodes (default: all)");
    add_file(ants);
    ants->add_option("--node", nodes, "Nodes to report")->delimiter(',');
    ants->callback([&] {
        action = [&] {
            set_query("anteriors");
            const auto& g = runner.load(file, report);
            std::vector<std::string> chosen = nodes.empty() ? g.labels() : nodes;
            report.result = json::object();
            for (const auto& l : chosen) {
                auto ant = g.labels_of(anteriors(g, g.id_of(l)));
                report.result[l] = ant;
                report.lines.push_back("ant(" + l + ") = " + braced(ant));
            }
            return 0;
        };
    });

    auto* ribbons = app.add_subcommand("ribbons", "List ribbons; true when the graph is ribbonless");
    add_file(ribbons);
    ribbons->callback([&] {
        action = [&] {
            set_query("ribbons");
            const auto& g = runner.load(file, report);
            auto found = find_ribbons(g);
            report.result = found.empty();
            report.lines.push_back(std::string("ribbonless: ") + yes_no(found.empty()));
            if (!found.empty()) report.counterexample = json::array();
            for (const auto& rb : found) {
                Path p{{rb.h, rb.i, rb.j}, {rb.first, rb.second}};
                report.counterexample.push_back({{"tripath", path_json(g, p)},
                                                 {"flavor", to_string(rb.flavor)},
                                                 {"witness", g.label(rb.witness)}});
                report.lines.push_back("ribbon: " + format_path(g, p) + " (" + to_string(rb.flavor) + ", via " +
                                       g.label(rb.witness) + ")");
            }
            return found.empty() ? 0 : 1;
        };
    });

    auto* classify_cmd = app.add_subcommand("classify", "Report membership in the graph classes");
    add_file(classify_cmd);
    classify_cmd->callback([&] {
        action = [&] {
            set_query("classify");
            GraphClass c = classify(runner.load(file, report));
            const std::pair<const char*, bool> rows[] = {
                {"loopless_mixed", c.loopless_mixed}, {"ribbonless", c.ribbonless},
                {"maximal", c.maximal},               {"ancestral", c.ancestral},
                {"acyclic_directed_mixed", c.acyclic_directed_mixed},
                {"undirected", c.undirected},         {"bidirected", c.bidirected},
                {"dag", c.dag}};
            report.result = json::object();
            for (const auto& [name, value] : rows) {
                report.result[name] = value;
                report.lines.push_back(std::string(name) + ": " + yes_no(value));
            }
            return 0;
        };
    });

    auto* maximal = app.add_subcommand("maximal", "Test maximality of a ribbonless graph");
    add_file(maximal);
    maximal->callback([&] {
        action = [&] {
            set_query("maximal");
            const auto& g = runner.load(file, report);
            auto r = check_maximal(g);
            report.result = r.maximal;
            report.lines.push_back(std::string("maximal: ") + yes_no(r.maximal));
            if (!r.maximal) report.counterexample = json::array();
            for (const auto& v : r.violations) {
                report.counterexample.push_back(
                    {{"pair", {g.label(v.i), g.label(v.j)}}, {"path", path_json(g, v.path)}});
                report.lines.push_back("non-adjacent pair (" + g.label(v.i) + ", " + g.label(v.j) +
                                       ") has inducing path " + format_path(g, v.path));
            }
            return r.maximal ? 0 : 1;
        };
    });

    auto* maximalize_cmd = app.add_subcommand("maximalize", "Print the maximal completion of a ribbonless graph");
    add_file(maximalize_cmd);
    maximalize_cmd->callback([&] {
        action = [&] {
            set_query("maximalize");
            const auto& g = runner.load(file, report);
            MixedGraph full = maximalize(g);
            MixedGraph added = MixedGraph::from_edges(
                full.labels(), std::vector<Edge>(full.edges().begin() + static_cast<long>(g.edge_count()),
                                                 full.edges().end()));
            report.result = graph_json("", full);
            report.result["added"] = edge_declarations(added);
            for (const auto& e : edge_declarations(added)) report.lines.push_back("# added " + e);
            report.lines.push_back(without_final_newline(serialize_graph(full)));
            return 0;
        };
    });

    auto* inducing = app.add_subcommand("inducing-paths", "List primitive inducing paths between two nodes");
    add_file(inducing);
    inducing->add_option("--i", node_i, "First endpoint")->required();
    inducing->add_option("--j", node_j, "Second endpoint")->required();
    inducing->callback([&] {
        action = [&] {
            set_query("inducing-paths");
            report.query["i"] = node_i;
            report.query["j"] = node_j;
            const auto& g = runner.load(file, report);
            auto paths = find_primitive_inducing_paths(g, g.id_of(node_i), g.id_of(node_j), runner.limit_or(1000));
            report.result = json::array();
            for (const auto& p : paths) {
                report.result.push_back(path_json(g, p));
                report.lines.push_back(format_path(g, p));
            }
            if (paths.empty()) report.lines.push_back("none");
            return paths.empty() ? 1 : 0;
        };
    });

    auto* model = app.add_subcommand("model", "List the m-separation model J_m(G)");
    add_file(model);
    model->add_flag("--singleton", singleton, "Only statements with singleton A and B");
    model->callback([&] {
        action = [&] {
            set_query("model");
            report.query["singleton"] = singleton;
            const auto& g = runner.load(file, report);
            ModelLimits limits;
            if (singleton)
                limits.singleton_model = runner.limit_or(limits.singleton_model);
            else
                limits.full_model = runner.limit_or(limits.full_model);
            list_statements(report, enumerate_model(g, singleton, limits));
            return 0;
        };
    });

    auto* pairwise = app.add_subcommand("pairwise", "List the pairwise Markov statements");
    add_file(pairwise);
    pairwise->callback([&] {
        action = [&] {
            set_query("pairwise");
            list_statements(report, pairwise_model(runner.load(file, report)));
            return 0;
        };
    });

    auto add_model_source = [&](CLI::App* sub, const std::string& fallback) {
        sub->add_option("--set", axiom_set, "Axiom set name or comma list of axioms");
        sub->add_option("--from", from, "Starting model")
            ->check(CLI::IsMember({"pairwise", "model"}))
            ->default_str(fallback);
    };

    auto* closure_cmd = app.add_subcommand("closure", "List the closure of a model under an axiom set");
    add_file(closure_cmd);
    add_model_source(closure_cmd, "pairwise");
    closure_cmd->callback([&] {
        action = [&] {
            if (from.empty()) from = "pairwise";
            set_query("closure");
            report.query["set"] = axiom_set;
            report.query["from"] = from;
            AxiomSet axioms = parse_axiom_set(axiom_set);
            const auto& g = runner.load(file, report);
            list_statements(report, closure(source_model(g, from, ModelLimits{}.full_model), axioms,
                                            runner.limit_or(ModelLimits{}.closure)));
            return 0;
        };
    });

    auto* axioms_cmd = app.add_subcommand("axioms", "Check axioms on a model, or derive a statement by closure");
    add_file(axioms_cmd);
    add_model_source(axioms_cmd, "model");
    axioms_cmd->add_option("--check-contains", check_contains, "Statement to look for in the closure");
    axioms_cmd->callback([&] {
        action = [&] {
            if (from.empty()) from = "model";
            set_query("axioms");
            report.query["set"] = axiom_set;
            report.query["from"] = from;
            AxiomSet axioms = parse_axiom_set(axiom_set);
            const auto& g = runner.load(file, report);
            IndependenceModel start = source_model(g, from, ModelLimits{}.full_model);
            if (!check_contains.empty()) {
                Statement target = parse_statement(start, check_contains);
                report.query["statement"] = format_statement(start, target);
                bool derivable = closure(start, axioms, runner.limit_or(ModelLimits{}.closure)).contains(target);
                report.result = derivable;
                report.lines.push_back("statement: " + format_statement(start, target));
                report.lines.push_back(std::string("derivable: ") + yes_no(derivable));
                return derivable ? 0 : 1;
            }
            bool all = true;
            for (Axiom a : axioms.members()) {
                auto v = check_axiom(start, a);
                if (!v) {
                    report.lines.push_back(std::string(to_string(a)) + ": pass");
                    continue;
                }
                std::string premises;
                json premise_json = json::array();
                for (const auto& s : v->premises) {
                    premises += (premises.empty() ? "" : " and ") + format_statement(start, s);
                    premise_json.push_back(statement_json(start, s));
                }
                report.lines.push_back(std::string(to_string(a)) + ": fail, " + premises + " but not " +
                                       format_statement(start, v->missing));
                if (all)
                    report.counterexample = {{"axiom", to_string(a)},
                                             {"premises", premise_json},
                                             {"missing", statement_json(start, v->missing)}};
                all = false;
            }
            report.result = all;
            return all ? 0 : 1;
        };
    });

    auto* equiv = app.add_subcommand("equiv", "Test Markov equivalence of two graphs");
    add_file(equiv);
    equiv->add_option("other", file2, "Second graph file")->required();
    equiv->callback([&] {
        action = [&] {
            set_query("equiv");
            report.query["other"] = file2;
            const auto& g1 = runner.load(file, report);
            const auto& g2 = runner.load(file2, report);
            ModelLimits limits;
            limits.singleton_model = runner.limit_or(limits.singleton_model);
            if (g1.labels() != g2.labels()) throw std::invalid_argument("graphs have different node sets");
            auto m1 = enumerate_model(g1, true, limits);
            auto m2 = enumerate_model(g2, true, limits);
            bool same = m1 == m2;
            report.result = same;
            report.lines.push_back(std::string("markov equivalent: ") + yes_no(same));
            if (!same) {
                for (const auto& [mine, theirs, where] :
                     {std::tuple{&m1, &m2, "first"}, std::tuple{&m2, &m1, "second"}}) {
                    for (const auto& s : mine->statements()) {
                        if (theirs->contains(s)) continue;
                        report.counterexample = {{"statement", statement_json(*mine, s)}, {"only_in", where}};
                        report.lines.push_back("only in " + std::string(where) + ": " + format_statement(*mine, s));
                        return 1;
                    }
                }
            }
            return same ? 0 : 1;
        };
    });

    auto* gen = app.add_subcommand("gen", "Generate a seeded random graph corpus");
    gen->add_option("--seed", corpus.seed, "Random seed");
    gen->add_option("--count", corpus.count, "Number of graphs");
    gen->add_option("--min-nodes", corpus.min_nodes, "Smallest node count");
    gen->add_option("--max-nodes", corpus.max_nodes, "Largest node count");
    gen->add_option("--p-line", corpus.p_line, "Line probability per pair");
    gen->add_option("--p-arrow", corpus.p_arrow, "Arrow probability per pair");
    gen->add_option("--p-arc", corpus.p_arc, "Arc probability per pair");
    gen->add_option("--p-multi", corpus.p_multi, "Probability of doubling a drawn edge");
    gen->add_option("--constraint", constraint, "none, ribbonless or maximal-ribbonless");
    gen->callback([&] {
        action = [&] {
            corpus.constraint = parse_corpus_constraint(constraint);
            corpus.attempts_per_graph = runner.limit_or(corpus.attempts_per_graph);
            set_query("gen");
            report.query["seed"] = corpus.seed;
            report.query["count"] = corpus.count;
            report.query["min_nodes"] = corpus.min_nodes;
            report.query["max_nodes"] = corpus.max_nodes;
            report.query["p_line"] = corpus.p_line;
            report.query["p_arrow"] = corpus.p_arrow;
            report.query["p_arc"] = corpus.p_arc;
            report.query["p_multi"] = corpus.p_multi;
            report.query["constraint"] = constraint;
            auto graphs = generate_corpus(corpus);
            report.result = json::array();
            for (std::size_t k = 0; k < graphs.size(); ++k) {
                report.result.push_back(graph_json("", graphs[k]));
                if (k) report.lines.emplace_back();
                report.lines.push_back("# graph " + std::to_string(k + 1));
                report.lines.push_back(without_final_newline(serialize_graph(graphs[k])));
            }
            return 0;
        };
    });

    auto* dot = app.add_subcommand("dot", "Print the graph in DOT format");
    add_file(dot);
    dot->callback([&] {
        action = [&] {
            set_query("dot");
            std::string text = to_dot(runner.load(file, report));
            report.result = text;
            report.lines.push_back(without_final_newline(text));
            return 0;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (!action) return 2;
    try {
        int code = action();
        print(report, globals, out);
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace lmg
