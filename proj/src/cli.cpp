#include "zfc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

#include "zfc/error.hpp"
#include "zfc/io.hpp"

namespace zfc {

namespace {

struct CliConfig {
    std::string graph;
    std::string pattern;
    std::string matching;
    std::string set;
    std::string input;
    std::string forbid;
    std::string method = "zf";
    std::string format = "json";
    bool self_less = false;
    bool corollary_gap = false;
    int samples = kDefaultSamples;
    std::uint64_t seed = kDefaultSeed;
};

class Command {
public:
    Command(const CliConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    int zf_propagate() {
        const auto in = graph();
        const auto result = propagate(in.graph, in.kind, parse_vertex_list(cfg_.set));
        if (text()) {
            out_ << "complete: " << yes_no(result.complete) << "\n"
                 << "black: " << vertex_set_to_text(result.black) << "\n"
                 << "forces: " << forces_to_text(result.forces) << "\n";
        } else {
            emit(propagation_to_json(result));
        }
        return kExitOk;
    }

    int zf_check() {
        const auto in = graph();
        const VertexSet s = parse_vertex_list(cfg_.set);
        const auto result = propagate(in.graph, in.kind, s);
        if (text()) {
            out_ << vertex_set_to_text(s) << (result.complete ? " is" : " is not") << " a zero forcing set ("
                 << to_string(in.kind) << ")\n"
                 << "forces: " << forces_to_text(result.forces) << "\n";
        } else {
            Json doc = propagation_to_json(result);
            doc["verdict"] = result.complete;
            doc["kind"] = std::string(to_string(in.kind));
            doc["set"] = vertex_set_to_json(s);
            emit(doc);
        }
        return kExitOk;
    }

    int zf_number() {
        const auto in = graph();
        const auto z = zero_forcing_number(in.graph, in.kind);
        emit_zfs(z, "exhaustive", in.kind);
        return kExitOk;
    }

    int zf_tree() {
        const auto in = graph();
        emit_zfs(tree_min_zero_forcing_set(in.graph), "tree", in.kind);
        return kExitOk;
    }

    int mr_tree() {
        const auto in = graph();
        const auto z = tree_min_zero_forcing_set(in.graph);
        const int mr = in.graph.size() - z.size;
        if (text()) {
            out_ << "minimum rank: " << mr << "\nZ: " << z.size << "\n";
        } else {
            emit({{"min_rank", mr}, {"z", z.size}, {"n", in.graph.size()}});
        }
        return kExitOk;
    }

    int tri() {
        const auto in = loop_graph();
        const auto best = max_constrained_matching(bipartite_of_graph(in.graph));
        if (text()) {
            out_ << "triangle number: " << best.size << "\nmatching: " << matching_to_text(best.witness) << "\n";
        } else {
            emit({{"triangle_number", best.size}, {"edges", matching_edges_to_json(best.witness)}});
        }
        return kExitOk;
    }

    int match_check() {
        if (cfg_.matching.empty()) throw InputError("--matching is required");
        const BipartiteGraph b = bipartite();
        const Matching m = parse_matching_json(read_input(cfg_.matching));
        const auto check = is_constrained(b, m);
        if (text()) {
            out_ << matching_to_text(m) << (check.constrained ? " is" : " is not") << " constrained\n";
            if (check.certificate) out_ << "ordering: " << matching_to_text(*check.certificate) << "\n";
        } else {
            Json doc = matching_to_json(m, check.constrained);
            doc["certificate"] = check.certificate ? matching_edges_to_json(*check.certificate) : Json(nullptr);
            emit(doc);
        }
        return kExitOk;
    }

    int match_max() {
        const BipartiteGraph b = bipartite();
        VertexSet forbidden = parse_vertex_list(cfg_.forbid);
        if (cfg_.self_less) {
            for (int i = 1; i <= std::min(b.rows(), b.cols()); ++i) forbidden.insert(i);
        }
        const auto best = max_constrained_matching(b, forbidden);
        if (text()) {
            out_ << "maximum constrained matching size: " << best.size << "\nmatching: "
                 << matching_to_text(best.witness) << "\n";
        } else {
            Json doc = matching_to_json(best.witness, true);
            doc["size"] = best.size;
            doc["forbidden_diagonal"] = vertex_set_to_json(forbidden);
            emit(doc);
        }
        return kExitOk;
    }

    int ctrl_strong() {
        const auto in = graph();
        const SystemSpec spec{in.graph, in.kind, inputs()};
        if (in.kind == GraphKind::SimpleDirected) {
            if (cfg_.method != "zf") throw InputError("simple directed systems only support --method zf");
            emit_report(strong_simple(spec.graph, spec.inputs));
            return kExitOk;
        }
        if (cfg_.method == "zf") {
            emit_report(strong_zf(spec));
            return kExitOk;
        }
        if (cfg_.method == "matching") {
            emit_report(strong_matching(spec));
            return kExitOk;
        }
        const auto zf = strong_zf(spec);
        const auto mt = strong_matching(spec);
        const bool agree = zf.verdict == mt.verdict;
        if (text()) {
            out_ << "verdict: " << (agree ? yes_no(zf.verdict) : "DISAGREEMENT") << "\n";
            report_text(zf);
            report_text(mt);
        } else {
            emit({{"verdict", agree ? Json(zf.verdict) : Json(nullptr)},
                  {"method", "both"},
                  {"agree", agree},
                  {"zf", report_to_json(zf)},
                  {"matching", report_to_json(mt)}});
        }
        return agree ? kExitOk : kExitDisagreement;
    }

    int ctrl_min_input() {
        const auto in = graph();
        const auto best = min_input_set(in.graph, in.kind);
        std::optional<CorollaryGap> gap;
        if (cfg_.corollary_gap) {
            if (in.kind != GraphKind::LoopDirected) throw InputError("--corollary-gap needs a loop directed graph");
            gap = corollary_gap(in.graph);
        }
        if (text()) {
            out_ << "minimum input set size: " << best.size << "\nwitness: " << vertex_set_to_text(best.witness)
                 << "\nmethod: " << best.method << "\n";
            if (gap) {
                out_ << "self-less matching input set: " << vertex_set_to_text(gap->corollary_set) << " (size "
                     << gap->corollary_set.size() << ", gap " << gap->corollary_set.size() - best.size << ")\n";
            }
        } else {
            Json doc = min_input_to_json(best);
            if (gap) {
                doc["corollary"] = {{"set", vertex_set_to_json(gap->corollary_set)},
                                    {"size", gap->corollary_set.size()},
                                    {"matching", matching_edges_to_json(gap->self_less_matching)},
                                    {"gap", static_cast<int>(gap->corollary_set.size()) - best.size}};
            }
            emit(doc);
        }
        return kExitOk;
    }

    int ctrl_kalman() {
        const auto in = graph();
        const SystemSpec spec{in.graph, in.kind, inputs()};
        const auto report = kalman_trial(spec, cfg_.samples, cfg_.seed);
        if (text()) {
            out_ << "controllable samples: " << report.controllable << "/" << report.samples << " (seed "
                 << report.seed << ")\nstructural verdict: " << yes_no(report.strong_verdict) << "\n";
            if (report.first_uncontrollable) {
                out_ << "first uncontrollable realization:\nA =\n"
                     << report.first_uncontrollable->first.to_text() << "B =\n"
                     << report.first_uncontrollable->second.to_text();
            }
        } else {
            emit(kalman_to_json(report));
        }
        return kExitOk;
    }

private:
    static const char* yes_no(bool b) { return b ? "yes" : "no"; }

    bool text() const { return cfg_.format == "text"; }

    void emit(const Json& doc) { out_ << doc.dump(2) << "\n"; }

    GraphInput graph() const {
        if (cfg_.graph.empty()) throw InputError("--graph is required");
        return parse_graph_json(read_input(cfg_.graph));
    }

    GraphInput loop_graph() const {
        auto in = graph();
        if (in.kind != GraphKind::LoopDirected) throw InputError("this command needs a loop directed graph");
        return in;
    }

    VertexSet inputs() const {
        const VertexSet s = parse_vertex_list(cfg_.input);
        if (s.empty()) throw InputError("--input must list at least one vertex");
        return s;
    }

    BipartiteGraph bipartite() const {
        if (!cfg_.pattern.empty() && !cfg_.graph.empty()) throw InputError("give either --pattern or --graph");
        if (!cfg_.pattern.empty()) return to_bipartite(parse_pattern(read_input(cfg_.pattern)));
        return bipartite_of_graph(loop_graph().graph);
    }

    void emit_zfs(const ZeroForcingSet& z, const char* method, GraphKind kind) {
        if (text()) {
            out_ << "Z = " << z.size << "\nwitness: " << vertex_set_to_text(z.witness) << "\n";
        } else {
            emit({{"z", z.size}, {"witness", vertex_set_to_json(z.witness)}, {"method", method},
                  {"kind", std::string(to_string(kind))}});
        }
    }

    void report_text(const StrongControllabilityReport& r) {
        out_ << "[" << r.method << "] strongly controllable from " << vertex_set_to_text(r.inputs) << ": "
             << yes_no(r.verdict) << "\n";
        if (!r.failure.empty()) out_ << "  failed: " << r.failure << "\n";
        if (r.propagation) out_ << "  forces in G: " << forces_to_text(r.propagation->forces) << "\n";
        if (r.loop_free_forces) out_ << "  forces in G_x: " << forces_to_text(*r.loop_free_forces) << "\n";
        if (r.pattern_matching) out_ << "  A(S|.) matching: " << matching_to_text(*r.pattern_matching) << "\n";
        if (r.crossed_matching) out_ << "  A_x(S|.) matching: " << matching_to_text(*r.crossed_matching) << "\n";
    }

    void emit_report(const StrongControllabilityReport& r) {
        if (text()) {
            report_text(r);
        } else {
            emit(report_to_json(r));
        }
    }

    const CliConfig& cfg_;
    std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    std::function<int(Command&)> action;

    CLI::App app{"Zero forcing sets, constrained matchings and strong structural controllability"};
    app.name("zfc");
    app.require_subcommand(1);

    const auto formats = CLI::IsMember({"json", "text"});
    auto add_format = [&](CLI::App* cmd) { cmd->add_option("--format", cfg.format, "json or text")->check(formats); };
    auto add_graph = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--graph", cfg.graph, "graph JSON file ('-' for stdin)");
        if (required) opt->required();
    };
    auto leaf = [&](CLI::App* parent, const char* name, const char* help, int (Command::*fn)()) {
        auto* cmd = parent->add_subcommand(name, help);
        cmd->callback([&action, fn] { action = [fn](Command& c) { return (c.*fn)(); }; });
        add_format(cmd);
        return cmd;
    };

    auto* zf = app.add_subcommand("zf", "zero forcing");
    zf->require_subcommand(1);
    auto* zf_prop = leaf(zf, "propagate", "apply the color change rule to closure", &Command::zf_propagate);
    add_graph(zf_prop, true);
    zf_prop->add_option("--set", cfg.set, "initially black vertices, e.g. 1,2");
    auto* zf_check = leaf(zf, "check", "is the set a zero forcing set", &Command::zf_check);
    add_graph(zf_check, true);
    zf_check->add_option("--set", cfg.set, "vertex list, e.g. 1,2");
    add_graph(leaf(zf, "number", "exact zero forcing number", &Command::zf_number), true);
    add_graph(leaf(zf, "tree", "minimum zero forcing set of a symmetric tree", &Command::zf_tree), true);

    auto* match = app.add_subcommand("match", "constrained matchings");
    match->require_subcommand(1);
    auto* m_check = leaf(match, "check", "is the matching constrained", &Command::match_check);
    add_graph(m_check, false);
    m_check->add_option("--pattern", cfg.pattern, "pattern text file");
    m_check->add_option("--matching", cfg.matching, "matching JSON file")->required();
    auto* m_max = leaf(match, "max", "maximum constrained matching", &Command::match_max);
    add_graph(m_max, false);
    m_max->add_option("--pattern", cfg.pattern, "pattern text file");
    m_max->add_flag("--self-less", cfg.self_less, "forbid every diagonal edge");
    m_max->add_option("--forbid", cfg.forbid, "forbid the diagonal edges (i,i) of these indices");

    add_graph(leaf(&app, "tri", "triangle number of a loop directed graph", &Command::tri), true);
    add_graph(leaf(&app, "mr-tree", "minimum rank of a symmetric tree", &Command::mr_tree), true);

    auto* ctrl = app.add_subcommand("ctrl", "strong structural controllability");
    ctrl->require_subcommand(1);
    auto* strong = leaf(ctrl, "strong", "decide strong controllability from an input set", &Command::ctrl_strong);
    add_graph(strong, true);
    strong->add_option("--input", cfg.input, "input vertices, e.g. 1,3")->required();
    strong->add_option("--method", cfg.method, "zf, matching or both")
        ->check(CLI::IsMember({"zf", "matching", "both"}));
    auto* min_input = leaf(ctrl, "min-input", "minimum-size input set", &Command::ctrl_min_input);
    add_graph(min_input, true);
    min_input->add_flag("--corollary-gap", cfg.corollary_gap,
                        "also report the self-less matching input set and its gap to the minimum");
    auto* kalman = leaf(ctrl, "kalman", "exact Kalman rank on sampled realizations", &Command::ctrl_kalman);
    add_graph(kalman, true);
    kalman->add_option("--input", cfg.input, "input vertices, e.g. 1,3")->required();
    kalman->add_option("--samples", cfg.samples, "number of realizations")->check(CLI::NonNegativeNumber);
    kalman->add_option("--seed", cfg.seed, "sampling seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        Command command(cfg, out);
        return action(command);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ConsistencyError& e) {
        err << "cross-check failed: " << e.what() << "\n";
        return kExitDisagreement;
    }
}

}  // namespace zfc
