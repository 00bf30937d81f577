#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "esbss/connectivity.hpp"
#include "esbss/error.hpp"
#include "esbss/graph_io.hpp"
#include "esbss/optimizer.hpp"
#include "esbss/oracle.hpp"
#include "esbss/strong_biconnectivity.hpp"
#include "esbss/testkit.hpp"
#include "esbss/version.hpp"

namespace esbss::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Common {
    std::string file;
    bool json = false;
    Vertex label_base = 0;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    Clock::time_point start = Clock::now();
};

Json ids(std::span<const ArcId> arcs) {
    Json list = Json::array();
    for (ArcId a : arcs) {
        list.push_back(a.value);
    }
    return list;
}

Json arc_pairs(const Digraph& g, std::span<const ArcId> arcs) {
    Json list = Json::array();
    for (ArcId a : arcs) {
        list.push_back(Json::array({g.arc(a).tail, g.arc(a).head}));
    }
    return list;
}

Json vertex_sets(const std::vector<VertexSet>& sets) {
    Json list = Json::array();
    for (const auto& s : sets) {
        list.push_back(s);
    }
    return list;
}

std::string arc_text(const Digraph& g, ArcId a, Vertex base) {
    const Arc& arc = g.arc(a);
    return "(" + std::to_string(arc.tail + base) + ", " + std::to_string(arc.head + base) + ")";
}

std::string arc_list_text(const Digraph& g, std::span<const ArcId> arcs, Vertex base) {
    std::string s = "[";
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        s += (k ? ", " : "") + arc_text(g, arcs[k], base);
    }
    return s + "]";
}

std::string set_text(const VertexSet& set, Vertex base) {
    std::string s = "{";
    for (std::size_t k = 0; k < set.size(); ++k) {
        s += (k ? "," : "") + std::to_string(set[k] + base);
    }
    return s + "}";
}

Json report(const std::string& command, const Common& common, const Digraph* g, Json result,
            const Context& ctx, std::optional<std::uint64_t> seed = std::nullopt) {
    Json r;
    r["command"] = command;
    Json input;
    input["path"] = common.file;
    if (g) {
        input["n"] = g->vertex_count();
        input["m"] = g->arc_count();
    }
    r["input"] = input;
    r["result"] = std::move(result);
    const auto elapsed = std::chrono::duration<double, std::milli>(Clock::now() - ctx.start);
    r["timing_ms"] = elapsed.count();
    r["provenance"] = {{"tool", "esbss"}, {"version", kVersion}, {"seed", seed ? Json(*seed) : Json()}};
    return r;
}

Json witness_json(const SbcCheckReport& rep, const Digraph& g, Vertex base) {
    if (!rep.witness) {
        return nullptr;
    }
    const Witness& w = *rep.witness;
    static constexpr const char* kKinds[] = {"too_few_vertices", "not_strongly_connected", "cut_vertex",
                                             "strong_bridge", "b_bridge"};
    Json j;
    j["kind"] = kKinds[static_cast<int>(w.kind)];
    j["vertex"] = w.vertex ? Json(*w.vertex) : Json();
    j["arc"] = w.arc ? Json(w.arc->value) : Json();
    j["text"] = describe(w, g, base);
    return j;
}

Json check_json(const SbcCheckReport& rep, const Digraph& g, Vertex base) {
    return {{"strongly_connected", rep.strongly_connected},
            {"underlying_biconnected", rep.underlying_biconnected},
            {"strongly_biconnected", rep.strongly_biconnected},
            {"two_edge_sbc", rep.two_edge_sbc},
            {"witness", witness_json(rep, g, base)}};
}

Json trace_json(const ApproxTrace& t) {
    Json per = Json::array();
    for (const auto& [bridge, added] : t.per_bridge_added) {
        per.push_back({{"bridge", bridge.value}, {"added", ids(added)}});
    }
    return {{"n", t.n},
            {"m", t.m},
            {"minimal_2ecss", ids(t.minimal_2ecss)},
            {"early_exit", t.early_exit},
            {"phase1_added", ids(t.phase1_added)},
            {"bbridges_found", ids(t.bbridges_found)},
            {"per_bridge_added", per},
            {"result", ids(t.result)}};
}

ArcSet ids_from(const Json& j) {
    ArcSet out;
    for (const auto& v : j) {
        out.push_back(ArcId{v.get<std::uint32_t>()});
    }
    return out;
}

ApproxTrace trace_from_json(const Json& j) {
    ApproxTrace t;
    t.n = j.at("n").get<std::size_t>();
    t.m = j.at("m").get<std::size_t>();
    t.minimal_2ecss = ids_from(j.at("minimal_2ecss"));
    t.early_exit = j.at("early_exit").get<bool>();
    t.phase1_added = ids_from(j.at("phase1_added"));
    t.bbridges_found = ids_from(j.at("bbridges_found"));
    for (const auto& entry : j.at("per_bridge_added")) {
        t.per_bridge_added.emplace_back(ArcId{entry.at("bridge").get<std::uint32_t>()},
                                        ids_from(entry.at("added")));
    }
    t.result = ids_from(j.at("result"));
    return t;
}

Json bound_json(const BoundReport& b) {
    return {{"size", b.size},
            {"m", b.m},
            {"i", b.bridge_count},
            {"lower_bound", b.lower_bound},
            {"upper_bound", b.upper_bound},
            {"ratio_upper", b.ratio_upper}};
}

void print_bound(std::ostream& out, const BoundReport& b, std::size_t n) {
    out << "lower bound: 2n = " << b.lower_bound << '\n';
    out << "upper bound: |E2e| <= i*" << (n - 1) << " + " << 5 * n << " = " << b.upper_bound
        << " (i = " << b.bridge_count << ")\n";
    out << "ratio bound: (5+i)/2 = " << b.ratio_upper << '\n';
}

void emit(const Context& ctx, const Json& j) { ctx.out << j.dump(2) << '\n'; }

int cmd_check(const Common& c, const Context& ctx) {
    const Digraph g = read_edge_list_file(c.file);
    const auto rep = is_two_edge_strongly_biconnected(g);
    if (c.json) {
        emit(ctx, report("check", c, &g, check_json(rep, g, c.label_base), ctx));
    } else {
        auto yes = [](bool b) { return b ? "yes" : "no"; };
        ctx.out << "input: " << c.file << " (n = " << g.vertex_count() << ", m = " << g.arc_count()
                << ")\n";
        ctx.out << "strongly connected: " << yes(rep.strongly_connected) << '\n';
        ctx.out << "underlying biconnected: " << yes(rep.underlying_biconnected) << '\n';
        ctx.out << "strongly biconnected: " << yes(rep.strongly_biconnected) << '\n';
        ctx.out << "2-edge strongly biconnected: " << yes(rep.two_edge_sbc) << '\n';
        if (rep.witness) {
            ctx.out << "witness: " << describe(*rep.witness, g, c.label_base) << '\n';
        }
    }
    return rep.two_edge_sbc ? kOk : kNegative;
}

int cmd_components(const Common& c, const Context& ctx) {
    const Digraph g = read_edge_list_file(c.file);
    const auto scc = sccs(g);
    const auto blk = blocks(underlying(g));
    const auto sbc = sbcs(g);
    if (c.json) {
        Json result = {{"sccs", vertex_sets(scc.components)},
                       {"blocks", vertex_sets(blk.blocks)},
                       {"cut_vertices", blk.cut_vertices},
                       {"sbcs", vertex_sets(sbc.components)}};
        emit(ctx, report("components", c, &g, std::move(result), ctx));
        return kOk;
    }
    auto print = [&](const char* title, const std::vector<VertexSet>& sets) {
        ctx.out << title << ": " << sets.size() << '\n';
        for (const auto& s : sets) {
            ctx.out << "  " << set_text(s, c.label_base) << '\n';
        }
    };
    print("strongly connected components", scc.components);
    print("blocks of the underlying graph", blk.blocks);
    ctx.out << "cut vertices: " << set_text(blk.cut_vertices, c.label_base) << '\n';
    print("strongly biconnected components", sbc.components);
    return kOk;
}

int cmd_bbridges(const Common& c, const Context& ctx) {
    const Digraph g = read_edge_list_file(c.file);
    if (!is_strongly_biconnected(g)) {
        ctx.err << "error: graph not strongly biconnected\n";
        return kNegative;
    }
    const auto bridges = b_bridges(g);
    if (c.json) {
        emit(ctx, report("bbridges", c, &g,
                         {{"bbridges", ids(bridges)}, {"arcs", arc_pairs(g, bridges)}}, ctx));
    } else {
        ctx.out << "b-bridges: " << bridges.size() << '\n';
        for (ArcId a : bridges) {
            ctx.out << "  #" << a.value << ' ' << arc_text(g, a, c.label_base) << '\n';
        }
    }
    return kOk;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ParseError(0, "cannot write '" + path + "'");
    }
    f << text;
}

struct MinimizeOptions {
    bool exact = false;
    std::uint64_t budget = 10'000'000;
    std::string dot;
};

int cmd_minimize(const Common& c, const MinimizeOptions& opt, const Context& ctx) {
    const Digraph g = read_edge_list_file(c.file);
    const auto input_check = is_two_edge_strongly_biconnected(g);
    if (!input_check.two_edge_sbc) {
        ctx.err << "input is not 2-edge strongly biconnected ("
                << describe(*input_check.witness, g, c.label_base) << ")\n";
        if (c.json) {
            emit(ctx, report("minimize", c, &g,
                             {{"error", "input is not 2-edge strongly biconnected"},
                              {"check", check_json(input_check, g, c.label_base)}},
                             ctx));
        }
        return kNegative;
    }

    if (opt.exact) {
        try {
            const auto res = oracle::exact_m2esbss(g, opt.budget);
            if (!opt.dot.empty()) {
                write_text_file(opt.dot, to_dot(g, res.witness, c.label_base));
            }
            if (c.json) {
                emit(ctx, report("minimize", c, &g,
                                 {{"mode", "exact"},
                                  {"opt_size", res.opt_size},
                                  {"witness", ids(res.witness)},
                                  {"explored", res.explored},
                                  {"certified_checks", res.certified_checks}},
                                 ctx));
            } else {
                ctx.out << "optimal: " << res.opt_size << '\n';
                ctx.out << "witness: " << arc_list_text(g, res.witness, c.label_base) << '\n';
                ctx.out << "feasibility checks: " << res.explored << " (" << res.certified_checks
                        << " at size " << res.opt_size - 1 << ", all infeasible)\n";
            }
            return kOk;
        } catch (const oracle::BudgetExceeded& e) {
            ctx.err << "budget exceeded after " << opt.budget
                    << " checks; best known upper bound: " << e.best_upper_bound() << '\n';
            if (c.json) {
                emit(ctx, report("minimize", c, &g,
                                 {{"mode", "exact"},
                                  {"error", "budget exceeded"},
                                  {"best_upper_bound", e.best_upper_bound()}},
                                 ctx));
            }
            return kResourceLimit;
        }
    }

    const auto trace = approx_m2esbss(g);
    const auto bound = bound_report(trace);
    if (!opt.dot.empty()) {
        write_text_file(opt.dot, to_dot(g, trace.result, c.label_base));
    }
    if (c.json) {
        emit(ctx, report("minimize", c, &g,
                         {{"mode", "approx"}, {"trace", trace_json(trace)}, {"bound", bound_json(bound)}},
                         ctx));
        return kOk;
    }
    const Vertex base = c.label_base;
    ctx.out << "input: " << c.file << " (n = " << g.vertex_count() << ", m = " << g.arc_count()
            << ")\n";
    ctx.out << "minimal 2-edge-connected subgraph: " << trace.minimal_2ecss.size() << " arcs\n";
    if (trace.early_exit) {
        ctx.out << "already 2-edge strongly biconnected; no repair needed\n";
    } else {
        ctx.out << "biconnectivity additions: " << trace.phase1_added.size() << ' '
                << arc_list_text(g, trace.phase1_added, base) << '\n';
        ctx.out << "b-bridges: " << trace.bridge_count() << ' '
                << arc_list_text(g, trace.bbridges_found, base) << '\n';
        for (const auto& [bridge, added] : trace.per_bridge_added) {
            ctx.out << "  repair without " << arc_text(g, bridge, base) << ": +" << added.size()
                    << ' ' << arc_list_text(g, added, base) << '\n';
        }
    }
    ctx.out << "result: " << trace.result.size() << " arcs\n";
    print_bound(ctx.out, bound, trace.n);
    return kOk;
}

struct GenOptions {
    std::size_t n = 0;
    std::size_t extra = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_gen(const GenOptions& opt, bool json, const Context& ctx) {
    const Digraph g = testkit::generate({opt.n, opt.extra, opt.seed});
    const std::string text = write_edge_list(g);
    if (opt.out.empty() || opt.out == "-") {
        ctx.out << text;
        return kOk;
    }
    write_text_file(opt.out, text);
    if (json) {
        Common c;
        c.file = opt.out;
        emit(ctx, report("gen", c, &g, {{"n", opt.n}, {"extra", opt.extra}, {"out", opt.out}}, ctx,
                         opt.seed));
    } else {
        ctx.out << "wrote " << opt.out << " (n = " << g.vertex_count() << ", m = " << g.arc_count()
                << ")\n";
    }
    return kOk;
}

int cmd_bound(const Common& c, const Context& ctx) {
    std::ifstream in(c.file);
    if (!in) {
        throw ParseError(0, "cannot open '" + c.file + "'");
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    // Accept either a full `minimize --json` report or a bare trace object.
    const Json* trace_doc = &doc;
    if (doc.contains("result") && doc["result"].contains("trace")) {
        trace_doc = &doc["result"]["trace"];
    }
    ApproxTrace trace;
    try {
        trace = trace_from_json(*trace_doc);
    } catch (const Json::exception& e) {
        throw ParseError(0, std::string("not an approximation trace: ") + e.what());
    }
    const auto bound = bound_report(trace);
    if (c.json) {
        emit(ctx, report("bound", c, nullptr, bound_json(bound), ctx));
    } else {
        ctx.out << "size: " << bound.size << " (m = " << bound.m << ")\n";
        print_bound(ctx.out, bound, trace.n);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Approximate minimum 2-edge strongly biconnected spanning subgraphs", "esbss"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Common common;
    MinimizeOptions mopt;
    GenOptions gopt;

    auto add_common = [&](CLI::App* sub, const char* what) {
        sub->add_option("file", common.file, what)->required();
        sub->add_flag("--json", common.json, "Emit a JSON report");
        sub->add_option("--label-base", common.label_base,
                        "Offset added to vertex ids in text output (1 for 1-based labels)");
    };

    auto* check = app.add_subcommand("check", "Test 2-edge strong biconnectivity");
    add_common(check, "Edge-list file");
    auto* components = app.add_subcommand("components", "Print SCCs, blocks and SBCs");
    add_common(components, "Edge-list file");
    auto* bbridges = app.add_subcommand("bbridges", "List b-bridges of a strongly biconnected graph");
    add_common(bbridges, "Edge-list file");
    auto* minimize = app.add_subcommand("minimize", "Find a sparse 2-edge strongly biconnected subgraph");
    add_common(minimize, "Edge-list file");
    minimize->add_flag("--exact", mopt.exact, "Exhaustive exact search instead of the approximation");
    minimize->add_option("--budget", mopt.budget, "Maximum feasibility checks for --exact");
    minimize->add_option("--dot", mopt.dot, "Write the input as DOT with the chosen arcs highlighted");
    auto* gen = app.add_subcommand("gen", "Generate a random 2-edge strongly biconnected graph");
    gen->add_option("n", gopt.n, "Vertex count (>= 3)")->required();
    gen->add_option("extra", gopt.extra, "Random arcs beyond the bidirected cycle")->required();
    gen->add_option("seed", gopt.seed, "Generator seed")->required();
    gen->add_option("out", gopt.out, "Output file ('-' or omitted for stdout)");
    gen->add_flag("--json", common.json, "Emit a JSON report");
    auto* bound = app.add_subcommand("bound", "Recheck size bounds of a stored minimize --json trace");
    add_common(bound, "JSON trace file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    Context ctx{out, err};
    try {
        if (*check) return cmd_check(common, ctx);
        if (*components) return cmd_components(common, ctx);
        if (*bbridges) return cmd_bbridges(common, ctx);
        if (*minimize) return cmd_minimize(common, mopt, ctx);
        if (*gen) return cmd_gen(gopt, common.json, ctx);
        if (*bound) return cmd_bound(common, ctx);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    } catch (const InvariantError& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    }
    return kInputError;
}

}  // namespace esbss::cli
