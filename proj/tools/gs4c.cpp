// gs4c: command-line front end for the GS4 library. Subcommands check,
// transform and normalize derivations, render their axiom graphs, work with
// graph-based proof objects, reproduce the built-in worked examples, and run
// the cut-reduction experiment.
//
// Exit codes: 0 success, 1 semantic failure (structured diagnostic on
// stderr), 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gs4/blg.hpp"
#include "gs4/figures.hpp"
#include "gs4/normalize.hpp"

using namespace gs4;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FileNotFound", {}, path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DerivPtr load_derivation(const std::string& path) {
    DerivPtr p = parse_derivation(slurp(path));
    validate(p);
    return p;
}

std::string edge_word(const Edge& e) {
    return name_text(e.first) + name_text(e.second);
}

std::string edge_list(const std::set<Edge>& es) {
    std::string out;
    for (const Edge& e : es) {
        if (!out.empty()) out += " ";
        out += edge_word(e);
    }
    return out;
}

void require_edges(const std::string& what, const std::set<Edge>& got,
                   const std::set<Edge>& want) {
    if (got != want)
        throw Error("ReproMismatch", {},
                    what + ": got {" + edge_list(got) + "} want {" + edge_list(want) +
                        "}");
}

Edge ew(const char* a, const char* b) {
    return mk_edge(name_from_text(a), name_from_text(b));
}

int run_repro(const std::string& which) {
    if (which == "fig2") {
        DerivPtr p = figures::cut_over_conjunction();
        NameGraph before = axiom_graph(p);
        NameGraph after = axiom_graph(isolate(p, figures::cut_over_conjunction_target()));
        std::cout << edge_list(before.edges) << "\n" << edge_list(after.edges) << "\n";
        require_edges("before", before.edges,
                      {ew("x", "y"), ew("y", "z"), ew("z", "w"), ew("x", "w")});
        require_edges("after", after.edges, {ew("x", "y"), ew("z", "w")});
        return 0;
    }
    if (which == "fig3") {
        DerivPtr p = figures::cut_on_conjunction();
        NameGraph before = axiom_graph(p);
        NameGraph after = axiom_graph(isolate(p, figures::cut_on_conjunction_target()));
        std::cout << edge_list(before.edges) << "\n" << edge_list(after.edges) << "\n";
        require_edges("before", before.edges,
                      {ew("x", "t"), ew("y", "t"), ew("z", "u")});
        require_edges("after", after.edges, {ew("x", "t"), ew("z", "u")});
        return 0;
    }
    if (which == "fig4") {
        DerivPtr p = figures::reduction_counterexample();
        DerivPtr red = reduce_cut_logical(p, ReductSide::Left);
        BlGraph before = bl_axiom_graph(p), after = bl_axiom_graph(red);
        std::cout << edge_list(edges(before)) << "\n" << edge_list(edges(after)) << "\n";
        require_edges("labeled before", edges(before), {ew("x", "y"), ew("v", "w")});
        require_edges("labeled after", edges(after), {ew("x", "y")});
        require_edges("unlabeled after", axiom_graph(red).edges, axiom_graph(p).edges);
        return 0;
    }
    if (which == "fig5") {
        for (const BlgProof& b :
             {figures::small_total_object(), figures::mixed_total_object()}) {
            std::cout << blgraph_to_fig5(b.graph, b.sequent);
            TotalityReport rep = check_totality_poly(b.graph, b.sequent);
            if (!rep.ok)
                throw Error("ReproMismatch", {},
                            "object not total: " + rep.code + " " + rep.detail);
        }
        return 0;
    }
    throw Error("UnknownFigure", {}, which);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GS4 named sequent calculus toolkit"};
    app.require_subcommand(1);

    std::string deriv_file, blg_file, target_text, side = "left";
    std::string semantics = "simple", format = "json", figure;
    bool no_verify = false, oracle = false;
    std::uint64_t n_seeds = 0;

    CLI::App* c_check = app.add_subcommand("check", "validate a derivation file");
    c_check->add_option("file", deriv_file)->required();

    CLI::App* c_invert = app.add_subcommand(
        "invert", "invert one rule application on a compound member");
    c_invert->add_option("file", deriv_file)->required();
    c_invert->add_option("--target", target_text, "the compound member")->required();
    c_invert->add_option("--side", side, "conjunct kept when inverting a conjunction")
        ->check(CLI::IsMember({"left", "right"}));

    CLI::App* c_isolate =
        app.add_subcommand("isolate", "re-derive with the target introduced last");
    c_isolate->add_option("file", deriv_file)->required();
    c_isolate->add_option("--target", target_text, "the compound member")->required();

    CLI::App* c_graph = app.add_subcommand("graph", "axiom graph of a derivation");
    c_graph->add_option("file", deriv_file)->required();
    c_graph->add_option("--semantics", semantics)
        ->check(CLI::IsMember({"simple", "bl"}));
    c_graph->add_option("--format", format)
        ->check(CLI::IsMember({"json", "dot", "fig5"}));

    CLI::App* c_norm =
        app.add_subcommand("normalize", "graph-preserving cut elimination");
    c_norm->add_option("file", deriv_file)->required();
    c_norm->add_flag("--no-verify", no_verify, "skip the graph-equality check");

    CLI::App* c_blg = app.add_subcommand("blg", "graph-based proof objects");
    c_blg->require_subcommand(1);
    CLI::App* c_blg_check = c_blg->add_subcommand("check", "polynomial totality check");
    c_blg_check->add_option("file", blg_file)->required();
    c_blg_check->add_flag("--oracle", oracle, "cross-check the naive oracle");
    CLI::App* c_blg_from =
        c_blg->add_subcommand("from-deriv", "extract the proof object");
    c_blg_from->add_option("file", deriv_file)->required();
    CLI::App* c_blg_seq =
        c_blg->add_subcommand("sequentialize", "rebuild a cut-free derivation");
    c_blg_seq->add_option("file", blg_file)->required();

    CLI::App* c_repro = app.add_subcommand("repro", "reproduce a worked example");
    c_repro->add_option("figure", figure)
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));

    CLI::App* c_exp = app.add_subcommand("experiment", "randomized experiments");
    c_exp->require_subcommand(1);
    CLI::App* c_pul =
        c_exp->add_subcommand("pulcini", "cut-reduction graph-preservation report");
    c_pul->add_option("--seeds", n_seeds, "number of seeds")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_check) {
            DerivPtr p = load_derivation(deriv_file);
            std::cout << "ok " << print_sequent(conclusion(p)) << "\n";
            return 0;
        }
        if (*c_invert) {
            DerivPtr p = load_derivation(deriv_file);
            FormulaPtr target = parse_formula(target_text);
            DerivPtr q = target->kind == Formula::Kind::And
                             ? (side == "left" ? inv_and_l(p, target)
                                               : inv_and_r(p, target))
                             : inv_or(p, target);
            std::cout << print_derivation(q) << "\n";
            return 0;
        }
        if (*c_isolate) {
            DerivPtr p = load_derivation(deriv_file);
            std::cout << print_derivation(isolate(p, parse_formula(target_text)))
                      << "\n";
            return 0;
        }
        if (*c_graph) {
            DerivPtr p = load_derivation(deriv_file);
            Sequent conc = conclusion(p);
            if (semantics == "simple") {
                if (format == "fig5")
                    throw CLI::ValidationError(
                        "--format fig5 requires --semantics bl");
                NameGraph g = axiom_graph(p);
                std::cout << (format == "json" ? graph_to_json(g)
                                               : graph_to_dot(g, &conc));
            } else {
                BlGraph g = bl_axiom_graph(p);
                if (format == "json")
                    std::cout << blgraph_to_json(g);
                else if (format == "dot")
                    std::cout << blgraph_to_dot(g, &conc);
                else
                    std::cout << blgraph_to_fig5(g, conc);
            }
            std::cout << "\n";
            return 0;
        }
        if (*c_norm) {
            DerivPtr p = load_derivation(deriv_file);
            DerivPtr q = normalize(p);
            if (!no_verify && !(bl_axiom_graph(q) == bl_axiom_graph(p)))
                throw Error("VerifyFailed", {},
                            "normalization changed the labeled axiom graph");
            std::cout << print_derivation(q) << "\n";
            return 0;
        }
        if (*c_blg_check) {
            BlgProof b = blg_from_json(slurp(blg_file));
            TotalityReport rep = check_totality_poly(b.graph, b.sequent);
            if (oracle && rep.ok != is_total(b.graph, b.sequent))
                throw Error("OracleDisagreement", {}, rep.code);
            if (!rep.ok) throw Error(rep.code, {}, rep.detail);
            std::cout << "total " << print_sequent(b.sequent) << " steps="
                      << rep.steps << "\n";
            return 0;
        }
        if (*c_blg_from) {
            DerivPtr p = load_derivation(deriv_file);
            std::cout << blg_to_json(blg_from_derivation(p)) << "\n";
            return 0;
        }
        if (*c_blg_seq) {
            BlgProof b = blg_from_json(slurp(blg_file));
            std::cout << print_derivation(sequentialize(b)) << "\n";
            return 0;
        }
        if (*c_repro) return run_repro(figure);
        if (*c_pul) {
            std::cout << "seed,eligible,preserved_logical_left,"
                         "preserved_logical_right,preserved_superposed\n";
            for (const PulciniRow& r : pulcini_experiment(n_seeds))
                std::cout << r.seed << ',' << r.eligible << ','
                          << r.preserved_logical_left << ','
                          << r.preserved_logical_right << ','
                          << r.preserved_superposed << '\n';
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.diagnostic() << "\n";
        return 1;
    }
    return 2;
}
