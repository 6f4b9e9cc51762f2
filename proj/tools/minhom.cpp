#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "minhom/classifier.hpp"
#include "minhom/diagnostics.hpp"
#include "minhom/gadgets.hpp"
#include "minhom/io.hpp"
#include "minhom/oracle.hpp"
#include "minhom/solver.hpp"

using nlohmann::json;
using namespace minhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNPHard = 2;
constexpr int kExitNotCovered = 3;
constexpr int kExitUnsat = 4;

std::string dir_of(const std::string& path) {
    auto parent = std::filesystem::path(path).parent_path();
    return parent.empty() ? std::string(".") : parent.string();
}

json witness_to_json(const HardnessWitness& w, int domain_size) {
    json out;
    out["verified"] = w.verified;
    if (!w.note.empty()) out["note"] = w.note;
    if (const auto* cp = std::get_if<CrossedPair>(&w.kind)) {
        out["kind"] = "crossed_pair";
        out["a"] = cp->a;
        out["b"] = cp->b;
        out["relation"] = witness_relation(*cp, domain_size).tuples;
    } else if (const auto* lw = std::get_if<LinWitness>(&w.kind)) {
        out["kind"] = "lin";
        out["a"] = lw->a;
        out["b"] = lw->b;
        out["relation"] = witness_relation(*lw, domain_size).tuples;
    } else {
        const auto& cyc = std::get<OddBoxCycle>(w.kind);
        out["kind"] = "odd_box_cycle";
        json pairs = json::array();
        for (auto [a, b] : cyc.pairs) pairs.push_back({a, b});
        out["pairs"] = pairs;
    }
    return out;
}

std::string witness_text(const HardnessWitness& w) {
    if (const auto* cp = std::get_if<CrossedPair>(&w.kind))
        return "crossed pair {" + std::to_string(cp->a) + "," + std::to_string(cp->b) + "}^2 \\ {(" +
               std::to_string(cp->b) + "," + std::to_string(cp->b) + ")}";
    if (const auto* lw = std::get_if<LinWitness>(&w.kind))
        return "parity relation on {" + std::to_string(lw->a) + "," + std::to_string(lw->b) + "}";
    const auto& cyc = std::get<OddBoxCycle>(w.kind);
    std::string s = "odd box cycle of length " + std::to_string(cyc.pairs.size()) + ":";
    for (auto [a, b] : cyc.pairs) s += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    return s;
}

int run_classify(const std::string& file, bool as_json) {
    ConstraintLanguage gamma = language_from_json(load_json_file(file));
    Verdict v = classify(gamma);
    if (as_json) {
        json out;
        out["verdict"] = v.tractable() ? "TRACTABLE" : "NP-HARD";
        if (v.tractable()) {
            const auto& tw = v.witness();
            json pairs = json::array();
            for (const auto& pc : tw.report.pairs)
                pairs.push_back({{"pair", {pc.pair.first, pc.pair.second}},
                                 {"side", pc.side == PairSide::InM ? "M" : "Mbar"}});
            out["pairs"] = pairs;
            json tf_edges = json::array();
            for (auto [i, j] : tw.tf.edges)
                tf_edges.push_back({{tw.tf.vertices[i].first, tw.tf.vertices[i].second},
                                    {tw.tf.vertices[j].first, tw.tf.vertices[j].second}});
            out["tf_edges"] = tf_edges;
            out["majority"] = operation_to_json(tw.majority);
            out["tournament_pair"] = {operation_to_json(tw.phi), operation_to_json(tw.psi)};
            if (tw.arithmetical) out["arithmetical"] = operation_to_json(*tw.arithmetical);
        } else {
            out["witness"] = witness_to_json(v.hardness(), gamma.domain_size);
        }
        std::cout << out.dump(2) << "\n";
    } else if (v.tractable()) {
        const auto& tw = v.witness();
        std::cout << "TRACTABLE\n";
        for (const auto& pc : tw.report.pairs)
            std::cout << "  pair {" << pc.pair.first << "," << pc.pair.second << "}: "
                      << (pc.side == PairSide::InM ? "M" : "Mbar") << "\n";
        std::cout << "  pair graph: " << tw.tf.vertices.size() << " vertices, "
                  << tw.tf.edges.size() << " edges, bipartite\n";
        std::cout << "  majority table:";
        for (int t : tw.majority.table) std::cout << " " << t;
        std::cout << "\n";
    } else {
        std::cout << "NP-HARD\n  witness: " << witness_text(v.hardness())
                  << (v.hardness().verified ? " (validated)" : " (unverified at scale)") << "\n";
    }
    return v.tractable() ? kExitOk : kExitNPHard;
}

int run_solve(const std::string& file, bool as_json, bool oracle_check, bool lp_check,
              bool trace_flag) {
    ParsedInstance pi = instance_from_json(load_json_file(file), dir_of(file));
    Verdict v = classify(pi.language);
    std::vector<std::string> trace;
    SolveResult r = solve_with_verdict(v, pi.instance, trace_flag ? &trace : nullptr);
    json out;
    int code = kExitOk;
    switch (r.kind) {
        case SolveResult::Kind::Optimal: {
            out["status"] = "OPTIMAL";
            out["measure"] = r.measure;
            out["assignment"] = r.assignment.values;
            if (oracle_check) {
                OracleResult o = brute_force_solve(pi.instance);
                bool ok = o.satisfiable && o.optimum == r.measure;
                out["oracle_match"] = ok;
                if (!ok) {
                    std::cerr << "oracle mismatch\n";
                    code = kExitError;
                }
            }
            if (lp_check) {
                AbsorbResult ab = absorb_unary_constraints(pi.instance);
                BinaryInstance bi = binarize(ab.instance, v.witness().majority);
                if (enforce_consistency(bi) == ConsistencyStatus::Consistent) {
                    LPCheck lc = solve_mmclique_lp(build_microstructure(bi));
                    out["lp_value"] = lc.lp_value;
                    out["lp_exact"] = lc.exact_value;
                    out["lp_integral"] = lc.integral;
                }
            }
            break;
        }
        case SolveResult::Kind::Unsatisfiable:
            out["status"] = "UNSAT";
            code = kExitUnsat;
            if (oracle_check) {
                OracleResult o = brute_force_solve(pi.instance);
                out["oracle_match"] = !o.satisfiable;
                if (o.satisfiable) {
                    std::cerr << "oracle mismatch\n";
                    code = kExitError;
                }
            }
            break;
        case SolveResult::Kind::NotCovered:
            out["status"] = "NOT-COVERED";
            out["witness"] = witness_to_json(*r.witness, pi.language.domain_size);
            code = kExitNotCovered;
            break;
    }
    if (trace_flag) out["consistency_trace"] = trace;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << out["status"].get<std::string>();
        if (r.kind == SolveResult::Kind::Optimal) {
            std::cout << " measure=" << r.measure << " assignment=[";
            for (std::size_t i = 0; i < r.assignment.values.size(); ++i)
                std::cout << (i ? "," : "") << r.assignment.values[i];
            std::cout << "]";
        }
        if (r.kind == SolveResult::Kind::NotCovered)
            std::cout << " (" << witness_text(*r.witness) << ")";
        std::cout << "\n";
        if (trace_flag)
            for (const auto& line : trace) std::cout << "  " << line << "\n";
    }
    return code;
}

int run_gadget(const std::string& kind, const std::string& file, int d,
               const std::string& out_file) {
    json input = load_json_file(file);
    json out;
    if (kind == "maxcut") {
        UndirectedGraph g = graph_from_json(input);
        WeightedInstance inst = gadget_maxcut(g);
        ConstraintLanguage lang(2);
        if (!inst.constraints.empty()) lang.add("lin_odd", inst.constraints[0].relation);
        out = instance_to_json(lang, inst);
    } else if (kind == "subdivide") {
        TripartiteGraph g = tripartite_from_json(input);
        SubdivideResult r = gadget_subdivide(g, d);
        out = graph_to_json(r.graph);
        out["cycle_class"] = r.cycle_class;
    } else if (kind == "indepset") {
        UndirectedGraph g = graph_from_json(input);
        if (!input.contains("parts")) throw std::runtime_error("indepset needs 'parts'");
        std::vector<int> partition = input["parts"].get<std::vector<int>>();
        int m = 0;
        for (int p : partition) m = std::max(m, p + 1);
        if (m % 2 == 0) ++m;
        if (m < 3) m = 3;
        std::vector<std::pair<int, int>> cycle;
        for (int i = 0; i < m; ++i) cycle.push_back({2 * i, 2 * i + 1});
        WeightedInstance inst = gadget_independent_set(g, partition, cycle);
        ConstraintLanguage lang(inst.domain_size);
        for (const auto& c : inst.constraints)
            if (!lang.find(c.relation_name)) lang.add(c.relation_name, c.relation);
        out = instance_to_json(lang, inst);
    } else {
        throw std::runtime_error("unknown gadget kind: " + kind);
    }
    if (out_file.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream f(out_file);
        f << out.dump(2) << "\n";
    }
    return kExitOk;
}

int run_diagnose(const std::string& file, bool as_json) {
    ParsedInstance pi = instance_from_json(load_json_file(file), dir_of(file));
    Verdict v = classify(pi.language);
    json out;
    if (!v.tractable()) {
        out["verdict"] = "NP-HARD";
        std::cout << (as_json ? out.dump(2) : std::string("NP-HARD language")) << "\n";
        return kExitNPHard;
    }
    AbsorbResult ab = absorb_unary_constraints(pi.instance);
    BinaryInstance bi = binarize(ab.instance, v.witness().majority);
    ConsistencyStatus cs = enforce_consistency(bi);
    out["consistency"] = cs == ConsistencyStatus::Consistent ? "consistent" : "empty";
    if (cs == ConsistencyStatus::Consistent) {
        MicrostructureGraph g = build_microstructure(bi);
        out["microstructure"] = {{"vertices", g.num_vertices()}, {"parts", g.num_parts}};
        SimpleGraph sg = microstructure_to_graph(g);
        auto hole = find_odd_hole_or_antihole(sg, 9);
        out["odd_hole_or_antihole"] = hole.has_value();
        if (hole) out["hole_vertices"] = hole->vertices;
        json stypes = json::object();
        for (int p = 2; p <= 3; ++p) {
            auto s = find_S_type_subgraph(sg, p);
            stypes[std::to_string(2 * p + 1)] = s.has_value();
        }
        out["s_type_found"] = stypes;
        std::vector<std::pair<int, int>> mbar;
        for (const auto& pc : v.witness().report.pairs)
            if (pc.side == PairSide::InMbar) mbar.push_back(pc.pair);
        auto dl = find_arithmetical_deadlock(bi, mbar);
        out["deadlock"] = dl.has_value();
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "consistency: " << out["consistency"].get<std::string>() << "\n";
        if (cs == ConsistencyStatus::Consistent) {
            std::cout << "microstructure: " << out["microstructure"]["vertices"] << " vertices\n";
            std::cout << (out["odd_hole_or_antihole"].get<bool>()
                              ? "odd hole/antihole found (size <= 9)"
                              : "no odd hole/antihole of size <= 9")
                      << "\n";
            std::cout << (out["deadlock"].get<bool>() ? "deadlock found" : "no deadlock") << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-cost homomorphism toolkit: classification, solving, "
                 "gadget generation and structural diagnostics"};
    app.require_subcommand(1);

    std::string file, out_file, gadget_kind;
    bool as_json = false, oracle_check = false, lp_check = false, trace_flag = false;
    int d = 5;
    unsigned int seed = 0;

    auto* c_classify = app.add_subcommand("classify", "classify a language file");
    c_classify->add_option("file", file)->required();
    c_classify->add_flag("--json", as_json);

    auto* c_solve = app.add_subcommand("solve", "solve an instance file");
    c_solve->add_option("file", file)->required();
    c_solve->add_flag("--json", as_json);
    c_solve->add_flag("--oracle-check", oracle_check);
    c_solve->add_flag("--lp-check", lp_check);
    c_solve->add_flag("--trace-consistency", trace_flag);

    auto* c_gadget = app.add_subcommand("gadget", "emit a gadget instance/graph");
    c_gadget->add_option("kind", gadget_kind, "indepset|subdivide|maxcut")->required();
    c_gadget->add_option("file", file)->required();
    c_gadget->add_option("-d", d, "cycle length for subdivide");
    c_gadget->add_option("-o,--output", out_file);

    auto* c_diag = app.add_subcommand("diagnose", "structural diagnostics on an instance");
    c_diag->add_option("file", file)->required();
    c_diag->add_flag("--json", as_json);

    app.add_option("--seed", seed, "seed echoed for reproducibility bookkeeping");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) return run_classify(file, as_json);
        if (c_solve->parsed()) return run_solve(file, as_json, oracle_check, lp_check, trace_flag);
        if (c_gadget->parsed()) return run_gadget(gadget_kind, file, d, out_file);
        if (c_diag->parsed()) return run_diagnose(file, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
