#include "minhom/io.hpp"

#include <fstream>
#include <stdexcept>

namespace minhom {

using nlohmann::json;

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
    return j;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("schema error: " + msg); }

int require_int(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer()) fail("missing integer field '" + key + "'");
    return j[key].get<int>();
}

}  // namespace

ConstraintLanguage language_from_json(const json& j) {
    int d = require_int(j, "domain_size");
    if (d < 1) fail("domain_size must be positive");
    ConstraintLanguage gamma(d);
    if (!j.contains("relations") || !j["relations"].is_object()) fail("missing 'relations' object");
    for (const auto& [name, rj] : j["relations"].items()) {
        int arity = require_int(rj, "arity");
        if (!rj.contains("tuples") || !rj["tuples"].is_array()) fail("relation '" + name + "' missing tuples");
        std::vector<Tuple> tuples;
        for (const auto& tj : rj["tuples"]) {
            if (!tj.is_array() || static_cast<int>(tj.size()) != arity)
                fail("tuple arity mismatch in relation '" + name + "'");
            Tuple t;
            for (const auto& e : tj) {
                if (!e.is_number_integer()) fail("non-integer tuple entry in '" + name + "'");
                int v = e.get<int>();
                if (v < 0 || v >= d) fail("tuple entry out of domain in '" + name + "'");
                t.push_back(v);
            }
            tuples.push_back(std::move(t));
        }
        gamma.add(name, Relation(arity, d, std::move(tuples)));
    }
    return gamma;
}

json language_to_json(const ConstraintLanguage& gamma) {
    json rels = json::object();
    for (const auto& [name, r] : gamma.relations)
        rels[name] = {{"arity", r.arity}, {"tuples", r.tuples}};
    return {{"domain_size", gamma.domain_size}, {"relations", rels}};
}

ParsedInstance instance_from_json(const json& j, const std::string& base_dir) {
    ParsedInstance out;
    if (j.contains("language")) {
        out.language = language_from_json(j["language"]);
    } else if (j.contains("language_ref") && j["language_ref"].is_string()) {
        std::string ref = j["language_ref"].get<std::string>();
        std::string path = (!ref.empty() && ref[0] == '/') ? ref : base_dir + "/" + ref;
        out.language = language_from_json(load_json_file(path));
    } else {
        fail("instance needs 'language' or 'language_ref'");
    }
    out.instance.domain_size = out.language.domain_size;
    out.instance.num_vars = require_int(j, "num_vars");
    if (out.instance.num_vars < 0) fail("num_vars must be nonnegative");
    if (!j.contains("weights") || !j["weights"].is_array()) fail("missing 'weights'");
    for (const auto& row : j["weights"]) {
        std::vector<long long> w;
        for (const auto& e : row) {
            if (!e.is_number_integer()) fail("non-integer weight");
            long long v = e.get<long long>();
            if (v < 0) fail("negative weight");
            w.push_back(v);
        }
        out.instance.weights.push_back(std::move(w));
    }
    if (j.contains("constraints")) {
        if (!j["constraints"].is_array()) fail("'constraints' must be an array");
        for (const auto& cj : j["constraints"]) {
            Constraint c;
            if (!cj.contains("relation") || !cj["relation"].is_string()) fail("constraint missing 'relation'");
            c.relation_name = cj["relation"].get<std::string>();
            const Relation* rho = out.language.find(c.relation_name);
            if (!rho) fail("constraint names unknown relation '" + c.relation_name + "'");
            c.relation = *rho;
            if (!cj.contains("scope") || !cj["scope"].is_array()) fail("constraint missing 'scope'");
            for (const auto& e : cj["scope"]) {
                if (!e.is_number_integer()) fail("non-integer scope entry");
                c.scope.push_back(e.get<int>());
            }
            out.instance.constraints.push_back(std::move(c));
        }
    }
    out.instance.validate();
    return out;
}

json instance_to_json(const ConstraintLanguage& gamma, const WeightedInstance& inst) {
    json cons = json::array();
    for (const auto& c : inst.constraints)
        cons.push_back({{"relation", c.relation_name}, {"scope", c.scope}});
    return {{"language", language_to_json(gamma)},
            {"num_vars", inst.num_vars},
            {"constraints", cons},
            {"weights", inst.weights}};
}

UndirectedGraph graph_from_json(const json& j) {
    UndirectedGraph g;
    g.num_vertices = require_int(j, "num_vertices");
    if (j.contains("edges")) {
        for (const auto& ej : j["edges"]) {
            if (!ej.is_array() || ej.size() != 2) fail("edge must be a pair");
            g.edges.push_back({ej[0].get<int>(), ej[1].get<int>()});
        }
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return g;
}

json graph_to_json(const UndirectedGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return {{"num_vertices", g.num_vertices}, {"edges", edges}};
}

TripartiteGraph tripartite_from_json(const json& j) {
    UndirectedGraph g = graph_from_json(j);
    if (!j.contains("parts") || !j["parts"].is_array()) fail("tripartite graph needs 'parts'");
    TripartiteGraph t;
    for (const auto& e : j["parts"]) t.part.push_back(e.get<int>());
    if (static_cast<int>(t.part.size()) != g.num_vertices) fail("'parts' size mismatch");
    t.edges = g.edges;
    try {
        t.validate();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return t;
}

std::map<std::string, PPFormula> pp_definitions_from_json(const json& j) {
    std::map<std::string, PPFormula> out;
    if (!j.is_object()) fail("pp definitions must be an object");
    for (const auto& [name, fj] : j.items()) {
        PPFormula f;
        f.arity = require_int(fj, "arity");
        f.num_existential = require_int(fj, "exists");
        if (!fj.contains("atoms") || !fj["atoms"].is_array()) fail("pp definition missing 'atoms'");
        for (const auto& aj : fj["atoms"]) {
            PPFormula::Atom atom;
            if (!aj.contains("relation") || !aj["relation"].is_string()) fail("atom missing 'relation'");
            atom.relation = aj["relation"].get<std::string>();
            for (const auto& e : aj["args"]) atom.args.push_back(e.get<int>());
            f.atoms.push_back(std::move(atom));
        }
        out[name] = std::move(f);
    }
    return out;
}

json operation_to_json(const OperationTable& f) {
    return {{"arity", f.arity}, {"domain_size", f.domain_size}, {"table", f.table}};
}

}  // namespace minhom
