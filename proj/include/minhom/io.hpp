#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "minhom/gadgets.hpp"
#include "minhom/relation.hpp"
#include "minhom/solver.hpp"

// JSON file formats:
//   language: {"domain_size": d, "relations": {name: {"arity": k, "tuples": [[..]]}}}
//   instance: {"language": {...} | "language_ref": "path", "num_vars": n,
//              "constraints": [{"relation": name, "scope": [..]}],
//              "weights": [[..], ...]}
//   graph:    {"num_vertices": n, "edges": [[u,v],...], optional "parts": [..]}
//   pp definitions: {name: {"arity": k, "exists": e,
//                           "atoms": [{"relation": name|"=", "args": [..]}]}}

namespace minhom {

ConstraintLanguage language_from_json(const nlohmann::json& j);
nlohmann::json language_to_json(const ConstraintLanguage& gamma);

struct ParsedInstance {
    ConstraintLanguage language;
    WeightedInstance instance;
};
// base_dir resolves a relative "language_ref" path.
ParsedInstance instance_from_json(const nlohmann::json& j, const std::string& base_dir = ".");
nlohmann::json instance_to_json(const ConstraintLanguage& gamma, const WeightedInstance& inst);

UndirectedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const UndirectedGraph& g);
TripartiteGraph tripartite_from_json(const nlohmann::json& j);

std::map<std::string, PPFormula> pp_definitions_from_json(const nlohmann::json& j);

nlohmann::json operation_to_json(const OperationTable& f);

nlohmann::json load_json_file(const std::string& path);

}  // namespace minhom
