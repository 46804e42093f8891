#pragma once

#include <string>

#include <json.hpp>

#include "flg/generators.hpp"
#include "flg/instance.hpp"
#include "flg/solver.hpp"
#include "flg/stability.hpp"
#include "flg/uniform.hpp"

namespace flg {

using Json = nlohmann::ordered_json;

/// Instance format:
/// {"nodes":[{"id":"v1","weight":"3"},...], "edges":[["v1","v2"],...],
///  "facilities":2, "directed":true}
/// Weights accept integers, decimals, or "p/q" strings; with
/// "directed":false every edge is expanded to both directions.
Instance load_instance(const std::string& text);
Instance load_instance_file(const std::string& path);
std::string save_instance(const Instance& inst);

/// Graph input for the reduction generators:
/// {"vertices":["a","b"], "edges":[["a","b"]]} with an optional third
/// entry per edge carrying the MaxCut weight.
SimpleGraph load_graph(const std::string& text, bool need_weights);
SimpleGraph load_graph_file(const std::string& path, bool need_weights);

/// Rationals render as "p/q" strings in exact mode; `decimal` switches to
/// shortest round-trip doubles.
Json report_json(const Instance& inst, const EquilibriumReport& rep, bool decimal);
Json stability_json(const Instance& inst, const StabilityReport& rep, bool decimal);
Json trace_step_json(const Instance& inst, const DynamicsStep& step);
Json is_mapping_json(const IsReduction& red);
Json maxcut_mapping_json(const MaxCutReduction& red);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace flg
