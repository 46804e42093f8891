#include "flg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "flg/errors.hpp"

namespace flg {

namespace {

Rational weight_from_json(const Json& value, const std::string& node_id) {
    try {
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_integer()) return Rational(static_cast<long>(value.get<long long>()));
        // Non-integral numbers go through their shortest decimal rendering,
        // so a literal like 0.1 parses as 1/10.
        if (value.is_number()) return parse_rational(value.dump());
    } catch (const InputError&) {
    }
    throw InputError("invalid weight " + value.dump() + " on node '" + node_id + "'");
}

Json rational_json(const Rational& value, bool decimal) {
    if (decimal) return to_double(value);
    return rational_str(value);
}

}  // namespace

Instance load_instance(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("malformed JSON: top level must be an object");
    if (!doc.contains("nodes") || !doc["nodes"].is_array() || doc["nodes"].empty())
        throw InputError("no nodes");

    std::vector<Instance::Node> nodes;
    std::unordered_map<std::string, int> index;
    for (const auto& node : doc["nodes"]) {
        if (!node.is_object() || !node.contains("id") || !node["id"].is_string() ||
            !node.contains("weight"))
            throw InputError("malformed node entry " + node.dump());
        const std::string id = node["id"].get<std::string>();
        index.emplace(id, static_cast<int>(nodes.size()));
        nodes.push_back({id, weight_from_json(node["weight"], id)});
    }

    bool directed = true;
    if (doc.contains("directed")) {
        if (!doc["directed"].is_boolean()) throw InputError("'directed' must be a boolean");
        directed = doc["directed"].get<bool>();
    }

    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InputError("'edges' must be an array");
        for (const auto& edge : doc["edges"]) {
            if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() ||
                !edge[1].is_string())
                throw InputError("malformed edge entry " + edge.dump());
            const auto resolve = [&](const std::string& id) {
                auto it = index.find(id);
                if (it == index.end())
                    throw InputError("edge endpoint '" + id + "' is not a declared node");
                return it->second;
            };
            const int u = resolve(edge[0].get<std::string>());
            const int v = resolve(edge[1].get<std::string>());
            edges.push_back({u, v});
            if (!directed) edges.push_back({v, u});
        }
    }

    if (!doc.contains("facilities") || !doc["facilities"].is_number_integer())
        throw InputError("'facilities' must be an integer");
    const long long k = doc["facilities"].get<long long>();
    if (k < 1) throw InputError("facility count must be at least 1");

    return Instance(std::move(nodes), edges, static_cast<int>(k));
}

Instance load_instance_file(const std::string& path) { return load_instance(read_file(path)); }

std::string save_instance(const Instance& inst) {
    Json doc;
    doc["nodes"] = Json::array();
    for (int i = 0; i < inst.node_count(); ++i)
        doc["nodes"].push_back({{"id", inst.id(i)}, {"weight", rational_str(inst.weight(i))}});
    doc["edges"] = Json::array();
    for (const auto& [u, v] : inst.edges()) doc["edges"].push_back({inst.id(u), inst.id(v)});
    doc["facilities"] = inst.facility_count();
    doc["directed"] = true;
    return doc.dump(2) + "\n";
}

SimpleGraph load_graph(const std::string& text, bool need_weights) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw InputError("graph file needs a 'vertices' array");
    SimpleGraph g;
    std::unordered_map<std::string, int> index;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw InputError("vertex names must be strings");
        index.emplace(v.get<std::string>(), static_cast<int>(g.vertices.size()));
        g.vertices.push_back(v.get<std::string>());
    }
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InputError("'edges' must be an array");
        for (const auto& edge : doc["edges"]) {
            if (!edge.is_array() || edge.size() < 2 || !edge[0].is_string() || !edge[1].is_string())
                throw InputError("malformed edge entry " + edge.dump());
            const auto resolve = [&](const std::string& id) {
                auto it = index.find(id);
                if (it == index.end()) throw InputError("unknown vertex '" + id + "'");
                return it->second;
            };
            g.edges.emplace_back(resolve(edge[0].get<std::string>()),
                                 resolve(edge[1].get<std::string>()));
            if (edge.size() > 2)
                g.edge_weights.push_back(edge[2].is_string()
                                             ? parse_rational(edge[2].get<std::string>())
                                             : weight_from_json(edge[2], edge[0].get<std::string>()));
            else if (need_weights)
                g.edge_weights.push_back(Rational(1));
        }
    }
    return g;
}

SimpleGraph load_graph_file(const std::string& path, bool need_weights) {
    return load_graph(read_file(path), need_weights);
}

Json report_json(const Instance& inst, const EquilibriumReport& rep, bool decimal) {
    const bool exact_render = rep.method == Method::Exact && !decimal;
    Json doc;
    doc["method"] = rep.method == Method::Exact ? "exact" : "iterative";
    doc["loads"] = Json::object();
    for (std::size_t j = 0; j < rep.loads.size(); ++j)
        doc["loads"][std::to_string(j)] = rational_json(rep.loads[j], !exact_render);
    doc["sigma"] = Json::array();
    for (int i = 0; i < inst.node_count(); ++i)
        for (std::size_t t = 0; t < rep.sigma.facilities[i].size(); ++t)
            doc["sigma"].push_back({inst.id(i), rep.sigma.facilities[i][t],
                                    rational_json(rep.sigma.weights[i][t], !exact_render)});
    doc["lambda"] = Json::object();
    for (int i = 0; i < inst.node_count(); ++i)
        if (rep.has_lambda[i]) doc["lambda"][inst.id(i)] = rational_json(rep.lambda[i], !exact_render);
    doc["residual"] = rep.residual;
    doc["iterations"] = rep.iterations;
    return doc;
}

Json stability_json(const Instance& inst, const StabilityReport& rep, bool decimal) {
    const bool exact_render = rep.method == Method::Exact && !decimal;
    Json doc;
    doc["placement"] = placement_ids(inst, rep.placement);
    doc["alpha"] = rational_json(rep.alpha, !exact_render);
    doc["method"] = rep.method == Method::Exact ? "exact" : "iterative";
    switch (rep.verdict) {
        case Verdict::Stable:
            doc["verdict"] = rep.alpha == 1 ? "spe" : "alpha-spe";
            break;
        case Verdict::NotStable:
            doc["verdict"] = rep.alpha == 1 ? "not-spe" : "not-alpha-spe";
            break;
        case Verdict::Inconclusive:
            doc["verdict"] = "inconclusive";
            break;
    }
    doc["loads"] = Json::object();
    for (std::size_t j = 0; j < rep.loads.size(); ++j)
        doc["loads"][std::to_string(j)] = rational_json(rep.loads[j], !exact_render);
    doc["per_facility"] = Json::array();
    for (const auto& row : rep.rows) {
        Json entry;
        entry["facility"] = row.facility;
        entry["location"] = inst.id(rep.placement[row.facility]);
        entry["payoff"] = rational_json(row.current_payoff, !exact_render);
        entry["best_target"] = row.best_target < 0 ? Json() : Json(inst.id(row.best_target));
        entry["best_payoff"] = rational_json(row.best_payoff, !exact_render);
        entry["gain_ratio"] = row.ratio_unbounded ? Json() : Json(row.gain_ratio);
        entry["deviations"] = Json::array();
        for (const auto& dev : row.deviations)
            entry["deviations"].push_back(
                {inst.id(dev.target), rational_json(dev.payoff, !exact_render)});
        doc["per_facility"].push_back(std::move(entry));
    }
    return doc;
}

Json trace_step_json(const Instance& inst, const DynamicsStep& step) {
    Json doc;
    doc["facility"] = step.facility;
    doc["from"] = inst.id(step.from);
    doc["to"] = inst.id(step.to);
    doc["old_payoff"] = rational_str(step.old_payoff);
    doc["new_payoff"] = rational_str(step.new_payoff);
    doc["potential_before"] = rational_str(step.potential_before);
    doc["potential_after"] = rational_str(step.potential_after);
    return doc;
}

Json is_mapping_json(const IsReduction& red) {
    Json doc;
    doc["vertices"] = Json::object();
    for (int node : red.original_nodes)
        doc["vertices"][red.instance.id(node)] = red.instance.id(node);
    doc["gstar_copies"] = Json::array();
    for (const auto& copy : red.gstar_copies) {
        Json ids = Json::array();
        for (int node : copy) ids.push_back(red.instance.id(node));
        doc["gstar_copies"].push_back(std::move(ids));
    }
    doc["facilities"] = red.instance.facility_count();
    return doc;
}

Json maxcut_mapping_json(const MaxCutReduction& red) {
    Json doc;
    doc["left"] = Json::object();
    doc["right"] = Json::object();
    for (std::size_t v = 0; v < red.vertices.size(); ++v) {
        doc["left"][red.vertices[v]] = red.instance.id(red.left_right[v][0]);
        doc["right"][red.vertices[v]] = red.instance.id(red.left_right[v][1]);
    }
    doc["edges"] = Json::array();
    for (const auto& [u, v, w] : red.edges)
        doc["edges"].push_back({red.vertices[u], red.vertices[v], rational_str(w)});
    doc["M"] = rational_str(red.big_weight);
    return doc;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << contents;
    if (!out.good()) throw InputError("write failed for '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace flg
