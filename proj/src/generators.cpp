#include "flg/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "flg/errors.hpp"

namespace flg {

namespace {

using Node = Instance::Node;

void validate_graph(const SimpleGraph& g, bool need_weights, int max_degree) {
    std::set<std::string> seen;
    for (const auto& v : g.vertices)
        if (!seen.insert(v).second) throw InputError("duplicate vertex '" + v + "'");
    if (need_weights && g.edge_weights.size() != g.edges.size())
        throw InputError("every edge needs a weight");
    std::vector<int> degree(g.vertices.size(), 0);
    std::set<std::pair<int, int>> edge_set;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        if (u < 0 || v < 0 || u >= static_cast<int>(g.vertices.size()) ||
            v >= static_cast<int>(g.vertices.size()))
            throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop on vertex '" + g.vertices[u] + "'");
        if (!edge_set.insert({std::min(u, v), std::max(u, v)}).second)
            throw InputError("duplicate edge");
        ++degree[u];
        ++degree[v];
        if (need_weights && g.edge_weights[e] <= 0)
            throw InputError("edge weights must be positive");
    }
    if (max_degree > 0)
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (degree[v] > max_degree) {
                std::ostringstream msg;
                msg << "vertex '" << g.vertices[v] << "' has degree " << degree[v] << " > "
                    << max_degree;
                throw InputError(msg.str());
            }
}

}  // namespace

Instance gen_gstar() {
    std::vector<Node> nodes = {{"v1", 3}, {"v2", 2}, {"v3", 7}, {"v4", 1}};
    return Instance(std::move(nodes), {{0, 1}, {1, 2}, {2, 3}}, 2);
}

Instance gen_fig1(bool left) {
    if (left) {
        std::vector<Node> nodes = {{"v0", 0}, {"v1", 2}, {"v2", 0}, {"v3", 2}};
        return Instance(std::move(nodes), {{1, 0}, {1, 2}, {3, 2}}, 2);
    }
    std::vector<Node> nodes = {{"v0", 0}, {"v1", 1}, {"v2", 1}, {"v3", 0}, {"v4", 2}};
    return Instance(std::move(nodes), {{1, 0}, {1, 3}, {2, 0}, {2, 3}, {4, 3}}, 2);
}

Instance gen_lowerbound(int t) {
    if (t < 2) throw InputError("lowerbound family needs t >= 2");
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;
    nodes.push_back({"v_b", 1});
    nodes.push_back({"v_a", 0});
    Rational leaf_weight(2 * t - 2, t);
    leaf_weight.canonicalize();
    for (int i = 1; i <= t; ++i) {
        std::ostringstream xid;
        xid << "x_" << i;
        const int xi = static_cast<int>(nodes.size());
        nodes.push_back({xid.str(), 1});
        edges.push_back({xi, 1});  // x_i shops at v_a
        for (int j = 1; j <= t; ++j) {
            std::ostringstream yid;
            yid << "y_" << i << "_" << j;
            const int yj = static_cast<int>(nodes.size());
            nodes.push_back({yid.str(), leaf_weight});
            edges.push_back({xi, yj});
        }
    }
    return Instance(std::move(nodes), edges, t * t + 1);
}

Placement lowerbound_spe_placement(const Instance& inst, int t) {
    Placement s;
    s.push_back(inst.node_index("v_b"));
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) {
            std::ostringstream yid;
            yid << "y_" << i << "_" << j;
            s.push_back(inst.node_index(yid.str()));
        }
    return s;
}

IsReduction gen_is_reduction(const SimpleGraph& g, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    validate_graph(g, false, 3);

    const Rational pad_weight(7, 4);  // 1.75
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> original_nodes;
    std::vector<std::array<int, 4>> gstar_copies;

    std::vector<int> degree(g.vertices.size(), 0);
    for (auto [u, v] : g.edges) {
        ++degree[u];
        ++degree[v];
    }
    for (const auto& name : g.vertices) {
        original_nodes.push_back(static_cast<int>(nodes.size()));
        nodes.push_back({name, 0});
    }
    for (auto [u, v] : g.edges) {
        std::ostringstream xid;
        xid << "x_" << g.vertices[u] << "_" << g.vertices[v];
        const int xe = static_cast<int>(nodes.size());
        nodes.push_back({xid.str(), pad_weight});
        edges.push_back({xe, original_nodes[u]});
        edges.push_back({xe, original_nodes[v]});
    }
    const char* pad_prefix[3] = {"y_", "z_", "u_"};
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        for (int p = 0; p < 3 - degree[v]; ++p) {
            const int pad = static_cast<int>(nodes.size());
            nodes.push_back({pad_prefix[p] + g.vertices[v], pad_weight});
            edges.push_back({pad, original_nodes[v]});
        }
    }
    const Instance gstar = gen_gstar();
    for (int c = 0; c < k; ++c) {
        std::array<int, 4> copy{};
        for (int q = 0; q < 4; ++q) {
            std::ostringstream id;
            id << "g" << c << "_" << gstar.id(q);
            copy[q] = static_cast<int>(nodes.size());
            nodes.push_back({id.str(), gstar.weight(q)});
        }
        for (int q = 0; q < 3; ++q) edges.push_back({copy[q], copy[q + 1]});
        gstar_copies.push_back(copy);
    }
    return IsReduction{Instance(std::move(nodes), edges, 2 * k),
                       std::move(original_nodes), std::move(gstar_copies)};
}

MaxCutReduction gen_maxcut_reduction(const SimpleGraph& g) {
    validate_graph(g, true, 0);
    if (g.edges.empty()) throw InputError("MaxCut reduction needs at least one edge");

    Rational total(0);
    for (const auto& w : g.edge_weights) total += w;
    const Rational big = Rational(2) * total + 1;

    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 2>> left_right;
    std::vector<std::tuple<int, int, Rational>> orig_edges;

    for (const auto& name : g.vertices) {
        const int left = static_cast<int>(nodes.size());
        nodes.push_back({"left_" + name, 0});
        nodes.push_back({"right_" + name, 0});
        nodes.push_back({"dummy1_" + name, big});
        nodes.push_back({"dummy2_" + name, big});
        nodes.push_back({"dummy3_" + name, big});
        edges.push_back({left + 2, left});      // dummy1 -> left
        edges.push_back({left + 3, left + 1});  // dummy2 -> right
        edges.push_back({left + 4, left});      // dummy3 -> left
        edges.push_back({left + 4, left + 1});  // dummy3 -> right
        left_right.push_back({left, left + 1});
    }
    // Edge clients pair same-side gadget nodes: the v1 client shops at
    // both rights, the v2 client at both lefts. A facility's own-gadget
    // flip then trades exactly the cut weight across the edge, which is
    // what makes decoded equilibria single-flip optimal cuts.
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        orig_edges.emplace_back(u, v, g.edge_weights[e]);
        const std::string tag = g.vertices[u] + "_" + g.vertices[v];
        const int v1 = static_cast<int>(nodes.size());
        nodes.push_back({"v1_" + tag, g.edge_weights[e]});
        edges.push_back({v1, left_right[u][1]});
        edges.push_back({v1, left_right[v][1]});
        const int v2 = static_cast<int>(nodes.size());
        nodes.push_back({"v2_" + tag, g.edge_weights[e]});
        edges.push_back({v2, left_right[u][0]});
        edges.push_back({v2, left_right[v][0]});
    }
    return MaxCutReduction{
        Instance(std::move(nodes), edges, static_cast<int>(g.vertices.size())),
        g.vertices, std::move(left_right), std::move(orig_edges), big};
}

std::vector<char> decode_cut(const MaxCutReduction& red, const Placement& s) {
    std::vector<char> in_cut(red.vertices.size(), 0);
    for (std::size_t v = 0; v < red.vertices.size(); ++v)
        for (int loc : s)
            if (loc == red.left_right[v][0]) in_cut[v] = 1;
    return in_cut;
}

Rational cut_value(const MaxCutReduction& red, const std::vector<char>& in_cut) {
    Rational value(0);
    for (const auto& [u, v, w] : red.edges)
        if (in_cut[u] != in_cut[v]) value += w;
    return value;
}

bool cut_single_flip_optimal(const MaxCutReduction& red, const std::vector<char>& in_cut) {
    for (std::size_t x = 0; x < red.vertices.size(); ++x) {
        Rational same(0), cross(0);
        for (const auto& [u, v, w] : red.edges) {
            if (static_cast<std::size_t>(u) != x && static_cast<std::size_t>(v) != x) continue;
            const int other = static_cast<std::size_t>(u) == x ? v : u;
            if (in_cut[other] == in_cut[x])
                same += w;
            else
                cross += w;
        }
        if (same > cross) return false;  // flipping x would gain same - cross
    }
    return true;
}

Instance gen_random(int n, double edge_prob, int weight_max, int k, unsigned long long seed) {
    if (n < 1) throw InputError("node count must be at least 1");
    if (edge_prob < 0.0 || edge_prob > 1.0) throw InputError("edge probability must be in [0,1]");
    if (weight_max < 0) throw InputError("weight bound must be nonnegative");
    if (k < 1) throw InputError("facility count must be at least 1");

    std::mt19937_64 rng(seed);
    const auto next_unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    const auto next_below = [&rng](unsigned long long bound) { return rng() % bound; };

    std::vector<Node> nodes;
    for (int i = 0; i < n; ++i) {
        std::ostringstream id;
        id << "v" << i;
        const unsigned long long den = 1 + next_below(4);
        const unsigned long long num =
            next_below(static_cast<unsigned long long>(weight_max) * den + 1);
        Rational w(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
        w.canonicalize();
        nodes.push_back({id.str(), std::move(w)});
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && next_unit() < edge_prob) edges.push_back({u, v});
    return Instance(std::move(nodes), edges, k);
}

}  // namespace flg
