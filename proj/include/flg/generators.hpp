#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "flg/instance.hpp"

namespace flg {

/// Plain graph input for the reduction generators.
struct SimpleGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;   // vertex indices, u < v
    std::vector<Rational> edge_weights;       // aligned with edges; used by the MaxCut reduction
};

/// 4-node path with weights (3,2,7,1) and two facilities; the smallest
/// instance without a subgame perfect equilibrium.
Instance gen_gstar();

/// The two introductory 2-facility instances. Left: nodes v0..v3 with
/// weights (0,2,0,2); right: nodes v0..v4 with weights (0,1,1,0,2).
Instance gen_fig1(bool left);

/// Approximation lower-bound family: hub v_a (weight 0), isolated v_b
/// (weight 1), spokes x_1..x_t (weight 1) shopping at v_a and at their t
/// leaves y_i_j (weight (2t-2)/t); t^2+1 facilities.
Instance gen_lowerbound(int t);

/// The uniform-game equilibrium placement (v_b, all y-nodes) for a
/// lowerbound instance.
Placement lowerbound_spe_placement(const Instance& inst, int t);

/// Reduction from IndependentSet (max degree 3): edges become weight-1.75
/// midpoint clients, vertices are padded to exactly three such
/// in-neighbors, and k disjoint G* copies force non-existence unless k
/// facilities can sit on an independent set. 2k facilities total.
struct IsReduction {
    Instance instance;
    std::vector<int> original_nodes;              // host node index per input vertex
    std::vector<std::array<int, 4>> gstar_copies; // host node indices per copy
};
IsReduction gen_is_reduction(const SimpleGraph& g, int k);

/// Reduction from LocalMaxCut to uniform-game equilibria. Each vertex
/// gadget holds left/right nodes (weight 0) and three dummies of weight
/// M = 2*sum(w_e)+1; each edge {u,v} adds clients v1_e shopping at both
/// rights and v2_e shopping at both lefts, so within-gadget stability of
/// every facility is exactly single-flip optimality of the decoded cut.
struct MaxCutReduction {
    Instance instance;
    std::vector<std::string> vertices;
    std::vector<std::array<int, 2>> left_right;  // host node indices per vertex
    std::vector<std::tuple<int, int, Rational>> edges;
    Rational big_weight;
};
MaxCutReduction gen_maxcut_reduction(const SimpleGraph& g);

/// Vertex u is in the cut side C iff some facility sits on left_u.
std::vector<char> decode_cut(const MaxCutReduction& red, const Placement& s);

/// Cut weight of the side set.
Rational cut_value(const MaxCutReduction& red, const std::vector<char>& in_cut);

/// No single vertex flip increases the cut value.
bool cut_single_flip_optimal(const MaxCutReduction& red, const std::vector<char>& in_cut);

/// Reproducible random instance: nodes v0..v{n-1}, each ordered pair an
/// edge with probability edge_prob, weights p/q with p <= weight_max*q,
/// q <= 4.
Instance gen_random(int n, double edge_prob, int weight_max, int k, unsigned long long seed);

}  // namespace flg
