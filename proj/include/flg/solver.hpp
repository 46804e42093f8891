#pragma once

#include <optional>
#include <vector>

#include "flg/instance.hpp"
#include "flg/rational.hpp"

namespace flg {

enum class Method { Exact, Iterative, Auto };

struct SolveOptions {
    Method method = Method::Auto;
    double tol = 1e-12;        // per-sweep weight-change threshold (iterative)
    double damping = 1.0;      // in (0,1]; 1.0 = full best-response steps
    long max_rounds = 1000000; // sweep limit (iterative)
    double activity_tol = 1e-10;
    unsigned long long support_budget = 2000000; // pattern limit (exact enumeration)
    bool guided = true;        // seed the exact oracle with a support guess
    int threads = 1;           // 1 = serial reference path, 0 = all hardware threads
};

/// Sparse client-to-facility weight assignment for a fixed placement.
/// Row i lists the facilities reachable by client i (ascending) and the
/// weight sent to each; clients with no reachable facility have empty rows.
struct WeightDistribution {
    std::vector<std::vector<int>> facilities;
    std::vector<std::vector<Rational>> weights;

    Rational get(int client, int facility) const;
    int client_count() const { return static_cast<int>(facilities.size()); }
};

/// Client equilibrium plus its certificate. lambda[i] is the marginal
/// value common to all facilities client i actively uses.
struct EquilibriumReport {
    Method method = Method::Exact;
    WeightDistribution sigma;
    std::vector<Rational> loads;
    std::vector<Rational> lambda;
    std::vector<char> has_lambda;
    double residual = 0.0;
    long iterations = 0;
};

/// Unique minimizer of sum_j x_j (x_j + offloads_j) over the simplex
/// {x >= 0, sum x = w}: water-filling x_j = max(0, (lambda - offloads_j)/2)
/// with lambda fixed by the total. Empty input returns an empty vector
/// (stranded client; the caller assigns the zero distribution).
std::vector<Rational> best_response(const Rational& w, const std::vector<Rational>& offloads);
std::vector<double> best_response(double w, const std::vector<double>& offloads);

/// Damped Gauss-Seidel best-response sweeps in client order. Each sweep is
/// an exact block-coordinate minimization of the strictly convex quadratic
/// P(sigma) = 1/2 sum_j (l_j^2 + sum_i sigma_ij^2), whose per-client
/// gradient equals the client's own cost gradient, so the iteration
/// converges to the unique equilibrium. Throws SolverError when max_rounds
/// is exhausted before reaching tol.
EquilibriumReport solve_iterative(const Instance& inst, const Placement& s,
                                  const SolveOptions& opts = {},
                                  const WeightDistribution* start = nullptr);

/// Exact rational oracle. Enumerates support patterns (per client a
/// nonempty subset of reachable facilities), solves the equilibrium
/// equations l_j + sigma_ij = lambda_i, sum_j sigma_ij = w_i for each
/// pattern, and accepts iff all support weights are >= 0 and every
/// non-support facility in range has l_j >= lambda_i. The accepted
/// solution is the unique equilibrium; residual is exactly 0.
/// With opts.guided, a support guess from a fast iterative solve is
/// verified first (the certificate check is unchanged), which keeps the
/// oracle usable far beyond the raw enumeration budget.
EquilibriumReport solve_exact(const Instance& inst, const Placement& s,
                              const SolveOptions& opts = {});

/// Dispatch: Exact / Iterative as requested; Auto tries the exact oracle
/// and falls back to the iterative solver if the pattern budget is hit.
EquilibriumReport solve_min(const Instance& inst, const Placement& s,
                            const SolveOptions& opts = {});

/// Max over clients i and ordered facility pairs (p,q) in range of i with
/// sigma_ip > activity_tol of max(0, (l_p + sigma_ip) - (l_q + sigma_iq)).
/// Exactly 0 at the client equilibrium.
Rational equilibrium_residual(const Instance& inst, const Placement& s,
                              const WeightDistribution& sigma, double activity_tol = 1e-10);

/// L_i = sum_j sigma_ij l_j. Stranded clients cost 0.
Rational client_cost(const Instance& inst, const Placement& s, const WeightDistribution& sigma,
                     int client);

/// Reproducible random feasible distribution (used to probe uniqueness).
WeightDistribution random_feasible_distribution(const Instance& inst, const Placement& s,
                                                unsigned long long seed);

/// Exact Gaussian elimination over the rationals; false when singular.
bool solve_linear_system(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                         std::vector<Rational>& x);

}  // namespace flg
