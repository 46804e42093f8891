#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flg/errors.hpp"
#include "flg/instance.hpp"
#include "flg/solver.hpp"

namespace flg {

struct DynamicsStep {
    int facility;
    int from;
    int to;
    Rational old_payoff;
    Rational new_payoff;
    Rational potential_before;
    Rational potential_after;
};

struct DynamicsTrace {
    std::vector<DynamicsStep> steps;
    Placement final_placement;
    Rational epsilon;

    long step_count() const { return static_cast<long>(steps.size()); }
};

/// run_dynamics exceeded its step limit; carries the partial trace.
class DynamicsError : public SolverError {
public:
    DynamicsError(const std::string& what, DynamicsTrace trace)
        : SolverError(what), trace(std::move(trace)) {}
    DynamicsTrace trace;
};

/// Every client splits its weight equally among the facilities in range.
WeightDistribution uniform_distribution(const Instance& inst, const Placement& s);

/// Facility loads under the uniform split.
std::vector<Rational> uniform_loads(const Instance& inst, const Placement& s);

/// Exact Rosenthal potential of the uniform game:
/// Phi(s) = sum_v w(v) * H_{|N_s(v)|} with harmonic numbers H_m.
/// For every unilateral facility move, the potential difference equals the
/// mover's payoff difference, exactly in rationals.
Rational potential(const Instance& inst, const Placement& s);

/// Best relocation target for facility j under uniform payoffs, returned
/// only if it meets the (1+epsilon) threshold (any positive payoff
/// qualifies when the current payoff is 0). Targets exclude the current
/// location; ties break toward the smallest node index.
std::optional<std::pair<int, Rational>> uniform_best_deviation(const Instance& inst,
                                                               const Placement& s, int facility,
                                                               const Rational& epsilon);

/// Approximate best-response dynamics: scan facilities in index order,
/// apply the first qualifying move, repeat until none qualifies. Throws
/// DynamicsError (with the partial trace) if max_steps is exceeded.
DynamicsTrace run_dynamics(const Instance& inst, const Placement& start, const Rational& epsilon,
                           long max_steps);

/// Step bound used as the default max_steps:
/// ceil((1 + 1/epsilon) * n^2 * (ln n + 1)).
long dynamics_step_ceiling(const Instance& inst, const Rational& epsilon);

/// True iff no facility has a strictly improving unilateral move under
/// uniform payoffs (exact rational comparisons).
bool is_uniform_equilibrium(const Instance& inst, const Placement& s);

/// All exact uniform equilibria, as sorted placement multisets in
/// lexicographic order. Enumerates every multiset; a double-precision
/// screen discards clearly unstable ones and survivors are confirmed in
/// exact arithmetic. Throws BudgetError if the multiset count exceeds
/// `budget`.
std::vector<Placement> uniform_equilibria(const Instance& inst, unsigned long long budget,
                                          int threads = 1);

}  // namespace flg
