#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "flg/instance.hpp"
#include "flg/solver.hpp"
#include "flg/uniform.hpp"

namespace flg {

enum class Verdict { Stable, NotStable, Inconclusive };

struct DeviationEntry {
    int target;
    Rational payoff;
};

struct FacilityRow {
    int facility;
    Rational current_payoff;
    int best_target = -1;           // best relocation (current location excluded)
    Rational best_payoff;
    bool ratio_unbounded = false;   // positive deviation payoff against a zero current payoff
    double gain_ratio = 1.0;
    std::vector<DeviationEntry> deviations;  // one entry per node, including the identity move
};

struct StabilityReport {
    Placement placement;
    Rational alpha;
    Method method = Method::Exact;  // arithmetic backing the comparisons
    std::vector<Rational> loads;
    std::vector<FacilityRow> rows;
    Verdict verdict = Verdict::Stable;
};

/// Memoizes Min-game equilibrium loads per placement multiset. Facilities
/// are anonymous and co-located facilities carry equal loads, so a load
/// depends only on the multiset and the node.
class EquilibriumCache {
public:
    EquilibriumCache(const Instance& inst, const SolveOptions& opts);

    struct Entry {
        std::vector<Rational> loads;  // aligned with the sorted multiset
        bool exact;
    };

    const Entry& get(const Placement& sorted_multiset);
    Rational load_at(const Placement& sorted_multiset, int node);
    std::size_t size() const { return cache_.size(); }

private:
    const Instance& inst_;
    SolveOptions opts_;
    std::map<Placement, Entry> cache_;
    std::mutex mutex_;
};

/// Re-solves the client equilibrium with facility j moved to `target` and
/// returns the new loads plus facility j's payoff there.
std::pair<std::vector<Rational>, Rational> evaluate_deviation(const Instance& inst,
                                                              const Placement& s, int facility,
                                                              int target,
                                                              const SolveOptions& opts = {});

/// Evaluates all k*n deviations with client re-equilibration. A placement
/// is alpha-stable iff every deviation payoff is at most alpha times the
/// deviator's current payoff (so a zero-payoff facility with any positive
/// deviation violates every alpha). Exact solves give exact comparisons;
/// when the oracle budget forces iterative solves, ratios within 1e-6 of
/// alpha yield Verdict::Inconclusive instead of a silent classification.
StabilityReport check_stability(const Instance& inst, const Placement& s, const Rational& alpha,
                                const SolveOptions& opts = {});

/// Exhaustive search over placement multisets in lexicographic order;
/// returns the first alpha-stable placement, or nullopt when none exists.
/// Throws BudgetError when C(n+k-1,k) exceeds placement_budget.
std::optional<Placement> find_spe(const Instance& inst, const Rational& alpha,
                                  const SolveOptions& opts = {},
                                  unsigned long long placement_budget = 2000000);

/// Runs the uniform-game dynamics to a (1+epsilon)-approximate equilibrium
/// and verifies the resulting placement as (3+2*epsilon)-stable in the Min
/// game. The verification is theorem-backed; a failure aborts via
/// std::logic_error carrying the witness.
std::pair<Placement, StabilityReport> compute_approx_spe(const Instance& inst,
                                                         const Rational& epsilon,
                                                         const Placement& start,
                                                         const SolveOptions& opts = {},
                                                         long max_steps = -1,
                                                         DynamicsTrace* trace_out = nullptr);

/// Drops facility j and re-solves; by load monotonicity no remaining
/// facility ends up worse off.
std::pair<Placement, EquilibriumReport> remove_facility(const Instance& inst, const Placement& s,
                                                        int facility,
                                                        const SolveOptions& opts = {});

}  // namespace flg
