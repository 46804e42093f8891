#include "flg/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flg/errors.hpp"

namespace flg {

namespace {

constexpr double kRatioMargin = 1e-6;

int resolve_threads(int threads) {
#ifdef _OPENMP
    if (threads == 0) return omp_get_max_threads();
    return std::max(1, threads);
#else
    (void)threads;
    return 1;
#endif
}

unsigned long long multiset_count(int n, int k) {
    unsigned long long result = 1;
    for (int i = 1; i <= k; ++i) {
        const unsigned long long num = static_cast<unsigned long long>(n) + k - i;
        if (result > std::numeric_limits<unsigned long long>::max() / num)
            return std::numeric_limits<unsigned long long>::max();
        result = result * num / i;
    }
    return result;
}

bool next_multiset(Placement& m, int n) {
    int pos = static_cast<int>(m.size()) - 1;
    while (pos >= 0 && m[pos] == n - 1) --pos;
    if (pos < 0) return false;
    const int v = m[pos] + 1;
    for (std::size_t q = pos; q < m.size(); ++q) m[q] = v;
    return true;
}

Placement sorted_copy(const Placement& s) {
    Placement m = s;
    std::sort(m.begin(), m.end());
    return m;
}

Placement replace_sorted(const Placement& sorted, int from, int to) {
    Placement m = sorted;
    m.erase(std::lower_bound(m.begin(), m.end(), from));
    m.insert(std::lower_bound(m.begin(), m.end(), to), to);
    return m;
}

// Comparison of a deviation payoff against alpha * current. In exact mode
// the outcome is definite; otherwise ratios within kRatioMargin of alpha
// are flagged as borderline.
struct Comparison {
    bool violated = false;
    bool borderline = false;
};

Comparison compare_payoff(const Rational& pay, const Rational& current, const Rational& alpha,
                          bool exact) {
    Comparison cmp;
    if (exact) {
        cmp.violated = pay > alpha * current;
        return cmp;
    }
    const double p = to_double(pay);
    const double c = to_double(current);
    const double a = to_double(alpha);
    if (c <= 1e-12) {
        cmp.violated = p > 1e-9;
        cmp.borderline = !cmp.violated && p > 1e-12;
        return cmp;
    }
    const double ratio = p / c;
    cmp.violated = ratio > a + kRatioMargin;
    cmp.borderline = !cmp.violated && ratio > a - kRatioMargin;
    return cmp;
}

// Early-exit alpha-stability test for one multiset. Co-located facilities
// deviate identically, so only distinct locations are scanned.
struct MultisetCheck {
    bool stable = true;
    bool borderline = false;
};

MultisetCheck multiset_stable(const Instance& inst, EquilibriumCache& cache,
                              const Placement& sorted, const Rational& alpha) {
    MultisetCheck out;
    const auto& base = cache.get(sorted);
    int prev = -1;
    for (std::size_t slot = 0; slot < sorted.size(); ++slot) {
        const int u = sorted[slot];
        if (u == prev) continue;
        prev = u;
        const Rational& current = base.loads[slot];
        for (int t = 0; t < inst.node_count(); ++t) {
            if (t == u) continue;
            const Placement moved = replace_sorted(sorted, u, t);
            const Rational pay = cache.load_at(moved, t);
            const auto& entry = cache.get(moved);
            const auto cmp = compare_payoff(pay, current, alpha, base.exact && entry.exact);
            if (cmp.violated) {
                out.stable = false;
                return out;
            }
            out.borderline = out.borderline || cmp.borderline;
        }
    }
    return out;
}

}  // namespace

EquilibriumCache::EquilibriumCache(const Instance& inst, const SolveOptions& opts)
    : inst_(inst), opts_(opts) {
    opts_.threads = 1;  // callers parallelize across placements, not within a solve
}

const EquilibriumCache::Entry& EquilibriumCache::get(const Placement& sorted_multiset) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(sorted_multiset);
        if (it != cache_.end()) return it->second;
    }
    Entry entry;
    const EquilibriumReport rep = solve_min(inst_, sorted_multiset, opts_);
    entry.loads = rep.loads;
    entry.exact = rep.method == Method::Exact;
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(sorted_multiset, std::move(entry)).first->second;
}

Rational EquilibriumCache::load_at(const Placement& sorted_multiset, int node) {
    const Entry& entry = get(sorted_multiset);
    const auto it = std::lower_bound(sorted_multiset.begin(), sorted_multiset.end(), node);
    return entry.loads[static_cast<std::size_t>(it - sorted_multiset.begin())];
}

std::pair<std::vector<Rational>, Rational> evaluate_deviation(const Instance& inst,
                                                              const Placement& s, int facility,
                                                              int target, const SolveOptions& opts) {
    if (facility < 0 || facility >= static_cast<int>(s.size()))
        throw InputError("facility index out of range");
    if (target < 0 || target >= inst.node_count()) throw InputError("target is not a node");
    Placement moved = s;
    moved[facility] = target;
    EquilibriumReport rep = solve_min(inst, moved, opts);
    Rational payoff = rep.loads[facility];
    return {std::move(rep.loads), std::move(payoff)};
}

StabilityReport check_stability(const Instance& inst, const Placement& s, const Rational& alpha,
                                const SolveOptions& opts) {
    if (alpha < 1) throw InputError("alpha must be at least 1");
    StabilityReport report;
    report.placement = s;
    report.alpha = alpha;

    EquilibriumCache cache(inst, opts);
    const Placement sorted = sorted_copy(s);
    const auto& base = cache.get(sorted);
    report.method = base.exact ? Method::Exact : Method::Iterative;
    report.loads.reserve(s.size());
    for (int loc : s) report.loads.push_back(cache.load_at(sorted, loc));

    const int n = inst.node_count();
    const int k = static_cast<int>(s.size());

    // Deviation payoffs per distinct source location; co-located
    // facilities share a row.
    std::vector<int> distinct;
    for (int loc : sorted)
        if (distinct.empty() || distinct.back() != loc) distinct.push_back(loc);

    std::vector<std::vector<Rational>> payoffs(distinct.size(), std::vector<Rational>(n));
    std::vector<std::vector<char>> exact_flags(distinct.size(), std::vector<char>(n, 1));

    const int nthreads = resolve_threads(opts.threads);
    const long long work = static_cast<long long>(distinct.size()) * n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads) if (nthreads > 1)
#endif
    for (long long item = 0; item < work; ++item) {
        const int d = static_cast<int>(item / n);
        const int t = static_cast<int>(item % n);
        const int u = distinct[d];
        if (t == u) {
            payoffs[d][t] = cache.load_at(sorted, u);
            exact_flags[d][t] = base.exact;
        } else {
            const Placement moved = replace_sorted(sorted, u, t);
            payoffs[d][t] = cache.load_at(moved, t);
            exact_flags[d][t] = cache.get(moved).exact;
        }
    }

    bool violated = false;
    bool borderline = false;
    for (int j = 0; j < k; ++j) {
        const int u = s[j];
        const std::size_t d = static_cast<std::size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), u) - distinct.begin());
        FacilityRow row;
        row.facility = j;
        row.current_payoff = report.loads[j];
        row.deviations.reserve(n);
        for (int t = 0; t < n; ++t) {
            row.deviations.push_back({t, payoffs[d][t]});
            if (t == u) continue;
            const auto cmp =
                compare_payoff(payoffs[d][t], row.current_payoff, alpha,
                               base.exact && exact_flags[d][t]);
            violated = violated || cmp.violated;
            borderline = borderline || cmp.borderline;
            if (row.best_target < 0 || payoffs[d][t] > row.best_payoff) {
                row.best_target = t;
                row.best_payoff = payoffs[d][t];
            }
        }
        if (row.current_payoff > 0) {
            row.gain_ratio = to_double(row.best_payoff / row.current_payoff);
        } else if (row.best_payoff > 0) {
            row.ratio_unbounded = true;
            row.gain_ratio = std::numeric_limits<double>::infinity();
        } else {
            row.gain_ratio = 1.0;
        }
        report.rows.push_back(std::move(row));
    }
    report.verdict = violated           ? Verdict::NotStable
                     : borderline      ? Verdict::Inconclusive
                                        : Verdict::Stable;
    return report;
}

std::optional<Placement> find_spe(const Instance& inst, const Rational& alpha,
                                  const SolveOptions& opts, unsigned long long placement_budget) {
    if (alpha < 1) throw InputError("alpha must be at least 1");
    const int n = inst.node_count();
    const int k = inst.facility_count();
    const unsigned long long total = multiset_count(n, k);
    if (total > placement_budget) {
        std::ostringstream msg;
        msg << "placement budget exceeded: " << total << " multisets > " << placement_budget;
        throw BudgetError(msg.str());
    }

    EquilibriumCache cache(inst, opts);
    const int nthreads = resolve_threads(opts.threads);

    if (nthreads == 1) {
        Placement m(k, 0);
        do {
            if (multiset_stable(inst, cache, m, alpha).stable) return m;
        } while (next_multiset(m, n));
        return std::nullopt;
    }

#ifdef _OPENMP
    const unsigned long long block = std::max<unsigned long long>(
        32, total / (static_cast<unsigned long long>(nthreads) * 64));
    Placement cursor(k, 0);
    bool exhausted = false;
    while (!exhausted) {
        std::vector<Placement> batch;
        batch.reserve(block);
        for (unsigned long long q = 0; q < block; ++q) {
            batch.push_back(cursor);
            if (!next_multiset(cursor, n)) {
                exhausted = true;
                break;
            }
        }
        long long witness = static_cast<long long>(batch.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads) reduction(min : witness)
        for (long long idx = 0; idx < static_cast<long long>(batch.size()); ++idx) {
            if (multiset_stable(inst, cache, batch[idx], alpha).stable)
                witness = std::min(witness, idx);
        }
        if (witness < static_cast<long long>(batch.size())) return batch[witness];
    }
    return std::nullopt;
#else
    return std::nullopt;
#endif
}

std::pair<Placement, StabilityReport> compute_approx_spe(const Instance& inst,
                                                         const Rational& epsilon,
                                                         const Placement& start,
                                                         const SolveOptions& opts, long max_steps,
                                                         DynamicsTrace* trace_out) {
    if (epsilon <= 0) throw InputError("epsilon must be positive");
    if (max_steps < 0) max_steps = dynamics_step_ceiling(inst, epsilon);
    DynamicsTrace trace = run_dynamics(inst, start, epsilon, max_steps);
    const Rational alpha = Rational(3) + Rational(2) * epsilon;
    StabilityReport report = check_stability(inst, trace.final_placement, alpha, opts);
    if (report.verdict == Verdict::NotStable) {
        std::ostringstream msg;
        msg << "approximation guarantee violated: placement";
        for (int loc : trace.final_placement) msg << ' ' << inst.id(loc);
        msg << " is not " << rational_str(alpha) << "-stable in the Min game";
        throw std::logic_error(msg.str());
    }
    if (report.verdict == Verdict::Inconclusive)
        throw SolverError("stability verification inconclusive at the configured tolerance");
    Placement final = trace.final_placement;
    if (trace_out) *trace_out = std::move(trace);
    return {std::move(final), std::move(report)};
}

std::pair<Placement, EquilibriumReport> remove_facility(const Instance& inst, const Placement& s,
                                                        int facility, const SolveOptions& opts) {
    if (s.size() < 2) throw InputError("cannot remove a facility from a single-facility placement");
    if (facility < 0 || facility >= static_cast<int>(s.size()))
        throw InputError("facility index out of range");
    Placement reduced = s;
    reduced.erase(reduced.begin() + facility);
    EquilibriumReport rep = solve_min(inst, reduced, opts);
    return {std::move(reduced), std::move(rep)};
}

}  // namespace flg
