#include "flg/uniform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flg {

namespace {

// in_range_counts[i] = number of facility slots within client i's range.
std::vector<int> in_range_counts(const Instance& inst, const Placement& s) {
    std::vector<int> counts(inst.node_count(), 0);
    for (int loc : s) {
        ++counts[loc];
        for (int i : inst.in(loc)) ++counts[i];
    }
    return counts;
}

// Payoff of a single facility placed at `node`, given per-client facility
// counts that already include that facility.
Rational payoff_at(const Instance& inst, int node, const std::vector<int>& counts) {
    Rational payoff(0);
    if (inst.weight(node) > 0) payoff += inst.weight(node) / Rational(counts[node]);
    for (int i : inst.in(node))
        if (inst.weight(i) > 0) payoff += inst.weight(i) / Rational(counts[i]);
    return payoff;
}

unsigned long long multiset_count(int n, int k) {
    // C(n+k-1, k), saturating.
    unsigned long long result = 1;
    for (int i = 1; i <= k; ++i) {
        const unsigned long long num = static_cast<unsigned long long>(n) + k - i;
        if (result > std::numeric_limits<unsigned long long>::max() / num)
            return std::numeric_limits<unsigned long long>::max();
        result = result * num / i;
    }
    return result;
}

bool next_multiset(std::vector<int>& m, int n) {
    int pos = static_cast<int>(m.size()) - 1;
    while (pos >= 0 && m[pos] == n - 1) --pos;
    if (pos < 0) return false;
    const int v = m[pos] + 1;
    for (std::size_t q = pos; q < m.size(); ++q) m[q] = v;
    return true;
}

// Multiset at `rank` in the lexicographic order of nondecreasing k-tuples
// over {0..n-1}. The count of tuples with first entry >= v is
// C(n-v+k-1, k), which drives a digit-by-digit scan.
std::vector<int> unrank_multiset(int n, int k, unsigned long long rank) {
    std::vector<int> m(k);
    int lo = 0;
    for (int pos = 0; pos < k; ++pos) {
        for (int v = lo; v < n; ++v) {
            const unsigned long long block = multiset_count(n - v, k - pos - 1);
            if (rank < block) {
                m[pos] = v;
                lo = v;
                break;
            }
            rank -= block;
        }
    }
    return m;
}

// Double-precision stability screen; false only when some deviation is
// clearly improving. Survivors still need the exact check.
bool screen_uniform_stable(const Instance& inst, const std::vector<double>& weights,
                           const Placement& s) {
    const int n = inst.node_count();
    std::vector<int> counts(n, 0);
    for (int loc : s) {
        ++counts[loc];
        for (int i : inst.in(loc)) ++counts[i];
    }
    const auto payoff = [&](int node, const std::vector<int>& c) {
        double p = weights[node] / c[node];
        for (int i : inst.in(node)) p += weights[i] / c[i];
        return p;
    };
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale += weights[i];
    const double margin = 1e-9 * scale;

    std::vector<int> reduced(n);
    int prev = -1;
    for (int u : s) {
        if (u == prev) continue;  // co-located facilities deviate identically
        prev = u;
        reduced = counts;
        --reduced[u];
        for (int i : inst.in(u)) --reduced[i];
        const double current = payoff(u, counts);
        for (int t = 0; t < n; ++t) {
            if (t == u) continue;
            ++reduced[t];
            for (int i : inst.in(t)) ++reduced[i];
            const double moved = payoff(t, reduced);
            --reduced[t];
            for (int i : inst.in(t)) --reduced[i];
            if (moved > current + margin) return false;
        }
    }
    return true;
}

}  // namespace

WeightDistribution uniform_distribution(const Instance& inst, const Placement& s) {
    WeightDistribution sigma;
    sigma.facilities.resize(inst.node_count());
    sigma.weights.resize(inst.node_count());
    for (int i = 0; i < inst.node_count(); ++i) {
        auto facs = reachable_facilities(inst, s, i);
        if (facs.empty()) continue;
        const Rational share = inst.weight(i) / Rational(static_cast<int>(facs.size()));
        sigma.weights[i].assign(facs.size(), share);
        sigma.facilities[i] = std::move(facs);
    }
    return sigma;
}

std::vector<Rational> uniform_loads(const Instance& inst, const Placement& s) {
    const auto counts = in_range_counts(inst, s);
    std::vector<Rational> loads;
    loads.reserve(s.size());
    for (int loc : s) loads.push_back(payoff_at(inst, loc, counts));
    return loads;
}

Rational potential(const Instance& inst, const Placement& s) {
    const auto counts = in_range_counts(inst, s);
    const auto harmonic = harmonic_prefix(static_cast<int>(s.size()));
    Rational phi(0);
    for (int i = 0; i < inst.node_count(); ++i)
        if (counts[i] > 0 && inst.weight(i) > 0) phi += inst.weight(i) * harmonic[counts[i]];
    return phi;
}

std::optional<std::pair<int, Rational>> uniform_best_deviation(const Instance& inst,
                                                               const Placement& s, int facility,
                                                               const Rational& epsilon) {
    if (facility < 0 || facility >= static_cast<int>(s.size()))
        throw InputError("facility index out of range");
    if (epsilon < 0) throw InputError("epsilon must be nonnegative");

    const int u = s[facility];
    auto counts = in_range_counts(inst, s);
    const Rational current = payoff_at(inst, u, counts);

    // counts without the moving facility
    --counts[u];
    for (int i : inst.in(u)) --counts[i];

    std::optional<std::pair<int, Rational>> best;
    for (int t = 0; t < inst.node_count(); ++t) {
        if (t == u) continue;
        ++counts[t];
        for (int i : inst.in(t)) ++counts[i];
        Rational pay = payoff_at(inst, t, counts);
        --counts[t];
        for (int i : inst.in(t)) --counts[i];
        if (!best || pay > best->second) best = {t, std::move(pay)};
    }
    if (!best) return std::nullopt;
    if (current == 0) {
        if (best->second > 0) return best;
        return std::nullopt;
    }
    if (best->second >= (Rational(1) + epsilon) * current) return best;
    return std::nullopt;
}

DynamicsTrace run_dynamics(const Instance& inst, const Placement& start, const Rational& epsilon,
                           long max_steps) {
    if (epsilon <= 0) throw InputError("epsilon must be positive");
    DynamicsTrace trace;
    trace.epsilon = epsilon;
    trace.final_placement = start;
    Placement s = start;

    for (;;) {
        bool moved = false;
        for (int j = 0; j < static_cast<int>(s.size()); ++j) {
            auto dev = uniform_best_deviation(inst, s, j, epsilon);
            if (!dev) continue;
            if (static_cast<long>(trace.steps.size()) >= max_steps) {
                trace.final_placement = s;
                std::ostringstream msg;
                msg << "dynamics exceeded " << max_steps << " steps";
                throw DynamicsError(msg.str(), std::move(trace));
            }
            DynamicsStep step;
            step.facility = j;
            step.from = s[j];
            step.to = dev->first;
            step.potential_before = potential(inst, s);
            step.old_payoff = uniform_loads(inst, s)[j];
            s[j] = dev->first;
            step.new_payoff = dev->second;
            step.potential_after = potential(inst, s);
            trace.steps.push_back(std::move(step));
            moved = true;
            break;
        }
        if (!moved) break;
    }
    trace.final_placement = s;
    return trace;
}

long dynamics_step_ceiling(const Instance& inst, const Rational& epsilon) {
    const double eps = to_double(epsilon);
    const double n = inst.node_count();
    const double bound = (1.0 + 1.0 / eps) * n * n * (std::log(n) + 1.0);
    return static_cast<long>(std::ceil(bound));
}

bool is_uniform_equilibrium(const Instance& inst, const Placement& s) {
    auto counts = in_range_counts(inst, s);
    int prev = -1;
    Placement sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (int u : sorted) {
        if (u == prev) continue;
        prev = u;
        const Rational current = payoff_at(inst, u, counts);
        --counts[u];
        for (int i : inst.in(u)) --counts[i];
        bool improving = false;
        for (int t = 0; t < inst.node_count() && !improving; ++t) {
            if (t == u) continue;
            ++counts[t];
            for (int i : inst.in(t)) ++counts[i];
            improving = payoff_at(inst, t, counts) > current;
            --counts[t];
            for (int i : inst.in(t)) --counts[i];
        }
        ++counts[u];
        for (int i : inst.in(u)) ++counts[i];
        if (improving) return false;
    }
    return true;
}

std::vector<Placement> uniform_equilibria(const Instance& inst, unsigned long long budget,
                                          int threads) {
    const int n = inst.node_count();
    const int k = inst.facility_count();
    const unsigned long long total = multiset_count(n, k);
    if (total > budget) {
        std::ostringstream msg;
        msg << "placement budget exceeded: " << total << " multisets > " << budget;
        throw BudgetError(msg.str());
    }
    std::vector<double> weights(n);
    for (int i = 0; i < n; ++i) weights[i] = to_double(inst.weight(i));

#ifdef _OPENMP
    const int nthreads = threads == 0 ? omp_get_max_threads() : std::max(1, threads);
#else
    const int nthreads = 1;
    (void)threads;
#endif

    std::vector<Placement> result;
    if (nthreads == 1) {
        Placement m(k, 0);
        do {
            if (screen_uniform_stable(inst, weights, m) && is_uniform_equilibrium(inst, m))
                result.push_back(m);
        } while (next_multiset(m, n));
        return result;
    }

#ifdef _OPENMP
    // Consecutive index ranges, each enumerated locally from an unranked
    // start; range order keeps the output lexicographic.
    const unsigned long long span =
        std::max<unsigned long long>(1024, total / (static_cast<unsigned long long>(nthreads) * 16));
    const int ranges = static_cast<int>((total + span - 1) / span);
    std::vector<std::vector<Placement>> found(ranges);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (int r = 0; r < ranges; ++r) {
        const unsigned long long begin = static_cast<unsigned long long>(r) * span;
        const unsigned long long end = std::min(total, begin + span);
        Placement m = unrank_multiset(n, k, begin);
        for (unsigned long long q = begin; q < end; ++q) {
            if (screen_uniform_stable(inst, weights, m) && is_uniform_equilibrium(inst, m))
                found[r].push_back(m);
            if (!next_multiset(m, n)) break;
        }
    }
    for (const auto& part : found) result.insert(result.end(), part.begin(), part.end());
#endif
    return result;
}

}  // namespace flg
