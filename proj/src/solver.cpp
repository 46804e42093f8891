#include "flg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flg/errors.hpp"

namespace flg {

namespace {

constexpr unsigned long long kNoPattern = std::numeric_limits<unsigned long long>::max();

int resolve_threads(int threads) {
#ifdef _OPENMP
    if (threads == 0) return omp_get_max_threads();
    return std::max(1, threads);
#else
    (void)threads;
    return 1;
#endif
}

// Clients that actually shape the equilibrium: positive weight and at
// least one reachable facility. Zero-weight clients send nothing and
// impose no equations.
struct ReachTable {
    std::vector<int> active;                   // node index per active client
    std::vector<Rational> weight;              // aligned with `active`
    std::vector<std::vector<int>> facs;        // reachable slots per active client
    std::vector<std::vector<int>> node_facs;   // reachable slots per node (all nodes)
    int slot_count = 0;
};

ReachTable build_reach(const Instance& inst, const Placement& s) {
    ReachTable rt;
    rt.slot_count = static_cast<int>(s.size());
    rt.node_facs.resize(inst.node_count());
    for (int i = 0; i < inst.node_count(); ++i) {
        rt.node_facs[i] = reachable_facilities(inst, s, i);
        if (!rt.node_facs[i].empty() && inst.weight(i) > 0) {
            rt.active.push_back(i);
            rt.weight.push_back(inst.weight(i));
            rt.facs.push_back(rt.node_facs[i]);
        }
    }
    return rt;
}

template <class T>
std::vector<T> water_fill(const T& w, const std::vector<T>& off) {
    const int m = static_cast<int>(off.size());
    std::vector<T> x(m, T(0));
    if (m == 0 || !(w > T(0))) return x;
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return off[a] < off[b]; });

    // Active set = largest prefix p (ascending offloads) whose water level
    // lambda_p = (2w + sum_p)/p still sits above the p-th offload; always
    // nonempty since lambda_1 > off_(1).
    T prefix_sum(0), lambda(0);
    int active = 0;
    for (int p = 1; p <= m; ++p) {
        prefix_sum += off[order[p - 1]];
        T level = (w + w + prefix_sum) / T(p);
        if (level > off[order[p - 1]]) {
            lambda = level;
            active = p;
        }
    }
    for (int q = 0; q < active; ++q) x[order[q]] = (lambda - off[order[q]]) / T(2);
    return x;
}

// ---------------------------------------------------------------------
// Iterative solver (doubles). Internal state kept per active client.
// ---------------------------------------------------------------------

struct IterState {
    std::vector<std::vector<double>> sigma;  // per active client, aligned with facs
    std::vector<double> loads;               // per slot
    long sweeps = 0;
    double residual = 0.0;
};

double iter_residual(const ReachTable& rt, const IterState& st, double activity_tol) {
    double res = 0.0;
    for (std::size_t c = 0; c < rt.active.size(); ++c) {
        const auto& facs = rt.facs[c];
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < facs.size(); ++t) {
            const double margin = st.loads[facs[t]] + st.sigma[c][t];
            lo = std::min(lo, margin);
            if (st.sigma[c][t] > activity_tol) hi = std::max(hi, margin);
        }
        if (hi > lo) res = std::max(res, hi - lo);
    }
    return res;
}

IterState run_sweeps(const ReachTable& rt, const SolveOptions& opts,
                     const std::vector<std::vector<double>>& start, double tol, long max_rounds) {
    IterState st;
    st.sigma = start;
    st.loads.assign(rt.slot_count, 0.0);
    for (std::size_t c = 0; c < rt.active.size(); ++c)
        for (std::size_t t = 0; t < rt.facs[c].size(); ++t) st.loads[rt.facs[c][t]] += st.sigma[c][t];

    std::vector<double> off;
    const double residual_gate = 1e3 * tol;
    while (st.sweeps < max_rounds) {
        double max_change = 0.0;
        for (std::size_t c = 0; c < rt.active.size(); ++c) {
            const auto& facs = rt.facs[c];
            off.resize(facs.size());
            for (std::size_t t = 0; t < facs.size(); ++t)
                off[t] = st.loads[facs[t]] - st.sigma[c][t];
            const std::vector<double> target = water_fill(to_double(rt.weight[c]), off);
            for (std::size_t t = 0; t < facs.size(); ++t) {
                const double step = opts.damping * (target[t] - st.sigma[c][t]);
                if (step != 0.0) {
                    st.sigma[c][t] += step;
                    st.loads[facs[t]] += step;
                    max_change = std::max(max_change, std::abs(step));
                }
            }
        }
        ++st.sweeps;
        if (max_change <= tol) {
            st.residual = iter_residual(rt, st, opts.activity_tol);
            if (st.residual <= residual_gate) return st;
        }
    }
    st.residual = iter_residual(rt, st, opts.activity_tol);
    std::ostringstream msg;
    msg << "iterative solver did not converge after " << st.sweeps
        << " sweeps (residual " << st.residual << ")";
    throw SolverError(msg.str(), st.residual);
}

std::vector<std::vector<double>> uniform_start(const ReachTable& rt) {
    std::vector<std::vector<double>> sigma(rt.active.size());
    for (std::size_t c = 0; c < rt.active.size(); ++c)
        sigma[c].assign(rt.facs[c].size(), to_double(rt.weight[c]) / rt.facs[c].size());
    return sigma;
}

// ---------------------------------------------------------------------
// Exact oracle.
// ---------------------------------------------------------------------

struct PatternSolution {
    std::vector<std::vector<Rational>> sigma;  // per active client, aligned with facs
    std::vector<Rational> loads;               // per slot
    std::vector<Rational> lambda;              // per active client
};

// Solves the equilibrium equations restricted to one support pattern and
// checks the optimality conditions. `masks[c]` selects the supported
// positions within rt.facs[c] and must be nonempty.
//
// With ell_j substituted out via (1+d_j) ell_j = sum_{i in supp(j)} lambda_i,
// the client equations |S_i| lambda_i - sum_{j in S_i} ell_j = w_i become a
// system in lambda alone whose matrix is positive definite, so elimination
// cannot fail.
std::optional<PatternSolution> try_pattern(const ReachTable& rt, const std::vector<std::uint32_t>& masks) {
    const int m = static_cast<int>(rt.active.size());
    const int slots = rt.slot_count;

    std::vector<std::vector<int>> supporters(slots);
    for (int c = 0; c < m; ++c)
        for (std::size_t t = 0; t < rt.facs[c].size(); ++t)
            if (masks[c] >> t & 1u) supporters[rt.facs[c][t]].push_back(c);

    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> b(rt.weight.begin(), rt.weight.end());
    for (int c = 0; c < m; ++c) a[c][c] = Rational(__builtin_popcount(masks[c]));
    for (int j = 0; j < slots; ++j) {
        const auto& supp = supporters[j];
        if (supp.empty()) continue;
        const Rational inv(1, static_cast<int>(supp.size()) + 1);
        for (int c : supp)
            for (int c2 : supp) a[c][c2] -= inv;
    }

    std::vector<Rational> lambda;
    if (!solve_linear_system(std::move(a), std::move(b), lambda)) return std::nullopt;

    std::vector<Rational> loads(slots, Rational(0));
    for (int j = 0; j < slots; ++j) {
        const auto& supp = supporters[j];
        if (supp.empty()) continue;
        Rational sum(0);
        for (int c : supp) sum += lambda[c];
        loads[j] = sum / Rational(static_cast<int>(supp.size()) + 1);
    }

    PatternSolution sol;
    sol.sigma.resize(m);
    for (int c = 0; c < m; ++c) {
        const auto& facs = rt.facs[c];
        sol.sigma[c].assign(facs.size(), Rational(0));
        for (std::size_t t = 0; t < facs.size(); ++t) {
            if (masks[c] >> t & 1u) {
                Rational w = lambda[c] - loads[facs[t]];
                if (w < 0) return std::nullopt;
                sol.sigma[c][t] = std::move(w);
            } else if (loads[facs[t]] < lambda[c]) {
                return std::nullopt;
            }
        }
    }
    sol.loads = std::move(loads);
    sol.lambda = std::move(lambda);
    return sol;
}

unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<unsigned long long>::max() / b)
        return std::numeric_limits<unsigned long long>::max();
    return a * b;
}

// Mixed-radix decode of a pattern index: client c contributes a digit in
// [0, 2^{r_c}-2], mapped to the nonempty mask digit+1. Client 0 is the
// least significant digit.
std::vector<std::uint32_t> decode_pattern(const ReachTable& rt, unsigned long long index) {
    std::vector<std::uint32_t> masks(rt.active.size());
    for (std::size_t c = 0; c < rt.active.size(); ++c) {
        const unsigned long long radix = (1ull << rt.facs[c].size()) - 1;
        masks[c] = static_cast<std::uint32_t>(index % radix) + 1;
        index /= radix;
    }
    return masks;
}

struct OracleResult {
    PatternSolution solution;
    long tries = 0;
};

std::optional<OracleResult> scan_patterns_serial(const ReachTable& rt, unsigned long long total,
                                                 long tries_before) {
    for (unsigned long long idx = 0; idx < total; ++idx) {
        auto sol = try_pattern(rt, decode_pattern(rt, idx));
        if (sol) return OracleResult{std::move(*sol), tries_before + static_cast<long>(idx) + 1};
    }
    return std::nullopt;
}

std::optional<OracleResult> scan_patterns_parallel(const ReachTable& rt, unsigned long long total,
                                                   long tries_before, int threads) {
#ifndef _OPENMP
    (void)threads;
    return scan_patterns_serial(rt, total, tries_before);
#else
    // Bounded chunks keep the scan close to the serial visiting order, so
    // an early accepting pattern stops the search after little overshoot.
    const unsigned long long chunk = std::clamp<unsigned long long>(
        total / (static_cast<unsigned long long>(threads) * 64), 256, 32768);
    std::atomic<unsigned long long> best{kNoPattern};
    for (unsigned long long lo = 0; lo < total; lo += chunk) {
        const unsigned long long hi = std::min(total, lo + chunk);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (long long idx = static_cast<long long>(lo); idx < static_cast<long long>(hi); ++idx) {
            const auto u = static_cast<unsigned long long>(idx);
            if (u >= best.load(std::memory_order_relaxed)) continue;
            if (try_pattern(rt, decode_pattern(rt, u))) {
                unsigned long long cur = best.load(std::memory_order_relaxed);
                while (u < cur && !best.compare_exchange_weak(cur, u)) {
                }
            }
        }
        if (best.load() != kNoPattern) break;
    }
    const unsigned long long found = best.load();
    if (found == kNoPattern) return std::nullopt;
    auto sol = try_pattern(rt, decode_pattern(rt, found));
    return OracleResult{std::move(*sol), tries_before + static_cast<long>(found) + 1};
#endif
}

// Support guess from a float solve. Facilities with clearly positive
// weight go into the support; facilities whose load sits within `slack`
// of the client's marginal value are boundary-ambiguous and get
// enumerated both ways.
struct SupportGuess {
    std::vector<std::uint32_t> base;
    std::vector<std::pair<int, int>> ambiguous;  // (client, position)
};

std::optional<SupportGuess> guess_support(const ReachTable& rt, const SolveOptions& opts) {
    IterState st;
    try {
        st = run_sweeps(rt, opts, uniform_start(rt), std::min(opts.tol, 1e-10),
                        std::min(opts.max_rounds, 200000L));
    } catch (const SolverError&) {
        return std::nullopt;
    }
    double scale = 1.0;
    for (double l : st.loads) scale = std::max(scale, l);
    const double slack_tol = 1e-6 * scale;

    SupportGuess guess;
    guess.base.resize(rt.active.size());
    for (std::size_t c = 0; c < rt.active.size(); ++c) {
        const auto& facs = rt.facs[c];
        const double w = to_double(rt.weight[c]);
        const double active_tol = 1e-7 * std::max(1.0, w);
        double lam = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < facs.size(); ++t)
            lam = std::min(lam, st.loads[facs[t]] + st.sigma[c][t]);
        std::uint32_t mask = 0;
        for (std::size_t t = 0; t < facs.size(); ++t) {
            if (st.sigma[c][t] > active_tol)
                mask |= 1u << t;
            else if (st.loads[facs[t]] - lam < slack_tol)
                guess.ambiguous.emplace_back(static_cast<int>(c), static_cast<int>(t));
        }
        guess.base[c] = mask;
    }
    return guess;
}

std::optional<OracleResult> run_guided(const ReachTable& rt, const SolveOptions& opts, long& tries) {
    auto guess = guess_support(rt, opts);
    if (!guess) return std::nullopt;
    if (guess->ambiguous.size() > 12) guess->ambiguous.resize(12);

    const std::uint32_t combos = 1u << guess->ambiguous.size();
    for (std::uint32_t sel = 0; sel < combos; ++sel) {
        std::vector<std::uint32_t> masks = guess->base;
        for (std::size_t b = 0; b < guess->ambiguous.size(); ++b)
            if (sel >> b & 1u) masks[guess->ambiguous[b].first] |= 1u << guess->ambiguous[b].second;
        bool valid = true;
        for (std::size_t c = 0; c < masks.size() && valid; ++c) valid = masks[c] != 0;
        if (!valid) continue;
        ++tries;
        auto sol = try_pattern(rt, masks);
        if (sol) return OracleResult{std::move(*sol), tries};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------
// Report assembly.
// ---------------------------------------------------------------------

EquilibriumReport assemble_report(const Instance& inst, const ReachTable& rt, Method method,
                                  const std::vector<std::vector<Rational>>& sigma_active,
                                  const std::vector<Rational>& lambda_active, double residual,
                                  long iterations) {
    EquilibriumReport rep;
    rep.method = method;
    rep.residual = residual;
    rep.iterations = iterations;
    rep.loads.assign(rt.slot_count, Rational(0));
    rep.sigma.facilities.resize(inst.node_count());
    rep.sigma.weights.resize(inst.node_count());
    rep.lambda.assign(inst.node_count(), Rational(0));
    rep.has_lambda.assign(inst.node_count(), 0);

    for (std::size_t c = 0; c < rt.active.size(); ++c) {
        const int i = rt.active[c];
        rep.sigma.facilities[i] = rt.facs[c];
        rep.sigma.weights[i] = sigma_active[c];
        for (std::size_t t = 0; t < rt.facs[c].size(); ++t)
            rep.loads[rt.facs[c][t]] += sigma_active[c][t];
    }
    for (int i = 0; i < inst.node_count(); ++i) {
        const auto& facs = rt.node_facs[i];
        if (facs.empty()) continue;
        if (rep.sigma.facilities[i].empty()) {
            rep.sigma.facilities[i] = facs;
            rep.sigma.weights[i].assign(facs.size(), Rational(0));
        }
        rep.has_lambda[i] = 1;
        Rational lam = rep.loads[facs[0]] + rep.sigma.weights[i][0];
        for (std::size_t t = 1; t < facs.size(); ++t) {
            const Rational margin = rep.loads[facs[t]] + rep.sigma.weights[i][t];
            if (margin < lam) lam = margin;
        }
        rep.lambda[i] = lam;
    }
    for (std::size_t c = 0; c < rt.active.size(); ++c)
        if (!lambda_active.empty()) rep.lambda[rt.active[c]] = lambda_active[c];
    return rep;
}

}  // namespace

Rational WeightDistribution::get(int client, int facility) const {
    const auto& facs = facilities[client];
    const auto it = std::lower_bound(facs.begin(), facs.end(), facility);
    if (it == facs.end() || *it != facility) return Rational(0);
    return weights[client][static_cast<std::size_t>(it - facs.begin())];
}

std::vector<Rational> best_response(const Rational& w, const std::vector<Rational>& offloads) {
    return water_fill(w, offloads);
}

std::vector<double> best_response(double w, const std::vector<double>& offloads) {
    return water_fill(w, offloads);
}

EquilibriumReport solve_iterative(const Instance& inst, const Placement& s,
                                  const SolveOptions& opts, const WeightDistribution* start) {
    if (opts.tol <= 0) throw InputError("tolerance must be positive");
    if (opts.damping <= 0 || opts.damping > 1) throw InputError("damping must be in (0,1]");
    const ReachTable rt = build_reach(inst, s);

    std::vector<std::vector<double>> init;
    if (start) {
        init.resize(rt.active.size());
        for (std::size_t c = 0; c < rt.active.size(); ++c) {
            init[c].resize(rt.facs[c].size());
            for (std::size_t t = 0; t < rt.facs[c].size(); ++t)
                init[c][t] = to_double(start->get(rt.active[c], rt.facs[c][t]));
        }
    } else {
        init = uniform_start(rt);
    }

    IterState st;
    if (!rt.active.empty()) st = run_sweeps(rt, opts, init, opts.tol, opts.max_rounds);

    std::vector<std::vector<Rational>> sigma(rt.active.size());
    for (std::size_t c = 0; c < rt.active.size(); ++c) {
        sigma[c].resize(rt.facs[c].size());
        // Exact feasibility: the largest entry absorbs the float rounding gap.
        Rational sum(0);
        std::size_t arg_max = 0;
        for (std::size_t t = 0; t < rt.facs[c].size(); ++t) {
            sigma[c][t] = rational_from_double(std::max(0.0, st.sigma[c][t]));
            sum += sigma[c][t];
            if (st.sigma[c][t] > st.sigma[c][arg_max]) arg_max = t;
        }
        sigma[c][arg_max] += rt.weight[c] - sum;
    }

    EquilibriumReport rep = assemble_report(inst, rt, Method::Iterative, sigma, {}, 0.0, st.sweeps);
    rep.residual = to_double(equilibrium_residual(inst, s, rep.sigma, opts.activity_tol));
    return rep;
}

EquilibriumReport solve_exact(const Instance& inst, const Placement& s, const SolveOptions& opts) {
    const ReachTable rt = build_reach(inst, s);
    if (rt.active.empty()) return assemble_report(inst, rt, Method::Exact, {}, {}, 0.0, 0);

    long tries = 0;
    std::optional<OracleResult> result;
    if (opts.guided) result = run_guided(rt, opts, tries);

    if (!result) {
        unsigned long long total = 1;
        for (const auto& facs : rt.facs)
            total = saturating_mul(total, (1ull << facs.size()) - 1);
        if (total > opts.support_budget) {
            std::ostringstream msg;
            msg << "support budget exceeded: " << total << " patterns > " << opts.support_budget;
            throw BudgetError(msg.str());
        }
        result = resolve_threads(opts.threads) > 1
                     ? scan_patterns_parallel(rt, total, tries, resolve_threads(opts.threads))
                     : scan_patterns_serial(rt, total, tries);
    }
    if (!result) throw std::logic_error("exact oracle: no support pattern accepted");

    return assemble_report(inst, rt, Method::Exact, result->solution.sigma,
                           result->solution.lambda, 0.0, result->tries);
}

EquilibriumReport solve_min(const Instance& inst, const Placement& s, const SolveOptions& opts) {
    switch (opts.method) {
        case Method::Exact:
            return solve_exact(inst, s, opts);
        case Method::Iterative:
            return solve_iterative(inst, s, opts);
        case Method::Auto:
            try {
                return solve_exact(inst, s, opts);
            } catch (const BudgetError&) {
                return solve_iterative(inst, s, opts);
            }
    }
    throw std::logic_error("unreachable");
}

Rational equilibrium_residual(const Instance& inst, const Placement& s,
                              const WeightDistribution& sigma, double activity_tol) {
    if (sigma.client_count() != inst.node_count())
        throw InputError("distribution has wrong client count");
    std::vector<Rational> loads(s.size(), Rational(0));
    for (int i = 0; i < inst.node_count(); ++i) {
        const auto& facs = sigma.facilities[i];
        Rational sum(0);
        for (std::size_t t = 0; t < facs.size(); ++t) {
            const int j = facs[t];
            if (j < 0 || j >= static_cast<int>(s.size()) || !in_shopping_range(inst, i, s[j]))
                throw InputError("distribution entry outside shopping range");
            if (sigma.weights[i][t] < 0) throw InputError("negative distribution entry");
            loads[j] += sigma.weights[i][t];
            sum += sigma.weights[i][t];
        }
        const Rational gap = sum - inst.weight(i);
        if (facs.empty()) {
            if (!reachable_facilities(inst, s, i).empty() && inst.weight(i) > 0)
                throw InputError("covered client with empty distribution row");
        } else if (abs(gap) > rational_from_double(1e-9) * std::max(Rational(1), inst.weight(i))) {
            throw InputError("distribution row does not sum to the client weight");
        }
    }

    const Rational act = rational_from_double(activity_tol);
    Rational residual(0);
    for (int i = 0; i < inst.node_count(); ++i) {
        const auto& facs = sigma.facilities[i];
        if (facs.size() < 2) continue;
        Rational lo = loads[facs[0]] + sigma.weights[i][0];
        bool any_active = false;
        Rational hi(0);
        for (std::size_t t = 0; t < facs.size(); ++t) {
            const Rational margin = loads[facs[t]] + sigma.weights[i][t];
            lo = std::min(lo, margin);
            if (sigma.weights[i][t] > act && (!any_active || margin > hi)) {
                hi = margin;
                any_active = true;
            }
        }
        if (any_active && hi - lo > residual) residual = hi - lo;
    }
    return residual;
}

Rational client_cost(const Instance& inst, const Placement& s, const WeightDistribution& sigma,
                     int client) {
    if (client < 0 || client >= inst.node_count()) throw InputError("unknown client");
    std::vector<Rational> loads(s.size(), Rational(0));
    for (int i = 0; i < inst.node_count(); ++i)
        for (std::size_t t = 0; t < sigma.facilities[i].size(); ++t)
            loads[sigma.facilities[i][t]] += sigma.weights[i][t];
    Rational cost(0);
    for (std::size_t t = 0; t < sigma.facilities[client].size(); ++t)
        cost += sigma.weights[client][t] * loads[sigma.facilities[client][t]];
    return cost;
}

WeightDistribution random_feasible_distribution(const Instance& inst, const Placement& s,
                                                unsigned long long seed) {
    std::mt19937_64 rng(seed);
    const auto next_unit = [&rng]() { return ((rng() >> 11) + 1.0) * 0x1.0p-53; };

    WeightDistribution sigma;
    sigma.facilities.resize(inst.node_count());
    sigma.weights.resize(inst.node_count());
    for (int i = 0; i < inst.node_count(); ++i) {
        const auto facs = reachable_facilities(inst, s, i);
        if (facs.empty()) continue;
        sigma.facilities[i] = facs;
        sigma.weights[i].assign(facs.size(), Rational(0));
        if (inst.weight(i) == 0) continue;
        std::vector<double> shares(facs.size());
        double total = 0.0;
        for (auto& sh : shares) {
            sh = next_unit();
            total += sh;
        }
        Rational remaining = inst.weight(i);
        for (std::size_t t = 0; t + 1 < facs.size(); ++t) {
            Rational part = rational_from_double(shares[t] / total) * inst.weight(i);
            part = std::min(std::max(part, Rational(0)), remaining);
            sigma.weights[i][t] = part;
            remaining -= part;
        }
        sigma.weights[i].back() = remaining;
    }
    return sigma;
}

bool solve_linear_system(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                         std::vector<Rational>& x) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            a[r][col] = 0;
            for (int c = col + 1; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, Rational(0));
    for (int r = n - 1; r >= 0; --r) {
        Rational sum = std::move(b[r]);
        for (int c = r + 1; c < n; ++c) sum -= a[r][c] * x[c];
        x[r] = sum / a[r][r];
    }
    return true;
}

}  // namespace flg
