#pragma once

#include <string>
#include <vector>

#include "flg/generators.hpp"
#include "flg/instance.hpp"
#include "flg/rational.hpp"
#include "flg/solver.hpp"

namespace flg::test {

inline Rational rat(const std::string& text) { return parse_rational(text); }

// Canonicalized fraction from possibly non-coprime parts.
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Placement place(const Instance& inst, const std::vector<std::string>& ids) {
    Placement s;
    for (const auto& id : ids) s.push_back(inst.node_index(id));
    return s;
}

// Independent uniform payoff: aggregates per client over reachable
// facilities instead of per facility over attraction ranges.
inline Rational uniform_payoff_direct(const Instance& inst, const Placement& s, int facility) {
    Rational total(0);
    for (int i = 0; i < inst.node_count(); ++i) {
        const auto facs = reachable_facilities(inst, s, i);
        for (int j : facs)
            if (j == facility) {
                total += inst.weight(i) / Rational(static_cast<int>(facs.size()));
                break;
            }
    }
    return total;
}

// Random instance that always has at least some coverage structure.
inline Instance random_instance(int max_nodes, int max_k, unsigned long long seed) {
    const int n = 2 + static_cast<int>(seed % static_cast<unsigned long long>(max_nodes - 1));
    const int k = 1 + static_cast<int>((seed / 7) % static_cast<unsigned long long>(max_k));
    const double p = 0.15 + 0.35 * static_cast<double>((seed / 3) % 3);
    return gen_random(n, p, 4, k, seed * 2654435761ull + 17);
}

inline Placement random_placement(const Instance& inst, unsigned long long seed) {
    Placement s(inst.facility_count());
    unsigned long long x = seed * 6364136223846793005ull + 1442695040888963407ull;
    for (auto& loc : s) {
        x ^= x >> 27;
        x *= 0x2545f4914f6cdd1dull;
        x ^= x >> 33;
        loc = static_cast<int>(x % static_cast<unsigned long long>(inst.node_count()));
    }
    return s;
}

}  // namespace flg::test
