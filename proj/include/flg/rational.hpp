#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace flg {

// All game quantities (weights, loads, potentials) are exact rationals.
using Rational = mpq_class;

/// Parses "p/q", integer, or decimal literals (with optional exponent,
/// e.g. "3", "-7/2", "0.25", "1e-3") into an exact rational.
/// Throws InputError on anything else.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& value);

/// Nearest double; used only for reporting and screening, never for
/// exact-mode decisions.
double to_double(const Rational& value);

/// Exact conversion of a (dyadic) double.
Rational rational_from_double(double value);

/// Harmonic numbers H_0..H_n as exact rationals (H_0 = 0).
std::vector<Rational> harmonic_prefix(int n);

}  // namespace flg
