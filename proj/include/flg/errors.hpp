#pragma once

#include <stdexcept>
#include <string>

namespace flg {

/// Invalid user input: malformed files, bad parameters, exceeded budgets.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or search budget was exhausted before completion.
class BudgetError : public InputError {
public:
    explicit BudgetError(const std::string& what) : InputError(what) {}
};

/// A solver failed to produce a certified result (e.g. non-convergence).
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

}  // namespace flg
