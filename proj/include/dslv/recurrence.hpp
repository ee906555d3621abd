#pragma once

#include <array>
#include <optional>

#include "dslv/lattice.hpp"

namespace dslv {

/// Named initial data at (a-1, a).
enum class InitKind {
    x, ///< (-h, 1): satisfies x(a-1) + h x(a) = 0 for every scaling
    y, ///< (1, 0)
    s  ///< (0, 1)
};

std::array<double, 2> initial_values(InitKind kind, double h);

/// Marches p(n) x(n+1) = (p(n) + p(n-1) - q(n) - λ r(n)) x(n) - p(n-1) x(n-1)
/// from the values at (a-1, a) up to `horizon` (default b+1). The coefficient
/// arrays must cover [a, horizon-1].
template <typename T>
LatticeFunction<T> forward_recurrence(const ProblemSpec& problem, double lambda, std::array<T, 2> init,
                                      std::optional<Index> horizon = std::nullopt);

inline LatticeFunction<double> forward_recurrence(const ProblemSpec& problem, double lambda, InitKind kind,
                                                  std::optional<Index> horizon = std::nullopt) {
    return forward_recurrence<double>(problem, lambda, initial_values(kind, problem.boundary.h), horizon);
}

/// max_n |p(n)x(n+1) - (p(n)+p(n-1)-q(n)-λr(n))x(n) + p(n-1)x(n-1)| / (1 + max local |x|)
/// over the interior points of x that have coefficients.
double recurrence_residual(const ProblemSpec& problem, double lambda, const LatticeFunction<double>& x);

} // namespace dslv
