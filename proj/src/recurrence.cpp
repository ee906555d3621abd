#include "dslv/recurrence.hpp"

#include <algorithm>
#include <cmath>

namespace dslv {

std::array<double, 2> initial_values(InitKind kind, double h) {
    switch (kind) {
    case InitKind::x: return {-h, 1.0};
    case InitKind::y: return {1.0, 0.0};
    case InitKind::s: return {0.0, 1.0};
    }
    fail(ErrorKind::invalid_argument, "unknown initial data kind");
}

template <typename T>
LatticeFunction<T> forward_recurrence(const ProblemSpec& problem, double lambda, std::array<T, 2> init,
                                      std::optional<Index> horizon) {
    problem.validate();
    const Index a = problem.grid.a;
    const Index stop = horizon.value_or(problem.grid.b + 1);
    if (stop < problem.grid.b + 1) fail(ErrorKind::invalid_argument, "horizon must be at least b+1");
    if (stop - 1 > problem.last_marchable())
        fail(ErrorKind::invalid_argument, "coefficients do not cover [a, horizon-1]");

    const auto& [p, q, r] = problem.coeff;
    std::vector<T> out(static_cast<std::size_t>(stop - a + 2));
    out[0] = init[0];
    out[1] = init[1];
    // out[i] holds x(a - 1 + i)
    for (Index n = a; n < stop; ++n) {
        const auto i = static_cast<std::size_t>(n - a + 1);
        const double centre = p[n] + p[n - 1] - q[n] - lambda * r[n];
        out[i + 1] = (centre * out[i] - p[n - 1] * out[i - 1]) / p[n];
    }
    return LatticeFunction<T>(a - 1, std::move(out));
}

template LatticeFunction<double> forward_recurrence<double>(const ProblemSpec&, double, std::array<double, 2>,
                                                            std::optional<Index>);
template LatticeFunction<Complex> forward_recurrence<Complex>(const ProblemSpec&, double, std::array<Complex, 2>,
                                                              std::optional<Index>);

double recurrence_residual(const ProblemSpec& problem, double lambda, const LatticeFunction<double>& x) {
    const auto& [p, q, r] = problem.coeff;
    const Index lo = std::max(x.first() + 1, q.first());
    const Index hi = std::min(x.last() - 1, q.last());
    if (lo > hi) fail(ErrorKind::invalid_argument, "recurrence_residual: no interior point with coefficients");
    double worst = 0.0;
    for (Index n = lo; n <= hi; ++n) {
        const double centre = p[n] + p[n - 1] - q[n] - lambda * r[n];
        const double res = p[n] * x[n + 1] - centre * x[n] + p[n - 1] * x[n - 1];
        const double scale = 1.0 + std::max({std::abs(x[n - 1]), std::abs(x[n]), std::abs(x[n + 1])});
        worst = std::max(worst, std::abs(res) / scale);
    }
    return worst;
}

} // namespace dslv
