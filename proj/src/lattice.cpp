#include "dslv/lattice.hpp"

#include <cmath>
#include <numbers>

namespace dslv {

double alpha_to_h(double alpha, double p_a) {
    if (!(alpha > 0.0 && alpha < std::numbers::pi))
        fail(ErrorKind::invalid_argument, "alpha must lie in (0, pi)");
    if (!(p_a > 0.0)) fail(ErrorKind::invalid_argument, "p(a) must be positive");
    if (alpha < 1e-12 || std::numbers::pi - alpha < 1e-12)
        fail(ErrorKind::invalid_argument, "alpha too close to 0 or pi: cot(alpha) is unbounded");
    return std::cos(alpha) / std::sin(alpha) / p_a - 1.0;
}

void GridSpec::validate() const {
    if (a > b) fail(ErrorKind::invalid_argument, "grid requires a <= b");
    if (a < 0) fail(ErrorKind::invalid_argument, "grid requires a >= 0");
}

Coefficients Coefficients::unit_weights(LatticeFunction<double> q) {
    const auto n = q.size();
    LatticeFunction<double> p(q.first() - 1, std::vector<double>(n + 1, 1.0));
    LatticeFunction<double> r(q.first(), std::vector<double>(n, 1.0));
    return Coefficients{std::move(p), std::move(q), std::move(r)};
}

void ProblemSpec::validate() const {
    grid.validate();
    const auto& [p, q, r] = coeff;
    if (q.first() != grid.a || r.first() != grid.a || p.first() != grid.a - 1)
        fail(ErrorKind::invalid_argument, "coefficient ranges must start at a (q, r) and a-1 (p)");
    if (q.last() < grid.b || r.last() != q.last() || p.last() != q.last())
        fail(ErrorKind::invalid_argument, "coefficient ranges must share an end point at or beyond b");
    for (double v : p.values())
        if (!(v > 0.0)) fail(ErrorKind::invalid_argument, "p(n) must be positive");
    for (double v : r.values())
        if (!(v > 0.0)) fail(ErrorKind::invalid_argument, "r(n) must be positive");
    for (double v : q.values())
        if (!std::isfinite(v)) fail(ErrorKind::invalid_argument, "q(n) must be finite");
    if (!std::isfinite(boundary.h) || !std::isfinite(boundary.k))
        fail(ErrorKind::invalid_argument, "boundary parameters must be finite");
    if (boundary.alpha) {
        const double expected = alpha_to_h(*boundary.alpha, p[grid.a]);
        if (std::abs(boundary.h - expected) > 1e-12 * std::max(1.0, std::abs(expected)))
            fail(ErrorKind::invalid_argument, "h is inconsistent with alpha: expected cot(alpha)/p(a) - 1");
    }
}

ProblemSpec ProblemSpec::with_potential(Index a, Index b, std::vector<double> q, double h, double k) {
    ProblemSpec spec{GridSpec{a, b}, Coefficients::unit_weights(LatticeFunction<double>(a, std::move(q))),
                     BoundaryData{h, k, std::nullopt}};
    spec.validate();
    return spec;
}

} // namespace dslv
