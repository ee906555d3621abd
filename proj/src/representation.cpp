#include "dslv/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dslv {

namespace {

constexpr double kRealnessTol = 1e-9;

void require_nondegenerate(const RootPair& roots) {
    if (roots.degenerate)
        fail(ErrorKind::degenerate, "degenerate discriminant: lambda(lambda-4) = 0 at lambda = " +
                                        std::to_string(roots.lambda));
}

// Marches the representation with the given leading constants. Each step:
//   z(n) = (A - S-(n-1)/√d) ρ+^n + (B + S+(n-1)/√d) ρ-^n,
// where S±(n-1) are the sums over i < n; the i = n summands are formed
// explicitly and checked to cancel.
LatticeFunction<double> march_representation(const LatticeFunction<double>& q, const RootPair& roots,
                                             const LeadingConstants& lead, Index N) {
    if (N < 1) fail(ErrorKind::invalid_argument, "representation horizon N must be at least 1");
    require_range(q.contains(0) && q.contains(N), "representation: potential must cover [0, N]");

    const Complex s = roots.sqrt_disc;
    Complex pow_plus{1.0, 0.0};
    Complex pow_minus{1.0, 0.0};
    Complex sum_minus{}; // Σ_{i<n} q(i) x(i) ρ-^i
    Complex sum_plus{};  // Σ_{i<n} q(i) x(i) ρ+^i
    std::vector<double> out(static_cast<std::size_t>(N + 1));

    for (Index n = 0; n <= N; ++n) {
        const Complex term_plus = (lead.plus - sum_minus / s) * pow_plus;
        const Complex term_minus = (lead.minus + sum_plus / s) * pow_minus;
        const Complex z = term_plus + term_minus;
        const double scale = 1.0 + std::abs(term_plus) + std::abs(term_minus);
        if (!(std::abs(z.imag()) <= kRealnessTol * scale))
            fail(ErrorKind::numeric, "representation lost realness at n = " + std::to_string(n));
        const double xn = z.real();

        const double forcing = q[n] * xn;
        const Complex diag_minus = -(forcing * pow_minus / s) * pow_plus;
        const Complex diag_plus = (forcing * pow_plus / s) * pow_minus;
        const double diag_scale = std::abs(diag_minus) + std::abs(diag_plus);
        if (std::abs(diag_minus + diag_plus) > 64.0 * std::numeric_limits<double>::epsilon() * diag_scale)
            fail(ErrorKind::numeric, "i = n summands failed to cancel at n = " + std::to_string(n));

        out[static_cast<std::size_t>(n)] = xn;
        sum_minus += forcing * pow_minus;
        sum_plus += forcing * pow_plus;
        pow_plus *= roots.root_plus;
        pow_minus *= roots.root_minus;
    }
    return LatticeFunction<double>(0, std::move(out));
}

} // namespace

RootPair characteristic_roots(double lambda) {
    RootPair rp;
    rp.lambda = lambda;
    const double disc = lambda * (lambda - 4.0);
    // +0.0 imaginary part pins the principal branch to +i√|d| for d < 0.
    rp.sqrt_disc = std::sqrt(Complex(disc, 0.0));
    rp.root_plus = (Complex(2.0 - lambda, 0.0) + rp.sqrt_disc) / 2.0;
    rp.root_minus = (Complex(2.0 - lambda, 0.0) - rp.sqrt_disc) / 2.0;
    rp.degenerate = std::abs(disc) < 1e-14;
    rp.outside_disc = std::abs(lambda - 2.0) >= 2.0;
    return rp;
}

LeadingConstants leading_constants_x(const RootPair& roots, double q0, double h) {
    require_nondegenerate(roots);
    const Complex s = roots.sqrt_disc;
    const double lam = roots.lambda;
    return {(2.0 - h * (2.0 * q0 - 2.0 + lam + s)) / (2.0 * s), (-2.0 + h * (2.0 * q0 - 2.0 + lam - s)) / (2.0 * s)};
}

LeadingConstants leading_constants_y(const RootPair& roots, double q0) {
    require_nondegenerate(roots);
    const Complex s = roots.sqrt_disc;
    const double lam = roots.lambda;
    // The q(0) shift must cancel the i = 0 summand -q(0) y(0) (ρ+^n - ρ-^n)/√d,
    // so it enters as +2q(0) on the ρ+ constant and -2q(0) on the ρ- constant.
    // The opposite sign gives y(1) = -2q(0) instead of 0.
    return {(-2.0 + lam + s + 2.0 * q0) / (2.0 * s), (2.0 - lam + s - 2.0 * q0) / (2.0 * s)};
}

LatticeFunction<double> representation_x(const LatticeFunction<double>& q, double h, double lambda, Index N) {
    const RootPair roots = characteristic_roots(lambda);
    require_nondegenerate(roots);
    require_range(q.contains(0), "representation: potential must cover [0, N]");
    return march_representation(q, roots, leading_constants_x(roots, q[0], h), N);
}

LatticeFunction<double> representation_y(const LatticeFunction<double>& q, double lambda, Index N) {
    const RootPair roots = characteristic_roots(lambda);
    require_nondegenerate(roots);
    require_range(q.contains(0), "representation: potential must cover [0, N]");
    return march_representation(q, roots, leading_constants_y(roots, q[0]), N);
}

VariationCoefficients variation_coefficients(const LatticeFunction<double>& q, const LatticeFunction<double>& x,
                                             double lambda, Index n) {
    const RootPair roots = characteristic_roots(lambda);
    require_nondegenerate(roots);
    if (n < -1) fail(ErrorKind::invalid_argument, "variation_coefficients requires n >= -1");
    if (n >= 0) {
        require_range(q.contains(0) && q.contains(n) && x.contains(0) && x.contains(n),
                      "variation_coefficients: q and x must cover [0, n]");
    }
    const Complex casoratian = -roots.sqrt_disc;
    const auto len = static_cast<std::size_t>(n + 2);
    std::vector<Complex> c1(len), c2(len), cm(len), cp(len);
    Complex pow_plus{1.0, 0.0};
    Complex pow_minus{1.0, 0.0};
    for (Index i = 0; i <= n; ++i) {
        const auto k = static_cast<std::size_t>(i + 1);
        const double forcing = q[i] * x[i];
        cm[k] = cm[k - 1] + forcing * pow_minus;
        cp[k] = cp[k - 1] + forcing * pow_plus;
        c1[k] = cm[k] / casoratian;
        c2[k] = -cp[k] / casoratian;
        pow_plus *= roots.root_plus;
        pow_minus *= roots.root_minus;
    }
    return {LatticeFunction<Complex>(-1, std::move(c1)), LatticeFunction<Complex>(-1, std::move(c2)),
            LatticeFunction<Complex>(-1, std::move(cm)), LatticeFunction<Complex>(-1, std::move(cp))};
}

double residual_check(const LatticeFunction<double>& x, const LatticeFunction<double>& q, double lambda) {
    const Index lo = x.first() + 1;
    const Index hi = x.last() - 1;
    if (lo > hi) fail(ErrorKind::invalid_argument, "residual_check: x needs at least three points");
    require_range(q.contains(lo) && q.contains(hi), "residual_check: q must cover the interior of x");
    double worst = 0.0;
    for (Index n = lo; n <= hi; ++n) {
        const double res = x[n + 1] - 2.0 * x[n] + x[n - 1] + (q[n] + lambda) * x[n];
        const double scale = 1.0 + std::max({std::abs(x[n - 1]), std::abs(x[n]), std::abs(x[n + 1])});
        worst = std::max(worst, std::abs(res) / scale);
    }
    return worst;
}

} // namespace dslv
