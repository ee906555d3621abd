#pragma once

/**
 * @file representation.hpp
 * @brief Variation-of-parameters representations for p ≡ r ≡ 1.
 *
 * With p ≡ r ≡ 1 the equation reads x(n+1) - 2x(n) + x(n-1) + (q(n) + λ) x(n) = 0.
 * The homogeneous part (q ≡ 0) is solved by x1(n) = ρ+^n and x2(n) = ρ-^n where
 * ρ± = (2 - λ ± √(λ(λ-4)))/2, and their Casoratian is the constant -√(λ(λ-4)).
 * Treating -q(n)x(n) as a forcing gives
 *
 *   x(n) = A x1(n) + B x2(n) - Σ_{i=0}^{n} q(i)x(i)x2(i)/√d · x1(n) + Σ_{i=0}^{n} q(i)x(i)x1(i)/√d · x2(n)
 *
 * with d = λ(λ-4). The two i = n summands cancel, so x(n) only depends on
 * x(0..n-1) and the identity can be evaluated by forward marching.
 *
 * Indices follow the x(0), x(1) convention: representations live on [0, N]
 * and the potential must be given on [0, N].
 */

#include "dslv/lattice.hpp"

namespace dslv {

struct RootPair {
    double lambda = 0.0;
    Complex sqrt_disc;  ///< principal √(λ(λ-4))
    Complex root_plus;  ///< (2 - λ + √(λ(λ-4)))/2
    Complex root_minus; ///< (2 - λ - √(λ(λ-4)))/2
    bool degenerate = false;   ///< |λ(λ-4)| < 1e-14: double root, Casoratian vanishes
    bool outside_disc = false; ///< |λ - 2| >= 2: roots are real and not unimodular
};

RootPair characteristic_roots(double lambda);

/// Coefficients of x1(n) and x2(n) in the closed-form homogeneous part.
struct LeadingConstants {
    Complex plus;
    Complex minus;
};

/// Constants for the initial data x(0) = -h, x(1) = 1.
LeadingConstants leading_constants_x(const RootPair& roots, double q0, double h);
/// Constants for the initial data y(0) = 1, y(1) = 0.
LeadingConstants leading_constants_y(const RootPair& roots, double q0);

LatticeFunction<double> representation_x(const LatticeFunction<double>& q, double h, double lambda, Index N);
LatticeFunction<double> representation_y(const LatticeFunction<double>& q, double lambda, Index N);

/// Running variation coefficients. c1, c2 and the cumulative sums live on [-1, n];
/// index -1 holds the empty sum.
struct VariationCoefficients {
    LatticeFunction<Complex> c1;
    LatticeFunction<Complex> c2;
    LatticeFunction<Complex> cum_minus; ///< Σ_{i=0}^{n} q(i) x(i) ρ-^i  (drives c1)
    LatticeFunction<Complex> cum_plus;  ///< Σ_{i=0}^{n} q(i) x(i) ρ+^i  (drives c2)
};

/// c1(n) = Σ q(i)x(i)x2(i)/W, c2(n) = -Σ q(i)x(i)x1(i)/W with W = -√(λ(λ-4)).
VariationCoefficients variation_coefficients(const LatticeFunction<double>& q, const LatticeFunction<double>& x,
                                             double lambda, Index n);

/// max over interior n of |x(n+1) - 2x(n) + x(n-1) + (q(n)+λ)x(n)| / (1 + max local |x|).
double residual_check(const LatticeFunction<double>& x, const LatticeFunction<double>& q, double lambda);

} // namespace dslv
