#pragma once

/**
 * @file lattice.hpp
 * @brief Lattice functions, problem data and the elementary difference calculus.
 *
 * The problem being modelled is the self-adjoint second-order difference equation
 *
 *   Δ(p(n-1) Δx(n-1)) + q(n) x(n) + λ r(n) x(n) = 0,   n = a, ..., b
 *   x(a-1) + h x(a) = 0,   x(b+1) + k x(b) = 0
 *
 * with Δx(n) = x(n+1) - x(n). All index arithmetic is on exact integers; a
 * LatticeFunction stores a dense run of values starting at an arbitrary index.
 */

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dslv/error.hpp"

namespace dslv {

using Index = std::int64_t;
using Complex = std::complex<double>;

/// Dense sequence x(start), x(start+1), ..., x(start+size-1).
template <typename T>
class LatticeFunction {
public:
    using value_type = T;

    LatticeFunction(Index start, std::vector<T> values) : start_(start), values_(std::move(values)) {
        if (values_.empty()) fail(ErrorKind::invalid_argument, "lattice function must be non-empty");
    }

    Index first() const noexcept { return start_; }
    Index last() const noexcept { return start_ + static_cast<Index>(values_.size()) - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    bool contains(Index n) const noexcept { return n >= first() && n <= last(); }

    const T& at(Index n) const {
        if (!contains(n)) {
            fail(ErrorKind::index_out_of_range, "index " + std::to_string(n) + " outside [" +
                                                    std::to_string(first()) + ", " + std::to_string(last()) + "]");
        }
        return values_[static_cast<std::size_t>(n - start_)];
    }
    T& at(Index n) { return const_cast<T&>(std::as_const(*this).at(n)); }

    // Unchecked access for hot loops that already validated the range.
    const T& operator[](Index n) const noexcept { return values_[static_cast<std::size_t>(n - start_)]; }
    T& operator[](Index n) noexcept { return values_[static_cast<std::size_t>(n - start_)]; }

    std::span<const T> values() const noexcept { return values_; }
    std::vector<T>& storage() noexcept { return values_; }

    bool operator==(const LatticeFunction&) const = default;

private:
    Index start_;
    std::vector<T> values_;
};

inline void require_range(bool ok, const char* what) {
    if (!ok) fail(ErrorKind::index_out_of_range, what);
}

/// Δf(n) = f(n+1) - f(n)
template <typename T>
T diff_forward(const LatticeFunction<T>& f, Index n) {
    require_range(f.contains(n) && f.contains(n + 1), "diff_forward: n and n+1 must lie in the index range");
    return f[n + 1] - f[n];
}

/// ∇f(n) = f(n) - f(n-1)
template <typename T>
T diff_backward(const LatticeFunction<T>& f, Index n) {
    require_range(f.contains(n - 1) && f.contains(n), "diff_backward: n-1 and n must lie in the index range");
    return f[n] - f[n - 1];
}

/// Σ_{k=m}^{n-1} x(k) Δy(k), summed directly.
template <typename T>
T sum_x_delta_y(const LatticeFunction<T>& x, const LatticeFunction<T>& y, Index m, Index n) {
    if (m >= n) fail(ErrorKind::invalid_argument, "summation by parts requires m < n");
    require_range(x.contains(m) && x.contains(n) && y.contains(m) && y.contains(n),
                  "summation by parts: [m, n] must lie in both index ranges");
    T sum{};
    for (Index k = m; k < n; ++k) sum += x[k] * (y[k + 1] - y[k]);
    return sum;
}

/// [x(k)y(k)]_m^n - Σ_{k=m}^{n-1} Δx(k) y(k+1); equal to sum_x_delta_y in exact arithmetic.
template <typename T>
T sum_by_parts_rhs(const LatticeFunction<T>& x, const LatticeFunction<T>& y, Index m, Index n) {
    if (m >= n) fail(ErrorKind::invalid_argument, "summation by parts requires m < n");
    require_range(x.contains(m) && x.contains(n) && y.contains(m) && y.contains(n),
                  "summation by parts: [m, n] must lie in both index ranges");
    T tail{};
    for (Index k = m; k < n; ++k) tail += (x[k + 1] - x[k]) * y[k + 1];
    return (x[n] * y[n] - x[m] * y[m]) - tail;
}

/// Σ_{k=m}^{n-1} Δx(k); the empty sum (m == n) is zero.
template <typename T>
T telescoping_sum(const LatticeFunction<T>& x, Index m, Index n) {
    if (m > n) fail(ErrorKind::invalid_argument, "telescoping_sum requires m <= n");
    require_range(x.contains(m) && x.contains(n), "telescoping_sum: [m, n] must lie in the index range");
    T sum{};
    for (Index k = m; k < n; ++k) sum += x[k + 1] - x[k];
    return sum;
}

/// Σ_{n=a}^{b} r(n) x(n) y(n). No conjugation: the lattice inner product is bilinear.
template <typename T>
T weighted_inner_product(const LatticeFunction<T>& x, const LatticeFunction<T>& y, const LatticeFunction<double>& r,
                         Index a, Index b) {
    if (a > b) fail(ErrorKind::invalid_argument, "weighted_inner_product requires a <= b");
    require_range(x.contains(a) && x.contains(b) && y.contains(a) && y.contains(b) && r.contains(a) && r.contains(b),
                  "weighted_inner_product: [a, b] must lie in every index range");
    T sum{};
    for (Index n = a; n <= b; ++n) sum += static_cast<T>(r[n]) * x[n] * y[n];
    return sum;
}

/// Casoratian W[y,z](n) = -p(n-1) [y(n) z(n-1) - y(n-1) z(n)].
template <typename T>
T casoratian(const LatticeFunction<T>& y, const LatticeFunction<T>& z, Index n, const LatticeFunction<double>& p) {
    require_range(y.contains(n - 1) && y.contains(n) && z.contains(n - 1) && z.contains(n) && p.contains(n - 1),
                  "casoratian: n-1 and n must lie in both ranges and p(n-1) must be defined");
    return -static_cast<T>(p[n - 1]) * (y[n] * z[n - 1] - y[n - 1] * z[n]);
}

/// h = cot(alpha)/p(a) - 1, converting the angle form of the left boundary condition.
double alpha_to_h(double alpha, double p_a);

struct GridSpec {
    Index a = 1;
    Index b = 1;

    Index size() const noexcept { return b - a + 1; }
    void validate() const;
};

/// Coefficient arrays. p lives on [a-1, end], q and r on [a, end] with end >= b;
/// storage past b only serves recurrences marched beyond the boundary point.
struct Coefficients {
    LatticeFunction<double> p;
    LatticeFunction<double> q;
    LatticeFunction<double> r;

    /// p ≡ 1, r ≡ 1 over the ranges implied by q.
    static Coefficients unit_weights(LatticeFunction<double> q);
};

struct BoundaryData {
    double h = 0.0;
    double k = 0.0;
    std::optional<double> alpha;
};

struct ProblemSpec {
    GridSpec grid;
    Coefficients coeff;
    BoundaryData boundary;

    /// Last index n for which the marching rule has coefficients, i.e. x can be produced up to last_marchable()+1.
    Index last_marchable() const noexcept { return coeff.q.last(); }

    void validate() const;

    /// p ≡ r ≡ 1 problem on [a, b] with the given potential on [a, b].
    static ProblemSpec with_potential(Index a, Index b, std::vector<double> q, double h, double k);
};

} // namespace dslv
