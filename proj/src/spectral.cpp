#include "dslv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dslv/recurrence.hpp"

namespace dslv {

namespace {

constexpr double kPivotFloor = 1e-300;
constexpr std::size_t kInitialGridFactor = 8;
constexpr std::size_t kMaxGridFactor = std::size_t{1} << 14;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Sign of φ(λ); the solution is rescaled by positive factors whenever it gets
// large, which leaves the sign intact and avoids overflow for long grids.
int characteristic_sign(const ProblemSpec& problem, double lambda) {
    const auto& [p, q, r] = problem.coeff;
    const Index a = problem.grid.a;
    const Index b = problem.grid.b;
    double prev = -problem.boundary.h;
    double cur = 1.0;
    for (Index n = a; n <= b; ++n) {
        const double centre = p[n] + p[n - 1] - q[n] - lambda * r[n];
        const double next = (centre * cur - p[n - 1] * prev) / p[n];
        prev = cur;
        cur = next;
        const double mag = std::max(std::abs(prev), std::abs(cur));
        if (mag > 1e150) {
            prev /= mag;
            cur /= mag;
        }
    }
    return sign_of(cur + problem.boundary.k * prev);
}

// Moves lambda onto the nearest sign change of φ, bisected down to adjacent
// doubles. A bracket-width tolerance alone leaves |φ| too large when φ is steep.
double polish_root(const ProblemSpec& problem, double lambda) {
    const int s0 = characteristic_sign(problem, lambda);
    if (s0 == 0) return lambda;
    const double scale = std::max(1.0, std::abs(lambda));
    double lo = lambda, hi = lambda;
    bool found = false;
    for (double w = 4.0 * std::numeric_limits<double>::epsilon() * scale; w <= 1e-6 * scale && !found; w *= 2.0) {
        for (double side : {-1.0, 1.0}) {
            const double probe = lambda + side * w;
            const int s = characteristic_sign(problem, probe);
            if (s == 0) return probe;
            if (s != s0) {
                lo = std::min(lambda, probe);
                hi = std::max(lambda, probe);
                found = true;
                break;
            }
        }
    }
    if (!found) return lambda;
    const int slo = characteristic_sign(problem, lo);
    for (;;) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const int sm = characteristic_sign(problem, mid);
        if (sm == 0) return mid;
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    return std::abs(characteristic_function(problem, lo)) <= std::abs(characteristic_function(problem, hi)) ? lo : hi;
}

} // namespace

TridiagonalOperator assemble_operator(const ProblemSpec& problem) {
    problem.validate();
    const auto& [p, q, r] = problem.coeff;
    const Index a = problem.grid.a;
    const Index b = problem.grid.b;
    const auto dim = static_cast<std::size_t>(b - a + 1);

    TridiagonalOperator op;
    op.first = a;
    op.diag.resize(dim);
    op.offdiag.resize(dim - 1);
    op.weight.resize(dim);
    for (Index n = a; n <= b; ++n) {
        const auto i = static_cast<std::size_t>(n - a);
        double d = p[n] + p[n - 1] - q[n];
        // x(a-1) = -h x(a) and x(b+1) = -k x(b) fold into the corner entries.
        if (n == a) d += problem.boundary.h * p[a - 1];
        if (n == b) d += problem.boundary.k * p[b];
        op.weight[i] = r[n];
        op.diag[i] = d / r[n];
        if (n < b) op.offdiag[i] = -p[n] / std::sqrt(r[n] * r[n + 1]);
    }
    return op;
}

std::pair<double, double> gershgorin_interval(const TridiagonalOperator& op) {
    const std::size_t n = op.dim();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(op.offdiag[i - 1]);
        if (i + 1 < n) radius += std::abs(op.offdiag[i]);
        lo = std::min(lo, op.diag[i] - radius);
        hi = std::max(hi, op.diag[i] + radius);
    }
    const double margin =
        std::max({std::abs(lo), std::abs(hi), 1.0}) * 8.0 * std::numeric_limits<double>::epsilon() *
        static_cast<double>(n + 1);
    return {lo - margin, hi + margin};
}

std::size_t sturm_count(const TridiagonalOperator& op, double mu) {
    std::size_t count = 0;
    double pivot = 1.0;
    for (std::size_t i = 0; i < op.dim(); ++i) {
        double d = op.diag[i] - mu;
        if (i > 0) d -= op.offdiag[i - 1] * op.offdiag[i - 1] / pivot;
        if (std::abs(d) < kPivotFloor) d = d < 0.0 ? -kPivotFloor : kPivotFloor;
        if (d < 0.0) ++count;
        pivot = d;
    }
    return count;
}

std::vector<double> eigenvalues_bisection(const TridiagonalOperator& op, double tol) {
    if (!(tol > 0.0)) fail(ErrorKind::invalid_argument, "bisection tolerance must be positive");
    const auto [glo, ghi] = gershgorin_interval(op);
    std::vector<double> out(op.dim());
    for (std::size_t j = 0; j < op.dim(); ++j) {
        double lo = glo;
        double hi = ghi;
        // Invariant: count(lo) <= j < count(hi).
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (sturm_count(op, mid) > j) hi = mid;
            else lo = mid;
        }
        out[j] = 0.5 * (lo + hi);
    }
    return out;
}

double characteristic_function(const ProblemSpec& problem, double lambda) {
    const auto x = forward_recurrence(problem, lambda, InitKind::x);
    const Index b = problem.grid.b;
    return x[b + 1] + problem.boundary.k * x[b];
}

std::vector<double> eigenvalues_shooting(const ProblemSpec& problem, double tol) {
    if (!(tol > 0.0)) fail(ErrorKind::invalid_argument, "shooting tolerance must be positive");
    problem.validate();
    const auto dim = static_cast<std::size_t>(problem.grid.size());
    const auto [glo, ghi] = gershgorin_interval(assemble_operator(problem));

    std::vector<std::pair<double, double>> brackets;
    for (std::size_t factor = kInitialGridFactor; factor <= kMaxGridFactor; factor *= 2) {
        const std::size_t points = factor * dim;
        brackets.clear();
        double prev_x = glo;
        int prev_sign = characteristic_sign(problem, glo);
        if (prev_sign == 0) brackets.emplace_back(glo, glo);
        for (std::size_t i = 1; i <= points; ++i) {
            const double x = i == points ? ghi : glo + (ghi - glo) * static_cast<double>(i) / static_cast<double>(points);
            const int s = characteristic_sign(problem, x);
            if (s == 0) brackets.emplace_back(x, x);
            else if (prev_sign != 0 && s != prev_sign) brackets.emplace_back(prev_x, x);
            prev_x = x;
            prev_sign = s;
        }
        if (brackets.size() >= dim) break;
    }
    if (brackets.size() != dim) {
        fail(ErrorKind::numeric, "shooting found " + std::to_string(brackets.size()) + " sign changes, expected " +
                                     std::to_string(dim) + " (near-multiple eigenvalue?)");
    }

    std::vector<double> roots;
    roots.reserve(dim);
    for (auto [lo, hi] : brackets) {
        int slo = characteristic_sign(problem, lo);
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const int sm = characteristic_sign(problem, mid);
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            if (sm == slo) lo = mid;
            else hi = mid;
        }
        roots.push_back(0.5 * (lo + hi));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string to_string(Method m) {
    switch (m) {
    case Method::sturm_bisection: return "sturm_bisection";
    case Method::shooting: return "shooting";
    }
    return "unknown";
}

EigenPair eigenvector(const ProblemSpec& problem, double lambda, Method method) {
    lambda = polish_root(problem, lambda);
    const auto x = forward_recurrence(problem, lambda, InitKind::x);
    const Index a = problem.grid.a;
    const Index b = problem.grid.b;
    const auto& r = problem.coeff.r;

    double norm2 = 0.0;
    for (Index n = a; n <= b; ++n) norm2 += r[n] * x[n] * x[n];
    const double norm = std::sqrt(norm2);
    if (!(norm > 0.0) || !std::isfinite(norm)) fail(ErrorKind::numeric, "eigenvector has zero or non-finite norm");

    std::vector<double> v(static_cast<std::size_t>(b - a + 1));
    for (Index n = a; n <= b; ++n) v[static_cast<std::size_t>(n - a)] = x[n] / norm;
    const double defect = std::abs(x[b + 1] + problem.boundary.k * x[b]) / norm;
    if (defect > 1e-6)
        fail(ErrorKind::numeric, "right boundary defect " + std::to_string(defect) + " too large: lambda is not an eigenvalue");
    return EigenPair{lambda, LatticeFunction<double>(a, std::move(v)), method, defect};
}

SpectrumReport cross_validate(const ProblemSpec& problem, double tol) {
    SpectrumReport rep;
    const auto op = assemble_operator(problem);
    rep.sturm = eigenvalues_bisection(op, tol);
    try {
        rep.shooting = eigenvalues_shooting(problem, tol);
        rep.shooting_ok = true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::numeric) throw;
        rep.shooting_note = std::string(e.what()) + "; falling back to Sturm bisection";
    }
    if (rep.shooting_ok) {
        for (std::size_t j = 0; j < rep.sturm.size(); ++j)
            rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.sturm[j] - rep.shooting[j]));
    }
    for (std::size_t j = 1; j < rep.sturm.size(); ++j) rep.gaps.push_back(rep.sturm[j] - rep.sturm[j - 1]);
    for (double ev : rep.sturm) {
        rep.outside_closed_disc.push_back(ev < 0.0 || ev > 4.0);
        rep.pairs.push_back(eigenvector(problem, ev, Method::sturm_bisection));
        rep.max_boundary_defect = std::max(rep.max_boundary_defect, rep.pairs.back().boundary_defect);
    }
    const Index a = problem.grid.a;
    const Index b = problem.grid.b;
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < rep.pairs.size(); ++j) {
            const double ip = weighted_inner_product(rep.pairs[i].vector, rep.pairs[j].vector, problem.coeff.r, a, b);
            rep.max_orthogonality = std::max(rep.max_orthogonality, std::abs(ip));
        }
    }
    return rep;
}

} // namespace dslv
