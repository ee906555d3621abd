#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "dslv/asymptotics.hpp"
#include "dslv/parallel.hpp"
#include "dslv/recurrence.hpp"
#include "dslv/representation.hpp"

namespace dslv::cli {

namespace {

constexpr double kFloatIdentityTol = 1e-12;

std::mt19937_64 trial_rng(std::uint64_t seed, int trial, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& g, double lo, double hi) { return lo + (hi - lo) * unit_uniform(g()); }

long long uniform_int(std::mt19937_64& g, long long lo, long long hi) {
    return lo + static_cast<long long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

double relative_deviation(const LatticeFunction<double>& repr, const LatticeFunction<double>& rec, Index N) {
    double worst = 0.0;
    double scale = 0.0;
    for (Index n = 0; n <= N; ++n) {
        const double d = std::abs(repr[n] - rec[n]);
        if (!std::isfinite(d)) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, d);
        scale = std::max(scale, 1.0 + std::abs(rec[n]));
    }
    return worst / scale;
}

LatticeFunction<long long> int_sequence(std::mt19937_64& g, std::size_t len) {
    std::vector<long long> v(len);
    for (auto& e : v) e = uniform_int(g, -50, 50);
    return LatticeFunction<long long>(0, std::move(v));
}

LatticeFunction<double> real_sequence(std::mt19937_64& g, std::size_t len) {
    std::vector<double> v(len);
    for (auto& e : v) e = uniform(g, -1.0, 1.0);
    return LatticeFunction<double>(0, std::move(v));
}

} // namespace

std::vector<ReprCheckRow> run_repr_check(const ReprCheckConfig& cfg) {
    if (cfg.trials < 1) fail(ErrorKind::invalid_argument, "repr-check needs at least one trial");
    if (cfg.N < 2) fail(ErrorKind::invalid_argument, "repr-check needs N >= 2");
    for (double l : cfg.lambdas)
        if (characteristic_roots(l).degenerate)
            fail(ErrorKind::degenerate, "degenerate discriminant: lambda = " + shortest_repr(l) + " has lambda(lambda-4) = 0");

    const std::size_t per_trial = cfg.lambdas.size() * (cfg.hs.size() + 1);
    std::vector<ReprCheckRow> rows(static_cast<std::size_t>(cfg.trials) * per_trial);
    parallel_for(static_cast<std::size_t>(cfg.trials), cfg.jobs, [&](std::size_t t) {
        const PotentialSpec spec = cfg.q ? *cfg.q : PotentialSpec::random(cfg.seed + t, -1.0, 1.0);
        const auto q = spec.generate(0, cfg.N);
        const std::string name = spec.to_string();
        std::size_t slot = t * per_trial;
        for (double lambda : cfg.lambdas) {
            for (double h : cfg.hs) {
                const auto rec = forward_recurrence(unit_problem(q, cfg.N, h), lambda, InitKind::x, cfg.N);
                const auto repr = representation_x(q, h, lambda, cfg.N);
                const double dev = relative_deviation(repr, rec, cfg.N);
                rows[slot++] = {static_cast<int>(t), 'x', lambda, h, name, dev, dev <= cfg.tol};
            }
            const auto rec = forward_recurrence(unit_problem(q, cfg.N, 0.0), lambda, InitKind::y, cfg.N);
            const auto repr = representation_y(q, lambda, cfg.N);
            const double dev = relative_deviation(repr, rec, cfg.N);
            rows[slot++] = {static_cast<int>(t), 'y', lambda, std::nullopt, name, dev, dev <= cfg.tol};
        }
    });
    return rows;
}

std::vector<IdentityRow> casoratian_suite(int trials, std::uint64_t seed, Index steps, double tol) {
    if (steps < 1) fail(ErrorKind::invalid_argument, "casoratian suite needs steps >= 1");
    std::vector<IdentityRow> rows;
    for (int t = 0; t < trials; ++t) {
        auto g = trial_rng(seed, t, 1);
        const Index a = 1;
        const Index b = steps;
        const auto len = static_cast<std::size_t>(b - a + 1);
        // Trial 0 is the free problem at λ = 3; the rest perturb p and q mildly.
        // Stronger disorder makes the solutions grow over long runs, and W then
        // loses digits to cancellation rather than to any defect in the march.
        std::vector<double> p(len + 1, 1.0), q(len, 0.0), r(len, 1.0);
        double lambda = 3.0;
        double h = 0.0;
        if (t > 0) {
            for (auto& v : p) v = uniform(g, 0.95, 1.05);
            for (auto& v : q) v = uniform(g, -0.1, 0.1);
            lambda = uniform(g, 1.0, 3.0);
            h = uniform(g, -1.0, 1.0);
        }
        ProblemSpec problem{GridSpec{a, b},
                            Coefficients{LatticeFunction<double>(a - 1, std::move(p)), LatticeFunction<double>(a, std::move(q)),
                                         LatticeFunction<double>(a, std::move(r))},
                            BoundaryData{h, 0.0, std::nullopt}};
        const auto y = forward_recurrence(problem, lambda, InitKind::x);
        const auto z = forward_recurrence(problem, lambda, InitKind::y);
        const double w0 = casoratian(y, z, a, problem.coeff.p);
        double drift = 0.0;
        for (Index n = a; n <= b; ++n) drift = std::max(drift, std::abs(casoratian(y, z, n, problem.coeff.p) - w0));
        drift /= std::abs(w0);
        rows.push_back({"casoratian", t, "lambda=" + shortest_repr(lambda) + " steps=" + std::to_string(steps), drift,
                        drift <= tol});
    }
    return rows;
}

std::vector<IdentityRow> sbp_suite(int trials, std::uint64_t seed) {
    std::vector<IdentityRow> rows;
    for (int t = 0; t < trials; ++t) {
        auto g = trial_rng(seed, t, 2);
        const auto len = static_cast<std::size_t>(uniform_int(g, 2, 20));
        const Index n = uniform_int(g, 1, static_cast<long long>(len) - 1);
        const Index m = uniform_int(g, 0, n - 1);

        const auto xi = int_sequence(g, len);
        const auto yi = int_sequence(g, len);
        const bool exact = sum_by_parts_rhs(xi, yi, m, n) == sum_x_delta_y(xi, yi, m, n);

        const auto xf = real_sequence(g, len);
        const auto yf = real_sequence(g, len);
        const double lhs = sum_x_delta_y(xf, yf, m, n);
        const double rhs = sum_by_parts_rhs(xf, yf, m, n);
        double scale = std::abs(xf[n] * yf[n]) + std::abs(xf[m] * yf[m]);
        for (Index k = m; k < n; ++k)
            scale += std::abs(xf[k] * (yf[k + 1] - yf[k])) + std::abs((xf[k + 1] - xf[k]) * yf[k + 1]);
        const double rel = std::abs(lhs - rhs) / scale;

        rows.push_back({"sbp", t,
                        "len=" + std::to_string(len) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            (exact ? " int=exact" : " int=MISMATCH"),
                        rel, exact && rel <= kFloatIdentityTol});
    }
    return rows;
}

std::vector<IdentityRow> telescope_suite(int trials, std::uint64_t seed) {
    std::vector<IdentityRow> rows;
    for (int t = 0; t < trials; ++t) {
        auto g = trial_rng(seed, t, 3);
        const auto len = static_cast<std::size_t>(uniform_int(g, 1, 20));
        const Index n = uniform_int(g, 0, static_cast<long long>(len) - 1);
        const Index m = uniform_int(g, 0, n);

        const auto xi = int_sequence(g, len);
        const bool exact = telescoping_sum(xi, m, n) == xi[n] - xi[m];

        const auto xf = real_sequence(g, len);
        double scale = std::abs(xf[n]) + std::abs(xf[m]);
        for (Index k = m; k < n; ++k) scale += std::abs(xf[k + 1] - xf[k]);
        const double err = std::abs(telescoping_sum(xf, m, n) - (xf[n] - xf[m]));
        const double rel = scale > 0.0 ? err / scale : err;

        rows.push_back({"telescope", t,
                        "len=" + std::to_string(len) + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            (exact ? " int=exact" : " int=MISMATCH"),
                        rel, exact && rel <= kFloatIdentityTol});
    }
    return rows;
}

} // namespace dslv::cli
