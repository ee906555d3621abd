#include "dslv/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dslv/parallel.hpp"
#include "dslv/recurrence.hpp"

namespace dslv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool in_open_disc(double lambda) { return std::abs(lambda - 2.0) < 2.0; }

struct Sups {
    double full = 0.0;
    double tenth = 0.0;
    double log10_full = 0.0;
    double log10_tenth = 0.0;
};

// log10 of the running suprema from a march that rescales by powers of ten,
// used once plain doubles have overflowed.
Sups rescaled_log_sups(const ProblemSpec& problem, double lambda, std::array<double, 2> init, Index N, Index tenth) {
    const auto& q = problem.coeff.q;
    double prev = init[0];
    double cur = init[1];
    double exponent = 0.0;
    auto log_mag = [&](double v) { return v == 0.0 ? -kInf : std::log10(std::abs(v)) + exponent; };
    Sups s;
    s.log10_full = std::max(log_mag(prev), log_mag(cur));
    s.log10_tenth = tenth >= 1 ? s.log10_full : log_mag(prev);
    for (Index n = 1; n < N; ++n) {
        const double next = (2.0 - q[n] - lambda) * cur - prev;
        prev = cur;
        cur = next;
        const double mag = std::max(std::abs(prev), std::abs(cur));
        if (mag > 1e100) {
            prev /= 1e100;
            cur /= 1e100;
            exponent += 100.0;
        }
        const double l = log_mag(cur);
        s.log10_full = std::max(s.log10_full, l);
        if (n + 1 <= tenth) s.log10_tenth = s.log10_full;
    }
    return s;
}

Sups sups_of(const LatticeFunction<double>& v, const ProblemSpec& problem, double lambda, std::array<double, 2> init,
             Index N) {
    const Index tenth = N / 10;
    Sups s;
    bool finite = true;
    for (Index n = 0; n <= N; ++n) {
        const double a = std::abs(v[n]);
        if (!std::isfinite(a)) finite = false;
        s.full = std::max(s.full, a);
        if (n <= tenth) s.tenth = std::max(s.tenth, a);
    }
    if (finite) {
        s.log10_full = std::log10(s.full);
        s.log10_tenth = std::log10(s.tenth);
        return s;
    }
    const Sups logs = rescaled_log_sups(problem, lambda, init, N, tenth);
    s.log10_full = logs.log10_full;
    s.log10_tenth = logs.log10_tenth;
    s.full = std::pow(10.0, s.log10_full);
    s.tenth = std::pow(10.0, s.log10_tenth);
    return s;
}

double sup_abs(const LatticeFunction<double>& v) {
    double m = 0.0;
    for (double x : v.values()) {
        if (!std::isfinite(x)) return kInf;
        m = std::max(m, std::abs(x));
    }
    return m;
}

double affine_defect(const LatticeFunction<double>& x, const LatticeFunction<double>& y,
                     const LatticeFunction<double>& s, double h) {
    double worst = 0.0;
    for (Index n = x.first(); n <= x.last(); ++n) {
        const double d = std::abs(x[n] + h * y[n] - s[n]);
        if (!std::isfinite(d)) return kInf;
        worst = std::max(worst, d);
    }
    return worst / (1.0 + std::abs(h));
}

YBoundRow y_row(const LatticeFunction<double>& q, double lambda, const std::string& family, const ScanConfig& cfg) {
    const Index N = cfg.horizon;
    const auto problem = unit_problem(q, N, 0.0);
    const auto init = initial_values(InitKind::y, 0.0);
    const auto y = forward_recurrence(problem, lambda, InitKind::y, N);
    const Sups s = sups_of(y, problem, lambda, init, N);

    YBoundRow row;
    row.lambda = lambda;
    row.family = family;
    row.sup_full = s.full;
    row.sup_tenth = s.tenth;
    row.log10_sup_full = s.log10_full;
    row.log10_sup_tenth = s.log10_tenth;
    row.ratio = std::isfinite(s.full) ? s.full / s.tenth : kInf;
    row.outside_disc = !in_open_disc(lambda);
    // Compared in log space so that overflowed rows still fail.
    row.pass = s.log10_full <= std::log10(cfg.stabilization_ratio) + s.log10_tenth;
    return row;
}

struct Cell {
    double lambda;
    std::size_t family;
};

std::vector<Cell> cells_of(const ScanConfig& cfg) {
    std::vector<Cell> cells;
    for (double lambda : cfg.lambda_grid)
        for (std::size_t f = 0; f < cfg.families.size(); ++f) cells.push_back({lambda, f});
    return cells;
}

} // namespace

void ScanConfig::validate() const {
    if (lambda_grid.empty()) fail(ErrorKind::invalid_argument, "scan: lambda grid is empty");
    if (families.empty()) fail(ErrorKind::invalid_argument, "scan: no potential family given");
    if (horizon < 100) fail(ErrorKind::invalid_argument, "scan: horizon N must be at least 100");
    if (!(stabilization_ratio >= 1.0)) fail(ErrorKind::invalid_argument, "scan: stabilization ratio must be >= 1");
    for (double l : lambda_grid)
        if (!std::isfinite(l)) fail(ErrorKind::invalid_argument, "scan: lambda values must be finite");
    for (double h : h_grid)
        if (!std::isfinite(h)) fail(ErrorKind::invalid_argument, "scan: h values must be finite");
}

std::size_t EstimateReport::pass_count() const {
    return static_cast<std::size_t>(std::count_if(y_rows.begin(), y_rows.end(), [](auto& r) { return r.pass; }) +
                                    std::count_if(h_rows.begin(), h_rows.end(), [](auto& r) { return r.pass; }));
}

std::size_t EstimateReport::fail_count() const { return y_rows.size() + h_rows.size() - pass_count(); }

ProblemSpec unit_problem(const LatticeFunction<double>& q, Index N, double h) {
    if (N < 2) fail(ErrorKind::invalid_argument, "horizon N must be at least 2");
    require_range(q.contains(1) && q.contains(N - 1), "potential must cover [1, N-1]");
    std::vector<double> window(q.values().begin() + (1 - q.first()), q.values().begin() + (N - q.first()));
    return ProblemSpec::with_potential(1, N - 1, std::move(window), h, 0.0);
}

double affine_decomposition_defect(const LatticeFunction<double>& q, double lambda, double h, Index N) {
    const auto problem = unit_problem(q, N, h);
    const auto x = forward_recurrence(problem, lambda, InitKind::x, N);
    const auto y = forward_recurrence(problem, lambda, InitKind::y, N);
    const auto s = forward_recurrence(problem, lambda, InitKind::s, N);
    return affine_defect(x, y, s, h);
}

EstimateReport scan_y_bound(const ScanConfig& config) {
    config.validate();
    const auto cells = cells_of(config);
    EstimateReport report;
    report.y_rows.resize(cells.size());
    parallel_for(cells.size(), config.jobs, [&](std::size_t i) {
        const auto& fam = config.families[cells[i].family];
        const auto q = fam.generate(0, config.horizon);
        report.y_rows[i] = y_row(q, cells[i].lambda, fam.to_string(), config);
    });
    return report;
}

EstimateReport scan_h_growth(const ScanConfig& config) {
    config.validate();
    const auto large = std::count_if(config.h_grid.begin(), config.h_grid.end(), [](double h) { return std::abs(h) >= 1.0; });
    if (large < 2) fail(ErrorKind::invalid_argument, "scan: h grid needs at least two values with |h| >= 1");

    const auto cells = cells_of(config);
    const std::size_t nh = config.h_grid.size();
    EstimateReport report;
    report.y_rows.resize(cells.size());
    report.h_rows.resize(cells.size() * nh);

    parallel_for(cells.size(), config.jobs, [&](std::size_t i) {
        const double lambda = cells[i].lambda;
        const auto& fam = config.families[cells[i].family];
        const std::string name = fam.to_string();
        const Index N = config.horizon;
        const auto q = fam.generate(0, N);
        const YBoundRow yr = y_row(q, lambda, name, config);
        report.y_rows[i] = yr;

        const auto base = unit_problem(q, N, 0.0);
        const auto y = forward_recurrence(base, lambda, InitKind::y, N);
        const auto s = forward_recurrence(base, lambda, InitKind::s, N);
        const double sup_y = sup_abs(y);
        const double sup_s = sup_abs(s);

        for (std::size_t j = 0; j < nh; ++j) {
            const double h = config.h_grid[j];
            const auto x = forward_recurrence<double>(base, lambda, {-h, 1.0}, N);
            HGrowthRow row;
            row.lambda = lambda;
            row.family = name;
            row.h = h;
            row.sup_x = sup_abs(x);
            row.ratio = h == 0.0 ? kInf : row.sup_x / std::abs(h);
            row.affine_defect = affine_defect(x, y, s, h);
            row.sandwich_slack = std::abs(row.sup_x - std::abs(h) * sup_y) - sup_s;
            row.outside_disc = !in_open_disc(lambda);
            row.y_bounded = yr.pass;
            report.h_rows[i * nh + j] = row;
        }

        // Ratios are compared over |h| in [1e2, 1e6]; fall back to |h| >= 1 when
        // the grid has fewer than two such values.
        auto pick = [&](auto pred) {
            std::vector<double> r;
            for (std::size_t j = 0; j < nh; ++j)
                if (pred(std::abs(config.h_grid[j]))) r.push_back(report.h_rows[i * nh + j].ratio);
            return r;
        };
        auto ratios = pick([](double a) { return a >= 1e2 && a <= 1e6; });
        if (ratios.size() < 2) ratios = pick([](double a) { return a >= 1.0; });
        const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
        const bool steady = std::isfinite(*mx) && *mn > 0.0 && (*mx - *mn) / *mn < config.h_ratio_tolerance;
        for (std::size_t j = 0; j < nh; ++j) report.h_rows[i * nh + j].pass = steady && yr.pass;
    });
    return report;
}

} // namespace dslv
