#pragma once

/**
 * @file asymptotics.hpp
 * @brief Numerical evidence for the growth estimates x(n) = O(|h|) and y(n) = O(1).
 *
 * Both estimates concern the p ≡ r ≡ 1 problem started at n = 0, 1:
 * x has data (-h, 1), y has data (1, 0), and s has data (0, 1). Linearity of
 * the recurrence gives the exact identity x(·; h) = -h y + s, so
 * sup|x| lies within sup|s| of |h| sup|y|. Boundedness of y itself is only
 * checked empirically: the running supremum must stabilise between N/10 and N.
 */

#include <string>
#include <vector>

#include "dslv/lattice.hpp"
#include "dslv/potential.hpp"

namespace dslv {

struct ScanConfig {
    std::vector<double> lambda_grid;
    std::vector<double> h_grid;
    Index horizon = 10000;
    std::vector<PotentialSpec> families;
    double stabilization_ratio = 1.05;
    double h_ratio_tolerance = 0.05;
    unsigned jobs = 1;

    void validate() const;
};

struct YBoundRow {
    double lambda = 0.0;
    std::string family;
    double sup_full = 0.0;  ///< sup_{n<=N} |y(n)|; +inf if y overflowed
    double sup_tenth = 0.0; ///< sup_{n<=N/10} |y(n)|
    double log10_sup_full = 0.0;
    double log10_sup_tenth = 0.0;
    double ratio = 0.0;     ///< sup_full / sup_tenth
    bool outside_disc = false;
    bool pass = false;
};

struct HGrowthRow {
    double lambda = 0.0;
    std::string family;
    double h = 0.0;
    double sup_x = 0.0;
    double ratio = 0.0;          ///< sup_x / |h|
    double affine_defect = 0.0;  ///< max_n |x + h y - s| / (1 + |h|)
    double sandwich_slack = 0.0; ///< |sup|x| - |h| sup|y|| - sup|s|, <= 0 up to roundoff
    bool outside_disc = false;
    bool y_bounded = false;
    bool pass = false;
};

struct EstimateReport {
    std::vector<YBoundRow> y_rows;
    std::vector<HGrowthRow> h_rows;

    std::size_t pass_count() const;
    std::size_t fail_count() const;
};

/// The p ≡ r ≡ 1 problem on [1, N-1] with boundary h, so that marching from
/// (x(0), x(1)) produces values on [0, N]. q must cover [1, N-1].
ProblemSpec unit_problem(const LatticeFunction<double>& q, Index N, double h);

/// max_n |x(n;h) + h y(n) - s(n)| / (1 + |h|) over [0, N].
double affine_decomposition_defect(const LatticeFunction<double>& q, double lambda, double h, Index N);

EstimateReport scan_y_bound(const ScanConfig& config);
EstimateReport scan_h_growth(const ScanConfig& config);

} // namespace dslv
