#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dslv/potential.hpp"

namespace dslv::cli {

struct ReprCheckConfig {
    int trials = 100;
    std::uint64_t seed = 1;
    std::vector<double> lambdas{0.5, 1.7, 2.5, 3.5};
    std::vector<double> hs{-2.0, 0.0, 1.0};
    Index N = 200;
    double tol = 1e-9;
    std::optional<PotentialSpec> q; ///< default: random:(seed+trial),-1,1 per trial
    unsigned jobs = 1;
};

struct ReprCheckRow {
    int trial = 0;
    char kind = 'x'; ///< 'x' for the (-h, 1) data, 'y' for (1, 0)
    double lambda = 0.0;
    std::optional<double> h;
    std::string potential;
    double max_deviation = 0.0; ///< max_n |repr - rec| / max_n (1 + |rec|)
    bool pass = false;
};

/// Representation evaluators against the forward recurrence, one row per
/// (trial, λ, h) for x and per (trial, λ) for y.
std::vector<ReprCheckRow> run_repr_check(const ReprCheckConfig& cfg);

struct IdentityRow {
    std::string identity; ///< casoratian | sbp | telescope
    int trial = 0;
    std::string detail;
    double max_error = 0.0;
    bool pass = false;
};

std::vector<IdentityRow> casoratian_suite(int trials, std::uint64_t seed, Index steps, double tol);
std::vector<IdentityRow> sbp_suite(int trials, std::uint64_t seed);
std::vector<IdentityRow> telescope_suite(int trials, std::uint64_t seed);

} // namespace dslv::cli
