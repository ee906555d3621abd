#pragma once

/**
 * @file spectral.hpp
 * @brief Spectrum of the two-point boundary problem by two independent routes.
 *
 * Route 1 folds the boundary conditions into a symmetric Jacobi matrix and
 * counts eigenvalues with Sturm sequences. Route 2 shoots from the left
 * boundary with (x(a-1), x(a)) = (-h, 1) and finds the zeros of
 * φ(λ) = x(b+1; λ) + k x(b; λ). Neither route depends on the other.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dslv/lattice.hpp"

namespace dslv {

/// Symmetrized form R^{-1/2} T R^{-1/2} of T x = λ R x; rows correspond to n = first, ..., first + dim - 1.
struct TridiagonalOperator {
    Index first = 0;
    std::vector<double> diag;
    std::vector<double> offdiag;
    std::vector<double> weight;

    std::size_t dim() const noexcept { return diag.size(); }
};

TridiagonalOperator assemble_operator(const ProblemSpec& problem);

/// [lower, upper] containing every eigenvalue, slightly widened so that the
/// Sturm count is 0 at the lower end and dim at the upper end.
std::pair<double, double> gershgorin_interval(const TridiagonalOperator& op);

/// Number of eigenvalues strictly below mu.
std::size_t sturm_count(const TridiagonalOperator& op, double mu);

/// All eigenvalues ascending, each located to an absolute bracket width <= tol.
std::vector<double> eigenvalues_bisection(const TridiagonalOperator& op, double tol);

/// φ(λ) = x(b+1) + k x(b) for the solution with x(a-1) = -h, x(a) = 1.
double characteristic_function(const ProblemSpec& problem, double lambda);

/// All eigenvalues as sign changes of φ; throws ErrorKind::numeric when fewer
/// than dim brackets are found after the maximum grid refinement.
std::vector<double> eigenvalues_shooting(const ProblemSpec& problem, double tol);

enum class Method { sturm_bisection, shooting };

std::string to_string(Method m);

struct EigenPair {
    double eigenvalue = 0.0; ///< the requested value moved onto the nearest sign change of φ
    LatticeFunction<double> vector; ///< on [a, b], r-weighted norm 1, x(a) > 0
    Method method = Method::sturm_bisection;
    double boundary_defect = 0.0; ///< |x(b+1) + k x(b)| for the normalized solution
};

EigenPair eigenvector(const ProblemSpec& problem, double lambda, Method method = Method::sturm_bisection);

struct SpectrumReport {
    std::vector<double> sturm;
    std::vector<double> shooting;     ///< empty when shooting failed
    bool shooting_ok = false;
    std::string shooting_note;        ///< failure reason when !shooting_ok
    std::vector<double> gaps;         ///< consecutive gaps of the Sturm eigenvalues
    double max_deviation = 0.0;       ///< max_j |sturm[j] - shooting[j]|
    double max_orthogonality = 0.0;   ///< max |<v_i, v_j>_r| over i != j
    double max_boundary_defect = 0.0;
    std::vector<bool> outside_closed_disc; ///< eigenvalue outside [0, 4]
    std::vector<EigenPair> pairs;
};

SpectrumReport cross_validate(const ProblemSpec& problem, double tol);

} // namespace dslv
