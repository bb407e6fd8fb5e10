#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "speclust/errors.hpp"

namespace speclust {

// ---------------------------------------------------------------------------
// Dense vector helpers
// ---------------------------------------------------------------------------

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

/// Scales `a` to unit Euclidean norm. Throws std::invalid_argument on zero input.
void normalize(std::span<double> a);

// ---------------------------------------------------------------------------
// Symmetric matrices
// ---------------------------------------------------------------------------

/// Dense symmetric matrix, full row-major storage. The constructor symmetrizes
/// its input and rejects asymmetry beyond 1e-12 relative to the largest entry.
class SymMatrix {
public:
    explicit SymMatrix(int dim);
    SymMatrix(int dim, std::vector<double> entries);

    static SymMatrix identity(int dim);
    static SymMatrix diagonal(std::span<const double> d);

    int dim() const { return dim_; }
    double operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * dim_ + j];
    }
    /// Sets entry (i,j) and its mirror (j,i).
    void set(int i, int j, double v);

    std::span<const double> data() const { return e_; }
    double max_abs() const;
    double trace() const;
    double frobenius_norm() const;

    std::vector<double> matvec(std::span<const double> v) const;
    /// Quadratic form v^T A v.
    double quad_form(std::span<const double> v) const;

private:
    int dim_;
    std::vector<double> e_;
};

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(double s, const SymMatrix& a);

// ---------------------------------------------------------------------------
// Cholesky factorization
// ---------------------------------------------------------------------------

/// Lower-triangular factor L with A = L L^T, row-major full storage
/// (strict upper triangle zero).
class CholeskyFactor {
public:
    CholeskyFactor(int dim, std::vector<double> l) : dim_(dim), l_(std::move(l)) {}

    int dim() const { return dim_; }
    double operator()(int i, int j) const {
        return l_[static_cast<std::size_t>(i) * dim_ + j];
    }
    std::span<const double> data() const { return l_; }

    /// y = L x
    std::vector<double> apply(std::span<const double> x) const;
    /// Solves L y = b (forward substitution).
    std::vector<double> solve_lower(std::span<const double> b) const;
    /// Solves L^T x = y (back substitution).
    std::vector<double> solve_upper(std::span<const double> y) const;
    /// Solves A x = b via the two triangular solves.
    std::vector<double> solve(std::span<const double> b) const;

private:
    int dim_;
    std::vector<double> l_;
};

/// Cholesky-Banachiewicz factorization. Throws NotPositiveDefinite when a
/// pivot falls to or below dim * eps * max|A_ij|.
CholeskyFactor cholesky(const SymMatrix& a);

// ---------------------------------------------------------------------------
// Eigensolvers
// ---------------------------------------------------------------------------

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
};

/// Dominant eigenpair of a symmetric PSD matrix by power iteration with a
/// deterministic pseudo-random unit start derived from `seed`.
///
/// Converged when the Rayleigh quotient is stationary to relative `tol`
/// between sweeps and the residual ||A v - rho v|| is within tol * rho of the
/// floating-point floor. The sign of the returned vector is not fixed; the
/// caller aligns it. Throws NoConvergence after `max_iter` sweeps, which for
/// PSD inputs signals a (near-)degenerate spectral gap. An exact multiple of
/// the identity converges immediately to the start vector, which is then a
/// true eigenvector.
EigenPair leading_eigenpair(const SymMatrix& a, double tol = 1e-12, int max_iter = 10000,
                            std::uint64_t seed = 0);

/// Largest eigenvalue only, by power iteration with a value-stationarity stop
/// (three consecutive sweeps with relative Rayleigh change <= tol). Unlike
/// leading_eigenpair this does not require the eigenvector to settle, so it
/// stays accurate when the top eigenvalues are clustered.
double largest_eigenvalue(const SymMatrix& a, double tol = 1e-12, int max_iter = 10000,
                          std::uint64_t seed = 0);

/// Full eigendecomposition by cyclic Jacobi rotations, descending by value.
/// Test-oracle scale: dim <= 64 enforced.
std::vector<EigenPair> full_eigen_oracle(const SymMatrix& a);

/// Smallest eigenvalue of a symmetric PD matrix: Jacobi for dim <= 64,
/// inverse power iteration (value-stationarity) above. Throws
/// NotPositiveDefinite when the input is not PD.
double smallest_eigenvalue(const SymMatrix& a, double tol = 1e-12, int max_iter = 10000,
                           std::uint64_t seed = 0);

} // namespace speclust
