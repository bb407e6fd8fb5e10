#include "speclust/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "speclust/rng.hpp"

namespace speclust {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void normalize(std::span<double> a) {
    const double n = norm2(a);
    if (n == 0.0) throw std::invalid_argument("cannot normalize a zero vector");
    for (double& x : a) x /= n;
}

// ---------------------------------------------------------------------------
// SymMatrix
// ---------------------------------------------------------------------------

SymMatrix::SymMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
    e_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

SymMatrix::SymMatrix(int dim, std::vector<double> entries) : dim_(dim), e_(std::move(entries)) {
    if (dim < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
    if (e_.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("SymMatrix: entries size does not match dim*dim");
    double scale = 0.0;
    for (double v : e_) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            double& a = e_[static_cast<std::size_t>(i) * dim_ + j];
            double& b = e_[static_cast<std::size_t>(j) * dim_ + i];
            if (std::abs(a - b) > 1e-12 * scale)
                throw std::invalid_argument("SymMatrix: input asymmetric beyond 1e-12 relative");
            const double m = 0.5 * (a + b);
            a = m;
            b = m;
        }
    }
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix a(dim);
    for (int i = 0; i < dim; ++i) a.e_[static_cast<std::size_t>(i) * dim + i] = 1.0;
    return a;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
    SymMatrix a(static_cast<int>(d.size()));
    for (int i = 0; i < a.dim_; ++i) a.e_[static_cast<std::size_t>(i) * a.dim_ + i] = d[i];
    return a;
}

void SymMatrix::set(int i, int j, double v) {
    e_[static_cast<std::size_t>(i) * dim_ + j] = v;
    e_[static_cast<std::size_t>(j) * dim_ + i] = v;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : e_) m = std::max(m, std::abs(v));
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const { return std::sqrt(dot(e_, e_)); }

std::vector<double> SymMatrix::matvec(std::span<const double> v) const {
    std::vector<double> y(dim_, 0.0);
    for (int i = 0; i < dim_; ++i) {
        const double* row = e_.data() + static_cast<std::size_t>(i) * dim_;
        double s = 0.0;
        for (int j = 0; j < dim_; ++j) s += row[j] * v[j];
        y[i] = s;
    }
    return y;
}

double SymMatrix::quad_form(std::span<const double> v) const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) {
        const double* row = e_.data() + static_cast<std::size_t>(i) * dim_;
        double r = 0.0;
        for (int j = 0; j < dim_; ++j) r += row[j] * v[j];
        s += v[i] * r;
    }
    return s;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("SymMatrix +: dimension mismatch");
    SymMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) r.set(i, j, a(i, j) + b(i, j));
    return r;
}

SymMatrix operator*(double s, const SymMatrix& a) {
    SymMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) r.set(i, j, s * a(i, j));
    return r;
}

// ---------------------------------------------------------------------------
// Cholesky
// ---------------------------------------------------------------------------

std::vector<double> CholeskyFactor::apply(std::span<const double> x) const {
    std::vector<double> y(dim_, 0.0);
    for (int i = 0; i < dim_; ++i) {
        const double* row = l_.data() + static_cast<std::size_t>(i) * dim_;
        double s = 0.0;
        for (int j = 0; j <= i; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<double> CholeskyFactor::solve_lower(std::span<const double> b) const {
    std::vector<double> y(dim_, 0.0);
    for (int i = 0; i < dim_; ++i) {
        const double* row = l_.data() + static_cast<std::size_t>(i) * dim_;
        double s = b[i];
        for (int j = 0; j < i; ++j) s -= row[j] * y[j];
        y[i] = s / row[i];
    }
    return y;
}

std::vector<double> CholeskyFactor::solve_upper(std::span<const double> y) const {
    std::vector<double> x(dim_, 0.0);
    for (int i = dim_ - 1; i >= 0; --i) {
        double s = y[i];
        for (int j = i + 1; j < dim_; ++j) s -= l_[static_cast<std::size_t>(j) * dim_ + i] * x[j];
        x[i] = s / l_[static_cast<std::size_t>(i) * dim_ + i];
    }
    return x;
}

std::vector<double> CholeskyFactor::solve(std::span<const double> b) const {
    return solve_upper(solve_lower(b));
}

CholeskyFactor cholesky(const SymMatrix& a) {
    const int n = a.dim();
    const double pivot_floor = n * std::numeric_limits<double>::epsilon() * a.max_abs();
    std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        double d = a(j, j);
        const double* lj = l.data() + static_cast<std::size_t>(j) * n;
        for (int k = 0; k < j; ++k) d -= lj[k] * lj[k];
        if (d <= pivot_floor)
            throw NotPositiveDefinite("cholesky: pivot " + std::to_string(d) + " at index " +
                                      std::to_string(j) + " is not positive");
        const double ljj = std::sqrt(d);
        l[static_cast<std::size_t>(j) * n + j] = ljj;
        for (int i = j + 1; i < n; ++i) {
            const double* li = l.data() + static_cast<std::size_t>(i) * n;
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= li[k] * lj[k];
            l[static_cast<std::size_t>(i) * n + j] = s / ljj;
        }
    }
    return {n, std::move(l)};
}

// ---------------------------------------------------------------------------
// Power iteration
// ---------------------------------------------------------------------------

namespace {

std::vector<double> random_unit_start(int n, std::uint64_t seed) {
    Rng rng(mix64(seed ^ 0xE16E5347A1C0DE5ULL));
    std::vector<double> v(n);
    for (;;) {
        rng.fill_standard_normal(v);
        if (norm2(v) > 0.0) break;
    }
    normalize(v);
    return v;
}

} // namespace

EigenPair leading_eigenpair(const SymMatrix& a, double tol, int max_iter, std::uint64_t seed) {
    if (tol <= 0.0) throw std::invalid_argument("leading_eigenpair: tol must be > 0");
    const int n = a.dim();
    const double resid_floor = n * std::numeric_limits<double>::epsilon() * a.max_abs();
    std::vector<double> v = random_unit_start(n, seed);
    double prev_rho = std::numeric_limits<double>::quiet_NaN();
    for (int it = 0; it < max_iter; ++it) {
        std::vector<double> w = a.matvec(v);
        const double rho = dot(v, w);
        double resid_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = w[i] - rho * v[i];
            resid_sq += r * r;
        }
        const double resid = std::sqrt(resid_sq);
        if (it > 0 && std::abs(rho - prev_rho) <= tol * std::abs(rho) &&
            resid <= tol * std::abs(rho) + resid_floor) {
            return {rho, std::move(v)};
        }
        prev_rho = rho;
        const double wn = norm2(w);
        if (wn > 0.0) {
            for (int i = 0; i < n; ++i) v[i] = w[i] / wn;
        }
        // wn == 0 leaves v unchanged: v is in the kernel, rho = 0 is exact.
    }
    throw NoConvergence(max_iter);
}

double largest_eigenvalue(const SymMatrix& a, double tol, int max_iter, std::uint64_t seed) {
    if (tol <= 0.0) throw std::invalid_argument("largest_eigenvalue: tol must be > 0");
    const int n = a.dim();
    std::vector<double> v = random_unit_start(n, seed);
    double prev_rho = std::numeric_limits<double>::quiet_NaN();
    int stable = 0;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<double> w = a.matvec(v);
        const double rho = dot(v, w);
        if (it > 0 && std::abs(rho - prev_rho) <= tol * std::abs(rho)) {
            if (++stable >= 3) return rho;
        } else {
            stable = 0;
        }
        prev_rho = rho;
        const double wn = norm2(w);
        if (wn > 0.0)
            for (int i = 0; i < n; ++i) v[i] = w[i] / wn;
    }
    throw NoConvergence(max_iter);
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi oracle
// ---------------------------------------------------------------------------

std::vector<EigenPair> full_eigen_oracle(const SymMatrix& a) {
    const int n = a.dim();
    if (n > 64) throw std::invalid_argument("full_eigen_oracle: dim must be <= 64");

    std::vector<double> w(a.data().begin(), a.data().end());
    std::vector<double> vmat(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vmat[static_cast<std::size_t>(i) * n + i] = 1.0;
    auto W = [&](int i, int j) -> double& { return w[static_cast<std::size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return vmat[static_cast<std::size_t>(i) * n + j]; };

    const double norm_f = a.frobenius_norm();
    const double off_target = 1e-14 * std::max(norm_f, std::numeric_limits<double>::min());

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * W(p, q) * W(p, q);
        if (std::sqrt(off) <= off_target) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = W(p, q);
                if (apq == 0.0) continue;
                const double theta = 0.5 * (W(q, q) - W(p, p)) / apq;
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = ((theta >= 0.0) ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;

                W(p, p) -= h;
                W(q, q) += h;
                W(p, q) = 0.0;
                W(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double wkp = W(k, p);
                    const double wkq = W(k, q);
                    W(k, p) = wkp - s * (wkq + tau * wkp);
                    W(p, k) = W(k, p);
                    W(k, q) = wkq + s * (wkp - tau * wkq);
                    W(q, k) = W(k, q);
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = V(k, p);
                    const double vkq = V(k, q);
                    V(k, p) = vkp - s * (vkq + tau * vkp);
                    V(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return W(i, i) > W(j, j); });

    std::vector<EigenPair> out;
    out.reserve(n);
    for (int r : idx) {
        EigenPair p;
        p.value = W(r, r);
        p.vector.resize(n);
        for (int k = 0; k < n; ++k) p.vector[k] = V(k, r);
        out.push_back(std::move(p));
    }
    return out;
}

double smallest_eigenvalue(const SymMatrix& a, double tol, int max_iter, std::uint64_t seed) {
    const int n = a.dim();
    if (n <= 64) {
        const double lam = full_eigen_oracle(a).back().value;
        if (lam <= 0.0)
            throw NotPositiveDefinite("smallest_eigenvalue: matrix is not positive definite");
        return lam;
    }
    // Inverse power iteration on the Cholesky solve; only the value is needed,
    // so a stationarity test on the inverse Rayleigh quotient suffices even
    // when the bottom eigenvalues are clustered.
    const CholeskyFactor chol = cholesky(a);
    std::vector<double> v = random_unit_start(n, seed);
    double prev_nu = std::numeric_limits<double>::quiet_NaN();
    int stable = 0;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<double> w = chol.solve(v);
        const double nu = dot(v, w);
        if (it > 0 && std::abs(nu - prev_nu) <= tol * std::abs(nu)) {
            if (++stable >= 3) return 1.0 / nu;
        } else {
            stable = 0;
        }
        prev_nu = nu;
        const double wn = norm2(w);
        if (wn == 0.0) throw NotPositiveDefinite("smallest_eigenvalue: singular solve");
        for (int i = 0; i < n; ++i) v[i] = w[i] / wn;
    }
    throw NoConvergence(max_iter);
}

} // namespace speclust
