#include "speclust/model.hpp"

#include <cmath>
#include <stdexcept>

#include "speclust/bounds.hpp"
#include "speclust/rng.hpp"

namespace speclust {

namespace {
// Fixed seed and budget for the derived-quantity eigensolves so a model's
// caches depend on nothing but the model itself.
constexpr std::uint64_t cache_eig_seed = 0x5EC7A11CACHEDULL;
constexpr int cache_eig_max_iter = 50000;
} // namespace

int MixtureModel::index(int j) {
    if (j == -1) return 0;
    if (j == 1) return 1;
    throw std::invalid_argument("component label must be -1 or +1");
}

MixtureModel::MixtureModel(std::vector<double> mu, SymMatrix sigma_neg, SymMatrix sigma_pos)
    : mu_(std::move(mu)),
      sigma_{std::move(sigma_neg), std::move(sigma_pos)},
      chol_{cholesky(sigma_[0]), cholesky(sigma_[1])},
      sigma_avg_(0.5 * (sigma_[0] + sigma_[1])) {
    const int n = dim();
    if (n < 1) throw std::invalid_argument("MixtureModel: mu must be non-empty");
    if (sigma_[0].dim() != n || sigma_[1].dim() != n)
        throw std::invalid_argument("MixtureModel: mu and covariance dimensions disagree");

    for (int k = 0; k < 2; ++k) {
        lambda_max_[k] = largest_eigenvalue(sigma_[k], 1e-12, cache_eig_max_iter, cache_eig_seed);
        lambda_min_[k] = smallest_eigenvalue(sigma_[k], 1e-12, cache_eig_max_iter, cache_eig_seed);
    }
    mu_norm_sq_ = dot(mu_, mu_);
    mu_norm_ = std::sqrt(mu_norm_sq_);

    try {
        gamma1_sigma_ =
            leading_eigenpair(sigma_avg_, 1e-12, cache_eig_max_iter, cache_eig_seed).vector;
    } catch (const NoConvergence&) {
        gamma1_sigma_ = std::nullopt;
    }
}

SymMatrix average_covariance(const MixtureModel& model) { return model.sigma_avg(); }

std::vector<LabeledSample> sample(const MixtureModel& model, std::int64_t m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("sample: m must be >= 1");
    const int n = model.dim();
    Rng rng(seed);
    std::vector<LabeledSample> out;
    out.reserve(static_cast<std::size_t>(m));
    std::vector<double> z(n);
    for (std::int64_t i = 0; i < m; ++i) {
        LabeledSample s;
        s.theta = rng.rademacher();
        rng.fill_standard_normal(z);
        s.x = model.chol(s.theta).apply(z);
        for (int k = 0; k < n; ++k) s.x[k] += s.theta * model.mu()[k];
        out.push_back(std::move(s));
    }
    return out;
}

double snr_eta(const MixtureModel& model) {
    if (model.mu_norm_sq() == 0.0) return 0.0;
    return model.mu_norm_sq() / model.max_lambda_max();
}

double center_A(const MixtureModel& model) {
    if (model.mu_norm_sq() == 0.0) throw ZeroMean();
    const double qn = model.sigma(-1).quad_form(model.mu());
    const double qp = model.sigma(+1).quad_form(model.mu());
    return model.mu_norm_sq() / std::sqrt(std::max(qn, qp));
}

double center_A_component(const MixtureModel& model, int j) {
    if (model.mu_norm_sq() == 0.0) throw ZeroMean();
    return model.mu_norm_sq() / std::sqrt(model.sigma(j).quad_form(model.mu()));
}

LdaSandwich oracle_lda_sandwich(const MixtureModel& model, int j) {
    if (model.mu_norm_sq() == 0.0) throw ZeroMean();
    const double a_j = center_A_component(model, j);
    // mu^T Sigma_j^{-1} mu = ||L^{-1} mu||^2
    const std::vector<double> y = model.chol(j).solve_lower(model.mu());
    const double lda_arg = std::sqrt(dot(y, y));
    const double spread = std::sqrt(model.lambda_max(j) / model.lambda_min(j));
    return {std_normal_cdf(-spread * a_j), std_normal_cdf(-lda_arg), std_normal_cdf(-a_j)};
}

} // namespace speclust
