#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "speclust/linalg.hpp"

namespace speclust {

/// One observation x together with its latent label theta in {-1,+1}.
struct LabeledSample {
    std::vector<double> x;
    int theta = 1;
};

struct LdaSandwich {
    double lower = 0.0;
    double lda = 0.0;
    double upper = 0.0;
};

/// Two-component Gaussian mixture X = theta * mu + g^(theta) with
/// g^(j) ~ N(0, Sigma_j). Immutable after construction; derived quantities
/// (Cholesky factors, extreme eigenvalues, the average covariance and its
/// leading eigenvector) are cached eagerly.
class MixtureModel {
public:
    MixtureModel(std::vector<double> mu, SymMatrix sigma_neg, SymMatrix sigma_pos);

    int dim() const { return static_cast<int>(mu_.size()); }
    const std::vector<double>& mu() const { return mu_; }
    double mu_norm() const { return mu_norm_; }
    double mu_norm_sq() const { return mu_norm_sq_; }

    /// j must be -1 or +1.
    const SymMatrix& sigma(int j) const { return sigma_[index(j)]; }
    const CholeskyFactor& chol(int j) const { return chol_[index(j)]; }
    double lambda_max(int j) const { return lambda_max_[index(j)]; }
    double lambda_min(int j) const { return lambda_min_[index(j)]; }
    double max_lambda_max() const { return std::max(lambda_max_[0], lambda_max_[1]); }

    const SymMatrix& sigma_avg() const { return sigma_avg_; }

    /// Leading eigenvector of the average covariance, used by OracleSigma
    /// alignment. Empty when the eigensolver did not converge on it (near-
    /// degenerate top of the averaged spectrum); the error surfaces only if
    /// that alignment mode is actually requested.
    const std::optional<std::vector<double>>& gamma1_sigma() const { return gamma1_sigma_; }

    static int index(int j);

private:
    std::vector<double> mu_;
    SymMatrix sigma_[2];   // [0] = Sigma_{-1}, [1] = Sigma_{+1}
    CholeskyFactor chol_[2];
    double lambda_max_[2];
    double lambda_min_[2];
    double mu_norm_ = 0.0;
    double mu_norm_sq_ = 0.0;
    SymMatrix sigma_avg_;
    std::optional<std::vector<double>> gamma1_sigma_;
};

/// Elementwise (Sigma_{-1} + Sigma_{+1}) / 2.
SymMatrix average_covariance(const MixtureModel& model);

/// Draws m labeled samples. Per sample: one Rademacher bit for theta, then
/// the Gaussian noise vector (see Rng for the exact consumption order);
/// x = theta * mu + L_theta z. Identical (model, m, seed) give bitwise
/// identical output.
std::vector<LabeledSample> sample(const MixtureModel& model, std::int64_t m, std::uint64_t seed);

/// Signal-to-noise ratio ||mu||^2 / max_j lambda_1(Sigma_j); zero iff mu = 0.
double snr_eta(const MixtureModel& model);

/// A = ||mu||^2 / max_j ||Sigma_j^{1/2} mu||, with ||Sigma_j^{1/2} mu|| taken
/// as sqrt(mu^T Sigma_j mu). Throws ZeroMean when mu = 0.
double center_A(const MixtureModel& model);

/// Per-component A_j = ||mu||^2 / sqrt(mu^T Sigma_j mu). Throws ZeroMean.
double center_A_component(const MixtureModel& model, int j);

/// The bracket Phi(-sqrt(l1/ln) A_j) <= Phi(-sqrt(mu^T Sigma_j^{-1} mu))
/// <= Phi(-A_j) around the oracle LDA misclassification probability.
LdaSandwich oracle_lda_sandwich(const MixtureModel& model, int j);

} // namespace speclust
