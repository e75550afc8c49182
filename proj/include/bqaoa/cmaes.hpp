#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bqaoa {

struct CmaEsOptions {
  std::size_t population = 6;  // lambda
  double sigma0 = 0.1;
  std::uint64_t seed = 0;
  /// Coordinates flagged here are reflected into [0, inf) by ask().
  std::vector<bool> nonnegative;
};

/// (mu/mu_w, lambda) CMA-ES with the standard default strategy parameters
/// (weights, learning rates and damping as in Hansen's tutorial).
class CmaEs {
 public:
  CmaEs(Eigen::VectorXd mean, CmaEsOptions options);

  [[nodiscard]] std::vector<Eigen::VectorXd> ask();

  /// Ranks `candidates` by `fitness` (lower is better) and updates the
  /// distribution. Candidates flagged in `injected` were not drawn by ask();
  /// their steps are clipped in Mahalanobis norm before use. When every
  /// fitness is equal there is no ranking information: the mean and the
  /// evolution paths are kept and sigma is enlarged.
  void tell(std::span<const Eigen::VectorXd> candidates, std::span<const double> fitness,
            const std::vector<bool>& injected = {});

  [[nodiscard]] std::size_t dimension() const noexcept { return static_cast<std::size_t>(mean_.size()); }
  [[nodiscard]] std::size_t population() const noexcept { return lambda_; }
  [[nodiscard]] const Eigen::VectorXd& mean() const noexcept { return mean_; }
  [[nodiscard]] double sigma() const noexcept { return sigma_; }
  [[nodiscard]] const Eigen::MatrixXd& covariance() const noexcept { return cov_; }
  [[nodiscard]] std::size_t generation() const noexcept { return generation_; }
  [[nodiscard]] std::size_t recoveries() const noexcept { return recoveries_; }

 private:
  void decompose();
  void reset_covariance();

  std::size_t lambda_;
  std::size_t mu_;
  std::vector<bool> nonnegative_;
  Eigen::VectorXd weights_;
  double mueff_;
  double cc_, cs_, c1_, cmu_, damps_, chi_n_;

  Eigen::VectorXd mean_;
  double sigma_;
  Eigen::MatrixXd cov_;
  Eigen::MatrixXd basis_;  // eigenvectors of cov_
  Eigen::VectorXd scale_;  // sqrt of eigenvalues
  Eigen::VectorXd path_c_;
  Eigen::VectorXd path_s_;
  std::size_t generation_ = 0;
  std::size_t recoveries_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace bqaoa
