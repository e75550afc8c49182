#include "bqaoa/cmaes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bqaoa/error.hpp"

namespace bqaoa {

CmaEs::CmaEs(Eigen::VectorXd mean, CmaEsOptions options)
    : lambda_(options.population),
      mu_(options.population / 2),
      nonnegative_(std::move(options.nonnegative)),
      mean_(std::move(mean)),
      sigma_(options.sigma0),
      rng_(options.seed) {
  const auto n = static_cast<double>(mean_.size());
  if (mean_.size() == 0) throw InvalidInput("CMA-ES needs at least one dimension");
  if (lambda_ < 2) throw InvalidInput("CMA-ES population must be at least 2");
  if (!(sigma_ > 0.0)) throw InvalidInput("CMA-ES sigma0 must be positive");
  if (!nonnegative_.empty() && nonnegative_.size() != dimension()) {
    throw InvalidInput("nonnegative mask length does not match dimension");
  }
  nonnegative_.resize(dimension(), false);

  weights_.resize(static_cast<Eigen::Index>(mu_));
  for (std::size_t i = 0; i < mu_; ++i) {
    weights_[static_cast<Eigen::Index>(i)] =
        std::log((static_cast<double>(lambda_) + 1.0) / 2.0) - std::log(static_cast<double>(i) + 1.0);
  }
  weights_ /= weights_.sum();
  mueff_ = 1.0 / weights_.squaredNorm();

  cc_ = (4.0 + mueff_ / n) / (n + 4.0 + 2.0 * mueff_ / n);
  cs_ = (mueff_ + 2.0) / (n + mueff_ + 5.0);
  c1_ = 2.0 / ((n + 1.3) * (n + 1.3) + mueff_);
  cmu_ = std::min(1.0 - c1_, 2.0 * (mueff_ - 2.0 + 1.0 / mueff_) / ((n + 2.0) * (n + 2.0) + mueff_));
  damps_ = 1.0 + 2.0 * std::max(0.0, std::sqrt((mueff_ - 1.0) / (n + 1.0)) - 1.0) + cs_;
  chi_n_ = std::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));

  reset_covariance();
}

void CmaEs::reset_covariance() {
  const auto d = mean_.size();
  cov_ = Eigen::MatrixXd::Identity(d, d);
  basis_ = Eigen::MatrixXd::Identity(d, d);
  scale_ = Eigen::VectorXd::Ones(d);
  path_c_ = Eigen::VectorXd::Zero(d);
  path_s_ = Eigen::VectorXd::Zero(d);
}

std::vector<Eigen::VectorXd> CmaEs::ask() {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Eigen::VectorXd> out;
  out.reserve(lambda_);
  for (std::size_t k = 0; k < lambda_; ++k) {
    Eigen::VectorXd z(mean_.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = normal(rng_);
    Eigen::VectorXd x = mean_ + sigma_ * (basis_ * scale_.cwiseProduct(z));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (nonnegative_[static_cast<std::size_t>(i)]) x[i] = std::abs(x[i]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

void CmaEs::tell(std::span<const Eigen::VectorXd> candidates, std::span<const double> fitness,
                 const std::vector<bool>& injected) {
  if (candidates.size() != fitness.size()) throw InvalidInput("CMA-ES tell: fitness count != candidate count");
  if (candidates.size() != lambda_) throw InvalidInput("CMA-ES tell: expected one fitness per population member");
  if (!injected.empty() && injected.size() != candidates.size()) {
    throw InvalidInput("CMA-ES tell: injected mask length mismatch");
  }
  ++generation_;
  const auto [lo, hi] = std::minmax_element(fitness.begin(), fitness.end());
  if (*lo == *hi) {
    sigma_ *= std::exp(0.2 + cs_ / damps_);
    return;
  }

  std::vector<std::size_t> order(lambda_);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });

  const auto d = mean_.size();
  const Eigen::MatrixXd inv_sqrt = basis_ * scale_.cwiseInverse().asDiagonal() * basis_.transpose();
  const double clip = std::sqrt(static_cast<double>(d)) + 2.0 * static_cast<double>(d) / (static_cast<double>(d) + 2.0);

  std::vector<Eigen::VectorXd> steps;
  steps.reserve(mu_);
  Eigen::VectorXd step_w = Eigen::VectorXd::Zero(d);
  for (std::size_t r = 0; r < mu_; ++r) {
    const std::size_t k = order[r];
    Eigen::VectorXd y = (candidates[k] - mean_) / sigma_;
    if (!injected.empty() && injected[k]) {
      const double norm = (inv_sqrt * y).norm();
      if (norm > clip) y *= clip / norm;
    }
    step_w += weights_[static_cast<Eigen::Index>(r)] * y;
    steps.push_back(std::move(y));
  }

  mean_ += sigma_ * step_w;

  path_s_ = (1.0 - cs_) * path_s_ + std::sqrt(cs_ * (2.0 - cs_) * mueff_) * (inv_sqrt * step_w);
  const double ps_norm = path_s_.norm();
  const double decay = 1.0 - std::pow(1.0 - cs_, 2.0 * static_cast<double>(generation_));
  const bool hsig = ps_norm / std::sqrt(decay) < (1.4 + 2.0 / (static_cast<double>(d) + 1.0)) * chi_n_;
  path_c_ = (1.0 - cc_) * path_c_ + (hsig ? std::sqrt(cc_ * (2.0 - cc_) * mueff_) : 0.0) * step_w;

  Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t r = 0; r < mu_; ++r) {
    rank_mu += weights_[static_cast<Eigen::Index>(r)] * steps[r] * steps[r].transpose();
  }
  const double hsig_correction = hsig ? 0.0 : cc_ * (2.0 - cc_);
  cov_ = (1.0 - c1_ - cmu_) * cov_ + c1_ * (path_c_ * path_c_.transpose() + hsig_correction * cov_) + cmu_ * rank_mu;

  sigma_ *= std::exp((cs_ / damps_) * (ps_norm / chi_n_ - 1.0));
  decompose();
}

void CmaEs::decompose() {
  cov_ = 0.5 * (cov_ + cov_.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov_);
  bool degenerate = solver.info() != Eigen::Success || !cov_.allFinite() || !std::isfinite(sigma_) || sigma_ <= 0.0;
  if (!degenerate) {
    const auto& ev = solver.eigenvalues();
    degenerate = ev.minCoeff() <= 0.0 || ev.maxCoeff() > 1e14 * ev.minCoeff();
  }
  if (degenerate) {
    ++recoveries_;
    if (!std::isfinite(sigma_) || sigma_ <= 0.0) sigma_ = 1.0;
    sigma_ *= 0.5;
    reset_covariance();
    return;
  }
  basis_ = solver.eigenvectors();
  scale_ = solver.eigenvalues().cwiseSqrt();
}

}  // namespace bqaoa
