#pragma once

#include <Eigen/Core>
#include <functional>
#include <span>
#include <vector>

#include "entlab/rng.hpp"

namespace entlab {

// Axis-aligned parameter box, product of [lo_j, hi_j].
struct ThetaBox {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const Eigen::VectorXd& theta, double tol = 0.0) const;
};

ThetaBox theta_interval(double lo, double hi);

// Family {p_theta} of laws on a finite alphabet; paths are iid draws per
// coordinate, so the path law is the product measure. theta0 is the data
// generating parameter and every p_theta must be absolutely continuous
// with respect to p_theta0 coordinatewise.
struct ParametricModel {
  int alphabet_size = 0;
  std::function<double(const Eigen::VectorXd&, int)> pmf;  // (theta, symbol)
  Eigen::VectorXd theta0;
  ThetaBox theta_domain;
};

ParametricModel bernoulli_model(double theta0, double lo = 0.05, double hi = 0.95);
// point mass on symbol 1 of a binary alphabet (no theta dependence)
ParametricModel dirac_binary_model();
// fixed per-symbol table, theta ignored; handy for multi-symbol tests
ParametricModel categorical_model(const Eigen::VectorXd& probs);

// Checks pmf normalization at each theta (within tol) and coordinatewise
// absolute continuity with respect to theta0. Throws on violation.
void validate_model(const ParametricModel& model, const std::vector<Eigen::VectorXd>& thetas,
                    double tol = 1e-12);

std::vector<int> sample_path(const ParametricModel& model, int length, Stream& rng);

double log_pmf(const ParametricModel& model, const Eigen::VectorXd& theta, int symbol);

// sum of log pmf over the first n coordinates
double path_log_likelihood(const ParametricModel& model, const Eigen::VectorXd& theta,
                           std::span<const int> path, int n);

// Gaussian random field observed at finitely many sites; theta enters
// through the mean and covariance kernel. Densities of the first n
// coordinates come from the leading n x n covariance block.
struct GaussianFieldModel {
  Eigen::MatrixXd sites;  // one site per row
  std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&, const Eigen::VectorXd&)>
      kernel;  // (theta, s, t)
  std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)> mean;  // (theta, s)
  Eigen::VectorXd theta0;
  ThetaBox theta_domain;

  int site_count() const { return static_cast<int>(sites.rows()); }
};

// Zero-mean field on equally spaced 1-d sites in [0,1] with covariance
// theta[0] * exp(-|s-t|/range).
GaussianFieldModel exp_variance_field(int n_sites, double range, double theta0_variance,
                                      double var_lo, double var_hi);

// log f_n^theta(y) for the first n coordinates, via LLT of the jittered
// covariance (diagonal bump 1e-10 * mean diagonal, one retry at 1e-8).
// Throws when both factorizations fail, naming theta and n.
double gaussian_log_density(const GaussianFieldModel& model, const Eigen::VectorXd& theta,
                            const Eigen::VectorXd& y, int n);

// log L_n^theta = log f_n^theta - log f_n^theta0
double gaussian_log_ratio(const GaussianFieldModel& model, const Eigen::VectorXd& theta,
                          const Eigen::VectorXd& y, int n);

// One draw of the field at all sites under theta0.
Eigen::VectorXd sample_field(const GaussianFieldModel& model, Stream& rng);

}  // namespace entlab
