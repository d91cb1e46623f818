#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "relnodes/domain.hpp"

namespace relnodes {

/// Default tolerance below which an exact-model dependence measure counts as
/// zero (normalized partial covariance for Gaussians, CMI in bits for
/// discrete tables).
inline constexpr double kOracleTolerance = 1e-9;

/// Exact multivariate normal over a named domain. Immutable after
/// construction; the covariance is validated symmetric (1e-10) and positive
/// definite once, so every later query can assume a well-formed model.
class GaussianModel {
public:
    GaussianModel(Domain domain, Eigen::VectorXd mean, Eigen::MatrixXd cov);

    const Domain& domain() const { return domain_; }
    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::MatrixXd& cov() const { return cov_; }
    int size() const { return domain_.size(); }

    /// Marginal over `keep` (restriction of mean/cov to those rows/columns).
    GaussianModel marginalize(const VarSet& keep) const;

    /// Conditional distribution of the remaining variables given the
    /// assignments. Covariance is the Schur complement; the mean shifts by
    /// the regression of the kept block on the observed one.
    GaussianModel condition(const std::vector<std::pair<VariableId, double>>& given) const;

    /// Partial correlation of x and y given z, from the precision of the
    /// {x,y} union z sub-covariance. Zero iff x and y are conditionally
    /// independent given z in this model.
    double partial_correlation(VariableId x, VariableId y, const VarSet& z) const;

    /// Conditional covariance matrix of `vars` given `z` (block Schur
    /// complement); rows/columns follow the order of vars.ids().
    Eigen::MatrixXd conditional_cov(const VarSet& vars, const VarSet& z) const;

    /// Largest normalized conditional cross-covariance entry between x and y
    /// given z. Zero iff x is independent of y given z; for singleton x, y
    /// this is |partial_correlation|.
    double dependence_measure(const VarSet& x, const VarSet& y, const VarSet& z) const;

    bool independent(const VarSet& x, const VarSet& y, const VarSet& z,
                     double tol = kOracleTolerance) const {
        return dependence_measure(x, y, z) < tol;
    }

private:
    Domain domain_;
    Eigen::VectorXd mean_;
    Eigen::MatrixXd cov_;
};

}  // namespace relnodes
