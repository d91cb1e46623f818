#include "relnodes/gaussian_model.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relnodes {

namespace {

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    Eigen::MatrixXd out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(rows[i], cols[j]);
    return out;
}

}  // namespace

GaussianModel::GaussianModel(Domain domain, Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : domain_(std::move(domain)), mean_(std::move(mean)), cov_(std::move(cov)) {
    const int n = domain_.size();
    if (n == 0) throw std::invalid_argument("GaussianModel: empty domain");
    if (mean_.size() != n || cov_.rows() != n || cov_.cols() != n)
        throw std::invalid_argument("GaussianModel: mean/cov dimensions do not match domain");
    const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw std::invalid_argument("GaussianModel: covariance not symmetric");
    cov_ = ((cov_ + cov_.transpose()) / 2.0).eval();
    Eigen::LLT<Eigen::MatrixXd> llt(cov_);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("GaussianModel: covariance not positive definite");
}

GaussianModel GaussianModel::marginalize(const VarSet& keep) const {
    if (keep.empty()) throw std::invalid_argument("marginalize: empty keep set");
    require_in_domain(domain_, keep, "marginalize");
    const auto& ids = keep.ids();
    Eigen::VectorXd mu(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) mu(static_cast<Eigen::Index>(i)) = mean_(ids[i]);
    Eigen::MatrixXd sigma = submatrix(cov_, ids, ids);
    return GaussianModel(Domain(domain_.names_of(keep)), std::move(mu), std::move(sigma));
}

GaussianModel GaussianModel::condition(
    const std::vector<std::pair<VariableId, double>>& given) const {
    if (given.empty()) throw std::invalid_argument("condition: no assignments");
    VarSet observed;
    for (const auto& [v, value] : given) {
        (void)value;
        if (v < 0 || v >= size())
            throw std::invalid_argument("condition: variable index out of domain range");
        if (observed.contains(v))
            throw std::invalid_argument("condition: duplicate assignment for " + domain_.name(v));
        observed.insert(v);
    }
    const VarSet keep = domain_.all() - observed;
    if (keep.empty())
        throw std::invalid_argument("condition: cannot condition on all variables");

    const auto& a = keep.ids();
    const auto& b = observed.ids();
    Eigen::VectorXd w(b.size());
    for (const auto& [v, value] : given) {
        auto pos = std::lower_bound(b.begin(), b.end(), v) - b.begin();
        w(pos) = value;
    }

    const Eigen::MatrixXd saa = submatrix(cov_, a, a);
    const Eigen::MatrixXd sab = submatrix(cov_, a, b);
    const Eigen::MatrixXd sbb = submatrix(cov_, b, b);
    Eigen::VectorXd mu_a(a.size()), mu_b(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) mu_a(static_cast<Eigen::Index>(i)) = mean_(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) mu_b(static_cast<Eigen::Index>(i)) = mean_(b[i]);

    Eigen::LDLT<Eigen::MatrixXd> ldlt(sbb);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("condition: observed-block covariance is singular");
    const Eigen::MatrixXd regression = ldlt.solve(sab.transpose()).transpose();
    Eigen::MatrixXd sigma = saa - regression * sab.transpose();
    Eigen::VectorXd mu = mu_a + regression * (w - mu_b);
    return GaussianModel(Domain(domain_.names_of(keep)), std::move(mu), std::move(sigma));
}

double GaussianModel::partial_correlation(VariableId x, VariableId y, const VarSet& z) const {
    if (x == y) throw std::invalid_argument("partial_correlation: x and y must differ");
    if (z.contains(x) || z.contains(y))
        throw std::invalid_argument("partial_correlation: conditioning set overlaps x or y");
    require_in_domain(domain_, VarSet{x, y} | z, "partial_correlation");

    std::vector<int> sub{x, y};
    sub.insert(sub.end(), z.ids().begin(), z.ids().end());
    const Eigen::MatrixXd s = submatrix(cov_, sub, sub);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(s);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("partial_correlation: singular sub-covariance");
    const Eigen::MatrixXd precision =
        ldlt.solve(Eigen::MatrixXd::Identity(s.rows(), s.cols()));
    const double denom = std::sqrt(precision(0, 0) * precision(1, 1));
    if (!std::isfinite(denom) || denom <= 0.0)
        throw std::runtime_error("partial_correlation: singular sub-covariance");
    return std::clamp(-precision(0, 1) / denom, -1.0, 1.0);
}

Eigen::MatrixXd GaussianModel::conditional_cov(const VarSet& vars, const VarSet& z) const {
    if (!vars.disjoint(z))
        throw std::invalid_argument("conditional_cov: sets overlap");
    require_in_domain(domain_, vars | z, "conditional_cov");
    const auto& a = vars.ids();
    const Eigen::MatrixXd saa = submatrix(cov_, a, a);
    if (z.empty()) return saa;
    const auto& b = z.ids();
    const Eigen::MatrixXd sab = submatrix(cov_, a, b);
    const Eigen::MatrixXd sbb = submatrix(cov_, b, b);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(sbb);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("conditional_cov: singular conditioning block");
    return saa - sab * ldlt.solve(sab.transpose());
}

double GaussianModel::dependence_measure(const VarSet& x, const VarSet& y,
                                         const VarSet& z) const {
    if (x.empty() || y.empty())
        throw std::invalid_argument("dependence_measure: x and y must be nonempty");
    if (!x.disjoint(y) || !x.disjoint(z) || !y.disjoint(z))
        throw std::invalid_argument("dependence_measure: sets must be mutually disjoint");
    const VarSet joint = x | y;
    const Eigen::MatrixXd c = conditional_cov(joint, z);

    // Positions of x and y members within the joint (sorted) ordering.
    const auto& ids = joint.ids();
    double worst = 0.0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!x.contains(ids[i])) continue;
        for (std::size_t j = 0; j < ids.size(); ++j) {
            if (!y.contains(ids[j])) continue;
            const Eigen::Index ii = static_cast<Eigen::Index>(i);
            const Eigen::Index jj = static_cast<Eigen::Index>(j);
            const double denom = std::sqrt(c(ii, ii) * c(jj, jj));
            if (denom <= 0.0)
                throw std::runtime_error("dependence_measure: degenerate conditional variance");
            worst = std::max(worst, std::abs(c(ii, jj)) / denom);
        }
    }
    return worst;
}

}  // namespace relnodes
