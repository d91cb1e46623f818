#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "relnodes/domain.hpp"

namespace relnodes {

/// Odometer over a mixed-radix assignment space. Variable 0 is the most
/// significant digit, so flat indices enumerate assignments row-major by
/// variable index order.
class MixedRadix {
public:
    explicit MixedRadix(std::vector<int> cards);

    std::size_t size() const { return size_; }
    int digits() const { return static_cast<int>(cards_.size()); }
    const std::vector<int>& cards() const { return cards_; }

    std::size_t index(std::span<const int> assignment) const;
    std::vector<int> assignment(std::size_t index) const;

    /// Advances `a` to the next assignment; returns false after the last one.
    bool next(std::vector<int>& a) const;

private:
    std::vector<int> cards_;
    std::size_t size_;
};

/// Exact joint probability table over finite-cardinality variables, stored
/// flat in row-major mixed-radix order. Immutable after construction.
class DiscreteJoint {
public:
    DiscreteJoint(Domain domain, std::vector<int> cardinalities, std::vector<double> probs);

    const Domain& domain() const { return domain_; }
    const std::vector<int>& cardinalities() const { return indexer_.cards(); }
    int cardinality(VariableId v) const { return indexer_.cards()[static_cast<std::size_t>(v)]; }
    const std::vector<double>& probs() const { return probs_; }
    const MixedRadix& indexer() const { return indexer_; }

    /// True iff every table entry is strictly greater than zero.
    bool strictly_positive() const { return strictly_positive_; }

    double prob(std::span<const int> assignment) const {
        return probs_[indexer_.index(assignment)];
    }

    DiscreteJoint marginalize(const VarSet& keep) const;
    DiscreteJoint condition(const std::vector<std::pair<VariableId, int>>& given) const;

    /// Marginal table over `vars`, flat in the mixed radix of their (sorted)
    /// cardinalities.
    std::vector<double> marginal_table(const VarSet& vars) const;

    /// Conditional mutual information I(x; y | z) in bits. Nonnegative; zero
    /// iff x is independent of y given z in this table.
    double mutual_information(const VarSet& x, const VarSet& y, const VarSet& z) const;

    bool independent(const VarSet& x, const VarSet& y, const VarSet& z,
                     double tol = 1e-9) const {
        return mutual_information(x, y, z) < tol;
    }

private:
    Domain domain_;
    MixedRadix indexer_;
    std::vector<double> probs_;
    bool strictly_positive_ = false;
};

}  // namespace relnodes
