#include "relnodes/discrete_joint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace relnodes {

MixedRadix::MixedRadix(std::vector<int> cards) : cards_(std::move(cards)) {
    size_ = 1;
    for (int c : cards_) {
        if (c < 1) throw std::invalid_argument("MixedRadix: cardinality must be positive");
        if (size_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(c))
            throw std::invalid_argument("MixedRadix: table size overflow");
        size_ *= static_cast<std::size_t>(c);
    }
}

std::size_t MixedRadix::index(std::span<const int> assignment) const {
    if (assignment.size() != cards_.size())
        throw std::invalid_argument("MixedRadix: assignment length mismatch");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < cards_.size(); ++k) {
        const int a = assignment[k];
        if (a < 0 || a >= cards_[k])
            throw std::invalid_argument("MixedRadix: assignment value out of range");
        idx = idx * static_cast<std::size_t>(cards_[k]) + static_cast<std::size_t>(a);
    }
    return idx;
}

std::vector<int> MixedRadix::assignment(std::size_t index) const {
    std::vector<int> a(cards_.size(), 0);
    for (std::size_t k = cards_.size(); k-- > 0;) {
        a[k] = static_cast<int>(index % static_cast<std::size_t>(cards_[k]));
        index /= static_cast<std::size_t>(cards_[k]);
    }
    return a;
}

bool MixedRadix::next(std::vector<int>& a) const {
    for (std::size_t k = cards_.size(); k-- > 0;) {
        if (++a[k] < cards_[k]) return true;
        a[k] = 0;
    }
    return false;
}

DiscreteJoint::DiscreteJoint(Domain domain, std::vector<int> cardinalities,
                             std::vector<double> probs)
    : domain_(std::move(domain)), indexer_(std::move(cardinalities)), probs_(std::move(probs)) {
    if (domain_.size() == 0) throw std::invalid_argument("DiscreteJoint: empty domain");
    if (indexer_.digits() != domain_.size())
        throw std::invalid_argument("DiscreteJoint: cardinalities do not match domain");
    if (probs_.size() != indexer_.size())
        throw std::invalid_argument("DiscreteJoint: table size does not match cardinalities");
    double total = 0.0;
    strictly_positive_ = true;
    for (double p : probs_) {
        if (p < 0.0) throw std::invalid_argument("DiscreteJoint: negative probability");
        if (p <= 0.0) strictly_positive_ = false;
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("DiscreteJoint: probabilities do not sum to 1");
}

DiscreteJoint DiscreteJoint::marginalize(const VarSet& keep) const {
    if (keep.empty()) throw std::invalid_argument("marginalize: empty keep set");
    require_in_domain(domain_, keep, "marginalize");
    std::vector<double> table = marginal_table(keep);
    std::vector<int> cards;
    for (VariableId v : keep) cards.push_back(cardinality(v));
    return DiscreteJoint(Domain(domain_.names_of(keep)), std::move(cards), std::move(table));
}

DiscreteJoint DiscreteJoint::condition(
    const std::vector<std::pair<VariableId, int>>& given) const {
    if (given.empty()) throw std::invalid_argument("condition: no assignments");
    VarSet observed;
    for (const auto& [v, value] : given) {
        if (v < 0 || v >= domain_.size())
            throw std::invalid_argument("condition: variable index out of domain range");
        if (value < 0 || value >= cardinality(v))
            throw std::invalid_argument("condition: value out of range for " + domain_.name(v));
        if (observed.contains(v))
            throw std::invalid_argument("condition: duplicate assignment for " + domain_.name(v));
        observed.insert(v);
    }
    const VarSet keep = domain_.all() - observed;
    if (keep.empty())
        throw std::invalid_argument("condition: cannot condition on all variables");

    std::vector<int> fixed(static_cast<std::size_t>(domain_.size()), -1);
    for (const auto& [v, value] : given) fixed[static_cast<std::size_t>(v)] = value;

    std::vector<int> keep_cards;
    for (VariableId v : keep) keep_cards.push_back(cardinality(v));
    MixedRadix sub(keep_cards);
    std::vector<double> table(sub.size(), 0.0);

    std::vector<int> a(static_cast<std::size_t>(domain_.size()), 0);
    std::vector<int> key(keep.ids().size(), 0);
    double event_prob = 0.0;
    do {
        bool match = true;
        for (std::size_t k = 0; k < fixed.size(); ++k) {
            if (fixed[k] >= 0 && a[k] != fixed[k]) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        const double p = probs_[indexer_.index(a)];
        event_prob += p;
        for (std::size_t k = 0; k < keep.ids().size(); ++k)
            key[k] = a[static_cast<std::size_t>(keep.ids()[k])];
        table[sub.index(key)] += p;
    } while (indexer_.next(a));

    if (event_prob <= 0.0)
        throw std::invalid_argument("condition: conditioning event has zero probability");
    for (double& p : table) p /= event_prob;
    return DiscreteJoint(Domain(domain_.names_of(keep)), std::move(keep_cards), std::move(table));
}

std::vector<double> DiscreteJoint::marginal_table(const VarSet& vars) const {
    require_in_domain(domain_, vars, "marginal_table");
    std::vector<int> cards;
    for (VariableId v : vars) cards.push_back(cardinality(v));
    MixedRadix sub(cards);
    std::vector<double> table(sub.size(), 0.0);

    std::vector<int> a(static_cast<std::size_t>(domain_.size()), 0);
    std::vector<int> key(vars.ids().size(), 0);
    std::size_t flat = 0;
    do {
        for (std::size_t k = 0; k < vars.ids().size(); ++k)
            key[k] = a[static_cast<std::size_t>(vars.ids()[k])];
        table[sub.index(key)] += probs_[flat];
        ++flat;
    } while (indexer_.next(a));
    return table;
}

double DiscreteJoint::mutual_information(const VarSet& x, const VarSet& y,
                                         const VarSet& z) const {
    if (x.empty() || y.empty())
        throw std::invalid_argument("mutual_information: x and y must be nonempty");
    if (!x.disjoint(y) || !x.disjoint(z) || !y.disjoint(z))
        throw std::invalid_argument("mutual_information: sets must be mutually disjoint");
    require_in_domain(domain_, x | y | z, "mutual_information");

    const VarSet xyz = x | y | z;
    const VarSet xz = x | z;
    const VarSet yz = y | z;

    const std::vector<double> p_xyz = marginal_table(xyz);
    const std::vector<double> p_xz = marginal_table(xz);
    const std::vector<double> p_yz = marginal_table(yz);
    std::vector<double> p_z;
    if (!z.empty()) p_z = marginal_table(z);

    // Positions of the xz / yz / z variables inside the xyz ordering.
    auto positions = [&](const VarSet& sub) {
        std::vector<std::size_t> pos;
        for (VariableId v : sub) {
            const auto& ids = xyz.ids();
            pos.push_back(static_cast<std::size_t>(
                std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
        }
        return pos;
    };
    const auto pos_xz = positions(xz);
    const auto pos_yz = positions(yz);
    const auto pos_z = positions(z);

    std::vector<int> cards_xyz, cards_xz, cards_yz, cards_z;
    for (VariableId v : xyz) cards_xyz.push_back(cardinality(v));
    for (VariableId v : xz) cards_xz.push_back(cardinality(v));
    for (VariableId v : yz) cards_yz.push_back(cardinality(v));
    for (VariableId v : z) cards_z.push_back(cardinality(v));
    MixedRadix idx_xyz(cards_xyz), idx_xz(cards_xz), idx_yz(cards_yz);
    MixedRadix idx_z(cards_z.empty() ? std::vector<int>{1} : cards_z);

    std::vector<int> a(cards_xyz.size(), 0);
    std::vector<int> key_xz(pos_xz.size()), key_yz(pos_yz.size()), key_z(pos_z.size());
    double cmi = 0.0;
    std::size_t flat = 0;
    do {
        const double pj = p_xyz[flat];
        ++flat;
        if (pj <= 0.0) continue;
        for (std::size_t k = 0; k < pos_xz.size(); ++k) key_xz[k] = a[pos_xz[k]];
        for (std::size_t k = 0; k < pos_yz.size(); ++k) key_yz[k] = a[pos_yz[k]];
        const double pxz = p_xz[idx_xz.index(key_xz)];
        const double pyz = p_yz[idx_yz.index(key_yz)];
        double pz = 1.0;
        if (!z.empty()) {
            for (std::size_t k = 0; k < pos_z.size(); ++k) key_z[k] = a[pos_z[k]];
            pz = p_z[idx_z.index(key_z)];
        }
        cmi += pj * std::log2(pj * pz / (pxz * pyz));
    } while (idx_xyz.next(a));

    return std::max(0.0, cmi);
}

}  // namespace relnodes
