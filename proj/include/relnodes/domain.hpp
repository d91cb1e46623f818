#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace relnodes {

/// Dense index of a variable within a Domain.
using VariableId = int;

/// Sorted, duplicate-free set of variable indices. Every subset the library
/// handles (targets, context, conditioning sets, keep/hide sets) is a VarSet
/// over one Domain.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<VariableId> ids) : ids_(ids) { normalize(); }
    explicit VarSet(std::vector<VariableId> ids) : ids_(std::move(ids)) { normalize(); }

    static VarSet full(int n) {
        std::vector<VariableId> ids(static_cast<std::size_t>(n));
        std::iota(ids.begin(), ids.end(), 0);
        return VarSet(std::move(ids));
    }

    bool empty() const { return ids_.empty(); }
    int size() const { return static_cast<int>(ids_.size()); }

    bool contains(VariableId v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }

    void insert(VariableId v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }

    void erase(VariableId v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it != ids_.end() && *it == v) ids_.erase(it);
    }

    bool disjoint(const VarSet& other) const {
        auto a = ids_.begin();
        auto b = other.ids_.begin();
        while (a != ids_.end() && b != other.ids_.end()) {
            if (*a == *b) return false;
            if (*a < *b) ++a; else ++b;
        }
        return true;
    }

    bool subset_of(const VarSet& other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }

    const std::vector<VariableId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend VarSet operator|(const VarSet& a, const VarSet& b) {
        std::vector<VariableId> out;
        out.reserve(a.ids_.size() + b.ids_.size());
        std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                       std::back_inserter(out));
        VarSet r;
        r.ids_ = std::move(out);
        return r;
    }

    friend VarSet operator-(const VarSet& a, const VarSet& b) {
        std::vector<VariableId> out;
        std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                            std::back_inserter(out));
        VarSet r;
        r.ids_ = std::move(out);
        return r;
    }

    friend VarSet operator&(const VarSet& a, const VarSet& b) {
        std::vector<VariableId> out;
        std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                              std::back_inserter(out));
        VarSet r;
        r.ids_ = std::move(out);
        return r;
    }

    bool operator==(const VarSet&) const = default;
    auto operator<=>(const VarSet&) const = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
        if (!ids_.empty() && ids_.front() < 0)
            throw std::invalid_argument("VarSet: negative variable index");
    }

    std::vector<VariableId> ids_;
};

/// Ordered list of uniquely named variables; indices are dense 0..n-1.
class Domain {
public:
    Domain() = default;

    explicit Domain(std::vector<std::string> names) : names_(std::move(names)) {
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
            if (names_[i].empty())
                throw std::invalid_argument("Domain: empty variable name");
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("Domain: duplicate variable name '" + names_[i] + "'");
        }
    }

    int size() const { return static_cast<int>(names_.size()); }

    const std::string& name(VariableId id) const {
        if (id < 0 || id >= size())
            throw std::invalid_argument("Domain: variable index out of range");
        return names_[static_cast<std::size_t>(id)];
    }

    std::optional<VariableId> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VariableId index_of(const std::string& name) const {
        auto id = find(name);
        if (!id) throw std::invalid_argument("Domain: unknown variable '" + name + "'");
        return *id;
    }

    const std::vector<std::string>& names() const { return names_; }

    VarSet all() const { return VarSet::full(size()); }

    std::vector<std::string> names_of(const VarSet& set) const {
        std::vector<std::string> out;
        out.reserve(static_cast<std::size_t>(set.size()));
        for (VariableId v : set) out.push_back(name(v));
        return out;
    }

    VarSet set_of(const std::vector<std::string>& names) const {
        std::vector<VariableId> ids;
        ids.reserve(names.size());
        for (const auto& n : names) ids.push_back(index_of(n));
        return VarSet(std::move(ids));
    }

    bool operator==(const Domain& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VariableId> index_;
};

/// Validates that the given set indexes into the domain.
inline void require_in_domain(const Domain& d, const VarSet& s, const char* what) {
    if (s.empty()) return;
    if (s.ids().back() >= d.size())
        throw std::invalid_argument(std::string(what) + ": variable index out of domain range");
}

}  // namespace relnodes
