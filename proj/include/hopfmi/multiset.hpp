#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hopfmi {

/// Finite multiset stored as a sorted vector. Equality and ordering are
/// lexicographic on the sorted items, so equal multisets compare equal.
template <class T>
class Multiset {
public:
    using value_type = T;
    using const_iterator = typename std::vector<T>::const_iterator;

    Multiset() = default;

    explicit Multiset(std::vector<T> items) : items_(std::move(items)) {
        std::sort(items_.begin(), items_.end());
    }

    Multiset(std::initializer_list<T> items) : Multiset(std::vector<T>(items)) {}

    const std::vector<T>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    const_iterator begin() const noexcept { return items_.begin(); }
    const_iterator end() const noexcept { return items_.end(); }
    const T& operator[](std::size_t i) const { return items_[i]; }

    /// Distinct elements with their multiplicities, in sorted order.
    std::vector<std::pair<T, std::size_t>> groups() const {
        std::vector<std::pair<T, std::size_t>> out;
        for (const auto& item : items_) {
            if (!out.empty() && out.back().first == item)
                ++out.back().second;
            else
                out.emplace_back(item, 1);
        }
        return out;
    }

    std::size_t count(const T& item) const {
        auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), item);
        return static_cast<std::size_t>(hi - lo);
    }

    Multiset with(const T& item) const {
        Multiset out(*this);
        out.items_.insert(std::upper_bound(out.items_.begin(), out.items_.end(), item), item);
        return out;
    }

    /// Removes one copy of `item`; the caller guarantees it is present.
    Multiset without(const T& item) const {
        Multiset out(*this);
        out.items_.erase(std::lower_bound(out.items_.begin(), out.items_.end(), item));
        return out;
    }

    friend Multiset operator*(const Multiset& a, const Multiset& b) {
        Multiset out;
        out.items_.reserve(a.size() + b.size());
        std::merge(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                   std::back_inserter(out.items_));
        return out;
    }

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend auto operator<=>(const Multiset& a, const Multiset& b) {
        return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                      b.items_.begin(), b.items_.end());
    }

private:
    std::vector<T> items_;
};

template <class T>
struct Split {
    Multiset<T> left;
    Multiset<T> right;
    Integer multiplicity;
};

/// Deshuffle support: every split of `m` into (left, complement) by content,
/// once each, weighted by the number of position subsets realizing it.
template <class T>
std::vector<Split<T>> multiset_splits(const Multiset<T>& m) {
    const auto groups = m.groups();
    std::vector<Split<T>> out;
    std::vector<std::size_t> take(groups.size(), 0);
    for (;;) {
        std::vector<T> left, right;
        Integer multiplicity = 1;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const auto& [item, count] = groups[g];
            left.insert(left.end(), take[g], item);
            right.insert(right.end(), count - take[g], item);
            multiplicity *= binomial(count, take[g]);
        }
        out.push_back({Multiset<T>(std::move(left)), Multiset<T>(std::move(right)), multiplicity});
        std::size_t g = 0;
        while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
        if (g == groups.size()) break;
        ++take[g];
    }
    return out;
}

}  // namespace hopfmi
