#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace hopfmi {

/// Map-backed memo table safe for concurrent readers. Values are computed
/// outside the lock; when two tasks race on one key the first insert wins and
/// both observe the same stored value.
template <class Key, class Value>
class ConcurrentMemo {
public:
    template <class Compute>
    const Value& get_or_compute(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

    bool insert(const Key& key, Value value) {
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).second;
    }

    const Value* find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        return it == table_.end() ? nullptr : &it->second;
    }

    /// Copy of the current contents, in key order.
    std::map<Key, Value> snapshot() const {
        std::shared_lock lock(mutex_);
        return table_;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

}  // namespace hopfmi
