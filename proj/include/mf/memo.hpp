/*
   Copyright 2026 The mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace mf {

/// Read-mostly cache of immutable values. Concurrent readers share the lock;
/// a miss computes outside the lock and the first insert wins, so population
/// is idempotent.
template <class Key, class Value>
class MemoCache {
public:
    template <class Compute>
    std::shared_ptr<const Value> get(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = entries_.find(key);
            if (it != entries_.end()) return it->second;
        }
        auto value = std::make_shared<const Value>(compute());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = entries_.emplace(key, std::move(value));
        return it->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const Value>> entries_;
};

}  // namespace mf
