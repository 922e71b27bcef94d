// Internal build-once cache for divisor classes. Several constructors and
// substitution maps produce classes whose term count is exponential in the
// number of marked points; each distinct input is built once and copied out
// afterwards. Not part of the public interface.
#pragma once

#include "picalc/classes.hpp"

#include <map>
#include <mutex>
#include <string>

namespace picalc::detail {

class ClassMemo {
  public:
    // Returns the cached class for `key`, building and storing it first if
    // absent. A `build` that throws caches nothing. Thread-safe.
    template <class Build>
    DivisorClass get(const std::string& key, Build&& build) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, build()).first;
        return it->second;
    }

  private:
    std::mutex mutex_;
    std::map<std::string, DivisorClass> cache_;
};

} // namespace picalc::detail
