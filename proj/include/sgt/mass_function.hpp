#pragma once

#include <map>

#include "sgt/scalar.hpp"

namespace sgt {

// Finite sparse measure on an ordered state space. Realizes every kernel row
// and probability measure in the project; a nonzero tail_bound records the
// certified mass that a truncated row may be missing.
template <class State, class T>
class MassFunction {
 public:
  using Map = std::map<State, T>;

  void add(const State& s, const T& mass) {
    if (mass == T(0)) return;
    auto it = map_.find(s);
    if (it == map_.end())
      map_.emplace(s, mass);
    else
      it->second += mass;
  }

  T at(const State& s) const {
    auto it = map_.find(s);
    return it == map_.end() ? T(0) : it->second;
  }

  T total() const {
    T acc(0);
    for (const auto& [s, m] : map_) acc += m;
    return acc;
  }

  std::size_t support_size() const { return map_.size(); }
  bool contains(const State& s) const { return map_.count(s) > 0; }

  typename Map::const_iterator begin() const { return map_.begin(); }
  typename Map::const_iterator end() const { return map_.end(); }

  double tail_bound = 0.0;

 private:
  Map map_;
};

}  // namespace sgt
