#pragma once

#include <map>
#include <string>
#include <vector>

#include "cellkit/ball.hpp"

namespace cellkit {

// Parameter points of a finite base set; functions on the base enter the
// toolkit as explicit per-point tables.
using BaseSet = std::vector<std::string>;
template <class T>
using Table = std::map<std::string, T>;

struct Fiber {
  long long radius = 0;
  std::vector<Ball> balls;  // pairwise disjoint, all of the given radius
};

// Family over a finite base whose every fiber is a disjoint union of k
// balls of a common per-fiber radius.
class MultiBall {
 public:
  MultiBall(long long p, BaseSet base, Table<Fiber> fibers);

  long long prime() const { return p_; }
  const BaseSet& base() const { return base_; }
  const Table<Fiber>& fibers() const { return fibers_; }
  const Fiber& fiber(const std::string& s) const;
  int order() const { return order_; }

  MultiBall restricted(const BaseSet& sub) const;
  MultiBall with_fiber_balls(const Table<std::vector<Ball>>& balls) const;
  MultiBall translated(const Table<Padic>& shift) const;

 private:
  long long p_;
  BaseSet base_;
  Table<Fiber> fibers_;
  int order_ = 0;
};

}  // namespace cellkit
