#include "cellkit/multiball.hpp"

#include <algorithm>
#include <set>

namespace cellkit {

MultiBall::MultiBall(long long p, BaseSet base, Table<Fiber> fibers)
    : p_(p), base_(std::move(base)), fibers_(std::move(fibers)) {
  if (base_.empty()) fail(errc::validation, "empty base set");
  std::set<std::string> seen;
  for (const auto& s : base_)
    if (!seen.insert(s).second)
      fail(errc::validation, "duplicate base point " + s);
  if (fibers_.size() != base_.size())
    fail(errc::validation, "fiber table does not match base set");
  int k = -1;
  for (const auto& s : base_) {
    auto it = fibers_.find(s);
    if (it == fibers_.end())
      fail(errc::validation, "missing fiber for base point " + s);
    Fiber& f = it->second;
    std::sort(f.balls.begin(), f.balls.end());
    for (size_t i = 0; i < f.balls.size(); ++i) {
      if (f.balls[i].prime() != p_)
        fail(errc::validation, "mixed residue characteristics in fiber " + s);
      if (f.balls[i].radius() != f.radius)
        fail(errc::validation, "ball radius differs from fiber radius at " + s);
      if (i > 0 && f.balls[i] == f.balls[i - 1])
        fail(errc::validation, "repeated ball in fiber " + s);
    }
    if (k < 0)
      k = static_cast<int>(f.balls.size());
    else if (k != static_cast<int>(f.balls.size()))
      fail(errc::validation, "ball count differs across fibers (at " + s + ")");
  }
  order_ = k;
}

const Fiber& MultiBall::fiber(const std::string& s) const {
  auto it = fibers_.find(s);
  if (it == fibers_.end()) fail(errc::unknown_base_point, s);
  return it->second;
}

MultiBall MultiBall::restricted(const BaseSet& sub) const {
  Table<Fiber> fs;
  for (const auto& s : sub) fs.emplace(s, fiber(s));
  return MultiBall(p_, sub, std::move(fs));
}

MultiBall MultiBall::with_fiber_balls(const Table<std::vector<Ball>>& balls) const {
  Table<Fiber> fs;
  BaseSet names;
  for (const auto& [s, bs] : balls) {
    names.push_back(s);
    Fiber f;
    f.radius = bs.empty() ? fiber(s).radius : bs.front().radius();
    f.balls = bs;
    fs.emplace(s, std::move(f));
  }
  return MultiBall(p_, names, std::move(fs));
}

MultiBall MultiBall::translated(const Table<Padic>& shift) const {
  Table<Fiber> fs;
  for (const auto& s : base_) {
    auto it = shift.find(s);
    if (it == shift.end()) fail(errc::unknown_base_point, "no shift for " + s);
    const Fiber& f = fiber(s);
    Fiber g;
    g.radius = f.radius;
    for (const Ball& b : f.balls) g.balls.push_back(b.translated(it->second));
    fs.emplace(s, std::move(g));
  }
  return MultiBall(p_, base_, std::move(fs));
}

}  // namespace cellkit
