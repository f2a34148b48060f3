#include "cellkit/ball.hpp"

#include <tuple>

namespace cellkit {

Ball::Ball(const Padic& center, long long radius)
    : center_(center.truncated(radius)), radius_(radius) {}

Padic Ball::lift(long long abs_prec) const {
  if (!center_.known_nonzero()) return Padic::zero(center_.prime());
  return Padic::from_word(center_.prime(), center_.val_raw(), center_.digits(),
                          abs_prec);
}

bool Ball::contains(const Padic& x) const {
  Padic diff = x - lift(std::max(radius_ + 1, x.abs_precision() == Padic::kExact
                                                  ? radius_ + 1
                                                  : x.abs_precision()));
  Valuation lb = diff.ord_lower_bound();
  if (lb >= Valuation(radius_)) return true;
  if (diff.known_nonzero()) return false;
  fail(errc::insufficient_precision, "membership in ball undecidable");
}

bool Ball::contains_ball(const Ball& other) const {
  if (other.radius_ < radius_) return false;
  return contains(other.lift(std::max(radius_, other.radius_) + 1));
}

bool Ball::intersects(const Ball& other) const {
  return contains_ball(other) || other.contains_ball(*this);
}

digit_t Ball::digit_at(long long pos) const {
  if (pos >= radius_)
    fail(errc::insufficient_precision, "ball digit below its own radius");
  return center_.digit_at(pos);
}

Ball Ball::translated(const Padic& shift) const {
  long long prec = std::max(radius_ + 1, shift.abs_precision() == Padic::kExact
                                             ? radius_ + 1
                                             : shift.abs_precision());
  return Ball(lift(prec) + shift, radius_);
}

bool operator==(const Ball& a, const Ball& b) {
  return a.radius_ == b.radius_ && a.center_.same_value(b.center_);
}

bool operator<(const Ball& a, const Ball& b) {
  auto key = [](const Ball& x) {
    long long v = x.center_.known_nonzero() ? x.center_.val_raw()
                                            : std::numeric_limits<long long>::max();
    return std::tuple<long long, long long, const std::vector<digit_t>&>(
        x.radius_, v, x.center_.digits());
  };
  return key(a) < key(b);
}

}  // namespace cellkit
