#pragma once

#include <string>

#include "cellkit/padic.hpp"

namespace cellkit {

// Closed ball c + p^radius * O = { x : ord(x - c) >= radius }. The stored
// center is canonical: digits truncated at the radius, so two balls are
// equal as sets iff they compare equal.
class Ball {
 public:
  Ball(const Padic& center, long long radius);

  long long prime() const { return center_.prime(); }
  long long radius() const { return radius_; }
  const Padic& center() const { return center_; }
  std::string center_text() const { return center_.text_padded(radius_); }

  // Exact representative of the canonical center, padded to abs precision.
  Padic lift(long long abs_prec) const;

  bool contains(const Padic& x) const;
  bool contains_ball(const Ball& other) const;
  bool intersects(const Ball& other) const;
  Ball parent() const { return Ball(center_, radius_ - 1); }
  digit_t digit_at(long long pos) const;

  Ball translated(const Padic& shift) const;

  friend bool operator==(const Ball& a, const Ball& b);
  friend bool operator<(const Ball& a, const Ball& b);

 private:
  Padic center_;
  long long radius_;
};

}  // namespace cellkit
