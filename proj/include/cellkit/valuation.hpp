#pragma once

#include <limits>
#include <string>

#include "cellkit/errors.hpp"

namespace cellkit {

// Element of the value group Z together with the distinguished Infinity
// (the valuation of zero). Infinity is greater than every integer.
class Valuation {
 public:
  constexpr Valuation() : v_(0), inf_(false) {}
  constexpr Valuation(long long v) : v_(v), inf_(false) {}  // NOLINT implicit

  static constexpr Valuation infinity() {
    Valuation g;
    g.inf_ = true;
    return g;
  }

  constexpr bool is_infinite() const { return inf_; }

  long long finite() const {
    if (inf_) fail(errc::validation, "valuation is infinite");
    return v_;
  }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr bool operator!=(Valuation a, Valuation b) { return !(a == b); }
  friend constexpr bool operator<(Valuation a, Valuation b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator>(Valuation a, Valuation b) { return b < a; }
  friend constexpr bool operator<=(Valuation a, Valuation b) { return !(b < a); }
  friend constexpr bool operator>=(Valuation a, Valuation b) { return !(a < b); }

  Valuation operator+(long long d) const {
    if (inf_) return *this;
    return Valuation(v_ + d);
  }

  friend Valuation min(Valuation a, Valuation b) { return a < b ? a : b; }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  long long v_;
  bool inf_;
};

}  // namespace cellkit
