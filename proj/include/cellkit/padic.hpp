#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cellkit/errors.hpp"
#include "cellkit/valuation.hpp"

namespace cellkit {

using digit_t = std::uint32_t;

// First m digits of the unit part of a nonzero element, packed as the
// integer sum d_0 + d_1 p + ... + d_{m-1} p^{m-1}. Always prime to p.
struct ResidueWord {
  int m = 1;
  long long value = 1;

  friend bool operator==(const ResidueWord&, const ResidueWord&) = default;
};

// Exact element of Q_p at tracked absolute precision.
//
// A value is one of:
//   * a nonzero element: valuation `val` plus a digit word d_0 d_1 ... with
//     d_0 != 0; every digit up to absolute position val + size is trusted;
//   * exact zero (absolute precision infinite);
//   * zero-to-precision: all trusted digits vanished (e.g. by cancellation),
//     so the value is only known to be divisible by p^abs_prec.
//
// Operations propagate the provably correct precision and raise
// errc::insufficient_precision instead of fabricating digits.
class Padic {
 public:
  static constexpr long long kExact = std::numeric_limits<long long>::max();

  static Padic zero(long long p);
  static Padic zero_to_precision(long long p, long long abs_prec);
  static Padic from_integer(long long p, long long n, long long abs_prec);
  static Padic from_rational(long long p, long long num, long long den,
                             long long abs_prec);
  // Word constructors treat the digit word as the exact finite sum
  // sum_i d_i p^(val+i) and pad with zeros up to abs_prec.
  static Padic from_word(long long p, long long val, std::vector<digit_t> digits,
                         long long abs_prec);
  static Padic unit_power(long long p, long long gamma, long long abs_prec);

  // Textual form `p^<val> * (d0,d1,...,dk)`, zero is `0`. Parsing lifts the
  // word to the requested absolute precision.
  static Padic parse(long long p, std::string_view text, long long abs_prec);
  std::string text() const;                       // trailing zeros trimmed
  std::string text_padded(long long bound) const; // digits up to position bound

  long long prime() const { return p_; }
  bool known_nonzero() const { return !digits_.empty(); }
  bool is_exact_zero() const { return digits_.empty() && zero_prec_ == kExact; }
  bool zero_at_precision() const { return digits_.empty() && zero_prec_ != kExact; }

  // Absolute precision: the value is known modulo p^abs_precision().
  long long abs_precision() const {
    return digits_.empty() ? zero_prec_ : val_ + static_cast<long long>(digits_.size());
  }
  long long rel_precision() const;  // digit count of a nonzero element

  // Valuation. Infinity iff exact zero; a value that merely vanished to its
  // known precision cannot answer and raises insufficient_precision.
  Valuation ord() const;
  // Largest provable lower bound for ord(); never raises.
  Valuation ord_lower_bound() const;

  long long val_raw() const { return val_; }
  const std::vector<digit_t>& digits() const { return digits_; }
  digit_t digit_at(long long pos) const;  // trusted absolute position only

  ResidueWord ac(int m) const;

  Padic operator-() const;
  friend Padic operator+(const Padic& a, const Padic& b);
  friend Padic operator-(const Padic& a, const Padic& b);
  friend Padic operator*(const Padic& a, const Padic& b);
  friend Padic div(const Padic& a, const Padic& b);

  Padic div_by_integer(long long r) const;

  // Canonical truncation: drop every digit at position >= bound. The result
  // is the canonical representative of the coset modulo p^bound.
  Padic truncated(long long bound) const;

  bool same_value(const Padic& o) const;  // identical tracked information
  bool agrees_with(const Padic& o, long long bound) const;

 private:
  Padic(long long p) : p_(p) {}
  void normalize();

  long long p_ = 2;
  long long val_ = 0;                // meaningful iff !digits_.empty()
  std::vector<digit_t> digits_;      // little-endian, digits_[0] != 0
  long long zero_prec_ = kExact;     // meaningful iff digits_.empty()
};

// Membership of x in the coset lambda * Q_{n,m}, where Q_{n,m} is the
// finite-index subgroup { y : ord(y) in nZ and ac_m(y) = 1 }.
bool in_lambda_qnm(const Padic& x, const Padic& lambda, int n, int m);

// p^e as an unsigned 64-bit integer; raises budget_exceeded past 2^62.
unsigned long long checked_pow(long long p, long long e);
bool is_prime(long long p);

}  // namespace cellkit
