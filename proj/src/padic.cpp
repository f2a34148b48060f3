#include "cellkit/padic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cellkit {

namespace {

using u128 = unsigned __int128;

unsigned long long mod_mul(unsigned long long a, unsigned long long b,
                           unsigned long long m) {
  return static_cast<unsigned long long>(static_cast<u128>(a) * b % m);
}

unsigned long long mod_inv(unsigned long long a, unsigned long long m) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) fail(errc::division_by_zero, "argument is not a unit");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<unsigned long long>(t);
}

long long strip_p(unsigned long long& n, long long p) {
  long long v = 0;
  while (n % static_cast<unsigned long long>(p) == 0) {
    n /= static_cast<unsigned long long>(p);
    ++v;
  }
  return v;
}

std::vector<digit_t> residue_to_word(unsigned long long r, long long p,
                                     long long len) {
  std::vector<digit_t> d(static_cast<size_t>(len));
  for (long long i = 0; i < len; ++i) {
    d[static_cast<size_t>(i)] = static_cast<digit_t>(r % p);
    r /= static_cast<unsigned long long>(p);
  }
  return d;
}

}  // namespace

unsigned long long checked_pow(long long p, long long e) {
  if (e < 0) fail(errc::validation, "negative exponent");
  unsigned long long r = 1;
  const unsigned long long limit = 1ull << 62;
  for (long long i = 0; i < e; ++i) {
    if (r > limit / static_cast<unsigned long long>(p))
      fail(errc::budget_exceeded, "digit window exceeds native integer range");
    r *= static_cast<unsigned long long>(p);
  }
  return r;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Padic Padic::zero(long long p) {
  if (p < 2) fail(errc::validation, "modulus must be >= 2");
  Padic x(p);
  x.zero_prec_ = kExact;
  return x;
}

Padic Padic::zero_to_precision(long long p, long long abs_prec) {
  if (p < 2) fail(errc::validation, "modulus must be >= 2");
  Padic x(p);
  x.zero_prec_ = abs_prec;
  return x;
}

Padic Padic::from_word(long long p, long long val, std::vector<digit_t> digits,
                       long long abs_prec) {
  if (p < 2) fail(errc::validation, "modulus must be >= 2");
  for (digit_t d : digits)
    if (d >= static_cast<digit_t>(p))
      fail(errc::validation, "digit out of range for modulus");
  size_t lead = 0;
  while (lead < digits.size() && digits[lead] == 0) ++lead;
  if (lead == digits.size()) return zero(p);
  digits.erase(digits.begin(), digits.begin() + static_cast<long>(lead));
  val += static_cast<long long>(lead);
  // a finite word is exact, so padding with zeros only records knowledge
  long long want = abs_prec - val;
  if (want > static_cast<long long>(digits.size()))
    digits.resize(static_cast<size_t>(want), 0);
  Padic x(p);
  x.val_ = val;
  x.digits_ = std::move(digits);
  return x;
}

Padic Padic::unit_power(long long p, long long gamma, long long abs_prec) {
  return from_word(p, gamma, {1}, abs_prec);
}

Padic Padic::from_integer(long long p, long long n, long long abs_prec) {
  if (p < 2) fail(errc::validation, "modulus must be >= 2");
  if (n == 0) return zero(p);
  unsigned long long m = checked_pow(p, std::max<long long>(abs_prec, 1));
  if (abs_prec <= 0) return zero_to_precision(p, abs_prec);
  long long rem = n % static_cast<long long>(m);
  unsigned long long r =
      static_cast<unsigned long long>(rem < 0 ? rem + static_cast<long long>(m) : rem);
  if (r == 0) return zero_to_precision(p, abs_prec);
  unsigned long long u = r;
  long long v = strip_p(u, p);
  Padic x(p);
  x.val_ = v;
  x.digits_ = residue_to_word(u, p, abs_prec - v);
  return x;
}

Padic Padic::from_rational(long long p, long long num, long long den,
                           long long abs_prec) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  if (p < 2) fail(errc::validation, "modulus must be >= 2");
  if (num == 0) return zero(p);
  bool neg = (num < 0) != (den < 0);
  unsigned long long an = static_cast<unsigned long long>(num < 0 ? -num : num);
  unsigned long long ad = static_cast<unsigned long long>(den < 0 ? -den : den);
  long long vn = strip_p(an, p);
  long long vd = strip_p(ad, p);
  long long val = vn - vd;
  long long len = abs_prec - val;
  if (len <= 0) return zero_to_precision(p, abs_prec);
  unsigned long long m = checked_pow(p, len);
  unsigned long long r = mod_mul(an % m, mod_inv(ad % m, m), m);
  if (neg) r = m - r;
  Padic x(p);
  x.val_ = val;
  x.digits_ = residue_to_word(r, p, len);
  return x;
}

long long Padic::rel_precision() const {
  if (digits_.empty()) fail(errc::zero_argument, "value has no unit part");
  return static_cast<long long>(digits_.size());
}

Valuation Padic::ord() const {
  if (!digits_.empty()) return Valuation(val_);
  if (zero_prec_ == kExact) return Valuation::infinity();
  fail(errc::insufficient_precision,
       "value vanished to precision " + std::to_string(zero_prec_) +
           "; valuation undecidable");
}

Valuation Padic::ord_lower_bound() const {
  if (!digits_.empty()) return Valuation(val_);
  if (zero_prec_ == kExact) return Valuation::infinity();
  return Valuation(zero_prec_);
}

digit_t Padic::digit_at(long long pos) const {
  if (digits_.empty()) {
    if (zero_prec_ == kExact || pos < zero_prec_) return 0;
    fail(errc::insufficient_precision, "digit beyond known precision");
  }
  if (pos < val_) return 0;
  if (pos >= abs_precision())
    fail(errc::insufficient_precision, "digit beyond known precision");
  return digits_[static_cast<size_t>(pos - val_)];
}

ResidueWord Padic::ac(int m) const {
  if (m < 1) fail(errc::validation, "angular component needs m >= 1");
  if (is_exact_zero()) fail(errc::zero_argument, "zero has no angular component");
  if (zero_at_precision())
    fail(errc::insufficient_precision,
         "value vanished to precision; unit digits unknown");
  if (rel_precision() < m)
    fail(errc::insufficient_precision,
         "need " + std::to_string(m) + " unit digits, have " +
             std::to_string(rel_precision()));
  long long value = 0;
  for (int i = m - 1; i >= 0; --i)
    value = value * p_ + digits_[static_cast<size_t>(i)];
  return ResidueWord{m, value};
}

namespace {
// digits of x at absolute positions base .. base+len-1 packed as an integer;
// caller guarantees base+len <= abs_precision(x)
unsigned long long window_residue(const Padic& x, long long base, long long len) {
  unsigned long long r = 0;
  for (long long i = len - 1; i >= 0; --i)
    r = r * static_cast<unsigned long long>(x.prime()) + x.digit_at(base + i);
  return r;
}
}  // namespace

Padic Padic::operator-() const {
  if (digits_.empty()) return *this;
  long long len = rel_precision();
  unsigned long long m = checked_pow(p_, len);
  unsigned long long r = m - window_residue(*this, val_, len);
  Padic x(p_);
  x.val_ = val_;
  x.digits_ = residue_to_word(r, p_, len);
  return x;
}

Padic operator+(const Padic& a, const Padic& b) {
  if (a.p_ != b.p_) fail(errc::validation, "mixed residue characteristics");
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  if (a.zero_at_precision() || b.zero_at_precision()) {
    long long bound = std::min(a.abs_precision(), b.abs_precision());
    if (a.zero_at_precision() && b.zero_at_precision())
      return Padic::zero_to_precision(a.p_, bound);
    const Padic& live = a.zero_at_precision() ? b : a;
    return live.truncated(bound);
  }
  long long base = std::min(a.val_, b.val_);
  long long bound = std::min(a.abs_precision(), b.abs_precision());
  long long len = bound - base;
  if (len <= 0) return Padic::zero_to_precision(a.p_, bound);
  unsigned long long m = checked_pow(a.p_, len);
  unsigned long long r =
      (window_residue(a, base, len) + window_residue(b, base, len)) % m;
  if (r == 0) return Padic::zero_to_precision(a.p_, bound);
  unsigned long long u = r;
  long long t = strip_p(u, a.p_);
  Padic x(a.p_);
  x.val_ = base + t;
  x.digits_ = residue_to_word(u, a.p_, bound - x.val_);
  return x;
}

Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

Padic operator*(const Padic& a, const Padic& b) {
  if (a.p_ != b.p_) fail(errc::validation, "mixed residue characteristics");
  if (a.is_exact_zero() || b.is_exact_zero()) return Padic::zero(a.p_);
  if (a.zero_at_precision() || b.zero_at_precision()) {
    long long bound = a.ord_lower_bound().finite() + b.ord_lower_bound().finite();
    return Padic::zero_to_precision(a.p_, bound);
  }
  long long rel = std::min(a.rel_precision(), b.rel_precision());
  unsigned long long m = checked_pow(a.p_, rel);
  unsigned long long r = mod_mul(window_residue(a, a.val_, rel) % m,
                                 window_residue(b, b.val_, rel) % m, m);
  Padic x(a.p_);
  x.val_ = a.val_ + b.val_;
  x.digits_ = residue_to_word(r, a.p_, rel);
  return x;
}

Padic div(const Padic& a, const Padic& b) {
  if (a.p_ != b.p_) fail(errc::validation, "mixed residue characteristics");
  if (b.is_exact_zero()) fail(errc::division_by_zero, "division by zero");
  if (b.zero_at_precision())
    fail(errc::insufficient_precision, "divisor vanished to known precision");
  if (a.is_exact_zero()) return a;
  if (a.zero_at_precision())
    return Padic::zero_to_precision(a.p_, a.abs_precision() - b.val_);
  long long rel = std::min(a.rel_precision(), b.rel_precision());
  unsigned long long m = checked_pow(a.p_, rel);
  unsigned long long r = mod_mul(window_residue(a, a.val_, rel) % m,
                                 mod_inv(window_residue(b, b.val_, rel) % m, m), m);
  Padic x(a.p_);
  x.val_ = a.val_ - b.val_;
  x.digits_ = residue_to_word(r, a.p_, rel);
  return x;
}

Padic Padic::div_by_integer(long long r) const {
  if (r == 0) fail(errc::division_by_zero, "division by integer zero");
  unsigned long long ar = static_cast<unsigned long long>(r < 0 ? -r : r);
  long long w = strip_p(ar, p_);
  if (is_exact_zero()) return *this;
  if (zero_at_precision()) return zero_to_precision(p_, zero_prec_ - w);
  long long rel = rel_precision();
  unsigned long long m = checked_pow(p_, rel);
  unsigned long long q =
      mod_mul(window_residue(*this, val_, rel) % m, mod_inv(ar % m, m), m);
  if (r < 0) q = m - q;
  Padic x(p_);
  x.val_ = val_ - w;
  x.digits_ = residue_to_word(q, p_, rel);
  return x;
}

Padic Padic::truncated(long long bound) const {
  if (is_exact_zero()) return *this;
  if (zero_at_precision()) {
    if (bound > zero_prec_)
      fail(errc::insufficient_precision, "truncation beyond known precision");
    return zero_to_precision(p_, bound);
  }
  if (bound > abs_precision())
    fail(errc::insufficient_precision, "truncation beyond known precision");
  if (bound <= val_) return zero_to_precision(p_, bound);
  Padic x(p_);
  x.val_ = val_;
  x.digits_.assign(digits_.begin(), digits_.begin() + (bound - val_));
  return x;
}

bool Padic::same_value(const Padic& o) const {
  return p_ == o.p_ && digits_ == o.digits_ &&
         (digits_.empty() ? zero_prec_ == o.zero_prec_ : val_ == o.val_);
}

bool Padic::agrees_with(const Padic& o, long long bound) const {
  return truncated(bound).same_value(o.truncated(bound));
}

std::string Padic::text() const {
  if (digits_.empty()) return "0";
  size_t n = digits_.size();
  while (n > 1 && digits_[n - 1] == 0) --n;
  std::ostringstream oss;
  oss << "p^" << val_ << " * (";
  for (size_t i = 0; i < n; ++i) {
    if (i) oss << ",";
    oss << digits_[i];
  }
  oss << ")";
  return oss.str();
}

std::string Padic::text_padded(long long bound) const {
  if (digits_.empty() || bound <= val_) return "0";
  std::ostringstream oss;
  oss << "p^" << val_ << " * (";
  for (long long i = 0; i < bound - val_; ++i) {
    if (i) oss << ",";
    oss << digit_at(val_ + i);
  }
  oss << ")";
  return oss.str();
}

Padic Padic::parse(long long p, std::string_view text, long long abs_prec) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> long long {
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail(errc::validation, "malformed number literal");
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };
  skip_ws();
  if (i < text.size() && text[i] == '0') {
    ++i;
    skip_ws();
    if (i == text.size()) return zero(p);
    fail(errc::validation, "malformed literal after zero");
  }
  if (i >= text.size() || text[i] != 'p')
    fail(errc::validation, "expected `p^<val> * (digits)` or `0`");
  ++i;
  if (i >= text.size() || text[i] != '^') fail(errc::validation, "expected ^ after p");
  ++i;
  long long val = parse_int();
  skip_ws();
  if (i < text.size() && text[i] == '*') ++i;
  skip_ws();
  if (i >= text.size() || text[i] != '(') fail(errc::validation, "expected digit word");
  ++i;
  std::vector<digit_t> digits;
  skip_ws();
  if (i < text.size() && text[i] == ')') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      long long d = parse_int();
      if (d < 0 || d >= p) fail(errc::validation, "digit out of range");
      digits.push_back(static_cast<digit_t>(d));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      fail(errc::validation, "malformed digit word");
    }
  }
  skip_ws();
  if (i != text.size()) fail(errc::validation, "trailing characters in literal");
  return from_word(p, val, std::move(digits), abs_prec);
}

bool in_lambda_qnm(const Padic& x, const Padic& lambda, int n, int m) {
  if (n < 1 || m < 1) fail(errc::validation, "group indices must be positive");
  if (x.is_exact_zero()) fail(errc::zero_argument, "zero lies in no unit coset");
  if (lambda.is_exact_zero())
    fail(errc::zero_argument, "coset scale must be nonzero");
  Padic q = div(x, lambda);
  if (!q.known_nonzero())
    fail(errc::insufficient_precision, "quotient vanished to known precision");
  long long o = q.ord().finite();
  long long r = o % n;
  if (r < 0) r += n;
  if (r != 0) return false;
  return q.ac(m).value == 1;
}

}  // namespace cellkit
