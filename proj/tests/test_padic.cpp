#include <random>
#include <vector>

#include "cellkit/padic.hpp"
#include "doctest.h"

using cellkit::digit_t;
using cellkit::error;
using cellkit::errc;
using cellkit::Padic;
using cellkit::Valuation;

namespace {

// ---- independent reference computations (integer arithmetic only) ----

long long pow_ll(long long p, long long e) {
  long long r = 1;
  while (e-- > 0) r *= p;
  return r;
}

// brute-force modular inverse: scan all residues
long long inv_scan(long long a, long long m) {
  a %= m;
  if (a < 0) a += m;
  for (long long y = 1; y < m; ++y)
    if (a * y % m == 1) return y;
  return -1;
}

// digits of num/den in Q_p, solved as den*y = num mod p^len after stripping
// powers of p; returns (val, digits)
std::pair<long long, std::vector<digit_t>> rational_digits(long long p,
                                                           long long num,
                                                           long long den,
                                                           long long len) {
  long long val = 0;
  while (num % p == 0) num /= p, ++val;
  while (den % p == 0) den /= p, --val;
  long long m = pow_ll(p, len);
  long long y = (num % m) * inv_scan(den, m) % m;
  if (y < 0) y += m;
  std::vector<digit_t> d;
  for (long long i = 0; i < len; ++i) {
    d.push_back(static_cast<digit_t>(y % p));
    y /= p;
  }
  return {val, d};
}

Padic random_nonzero(std::mt19937_64& rng, long long p, long long prec) {
  std::uniform_int_distribution<long long> val_d(-3, 3);
  std::uniform_int_distribution<long long> digit_d(0, p - 1);
  long long val = val_d(rng);
  std::vector<digit_t> digits;
  digits.push_back(static_cast<digit_t>(1 + digit_d(rng) % (p - 1)));
  for (long long i = 1; i < prec - val; ++i)
    digits.push_back(static_cast<digit_t>(digit_d(rng)));
  return Padic::from_word(p, val, digits, prec);
}

}  // namespace

TEST_CASE("valuation of integers and rationals") {
  CHECK(Padic::zero(3).ord().is_infinite());
  CHECK(Padic::from_integer(3, 5, 6).ord() == Valuation(0));
  CHECK(Padic::from_integer(3, 9, 6).ord() == Valuation(2));

  // 1/2 in Q_3: reference solves 2y = 1 mod 3^6 by scanning
  auto [val, dig] = rational_digits(3, 1, 2, 6);
  CHECK(val == 0);
  CHECK(dig == std::vector<digit_t>{2, 1, 1, 1, 1, 1});
  Padic half = Padic::from_rational(3, 1, 2, 6);
  CHECK(half.ord() == Valuation(0));
  CHECK(half.digits() == dig);
}

TEST_CASE("angular components") {
  Padic five = Padic::from_integer(3, 5, 6);
  CHECK(five.ac(1).value == 2);
  CHECK(five.ac(2).value == 5);

  Padic half = Padic::from_rational(3, 1, 2, 6);
  CHECK(half.ac(2).value == 5);  // digits 2,1

  Padic odd = Padic::from_integer(2, 7, 6);
  CHECK(odd.ac(1).value == 1);  // only nonzero residue mod 2

  CHECK_THROWS_AS(Padic::zero(3).ac(1), error);
  Padic shallow = Padic::from_word(3, 0, {1}, 1);
  CHECK_THROWS_AS(shallow.ac(2), error);
}

TEST_CASE("ring operations embed integer arithmetic") {
  Padic five = Padic::from_integer(3, 5, 8);
  Padic four = Padic::from_integer(3, 4, 8);
  Padic nine = five + four;
  CHECK(nine.ord() == Valuation(2));
  CHECK(nine.same_value(Padic::from_integer(3, 9, 8)));

  CHECK((five + Padic::zero(3)).same_value(five));

  Padic half = Padic::from_rational(3, 1, 2, 8);
  Padic two = Padic::from_integer(3, 2, 8);
  CHECK((half * two).same_value(Padic::from_integer(3, 1, 8)));
}

TEST_CASE("cancellation is tracked, not fabricated") {
  Padic a = Padic::from_integer(5, 7, 6);
  Padic gone = a - a;
  CHECK(gone.zero_at_precision());
  CHECK(gone.abs_precision() == 6);
  CHECK_THROWS_AS(gone.ord(), error);
  CHECK(gone.ord_lower_bound() == Valuation(6));
}

TEST_CASE("division by integers") {
  Padic one3 = Padic::from_integer(3, 1, 6);
  Padic half = one3.div_by_integer(2);
  auto [val, dig] = rational_digits(3, 1, 2, 6);
  CHECK(half.ord() == Valuation(val));
  CHECK(half.digits() == dig);

  Padic one2 = Padic::from_integer(2, 1, 6);
  Padic h = one2.div_by_integer(2);
  CHECK(h.ord() == Valuation(-1));
  CHECK(h.digits()[0] == 1);
  CHECK(h.abs_precision() == 5);  // dividing by the uniformizer costs a digit

  Padic ten = Padic::from_integer(5, 10, 6);
  CHECK(ten.div_by_integer(2).same_value(Padic::from_integer(5, 5, 6)));

  CHECK_THROWS_AS(one3.div_by_integer(0), error);
}

TEST_CASE("unit coset membership") {
  long long p = 3;
  Padic one = Padic::from_integer(p, 1, 8);
  Padic up = Padic::unit_power(p, 1, 8);
  CHECK(in_lambda_qnm(up, one, 1, 1));
  CHECK_FALSE(in_lambda_qnm(up, one, 2, 1));

  // reference: ac_1(x / lambda) for x = 2*3, lambda = 2 via scanned inverse
  Padic x = Padic::from_integer(p, 6, 8);
  Padic lam = Padic::from_integer(p, 2, 8);
  long long q_unit = (6 / 3) * inv_scan(2, 27) % 27 % 3;
  CHECK(q_unit == 1);
  CHECK(in_lambda_qnm(x, lam, 1, 1));

  CHECK_THROWS_AS(in_lambda_qnm(Padic::zero(p), one, 1, 1), error);
}

TEST_CASE("ultrametric laws hold on random pairs") {
  std::mt19937_64 rng(20260809);
  for (long long p : {2, 3, 5}) {
    for (int it = 0; it < 200; ++it) {
      Padic x = random_nonzero(rng, p, 9);
      Padic y = random_nonzero(rng, p, 9);
      CHECK((x * y).ord() == Valuation(x.ord().finite() + y.ord().finite()));
      Padic s = x + y;
      CHECK(s.ord_lower_bound() >= min(x.ord(), y.ord()));
      if (x.ord() != y.ord()) CHECK(s.ord() == min(x.ord(), y.ord()));
    }
  }
}

TEST_CASE("angular component is multiplicative") {
  std::mt19937_64 rng(7);
  for (long long p : {2, 3, 5}) {
    for (int it = 0; it < 100; ++it) {
      Padic x = random_nonzero(rng, p, 9);
      Padic y = random_nonzero(rng, p, 9);
      for (int m : {1, 2}) {
        long long mod = pow_ll(p, m);
        long long expect = x.ac(m).value * y.ac(m).value % mod;
        CHECK((x * y).ac(m).value == expect % mod);
      }
    }
  }
}

TEST_CASE("coset membership behaves like a subgroup") {
  std::mt19937_64 rng(11);
  Padic one = Padic::from_integer(3, 1, 12);
  int hits = 0;
  for (int it = 0; it < 400; ++it) {
    Padic x = random_nonzero(rng, 3, 12);
    Padic y = random_nonzero(rng, 3, 12);
    if (in_lambda_qnm(x, one, 2, 2) && in_lambda_qnm(y, one, 2, 2)) {
      ++hits;
      CHECK(in_lambda_qnm(x * y, one, 2, 2));
      CHECK(in_lambda_qnm(div(one, x), one, 2, 2));
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("integer division is inverted by multiplication") {
  std::mt19937_64 rng(13);
  for (long long p : {2, 3, 5}) {
    for (long long r : {2LL, 3LL, 4LL, 6LL, -5LL}) {
      Padic x = random_nonzero(rng, p, 10);
      Padic q = x.div_by_integer(r);
      Padic back = q * Padic::from_integer(p, r, 16);
      long long bound = std::min(back.abs_precision(), x.abs_precision());
      CHECK(x.agrees_with(back, bound));
    }
  }
}

TEST_CASE("recomputing at higher precision refines the same digits") {
  std::mt19937_64 rng(17);
  for (long long p : {2, 3, 5}) {
    for (int it = 0; it < 60; ++it) {
      std::uniform_int_distribution<long long> pick(-40, 40);
      long long a = pick(rng), b = pick(rng), c = pick(rng) * 2 + 1;
      auto expr = [&](long long prec) {
        Padic x = Padic::from_integer(p, a, prec);
        Padic y = Padic::from_integer(p, b, prec);
        return (x * y + x).div_by_integer(c) - y;
      };
      Padic low = expr(7);
      Padic high = expr(10);
      long long bound = low.abs_precision();
      CHECK(high.agrees_with(low, bound));
    }
  }
}

TEST_CASE("textual round trip") {
  Padic x = Padic::from_rational(3, 1, 2, 4);
  CHECK(x.text() == "p^0 * (2,1,1,1)");
  CHECK(Padic::parse(3, "p^0 * (2,1,1,1)", 4).same_value(x));
  CHECK(Padic::parse(3, "p^0*(2,1,1,1)", 4).same_value(x));
  CHECK(Padic::parse(5, "0", 4).is_exact_zero());
  CHECK(Padic::from_word(2, -1, {1}, 4).text() == "p^-1 * (1)");
  CHECK(Padic::from_word(2, 0, {1, 0, 0}, 3).text_padded(3) == "p^0 * (1,0,0)");
  CHECK_THROWS_AS(Padic::parse(3, "garbage", 4), error);
}
