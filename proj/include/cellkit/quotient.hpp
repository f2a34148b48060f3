#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cellkit/ball.hpp"

namespace cellkit {

// Finite model of a bounded region of Q_p: cosets modulo p^prec whose
// valuation lies in [lo, hi), plus the class of zero (everything of
// valuation >= prec). With hi == prec the model covers { ord >= lo }
// without gaps.
struct QuotientWindow {
  long long p = 2;
  long long lo = 0;
  long long hi = 1;
  long long prec = 1;

  void validate() const;
  unsigned long long size() const;  // closed-form coset count incl. zero class
  QuotientWindow refined() const;   // one extra digit of precision
};

// Canonical coset representative modulo p^prec: digit word truncated at
// prec with trailing zeros kept. The zero class carries infinite valuation.
struct Rep {
  static constexpr long long kZeroClass = std::numeric_limits<long long>::max();

  long long val = kZeroClass;
  std::vector<digit_t> digits;  // size == prec - val for points

  bool is_zero_class() const { return val == kZeroClass; }
  friend auto operator<=>(const Rep&, const Rep&) = default;
};

Rep make_rep(const Padic& x, long long prec);
Padic lift_rep(const Rep& r, long long p, long long abs_prec);
std::string rep_text(const Rep& r);

class QuotientSet {
 public:
  QuotientSet(long long p, long long prec) : p_(p), prec_(prec) {}

  long long prime() const { return p_; }
  long long precision() const { return prec_; }
  bool empty() const { return reps_.empty(); }
  size_t size() const { return reps_.size(); }
  const std::set<Rep>& reps() const { return reps_; }

  void insert(Rep r);
  void insert_point(const Padic& x) { insert(make_rep(x, prec_)); }
  bool contains(const Rep& r) const { return reps_.count(r) > 0; }

  std::vector<std::string> texts() const;

  friend bool operator==(const QuotientSet&, const QuotientSet&) = default;

 private:
  long long p_;
  long long prec_;
  std::set<Rep> reps_;
};

struct EqualReport {
  bool equal = false;
  std::vector<std::string> only_in_a, only_in_b;  // up to 10 witnesses each
};

QuotientSet enumerate_window(const QuotientWindow& w, unsigned long long budget);
EqualReport set_equal(const QuotientSet& a, const QuotientSet& b);
QuotientSet set_union(const QuotientSet& a, const QuotientSet& b);
QuotientSet set_intersect(const QuotientSet& a, const QuotientSet& b);
QuotientSet set_difference(const QuotientSet& a, const QuotientSet& b);
bool set_disjoint(const QuotientSet& a, const QuotientSet& b);

QuotientSet minkowski_sum(const QuotientSet& a, const QuotientSet& b,
                          unsigned long long budget);
QuotientSet minkowski_diff(const QuotientSet& a, const QuotientSet& b,
                           unsigned long long budget);
QuotientSet translate_set(const QuotientSet& a, const Padic& shift);

// Recompute the same set one digit finer and forget the digit again.
QuotientSet project_set(const QuotientSet& a, long long to_prec);

// All cosets of the ball modulo p^prec (requires radius <= prec).
QuotientSet ball_cosets(const Ball& b, long long prec, unsigned long long budget);
QuotientSet balls_cosets(const std::vector<Ball>& balls, long long p,
                         long long prec, unsigned long long budget);

// Decompose a finite union of cosets into its maximal balls.
std::vector<Ball> maximal_balls(const QuotientSet& a);

// Guards against membership predicates that are not constant on cosets:
// recompute at precision prec+1, project back, compare.
bool stability_check(const std::function<QuotientSet(const QuotientWindow&)>& compute,
                     const QuotientWindow& w);

unsigned long long default_budget();  // honors CELLKIT_BUDGET

}  // namespace cellkit
