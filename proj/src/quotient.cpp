#include "cellkit/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cellkit {

void QuotientWindow::validate() const {
  if (p < 2) fail(errc::validation, "modulus must be >= 2");
  if (!is_prime(p)) fail(errc::validation, "modulus must be prime");
  if (lo > hi) fail(errc::validation, "window lower bound above upper bound");
  if (hi > prec) fail(errc::validation, "window upper bound above precision");
}

unsigned long long QuotientWindow::size() const {
  unsigned long long total = 1;  // zero class
  for (long long v = lo; v < hi; ++v)
    total += static_cast<unsigned long long>(p - 1) * checked_pow(p, prec - v - 1);
  return total;
}

QuotientWindow QuotientWindow::refined() const {
  QuotientWindow w = *this;
  if (w.hi == w.prec) ++w.hi;
  ++w.prec;
  return w;
}

Rep make_rep(const Padic& x, long long prec) {
  Padic t = x.truncated(prec);
  if (!t.known_nonzero()) return Rep{};
  return Rep{t.val_raw(), t.digits()};
}

Padic lift_rep(const Rep& r, long long p, long long abs_prec) {
  if (r.is_zero_class()) return Padic::zero(p);
  return Padic::from_word(p, r.val, r.digits, abs_prec);
}

std::string rep_text(const Rep& r) {
  if (r.is_zero_class()) return "0";
  std::ostringstream oss;
  oss << "p^" << r.val << " * (";
  for (size_t i = 0; i < r.digits.size(); ++i) {
    if (i) oss << ",";
    oss << r.digits[i];
  }
  oss << ")";
  return oss.str();
}

void QuotientSet::insert(Rep r) {
  if (!r.is_zero_class()) {
    if (r.digits.empty() || r.digits[0] == 0 ||
        static_cast<long long>(r.digits.size()) != prec_ - r.val)
      fail(errc::validation, "malformed coset representative");
  }
  reps_.insert(std::move(r));
}

std::vector<std::string> QuotientSet::texts() const {
  std::vector<std::string> out;
  out.reserve(reps_.size());
  for (const Rep& r : reps_) out.push_back(rep_text(r));
  return out;
}

namespace {
void require_same_quotient(const QuotientSet& a, const QuotientSet& b) {
  if (a.prime() != b.prime() || a.precision() != b.precision())
    fail(errc::window_mismatch, "sets live on different quotients");
}
}  // namespace

QuotientSet enumerate_window(const QuotientWindow& w, unsigned long long budget) {
  w.validate();
  unsigned long long n = w.size();
  if (n > budget)
    fail(errc::budget_exceeded, "enumeration of " + std::to_string(n) +
                                    " cosets exceeds budget " +
                                    std::to_string(budget));
  QuotientSet out(w.p, w.prec);
  out.insert(Rep{});
  for (long long v = w.lo; v < w.hi; ++v) {
    long long len = w.prec - v;
    unsigned long long count =
        static_cast<unsigned long long>(w.p - 1) * checked_pow(w.p, len - 1);
    for (unsigned long long idx = 0; idx < count; ++idx) {
      std::vector<digit_t> d(static_cast<size_t>(len));
      unsigned long long rest = idx;
      d[0] = static_cast<digit_t>(1 + rest % (w.p - 1));
      rest /= static_cast<unsigned long long>(w.p - 1);
      for (long long i = 1; i < len; ++i) {
        d[static_cast<size_t>(i)] = static_cast<digit_t>(rest % w.p);
        rest /= static_cast<unsigned long long>(w.p);
      }
      out.insert(Rep{v, std::move(d)});
    }
  }
  return out;
}

EqualReport set_equal(const QuotientSet& a, const QuotientSet& b) {
  require_same_quotient(a, b);
  EqualReport rep;
  for (const Rep& r : a.reps())
    if (!b.contains(r) && rep.only_in_a.size() < 10)
      rep.only_in_a.push_back(rep_text(r));
  for (const Rep& r : b.reps())
    if (!a.contains(r) && rep.only_in_b.size() < 10)
      rep.only_in_b.push_back(rep_text(r));
  rep.equal = a.reps() == b.reps();
  return rep;
}

QuotientSet set_union(const QuotientSet& a, const QuotientSet& b) {
  require_same_quotient(a, b);
  QuotientSet out = a;
  for (const Rep& r : b.reps()) out.insert(r);
  return out;
}

QuotientSet set_intersect(const QuotientSet& a, const QuotientSet& b) {
  require_same_quotient(a, b);
  QuotientSet out(a.prime(), a.precision());
  for (const Rep& r : a.reps())
    if (b.contains(r)) out.insert(r);
  return out;
}

QuotientSet set_difference(const QuotientSet& a, const QuotientSet& b) {
  require_same_quotient(a, b);
  QuotientSet out(a.prime(), a.precision());
  for (const Rep& r : a.reps())
    if (!b.contains(r)) out.insert(r);
  return out;
}

bool set_disjoint(const QuotientSet& a, const QuotientSet& b) {
  return set_intersect(a, b).empty();
}

QuotientSet minkowski_sum(const QuotientSet& a, const QuotientSet& b,
                          unsigned long long budget) {
  require_same_quotient(a, b);
  if (a.size() * b.size() > budget)
    fail(errc::budget_exceeded, "pairwise sum exceeds budget");
  long long lift = a.precision() + 2;
  QuotientSet out(a.prime(), a.precision());
  for (const Rep& x : a.reps()) {
    Padic px = lift_rep(x, a.prime(), lift);
    for (const Rep& y : b.reps())
      out.insert_point(px + lift_rep(y, a.prime(), lift));
  }
  return out;
}

QuotientSet minkowski_diff(const QuotientSet& a, const QuotientSet& b,
                           unsigned long long budget) {
  require_same_quotient(a, b);
  if (a.size() * b.size() > budget)
    fail(errc::budget_exceeded, "pairwise difference exceeds budget");
  long long lift = a.precision() + 2;
  QuotientSet out(a.prime(), a.precision());
  for (const Rep& x : a.reps()) {
    Padic px = lift_rep(x, a.prime(), lift);
    for (const Rep& y : b.reps())
      out.insert_point(px - lift_rep(y, a.prime(), lift));
  }
  return out;
}

QuotientSet translate_set(const QuotientSet& a, const Padic& shift) {
  long long lift = a.precision() + 2;
  QuotientSet out(a.prime(), a.precision());
  for (const Rep& x : a.reps())
    out.insert_point(lift_rep(x, a.prime(), lift) + shift);
  return out;
}

QuotientSet project_set(const QuotientSet& a, long long to_prec) {
  if (to_prec > a.precision())
    fail(errc::validation, "projection cannot refine precision");
  QuotientSet out(a.prime(), to_prec);
  for (const Rep& r : a.reps()) {
    if (r.is_zero_class() || r.val >= to_prec) {
      out.insert(Rep{});
    } else {
      Rep t = r;
      t.digits.resize(static_cast<size_t>(to_prec - t.val));
      out.insert(std::move(t));
    }
  }
  return out;
}

QuotientSet ball_cosets(const Ball& b, long long prec, unsigned long long budget) {
  if (b.radius() > prec)
    fail(errc::insufficient_precision,
         "ball finer than quotient precision cannot be enumerated");
  unsigned long long count = checked_pow(b.prime(), prec - b.radius());
  if (count > budget)
    fail(errc::budget_exceeded, "ball enumeration exceeds budget");
  QuotientSet out(b.prime(), prec);
  long long low = b.center().known_nonzero() ? b.center().val_raw() : b.radius();
  long long len = prec - low;
  std::vector<digit_t> word(static_cast<size_t>(len), 0);
  for (long long pos = low; pos < b.radius(); ++pos)
    word[static_cast<size_t>(pos - low)] = b.digit_at(pos);
  for (unsigned long long idx = 0; idx < count; ++idx) {
    unsigned long long rest = idx;
    for (long long pos = b.radius(); pos < prec; ++pos) {
      word[static_cast<size_t>(pos - low)] = static_cast<digit_t>(rest % b.prime());
      rest /= static_cast<unsigned long long>(b.prime());
    }
    size_t lead = 0;
    while (lead < word.size() && word[lead] == 0) ++lead;
    if (lead == word.size()) {
      out.insert(Rep{});
    } else {
      out.insert(Rep{low + static_cast<long long>(lead),
                     std::vector<digit_t>(word.begin() + static_cast<long>(lead),
                                          word.end())});
    }
  }
  return out;
}

QuotientSet balls_cosets(const std::vector<Ball>& balls, long long p,
                         long long prec, unsigned long long budget) {
  QuotientSet out(p, prec);
  for (const Ball& b : balls) out = set_union(out, ball_cosets(b, prec, budget));
  return out;
}

std::vector<Ball> maximal_balls(const QuotientSet& a) {
  std::set<Ball> cur;
  for (const Rep& r : a.reps())
    cur.insert(Ball(lift_rep(r, a.prime(), a.precision() + 1), a.precision()));
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Ball, std::vector<Ball>> groups;
    for (const Ball& b : cur) groups[b.parent()].push_back(b);
    for (auto& [parent, kids] : groups) {
      if (static_cast<long long>(kids.size()) == a.prime()) {
        for (const Ball& k : kids) cur.erase(k);
        cur.insert(parent);
        changed = true;
      }
    }
  }
  return std::vector<Ball>(cur.begin(), cur.end());
}

bool stability_check(
    const std::function<QuotientSet(const QuotientWindow&)>& compute,
    const QuotientWindow& w) {
  QuotientSet coarse = compute(w);
  QuotientSet fine = compute(w.refined());
  return project_set(fine, w.prec) == coarse;
}

unsigned long long default_budget() {
  if (const char* env = std::getenv("CELLKIT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    fail(errc::validation, "CELLKIT_BUDGET must be a positive integer");
  }
  return 1000000ull;
}

}  // namespace cellkit
