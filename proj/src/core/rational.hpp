#pragma once

#include <numeric>
#include <string>

#include "error.hpp"
#include "monomial.hpp"

namespace regdef {

/// Exact nonnegative rational with a +infinity point, used for the theorem
/// thresholds. All comparisons cross-multiply in 128 bits; no floating point
/// anywhere.
class Rat {
 public:
  Rat() = default;
  Rat(Exp num, Exp den) : num_(num), den_(den) {
    if (den_ <= 0) fail(Errc::invalid_argument, "rational denominator must be positive");
    if (num_ < 0) fail(Errc::invalid_argument, "thresholds are nonnegative");
    const Exp g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rat infinity() {
    Rat r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  Exp num() const { return num_; }
  Exp den() const { return den_; }

  /// 1/x with 1/inf = 0 and 1/0 = inf, matching the threshold conventions.
  Rat reciprocal_times(Exp scalar) const {
    if (infinite_) return Rat(0, 1);
    if (num_ == 0) return infinity();
    if (scalar < 0) fail(Errc::invalid_argument, "negative scalar");
    return Rat(checked_mul(scalar, den_), num_);
  }

  friend bool operator<(const Rat& a, const Rat& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Rat(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
               checked_mul(a.den_, b.den_));
  }

  static Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
  static Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

  /// m > *this for an integer m.
  bool exceeded_by(Exp m) const {
    if (infinite_) return false;
    return static_cast<__int128>(m) * den_ > static_cast<__int128>(num_);
  }

  /// Smallest integer strictly above the value; error on infinity.
  Exp first_integer_above() const {
    if (infinite_) fail(Errc::undefined, "no integer exceeds infinity");
    return num_ / den_ + 1;
  }

  std::string str() const {
    if (infinite_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  Exp num_ = 0;
  Exp den_ = 1;
  bool infinite_ = false;
};

}  // namespace regdef
