#ifndef SBFLAG_QZ_HPP
#define SBFLAG_QZ_HPP

#include <map>
#include <string>

#include "sbflag/ints.hpp"

namespace sbflag {

// An element of Q/Z as a reduced fraction num/den with 0 <= num < den and
// gcd(num, den) = 1. The zero element is uniquely 0/1, so equality is
// structural equality.
class QZInvariant {
 public:
  QZInvariant() : num_(0), den_(1) {}

  // Canonical representative of num/den mod 1. den must be positive;
  // num may be any integer.
  static QZInvariant reduce(const Int& num, const Int& den);

  // Parses "num/den" (or a bare integer, meaning the zero class).
  static QZInvariant parse(const std::string& text);

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  // Additive order in Q/Z; equals the denominator on canonical values.
  const Int& order() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  QZInvariant add(const QZInvariant& other) const;
  QZInvariant scale(const Int& m) const;  // m >= 0

  // Unique decomposition into components of prime-power order, one per
  // prime dividing the order; the components sum to *this.
  std::map<Int, QZInvariant> primary_split() const;

  std::string str() const;

  friend bool operator==(const QZInvariant& a, const QZInvariant& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QZInvariant& a, const QZInvariant& b) {
    return !(a == b);
  }
  friend bool operator<(const QZInvariant& a, const QZInvariant& b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

 private:
  QZInvariant(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {}
  Int num_;
  Int den_;
};

}  // namespace sbflag

#endif
