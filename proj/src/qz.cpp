#include "sbflag/qz.hpp"

#include "sbflag/errors.hpp"

namespace sbflag {

QZInvariant QZInvariant::reduce(const Int& num, const Int& den) {
  if (den <= 0) fail(Errc::InvalidDenominator, "denominator must be positive");
  Int n;
  mpz_mod(n.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (n == 0) return QZInvariant();
  Int g = gcd(n, den);
  return QZInvariant(n / g, den / g);
}

QZInvariant QZInvariant::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return reduce(parse_int(text), 1);
  }
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den <= 0) fail(Errc::InvalidDenominator, "denominator must be positive");
  return reduce(num, den);
}

QZInvariant QZInvariant::add(const QZInvariant& other) const {
  return reduce(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

QZInvariant QZInvariant::scale(const Int& m) const {
  if (m < 0) fail(Errc::Internal, "scale: negative multiplier");
  return reduce(num_ * m, den_);
}

std::map<Int, QZInvariant> QZInvariant::primary_split() const {
  std::map<Int, QZInvariant> parts;
  if (is_zero()) return parts;
  // CRT: for den = prod p^e, the p-component of num/den is
  // (num * inv(den/p^e) mod p^e) / p^e.
  for (const auto& [p, e] : factorize(den_)) {
    Int q = pow_int(p, e);
    Int rest = den_ / q;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t()) == 0) {
      fail(Errc::Internal, "primary_split: non-invertible cofactor");
    }
    parts.emplace(p, reduce(num_ * inv, q));
  }
  return parts;
}

std::string QZInvariant::str() const {
  return num_.get_str() + "/" + den_.get_str();
}

}  // namespace sbflag
