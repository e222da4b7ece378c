#include "sbflag/ints.hpp"

#include <limits>

#include "sbflag/errors.hpp"

namespace sbflag {

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return n == d;
  }
  return true;
}

std::map<Int, unsigned> factorize(const Int& n) {
  if (n < 1) fail(Errc::Internal, "factorize: argument must be positive");
  std::map<Int, unsigned> out;
  Int m = n;
  for (Int d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      ++out[d];
      m /= d;
    }
  }
  if (m > 1) ++out[m];
  return out;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n < 1 || p < 2) fail(Errc::Internal, "valuation: bad arguments");
  unsigned v = 0;
  Int m = n;
  while (m % p == 0) {
    ++v;
    m /= p;
  }
  return v;
}

Int p_part(const Int& n, const Int& p) { return pow_int(p, valuation(n, p)); }

bool is_prime_power(const Int& n, Int& prime_out, unsigned& exp_out) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  prime_out = f.begin()->first;
  exp_out = f.begin()->second;
  return true;
}

long to_long(const Int& n) {
  if (!n.fits_slong_p()) fail(Errc::Internal, "integer too large for output");
  return n.get_si();
}

Int parse_int(const std::string& text) {
  if (text.empty()) fail(Errc::MalformedInput, "empty integer");
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    fail(Errc::MalformedInput, "bad integer: " + text);
  }
}

}  // namespace sbflag
