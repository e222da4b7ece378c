#ifndef SBFLAG_INTS_HPP
#define SBFLAG_INTS_HPP

#include <gmpxx.h>

#include <map>
#include <string>

namespace sbflag {

// All arithmetic runs on arbitrary-precision integers; lcm's of many
// denominators overflow fixed width.
using Int = mpz_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int pow_int(const Int& base, unsigned long exp);

bool is_prime(const Int& n);

// Prime factorization of n >= 1 by trial division (desk scale).
std::map<Int, unsigned> factorize(const Int& n);

// v_p(n) for p >= 2, n >= 1.
unsigned valuation(const Int& n, const Int& p);

// Largest power of p dividing n.
Int p_part(const Int& n, const Int& p);

bool is_prime_power(const Int& n, Int& prime_out, unsigned& exp_out);

// Checked narrowing for serialization; throws on overflow.
long to_long(const Int& n);

Int parse_int(const std::string& text);

}  // namespace sbflag

#endif
