#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "latcert/errors.hpp"

namespace latcert {

// Exact substrate. GMP keeps mpq_class canonical (gcd 1, positive
// denominator) as long as values are built through canonicalizing paths,
// which the helpers below enforce.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den reduced to lowest terms, den > 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

inline const mpz_class numerator(const Rational& x) { return x.get_num(); }
inline const mpz_class denominator(const Rational& x) { return x.get_den(); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool is_prime(const Integer& p);

/// p-adic valuation of a nonzero rational: x = p^v * a/b with p dividing
/// neither a nor b. Throws zero_valuation on x = 0.
long vp(const Rational& x, const Integer& p);

/// |x|_p = p^(-vp(x)), with |0|_p = 0.
Rational padic_abs(const Rational& x, const Integer& p);

/// Multiplicity of p in a nonzero integer.
long vp_int(const Integer& n, const Integer& p);

/// Prime factorization by trial division; intended for denominators and
/// moduli at desk scale.
std::vector<std::pair<Integer, long>> factorize(Integer n);

/// Primes p <= bound, ascending.
std::vector<long> primes_up_to(long bound);

std::string to_string(const Rational& x);

} // namespace latcert
