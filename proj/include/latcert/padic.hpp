#pragma once

#include <string>
#include <vector>

#include "latcert/ratpoly.hpp"
#include "latcert/rational.hpp"

namespace latcert {

/// An element of Q_p known modulo p^(val+prec): value = p^val * u where
/// u is a unit whose first `prec` base-p digits are stored. A window with
/// all digits zero ("zero at this precision") keeps only the modulus
/// exponent; asking such a value for its valuation is an error.
class PadicApprox {
  public:
    /// Nonzero element: digits must satisfy 0 < digits < p^prec, p not
    /// dividing digits.
    static PadicApprox unit(long p, long val, int prec, Integer digits);
    /// Zero known modulo p^modulus_exp.
    static PadicApprox zero(long p, long modulus_exp);
    /// Embed a rational at precision N (N digits from its valuation).
    static PadicApprox from_rational(const Rational& x, long p, int prec);

    long prime() const { return p_; }
    bool is_zero_at_precision() const { return zero_; }
    /// First digit position (the valuation). Errors on a zero window.
    long valuation() const;
    int precision() const { return prec_; }
    /// Exponent e with the value known modulo p^e.
    long known_end() const { return zero_ ? end_ : val_ + prec_; }
    /// Unit part as an integer (digit window), lowest digit nonzero.
    const Integer& unit_digits() const { return digits_; }

    /// Digit at absolute position pos (>= valuation assumed known).
    int digit_at(long pos) const;

    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const;
    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator-() const;
    /// Multiplicative inverse of a unit window.
    PadicApprox inverse() const;
    PadicApprox mul_prime_power(long k) const; // exact shift by p^k

    /// Residue of the value modulo p^e (requires known_end() >= e and a
    /// nonnegative-valuation value, or a zero window).
    Integer residue(long e) const;

    /// Values provably equal on the overlap of the two known windows.
    static bool agree_on_overlap(const PadicApprox& a, const PadicApprox& b);

    std::string str() const;

  private:
    PadicApprox() = default;
    long p_ = 0;
    bool zero_ = false;
    long val_ = 0;   // window start (nonzero case)
    int prec_ = 0;   // digits stored
    long end_ = 0;   // zero case: known modulus exponent
    Integer digits_; // 0 <= digits < p^prec, unit unless zero_
    void normalize();
};

Integer int_pow(const Integer& base, long e);

/// Newton lift of a simple root r0 of f modulo p to a root modulo p^N.
/// Requires p-integral coefficients, f(r0) = 0 mod p and f'(r0) != 0 mod p.
PadicApprox hensel_lift(const RatPoly& f, long p, const Integer& r0, int N);

/// All roots of f in {0..p-1} with multiplicities, by exhaustive
/// evaluation over F_p (enforced p <= 100000).
std::vector<std::pair<long, int>> roots_mod_p(const RatPoly& f, long p);

enum class SplitClass { Splits, DoesNotSplit, Ramified };
const char* to_string(SplitClass c);

/// Distinct-linear-factor test for monic squarefree integer f over Q_p.
/// Primes dividing disc(f) report Ramified and take no part in
/// splitting-set computations.
SplitClass splits_over_qp(const RatPoly& f, long p);

} // namespace latcert
