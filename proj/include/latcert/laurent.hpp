#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latcert/errors.hpp"

namespace latcert {

/// Element of F_q((s)) known modulo s^e: digit window with explicit
/// valuation, same shape as PadicApprox but with carry-free digit
/// arithmetic. Elements that are Laurent polynomials stored in full carry
/// an exact flag (known modulo s^inf).
class LaurentApprox {
  public:
    static constexpr long kInf = 1L << 60;

    /// Exact Laurent polynomial sum digits[i] * s^(val+i).
    static LaurentApprox exact_poly(long q, long val, std::vector<uint8_t> digits);
    static LaurentApprox exact_zero(long q);
    static LaurentApprox one(long q) { return exact_poly(q, 0, {1}); }
    static LaurentApprox monomial(long q, long k) { return exact_poly(q, k, {1}); }
    /// Window: value = sum digits[i]*s^(val+i) + O(s^(val+digits.size())).
    static LaurentApprox window(long q, long val, std::vector<uint8_t> digits);
    static LaurentApprox zero_window(long q, long end);

    long prime() const { return q_; }
    bool is_exact() const { return exact_; }
    bool is_zero_at_precision() const { return dig_.empty(); }
    /// Errors on a value with no known nonzero digit.
    long valuation() const;
    long known_end() const { return exact_ ? kInf : end_; }
    /// Digit at position pos; positions below the valuation read 0,
    /// positions at or past known_end error.
    int digit_at(long pos) const;
    const std::vector<uint8_t>& digits() const { return dig_; }

    LaurentApprox operator+(const LaurentApprox& o) const;
    LaurentApprox operator-(const LaurentApprox& o) const;
    LaurentApprox operator*(const LaurentApprox& o) const;
    LaurentApprox operator-() const;
    /// Inverse of a value with known leading digit. Exact monomials stay
    /// exact; otherwise the result is a window of `prec` digits (defaults
    /// to the operand's own precision; required for exact non-monomials).
    LaurentApprox inverse(long prec = -1) const;

    /// Forget knowledge beyond s^end.
    LaurentApprox truncated(long end) const;

    /// Provably equal on the intersection of the known windows.
    static bool agree_on_overlap(const LaurentApprox& a, const LaurentApprox& b);

    std::string str() const;

  private:
    LaurentApprox() = default;
    long q_ = 0;
    bool exact_ = false;
    long val_ = 0;              // first nonzero position when dig_ nonempty
    std::vector<uint8_t> dig_;  // dig_[0] != 0 unless empty
    long end_ = 0;              // known modulus exponent (windows only)
    void normalize();
};

} // namespace latcert
