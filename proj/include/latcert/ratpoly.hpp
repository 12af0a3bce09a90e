#pragma once

#include <string>
#include <vector>

#include "latcert/rational.hpp"

namespace latcert {

/// Dense univariate polynomial over Q. Coefficients ascending by degree,
/// leading coefficient nonzero; the zero polynomial has no coefficients.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    static RatPoly constant(const Rational& c);
    static RatPoly variable(); // t

    /// Convenience for integer coefficient lists c0, c1, ..., cd.
    static RatPoly from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    const Rational& operator[](size_t i) const { return coeffs_[i]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool has_integer_coeffs() const;

    Rational eval(const Rational& x) const;
    RatPoly derivative() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly scale(const Rational& c) const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Euclidean division: *this = q*div + r with deg r < deg div.
    std::pair<RatPoly, RatPoly> divrem(const RatPoly& div) const;

    /// Substitute another polynomial for the variable.
    RatPoly compose(const RatPoly& inner) const;

    /// Monic gcd over Q.
    static RatPoly gcd(RatPoly a, RatPoly b);

    std::string str(const std::string& var = "t") const;

  private:
    std::vector<Rational> coeffs_;
    void trim();
};

/// Resultant of f and g via the Sylvester matrix (exact).
Rational resultant(const RatPoly& f, const RatPoly& g);

/// disc(f) = (-1)^(d(d-1)/2) res(f, f') / lead(f). Requires deg f >= 1.
Rational poly_discriminant(const RatPoly& f);

bool is_squarefree(const RatPoly& f);

/// Rational-root based irreducibility test, valid only for deg <= 3.
bool irreducible_deg_le3(const RatPoly& f);

} // namespace latcert
