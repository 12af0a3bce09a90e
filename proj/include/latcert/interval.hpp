#pragma once

#include <string>

#include "latcert/rational.hpp"

namespace latcert {

/// Closed interval [lo, hi] with exact rational endpoints. Replaces
/// floating point wherever a certified sign is needed.
struct QInterval {
    Rational lo;
    Rational hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rational a, Rational b);
    static QInterval point(const Rational& x) { return {x, x}; }

    Rational width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool is_positive() const { return lo > 0; }
    bool is_negative() const { return hi < 0; }

    QInterval operator+(const QInterval& o) const;
    QInterval operator-(const QInterval& o) const;
    QInterval operator*(const QInterval& o) const;
    QInterval operator-() const;
    /// Division; errors (InvalidArgument) when o straddles zero.
    QInterval operator/(const QInterval& o) const;
    QInterval abs() const;

    std::string str() const;
};

/// Enclosure of ln(x) for rational x > 0 with width <= target_width,
/// computed from the artanh series with an explicit tail bound and
/// dyadic argument reduction. No floating point.
QInterval log_enclosure(const Rational& x, const Rational& target_width);

/// Enclosure of ln over a positive interval.
QInterval log_enclosure(const QInterval& x, const Rational& target_width);

} // namespace latcert
