#pragma once

#include <utility>
#include <vector>

#include "latcert/ratpoly.hpp"

namespace latcert {

/// Open interval (low, high) containing exactly one real root of the
/// polynomial it was produced for.
struct IsolatingInterval {
    Rational low;
    Rational high;
    Rational width() const { return high - low; }
    Rational midpoint() const { return (low + high) / 2; }
};

/// 1 + max |c_i / c_d|; every real root lies in (-B, B).
Rational cauchy_bound(const RatPoly& f);

/// Number of distinct real roots of squarefree f in the open interval
/// (a, b). Requires f(a) != 0 and f(b) != 0.
long count_real_roots_between(const RatPoly& f, const Rational& a, const Rational& b);

/// All real roots of squarefree f, isolated: returns (count, intervals)
/// with intervals sorted ascending and pairwise disjoint.
std::pair<long, std::vector<IsolatingInterval>> sturm_real_roots(const RatPoly& f);

/// Bisect until high - low < width; the root stays strictly inside.
IsolatingInterval refine_to_width(const RatPoly& f, IsolatingInterval iv, const Rational& width);

} // namespace latcert
