#pragma once

#include <string>

#include "latcert/certificate.hpp"
#include "latcert/qmatrix.hpp"
#include "latcert/ratpoly.hpp"

namespace latcert {

/// "3/4", "-12" -> Rational.  Errors with ParseError.
Rational parse_rational(const std::string& text);

/// Accepts either a comma-separated coefficient list "c0,c1,...,ck"
/// (ascending powers) or a human-readable expression over one variable
/// such as "t^3-5t^2+6t-1" or "t^2 - t/2 + 1".  Errors with ParseError.
RatPoly parse_poly(const std::string& text);

/// JSON array-of-arrays (entries: integers or rational strings) -> square
/// matrix.  Errors with ParseError.
QMatrix parse_matrix(const Json& rows);

} // namespace latcert
