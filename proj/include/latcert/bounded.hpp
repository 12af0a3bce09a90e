#pragma once

#include "latcert/padic.hpp"
#include "latcert/qmatrix.hpp"

namespace latcert {

/// |tr| < 2 criterion for SL(2,Q), with +-I counted bounded (finite
/// orbit) even though their traces are +-2.
bool is_r_bounded_sl2(const QMatrix& m);

/// |tr|_p <= 1 criterion for SL(2,Q).
bool is_qp_bounded_sl2(const QMatrix& m, long p);

/// Hensel-lifted eigenvalues of M over Q_p, in a fixed order:
/// - char poly p-integral: roots ordered by residue mod p ascending;
/// - non-integral trace SL2 case (t^2 - (m/n)t + 1, p | n): the two roots
///   come from u^2 - u + tr^-2 via t = tr*u, ordered by u-residue (0 then
///   1), giving valuations +v_p(n), -v_p(n).
std::vector<PadicApprox> qp_eigenvalues(const QMatrix& m, long p, int prec);

} // namespace latcert
