#pragma once

#include <string>
#include <vector>

#include "latcert/bounded.hpp"

namespace latcert {

/// g = (a_0 I + a_1 M + ... + a_{d-1} M^{d-1}) / m for a base matrix M
/// whose char poly is irreducible (so Q[M] is the full centralizer).
struct CentralizerElement {
    QMatrix base;
    std::vector<Integer> coeffs; // a_0..a_{d-1}
    Integer denom;               // m >= 1
    bool unit_checked = false;   // det == +-1 verified
    bool irreducibility_asserted = false; // deg >= 4 caller assertion

    QMatrix matrix() const;
    std::string str() const;
};

/// Validates the irreducibility precondition (rational-root test,
/// conclusive for deg <= 3; deg >= 4 needs assert_irreducible).
CentralizerElement make_centralizer_element(const QMatrix& m, std::vector<Integer> coeffs,
                                            Integer denom, bool assert_irreducible = false);

Rational det_centralizer(const CentralizerElement& g);

/// Marks the element unit_checked; errors if det is not +-1.
CentralizerElement verify_unit(CentralizerElement g);

/// (v_p(lambda_i(g)))_i over the fixed eigenvalue order of
/// qp_eigenvalues. Entries sum to v_p(det g).
struct ValuationVector {
    long p = 0;
    std::vector<long> entries;
    std::string ordering; // which lift is lambda_i
};

ValuationVector valuation_vector(const CentralizerElement& g, long p, int prec);

/// All (sum a_i M^i)/p^k with |a_i| <= bound and determinant 1,
/// deduplicated up to sign, coefficient vectors in lexicographic order.
std::vector<CentralizerElement> unit_search(const QMatrix& m, long p, int k, long bound);

} // namespace latcert
