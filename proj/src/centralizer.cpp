#include "latcert/centralizer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latcert {

QMatrix CentralizerElement::matrix() const {
    long d = base.dim();
    QMatrix acc(d);
    // Horner in M
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * base;
        for (long r = 0; r < d; ++r) acc.at(r, r) += Rational(coeffs[i]);
    }
    return acc.scale(Rational(Integer(1), denom));
}

std::string CentralizerElement::str() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs[i].get_str() << "*M^" << i;
    }
    if (first) os << "0";
    os << ")/" << denom.get_str();
    return os.str();
}

CentralizerElement make_centralizer_element(const QMatrix& m, std::vector<Integer> coeffs,
                                            Integer denom, bool assert_irreducible) {
    long d = m.dim();
    if (denom < 1) fail(errc::invalid_argument, "denominator must be positive");
    if (static_cast<long>(coeffs.size()) > d)
        fail(errc::invalid_argument, "too many coefficients: Q[M] has dimension d");
    coeffs.resize(static_cast<size_t>(d), Integer(0));
    RatPoly f = char_poly(m);
    if (d <= 3) {
        if (!irreducible_deg_le3(f)) fail(errc::not_irreducible, "char poly reducible over Q");
    } else if (!assert_irreducible) {
        fail(errc::not_irreducible,
             "degree >= 4: caller must assert irreducibility explicitly");
    }
    CentralizerElement g;
    g.base = m;
    g.coeffs = std::move(coeffs);
    g.denom = std::move(denom);
    g.irreducibility_asserted = (d > 3);
    return g;
}

Rational det_centralizer(const CentralizerElement& g) { return g.matrix().det(); }

CentralizerElement verify_unit(CentralizerElement g) {
    Rational d = det_centralizer(g);
    if (d != 1 && d != -1) fail(errc::invalid_argument, "determinant is not a unit");
    g.unit_checked = true;
    return g;
}

namespace {

// Horner evaluation of (sum a_j t^j)/m at a p-adic point
PadicApprox eval_at_padic(const std::vector<Integer>& a, const Integer& m, const PadicApprox& x,
                          long p, int prec) {
    int embed = prec + 8;
    PadicApprox acc = PadicApprox::zero(p, embed);
    for (size_t i = a.size(); i-- > 0;) {
        acc = acc * x;
        acc = acc + PadicApprox::from_rational(Rational(a[i]), p, embed);
    }
    return acc * PadicApprox::from_rational(Rational(Integer(1), m), p, embed);
}

} // namespace

ValuationVector valuation_vector(const CentralizerElement& g, long p, int prec) {
    auto eigen = qp_eigenvalues(g.base, p, prec);
    ValuationVector out;
    out.p = p;
    out.ordering = "hensel lifts ordered by residue mod p ascending";
    long sum = 0;
    for (const auto& alpha : eigen) {
        PadicApprox lam = eval_at_padic(g.coeffs, g.denom, alpha, p, prec);
        if (lam.is_zero_at_precision())
            fail(errc::insufficient_precision,
                 "eigenvalue of the centralizer element is zero to this precision");
        long v = lam.valuation();
        if (lam.known_end() - v < 2)
            fail(errc::insufficient_precision,
                 "valuation within two digits of the precision boundary");
        out.entries.push_back(v);
        sum += v;
    }
    Rational det = det_centralizer(g);
    long vdet = det == 0 ? 0 : vp(det, Integer(p));
    if (det == 0 || sum != vdet)
        fail(errc::insufficient_precision, "valuation sum does not match v_p(det)");
    return out;
}

std::vector<CentralizerElement> unit_search(const QMatrix& m, long p, int k, long bound) {
    long d = m.dim();
    Integer denom = int_pow(Integer(p), k);
    std::vector<CentralizerElement> out;
    std::set<std::vector<long>> seen;

    std::vector<long> a(static_cast<size_t>(d), -bound);
    if (bound < 0) return out;
    while (true) {
        std::vector<long> neg(a.size());
        for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
        if (!seen.count(neg)) {
            std::vector<Integer> coeffs(a.begin(), a.end());
            CentralizerElement g = make_centralizer_element(m, coeffs, denom);
            if (det_centralizer(g) == 1) {
                seen.insert(a);
                out.push_back(std::move(g));
            }
        }
        // odometer
        size_t i = 0;
        while (i < a.size() && a[i] == bound) {
            a[i] = -bound;
            ++i;
        }
        if (i == a.size()) break;
        ++a[i];
    }
    return out;
}

} // namespace latcert
