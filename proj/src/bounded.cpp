#include "latcert/bounded.hpp"

namespace latcert {

namespace {

void require_sl2(const QMatrix& m) {
    if (m.dim() != 2) fail(errc::not_sl2, "need a 2x2 matrix");
    if (m.det() != 1) fail(errc::not_sl2, "determinant must be 1");
}

bool is_pm_identity(const QMatrix& m) {
    return m == QMatrix::identity(m.dim()) || m == QMatrix::identity(m.dim()).scale(-1);
}

} // namespace

bool is_r_bounded_sl2(const QMatrix& m) {
    require_sl2(m);
    if (is_pm_identity(m)) return true;
    Rational t = m.trace();
    return t < 2 && t > -2;
}

bool is_qp_bounded_sl2(const QMatrix& m, long p) {
    require_sl2(m);
    Rational t = m.trace();
    if (t == 0) return true;
    return vp(t, Integer(p)) >= 0;
}

std::vector<PadicApprox> qp_eigenvalues(const QMatrix& m, long p, int prec) {
    RatPoly f = char_poly(m);
    if (!is_squarefree(f)) fail(errc::not_squarefree, "repeated eigenvalues");
    long d = m.dim();

    bool p_integral = true;
    for (const auto& c : f.coeffs())
        if (denominator(c) % p == 0) p_integral = false;

    if (p_integral) {
        Rational disc = poly_discriminant(f);
        if (vp(disc, Integer(p)) > 0) fail(errc::ramified, "p divides the discriminant");
        auto roots = roots_mod_p(f, p);
        if (static_cast<long>(roots.size()) != d)
            fail(errc::does_not_split, "char poly does not split over Q_p");
        std::vector<PadicApprox> out;
        out.reserve(roots.size());
        for (auto [r, mult] : roots) out.push_back(hensel_lift(f, p, Integer(r), prec));
        return out;
    }

    // SL2 with p in the trace denominator: t = tr*u turns
    // t^2 - tr*t + 1 = 0 into u^2 - u + tr^-2 = 0, which is p-integral
    // with simple roots 0 and 1 mod p.
    if (d != 2 || m.det() != 1)
        fail(errc::bad_reduction, "non-integral char poly handled only for SL2");
    Rational tr = m.trace();
    if (f != RatPoly({Rational(1), -tr, Rational(1)}))
        fail(errc::bad_reduction, "unexpected char poly shape");
    Rational a2 = 1 / (tr * tr);
    RatPoly g({a2, Rational(-1), Rational(1)});
    PadicApprox trp = PadicApprox::from_rational(tr, p, prec);
    std::vector<PadicApprox> out;
    for (long r : {0L, 1L}) out.push_back(trp * hensel_lift(g, p, Integer(r), prec));
    return out;
}

} // namespace latcert
