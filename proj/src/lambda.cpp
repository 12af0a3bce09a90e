#include "latcert/lambda.hpp"

#include <sstream>

#include "latcert/rational.hpp"

namespace latcert {

namespace {

long fq_norm(long v, long q) { return ((v % q) + q) % q; }

} // namespace

FpPoly FpPoly::constant(long q, long v) {
    FpPoly p{q, {}};
    long r = fq_norm(v, q);
    if (r != 0) p.c.push_back(static_cast<uint8_t>(r));
    return p;
}

long FpPoly::eval(long x) const {
    long acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = fq_norm(acc * x + c[i], q);
    return acc;
}

void FpPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    if (q != o.q) fail(errc::invalid_argument, "mixed fields");
    FpPoly r{q, {}};
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        long v = (i < c.size() ? c[i] : 0) + (i < o.c.size() ? o.c[i] : 0);
        r.c[i] = static_cast<uint8_t>(v % q);
    }
    r.trim();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    if (q != o.q) fail(errc::invalid_argument, "mixed fields");
    FpPoly r{q, {}};
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        long v = (i < c.size() ? c[i] : 0) - (i < o.c.size() ? o.c[i] : 0);
        r.c[i] = static_cast<uint8_t>(fq_norm(v, q));
    }
    r.trim();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (q != o.q) fail(errc::invalid_argument, "mixed fields");
    if (is_zero() || o.is_zero()) return zero(q);
    FpPoly r{q, std::vector<uint8_t>(c.size() + o.c.size() - 1, 0)};
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j)
            r.c[i + j] = static_cast<uint8_t>((r.c[i + j] + c[i] * o.c[j]) % q);
    }
    r.trim();
    return r;
}

FpPoly FpPoly::divexact_linear(long a) const {
    long root = fq_norm(-a, q);
    if (eval(root) != 0) fail(errc::invalid_argument, "not divisible by t + a");
    // synthetic division by (t - root)
    FpPoly quo{q, std::vector<uint8_t>(c.size() - 1, 0)};
    long carry = 0;
    for (size_t i = c.size(); i-- > 1;) {
        carry = fq_norm(carry * root + c[i], q);
        quo.c[i - 1] = static_cast<uint8_t>(carry);
    }
    quo.trim();
    return quo;
}

FpPoly FpPoly::taylor_shift(long a) const {
    // Horner: p(s+a) = (...((c_n)(s+a) + c_{n-1})(s+a) + ...)
    FpPoly lin{q, {static_cast<uint8_t>(fq_norm(a, q)), 1}};
    FpPoly acc = zero(q);
    for (size_t i = c.size(); i-- > 0;) acc = acc * lin + constant(q, c[i]);
    return acc;
}

std::string FpPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (c[i] != 1 || i == 0) os << static_cast<int>(c[i]);
        if (i >= 1) {
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

void check_compat(const LambdaElement& a, const LambdaElement& b) {
    if (a.d != b.d || a.q != b.q) fail(errc::invalid_argument, "mixed groups");
}

// cancel (t+i) factors shared by numerator and denominator
void reduce(LambdaElement& x) {
    for (long i = 0; i < x.d - 1; ++i) {
        while (x.den[static_cast<size_t>(i)] > 0 && !x.num.is_zero() &&
               x.num.eval(fq_norm(-i, x.q)) == 0) {
            x.num = x.num.divexact_linear(i);
            --x.den[static_cast<size_t>(i)];
        }
        if (x.num.is_zero()) x.den[static_cast<size_t>(i)] = 0;
    }
}

// a.num/a.den + b.num/b.den, shifts ignored
void frac_add_into(LambdaElement& a, const FpPoly& bnum, const std::vector<long>& bden) {
    std::vector<long> den(static_cast<size_t>(a.d - 1));
    FpPoly an = a.num, bn = bnum;
    for (size_t i = 0; i < den.size(); ++i) {
        den[i] = std::max(a.den[i], bden[i]);
        FpPoly lin{a.q, {static_cast<uint8_t>(static_cast<long>(i) % a.q), 1}};
        for (long k = a.den[i]; k < den[i]; ++k) an = an * lin;
        for (long k = bden[i]; k < den[i]; ++k) bn = bn * lin;
    }
    a.num = an + bn;
    a.den = den;
    reduce(a);
}

// multiply the ring part by chi(s) = prod (t+i)^(s_i)
void mul_chi_into(LambdaElement& x, const std::vector<long>& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        FpPoly lin{x.q, {static_cast<uint8_t>(static_cast<long>(i) % x.q), 1}};
        if (s[i] >= 0)
            for (long k = 0; k < s[i]; ++k) x.num = x.num * lin;
        else
            x.den[i] += -s[i];
    }
    reduce(x);
}

} // namespace

LambdaElement lambda_identity(long d, long q) {
    if (d < 2) fail(errc::invalid_argument, "d must be >= 2");
    if (!is_prime(Integer(q))) fail(errc::invalid_argument, "q must be prime");
    LambdaElement e;
    e.d = d;
    e.q = q;
    e.num = FpPoly::zero(q);
    e.den.assign(static_cast<size_t>(d - 1), 0);
    e.shift.assign(static_cast<size_t>(d - 1), 0);
    return e;
}

LambdaElement lambda_ring_element(long d, long q, FpPoly num, std::vector<long> den) {
    LambdaElement e = lambda_identity(d, q);
    if (num.q != q) fail(errc::invalid_argument, "field mismatch");
    den.resize(static_cast<size_t>(d - 1), 0);
    for (long v : den)
        if (v < 0) fail(errc::invalid_argument, "denominator exponents must be >= 0");
    e.num = std::move(num);
    e.den = std::move(den);
    reduce(e);
    return e;
}

LambdaElement lambda_shift_generator(long d, long q, long i) {
    LambdaElement e = lambda_identity(d, q);
    if (i < 0 || i > d - 2) fail(errc::invalid_argument, "shift index out of range");
    e.shift[static_cast<size_t>(i)] = 1;
    return e;
}

LambdaElement lambda_mul(const LambdaElement& a, const LambdaElement& b) {
    check_compat(a, b);
    LambdaElement r = a;
    // r.ring = a.ring + chi(a.shift) * b.ring
    LambdaElement tb = b;
    mul_chi_into(tb, a.shift);
    frac_add_into(r, tb.num, tb.den);
    for (size_t i = 0; i < r.shift.size(); ++i) r.shift[i] += b.shift[i];
    return r;
}

LambdaElement lambda_inv(const LambdaElement& a) {
    LambdaElement r = lambda_identity(a.d, a.q);
    // (r,s)^-1 = (-chi(-s) r, -s)
    r.num = FpPoly::zero(a.q) - a.num;
    r.den = a.den;
    std::vector<long> minus(a.shift.size());
    for (size_t i = 0; i < minus.size(); ++i) minus[i] = -a.shift[i];
    mul_chi_into(r, minus);
    r.shift = minus;
    return r;
}

std::string LambdaElement::str() const {
    std::ostringstream os;
    os << "(" << num.str();
    for (size_t i = 0; i < den.size(); ++i)
        if (den[i] > 0) os << "/(t+" << i << ")^" << den[i];
    os << "; [";
    for (size_t i = 0; i < shift.size(); ++i) {
        if (i) os << ",";
        os << shift[i];
    }
    os << "])";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// expansion of (t + i) at the place s = t + l (l < d-1) or s = 1/t
// (l = d-1), exact
LaurentApprox linear_at_place(long q, long d, long i, long l) {
    if (l < d - 1) {
        long c0 = fq_norm(i - l, q);
        if (c0 == 0) return LaurentApprox::monomial(q, 1); // s itself
        return LaurentApprox::exact_poly(q, 0, {static_cast<uint8_t>(c0), 1});
    }
    // t + i = s^-1 (1 + i s)
    long c1 = fq_norm(i, q);
    if (c1 == 0) return LaurentApprox::monomial(q, -1);
    return LaurentApprox::exact_poly(q, -1, {1, static_cast<uint8_t>(c1)});
}

// expansion of the numerator polynomial at a place
LaurentApprox poly_at_place(const FpPoly& num, long d, long l) {
    long q = num.q;
    if (num.is_zero()) return LaurentApprox::exact_zero(q);
    if (l < d - 1) {
        FpPoly shifted = num.taylor_shift(fq_norm(-l, q)); // t = s - l
        return LaurentApprox::exact_poly(q, 0, shifted.c);
    }
    // t = 1/s: sum c_j s^(-j)
    std::vector<uint8_t> rev(num.c.rbegin(), num.c.rend());
    return LaurentApprox::exact_poly(q, -num.degree(), std::move(rev));
}

} // namespace

LaurentAffineMap lambda_embed(const LambdaElement& a, int prec) {
    long d = a.d, q = a.q;
    if (q < d - 1) fail(errc::invalid_argument, "need q >= d-1 to separate the places");
    if (prec < 1) fail(errc::invalid_argument, "precision must be >= 1");
    LaurentAffineMap g;
    for (long l = 0; l < d; ++l) {
        // scale = chi(shift) expanded at place l
        LaurentApprox scale = LaurentApprox::one(q);
        for (long i = 0; i < d - 1; ++i) {
            long e = a.shift[static_cast<size_t>(i)];
            if (e == 0) continue;
            LaurentApprox lin = linear_at_place(q, d, i, l);
            LaurentApprox f = e > 0 ? lin : lin.inverse(prec);
            for (long k = 0; k < std::abs(e); ++k) scale = scale * f;
        }
        // shift = ring part expanded at place l
        LaurentApprox sh = poly_at_place(a.num, d, l);
        for (long i = 0; i < d - 1; ++i) {
            long e = a.den[static_cast<size_t>(i)];
            if (e == 0) continue;
            LaurentApprox inv = linear_at_place(q, d, i, l).inverse(prec);
            for (long k = 0; k < e; ++k) sh = sh * inv;
        }
        // at infinity the polynomial part of x occupies s-positions -deg(x)..0,
        // double-booking position 0 with the finite places; the s^-1 twist
        // (a conjugation, so scales and level sums are untouched) makes the
        // digit windows tile and the vertex stabilizers trivial
        if (l == d - 1) sh = sh * LaurentApprox::monomial(q, -1);
        g.coords.emplace_back(std::move(scale), std::move(sh));
    }
    g.check();
    return g;
}

std::vector<LaurentAffineMap> lamplighter_dl_generators(long q, int prec) {
    if (!is_prime(Integer(q))) fail(errc::invalid_argument, "lamp count must be prime");
    std::vector<LaurentAffineMap> gens;
    LambdaElement shift = lambda_shift_generator(2, q, 0);
    for (long i = 0; i < q; ++i) {
        LambdaElement g = lambda_mul(lambda_ring_element(2, q, FpPoly::constant(q, i)), shift);
        gens.push_back(lambda_embed(g, prec));
        gens.push_back(lambda_embed(lambda_inv(g), prec));
    }
    return gens;
}

} // namespace latcert
