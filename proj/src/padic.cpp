#include "latcert/padic.hpp"

#include <algorithm>
#include <sstream>

namespace latcert {

Integer int_pow(const Integer& base, long e) {
    if (e < 0) fail(errc::invalid_argument, "int_pow with negative exponent");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

void PadicApprox::normalize() {
    if (zero_) return;
    if (digits_ == 0) {
        zero_ = true;
        end_ = val_ + prec_;
        prec_ = 0;
        return;
    }
    long shift = vp_int(digits_, Integer(p_));
    if (shift > 0) {
        digits_ /= int_pow(Integer(p_), shift);
        val_ += shift;
        prec_ -= static_cast<int>(shift);
    }
}

PadicApprox PadicApprox::unit(long p, long val, int prec, Integer digits) {
    if (prec < 1) fail(errc::invalid_argument, "PadicApprox needs precision >= 1");
    PadicApprox a;
    a.p_ = p;
    a.val_ = val;
    a.prec_ = prec;
    a.digits_ = std::move(digits);
    if (a.digits_ < 0 || a.digits_ >= int_pow(Integer(p), prec))
        fail(errc::invalid_argument, "digit window out of range");
    a.normalize();
    return a;
}

PadicApprox PadicApprox::zero(long p, long modulus_exp) {
    PadicApprox a;
    a.p_ = p;
    a.zero_ = true;
    a.end_ = modulus_exp;
    return a;
}

PadicApprox PadicApprox::from_rational(const Rational& x, long p, int prec) {
    if (x == 0) return zero(p, prec);
    long v = vp(x, Integer(p));
    Integer mod = int_pow(Integer(p), prec);
    // unit part num/den mod p^prec
    Integer num = numerator(x), den = denominator(x);
    Integer pv = int_pow(Integer(p), std::abs(v));
    if (v > 0) num /= pv;
    if (v < 0) den /= pv;
    Integer dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        fail(errc::bad_reduction, "denominator not invertible mod p^N");
    Integer u = ((num % mod) * dinv) % mod;
    if (u < 0) u += mod;
    return unit(p, v, prec, u);
}

long PadicApprox::valuation() const {
    if (zero_)
        fail(errc::insufficient_precision,
             "valuation of a window that is zero at this precision");
    return val_;
}

int PadicApprox::digit_at(long pos) const {
    if (zero_) {
        if (pos >= end_) fail(errc::insufficient_precision, "digit beyond known window");
        return 0;
    }
    if (pos < val_) return 0;
    if (pos >= val_ + prec_) fail(errc::insufficient_precision, "digit beyond known window");
    Integer q = digits_ / int_pow(Integer(p_), pos - val_);
    return static_cast<int>(mpz_class(q % p_).get_si());
}

Integer PadicApprox::residue(long e) const {
    if (known_end() < e) fail(errc::insufficient_precision, "residue beyond known window");
    if (zero_) return Integer(0);
    if (val_ < 0) fail(errc::invalid_argument, "residue of a non-integral value");
    if (val_ >= e) return Integer(0);
    Integer v = digits_ * int_pow(Integer(p_), val_);
    return v % int_pow(Integer(p_), e);
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    if (p_ != o.p_) fail(errc::invalid_argument, "mixed primes in p-adic addition");
    long end = std::min(known_end(), o.known_end());
    long base = std::min(zero_ ? end : val_, o.zero_ ? end : o.val_);
    base = std::min(base, end);
    if (end <= base) return zero(p_, end);
    Integer mod = int_pow(Integer(p_), end - base);
    Integer a = zero_ ? Integer(0) : (digits_ * int_pow(Integer(p_), val_ - base)) % mod;
    Integer b = o.zero_ ? Integer(0) : (o.digits_ * int_pow(Integer(p_), o.val_ - base)) % mod;
    Integer s = (a + b) % mod;
    if (s == 0) return zero(p_, end);
    PadicApprox r;
    r.p_ = p_;
    r.val_ = base;
    r.prec_ = static_cast<int>(end - base);
    r.digits_ = s;
    r.normalize();
    return r;
}

PadicApprox PadicApprox::operator-() const {
    if (zero_) return *this;
    PadicApprox r = *this;
    r.digits_ = int_pow(Integer(p_), prec_) - digits_;
    return r;
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const { return *this + (-o); }

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    if (p_ != o.p_) fail(errc::invalid_argument, "mixed primes in p-adic multiplication");
    if (zero_ || o.zero_) {
        // |O(p^a) * O(p^b)| <= p^-(a+b); a unit factor contributes its valuation
        long a = zero_ ? end_ : val_;
        long b = o.zero_ ? o.end_ : o.val_;
        return zero(p_, a + b);
    }
    int prec = std::min(prec_, o.prec_);
    Integer mod = int_pow(Integer(p_), prec);
    PadicApprox r;
    r.p_ = p_;
    r.val_ = val_ + o.val_;
    r.prec_ = prec;
    r.digits_ = (digits_ * o.digits_) % mod;
    r.normalize();
    return r;
}

PadicApprox PadicApprox::inverse() const {
    if (zero_) fail(errc::insufficient_precision, "inverse of a zero window");
    Integer mod = int_pow(Integer(p_), prec_);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), digits_.get_mpz_t(), mod.get_mpz_t()) == 0)
        fail(errc::invalid_argument, "non-unit digit window");
    PadicApprox r;
    r.p_ = p_;
    r.val_ = -val_;
    r.prec_ = prec_;
    r.digits_ = inv;
    return r;
}

PadicApprox PadicApprox::mul_prime_power(long k) const {
    PadicApprox r = *this;
    if (r.zero_)
        r.end_ += k;
    else
        r.val_ += k;
    return r;
}

bool PadicApprox::agree_on_overlap(const PadicApprox& a, const PadicApprox& b) {
    if (a.p_ != b.p_) return false;
    PadicApprox d = a - b;
    // difference must be zero on the common window
    return d.is_zero_at_precision();
}

std::string PadicApprox::str() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(" << p_ << "^" << end_ << ")";
        return os.str();
    }
    os << digits_.get_str() << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << known_end()
       << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// f with p-integral coefficients mapped to integer coefficients mod p^N
std::vector<Integer> reduce_coeffs(const RatPoly& f, long p, const Integer& mod) {
    std::vector<Integer> out;
    out.reserve(static_cast<size_t>(f.degree()) + 1);
    for (const auto& c : f.coeffs()) {
        const Integer& den = denominator(c);
        if (den % p == 0)
            fail(errc::bad_reduction, "coefficient denominator divisible by " + std::to_string(p));
        Integer dinv;
        mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
        Integer v = ((numerator(c) % mod) * dinv) % mod;
        if (v < 0) v += mod;
        out.push_back(v);
    }
    return out;
}

Integer eval_mod(const std::vector<Integer>& coeffs, const Integer& x, const Integer& mod) {
    Integer acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % mod;
    if (acc < 0) acc += mod;
    return acc;
}

std::vector<Integer> derivative_coeffs(const std::vector<Integer>& c) {
    std::vector<Integer> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
    return d;
}

} // namespace

PadicApprox hensel_lift(const RatPoly& f, long p, const Integer& r0, int N) {
    if (!is_prime(Integer(p))) fail(errc::invalid_argument, "hensel_lift needs a prime");
    if (N < 1) fail(errc::invalid_argument, "precision must be >= 1");
    Integer mod = int_pow(Integer(p), N);
    std::vector<Integer> fc = reduce_coeffs(f, p, mod);
    std::vector<Integer> dc = derivative_coeffs(fc);

    Integer fp(p);
    if (eval_mod(fc, r0, fp) != 0) fail(errc::invalid_argument, "r0 is not a root mod p");
    Integer d0 = eval_mod(dc, r0, fp);
    if (d0 == 0) fail(errc::singular_root, "f'(r0) = 0 mod p");

    Integer x = r0 % mod;
    if (x < 0) x += mod;
    // quadratic convergence: correct digits at least double per step
    int steps = 1;
    while ((1L << steps) < N + 1 && steps < 62) ++steps;
    for (int i = 0; i <= steps; ++i) {
        Integer fx = eval_mod(fc, x, mod);
        if (fx == 0) break;
        Integer dfx = eval_mod(dc, x, mod);
        // df is a unit mod p, hence invertible mod p^N
        Integer dinv;
        if (mpz_invert(dinv.get_mpz_t(), dfx.get_mpz_t(), mod.get_mpz_t()) == 0)
            fail(errc::singular_root, "derivative lost invertibility during lift");
        x = (x - fx * dinv) % mod;
        if (x < 0) x += mod;
    }
    if (eval_mod(fc, x, mod) != 0)
        fail(errc::insufficient_precision, "Newton iteration failed to converge to precision");
    if (x == 0) return PadicApprox::zero(p, N);
    long v = vp_int(x, Integer(p));
    return PadicApprox::unit(p, v, static_cast<int>(N - v), x / int_pow(Integer(p), v));
}

std::vector<std::pair<long, int>> roots_mod_p(const RatPoly& f, long p) {
    if (!is_prime(Integer(p))) fail(errc::invalid_argument, "roots_mod_p needs a prime");
    if (p > 100000) fail(errc::invalid_argument, "exhaustive search capped at p <= 100000");
    if (f.is_zero()) fail(errc::bad_reduction, "zero polynomial");
    Integer fp(p);
    std::vector<Integer> fc = reduce_coeffs(f, p, fp);
    // strip to F_p[t]
    std::vector<unsigned long> c;
    c.reserve(fc.size());
    for (const auto& v : fc) c.push_back(v.get_ui());
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) fail(errc::bad_reduction, "polynomial vanishes identically mod p");

    unsigned long up = static_cast<unsigned long>(p);
    std::vector<std::pair<long, int>> out;
    for (unsigned long r = 0; r < up; ++r) {
        unsigned long acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * r + *it) % up;
        if (acc != 0) continue;
        // multiplicity by synthetic division
        std::vector<unsigned long> cur = c;
        int mult = 0;
        while (true) {
            // divide cur by (t - r): Horner quotient; remainder must be 0
            std::vector<unsigned long> quo(cur.size() - 1);
            unsigned long carry = 0;
            for (size_t i = cur.size(); i-- > 1;) {
                carry = (carry * r + cur[i]) % up;
                quo[i - 1] = carry;
            }
            unsigned long rem = (carry * r + cur[0]) % up;
            if (rem != 0) break;
            ++mult;
            cur = std::move(quo);
            if (cur.empty()) break;
        }
        out.emplace_back(static_cast<long>(r), mult);
    }
    return out;
}

const char* to_string(SplitClass c) {
    switch (c) {
        case SplitClass::Splits: return "Splits";
        case SplitClass::DoesNotSplit: return "DoesNotSplit";
        case SplitClass::Ramified: return "Ramified";
    }
    return "?";
}

SplitClass splits_over_qp(const RatPoly& f, long p) {
    if (!f.is_monic() || !f.has_integer_coeffs())
        fail(errc::invalid_argument, "splitting test needs a monic integer polynomial");
    Rational disc = poly_discriminant(f);
    if (disc == 0) fail(errc::not_squarefree, "discriminant vanishes");
    if (vp_int(numerator(disc), Integer(p)) > 0) return SplitClass::Ramified;
    auto roots = roots_mod_p(f, p);
    return static_cast<long>(roots.size()) == f.degree() ? SplitClass::Splits
                                                         : SplitClass::DoesNotSplit;
}

} // namespace latcert
