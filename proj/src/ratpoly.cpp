#include "latcert/ratpoly.hpp"

#include <algorithm>
#include <sstream>

namespace latcert {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::variable() { return RatPoly({Rational(0), Rational(1)}); }

RatPoly RatPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return RatPoly(std::move(c));
}

const Rational& RatPoly::leading() const {
    if (is_zero()) fail(errc::invalid_argument, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool RatPoly::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (degree() < 1) return RatPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::scale(const Rational& k) const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x *= k;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& div) const {
    if (div.is_zero()) fail(errc::invalid_argument, "polynomial division by zero");
    std::vector<Rational> rem(coeffs_);
    long dd = div.degree();
    long dr = static_cast<long>(rem.size()) - 1;
    if (dr < dd) return {RatPoly(), *this};
    std::vector<Rational> quo(static_cast<size_t>(dr - dd + 1), Rational(0));
    for (long k = dr; k >= dd; --k) {
        Rational c = rem[static_cast<size_t>(k)] / div.leading();
        if (c == 0) continue;
        quo[static_cast<size_t>(k - dd)] = c;
        for (long i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(k - dd + i)] -= c * div[static_cast<size_t>(i)];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
    RatPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + RatPoly::constant(*it);
    return acc;
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1) a = a.scale(1 / a.leading());
    return a;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1 && i != 0);
        if (!unit) os << to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Rational resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    long m = f.degree(), n = g.degree();
    if (m == 0) {
        Rational acc(1);
        for (long i = 0; i < n; ++i) acc *= f[0];
        return acc;
    }
    if (n == 0) {
        Rational acc(1);
        for (long i = 0; i < m; ++i) acc *= g[0];
        return acc;
    }
    // Sylvester matrix, exact Gaussian elimination
    long N = m + n;
    std::vector<std::vector<Rational>> s(static_cast<size_t>(N),
                                         std::vector<Rational>(static_cast<size_t>(N), Rational(0)));
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) s[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = f[static_cast<size_t>(m - i)];
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] = g[static_cast<size_t>(n - i)];

    Rational det(1);
    for (long col = 0; col < N; ++col) {
        long piv = -1;
        for (long r = col; r < N; ++r)
            if (s[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            std::swap(s[static_cast<size_t>(piv)], s[static_cast<size_t>(col)]);
            det = -det;
        }
        const Rational& pv = s[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= pv;
        for (long r = col + 1; r < N; ++r) {
            Rational factor = s[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
            if (factor == 0) continue;
            for (long c = col; c < N; ++c)
                s[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    factor * s[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }
    return det;
}

Rational poly_discriminant(const RatPoly& f) {
    if (f.degree() < 1) fail(errc::degree_too_low, "discriminant needs deg >= 1");
    long d = f.degree();
    Rational res = resultant(f, f.derivative());
    Rational disc = res / f.leading();
    if (((d * (d - 1)) / 2) % 2 != 0) disc = -disc;
    return disc;
}

bool is_squarefree(const RatPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return RatPoly::gcd(f, f.derivative()).degree() == 0;
}

bool irreducible_deg_le3(const RatPoly& f) {
    long d = f.degree();
    if (d < 1 || d > 3) fail(errc::invalid_argument, "rational-root irreducibility test limited to deg 1..3");
    if (d == 1) return true;
    // deg 2/3: reducible over Q iff a rational root exists; candidates p/q
    // with p | constant, q | leading (after clearing denominators)
    Integer den(1);
    for (const auto& c : f.coeffs()) den = lcm(den, denominator(c));
    std::vector<Integer> ic;
    for (const auto& c : f.coeffs()) ic.push_back(numerator(c) * (den / denominator(c)));
    if (ic.front() == 0) return false; // t divides f
    std::vector<Integer> ps, qs;
    Integer a0 = abs(ic.front()), ad = abs(ic.back());
    for (Integer i = 1; i * i <= a0; ++i)
        if (a0 % i == 0) {
            ps.push_back(i);
            ps.push_back(a0 / i);
        }
    for (Integer i = 1; i * i <= ad; ++i)
        if (ad % i == 0) {
            qs.push_back(i);
            qs.push_back(ad / i);
        }
    for (const auto& p : ps)
        for (const auto& q : qs)
            for (int sign : {1, -1}) {
                Rational cand = make_rational(sign * p, q);
                if (f.eval(cand) == 0) return false;
            }
    return true;
}

} // namespace latcert
