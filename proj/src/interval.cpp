#include "latcert/interval.hpp"

#include <algorithm>
#include <sstream>

#include "latcert/errors.hpp"

namespace latcert {

QInterval::QInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
    if (lo > hi) fail(errc::invalid_argument, "interval endpoints out of order");
}

QInterval QInterval::operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
QInterval QInterval::operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
QInterval QInterval::operator-() const { return {-hi, -lo}; }

QInterval QInterval::operator*(const QInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rational mn = std::min(std::min(a, b), std::min(c, d));
    Rational mx = std::max(std::max(a, b), std::max(c, d));
    return {mn, mx};
}

QInterval QInterval::operator/(const QInterval& o) const {
    if (o.contains_zero()) fail(errc::invalid_argument, "interval division by zero-straddling interval");
    Rational a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    Rational mn = std::min(std::min(a, b), std::min(c, d));
    Rational mx = std::max(std::max(a, b), std::max(c, d));
    return {mn, mx};
}

QInterval QInterval::abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return -*this;
    return {Rational(0), std::max(Rational(-lo), hi)};
}

std::string QInterval::str() const {
    std::ostringstream os;
    os << "[" << to_string(lo) << ", " << to_string(hi) << "]";
    return os.str();
}

namespace {

// 2*artanh(z) partial sum with tail bound, for 0 <= z < 1:
// ln((1+z)/(1-z)) in [S, S + tail]
QInterval artanh2_enclosure(const Rational& z, const Rational& target) {
    Rational z2 = z * z;
    Rational term = z; // z^(2k+1)
    Rational sum(0);
    long k = 0;
    while (true) {
        sum += term / (2 * k + 1);
        term *= z2;
        ++k;
        // tail <= z^(2k+1)/(2k+1) * 1/(1-z^2), geometric in z^2
        Rational tail = term / ((2 * k + 1) * (1 - z2));
        if (2 * tail <= target) return {2 * sum, 2 * (sum + tail)};
        if (k > 100000) fail(errc::interval_too_wide, "log series does not reach target width");
    }
}

// ln(2) enclosure, z = 1/3
QInterval ln2_enclosure(const Rational& target) {
    return artanh2_enclosure(Rational(1, 3), target);
}

} // namespace

QInterval log_enclosure(const Rational& x, const Rational& target_width) {
    if (x <= 0) fail(errc::invalid_argument, "log of non-positive value");
    if (target_width <= 0) fail(errc::invalid_argument, "target width must be positive");
    if (x < 1) {
        QInterval r = log_enclosure(Rational(1 / x), target_width);
        return -r;
    }
    // x = 2^e * m with m in [1, 2)
    long e = 0;
    Rational m = x;
    while (m >= 2) {
        m /= 2;
        ++e;
    }
    Rational half = target_width / 2;
    QInterval lnm = artanh2_enclosure(Rational((m - 1) / (m + 1)), half);
    if (e == 0) return lnm;
    QInterval ln2 = ln2_enclosure(half / e);
    QInterval scaled{ln2.lo * e, ln2.hi * e};
    return lnm + scaled;
}

QInterval log_enclosure(const QInterval& x, const Rational& target_width) {
    if (!(x.lo > 0)) fail(errc::invalid_argument, "log of interval touching zero");
    QInterval a = log_enclosure(x.lo, target_width);
    QInterval b = log_enclosure(x.hi, target_width);
    return {a.lo, b.hi};
}

} // namespace latcert
