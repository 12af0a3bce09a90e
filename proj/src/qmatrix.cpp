#include "latcert/qmatrix.hpp"

#include <sstream>

namespace latcert {

QMatrix QMatrix::identity(long d) {
    QMatrix m(d);
    for (long i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    long d = static_cast<long>(rows.size());
    QMatrix m(d);
    for (long i = 0; i < d; ++i) {
        if (static_cast<long>(rows[static_cast<size_t>(i)].size()) != d)
            fail(errc::invalid_argument, "matrix must be square");
        for (long j = 0; j < d; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (d_ != o.d_) fail(errc::invalid_argument, "dimension mismatch");
    QMatrix r(d_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (d_ != o.d_) fail(errc::invalid_argument, "dimension mismatch");
    QMatrix r(d_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (d_ != o.d_) fail(errc::invalid_argument, "dimension mismatch");
    QMatrix r(d_);
    for (long i = 0; i < d_; ++i)
        for (long k = 0; k < d_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (long j = 0; j < d_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::scale(const Rational& c) const {
    QMatrix r(d_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<long>(v.size()) != d_) fail(errc::invalid_argument, "dimension mismatch");
    std::vector<Rational> r(static_cast<size_t>(d_), Rational(0));
    for (long i = 0; i < d_; ++i)
        for (long j = 0; j < d_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

Rational QMatrix::trace() const {
    Rational t(0);
    for (long i = 0; i < d_; ++i) t += at(i, i);
    return t;
}

Rational QMatrix::det() const {
    // Gaussian elimination with exact rationals
    QMatrix a = *this;
    Rational det(1);
    for (long c = 0; c < d_; ++c) {
        long piv = -1;
        for (long r = c; r < d_; ++r)
            if (a.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != c) {
            for (long j = 0; j < d_; ++j) std::swap(a.at(piv, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        for (long r = c + 1; r < d_; ++r) {
            if (a.at(r, c) == 0) continue;
            Rational f = a.at(r, c) / a.at(c, c);
            for (long j = c; j < d_; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return det;
}

QMatrix QMatrix::inverse() const {
    QMatrix a = *this;
    QMatrix inv = identity(d_);
    for (long c = 0; c < d_; ++c) {
        long piv = -1;
        for (long r = c; r < d_; ++r)
            if (a.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) fail(errc::invalid_argument, "singular matrix");
        if (piv != c)
            for (long j = 0; j < d_; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        Rational p = a.at(c, c);
        for (long j = 0; j < d_; ++j) {
            a.at(c, j) /= p;
            inv.at(c, j) /= p;
        }
        for (long r = 0; r < d_; ++r) {
            if (r == c || a.at(r, c) == 0) continue;
            Rational f = a.at(r, c);
            for (long j = 0; j < d_; ++j) {
                a.at(r, j) -= f * a.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

QMatrix QMatrix::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    QMatrix base = *this;
    QMatrix r = identity(d_);
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool QMatrix::is_integral() const {
    for (const auto& x : e_)
        if (!is_integer(x)) return false;
    return true;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < d_; ++i) {
        os << "[";
        for (long j = 0; j < d_; ++j) {
            os << to_string(at(i, j));
            if (j + 1 < d_) os << ",";
        }
        os << "]";
        if (i + 1 < d_) os << ",";
    }
    os << "]";
    return os.str();
}

QMatrix companion(const RatPoly& f) {
    if (!f.is_monic()) fail(errc::not_monic, "companion matrix needs a monic polynomial");
    long d = f.degree();
    if (d < 1) fail(errc::degree_too_low, "need degree >= 1");
    QMatrix m(d);
    for (long i = 1; i < d; ++i) m.at(i, i - 1) = 1;
    for (long i = 0; i < d; ++i) m.at(i, d - 1) = -f[static_cast<size_t>(i)];
    return m;
}

RatPoly char_poly(const QMatrix& m) {
    long d = m.dim();
    // Faddeev–LeVerrier: c_d = 1, M_1 = I; c_{d-k} = -tr(A M_k)/k,
    // M_{k+1} = A M_k + c_{d-k} I
    std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
    c[static_cast<size_t>(d)] = 1;
    QMatrix mk = QMatrix::identity(d);
    for (long k = 1; k <= d; ++k) {
        QMatrix am = m * mk;
        Rational ck = -am.trace() / k;
        c[static_cast<size_t>(d - k)] = ck;
        if (k < d) {
            mk = am;
            for (long i = 0; i < d; ++i) mk.at(i, i) += ck;
        }
    }
    return RatPoly(c);
}

} // namespace latcert
