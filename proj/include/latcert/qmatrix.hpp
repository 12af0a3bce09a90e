#pragma once

#include <string>
#include <vector>

#include "latcert/ratpoly.hpp"

namespace latcert {

/// Dense square matrix over Q, row major. Everything exact.
class QMatrix {
  public:
    QMatrix() = default;
    explicit QMatrix(long d) : d_(d), e_(static_cast<size_t>(d * d), Rational(0)) {}
    static QMatrix identity(long d);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    long dim() const { return d_; }
    Rational& at(long i, long j) { return e_[static_cast<size_t>(i * d_ + j)]; }
    const Rational& at(long i, long j) const { return e_[static_cast<size_t>(i * d_ + j)]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix scale(const Rational& c) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    bool operator==(const QMatrix& o) const { return d_ == o.d_ && e_ == o.e_; }

    Rational trace() const;
    Rational det() const;
    /// Errors (SingularRoot is not right here; uses InvalidArgument) when singular.
    QMatrix inverse() const;
    QMatrix pow(long k) const; // negative k through the inverse

    bool is_integral() const;
    std::string str() const;

  private:
    long d_ = 0;
    std::vector<Rational> e_;
};

/// Companion matrix of a monic polynomial: subdiagonal 1s, last column
/// the negated coefficients.
QMatrix companion(const RatPoly& f);

/// Exact characteristic polynomial (Faddeev–LeVerrier).
RatPoly char_poly(const QMatrix& m);

} // namespace latcert
