#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latcert/affine.hpp"

namespace latcert {

/// Dense polynomial over F_q, coefficients ascending, trailing zeros
/// stripped.
struct FpPoly {
    long q = 2;
    std::vector<uint8_t> c;

    static FpPoly zero(long q) { return {q, {}}; }
    static FpPoly constant(long q, long v);
    static FpPoly variable(long q) { return {q, {0, 1}}; }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    long eval(long x) const; // in F_q
    void trim();

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    bool operator==(const FpPoly& o) const { return q == o.q && c == o.c; }

    /// Exact quotient by (t + a); errors unless t = -a is a root.
    FpPoly divexact_linear(long a) const;
    /// p(s + a) as a polynomial in s.
    FpPoly taylor_shift(long a) const;

    std::string str() const;
};

/// Element of Lambda_d(q) = F_q[t, 1/t, 1/(t+1), ..., 1/(t+d-2)] x| Z^(d-1):
/// ring part num / prod (t+i)^den[i] in lowest terms, plus the shift
/// vector. Group law (r,s)(r',s') = (r + chi(s) r', s + s') where chi(s)
/// = prod (t+i)^(s_i).
struct LambdaElement {
    long d = 2;
    long q = 2;
    FpPoly num = FpPoly::zero(2);
    std::vector<long> den;   // d-1 exponents, >= 0
    std::vector<long> shift; // d-1 entries

    bool operator==(const LambdaElement& o) const {
        return d == o.d && q == o.q && num == o.num && den == o.den && shift == o.shift;
    }
    std::string str() const;
};

LambdaElement lambda_identity(long d, long q);
/// Ring generator with numerator polynomial `num` (shift part zero).
LambdaElement lambda_ring_element(long d, long q, FpPoly num, std::vector<long> den = {});
/// Shift generator u_i (the i-th Z factor, multiplication by t+i).
LambdaElement lambda_shift_generator(long d, long q, long i);

LambdaElement lambda_mul(const LambdaElement& a, const LambdaElement& b);
LambdaElement lambda_inv(const LambdaElement& a);

/// Image in the affine model of Isom(DL_d(q)): coordinate l < d-1
/// expands the ring part in s = t+l, coordinate d-1 in s = 1/t; the
/// scale is the expansion of chi(shift). Windows carry `prec` digits.
/// Requires q >= d-1 so that the d-1 places stay distinct in F_q.
LaurentAffineMap lambda_embed(const LambdaElement& a, int prec);

/// The 2q embedded maps {a^i t : i in F_q} and inverses for Lambda_2(q),
/// under which the lamplighter acts simply transitively on DL_2(q):
/// orbit balls equal graph balls radius for radius.  q must be prime.
std::vector<LaurentAffineMap> lamplighter_dl_generators(long q, int prec = 12);

} // namespace latcert
