// Independent oracles the test suites compare library results against.
// Everything here is deliberately written from first principles (lattice
// joins, direct enumeration) rather than reusing the library's own logic.
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "latcert/lambda.hpp"
#include "latcert/qmatrix.hpp"
#include "latcert/rational.hpp"

namespace oracles {

using latcert::Integer;
using latcert::QMatrix;
using latcert::Rational;

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) { // inclusive
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// ---------------------------------------------------------------------------
// Full-rank lattice (1/den) * columns{(a,b),(0,c)} in Q^2, canonical form.

struct Lat2 {
    Integer a, b, c, den;

    bool operator==(const Lat2& o) const {
        return a == o.a && b == o.b && c == o.c && den == o.den;
    }
};

// column HNF of a full-rank generating set
inline Lat2 hnf_columns(std::vector<std::array<Integer, 2>> cols, Integer den) {
    std::vector<std::array<Integer, 2>> nz;
    for (auto& col : cols)
        if (col[0] != 0 || col[1] != 0) nz.push_back(col);
    // Euclid on the top row until one column keeps a nonzero x
    while (true) {
        int ia = -1, ib = -1;
        for (int i = 0; i < static_cast<int>(nz.size()); ++i) {
            if (nz[static_cast<size_t>(i)][0] == 0) continue;
            if (ia < 0)
                ia = i;
            else {
                ib = i;
                break;
            }
        }
        if (ib < 0) break;
        auto& u = nz[static_cast<size_t>(ia)];
        auto& v = nz[static_cast<size_t>(ib)];
        if (abs(u[0]) < abs(v[0])) std::swap(u, v);
        Integer q = u[0] / v[0]; // truncated division is fine for Euclid
        u[0] -= q * v[0];
        u[1] -= q * v[1];
    }
    Lat2 L;
    L.a = 0;
    L.c = 0;
    Integer b0 = 0;
    for (auto& col : nz) {
        if (col[0] != 0) {
            L.a = abs(col[0]);
            b0 = col[0] > 0 ? col[1] : -col[1];
        } else {
            L.c = gcd(L.c, col[1]);
        }
    }
    L.c = abs(L.c);
    if (L.c != 0) {
        b0 %= L.c;
        if (b0 < 0) b0 += L.c;
    }
    L.b = b0;
    L.den = abs(den);
    Integer g = gcd(gcd(L.a, L.b), gcd(L.c, L.den));
    if (g > 1) {
        L.a /= g;
        L.b /= g;
        L.c /= g;
        L.den /= g;
    }
    return L;
}

// L + M*L for M = (1/mden)*Mi
inline Lat2 lattice_join(const Lat2& L, const std::array<std::array<Integer, 2>, 2>& Mi,
                         const Integer& mden) {
    std::array<Integer, 2> c1{L.a, L.b}, c2{Integer(0), L.c};
    std::vector<std::array<Integer, 2>> cols;
    cols.push_back({mden * c1[0], mden * c1[1]});
    cols.push_back({mden * c2[0], mden * c2[1]});
    for (const auto& c : {c1, c2})
        cols.push_back({Mi[0][0] * c[0] + Mi[0][1] * c[1], Mi[1][0] * c[0] + Mi[1][1] * c[1]});
    return hnf_columns(std::move(cols), L.den * mden);
}

/// Whether the chain Z^2, Z^2 + M Z^2, ... stabilizes within `steps`
/// joins.  For det-1 matrices stabilization is equivalent to fixing a
/// lattice, hence to boundedness over every Q_p at once (entries of M
/// are assumed ell-integral away from the primes of interest).
inline bool lattice_orbit_stabilizes(const QMatrix& m, int steps = 40) {
    Integer mden(1);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) mden = lcm(mden, Integer(m.at(i, j).get_den()));
    std::array<std::array<Integer, 2>, 2> Mi;
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) {
            Rational e = m.at(i, j) * Rational(mden);
            Mi[static_cast<size_t>(i)][static_cast<size_t>(j)] = Integer(e.get_num());
        }
    Lat2 L{Integer(1), Integer(0), Integer(1), Integer(1)};
    for (int k = 0; k < steps; ++k) {
        Lat2 next = lattice_join(L, Mi, mden);
        if (next == L) return true;
        L = next;
    }
    return false;
}

/// Random element of SL(2, Z[1/p]): a short product of elementary and
/// diagonal factors with p-power denominators.
inline QMatrix random_sl2_z1p(Rng& rng, long p) {
    QMatrix m = QMatrix::identity(2);
    long factors = pick(rng, 3, 6);
    for (long f = 0; f < factors; ++f) {
        QMatrix g = QMatrix::identity(2);
        long kind = pick(rng, 0, 2);
        if (kind == 2) {
            long e = pick(rng, -2, 2);
            Rational pe(latcert::int_pow(Integer(p), e < 0 ? -e : e));
            g.at(0, 0) = e >= 0 ? pe : 1 / pe;
            g.at(1, 1) = 1 / g.at(0, 0);
        } else {
            long u = pick(rng, -3, 3);
            long e = pick(rng, -2, 2);
            Rational a = Rational(u) * (e >= 0 ? Rational(latcert::int_pow(Integer(p), e))
                                               : 1 / Rational(latcert::int_pow(Integer(p), -e)));
            if (kind == 0)
                g.at(0, 1) = a;
            else
                g.at(1, 0) = a;
        }
        m = m * g;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Lamplighter Z/2 wr Z with generators {a, t, t^-1}.

/// Word length of (lamps, position): toggles plus the shorter of the two
/// sweep walks visiting every lit lamp and ending at the machine position.
inline int lamplighter_length(int lamp_lo, int lamp_hi, int lamp_count, int s) {
    int l = s < 0 ? s : 0, h = s > 0 ? s : 0;
    if (lamp_count > 0) {
        if (lamp_lo < l) l = lamp_lo;
        if (lamp_hi > h) h = lamp_hi;
    }
    int left_first = -l + (h - l) + (h - s);
    int right_first = h + (h - l) + (s - l);
    return lamp_count + (left_first < right_first ? left_first : right_first);
}

/// |B(0)|..|B(radius)| by direct enumeration over all lamp subsets of
/// [-radius, radius] and machine positions.  radius <= 12.
inline std::vector<unsigned long long> lamplighter_ball_oracle(int radius) {
    std::vector<unsigned long long> sphere(static_cast<size_t>(radius) + 1, 0);
    int span = 2 * radius + 1;
    for (uint32_t mask = 0; mask < (1u << span); ++mask) {
        int count = __builtin_popcount(mask);
        if (count > radius) continue;
        int lo = 0, hi = 0;
        if (mask) {
            lo = __builtin_ctz(mask) - radius;
            hi = 31 - __builtin_clz(mask) - radius;
        }
        for (int s = -radius; s <= radius; ++s) {
            int len = lamplighter_length(lo, hi, count, s);
            if (len <= radius) ++sphere[static_cast<size_t>(len)];
        }
    }
    std::vector<unsigned long long> balls(sphere.size());
    unsigned long long acc = 0;
    for (size_t r = 0; r < sphere.size(); ++r) {
        acc += sphere[r];
        balls[r] = acc;
    }
    return balls;
}

// ---------------------------------------------------------------------------

/// Random element of Lambda_d(q): a short product of shift generators and
/// small ring elements.
inline latcert::LambdaElement random_lambda(Rng& rng, long d, long q) {
    latcert::LambdaElement a = latcert::lambda_identity(d, q);
    long factors = pick(rng, 2, 6);
    for (long f = 0; f < factors; ++f) {
        latcert::LambdaElement g = latcert::lambda_identity(d, q);
        if (pick(rng, 0, 1) == 0) {
            long i = pick(rng, 0, d - 2);
            g = latcert::lambda_shift_generator(d, q, i);
            if (pick(rng, 0, 1) == 0) g = latcert::lambda_inv(g);
        } else {
            std::vector<uint8_t> digs;
            long deg = pick(rng, 0, 2);
            for (long k = 0; k <= deg; ++k)
                digs.push_back(static_cast<uint8_t>(pick(rng, 0, q - 1)));
            latcert::FpPoly poly{q, std::move(digs)};
            poly.trim();
            g = latcert::lambda_ring_element(d, q, std::move(poly));
        }
        a = latcert::lambda_mul(a, g);
    }
    return a;
}

} // namespace oracles
