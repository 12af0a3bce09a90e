#pragma once

#include "latcert/dl_graph.hpp"
#include "latcert/laurent.hpp"
#include "latcert/padic.hpp"

namespace latcert {

/// Ball center of a tree vertex as a field element, at the precision of
/// the exemplar (p-adic) or exactly (Laurent polynomial).
inline PadicApprox vertex_center(const TreeVertex& v, const PadicApprox& like) {
    Rational c(0);
    for (const auto& [pos, dig] : v.digits) {
        Rational term(dig);
        Integer pw = int_pow(Integer(like.prime()), pos < 0 ? -pos : pos);
        if (pos < 0)
            c += term / Rational(pw);
        else
            c += term * Rational(pw);
    }
    int prec = like.is_zero_at_precision() ? 8 : like.precision();
    return PadicApprox::from_rational(c, like.prime(), prec + 4);
}

inline LaurentApprox vertex_center(const TreeVertex& v, const LaurentApprox& like) {
    if (v.digits.empty()) return LaurentApprox::exact_zero(like.prime());
    long lo = v.digits.begin()->first;
    long hi = v.digits.rbegin()->first;
    std::vector<uint8_t> dig(static_cast<size_t>(hi - lo + 1), 0);
    for (const auto& [pos, d] : v.digits) dig[static_cast<size_t>(pos - lo)] = static_cast<uint8_t>(d);
    return LaurentApprox::exact_poly(like.prime(), lo, std::move(dig));
}

inline PadicApprox field_inverse(const PadicApprox& x, int) { return x.inverse(); }
inline LaurentApprox field_inverse(const LaurentApprox& x, int prec) { return x.inverse(prec); }

/// Coordinate-wise affine map x -> scale*x + shift on K^d with
/// sum of scale valuations zero: the isometry type acting on DL_d(q).
template <class F>
struct AffineMapT {
    std::vector<std::pair<F, F>> coords; // (scale, shift)

    long dim() const { return static_cast<long>(coords.size()); }

    void check() const {
        long sum = 0;
        for (const auto& [s, u] : coords) sum += s.valuation();
        if (sum != 0) fail(errc::invalid_argument, "scale valuations must sum to zero");
    }

    /// this after o: x -> this(o(x)).
    AffineMapT compose(const AffineMapT& o) const {
        if (dim() != o.dim()) fail(errc::invalid_argument, "dimension mismatch");
        AffineMapT r;
        for (long i = 0; i < dim(); ++i) {
            const auto& [s1, u1] = coords[static_cast<size_t>(i)];
            const auto& [s2, u2] = o.coords[static_cast<size_t>(i)];
            r.coords.emplace_back(s1 * s2, s1 * u2 + u1);
        }
        return r;
    }

    AffineMapT inverse(int prec_hint = -1) const {
        AffineMapT r;
        for (const auto& [s, u] : coords) {
            F si = field_inverse(s, prec_hint);
            r.coords.emplace_back(si, -(si * u));
        }
        return r;
    }
};

using PadicAffineMap = AffineMapT<PadicApprox>;
using LaurentAffineMap = AffineMapT<LaurentApprox>;

inline PadicAffineMap padic_affine_identity(long p, long d, int prec) {
    PadicAffineMap g;
    for (long i = 0; i < d; ++i)
        g.coords.emplace_back(PadicApprox::from_rational(Rational(1), p, prec),
                              PadicApprox::zero(p, prec));
    return g;
}

inline LaurentAffineMap laurent_affine_identity(long q, long d) {
    LaurentAffineMap g;
    for (long i = 0; i < d; ++i)
        g.coords.emplace_back(LaurentApprox::one(q), LaurentApprox::exact_zero(q));
    return g;
}

/// Image of a DL vertex: per coordinate the ball c + pi^k R maps to
/// (s*c + u) + pi^(k + v(s)) R. Errors with InsufficientPrecision when
/// the digit window of s*c + u does not reach the image level.
template <class F>
DLVertex affine_act(const AffineMapT<F>& g, const DLVertex& v) {
    if (g.dim() != static_cast<long>(v.coords.size()))
        fail(errc::invalid_argument, "dimension mismatch");
    g.check();
    dl_check(v);
    DLVertex out;
    for (long i = 0; i < g.dim(); ++i) {
        const auto& [s, u] = g.coords[static_cast<size_t>(i)];
        const TreeVertex& tv = v.coords[static_cast<size_t>(i)];
        if (static_cast<long>(tv.branching) != s.prime())
            fail(errc::invalid_argument, "branching must match the residue field size");
        long klevel = tv.level + s.valuation();
        F c = vertex_center(tv, s);
        F img = s * c + u;
        if (img.known_end() < klevel)
            fail(errc::insufficient_precision, "image center digits do not reach the image level");
        TreeVertex w;
        w.branching = tv.branching;
        w.level = klevel;
        if (!img.is_zero_at_precision()) {
            for (long pos = img.valuation(); pos < klevel; ++pos) {
                int d = img.digit_at(pos);
                if (d != 0) w.digits[pos] = d;
            }
        }
        out.coords.push_back(std::move(w));
    }
    dl_check(out);
    return out;
}

struct OrbitBall {
    std::set<DLVertex> vertices;
    std::vector<long> sphere_sizes;
};

/// Words of length <= radius in the given maps applied to the base
/// vertex (include inverses in `gens` for symmetric balls).
template <class F>
OrbitBall orbit_bfs(const std::vector<AffineMapT<F>>& gens, const DLVertex& base, long radius,
                    size_t cap = 5000000) {
    dl_check(base);
    OrbitBall ball;
    ball.vertices.insert(base);
    ball.sphere_sizes.push_back(1);
    std::vector<DLVertex> frontier{base};
    for (long r = 1; r <= radius; ++r) {
        std::vector<DLVertex> next;
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                DLVertex w = affine_act(g, v);
                if (ball.vertices.count(w)) continue;
                if (ball.vertices.size() >= cap)
                    fail(errc::memory_budget_exceeded, "orbit BFS exceeds the vertex budget");
                ball.vertices.insert(w);
                next.push_back(std::move(w));
            }
        ball.sphere_sizes.push_back(static_cast<long>(next.size()));
        frontier = std::move(next);
    }
    return ball;
}

} // namespace latcert
