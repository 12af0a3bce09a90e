#include "latcert/sturm.hpp"

#include <algorithm>

namespace latcert {

namespace {

// f, f', then negated remainders until constant
std::vector<RatPoly> sturm_chain(const RatPoly& f) {
    std::vector<RatPoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly rem = a.divrem(b).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

long variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
    long v = 0;
    int last = 0;
    for (const auto& g : chain) {
        int s = sgn(g.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

void require_squarefree(const RatPoly& f) {
    if (f.degree() < 1) fail(errc::degree_too_low, "constant polynomial");
    if (!is_squarefree(f)) fail(errc::not_squarefree, "repeated roots");
}

// Exactly one root per emitted interval; roots hit by a bisection point
// get a shrunken interval centred on them.
void isolate(const RatPoly& f, const std::vector<RatPoly>& chain, const Rational& a,
             const Rational& b, long count, std::vector<IsolatingInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({a, b});
        return;
    }
    Rational m = (a + b) / 2;
    if (sgn(f.eval(m)) == 0) {
        // rational root exactly at the midpoint: carve out a private interval
        Rational delta = (b - a) / 4;
        while (sgn(f.eval(m - delta)) == 0 || sgn(f.eval(m + delta)) == 0 ||
               variations_at(chain, m - delta) - variations_at(chain, m + delta) != 1)
            delta /= 2;
        long left = variations_at(chain, a) - variations_at(chain, m - delta);
        long right = variations_at(chain, m + delta) - variations_at(chain, b);
        isolate(f, chain, a, m - delta, left, out);
        out.push_back({m - delta, m + delta});
        isolate(f, chain, m + delta, b, right, out);
        return;
    }
    long left = variations_at(chain, a) - variations_at(chain, m);
    isolate(f, chain, a, m, left, out);
    isolate(f, chain, m, b, count - left, out);
}

} // namespace

Rational cauchy_bound(const RatPoly& f) {
    if (f.is_zero() || f.degree() < 1) fail(errc::degree_too_low, "need degree >= 1");
    Rational lead = f.leading();
    Rational m(0);
    for (long i = 0; i < f.degree(); ++i) {
        Rational c = abs(f[static_cast<size_t>(i)] / lead);
        if (c > m) m = c;
    }
    return m + 1;
}

long count_real_roots_between(const RatPoly& f, const Rational& a, const Rational& b) {
    require_squarefree(f);
    if (!(a < b)) fail(errc::invalid_argument, "empty interval");
    if (f.eval(a) == 0 || f.eval(b) == 0)
        fail(errc::invalid_argument, "endpoint is a root");
    auto chain = sturm_chain(f);
    return variations_at(chain, a) - variations_at(chain, b);
}

std::pair<long, std::vector<IsolatingInterval>> sturm_real_roots(const RatPoly& f) {
    require_squarefree(f);
    Rational B = cauchy_bound(f);
    auto chain = sturm_chain(f);
    long count = variations_at(chain, -B) - variations_at(chain, B);
    std::vector<IsolatingInterval> out;
    isolate(f, chain, -B, B, count, out);
    return {count, out};
}

IsolatingInterval refine_to_width(const RatPoly& f, IsolatingInterval iv, const Rational& width) {
    if (width <= 0) fail(errc::invalid_argument, "width must be positive");
    int slo = 0;
    // single simple root inside: the signs at the ends differ
    while (iv.high - iv.low >= width) {
        if (slo == 0) slo = f.eval(iv.low) > 0 ? 1 : -1;
        Rational m = iv.midpoint();
        Rational fm = f.eval(m);
        if (fm == 0) {
            Rational d = std::min(std::min(Rational(m - iv.low), Rational(iv.high - m)),
                                  Rational(width / 2)) /
                         2;
            return {m - d, m + d};
        }
        if ((fm > 0 ? 1 : -1) == slo)
            iv.low = m;
        else
            iv.high = m;
    }
    return iv;
}

} // namespace latcert
