#include "latcert/rational.hpp"

namespace latcert {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(errc::invalid_argument, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

bool is_prime(const Integer& p) {
    if (p < 2) return false;
    // exact for everything we enumerate (BPSW core + Miller-Rabin rounds)
    return mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

long vp_int(const Integer& n, const Integer& p) {
    if (n == 0) fail(errc::zero_valuation, "vp of zero integer");
    mpz_class reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long vp(const Rational& x, const Integer& p) {
    if (!is_prime(p)) fail(errc::invalid_argument, "vp with non-prime base " + p.get_str());
    if (x == 0) fail(errc::zero_valuation, "vp(0) is +infinity");
    return vp_int(numerator(x), p) - vp_int(denominator(x), p);
}

Rational padic_abs(const Rational& x, const Integer& p) {
    if (x == 0) return Rational(0);
    long v = vp(x, p);
    Integer pow;
    mpz_pow_ui(pow.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
    return v >= 0 ? make_rational(Integer(1), pow) : Rational(pow);
}

std::vector<std::pair<Integer, long>> factorize(Integer n) {
    std::vector<std::pair<Integer, long>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (Integer d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            long e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

std::string to_string(const Rational& x) { return x.get_str(); }

} // namespace latcert
