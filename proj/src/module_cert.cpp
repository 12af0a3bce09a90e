#include "latcert/module_cert.hpp"

#include <algorithm>
#include <cstdlib>

namespace latcert {

namespace {

bool denominator_supported(const Rational& x, const Integer& n) {
    Integer den = denominator(x);
    if (den == 1) return true;
    if (n == 1) return false;
    // strip every prime of n from den
    Integer d = den, m = n;
    while (true) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
        if (g == 1) break;
        while (d % g == 0) d /= g;
    }
    return d == 1;
}

void require_ring_entries(const QMatrix& m, const Integer& n) {
    QMatrix inv = m.inverse();
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < m.dim(); ++j)
            if (!denominator_supported(m.at(i, j), n) || !denominator_supported(inv.at(i, j), n))
                fail(errc::entries_outside_ring,
                     "matrix entries leave Z[1/n]: denominator has a prime outside n");
}

struct Column {
    long power;
    long basis;
};

// column echelon form with unimodular tracking; returns pivot (row, col)
// pairs in row order
std::vector<std::pair<long, long>> echelonize(std::vector<std::vector<Integer>>& h,
                                              std::vector<std::vector<Integer>>& u) {
    long rows = static_cast<long>(h.size());
    long cols = rows ? static_cast<long>(h[0].size()) : 0;
    auto col_sub = [&](long dst, long src, const Integer& q) {
        for (long r = 0; r < rows; ++r) h[static_cast<size_t>(r)][static_cast<size_t>(dst)] -= q * h[static_cast<size_t>(r)][static_cast<size_t>(src)];
        for (size_t r = 0; r < u.size(); ++r) u[r][static_cast<size_t>(dst)] -= q * u[r][static_cast<size_t>(src)];
    };
    auto col_swap = [&](long a, long b) {
        if (a == b) return;
        for (long r = 0; r < rows; ++r) std::swap(h[static_cast<size_t>(r)][static_cast<size_t>(a)], h[static_cast<size_t>(r)][static_cast<size_t>(b)]);
        for (size_t r = 0; r < u.size(); ++r) std::swap(u[r][static_cast<size_t>(a)], u[r][static_cast<size_t>(b)]);
    };
    std::vector<std::pair<long, long>> pivots;
    long pc = 0;
    for (long r = 0; r < rows && pc < cols; ++r) {
        while (true) {
            long cmin = -1;
            for (long c = pc; c < cols; ++c) {
                const Integer& val = h[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (val == 0) continue;
                if (cmin < 0 || abs(val) < abs(h[static_cast<size_t>(r)][static_cast<size_t>(cmin)])) cmin = c;
            }
            if (cmin < 0) break; // row has no pivot
            bool others = false;
            for (long c = pc; c < cols; ++c) {
                if (c == cmin || h[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) continue;
                Integer q = h[static_cast<size_t>(r)][static_cast<size_t>(c)] / h[static_cast<size_t>(r)][static_cast<size_t>(cmin)];
                col_sub(c, cmin, q);
                if (h[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) others = true;
            }
            if (!others) {
                col_swap(cmin, pc);
                pivots.emplace_back(r, pc);
                ++pc;
                break;
            }
        }
    }
    return pivots;
}

} // namespace

ModuleCertificate generated_module(const QMatrix& m, const Integer& n, long max_power) {
    if (n < 1) fail(errc::invalid_argument, "n must be >= 1");
    long d = m.dim();
    if (d < 1) fail(errc::invalid_argument, "empty matrix");
    require_ring_entries(m, n);

    ModuleCertificate cert;
    cert.target = "Z[1/" + n.get_str() + "]^" + std::to_string(d);
    if (n == 1) {
        cert.target = "Z^" + std::to_string(d);
        cert.proved = true;
        cert.trivial = true;
        return cert;
    }

    for (long J = 1; J <= max_power; ++J) {
        // columns M^j e_b scaled by n^J, targets (n^J / n) e_i
        std::vector<Column> layout;
        std::vector<std::vector<Integer>> h(static_cast<size_t>(d));
        Integer scale = 1;
        for (long j = 0; j < J; ++j) scale *= n;
        QMatrix power = m.pow(-J);
        std::vector<QMatrix> powers;
        for (long j = -J; j <= J; ++j) {
            powers.push_back(power);
            power = power * m;
        }
        for (long jj = 0; jj < static_cast<long>(powers.size()); ++jj)
            for (long b = 0; b < d; ++b) {
                layout.push_back({jj - J, b});
                for (long r = 0; r < d; ++r) {
                    Rational scaled = powers[static_cast<size_t>(jj)].at(r, b) * Rational(scale);
                    if (!is_integer(scaled)) fail(errc::entries_outside_ring, "power escapes Z[1/n]");
                    h[static_cast<size_t>(r)].push_back(numerator(scaled));
                }
            }
        size_t K = layout.size();
        std::vector<std::vector<Integer>> u(K, std::vector<Integer>(K, Integer(0)));
        for (size_t i = 0; i < K; ++i) u[i][i] = 1;
        auto pivots = echelonize(h, u);

        bool all = true;
        std::vector<ModuleWitness> wits;
        for (long i = 0; i < d && all; ++i) {
            std::vector<Integer> t(static_cast<size_t>(d), Integer(0));
            t[static_cast<size_t>(i)] = scale / n;
            std::vector<Integer> x(K, Integer(0));
            for (auto [r, c] : pivots) {
                const Integer& piv = h[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (t[static_cast<size_t>(r)] % piv != 0) {
                    all = false;
                    break;
                }
                Integer q = t[static_cast<size_t>(r)] / piv;
                x[static_cast<size_t>(c)] = q;
                for (long r2 = 0; r2 < d; ++r2) t[static_cast<size_t>(r2)] -= q * h[static_cast<size_t>(r2)][static_cast<size_t>(c)];
            }
            for (const auto& v : t)
                if (v != 0) all = false;
            if (!all) break;
            ModuleWitness w;
            w.target_index = i;
            for (size_t l = 0; l < K; ++l) {
                Integer coeff(0);
                for (size_t c = 0; c < K; ++c)
                    if (x[c] != 0) coeff += u[l][c] * x[c];
                if (coeff != 0) w.terms.push_back({layout[l].power, layout[l].basis, coeff});
            }
            wits.push_back(std::move(w));
        }
        if (all) {
            cert.proved = true;
            cert.power_bound = J;
            cert.witnesses = std::move(wits);
            if (!reverify_module_certificate(m, n, cert))
                fail(errc::invalid_argument, "internal: witness failed replay");
            return cert;
        }
    }
    cert.proved = false;
    cert.power_bound = max_power;
    return cert;
}

bool reverify_module_certificate(const QMatrix& m, const Integer& n, const ModuleCertificate& c) {
    if (c.trivial) return c.proved;
    if (!c.proved) return false;
    long d = m.dim();
    for (const auto& w : c.witnesses) {
        std::vector<Rational> acc(static_cast<size_t>(d), Rational(0));
        for (const auto& term : w.terms) {
            QMatrix pw = m.pow(term.power);
            for (long r = 0; r < d; ++r)
                acc[static_cast<size_t>(r)] += Rational(term.coeff) * pw.at(r, term.basis);
        }
        for (long r = 0; r < d; ++r) {
            Rational want = (r == w.target_index) ? Rational(Integer(1), n) : Rational(0);
            if (acc[static_cast<size_t>(r)] != want) return false;
        }
    }
    return true;
}

} // namespace latcert
