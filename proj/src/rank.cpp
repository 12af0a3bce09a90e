#include "latcert/rank.hpp"

#include <algorithm>

namespace latcert {

namespace {

// interval Horner for (sum a_j x^j)/m
QInterval eval_interval(const std::vector<Integer>& a, const Integer& m, const QInterval& x) {
    QInterval acc = QInterval::point(Rational(0));
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + QInterval::point(Rational(a[i]));
    return acc * QInterval::point(Rational(Integer(1), m));
}

long exact_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    long r = 0;
    size_t cols = rows[0].size();
    for (size_t c = 0; c < cols && r < static_cast<long>(rows.size()); ++c) {
        long piv = -1;
        for (long i = r; i < static_cast<long>(rows.size()); ++i)
            if (rows[static_cast<size_t>(i)][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(r)]);
        for (long i = r + 1; i < static_cast<long>(rows.size()); ++i) {
            if (rows[static_cast<size_t>(i)][c] == 0) continue;
            Rational f = rows[static_cast<size_t>(i)][c] / rows[static_cast<size_t>(r)][c];
            for (size_t j = c; j < cols; ++j)
                rows[static_cast<size_t>(i)][j] -= f * rows[static_cast<size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

} // namespace

std::pair<long, RankCertificate> multiplicative_rank(const std::vector<CentralizerElement>& gens,
                                                     const std::vector<long>& primes,
                                                     const Rational& real_width, int padic_prec,
                                                     int max_refinements) {
    if (gens.empty()) {
        RankCertificate cert;
        cert.full_row_rank = true;
        return {0, cert};
    }
    for (const auto& g : gens) {
        if (!g.unit_checked) fail(errc::invalid_argument, "generators must be verified units");
        if (!(g.base == gens[0].base))
            fail(errc::invalid_argument, "generators must share the base matrix");
    }
    const QMatrix& m = gens[0].base;
    RatPoly f = char_poly(m);
    long nrows = static_cast<long>(gens.size());

    // exact p-adic block, fixed once
    std::vector<std::vector<Rational>> exact_rows(static_cast<size_t>(nrows));
    for (long r = 0; r < nrows; ++r)
        for (long p : primes) {
            ValuationVector v = valuation_vector(gens[static_cast<size_t>(r)], p, padic_prec);
            for (long e : v.entries) exact_rows[static_cast<size_t>(r)].emplace_back(e);
        }
    long exact_cols = exact_rows[0].empty() ? 0 : static_cast<long>(exact_rows[0].size());
    long exact_block_rank = exact_rank(exact_rows);

    auto [nreal, intervals] = sturm_real_roots(f);

    Rational width = real_width;
    for (int round = 0; round <= max_refinements; ++round, width /= 16) {
        // archimedean block at the current width
        std::vector<IsolatingInterval> refined;
        refined.reserve(intervals.size());
        for (const auto& iv : intervals) refined.push_back(refine_to_width(f, iv, width));

        std::vector<std::vector<QInterval>> rows(static_cast<size_t>(nrows));
        bool widths_ok = true;
        for (long r = 0; r < nrows && widths_ok; ++r) {
            auto& row = rows[static_cast<size_t>(r)];
            for (const auto& x : exact_rows[static_cast<size_t>(r)]) row.push_back(QInterval::point(x));
            for (const auto& iv : refined) {
                QInterval lam = eval_interval(gens[static_cast<size_t>(r)].coeffs,
                                              gens[static_cast<size_t>(r)].denom,
                                              QInterval(iv.low, iv.high));
                if (lam.contains_zero()) {
                    widths_ok = false; // unit eigenvalue can't be 0: refine
                    break;
                }
                row.push_back(log_enclosure(lam.abs(), width));
            }
        }
        if (!widths_ok) continue;

        long cols = exact_cols + nreal;
        std::vector<bool> done(static_cast<size_t>(nrows), false);
        std::vector<std::pair<long, long>> pivots;
        for (long c = 0; c < cols && static_cast<long>(pivots.size()) < nrows; ++c) {
            long piv = -1;
            for (long r = 0; r < nrows; ++r)
                if (!done[static_cast<size_t>(r)] && !rows[static_cast<size_t>(r)][static_cast<size_t>(c)].contains_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue; // cannot certify a pivot here; skip column
            done[static_cast<size_t>(piv)] = true;
            pivots.emplace_back(piv, c);
            const auto& prow = rows[static_cast<size_t>(piv)];
            for (long r = 0; r < nrows; ++r) {
                if (done[static_cast<size_t>(r)]) continue;
                auto& row = rows[static_cast<size_t>(r)];
                QInterval factor = row[static_cast<size_t>(c)] / prow[static_cast<size_t>(c)];
                for (long j = c; j < cols; ++j)
                    row[static_cast<size_t>(j)] = row[static_cast<size_t>(j)] - factor * prow[static_cast<size_t>(j)];
            }
        }
        if (static_cast<long>(pivots.size()) == nrows) {
            RankCertificate cert;
            cert.rows = nrows;
            cert.exact_cols = exact_cols;
            cert.interval_cols = nreal;
            cert.exact_block_rank = exact_block_rank;
            cert.rank = nrows;
            cert.full_row_rank = true;
            cert.pivots = std::move(pivots);
            cert.interval_width = to_string(width);
            cert.padic_primes = primes;
            return {nrows, cert};
        }
    }
    fail(errc::interval_too_wide,
         "could not certify independence of all generators within the refinement budget");
}

} // namespace latcert
