#pragma once

#include <string>
#include <vector>

#include "latcert/centralizer.hpp"
#include "latcert/interval.hpp"
#include "latcert/sturm.hpp"

namespace latcert {

/// How a multiplicative rank was certified: which pivots were used and
/// how tight the archimedean intervals had to be.
struct RankCertificate {
    long rows = 0;
    long exact_cols = 0;    // p-adic valuation columns
    long interval_cols = 0; // log|lambda| columns over the real roots
    long exact_block_rank = 0;
    long rank = 0;
    bool full_row_rank = false;
    std::vector<std::pair<long, long>> pivots; // (row, column)
    std::string interval_width;                // final width used
    std::vector<long> padic_primes;
};

/// Rank of the unit subgroup generated by `gens` inside the product of
/// p-adic valuation maps and archimedean log maps: row for g is
/// [v_p(lambda_i(g)) for p in primes] ++ [log|lambda_i(g)| intervals].
/// All generators must share the base matrix and be verified units.
/// Certifies rank = #rows (multiplicative independence); refines the
/// interval block up to `max_refinements` rounds and errors with
/// IntervalTooWide if a pivot still cannot be resolved.
std::pair<long, RankCertificate> multiplicative_rank(const std::vector<CentralizerElement>& gens,
                                                     const std::vector<long>& primes,
                                                     const Rational& real_width,
                                                     int padic_prec = 10,
                                                     int max_refinements = 6);

} // namespace latcert
