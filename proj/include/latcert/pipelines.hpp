#pragma once

#include <string>
#include <vector>

#include "latcert/certificate.hpp"
#include "latcert/group_descriptor.hpp"
#include "latcert/rank.hpp"
#include "latcert/ratpoly.hpp"

namespace latcert {

/// Primes p <= bound sorted by splitting behaviour of f over Q_p.
struct SplitPrimesResult {
    long bound = 0;
    std::vector<long> primes;   // f splits into distinct linear factors
    std::vector<long> ramified; // disc vanishes mod p
    long primes_checked = 0;
    Rational density; // |split| / primes_checked

    Json to_json() const;
};

/// Requires f monic with integer coefficients, squarefree; degree <= 3
/// additionally gets a rational-root irreducibility check.
SplitPrimesResult splitting_prime_set(const RatPoly& f, long bound);

/// A certificate together with the group and envelope it describes.
struct ConstructionResult {
    Certificate cert;
    GroupDescriptor group;
    EnvelopeDescriptor envelope;
    bool has_partner = false;
    GroupDescriptor partner; // the wreath-product side of shared-envelope runs
};

/// Checklist for "A x|_M Z is a cocompact lattice in
/// Isom(R^2) x Isom(DL_2(n))": determinant one, infinite order,
/// R-boundedness, trace denominator n >= 2, the prime set where M is
/// Q_p-unbounded, the generated module A = Z[1/n]^2, and the +-v_p(n)
/// eigenvalue valuations at each such prime.
ConstructionResult certify_sl2_envelope(const QMatrix& m, int precision = 10,
                                        long power_bound = 10);

/// Same hypotheses for companion(t^2 - t/n + 1) plus the partner group
/// Z^2 x (Z/n wr Z); the DL side is cross-checked by a lamplighter orbit
/// run when n is prime and by the eigen-lattice index product (= n) when
/// n is composite.
ConstructionResult certify_shared_envelope(long n, int precision = 10);

/// Checklist for "Z[1/pi]^d x| Z^r with r = (k+1)(d-1)": d distinct real
/// roots, every p in pi splits, candidates are centralizer units with
/// denominator support in pi, and the two multiplicative-rank targets
/// (d-1 for the Z-units, (k+1)(d-1) for the full set).  Rank items that
/// cannot be attempted for lack of candidates are skipped with a deficit
/// note (overall Partial).  IntervalTooWide from the rank backend is
/// rethrown as RankUnresolved.
ConstructionResult certify_unit_lattice(const QMatrix& m, const std::vector<long>& primes,
                                        const std::vector<CentralizerElement>& candidates,
                                        const Rational& real_width = Rational(1, 1000),
                                        int precision = 10);

/// The nine recorded checks of the worked 3x3 construction at p = 13
/// (irreducibility, root interlacing, the I - M companion identity,
/// Z-unit rank 2, splitting primes {13, 29, 41}, unit determinants,
/// kernel and image valuation vectors, total rank 4).  `f_override`
/// recomputes every check against a different cubic; expected values
/// stay pinned, so deviations fail.  Precision/interval errors propagate;
/// all other per-item errors mark the item Failed.
Certificate example_certificate(int precision = 10, const RatPoly* f_override = nullptr);

/// Word-ball growth of two descriptors side by side, with descriptive
/// slope/monotonicity/superpolynomial flags (no metric claim).
struct GrowthComparison {
    long radius = 0;
    std::vector<unsigned long long> ball_a, ball_b;

    Json report = Json::object();
    std::string to_csv() const; // radius,ball_a,sphere_a,ball_b,sphere_b
};

GrowthComparison growth_compare(const GroupDescriptor& a, const GroupDescriptor& b, long radius,
                                std::size_t cap = 5000000);

} // namespace latcert
