#pragma once

#include <string>
#include <vector>

#include "latcert/qmatrix.hpp"

namespace latcert {

/// One recorded inclusion witness: e_i/n expressed as an integer
/// combination of vectors M^j e_b.
struct ModuleWitness {
    long target_index = 0; // i of e_i/n
    struct Term {
        long power = 0;  // j
        long basis = 0;  // b
        Integer coeff;
    };
    std::vector<Term> terms;
};

struct ModuleCertificate {
    std::string target;       // e.g. "Z[1/2]^2"
    bool proved = false;
    bool trivial = false;     // n = 1: module is Z^d, nothing to witness
    long power_bound = 0;     // largest |j| appearing
    std::vector<ModuleWitness> witnesses;
};

/// Certifies Z[M,M^-1]-span of Z^2 equals Z[1/n]^2 for M in SL(2,Q) with
/// entries of M and M^-1 in Z[1/n]: finds integer combinations of
/// {M^j e_b : |j| <= J} equal to e_i/n (the self-scaling argument then
/// gives the full inclusion), or reports Inconclusive (proved = false).
ModuleCertificate generated_module(const QMatrix& m, const Integer& n, long max_power = 10);

/// Replays every witness with exact matrix arithmetic.
bool reverify_module_certificate(const QMatrix& m, const Integer& n, const ModuleCertificate& c);

} // namespace latcert
