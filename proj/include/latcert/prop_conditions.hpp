#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latcert/certificate.hpp"

namespace latcert {

/// Digit-truncated verification of the lattice-family conditions behind
/// the local-field model of DL_d(q): H = K^d x| Diag_d(R) over
/// K = F_q((s)), with L_i = {x : x_i integral} and scaling generators
/// t_i = diag(..., s^-1 at i, ..., s at d).
///
/// Four conditions, each checked exactly on the truncation window:
///   index:        [t_i L_i t_i^-1 : L_i] = q for every i (digit coset
///                 count), and the mirrored index for L_d equals q too;
///   exhaustion:   every window element lands in t_i^n L_i t_i^-n for
///                 some n <= window, minimal n = max(0, -v(x_i));
///   intersection: membership in all L_j is exactly "no digit below
///                 level 0 in any coordinate" (the compact core);
///   double_coset: random (v, delta) in H split exactly as
///                 (v_l e_l, 1) * (v - v_l e_l, delta) with the left
///                 factor in the complementary intersection and the
///                 right factor in L_l, for every l.
struct Prop54Report {
    long d = 2;
    long q = 2;
    int window = 12;
    std::uint64_t seed = 0;
    long samples = 0;

    std::vector<long> indices; // 2(d-1) computed indices, all should equal q
    bool index_pass = false;
    bool exhaustion_pass = false;
    bool intersection_pass = false;
    bool double_coset_pass = false;

    bool all_pass() const {
        return index_pass && exhaustion_pass && intersection_pass && double_coset_pass;
    }
    Json to_json() const;
};

Prop54Report check_prop54_conditions(long d, long q, int window, long samples = 40,
                                     std::uint64_t seed = 20240614);

} // namespace latcert
