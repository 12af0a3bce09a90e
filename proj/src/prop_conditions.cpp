#include "latcert/prop_conditions.hpp"

#include <random>

#include "latcert/errors.hpp"
#include "latcert/laurent.hpp"
#include "latcert/rational.hpp"

namespace latcert {

namespace {

using Vec = std::vector<LaurentApprox>;

bool integral(const LaurentApprox& x) {
    return x.is_zero_at_precision() || x.valuation() >= 0;
}

long neg_val(const LaurentApprox& x) { // max(0, -v(x)), with v(0) = +inf
    if (x.is_zero_at_precision()) return 0;
    long v = x.valuation();
    return v >= 0 ? 0 : -v;
}

LaurentApprox random_window(std::mt19937_64& rng, long q, long lo, long hi) {
    std::vector<uint8_t> dig(static_cast<size_t>(hi - lo));
    std::uniform_int_distribution<int> u(0, static_cast<int>(q) - 1);
    for (auto& c : dig) c = static_cast<uint8_t>(u(rng));
    return LaurentApprox::exact_poly(q, lo, std::move(dig));
}

LaurentApprox random_unit(std::mt19937_64& rng, long q, long len) {
    std::vector<uint8_t> dig(static_cast<size_t>(len));
    std::uniform_int_distribution<int> lead(1, static_cast<int>(q) - 1);
    std::uniform_int_distribution<int> u(0, static_cast<int>(q) - 1);
    dig[0] = static_cast<uint8_t>(lead(rng));
    for (size_t i = 1; i < dig.size(); ++i) dig[i] = static_cast<uint8_t>(u(rng));
    return LaurentApprox::exact_poly(q, 0, std::move(dig));
}

// index of the digit-coset quotient s^-1 R / R: enumerate representatives
// c s^-1 and check they are distinct mod R and absorb every sample
long coset_index(std::mt19937_64& rng, long q, int window, long samples) {
    std::vector<LaurentApprox> reps;
    for (long c = 0; c < q; ++c)
        reps.push_back(LaurentApprox::exact_poly(q, -1, {static_cast<uint8_t>(c)}));
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            if (integral(reps[i] - reps[j])) return -1; // collision: not distinct cosets
    for (long s = 0; s < samples; ++s) {
        LaurentApprox x = random_window(rng, q, -1, window);
        long c = x.is_zero_at_precision() || x.valuation() > -1 ? 0 : x.digit_at(-1);
        if (!integral(x - reps[static_cast<size_t>(c)])) return -2; // representative misses
    }
    return static_cast<long>(reps.size());
}

} // namespace

Prop54Report check_prop54_conditions(long d, long q, int window, long samples,
                                     std::uint64_t seed) {
    if (d < 2) fail(errc::invalid_argument, "d must be >= 2");
    if (!is_prime(Integer(q))) fail(errc::invalid_argument, "q must be prime");
    if (window < 2) fail(errc::invalid_argument, "window must be >= 2");
    if (samples < 1) fail(errc::invalid_argument, "need at least one sample");

    Prop54Report rep;
    rep.d = d;
    rep.q = q;
    rep.window = window;
    rep.seed = seed;
    rep.samples = samples;
    std::mt19937_64 rng(seed);

    // (a) index: [t_i L_i t_i^-1 : L_i] at coordinate i for i < d-1, and
    // the mirrored [t_i^-1 L_d t_i : L_d] at coordinate d-1.  Both are a
    // digit coset count at level -1, run independently per generator.
    rep.index_pass = true;
    for (long fam = 0; fam < 2; ++fam)
        for (long i = 0; i + 1 < d; ++i) {
            long idx = coset_index(rng, q, window, samples);
            rep.indices.push_back(idx);
            if (idx != q) rep.index_pass = false;
        }

    // (b) exhaustion: minimal n with x in t_i^n L_i t_i^-n is
    // max(0, -v(x_i)), bounded by the window for window-truncated input;
    // membership must hold at n and fail at n-1.
    rep.exhaustion_pass = true;
    for (long s = 0; s < samples; ++s) {
        Vec x;
        for (long c = 0; c < d; ++c) x.push_back(random_window(rng, q, -window, window));
        for (long coord = 0; coord < d; ++coord) {
            long n = neg_val(x[static_cast<size_t>(coord)]);
            bool at_n = x[static_cast<size_t>(coord)].is_zero_at_precision() ||
                        x[static_cast<size_t>(coord)].valuation() >= -n;
            bool below = n == 0 || x[static_cast<size_t>(coord)].valuation() >= -(n - 1);
            if (n > window || !at_n || (n > 0 && below)) rep.exhaustion_pass = false;
        }
    }

    // (c) intersection of all L_j = elements with no digit below level 0
    // in any coordinate (the compact core R^d x| Diag_d(R)).
    rep.intersection_pass = true;
    for (long s = 0; s < samples; ++s) {
        bool force_core = s % 2 == 0;
        Vec x;
        for (long c = 0; c < d; ++c)
            x.push_back(random_window(rng, q, force_core ? 0 : -window, window));
        bool in_all = true;
        for (long j = 0; j < d; ++j) in_all = in_all && integral(x[static_cast<size_t>(j)]);
        bool digit_scan = true;
        for (long j = 0; j < d; ++j)
            for (long pos = -window; pos < 0; ++pos)
                if (x[static_cast<size_t>(j)].digit_at(pos) != 0) digit_scan = false;
        if (in_all != digit_scan) rep.intersection_pass = false;
        if (force_core && !in_all) rep.intersection_pass = false;
    }

    // (d) double cosets: (v, delta) = (v_l e_l, 1) * (v - v_l e_l, delta)
    // with the left factor in the intersection of the L_j (j != l) and the
    // right factor in L_l; recomposition is digit-exact.  A second
    // recomposition through the unit diagonal exercises window inverses:
    // (v_l e_l, delta) * (delta^-1 (v - v_l e_l), 1).
    rep.double_coset_pass = true;
    long prec = 2L * window + 4;
    for (long s = 0; s < samples; ++s) {
        Vec v;
        for (long c = 0; c < d; ++c) v.push_back(random_window(rng, q, -window, window));
        Vec delta;
        for (long c = 0; c < d; ++c) delta.push_back(random_unit(rng, q, window));
        for (long l = 0; l < d; ++l) {
            Vec a, b;
            for (long c = 0; c < d; ++c) {
                a.push_back(c == l ? v[static_cast<size_t>(c)] : LaurentApprox::exact_zero(q));
                b.push_back(v[static_cast<size_t>(c)] - a[static_cast<size_t>(c)]);
            }
            for (long c = 0; c < d; ++c) {
                if (c != l && !integral(a[static_cast<size_t>(c)])) rep.double_coset_pass = false;
                if (c == l && !integral(b[static_cast<size_t>(c)])) rep.double_coset_pass = false;
                LaurentApprox sum = a[static_cast<size_t>(c)] + b[static_cast<size_t>(c)];
                if (!LaurentApprox::agree_on_overlap(sum, v[static_cast<size_t>(c)]))
                    rep.double_coset_pass = false;
                // window route: delta * (delta^-1 b) must agree with b
                LaurentApprox di = delta[static_cast<size_t>(c)].inverse(prec);
                LaurentApprox back = delta[static_cast<size_t>(c)] * (di * b[static_cast<size_t>(c)]);
                if (!back.is_zero_at_precision() && back.known_end() < window)
                    rep.double_coset_pass = false;
                if (!LaurentApprox::agree_on_overlap(back, b[static_cast<size_t>(c)]))
                    rep.double_coset_pass = false;
            }
        }
    }
    return rep;
}

Json Prop54Report::to_json() const {
    Json j;
    j["d"] = d;
    j["q"] = q;
    j["window"] = window;
    j["seed"] = seed;
    j["samples"] = samples;
    j["indices"] = indices;
    Json cond;
    cond["index"] = index_pass ? "Pass" : "Fail";
    cond["exhaustion"] = exhaustion_pass ? "Pass" : "Fail";
    cond["intersection"] = intersection_pass ? "Pass" : "Fail";
    cond["double_coset"] = double_coset_pass ? "Pass" : "Fail";
    j["conditions"] = std::move(cond);
    j["all_pass"] = all_pass();
    return j;
}

} // namespace latcert
