#pragma once

// Numeric companions to the asymptotic results: convergence tables for
// x_t ~ c t ln t, x_{t+1}/ln N_t -> c, and the supremal index ratio
// 6 e^gamma / pi^2, plus the two exact computer checks used in the
// worst-case analysis.

#include "eigenbound/bounds.hpp"

#include <cstdio>
#include <string>

namespace eigenbound {

struct RatioRow {
    std::uint64_t index;
    double observed;
    double reference;
    double ratio;
};

struct RatioTable {
    std::string label;
    std::vector<RatioRow> rows;
};

namespace detail {

// 12 significant digits, '.' separator; deterministic for identical input.
inline std::string decimal12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline double ratio_constant(const Int& p) {
    Rat c(p - 1, euler_phi(p - 1));
    c.canonicalize();
    return c.get_d();
}

}  // namespace detail

/// CSV emission: header `index,observed,reference,ratio`, LF endings.
inline std::string to_csv(const RatioTable& table) {
    std::string out = "index,observed,reference,ratio\n";
    for (const RatioRow& r : table.rows) {
        out += std::to_string(r.index);
        out += ',';
        out += detail::decimal12(r.observed);
        out += ',';
        out += detail::decimal12(r.reference);
        out += ',';
        out += detail::decimal12(r.ratio);
        out += '\n';
    }
    return out;
}

/// Rows (t, x_t, c t ln t, ratio) for t = 2..tmax, c = (p-1)/phi(p-1).
inline RatioTable asymp_xt_table(const Int& p, std::size_t tmax) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("asymp_xt_table: p must be a prime >= 5");
    if (tmax < 2) throw std::invalid_argument("asymp_xt_table: tmax must be >= 2");
    auto xs = prime_primitive_roots(p, tmax);
    double c = detail::ratio_constant(p);
    RatioTable table;
    table.label = "xt_vs_ct_log_t";
    for (std::size_t t = 2; t <= tmax; ++t) {
        double observed = xs[t - 1].get_d();
        double reference = c * static_cast<double>(t) * std::log(static_cast<double>(t));
        table.rows.push_back({t, observed, reference, observed / reference});
    }
    return table;
}

/// Rows (t, x_{t+1}/ln N_t, c, ratio) along the worst-case sequence.
/// ln N_t is accumulated as the exact sum of ln x_i in 128-bit MPFR
/// arithmetic; N_t itself overflows any fixed precision near t ~ 50.
inline RatioTable asymp_gstar_table(const Int& p, std::size_t tmax) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("asymp_gstar_table: p must be a prime >= 5");
    if (tmax < 2) throw std::invalid_argument("asymp_gstar_table: tmax must be >= 2");
    auto xs = prime_primitive_roots(p, tmax + 1);
    double c = detail::ratio_constant(p);
    RatioTable table;
    table.label = "gstar_over_log_N";
    detail::Real logN, lx;
    mpfr_set_zero(logN.get(), 1);
    for (std::size_t t = 1; t <= tmax; ++t) {
        mpfr_set_z(lx.get(), xs[t - 1].get_mpz_t(), MPFR_RNDN);
        mpfr_log(lx.get(), lx.get(), MPFR_RNDN);
        mpfr_add(logN.get(), logN.get(), lx.get(), MPFR_RNDN);
        double observed = xs[t].get_d() / mpfr_get_d(logN.get(), MPFR_RNDN);
        table.rows.push_back({t, observed, c, observed / c});
    }
    return table;
}

/// The runtime-computed constant 6 e^gamma / pi^2 (>= 15 digits).
inline double index_ratio_reference() {
    detail::Real g, pi;
    mpfr_const_euler(g.get(), MPFR_RNDN);
    mpfr_exp(g.get(), g.get(), MPFR_RNDN);
    mpfr_mul_ui(g.get(), g.get(), 6, MPFR_RNDN);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_sqr(pi.get(), pi.get(), MPFR_RNDN);
    mpfr_div(g.get(), g.get(), pi.get(), MPFR_RNDN);
    return mpfr_get_d(g.get(), MPFR_RNDN);
}

/// Rows over k-th primorials N, k = 2..count:
/// (k, index(N)/(N ln ln N), 6 e^gamma/pi^2, ratio).
inline RatioTable index_ratio_table(std::size_t count) {
    if (count < 2) throw std::invalid_argument("index_ratio_table: count must be >= 2");
    double reference = index_ratio_reference();
    RatioTable table;
    table.label = "index_over_N_loglogN";
    Int primorial = 1;
    std::size_t k = 0;
    detail::for_each_prime([&](std::uint64_t q) {
        primorial *= q;
        ++k;
        if (k >= 2) {
            detail::Real n, idx;
            mpfr_set_z(n.get(), primorial.get_mpz_t(), MPFR_RNDN);
            mpfr_log(n.get(), n.get(), MPFR_RNDN);
            mpfr_log(n.get(), n.get(), MPFR_RNDN);
            mpfr_mul_z(n.get(), n.get(), primorial.get_mpz_t(), MPFR_RNDN);
            Int index = gamma0_index(primorial);
            mpfr_set_z(idx.get(), index.get_mpz_t(), MPFR_RNDN);
            mpfr_div(idx.get(), idx.get(), n.get(), MPFR_RNDN);
            double observed = mpfr_get_d(idx.get(), MPFR_RNDN);
            table.rows.push_back({k, observed, reference, observed / reference});
        }
        return k < count;
    });
    return table;
}

/// Exact check that primorial(r-1) >= 12 (r/2)^18 for every r in
/// [rmin, rmax]; the induction step in the worst-case argument needs
/// this for r > 44.
inline bool induction_check(std::size_t rmin, std::size_t rmax) {
    if (rmin <= 44) throw std::invalid_argument("induction_check: rmin must be > 44");
    if (rmax < rmin) throw std::invalid_argument("induction_check: rmax must be >= rmin");
    std::vector<Int> primorials;  // primorials[i] = product of first i+1 primes
    Int prod = 1;
    detail::for_each_prime([&](std::uint64_t q) {
        prod *= q;
        primorials.push_back(prod);
        return primorials.size() < rmax;
    });
    for (std::size_t r = rmin; r <= rmax; ++r) {
        // primorial(r-1) >= 12 r^18 / 2^18, exactly
        Int lhs = primorials[r - 2] << 18;
        Int rhs;
        mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(r), 18);
        rhs *= 12;
        if (lhs < rhs) return false;
    }
    return true;
}

/// Exact check of N_10 > 12 x_44^2 along the worst-case sequence.
inline bool n10_x44_check(const Int& p) {
    if (p != 5 && p != 7)
        throw std::invalid_argument("n10_x44_check: p must be 5 or 7");
    WorstCaseSequence seq = worst_case_sequence(p, 44);
    return seq.Ns[9] > 12 * seq.xs[43] * seq.xs[43];
}

}  // namespace eigenbound
