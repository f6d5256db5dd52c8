#pragma once

// Explicit bounds: the Gamma_0(N) index, Sturm/Buzzard and Murty bounds,
// the main two-term bound with its level-adjustment table, and the
// explicit GRH-conditional bounds for primes in arithmetic progression.
//
// Every transcendental threshold is evaluated in 128-bit MPFR arithmetic
// with upward rounding, so a rounded value can only enlarge the region
// that callers go on to scan.

#include "eigenbound/arith.hpp"
#include "eigenbound/primroots.hpp"

#include <mpfr.h>

namespace eigenbound {

namespace detail {

constexpr mpfr_prec_t kPrec = 128;  // ~38 decimal digits

class Real {
  public:
    Real() { mpfr_init2(v_, kPrec); }
    ~Real() { mpfr_clear(v_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    mpfr_ptr get() { return v_; }

  private:
    mpfr_t v_;
};

// coeff * base^pow_e * (ln base)^log_e, rounded upward throughout.
inline void threshold_up(mpfr_ptr out, const Rat& coeff, const Int& base,
                         unsigned pow_e, unsigned log_e) {
    Real lg, t;
    mpfr_set_z(lg.get(), base.get_mpz_t(), MPFR_RNDU);
    mpfr_log(lg.get(), lg.get(), MPFR_RNDU);
    mpfr_pow_ui(lg.get(), lg.get(), log_e, MPFR_RNDU);
    Int bp;
    mpz_pow_ui(bp.get_mpz_t(), base.get_mpz_t(), pow_e);
    mpfr_set_z(t.get(), bp.get_mpz_t(), MPFR_RNDU);
    mpfr_mul(out, lg.get(), t.get(), MPFR_RNDU);
    mpfr_mul_z(out, out, coeff.get_num().get_mpz_t(), MPFR_RNDU);
    mpfr_div_z(out, out, coeff.get_den().get_mpz_t(), MPFR_RNDU);
}

inline double threshold_up_d(const Rat& coeff, const Int& base, unsigned pow_e,
                             unsigned log_e) {
    Real r;
    threshold_up(r.get(), coeff, base, pow_e, log_e);
    return mpfr_get_d(r.get(), MPFR_RNDU);
}

inline Int threshold_up_ceil(const Rat& coeff, const Int& base, unsigned pow_e,
                             unsigned log_e) {
    Real r;
    threshold_up(r.get(), coeff, base, pow_e, log_e);
    Int z;
    mpfr_get_z(z.get_mpz_t(), r.get(), MPFR_RNDU);
    return z;
}

}  // namespace detail

/// [SL2(Z):Gamma_0(N)] = N prod_{l|N} (1 + 1/l), exact.
inline Int gamma0_index(const Int& N) {
    Factorization fz = factorize(N);
    Int idx = N;
    for (const auto& [l, e] : fz.factors) {
        idx /= l;
        idx *= l + 1;
    }
    return idx;
}

/// The Buzzard/Sturm bound k * [SL2(Z):Gamma_0(N)] / 12, as an exact
/// rational; use sturm_floor for the largest integer n with n <= bound.
inline Rat sturm_bound(const Int& k, const Int& N) {
    if (k < 1 || N < 1) throw std::invalid_argument("sturm_bound: k, N must be >= 1");
    Rat b(k * gamma0_index(N), 12);
    b.canonicalize();
    return b;
}

inline Int sturm_floor(const Int& k, const Int& N) {
    Rat b = sturm_bound(k, N);
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
    return f;
}

/// Least prime not dividing N.
inline Int least_prime_not_dividing(const Int& N) {
    Int result;
    detail::for_each_prime([&](std::uint64_t ell) {
        if (mpz_divisible_ui_p(N.get_mpz_t(), ell)) return true;
        result = ell;
        return false;
    });
    return result;
}

/// Murty's bound l^2, where l is the least prime not dividing N.
inline Int murty_bound(const Int& N) {
    if (N < 1) throw std::invalid_argument("murty_bound: N must be >= 1");
    Int l = least_prime_not_dividing(N);
    return l * l;
}

/// Which row of the level-adjustment table applies to (p, N).
enum class TableCase {
    P_GE_5,          // p >= 5: level N
    P3_POWER_OF_3,   // p = 3, N = 3^a (including N = 1): level 2N
    P3_OTHER,        // p = 3 otherwise: level N
    P2_DIV_5_7_11,   // p = 2, N divisible by 5, 7 or 11: level N
    P2_OTHER,        // p = 2 otherwise: level 5N
};

inline const char* to_string(TableCase c) {
    switch (c) {
        case TableCase::P_GE_5: return "p_ge_5";
        case TableCase::P3_POWER_OF_3: return "p3_power_of_3";
        case TableCase::P3_OTHER: return "p3_other";
        case TableCase::P2_DIV_5_7_11: return "p2_div_5_7_11";
        case TableCase::P2_OTHER: return "p2_other";
    }
    return "?";
}

/// The two competing terms of the main bound, the adjusted level, and
/// the selected maximum (exact rational comparison).
struct BoundBreakdown {
    Int p;
    Int level;
    Int adjusted_level;
    TableCase table_case;
    Int gstar_value;
    Int gstar_term;   // gstar_value^2
    Rat sturm_term;   // k2 * index(Gamma_0(adjusted_level)) / 12
    Rat selected;     // max of the two terms
};

/// The main bound max{g*(p,N)^2, k2/12 * [SL2(Z):Gamma_0(adjusted N)]}
/// with the level adjustment for p = 2, 3.
inline BoundBreakdown main_bound(const Int& p, const Int& N, const Int& k2) {
    if (!is_prime(p)) throw std::invalid_argument("main_bound: p not prime");
    if (N < 1 || k2 < 1) throw std::invalid_argument("main_bound: N, k2 must be >= 1");
    BoundBreakdown bd;
    bd.p = p;
    bd.level = N;
    if (p >= 5) {
        bd.table_case = TableCase::P_GE_5;
        bd.adjusted_level = N;
    } else if (p == 3) {
        Int m = N;
        while (m % 3 == 0) m /= 3;
        if (m == 1) {
            bd.table_case = TableCase::P3_POWER_OF_3;
            bd.adjusted_level = 2 * N;
        } else {
            bd.table_case = TableCase::P3_OTHER;
            bd.adjusted_level = N;
        }
    } else {  // p == 2
        if (N % 5 == 0 || N % 7 == 0 || N % 11 == 0) {
            bd.table_case = TableCase::P2_DIV_5_7_11;
            bd.adjusted_level = N;
        } else {
            bd.table_case = TableCase::P2_OTHER;
            bd.adjusted_level = 5 * N;
        }
    }
    bd.gstar_value = gstar(p, N);
    bd.gstar_term = bd.gstar_value * bd.gstar_value;
    bd.sturm_term = Rat(k2 * gamma0_index(bd.adjusted_level), 12);
    bd.sturm_term.canonicalize();
    bd.selected = std::max(Rat(bd.gstar_term), bd.sturm_term);
    return bd;
}

/// Bach-Sorenson bound 2 (q ln q)^2, rounded upward.
inline double bs_bound(const Int& q) {
    if (q < 2) throw std::invalid_argument("bs_bound: q must be >= 2");
    return detail::threshold_up_d(Rat(2), q, 2, 2);
}

/// Refined constant for q > 2: 1.56 (q ln q)^2, rounded upward.
inline double bs_refined_bound(const Int& q) {
    if (q <= 2) throw std::invalid_argument("bs_refined_bound: q must be > 2");
    return detail::threshold_up_d(Rat(39, 25), q, 2, 2);
}

/// pi_{a,q}(threshold) >= guaranteed_count for every a coprime to q,
/// with threshold = 1.56 t^2 q^{2t} (ln q)^2 and count q^{t-1}.
struct DistLowerBound {
    double threshold;
    Int guaranteed_count;
};

inline DistLowerBound dist_lower_bound(const Int& q, unsigned t) {
    if (q <= 2) throw std::invalid_argument("dist_lower_bound: q must be > 2");
    if (t < 1) throw std::invalid_argument("dist_lower_bound: t must be >= 1");
    DistLowerBound r;
    r.threshold = detail::threshold_up_d(Rat(Int(39) * t * t, 25), q, 2 * t, 2);
    mpz_pow_ui(r.guaranteed_count.get_mpz_t(), q.get_mpz_t(), t - 1);
    return r;
}

/// If x >= 6.24 q^4 (ln q)^2, returns floor(x^{1/9}) — a strict lower
/// bound for pi_{a,q}(x) under GRH; empty when x is below the threshold.
inline std::optional<Int> lemma_ap_floor(const Int& q, double x) {
    if (q < 5) throw std::invalid_argument("lemma_ap_floor: q must be >= 5");
    double threshold = detail::threshold_up_d(Rat(156, 25), q, 4, 2);
    if (x < threshold) return std::nullopt;
    detail::Real r;
    mpfr_set_d(r.get(), x, MPFR_RNDD);
    mpfr_rootn_ui(r.get(), r.get(), 9, MPFR_RNDD);
    Int f;
    mpfr_get_z(f.get_mpz_t(), r.get(), MPFR_RNDD);
    return f;
}

/// x_{phi(p-1) p^{t-1}} <= 1.56 t^2 p^{2t} (ln p)^2 under GRH.
struct CorUpperBound {
    Int index;     // phi(p-1) * p^{t-1}
    double bound;  // rounded upward
};

inline CorUpperBound cor_upper_bound(const Int& p, unsigned t) {
    if (p <= 2 || !is_prime(p))
        throw std::invalid_argument("cor_upper_bound: p must be a prime > 2");
    if (t < 1) throw std::invalid_argument("cor_upper_bound: t must be >= 1");
    CorUpperBound r;
    Int pt;
    mpz_pow_ui(pt.get_mpz_t(), p.get_mpz_t(), t - 1);
    r.index = euler_phi(p - 1) * pt;
    r.bound = detail::threshold_up_d(Rat(Int(39) * t * t, 25), p, 2 * t, 2);
    return r;
}

/// Exact lower bound (p+1)^{phi(p-1)/2} for N_{phi(p-1)}.
inline Int nphi_lower(const Int& p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("nphi_lower: p must be a prime >= 5");
    Int e = euler_phi(p - 1) / 2;
    Int base = p + 1;
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e.get_ui());
    return r;
}

/// t1 = 29.2032 p^4 (ln p)^4 and t2 = 467.2512 p^8 (ln p)^4, both
/// rounded upward; the decimal constants are the exact rationals
/// 292032/10^4 and 4672512/10^4.
struct WorstCaseThresholds {
    double t1;
    double t2;
};

inline WorstCaseThresholds worstcase_thresholds(const Int& p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("worstcase_thresholds: p must be a prime >= 5");
    return {detail::threshold_up_d(Rat(292032, 10000), p, 4, 4),
            detail::threshold_up_d(Rat(4672512, 10000), p, 8, 4)};
}

/// Integer ceiling of t1(p), for exact comparison against the N_t.
inline Int theoretical_t1_ceil(const Int& p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("theoretical_t1_ceil: p must be a prime >= 5");
    return detail::threshold_up_ceil(Rat(292032, 10000), p, 4, 4);
}

/// Minimal r with N_{r-1} >= 29.2032 p^4 (ln p)^4 (upward-rounded
/// threshold, so the returned r can only over-estimate, never under).
inline unsigned theoretical_r(const Int& p) {
    Int target = theoretical_t1_ceil(p);
    unsigned r = 1;
    Int prod = 1;  // N_0
    if (prod >= target) return r;
    detail::for_each_prime([&](std::uint64_t ell) {
        if (!is_primitive_root(Int(ell), p)) return true;
        prod *= ell;
        ++r;
        return prod < target;
    });
    return r;
}

}  // namespace eigenbound
