#pragma once

// q-expansion data model, Bernoulli numbers, the weight p-1 Eisenstein
// series, the Hecke coefficient identity, and the mod-p eigenform
// distinguisher. Coefficient ring is the rational integers, so the
// prime ideal is pZ and reduction is plain mod p.

#include "eigenbound/bounds.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <string>

namespace eigenbound {

enum class Character { Trivial };

/// Exact integer Fourier coefficients a_0..a_M of a form of the given
/// level and weight. A normalised eigenform has a_1 = 1.
struct QExpansion {
    Int level;
    Int weight;
    Character character = Character::Trivial;
    bool eigenform = false;
    std::vector<Int> coeffs;

    /// Truncation order M (coeffs holds a_0..a_M).
    std::size_t order() const { return coeffs.size() - 1; }
};

/// Exact rational q-series (no floating point anywhere).
struct RationalSeries {
    Int weight;
    std::vector<Rat> coeffs;
};

/// Bernoulli number B_m by the binomial recurrence; B_1 = -1/2.
inline Rat bernoulli(unsigned m) {
    static const std::vector<Rat> seed = {Rat(1)};
    std::vector<Rat> b = seed;
    b.reserve(m + 1);
    for (unsigned n = 1; n <= m; ++n) {
        Rat sum = 0;
        for (unsigned k = 0; k < n; ++k) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), n + 1, k);
            sum += Rat(binom) * b[k];
        }
        Rat bn = -sum / Rat(n + 1);
        bn.canonicalize();
        b.push_back(bn);
    }
    return b[m];
}

/// Divisor power sum sigma_e(n) = sum_{d|n} d^e.
inline Int sigma_power(const Int& n, unsigned e) {
    if (n < 1) throw std::invalid_argument("sigma_power: n must be >= 1");
    Int total = 1;
    for (const auto& [q, a] : factorize(n).factors) {
        Int qe;
        mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), e);
        Int geo = 1, term = 1;
        for (unsigned i = 0; i < a; ++i) {
            term *= qe;
            geo += term;
        }
        total *= geo;
    }
    return total;
}

/// E_{p-1} = 1 - ((2p-2)/B_{p-1}) sum sigma_{p-2}(n) q^n, truncated at
/// q^M, exact rationals.
inline RationalSeries eisenstein_qexp(const Int& p, std::size_t M) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("eisenstein_qexp: p must be a prime >= 5");
    unsigned pu = static_cast<unsigned>(p.get_ui());
    RationalSeries s;
    s.weight = p - 1;
    s.coeffs.reserve(M + 1);
    s.coeffs.emplace_back(1);
    Rat c = -Rat(2 * p - 2) / bernoulli(pu - 1);
    c.canonicalize();
    for (std::size_t n = 1; n <= M; ++n) {
        Rat a = c * Rat(sigma_power(Int(n), pu - 2));
        a.canonicalize();
        s.coeffs.push_back(a);
    }
    return s;
}

/// True iff every coefficient of E_{p-1} - 1 up to q^M, in lowest terms,
/// has denominator coprime to p and numerator divisible by p (so that
/// E_{p-1} == 1 mod p as a power series).
inline bool eisenstein_congruence_check(const Int& p, std::size_t M) {
    RationalSeries s = eisenstein_qexp(p, M);
    for (std::size_t n = 1; n <= M; ++n) {
        const Rat& a = s.coeffs[n];
        if (a.get_den() % p == 0) return false;
        if (a.get_num() % p != 0) return false;
    }
    return true;
}

/// Eigenform coefficient identity at a prime l coprime to the level:
/// a_l^2 - a_{l^2} must equal l^{k-1} (trivial character).
struct HeckeCheck {
    Int lhs;  // a_l^2 - a_{l^2}
    Int rhs;  // l^{k-1}
    bool ok;
};

inline HeckeCheck hecke_identity_check(const QExpansion& f, const Int& ell) {
    if (!is_prime(ell)) throw std::invalid_argument("hecke_identity_check: l not prime");
    if (f.level % ell == 0)
        throw std::invalid_argument("hecke_identity_check: l divides the level");
    Int ell_sq = ell * ell;
    if (ell_sq > static_cast<unsigned long>(f.order()))
        throw std::invalid_argument("hecke_identity_check: coefficients truncated below l^2");
    const Int& al = f.coeffs[ell.get_ui()];
    const Int& al2 = f.coeffs[ell_sq.get_ui()];
    HeckeCheck c;
    c.lhs = al * al - al2;
    mpz_pow_ui(c.rhs.get_mpz_t(), ell.get_mpz_t(), f.weight.get_ui() - 1);
    c.ok = (c.lhs == c.rhs);
    return c;
}

enum class DistinguishOutcome { Witness, CongruentUpToBound, InsufficientCoeffs };

inline const char* to_string(DistinguishOutcome o) {
    switch (o) {
        case DistinguishOutcome::Witness: return "witness";
        case DistinguishOutcome::CongruentUpToBound: return "congruent_up_to_bound";
        case DistinguishOutcome::InsufficientCoeffs: return "insufficient_coeffs";
    }
    return "?";
}

/// Result of a distinguishing run: either a witness index with the two
/// differing values, or a certificate that the forms agree up to the
/// bound. value_f/value_g are residues in [0, p) for the mod-p variant
/// and exact coefficients for the characteristic-zero variant.
struct DistinguishReport {
    DistinguishOutcome outcome;
    Int witness_n = 0;
    Int value_f = 0;
    Int value_g = 0;
    Rat bound;
    std::optional<BoundBreakdown> breakdown;
    bool fast_path_used = false;
};

namespace detail {

inline Int mod_residue(const Int& a, const Int& p) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

}  // namespace detail

/// Distinguish two normalised eigenforms modulo p. Fast path: when the
/// weights differ and p-1 does not divide their difference, a witness
/// is guaranteed among n in {l, l^2} with l the g* prime of the bound,
/// so those two indices are checked first. Otherwise every n up to the
/// selected bound is scanned.
inline DistinguishReport distinguish_mod_p(const QExpansion& f, const QExpansion& g,
                                           const Int& p, bool force_full_scan = false) {
    if (!is_prime(p)) throw std::invalid_argument("distinguish_mod_p: p not prime");
    if (f.level != g.level)
        throw std::invalid_argument("distinguish_mod_p: level mismatch");
    if (f.character != g.character)
        throw std::invalid_argument("distinguish_mod_p: character mismatch");
    Int k1 = std::min(f.weight, g.weight);
    Int k2 = std::max(f.weight, g.weight);

    DistinguishReport rep;
    rep.breakdown = main_bound(p, f.level, k2);
    rep.bound = rep.breakdown->selected;

    auto witness_at = [&](const Int& n) -> bool {
        const Int& af = f.coeffs[n.get_ui()];
        const Int& ag = g.coeffs[n.get_ui()];
        Int rf = detail::mod_residue(af, p);
        Int rg = detail::mod_residue(ag, p);
        if (rf == rg) return false;
        rep.outcome = DistinguishOutcome::Witness;
        rep.witness_n = n;
        rep.value_f = rf;
        rep.value_g = rg;
        return true;
    };

    Int avail = Int(std::min(f.order(), g.order()));
    if (!force_full_scan && k1 != k2 && (k2 - k1) % (p - 1) != 0) {
        const Int& ell = rep.breakdown->gstar_value;
        Int ell_sq = ell * ell;
        if (ell_sq > avail) {
            rep.outcome = DistinguishOutcome::InsufficientCoeffs;
            return rep;
        }
        if (witness_at(ell) || witness_at(ell_sq)) {
            rep.fast_path_used = true;
            return rep;
        }
        // Contradicts the eigenform hypotheses; fall through to the scan.
    }

    Int limit;
    mpz_fdiv_q(limit.get_mpz_t(), rep.bound.get_num().get_mpz_t(),
               rep.bound.get_den().get_mpz_t());
    Int scan_to = std::min(limit, avail);
    for (Int n = 0; n <= scan_to; ++n)
        if (witness_at(n)) return rep;
    rep.outcome = avail < limit ? DistinguishOutcome::InsufficientCoeffs
                                : DistinguishOutcome::CongruentUpToBound;
    return rep;
}

/// Characteristic-zero distinguisher for eigenforms of distinct weights:
/// a witness exists at some n <= l^2 with l the least prime not dividing
/// the level, so a congruent outcome here indicates bad input data.
inline DistinguishReport distinguish_exact(const QExpansion& f, const QExpansion& g) {
    if (f.level != g.level)
        throw std::invalid_argument("distinguish_exact: level mismatch");
    if (f.weight == g.weight)
        throw std::invalid_argument("distinguish_exact: weights must differ");
    Int ell = least_prime_not_dividing(f.level);
    DistinguishReport rep;
    rep.bound = Rat(ell * ell);

    Int avail = Int(std::min(f.order(), g.order()));
    Int limit = ell * ell;
    Int scan_to = std::min(limit, avail);
    for (Int n = 0; n <= scan_to; ++n) {
        const Int& af = f.coeffs[n.get_ui()];
        const Int& ag = g.coeffs[n.get_ui()];
        if (af != ag) {
            rep.outcome = DistinguishOutcome::Witness;
            rep.witness_n = n;
            rep.value_f = af;
            rep.value_g = ag;
            return rep;
        }
    }
    rep.outcome = avail < limit ? DistinguishOutcome::InsufficientCoeffs
                                : DistinguishOutcome::CongruentUpToBound;
    return rep;
}

/// Parse a q-expansion document: JSON with fields `level` (integer >= 1),
/// `weight` (integer >= 1), `character` ("trivial"), `eigenform` (bool),
/// `coeffs` (array of decimal integer strings, a_0 first). Arbitrary-size
/// integers are legal.
inline QExpansion load_qexpansion(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("q-expansion: malformed JSON: ") + e.what());
    }
    for (const char* field : {"level", "weight", "character", "eigenform", "coeffs"})
        if (!doc.contains(field))
            throw std::invalid_argument(std::string("q-expansion: missing field ") + field);

    QExpansion q;
    if (!doc["level"].is_number_integer() || doc["level"].get<long long>() < 1)
        throw std::invalid_argument("q-expansion: level must be an integer >= 1");
    q.level = Int(static_cast<long>(doc["level"].get<long long>()));
    if (!doc["weight"].is_number_integer() || doc["weight"].get<long long>() < 1)
        throw std::invalid_argument("q-expansion: weight must be an integer >= 1");
    q.weight = Int(static_cast<long>(doc["weight"].get<long long>()));
    if (!doc["character"].is_string() || doc["character"].get<std::string>() != "trivial")
        throw std::invalid_argument("q-expansion: character must be \"trivial\"");
    if (!doc["eigenform"].is_boolean())
        throw std::invalid_argument("q-expansion: eigenform must be a boolean");
    q.eigenform = doc["eigenform"].get<bool>();
    if (!doc["coeffs"].is_array() || doc["coeffs"].size() < 2)
        throw std::invalid_argument("q-expansion: coeffs must list at least a_0 and a_1");
    for (const auto& item : doc["coeffs"]) {
        if (!item.is_string())
            throw std::invalid_argument("q-expansion: coefficients must be decimal strings");
        const std::string s = item.get<std::string>();
        Int a;
        if (s.empty() || mpz_set_str(a.get_mpz_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("q-expansion: non-integer coefficient \"" + s + "\"");
        q.coeffs.push_back(std::move(a));
    }
    if (q.eigenform && q.coeffs[1] != 1)
        throw std::invalid_argument("q-expansion: normalised eigenform requires a_1 = 1");
    return q;
}

}  // namespace eigenbound
