#pragma once

// Elementary number theory kernel: primality, factorization, totient,
// multiplicative order, sieves, and prime counting in arithmetic
// progressions. All functions are pure; exact arithmetic via GMP.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eigenbound {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical factorization of a positive integer: ascending primes with
/// exponents >= 1, reassembling exactly to `value`. Empty iff value == 1.
struct Factorization {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;
};

inline Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

namespace detail {

// Strong probable prime test to the given base.
inline bool miller_rabin(const Int& n, const Int& a) {
    Int am = a % n;
    if (am == 0) return true;
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x = powmod(am, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

/// Deterministic primality test. The witness set {2,...,37} is proven
/// exact for n < 3.317e24 (Sorenson-Webster), which covers every value
/// the toolkit produces; larger inputs still get a strong-probable-prime
/// verdict with the same witnesses.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const unsigned small_primes[] = {2,  3,  5,  7,  11, 13,
                                            17, 19, 23, 29, 31, 37};
    for (unsigned p : small_primes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    for (unsigned p : small_primes)
        if (!detail::miller_rabin(n, Int(p))) return false;
    return true;
}

namespace detail {

// Brent's cycle-finding variant of Pollard rho. Deterministic: the
// polynomial increment c walks 1, 2, 3, ... until a split is found.
inline Int pollard_brent(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int ys = y, q = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        // The explicit return type forces evaluation; the deduced gmpxx
        // expression template would dangle.
        auto f = [&](const Int& v) -> Int { return (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one step at a time.
            d = 1;
            while (d == 1) {
                ys = f(ys);
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

inline void factor_rec(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

/// Canonical factorization of n >= 1. Trial division for small prime
/// factors, Pollard-Brent splitting beyond; every factor is re-checked
/// by the primality test and the product is reassembled.
inline Factorization factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization fz;
    fz.value = n;
    Int m = n;
    std::vector<Int> primes;
    for (unsigned p = 2; p < 10000 && Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    detail::factor_rec(m, primes);
    std::sort(primes.begin(), primes.end());
    Int check = 1;
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        if (!is_prime(primes[i]))
            throw std::logic_error("factorize: non-prime factor produced");
        fz.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
        for (std::size_t k = i; k < j; ++k) check *= primes[i];
        i = j;
    }
    if (check != n) throw std::logic_error("factorize: product mismatch");
    return fz;
}

/// Euler totient, computed from the factorization.
inline Int euler_phi(const Int& n) {
    Factorization fz = factorize(n);
    Int phi = n;
    for (const auto& [p, e] : fz.factors) {
        phi /= p;
        phi *= p - 1;
    }
    return phi;
}

/// Least d >= 1 with a^d == 1 mod p, by factoring p-1 and stripping
/// prime factors from the exponent.
inline Int multiplicative_order(const Int& a, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("multiplicative_order: p not prime");
    if (a % p == 0) throw std::invalid_argument("multiplicative_order: p divides a");
    Int d = p - 1;
    for (const auto& [q, e] : factorize(p - 1).factors) {
        while (d % q == 0 && powmod(a, d / q, p) == 1) d /= q;
    }
    return d;
}

/// True iff a is a primitive root mod p: p does not divide a and
/// a^{(p-1)/q} != 1 mod p for every prime q | p-1.
inline bool is_primitive_root(const Int& a, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("is_primitive_root: p not prime");
    if (a % p == 0) return false;
    Int e = p - 1;
    for (const auto& [q, ex] : factorize(e).factors)
        if (powmod(a, e / q, p) == 1) return false;
    return true;
}

/// All primes <= limit, ascending.
inline std::vector<std::uint64_t> prime_sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!comp[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!comp[i]) primes.push_back(i);
    return primes;
}

namespace detail {

// Segmented sieve over [2, x]; calls f(prime) ascending, stops when f
// returns false.
template <class F>
void for_each_prime_upto(std::uint64_t x, F&& f) {
    if (x < 2) return;
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x))) + 2;
    while (root * root > x + 1) --root;
    auto base = prime_sieve(root);
    for (std::uint64_t p : base)
        if (p <= x && !f(p)) return;
    const std::uint64_t seg = 1u << 20;
    std::vector<bool> comp;
    for (std::uint64_t lo = root + 1; lo <= x; lo += seg) {
        std::uint64_t hi = std::min(x, lo + seg - 1);
        comp.assign(hi - lo + 1, false);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (std::uint64_t m = start; m <= hi; m += p) comp[m - lo] = true;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (!comp[n - lo] && !f(n)) return;
    }
}

}  // namespace detail

/// pi_{a,q}(x): number of primes l <= x with l == a mod q.
inline std::uint64_t count_primes_in_ap(std::uint64_t a, std::uint64_t q,
                                        std::uint64_t x) {
    if (q < 1 || std::gcd(a, q) != 1)
        throw std::invalid_argument("count_primes_in_ap: gcd(a, q) != 1");
    std::uint64_t count = 0, target = a % q;
    detail::for_each_prime_upto(x, [&](std::uint64_t p) {
        if (p % q == target) ++count;
        return true;
    });
    return count;
}

/// Smallest prime l == a mod q with l <= cap, if any.
inline std::optional<std::uint64_t> least_prime_in_ap(std::uint64_t a,
                                                      std::uint64_t q,
                                                      std::uint64_t cap) {
    if (q < 1 || std::gcd(a, q) != 1)
        throw std::invalid_argument("least_prime_in_ap: gcd(a, q) != 1");
    std::optional<std::uint64_t> found;
    std::uint64_t target = a % q;
    detail::for_each_prime_upto(cap, [&](std::uint64_t p) {
        if (p % q == target) {
            found = p;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace eigenbound
