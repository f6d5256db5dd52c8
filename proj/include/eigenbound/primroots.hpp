#pragma once

// The g*(p, N) function and the worst-case sequence (x_t, N_t):
// x_t is the t-th smallest prime primitive root mod p and N_t = x_1...x_t.

#include "eigenbound/arith.hpp"

namespace eigenbound {

/// For a prime p, the first t prime primitive roots x_1 < ... < x_t and
/// their cumulative products N_t (exact, N_0 = 1 implicit).
struct WorstCaseSequence {
    Int p;
    std::vector<Int> xs;
    std::vector<Int> Ns;
};

namespace detail {

// Enumerates primes ascending, growing the sieve as needed; f returns
// false to stop.
template <class F>
void for_each_prime(F&& f) {
    std::uint64_t limit = 1u << 10;
    std::uint64_t next = 2;
    for (;;) {
        bool stopped = false;
        for_each_prime_upto(limit, [&](std::uint64_t p) {
            if (p < next) return true;
            next = p + 1;
            if (!f(p)) {
                stopped = true;
                return false;
            }
            return true;
        });
        if (stopped) return;
        limit *= 4;
    }
}

}  // namespace detail

/// First t prime primitive roots mod p (p >= 2). For p = 2 every odd
/// prime qualifies (the unit group is trivial, so the general order
/// test degenerates to "least odd prime"); for p = 3 these are the
/// primes congruent to 2 mod 3.
inline std::vector<Int> prime_primitive_roots(const Int& p, std::size_t t) {
    if (!is_prime(p)) throw std::invalid_argument("prime_primitive_roots: p not prime");
    std::vector<Int> xs;
    xs.reserve(t);
    detail::for_each_prime([&](std::uint64_t ell) {
        if (is_primitive_root(Int(ell), p)) xs.emplace_back(ell);
        return xs.size() < t;
    });
    return xs;
}

/// Least prime primitive root mod p that does not divide N.
inline Int gstar(const Int& p, const Int& N) {
    if (!is_prime(p)) throw std::invalid_argument("gstar: p not prime");
    if (N < 1) throw std::invalid_argument("gstar: N must be >= 1");
    Int result;
    detail::for_each_prime([&](std::uint64_t ell) {
        if (mpz_divisible_ui_p(N.get_mpz_t(), ell)) return true;
        if (!is_primitive_root(Int(ell), p)) return true;
        result = ell;
        return false;
    });
    return result;
}

/// The worst-case sequence (x_1..x_t, N_1..N_t) for a prime p >= 3.
inline WorstCaseSequence worst_case_sequence(const Int& p, std::size_t t) {
    if (p < 3) throw std::invalid_argument("worst_case_sequence: p must be >= 3");
    if (t < 1) throw std::invalid_argument("worst_case_sequence: t must be >= 1");
    WorstCaseSequence seq;
    seq.p = p;
    seq.xs = prime_primitive_roots(p, t);
    Int prod = 1;
    seq.Ns.reserve(t);
    for (const Int& x : seq.xs) {
        prod *= x;
        seq.Ns.push_back(prod);
    }
    return seq;
}

}  // namespace eigenbound
