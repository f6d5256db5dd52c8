#pragma once

// Independent test oracles. Everything here is computed from first
// principles (brute-force divisor sums, naive truncated power series)
// and never calls the library paths it is used to check.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

using Int = mpz_class;

// sum of d^e over divisors d of n, by direct enumeration
inline Int sigma_brute(std::uint64_t n, unsigned e) {
    Int total = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Int de;
        mpz_ui_pow_ui(de.get_mpz_t(), d, e);
        total += de;
    }
    return total;
}

// truncated product of two q-series (coefficients a_0..a_M)
inline std::vector<Int> series_mul(const std::vector<Int>& a,
                                   const std::vector<Int>& b, std::size_t M) {
    std::vector<Int> c(M + 1, Int(0));
    for (std::size_t i = 0; i <= M && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= M && j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

// E_4 = 1 + 240 sum sigma_3(n) q^n
inline std::vector<Int> e4_series(std::size_t M) {
    std::vector<Int> c(M + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= M; ++n) c[n] = 240 * sigma_brute(n, 3);
    return c;
}

// Delta = q prod_{n>=1} (1 - q^n)^24; coefficients tau(0)=0, tau(1)=1, ...
inline std::vector<Int> delta_series(std::size_t M) {
    std::vector<Int> eta(M + 1, Int(0));
    eta[0] = 1;
    for (std::size_t n = 1; n <= M; ++n) {
        // multiply by (1 - q^n) in place
        for (std::size_t i = M; i >= n; --i) eta[i] -= eta[i - n];
    }
    std::vector<Int> pow = eta;
    for (int i = 1; i < 24; ++i) pow = series_mul(pow, eta, M);
    std::vector<Int> delta(M + 1, Int(0));
    for (std::size_t i = 1; i <= M; ++i) delta[i] = pow[i - 1];
    return delta;
}

inline std::vector<Int> e4_delta_series(std::size_t M) {
    return series_mul(e4_series(M), delta_series(M), M);
}

}  // namespace oracle
