#pragma once

// Exact computation of the threshold N-hat(p): the minimal value such
// that 12 g*(p,N)^2 <= N prod_{l|N}(1 + 1/l) for every N beyond it.
// compute_nhat prunes the search to N <= 12 x_1^2 plus multiples of N_t
// in [12 x_t^2, 12 x_{t+1}^2); brute_nhat is the linear-scan oracle.

#include "eigenbound/bounds.hpp"

#include <thread>

namespace eigenbound {

struct NhatReport {
    Int p;
    Int nhat;
    Int largest_failing_N;  // 0 if no N fails
    std::uint64_t candidates_tested = 0;
    Int ceiling_used;  // N_{r-1} from the theoretical bound
};

/// The comparison inequality: 12 g*(p,N)^2 <= [SL2(Z):Gamma_0(N)],
/// compared exactly (the right side is an integer).
inline bool comp_holds(const Int& p, const Int& N) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("comp_holds: p must be a prime >= 5");
    if (N < 1) throw std::invalid_argument("comp_holds: N must be >= 1");
    Int g = gstar(p, N);
    return 12 * g * g <= gamma0_index(N);
}

namespace detail {

// Segmented computation of [SL2(Z):Gamma_0(n)] for all n in [lo, hi];
// calls f(n, index). Indices fit in 64 bits for hi < 2^61 since
// prod(1 + 1/l) < 4 in that range.
template <class F>
void for_each_gamma0_index(std::uint64_t lo, std::uint64_t hi, F&& f) {
    if (lo < 1) lo = 1;
    if (lo > hi) return;
    std::uint64_t root = 2;
    while (root * root <= hi) ++root;
    auto base = prime_sieve(root);
    const std::uint64_t seg = 1u << 20;
    std::vector<std::uint64_t> rem, idx;
    for (std::uint64_t blo = lo; blo <= hi; blo += seg) {
        std::uint64_t bhi = std::min(hi, blo + seg - 1);
        std::size_t len = bhi - blo + 1;
        rem.resize(len);
        idx.assign(len, 1);
        for (std::size_t i = 0; i < len; ++i) rem[i] = blo + i;
        for (std::uint64_t q : base) {
            std::uint64_t start = ((blo + q - 1) / q) * q;
            for (std::uint64_t m = start; m <= bhi; m += q) {
                std::size_t i = m - blo;
                idx[i] *= q + 1;
                rem[i] /= q;
                while (rem[i] % q == 0) {
                    idx[i] *= q;
                    rem[i] /= q;
                }
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (rem[i] > 1) idx[i] *= rem[i] + 1;  // single prime factor > sqrt
            f(blo + i, idx[i]);
        }
    }
}

// Worst-case sequence extended on demand; gstar(p, N) is the first x_i
// not dividing N.
struct SequenceCache {
    Int p;
    std::vector<std::uint64_t> xs;
    std::vector<Int> Ns;
    std::uint64_t scanned_upto = 1;

    explicit SequenceCache(const Int& p_) : p(p_) {}

    void extend_to(std::size_t count) {
        while (xs.size() < count) grow();
    }

    void grow() {
        std::size_t want = xs.size() + 8;
        std::uint64_t limit = std::max<std::uint64_t>(64, scanned_upto * 2);
        while (xs.size() < want) {
            for_each_prime_upto(limit, [&](std::uint64_t ell) {
                if (ell <= scanned_upto) return true;
                if (is_primitive_root(Int(ell), p)) {
                    xs.push_back(ell);
                    Ns.push_back((Ns.empty() ? Int(1) : Ns.back()) * ell);
                }
                return true;
            });
            scanned_upto = limit;
            limit *= 2;
        }
    }

    std::uint64_t gstar_of(std::uint64_t n) {
        for (std::size_t i = 0;; ++i) {
            if (i == xs.size()) grow();
            if (n % xs[i] != 0) return xs[i];
        }
    }

    Int gstar_of(const Int& N) {
        for (std::size_t i = 0;; ++i) {
            if (i == xs.size()) grow();
            if (!mpz_divisible_ui_p(N.get_mpz_t(), xs[i])) return Int(xs[i]);
        }
    }
};

struct ScanResult {
    Int largest_failing = 0;
    std::uint64_t tested = 0;

    void merge(const ScanResult& other) {
        largest_failing = std::max(largest_failing, other.largest_failing);
        tested += other.tested;
    }
};

// Scans comp over [lo, hi] using the sieved index table; gstar values
// come from the precomputed sequence.
inline ScanResult scan_range(SequenceCache& seq, std::uint64_t lo, std::uint64_t hi) {
    ScanResult res;
    std::uint64_t worst = 0;
    for_each_gamma0_index(lo, hi, [&](std::uint64_t n, std::uint64_t index) {
        ++res.tested;
        std::uint64_t g = seq.gstar_of(n);
        if (12 * g * g > index) worst = n;
    });
    if (worst) res.largest_failing = Int(worst);
    return res;
}

// Chunked parallel scan; results merge by maximum, so the outcome is
// identical for any job count.
inline ScanResult scan_range_jobs(SequenceCache& seq, std::uint64_t lo,
                                  std::uint64_t hi, unsigned jobs) {
    if (lo > hi) return {};
    if (jobs <= 1 || hi - lo < 4096) return scan_range(seq, lo, hi);
    // Each worker gets its own sequence cache; gstar values over the
    // range only need xs, which every cache reproduces identically.
    std::uint64_t span = (hi - lo) / jobs + 1;
    std::vector<ScanResult> parts(jobs);
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) {
        std::uint64_t clo = lo + j * span;
        std::uint64_t chi = std::min(hi, clo + span - 1);
        if (clo > hi) break;
        threads.emplace_back([&, j, clo, chi] {
            SequenceCache local(seq.p);
            parts[j] = scan_range(local, clo, chi);
        });
    }
    for (auto& t : threads) t.join();
    ScanResult res;
    for (const auto& part : parts) res.merge(part);
    return res;
}

}  // namespace detail

/// N-hat(p) via the pruned candidate set: every N <= 12 x_1^2, plus the
/// multiples of N_t in [12 x_t^2, 12 x_{t+1}^2) for t = 1..r-2, where r
/// is minimal with N_{r-1} >= 29.2032 p^4 (ln p)^4. No other N can fail.
inline NhatReport compute_nhat(const Int& p, unsigned jobs = 1) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("compute_nhat: p must be a prime >= 5");
    detail::SequenceCache seq(p);
    Int target = theoretical_t1_ceil(p);
    seq.extend_to(1);
    std::size_t r = 1;
    while (seq.Ns[r - 1] < target) {
        ++r;
        seq.extend_to(r);
    }
    ++r;  // N_{r-1} is the first product >= target

    NhatReport rep;
    rep.p = p;
    rep.ceiling_used = seq.Ns[r - 2];

    // (a) the dense initial range
    Int twelve_x1_sq = 12 * seq.xs[0] * seq.xs[0];
    detail::ScanResult res =
        detail::scan_range_jobs(seq, 1, twelve_x1_sq.get_ui(), jobs);

    // (b) multiples of N_t in [12 x_t^2, 12 x_{t+1}^2)
    for (std::size_t t = 1; t + 2 <= r; ++t) {
        seq.extend_to(t + 1);
        Int lo = 12 * seq.xs[t - 1] * seq.xs[t - 1];
        Int hi = 12 * seq.xs[t] * seq.xs[t];  // exclusive
        const Int& step = seq.Ns[t - 1];
        Int m = ((lo + step - 1) / step) * step;
        for (; m < hi; m += step) {
            ++res.tested;
            Int g = seq.gstar_of(m);
            if (12 * g * g > gamma0_index(m))
                res.largest_failing = std::max(res.largest_failing, m);
        }
    }

    rep.largest_failing_N = res.largest_failing;
    rep.nhat = res.largest_failing + 1;
    rep.candidates_tested = res.tested;
    return rep;
}

/// Oracle: linear scan of the comparison inequality over all N up to
/// the ceiling. Since the index is always >= N, no N >= 12 G^2 can fail
/// once G bounds g*(p, N) over the scan range, so the scan stops there;
/// everything below is tested one by one against the sieved index table.
inline NhatReport brute_nhat(const Int& p, const Int& ceiling, unsigned jobs = 1,
                             std::vector<Int>* failures = nullptr) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("brute_nhat: p must be a prime >= 5");
    detail::SequenceCache seq(p);
    seq.extend_to(1);
    if (ceiling < 12 * seq.xs[0] * seq.xs[0])
        throw std::invalid_argument("brute_nhat: ceiling below 12 x_1^2");

    // Largest possible g* over N <= ceiling: x_{s+1} for the maximal s
    // with N_s <= ceiling (all of x_1..x_s must divide such an N).
    std::size_t s = 0;
    while (true) {
        seq.extend_to(s + 1);
        if (seq.Ns[s] > ceiling) break;
        ++s;
    }
    Int gmax = seq.xs[s];
    Int scan_hi = std::min(ceiling, Int(12 * gmax * gmax - 1));

    NhatReport rep;
    rep.p = p;
    rep.ceiling_used = ceiling;
    detail::ScanResult res;
    if (failures) {
        detail::for_each_gamma0_index(1, scan_hi.get_ui(),
                                      [&](std::uint64_t n, std::uint64_t index) {
                                          ++res.tested;
                                          std::uint64_t g = seq.gstar_of(n);
                                          if (12 * g * g > index) {
                                              res.largest_failing = Int(n);
                                              failures->emplace_back(n);
                                          }
                                      });
    } else {
        res = detail::scan_range_jobs(seq, 1, scan_hi.get_ui(), jobs);
    }
    rep.largest_failing_N = res.largest_failing;
    rep.nhat = res.largest_failing + 1;
    rep.candidates_tested = res.tested;
    return rep;
}

/// Maximum of nhat(p) over primes lo <= p < hi, with the attaining prime.
struct NhatRangeReport {
    Int max_nhat = 0;
    Int argmax_p = 0;
    std::vector<NhatReport> per_prime;
};

inline NhatRangeReport nhat_range(const Int& lo, const Int& hi, unsigned jobs = 1,
                                  bool keep_reports = false) {
    if (lo < 5) throw std::invalid_argument("nhat_range: lo must be >= 5");
    NhatRangeReport out;
    for (Int p = lo; p < hi; ++p) {
        if (!is_prime(p)) continue;
        NhatReport rep = compute_nhat(p, jobs);
        if (rep.nhat > out.max_nhat) {
            out.max_nhat = rep.nhat;
            out.argmax_p = p;
        }
        if (keep_reports) out.per_prime.push_back(std::move(rep));
    }
    return out;
}

}  // namespace eigenbound
