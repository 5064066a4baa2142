#include "etaq/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace etaq::kernels {

namespace {

std::atomic<int> g_threads{0};

// Accumulate into a u64 scratch block covering out[lo, hi).
// Safe without intermediate reduction when mod <= 2^16 (products < 2^32 leave
// 32 bits of headroom, far more passes than any term list here).
void accumulate_block(const uint32_t* in, size_t n_in, uint64_t* acc, size_t lo, size_t hi,
                      const std::vector<std::pair<int64_t, uint32_t>>& terms, uint64_t mod) {
    const bool small = mod <= (uint64_t(1) << 16);
    size_t since_reduce = 0;
    for (auto& [shift, c] : terms) {
        if (c == 0) continue;
        // valid i: 0 <= i - shift < n_in
        int64_t i0 = std::max<int64_t>(lo, shift);
        int64_t i1 = std::min<int64_t>(hi, shift + static_cast<int64_t>(n_in));
        if (!small && ++since_reduce == 3) {
            for (size_t i = lo; i < hi; ++i) acc[i - lo] %= mod;
            since_reduce = 0;
        }
        const uint32_t* src = in + (i0 - shift);
        uint64_t* dst = acc + (i0 - lo);
        uint64_t cc = c;
        for (int64_t i = i0; i < i1; ++i) *dst++ += cc * *src++;
    }
}

} // namespace

void set_thread_count(int n) { g_threads.store(n); }
int thread_count() { return g_threads.load(); }

int default_threads() {
    int n = g_threads.load();
    if (n > 0) return n;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void convolve_mod_serial(const uint32_t* in, size_t n_in, uint32_t* out, size_t n_out,
                         const std::vector<std::pair<int64_t, uint32_t>>& terms, uint64_t mod) {
    if (n_out == 0) return;
    std::vector<uint64_t> acc(n_out, 0);
    accumulate_block(in, n_in, acc.data(), 0, n_out, terms, mod);
    for (size_t i = 0; i < n_out; ++i) out[i] = static_cast<uint32_t>(acc[i] % mod);
}

void convolve_mod_parallel(const uint32_t* in, size_t n_in, uint32_t* out, size_t n_out,
                           const std::vector<std::pair<int64_t, uint32_t>>& terms, uint64_t mod) {
    if (n_out == 0) return;
    const size_t block = 1 << 15;
    const size_t n_blocks = (n_out + block - 1) / block;
    int threads = default_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (size_t b = 0; b < n_blocks; ++b) {
        size_t lo = b * block, hi = std::min(n_out, lo + block);
        std::vector<uint64_t> acc(hi - lo, 0);
        accumulate_block(in, n_in, acc.data(), lo, hi, terms, mod);
        for (size_t i = lo; i < hi; ++i) out[i] = static_cast<uint32_t>(acc[i - lo] % mod);
    }
    (void)threads;
}

namespace {

void mpz_block(const mpz_class* in, size_t n_in, mpz_class* out, size_t lo, size_t hi,
               const std::vector<std::pair<int64_t, mpz_class>>& terms) {
    for (size_t i = lo; i < hi; ++i) out[i] = 0;
    for (auto& [shift, c] : terms) {
        if (c == 0) continue;
        int64_t i0 = std::max<int64_t>(lo, shift);
        int64_t i1 = std::min<int64_t>(hi, shift + static_cast<int64_t>(n_in));
        for (int64_t i = i0; i < i1; ++i) mpz_addmul(out[i].get_mpz_t(), c.get_mpz_t(), in[i - shift].get_mpz_t());
    }
}

} // namespace

void convolve_mpz_serial(const mpz_class* in, size_t n_in, mpz_class* out, size_t n_out,
                         const std::vector<std::pair<int64_t, mpz_class>>& terms) {
    mpz_block(in, n_in, out, 0, n_out, terms);
}

void convolve_mpz_parallel(const mpz_class* in, size_t n_in, mpz_class* out, size_t n_out,
                           const std::vector<std::pair<int64_t, mpz_class>>& terms) {
    if (n_out == 0) return;
    const size_t block = 1 << 13;
    const size_t n_blocks = (n_out + block - 1) / block;
    int threads = default_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (size_t b = 0; b < n_blocks; ++b) {
        size_t lo = b * block, hi = std::min(n_out, lo + block);
        mpz_block(in, n_in, out, lo, hi, terms);
    }
    (void)threads;
}

} // namespace etaq::kernels
