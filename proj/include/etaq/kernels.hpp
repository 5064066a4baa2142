#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace etaq::kernels {

/// Sparse term of a truncated series: 24-scaled exponent and coefficient.
struct SparseTerm {
    int64_t idx;
    int64_t coeff;
};

/// out[i] = sum_t coeff_t * in[i - shift_t]  (terms out of range contribute 0).
/// Residue arithmetic mod `mod` (mod < 2^31).  The parallel kernel must be
/// bit-identical to the serial one for any thread count.
void convolve_mod_serial(const uint32_t* in, size_t n_in, uint32_t* out, size_t n_out,
                         const std::vector<std::pair<int64_t, uint32_t>>& terms, uint64_t mod);
void convolve_mod_parallel(const uint32_t* in, size_t n_in, uint32_t* out, size_t n_out,
                           const std::vector<std::pair<int64_t, uint32_t>>& terms, uint64_t mod);

/// Exact (GMP) variant; serial and block-parallel versions.
void convolve_mpz_serial(const mpz_class* in, size_t n_in, mpz_class* out, size_t n_out,
                         const std::vector<std::pair<int64_t, mpz_class>>& terms);
void convolve_mpz_parallel(const mpz_class* in, size_t n_in, mpz_class* out, size_t n_out,
                           const std::vector<std::pair<int64_t, mpz_class>>& terms);

/// Number of OpenMP threads the parallel kernels will use if `requested` <= 0.
int default_threads();

/// Global knob set by the CLI --threads flag (0 = library default).
void set_thread_count(int n);
int thread_count();

} // namespace etaq::kernels
