// Timing comparison of the serial reference kernels against the OpenMP
// block-parallel ones on the workloads that dominate the congruence scans:
// dense-sparse convolution of eta-power expansions mod ell^m.
//
//   bench_kernels [prec-24-scaled] [mod]
//
// Output: one line per (kernel, pass) with throughput, plus a checksum so
// the two paths can be eyeballed for agreement.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "etaq/kernels.hpp"
#include "etaq/series.hpp"

using namespace etaq;
using Clock = std::chrono::steady_clock;

namespace {

uint64_t checksum(const std::vector<uint32_t>& v) {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) h = (h ^ x) * 1099511628211ull;
    return h;
}

double run(bool parallel, const std::vector<uint32_t>& in, std::vector<uint32_t>& out,
           const std::vector<std::pair<int64_t, uint32_t>>& terms, uint64_t mod) {
    auto t0 = Clock::now();
    if (parallel)
        kernels::convolve_mod_parallel(in.data(), in.size(), out.data(), out.size(), terms, mod);
    else
        kernels::convolve_mod_serial(in.data(), in.size(), out.data(), out.size(), terms, mod);
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int64_t prec = argc > 1 ? std::atoll(argv[1]) : 24ll * 1000 * 1000;
    uint64_t mod = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 11;
    std::printf("dense-sparse convolution, prec %lld (24-scaled), mod %llu, %d threads\n",
                static_cast<long long>(prec), static_cast<unsigned long long>(mod),
                kernels::default_threads());

    // input: dense eta^4 built by scattering; terms: pentagonal expansion of eta
    CoeffRing ring = CoeffRing::residue(mod, 1, 1);
    GradedSeries eta4 = eta_power_expansion(4, prec, ring);
    auto sparse = eta_sparse_terms(prec);
    std::vector<std::pair<int64_t, uint32_t>> terms;
    for (auto& t : sparse)
        terms.emplace_back((t.idx - 1) / 24, static_cast<uint32_t>(t.coeff < 0 ? mod - 1 : 1));

    const auto& in = eta4.mod_data();
    std::vector<uint32_t> out_serial(in.size()), out_parallel(in.size());
    double macs = static_cast<double>(in.size()) * static_cast<double>(terms.size()) * 1e-9;

    double ts = run(false, in, out_serial, terms, mod);
    std::printf("  serial   %8.3fs  %7.2f GMAC/s  checksum %016llx\n", ts, macs / ts,
                static_cast<unsigned long long>(checksum(out_serial)));
    double tp = run(true, in, out_parallel, terms, mod);
    std::printf("  parallel %8.3fs  %7.2f GMAC/s  checksum %016llx\n", tp, macs / tp,
                static_cast<unsigned long long>(checksum(out_parallel)));
    std::printf("  speedup %.2fx, outputs %s\n", ts / tp, out_serial == out_parallel ? "identical" : "DIFFER");
    return out_serial == out_parallel ? 0 : 1;
}
