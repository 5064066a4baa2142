#pragma once

#include <cstdint>
#include <vector>

#include "etaq/coeff_ring.hpp"
#include "etaq/kernels.hpp"

namespace etaq {

/// Formal product prod_d eta(d z)^{r_d}.  All concrete forms enter as these.
struct EtaQuotient {
    std::vector<std::pair<int64_t, int64_t>> factors; // (d, r_d), d ascending, r_d != 0
    uint64_t level = 1;

    EtaQuotient(std::vector<std::pair<int64_t, int64_t>> f, uint64_t N);
    static EtaQuotient eta_power(int64_t r) { return EtaQuotient({{1, r}}, 1); }

    /// 24-scaled order at infinity, sum d*r_d (may be <= 0 for quotients).
    int64_t lead_exponent() const;
    /// Support class of the expansion, lead_exponent mod 24.
    int residue() const;
    /// Twice the weight, sum r_d.
    int64_t weight_times_two() const;
};

/// Truncated expansion sum a(n) q^(n/24) supported on one class mod 24.
/// Indices run over n = lead, lead+24, ..., all n <= prec guaranteed correct.
/// Storage is dense over the class; residue rings use raw uint32 words so the
/// convolution kernels can stream them.
class GradedSeries {
public:
    GradedSeries(const CoeffRing& ring, int residue, int64_t lead, int64_t prec);
    static GradedSeries zero(const CoeffRing& ring, int residue, int64_t prec);

    const CoeffRing& ring() const { return ring_; }
    int residue() const { return residue_; }
    int64_t lead() const { return lead_; }
    int64_t prec() const { return prec_; }
    size_t slots() const { return slots_; }
    int64_t index_of_slot(size_t i) const { return lead_ + 24 * static_cast<int64_t>(i); }
    bool in_class(int64_t n) const { return ((n - residue_) % 24) == 0; }

    RingElement at(int64_t n) const;
    void set(int64_t n, const RingElement& v);
    uint32_t at_mod(int64_t n) const {
        if (n < lead_ || n > prec_) return 0;
        int64_t d = n - lead_;
        if (d % 24) return 0;
        return mdata_[static_cast<size_t>(d / 24)];
    }
    void set_mod(int64_t n, uint32_t v);

    bool is_zero() const;
    bool same_shape(const GradedSeries& o) const;
    /// Equal ring, residue class, and coefficients on the shared horizon.
    bool agrees_with(const GradedSeries& o) const;
    GradedSeries truncated(int64_t new_prec) const;

    std::vector<uint32_t>& mod_data() { return mdata_; }
    const std::vector<uint32_t>& mod_data() const { return mdata_; }
    std::vector<mpz_class>& exact_data() { return edata_; }
    const std::vector<mpz_class>& exact_data() const { return edata_; }

private:
    CoeffRing ring_;
    int residue_;
    int64_t lead_;
    int64_t prec_;
    size_t slots_;
    std::vector<uint32_t> mdata_;  // Mod rings
    std::vector<mpz_class> edata_; // Exact rings, degree()-strided
};

/// Truncated integer-exponent expansion sum b(n) q^n, n = 1..prec.
class IntegerSeries {
public:
    IntegerSeries(const CoeffRing& ring, int64_t prec);

    const CoeffRing& ring() const { return ring_; }
    int64_t prec() const { return prec_; }

    RingElement at(int64_t n) const;
    void set(int64_t n, const RingElement& v);
    uint32_t at_mod(int64_t n) const {
        if (n < 1 || n > prec_) return 0;
        return mdata_[static_cast<size_t>(n - 1)];
    }
    void set_mod(int64_t n, uint32_t v);

    bool is_zero() const;
    bool agrees_with(const IntegerSeries& o) const;

    std::vector<uint32_t>& mod_data() { return mdata_; }
    const std::vector<uint32_t>& mod_data() const { return mdata_; }
    std::vector<mpz_class>& exact_data() { return edata_; }
    const std::vector<mpz_class>& exact_data() const { return edata_; }

private:
    CoeffRing ring_;
    int64_t prec_;
    std::vector<uint32_t> mdata_;
    std::vector<mpz_class> edata_;
};

/// Pentagonal-number expansion of eta: terms (j^2, (12/j)) for j coprime to 6.
std::vector<kernels::SparseTerm> eta_sparse_terms(int64_t prec);
/// Expansion of eta^3: terms (3 j^2, (-4/j) j) for odd j.
std::vector<kernels::SparseTerm> eta3_sparse_terms(int64_t prec);

GradedSeries eta_expansion(int64_t prec, const CoeffRing& ring);

/// Fast builder for eta^r (r >= 1) using the lacunary eta / eta^3 factors.
GradedSeries eta_power_expansion(int64_t r, int64_t prec, const CoeffRing& ring);

GradedSeries eta_quotient_expansion(const EtaQuotient& eq, int64_t prec, const CoeffRing& ring,
                                    bool allow_poles = false);

/// p(0..n_max) by the Euler pentagonal recurrence.
std::vector<RingElement> partition_numbers(int64_t n_max, const CoeffRing& ring);
/// Residue fast path used by the scanners.
std::vector<uint32_t> partition_numbers_mod(int64_t n_max, uint64_t mod);

GradedSeries apply_U(const GradedSeries& f, int64_t m);
GradedSeries apply_V(const GradedSeries& f, int64_t m);
IntegerSeries apply_V(const IntegerSeries& f, int64_t m);

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
IntegerSeries series_mul(const IntegerSeries& a, const IntegerSeries& b);

GradedSeries scalar_mul(const GradedSeries& a, const RingElement& c);

/// Reduce an exact series into a residue ring.
GradedSeries reduce_series(const GradedSeries& a, const CoeffRing& mod_ring);
IntegerSeries reduce_series(const IntegerSeries& a, const CoeffRing& mod_ring);

} // namespace etaq
