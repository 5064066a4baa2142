#include "etaq/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

namespace {

size_t slot_count(int64_t lead, int64_t prec) {
    return prec >= lead ? static_cast<size_t>((prec - lead) / 24 + 1) : 0;
}

// smallest n >= bound with n = residue (mod 24)
int64_t first_in_class(int64_t bound, int residue) { return first_congruent(bound, residue, 24); }

} // namespace

EtaQuotient::EtaQuotient(std::vector<std::pair<int64_t, int64_t>> f, uint64_t N) : level(N) {
    if (N == 0) fail(errc::invalid_argument, "eta quotient level must be positive");
    std::map<int64_t, int64_t> merged;
    for (auto [d, r] : f) {
        if (d < 1) fail(errc::invalid_argument, "eta factor d must be >= 1");
        if (static_cast<uint64_t>(N) % static_cast<uint64_t>(d) != 0)
            fail(errc::invalid_argument, "eta factor d = " + std::to_string(d) + " does not divide the level");
        merged[d] += r;
    }
    for (auto [d, r] : merged)
        if (r != 0) factors.emplace_back(d, r);
}

int64_t EtaQuotient::lead_exponent() const {
    int64_t s = 0;
    for (auto [d, r] : factors) s += d * r;
    return s;
}

int EtaQuotient::residue() const { return static_cast<int>(imod(lead_exponent(), 24)); }

int64_t EtaQuotient::weight_times_two() const {
    int64_t s = 0;
    for (auto [d, r] : factors) s += r;
    return s;
}

GradedSeries::GradedSeries(const CoeffRing& ring, int residue, int64_t lead, int64_t prec)
    : ring_(ring), residue_(residue), lead_(lead), prec_(prec) {
    if (residue < 0 || residue >= 24 || imod(lead, 24) != residue)
        fail(errc::invalid_argument, "graded series lead must match its residue class");
    slots_ = slot_count(lead_, prec_);
    if (ring_.is_exact())
        edata_.assign(slots_ * ring_.degree(), mpz_class(0));
    else
        mdata_.assign(slots_, 0);
}

GradedSeries GradedSeries::zero(const CoeffRing& ring, int residue, int64_t prec) {
    return GradedSeries(ring, residue, first_in_class(1, residue), prec);
}

RingElement GradedSeries::at(int64_t n) const {
    RingElement z = ring_.zero();
    if (n < lead_ || n > prec_) return z;
    int64_t d = n - lead_;
    if (d % 24) return z;
    size_t i = static_cast<size_t>(d / 24);
    if (ring_.is_exact()) {
        uint32_t deg = ring_.degree();
        for (uint32_t k = 0; k < deg; ++k) z.c[k] = edata_[i * deg + k];
    } else {
        z.c[0] = static_cast<unsigned long>(mdata_[i]);
    }
    return z;
}

void GradedSeries::set(int64_t n, const RingElement& v) {
    if (n < lead_ || n > prec_ || (n - lead_) % 24)
        fail(errc::invalid_argument, "set: index outside stored class range");
    size_t i = static_cast<size_t>((n - lead_) / 24);
    if (ring_.is_exact()) {
        uint32_t deg = ring_.degree();
        for (uint32_t k = 0; k < deg; ++k) edata_[i * deg + k] = v.c[k];
    } else {
        mdata_[i] = static_cast<uint32_t>(mpz_fdiv_ui(v.c[0].get_mpz_t(), ring_.modulus()));
    }
}

void GradedSeries::set_mod(int64_t n, uint32_t v) {
    if (n < lead_ || n > prec_ || (n - lead_) % 24)
        fail(errc::invalid_argument, "set_mod: index outside stored class range");
    mdata_[static_cast<size_t>((n - lead_) / 24)] = v;
}

bool GradedSeries::is_zero() const {
    if (ring_.is_exact())
        return std::all_of(edata_.begin(), edata_.end(), [](const mpz_class& x) { return x == 0; });
    return std::all_of(mdata_.begin(), mdata_.end(), [](uint32_t x) { return x == 0; });
}

bool GradedSeries::same_shape(const GradedSeries& o) const {
    return ring_ == o.ring_ && residue_ == o.residue_;
}

bool GradedSeries::agrees_with(const GradedSeries& o) const {
    if (!same_shape(o)) return false;
    int64_t hi = std::min(prec_, o.prec_);
    for (int64_t n = std::min(lead_, o.lead_); n <= hi; n += 24)
        if (!(at(n) == o.at(n))) return false;
    return true;
}

GradedSeries GradedSeries::truncated(int64_t new_prec) const {
    if (new_prec > prec_) fail(errc::precision_underflow, "cannot extend a truncated series");
    GradedSeries out(ring_, residue_, lead_, new_prec);
    if (ring_.is_exact())
        std::copy_n(edata_.begin(), out.slots_ * ring_.degree(), out.edata_.begin());
    else
        std::copy_n(mdata_.begin(), out.slots_, out.mdata_.begin());
    return out;
}

IntegerSeries::IntegerSeries(const CoeffRing& ring, int64_t prec) : ring_(ring), prec_(prec) {
    size_t n = prec >= 1 ? static_cast<size_t>(prec) : 0;
    if (ring_.is_exact())
        edata_.assign(n * ring_.degree(), mpz_class(0));
    else
        mdata_.assign(n, 0);
}

RingElement IntegerSeries::at(int64_t n) const {
    RingElement z = ring_.zero();
    if (n < 1 || n > prec_) return z;
    size_t i = static_cast<size_t>(n - 1);
    if (ring_.is_exact()) {
        uint32_t deg = ring_.degree();
        for (uint32_t k = 0; k < deg; ++k) z.c[k] = edata_[i * deg + k];
    } else {
        z.c[0] = static_cast<unsigned long>(mdata_[i]);
    }
    return z;
}

void IntegerSeries::set(int64_t n, const RingElement& v) {
    if (n < 1 || n > prec_) fail(errc::invalid_argument, "set: index outside range");
    size_t i = static_cast<size_t>(n - 1);
    if (ring_.is_exact()) {
        uint32_t deg = ring_.degree();
        for (uint32_t k = 0; k < deg; ++k) edata_[i * deg + k] = v.c[k];
    } else {
        mdata_[i] = static_cast<uint32_t>(mpz_fdiv_ui(v.c[0].get_mpz_t(), ring_.modulus()));
    }
}

void IntegerSeries::set_mod(int64_t n, uint32_t v) {
    if (n < 1 || n > prec_) fail(errc::invalid_argument, "set_mod: index outside range");
    mdata_[static_cast<size_t>(n - 1)] = v;
}

bool IntegerSeries::is_zero() const {
    if (ring_.is_exact())
        return std::all_of(edata_.begin(), edata_.end(), [](const mpz_class& x) { return x == 0; });
    return std::all_of(mdata_.begin(), mdata_.end(), [](uint32_t x) { return x == 0; });
}

bool IntegerSeries::agrees_with(const IntegerSeries& o) const {
    if (!(ring_ == o.ring_)) return false;
    int64_t hi = std::min(prec_, o.prec_);
    for (int64_t n = 1; n <= hi; ++n)
        if (!(at(n) == o.at(n))) return false;
    return true;
}

std::vector<kernels::SparseTerm> eta_sparse_terms(int64_t prec) {
    std::vector<kernels::SparseTerm> t;
    for (int64_t j = 1; j * j <= prec; ++j) {
        if (j % 2 == 0 || j % 3 == 0) continue;
        t.push_back({j * j, kronecker(12, j)});
    }
    return t;
}

std::vector<kernels::SparseTerm> eta3_sparse_terms(int64_t prec) {
    std::vector<kernels::SparseTerm> t;
    for (int64_t j = 1; 3 * j * j <= prec; j += 2) t.push_back({3 * j * j, kronecker(-4, j) * j});
    return t;
}

namespace {

// Materialize a sparse expansion as a dense graded series.
GradedSeries densify(const std::vector<kernels::SparseTerm>& terms, int64_t lead, int64_t prec,
                     const CoeffRing& ring) {
    GradedSeries out(ring, static_cast<int>(imod(lead, 24)), lead, prec);
    for (auto& t : terms) {
        if (t.idx > prec) continue;
        out.set(t.idx, ring.from_int(static_cast<long>(t.coeff)));
    }
    return out;
}

uint32_t reduce_long(int64_t v, uint64_t mod) {
    int64_t r = v % static_cast<int64_t>(mod);
    if (r < 0) r += static_cast<int64_t>(mod);
    return static_cast<uint32_t>(r);
}

// dense * sparse convolution on graded series, capped at `cap`
GradedSeries convolve_graded(const GradedSeries& in, const std::vector<kernels::SparseTerm>& f_terms,
                             int64_t f_lead, int64_t f_prec, int64_t cap) {
    const CoeffRing& ring = in.ring();
    int64_t lead = in.lead() + f_lead;
    int64_t prec = std::min({cap, in.prec() + f_lead, f_prec + in.lead()});
    GradedSeries out(ring, static_cast<int>(imod(lead, 24)), lead, prec);
    if (out.slots() == 0) return out;
    if (ring.is_exact()) {
        std::vector<std::pair<int64_t, mpz_class>> terms;
        terms.reserve(f_terms.size());
        for (auto& t : f_terms) terms.emplace_back((t.idx - f_lead) / 24, mpz_class(static_cast<long>(t.coeff)));
        kernels::convolve_mpz_parallel(in.exact_data().data(), in.slots(), out.exact_data().data(), out.slots(),
                                       terms);
    } else {
        std::vector<std::pair<int64_t, uint32_t>> terms;
        terms.reserve(f_terms.size());
        for (auto& t : f_terms) terms.emplace_back((t.idx - f_lead) / 24, reduce_long(t.coeff, ring.modulus()));
        kernels::convolve_mod_parallel(in.mod_data().data(), in.slots(), out.mod_data().data(), out.slots(), terms,
                                       ring.modulus());
    }
    return out;
}

// scatter product of two sparse factors into a dense graded series
GradedSeries scatter_graded(const std::vector<kernels::SparseTerm>& a, int64_t a_lead,
                            const std::vector<kernels::SparseTerm>& b, int64_t b_lead, int64_t prec,
                            const CoeffRing& ring) {
    int64_t lead = a_lead + b_lead;
    GradedSeries out(ring, static_cast<int>(imod(lead, 24)), lead, prec);
    if (ring.is_exact()) {
        auto* d = out.exact_data().data();
        for (auto& ta : a) {
            if (ta.idx + b_lead > prec) continue;
            for (auto& tb : b) {
                int64_t n = ta.idx + tb.idx;
                if (n > prec) break;
                d[(n - lead) / 24] += ta.coeff * tb.coeff;
            }
        }
    } else {
        uint64_t mod = ring.modulus();
        auto* d = out.mod_data().data();
        for (auto& ta : a) {
            if (ta.idx + b_lead > prec) continue;
            for (auto& tb : b) {
                int64_t n = ta.idx + tb.idx;
                if (n > prec) break;
                auto& cell = d[(n - lead) / 24];
                cell = static_cast<uint32_t>((cell + uint64_t(reduce_long(ta.coeff, mod)) * reduce_long(tb.coeff, mod)) %
                                             mod);
            }
        }
    }
    return out;
}

} // namespace

GradedSeries eta_expansion(int64_t prec, const CoeffRing& ring) {
    if (prec < 1) fail(errc::invalid_argument, "eta_expansion needs prec >= 1");
    return densify(eta_sparse_terms(prec), 1, prec, ring);
}

GradedSeries eta_power_expansion(int64_t r, int64_t prec, const CoeffRing& ring) {
    if (r < 1) fail(errc::invalid_argument, "eta_power_expansion needs r >= 1");
    if (prec < r) fail(errc::precision_underflow, "prec below leading exponent of eta^r");
    int64_t t3 = r / 3, t1 = r % 3;
    auto w1 = eta_sparse_terms(prec);
    auto w3 = eta3_sparse_terms(prec);
    struct Factor {
        const std::vector<kernels::SparseTerm>* terms;
        int64_t lead;
    };
    std::vector<Factor> fs;
    for (int64_t i = 0; i < t3; ++i) fs.push_back({&w3, 3});
    for (int64_t i = 0; i < t1; ++i) fs.push_back({&w1, 1});
    if (fs.size() == 1) return densify(*fs[0].terms, fs[0].lead, prec, ring);
    GradedSeries acc = scatter_graded(*fs[0].terms, fs[0].lead, *fs[1].terms, fs[1].lead, prec, ring);
    for (size_t i = 2; i < fs.size(); ++i) acc = convolve_graded(acc, *fs[i].terms, fs[i].lead, prec, prec);
    return acc;
}

namespace {

// Pentagonal expansion of prod_n (1 - q^(d n)) in unscaled steps of q^24:
// term exponents d (j^2 - 1)/24 with coefficient (12/j).
std::vector<kernels::SparseTerm> euler_factor_terms(int64_t d, int64_t max_step) {
    std::vector<kernels::SparseTerm> t;
    for (int64_t j = 1;; ++j) {
        if (j % 2 == 0 || j % 3 == 0) continue;
        int64_t u = d * ((j * j - 1) / 24);
        if (u > max_step) break;
        t.push_back({u, kronecker(12, j)});
    }
    return t;
}

// in-place multiply of an unscaled dense array by a sparse polynomial
void mul_sparse_steps(std::vector<mpz_class>& c, const std::vector<kernels::SparseTerm>& f) {
    std::vector<mpz_class> out(c.size(), mpz_class(0));
    std::vector<std::pair<int64_t, mpz_class>> terms;
    for (auto& t : f) terms.emplace_back(t.idx, mpz_class(static_cast<long>(t.coeff)));
    kernels::convolve_mpz_parallel(c.data(), c.size(), out.data(), out.size(), terms);
    c.swap(out);
}

void mul_sparse_steps_mod(std::vector<uint32_t>& c, const std::vector<kernels::SparseTerm>& f, uint64_t mod) {
    std::vector<uint32_t> out(c.size(), 0);
    std::vector<std::pair<int64_t, uint32_t>> terms;
    for (auto& t : f) terms.emplace_back(t.idx, reduce_long(t.coeff, mod));
    kernels::convolve_mod_parallel(c.data(), c.size(), out.data(), out.size(), terms, mod);
    c.swap(out);
}

// in-place divide by a sparse polynomial with constant term 1
void div_sparse_steps(std::vector<mpz_class>& c, const std::vector<kernels::SparseTerm>& f) {
    for (size_t k = 0; k < c.size(); ++k) {
        for (auto& t : f) {
            if (t.idx == 0) continue;
            if (t.idx > static_cast<int64_t>(k)) break;
            if (t.coeff > 0)
                mpz_submul_ui(c[k].get_mpz_t(), c[k - t.idx].get_mpz_t(), static_cast<unsigned long>(t.coeff));
            else
                mpz_addmul_ui(c[k].get_mpz_t(), c[k - t.idx].get_mpz_t(), static_cast<unsigned long>(-t.coeff));
        }
    }
}

void div_sparse_steps_mod(std::vector<uint32_t>& c, const std::vector<kernels::SparseTerm>& f, uint64_t mod) {
    for (size_t k = 0; k < c.size(); ++k) {
        int64_t acc = c[k];
        for (auto& t : f) {
            if (t.idx == 0) continue;
            if (t.idx > static_cast<int64_t>(k)) break;
            acc -= t.coeff % static_cast<int64_t>(mod) * c[k - t.idx] % static_cast<int64_t>(mod);
            acc %= static_cast<int64_t>(mod);
        }
        c[k] = reduce_long(acc, mod);
    }
}

} // namespace

GradedSeries eta_quotient_expansion(const EtaQuotient& eq, int64_t prec, const CoeffRing& ring, bool allow_poles) {
    if (eq.factors.size() == 1 && eq.factors[0].first == 1 && eq.factors[0].second >= 1)
        return eta_power_expansion(eq.factors[0].second, prec, ring);
    int64_t L = eq.lead_exponent();
    bool has_negative = std::any_of(eq.factors.begin(), eq.factors.end(), [](auto& f) { return f.second < 0; });
    if (has_negative && L <= 0 && !allow_poles)
        fail(errc::pole_at_infinity, "quotient has a pole at infinity; pass allow_poles");
    if (prec < L) fail(errc::precision_underflow, "requested precision is below the leading exponent");
    int64_t M = (prec - L) / 24; // unscaled step horizon
    size_t len = static_cast<size_t>(M + 1);

    if (ring.is_exact()) {
        std::vector<mpz_class> c(len, mpz_class(0));
        c[0] = 1;
        for (auto [d, r] : eq.factors) {
            auto f = euler_factor_terms(d, M);
            for (int64_t i = 0; i < std::abs(r); ++i) {
                if (r > 0)
                    mul_sparse_steps(c, f);
                else
                    div_sparse_steps(c, f);
            }
        }
        GradedSeries out(ring, static_cast<int>(imod(L, 24)), L, prec);
        if (ring.degree() == 1) {
            for (size_t k = 0; k < len; ++k) out.exact_data()[k] = c[k];
        } else {
            for (size_t k = 0; k < len; ++k) out.set(L + 24 * static_cast<int64_t>(k), ring.from_mpz(c[k]));
        }
        return out;
    }
    std::vector<uint32_t> c(len, 0);
    c[0] = 1;
    for (auto [d, r] : eq.factors) {
        auto f = euler_factor_terms(d, M);
        for (int64_t i = 0; i < std::abs(r); ++i) {
            if (r > 0)
                mul_sparse_steps_mod(c, f, ring.modulus());
            else
                div_sparse_steps_mod(c, f, ring.modulus());
        }
    }
    GradedSeries out(ring, static_cast<int>(imod(L, 24)), L, prec);
    out.mod_data() = std::move(c);
    return out;
}

std::vector<uint32_t> partition_numbers_mod(int64_t n_max, uint64_t mod) {
    std::vector<uint32_t> p(static_cast<size_t>(n_max) + 1, 0);
    p[0] = static_cast<uint32_t>(1 % mod);
    for (int64_t n = 1; n <= n_max; ++n) {
        int64_t acc = 0;
        for (int64_t k = 1;; ++k) {
            int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            int64_t g2 = k * (3 * k + 1) / 2;
            int64_t term = p[n - g1];
            if (g2 <= n) term += p[n - g2];
            acc += (k & 1) ? term : -term;
            acc %= static_cast<int64_t>(mod);
        }
        p[n] = reduce_long(acc, mod);
    }
    return p;
}

std::vector<RingElement> partition_numbers(int64_t n_max, const CoeffRing& ring) {
    if (n_max < 0) fail(errc::invalid_argument, "partition_numbers needs n_max >= 0");
    std::vector<RingElement> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    if (!ring.is_exact()) {
        for (uint32_t v : partition_numbers_mod(n_max, ring.modulus())) {
            RingElement e = ring.zero();
            e.c[0] = static_cast<unsigned long>(v);
            out.push_back(std::move(e));
        }
        return out;
    }
    std::vector<mpz_class> p(static_cast<size_t>(n_max) + 1, mpz_class(0));
    p[0] = 1;
    for (int64_t n = 1; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (int64_t k = 1;; ++k) {
            int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            int64_t g2 = k * (3 * k + 1) / 2;
            mpz_class term = p[n - g1];
            if (g2 <= n) term += p[n - g2];
            if (k & 1)
                acc += term;
            else
                acc -= term;
        }
        p[n] = acc;
    }
    for (auto& v : p) out.push_back(ring.from_mpz(v));
    return out;
}

GradedSeries apply_U(const GradedSeries& f, int64_t m) {
    if (m < 1 || std::gcd(m, int64_t(24)) != 1)
        fail(errc::invalid_argument, "U_m requires m coprime to 24");
    int out_res = static_cast<int>(imod(static_cast<int64_t>(invmod(static_cast<uint64_t>(imod(m, 24)), 24)) *
                                            f.residue(),
                                        24));
    int64_t out_prec = floor_div(f.prec(), m);
    int64_t out_lead = first_in_class(ceil_div(f.lead(), m), out_res);
    GradedSeries out(f.ring(), out_res, out_lead, out_prec);
    for (size_t i = 0; i < out.slots(); ++i) {
        int64_t n = out.index_of_slot(i);
        if (f.ring().is_exact())
            out.set(n, f.at(m * n));
        else
            out.set_mod(n, f.at_mod(m * n));
    }
    return out;
}

GradedSeries apply_V(const GradedSeries& f, int64_t m) {
    if (m < 1) fail(errc::invalid_argument, "V_m requires m >= 1");
    int out_res = static_cast<int>(imod(m * f.residue(), 24));
    GradedSeries out(f.ring(), out_res, m * f.lead(), m * f.prec());
    for (size_t i = 0; i < f.slots(); ++i) {
        int64_t n = f.index_of_slot(i);
        if (f.ring().is_exact())
            out.set(m * n, f.at(n));
        else
            out.set_mod(m * n, f.at_mod(n));
    }
    return out;
}

IntegerSeries apply_V(const IntegerSeries& f, int64_t m) {
    if (m < 1) fail(errc::invalid_argument, "V_m requires m >= 1");
    IntegerSeries out(f.ring(), m * f.prec());
    for (int64_t n = 1; n <= f.prec(); ++n) {
        if (f.ring().is_exact())
            out.set(m * n, f.at(n));
        else
            out.set_mod(m * n, f.at_mod(n));
    }
    return out;
}

namespace {

// collect nonzero slots of the sparser operand as kernel terms
template <typename TermCoeff, typename Fetch>
std::vector<std::pair<int64_t, TermCoeff>> nonzero_terms(size_t slots, Fetch&& fetch) {
    std::vector<std::pair<int64_t, TermCoeff>> t;
    for (size_t i = 0; i < slots; ++i) {
        auto c = fetch(i);
        if (c.second) t.emplace_back(static_cast<int64_t>(i), std::move(c.first));
    }
    return t;
}

} // namespace

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
    if (!(a.ring() == b.ring())) fail(errc::ring_mismatch, "series_mul requires a common ring");
    const CoeffRing& ring = a.ring();
    int res = static_cast<int>(imod(a.residue() + b.residue(), 24));
    int64_t lead = a.lead() + b.lead();
    int64_t prec = std::min(a.prec() + b.lead(), b.prec() + a.lead());
    GradedSeries out(ring, res, lead, prec);
    if (out.slots() == 0) return out;

    if (ring.is_exact() && ring.degree() > 1) {
        // cyclotomic coefficients: schoolbook (reference path, desk scale)
        for (size_t i = 0; i < a.slots(); ++i) {
            int64_t na = a.index_of_slot(i);
            RingElement ca = a.at(na);
            if (ring.is_zero(ca)) continue;
            for (size_t j = 0; j < b.slots(); ++j) {
                int64_t nb = b.index_of_slot(j);
                int64_t n = na + nb;
                if (n > prec) break;
                RingElement cb = b.at(nb);
                if (ring.is_zero(cb)) continue;
                out.set(n, ring.add(out.at(n), ring.mul(ca, cb)));
            }
        }
        return out;
    }

    // pick the operand with fewer nonzero entries as the sparse term list
    auto count_nonzero = [&](const GradedSeries& s) {
        size_t c = 0;
        if (ring.is_exact()) {
            for (auto& x : s.exact_data())
                if (x != 0) ++c;
        } else {
            for (auto x : s.mod_data())
                if (x) ++c;
        }
        return c;
    };
    const GradedSeries& dense = count_nonzero(a) <= count_nonzero(b) ? b : a;
    const GradedSeries& sparse = (&dense == &a) ? b : a;
    // out slot index o (index lead + 24 o) gets sparse slot s * dense slot o - shift
    // with shift = s + (sparse.lead - ... ) all in slot units:
    // index(out) = index(sparse) + index(dense) -> shift_slots = s_slot + 0
    if (ring.is_exact()) {
        auto terms = nonzero_terms<mpz_class>(sparse.slots(), [&](size_t i) {
            const mpz_class& v = sparse.exact_data()[i];
            return std::make_pair(v, v != 0);
        });
        kernels::convolve_mpz_parallel(dense.exact_data().data(), dense.slots(), out.exact_data().data(), out.slots(),
                                       terms);
    } else {
        auto terms = nonzero_terms<uint32_t>(sparse.slots(), [&](size_t i) {
            uint32_t v = sparse.mod_data()[i];
            return std::make_pair(v, v != 0);
        });
        kernels::convolve_mod_parallel(dense.mod_data().data(), dense.slots(), out.mod_data().data(), out.slots(),
                                       terms, ring.modulus());
    }
    return out;
}

IntegerSeries series_mul(const IntegerSeries& a, const IntegerSeries& b) {
    if (!(a.ring() == b.ring())) fail(errc::ring_mismatch, "series_mul requires a common ring");
    const CoeffRing& ring = a.ring();
    int64_t prec = std::min(a.prec() + 1, b.prec() + 1);
    IntegerSeries out(ring, prec);
    if (ring.is_exact() && ring.degree() > 1) {
        for (int64_t i = 1; i <= a.prec(); ++i) {
            RingElement ca = a.at(i);
            if (ring.is_zero(ca)) continue;
            for (int64_t j = 1; i + j <= prec && j <= b.prec(); ++j) {
                RingElement cb = b.at(j);
                if (ring.is_zero(cb)) continue;
                out.set(i + j, ring.add(out.at(i + j), ring.mul(ca, cb)));
            }
        }
        return out;
    }
    // out slot n-1, in slot j-1, term shift = i (index of a's coefficient)
    if (ring.is_exact()) {
        std::vector<std::pair<int64_t, mpz_class>> terms;
        for (int64_t i = 1; i <= a.prec(); ++i) {
            RingElement c = a.at(i);
            if (c.c[0] != 0) terms.emplace_back(i, c.c[0]);
        }
        kernels::convolve_mpz_parallel(b.exact_data().data(), static_cast<size_t>(b.prec()), out.exact_data().data(),
                                       static_cast<size_t>(prec), terms);
    } else {
        std::vector<std::pair<int64_t, uint32_t>> terms;
        for (int64_t i = 1; i <= a.prec(); ++i) {
            uint32_t c = a.at_mod(i);
            if (c) terms.emplace_back(i, c);
        }
        kernels::convolve_mod_parallel(b.mod_data().data(), static_cast<size_t>(b.prec()), out.mod_data().data(),
                                       static_cast<size_t>(prec), terms, ring.modulus());
    }
    return out;
}

GradedSeries scalar_mul(const GradedSeries& a, const RingElement& c) {
    GradedSeries out(a.ring(), a.residue(), a.lead(), a.prec());
    for (size_t i = 0; i < a.slots(); ++i) {
        int64_t n = a.index_of_slot(i);
        out.set(n, a.ring().mul(a.at(n), c));
    }
    return out;
}

GradedSeries reduce_series(const GradedSeries& a, const CoeffRing& mod_ring) {
    if (!a.ring().is_exact() || mod_ring.is_exact()) fail(errc::ring_mismatch, "reduce_series: exact -> mod only");
    GradedSeries out(mod_ring, a.residue(), a.lead(), a.prec());
    if (a.ring().degree() == 1) {
        uint64_t mod = mod_ring.modulus();
        for (size_t i = 0; i < a.slots(); ++i)
            out.mod_data()[i] = static_cast<uint32_t>(mpz_fdiv_ui(a.exact_data()[i].get_mpz_t(), mod));
        return out;
    }
    for (size_t i = 0; i < a.slots(); ++i) {
        int64_t n = a.index_of_slot(i);
        out.set(n, mod_ring.reduce_from_exact(a.at(n), a.ring()));
    }
    return out;
}

IntegerSeries reduce_series(const IntegerSeries& a, const CoeffRing& mod_ring) {
    if (!a.ring().is_exact() || mod_ring.is_exact()) fail(errc::ring_mismatch, "reduce_series: exact -> mod only");
    IntegerSeries out(mod_ring, a.prec());
    for (int64_t n = 1; n <= a.prec(); ++n) out.set(n, mod_ring.reduce_from_exact(a.at(n), a.ring()));
    return out;
}

} // namespace etaq
