#include "etaq/coeff_ring.hpp"

#include <numeric>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

namespace {

// exact division of monic polynomials over Z, ascending coefficients
std::vector<mpz_class> poly_divexact(const std::vector<mpz_class>& num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    long dn = static_cast<long>(num.size()) - 1, dd = static_cast<long>(den.size()) - 1;
    std::vector<mpz_class> q(dn - dd + 1, 0);
    for (long k = dn; k >= dd; --k) {
        mpz_class coef = rem[k];
        if (coef == 0) continue;
        q[k - dd] = coef;
        for (long j = 0; j <= dd; ++j) rem[k - dd + j] -= coef * den[j];
    }
    return q;
}

} // namespace

std::vector<mpz_class> cyclotomic_polynomial(uint64_t n) {
    if (n == 1) return {mpz_class(-1), mpz_class(1)};
    std::vector<mpz_class> num(n + 1, 0); // x^n - 1
    num[0] = -1;
    num[n] = 1;
    std::vector<mpz_class> acc = num;
    for (uint64_t d = 1; d < n; ++d) {
        if (n % d == 0) acc = poly_divexact(acc, cyclotomic_polynomial(d));
    }
    return acc;
}

CoeffRing CoeffRing::exact(uint64_t root_order) {
    if (root_order == 0) fail(errc::invalid_argument, "root order must be positive");
    CoeffRing r;
    r.mode_ = Mode::Exact;
    r.u_ = root_order;
    if (root_order <= 2) {
        r.degree_ = 1;
    } else {
        r.cyclo_ = cyclotomic_polynomial(root_order);
        r.degree_ = static_cast<uint32_t>(r.cyclo_.size() - 1);
    }
    return r;
}

CoeffRing CoeffRing::residue(uint64_t ell, uint32_t m, uint64_t root_order) {
    if (ell < 5 || !is_prime(ell)) fail(errc::invalid_argument, "residue ring needs a prime ell >= 5");
    if (m == 0) fail(errc::invalid_argument, "residue ring needs m >= 1");
    if (root_order == 0) fail(errc::invalid_argument, "root order must be positive");
    CoeffRing r;
    r.mode_ = Mode::Mod;
    r.ell_ = ell;
    r.m_ = m;
    uint64_t mod = 1;
    for (uint32_t i = 0; i < m; ++i) {
        if (mod > (uint64_t(1) << 31) / ell) fail(errc::invalid_argument, "ell^m too large (must fit 31 bits)");
        mod *= ell;
    }
    r.modulus_ = mod;
    r.u_ = root_order;
    r.degree_ = 1;
    // unit group of Z/ell^m is cyclic of order ell^(m-1)(ell-1)
    uint64_t lambda = (mod / ell) * (ell - 1);
    if (lambda % root_order != 0)
        fail(errc::no_such_root, "no element of order " + std::to_string(root_order) + " in Z/" + std::to_string(ell) +
                                     "^" + std::to_string(m));
    if (root_order == 1) {
        r.zeta_ = 1;
    } else {
        uint64_t g = primitive_root(ell, m);
        r.zeta_ = powmod(g, lambda / root_order, mod);
    }
    return r;
}

bool CoeffRing::operator==(const CoeffRing& o) const {
    return mode_ == o.mode_ && ell_ == o.ell_ && m_ == o.m_ && u_ == o.u_;
}

RingElement CoeffRing::zero() const { return RingElement{std::vector<mpz_class>(degree_, mpz_class(0))}; }

RingElement CoeffRing::one() const {
    RingElement e = zero();
    e.c[0] = 1;
    reduce(e);
    return e;
}

RingElement CoeffRing::from_int(long v) const {
    RingElement e = zero();
    e.c[0] = v;
    reduce(e);
    return e;
}

RingElement CoeffRing::from_mpz(const mpz_class& v) const {
    RingElement e = zero();
    e.c[0] = v;
    reduce(e);
    return e;
}

void CoeffRing::reduce(RingElement& a) const {
    if (mode_ == Mode::Mod) {
        mpz_class m(static_cast<unsigned long>(modulus_));
        a.c[0] %= m;
        if (a.c[0] < 0) a.c[0] += m;
    }
}

RingElement CoeffRing::add(const RingElement& a, const RingElement& b) const {
    RingElement r = zero();
    for (uint32_t i = 0; i < degree_; ++i) r.c[i] = a.c[i] + b.c[i];
    reduce(r);
    return r;
}

RingElement CoeffRing::sub(const RingElement& a, const RingElement& b) const {
    RingElement r = zero();
    for (uint32_t i = 0; i < degree_; ++i) r.c[i] = a.c[i] - b.c[i];
    reduce(r);
    return r;
}

RingElement CoeffRing::neg(const RingElement& a) const {
    RingElement r = zero();
    for (uint32_t i = 0; i < degree_; ++i) r.c[i] = -a.c[i];
    reduce(r);
    return r;
}

RingElement CoeffRing::mul(const RingElement& a, const RingElement& b) const {
    if (degree_ == 1) {
        RingElement r = zero();
        r.c[0] = a.c[0] * b.c[0];
        reduce(r);
        return r;
    }
    std::vector<mpz_class> prod(2 * degree_ - 1, 0);
    for (uint32_t i = 0; i < degree_; ++i) {
        if (a.c[i] == 0) continue;
        for (uint32_t j = 0; j < degree_; ++j) prod[i + j] += a.c[i] * b.c[j];
    }
    // reduce mod monic cyclo_
    for (size_t k = prod.size(); k-- > degree_;) {
        if (prod[k] == 0) continue;
        mpz_class lead = prod[k];
        prod[k] = 0;
        for (uint32_t j = 0; j < degree_; ++j) prod[k - degree_ + j] -= lead * cyclo_[j];
    }
    RingElement r = zero();
    for (uint32_t i = 0; i < degree_; ++i) r.c[i] = prod[i];
    return r;
}

RingElement CoeffRing::pow(const RingElement& a, uint64_t e) const {
    RingElement r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool CoeffRing::is_zero(const RingElement& a) const {
    for (auto& x : a.c)
        if (x != 0) return false;
    return true;
}

bool CoeffRing::eq(const RingElement& a, const RingElement& b) const { return a.c == b.c; }

RingElement CoeffRing::unity_root(uint64_t u) const {
    if (u == 0) fail(errc::invalid_argument, "unity_root(0)");
    if (u == 1) return one();
    if (u == 2) return from_int(-1);
    if (mode_ == Mode::Mod) {
        uint64_t lambda = (modulus_ / ell_) * (ell_ - 1);
        if (lambda % u != 0) fail(errc::no_such_root, "ring has no element of order " + std::to_string(u));
        if (u_ % u == 0) {
            RingElement z = zero();
            z.c[0] = static_cast<unsigned long>(powmod(zeta_, u_ / u, modulus_));
            return z;
        }
        uint64_t g = primitive_root(ell_, m_);
        RingElement z = zero();
        z.c[0] = static_cast<unsigned long>(powmod(g, lambda / u, modulus_));
        return z;
    }
    if (u_ % u != 0) fail(errc::no_such_root, "exact ring contains only " + std::to_string(u_) + "-th roots");
    // zeta_u = x^(u_/u) mod Phi_{u_}
    RingElement x = zero();
    if (degree_ == 1) fail(errc::no_such_root, "exact integer ring has only +-1");
    x.c[1] = 1;
    return pow(x, u_ / u);
}

RingElement CoeffRing::reduce_from_exact(const RingElement& a, const CoeffRing& exact_ring) const {
    if (mode_ != Mode::Mod || exact_ring.mode_ != Mode::Exact) fail(errc::ring_mismatch, "reduce_from_exact modes");
    // evaluate the coordinate polynomial at this ring's root of order exact_ring.u_
    RingElement z = exact_ring.u_ <= 2 ? one() : unity_root(exact_ring.u_);
    RingElement acc = zero();
    RingElement zp = one();
    for (uint32_t i = 0; i < exact_ring.degree_; ++i) {
        if (i) zp = mul(zp, z);
        RingElement term = from_mpz(a.c[i]);
        acc = add(acc, mul(term, zp));
    }
    if (exact_ring.u_ == 2) {
        // representation already folds zeta_2 = -1 into the single coordinate
        acc = from_mpz(a.c[0]);
    }
    return acc;
}

uint64_t CoeffRing::residue_value(const RingElement& a) const {
    if (mode_ != Mode::Mod) fail(errc::ring_mismatch, "residue_value on exact ring");
    return mpz_get_ui(a.c[0].get_mpz_t());
}

std::string CoeffRing::to_string(const RingElement& a) const {
    if (degree_ == 1) return a.c[0].get_str();
    std::string s = "[";
    for (uint32_t i = 0; i < degree_; ++i) {
        if (i) s += ",";
        s += a.c[i].get_str();
    }
    return s + "]";
}

} // namespace etaq
