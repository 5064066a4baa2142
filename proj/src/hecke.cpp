#include "etaq/hecke.hpp"

#include <numeric>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

FormContext::FormContext(uint32_t lambda_, int64_t r_, uint64_t N_, DirichletCharacter psi_, uint64_t ell_,
                         uint32_t m_)
    : lambda(lambda_), r(r_), N(N_), psi(std::move(psi_)), ell(ell_), m(m_) {
    if (lambda == 0) fail(errc::hypothesis_violation, "lambda must be a positive integer");
    if (r % 2 == 0) fail(errc::hypothesis_violation, "r must be odd");
    require_theorem_modulus(N);
    if (r % 3 != 0 && N % 3 == 0) fail(errc::hypothesis_violation, "3 | N requires 3 | r");
    if (ell < 5 || !is_prime(ell)) fail(errc::hypothesis_violation, "ell must be a prime >= 5");
    if (N % ell == 0) fail(errc::hypothesis_violation, "ell must not divide N");
    if (m == 0) fail(errc::hypothesis_violation, "m must be >= 1");
    if (psi.modulus() != N) fail(errc::modulus_mismatch, "psi must be defined mod N");
}

RootOfUnity RootOfUnity::make(uint64_t order, uint64_t exponent) {
    if (order == 0) fail(errc::invalid_argument, "root order must be positive");
    exponent %= order;
    uint64_t g = std::gcd(order, exponent == 0 ? order : exponent);
    return {order / g, exponent / g};
}

RootOfUnity RootOfUnity::times(const RootOfUnity& o) const {
    uint64_t l = std::lcm(order, o.order);
    return make(l, exponent * (l / order) + o.exponent * (l / o.order));
}

int RootOfUnity::sign() const {
    if (order == 1) return 1;
    if (order == 2) return -1;
    fail(errc::invalid_argument, "root of unity is not real");
}

IntegerSeries t_p_integer(const IntegerSeries& f, uint64_t p, uint32_t k, const DirichletCharacter& psi) {
    if (!is_prime(p)) fail(errc::invalid_argument, "T_p needs a prime p");
    if (k == 0 || k % 2) fail(errc::invalid_argument, "T_p needs an even positive weight");
    int64_t out_prec = f.prec() / static_cast<int64_t>(p);
    if (out_prec < 1) fail(errc::precision_underflow, "T_p output precision would be empty");
    const CoeffRing& ring = f.ring();
    IntegerSeries out(ring, out_prec);
    RingElement psip = psi.eval(ring, static_cast<int64_t>(p));
    RingElement pk = ring.pow(ring.from_mpz(mpz_class(static_cast<unsigned long>(p))), k - 1);
    RingElement vc = ring.mul(psip, pk);
    for (int64_t n = 1; n <= out_prec; ++n) {
        RingElement v = f.at(static_cast<int64_t>(p) * n);
        if (n % static_cast<int64_t>(p) == 0)
            v = ring.add(v, ring.mul(vc, f.at(n / static_cast<int64_t>(p))));
        out.set(n, v);
    }
    return out;
}

GradedSeries t_p2_half(const GradedSeries& F, uint64_t p, const FormContext& ctx) {
    if (!is_prime(p) || p < 5) fail(errc::invalid_argument, "T_{p^2} needs a prime p >= 5");
    if (6 * ctx.N % p == 0) fail(errc::invalid_argument, "T_{p^2} needs p coprime to 6N");
    int64_t p2 = static_cast<int64_t>(p) * static_cast<int64_t>(p);
    int64_t out_prec = floor_div(F.prec(), p2);
    if (out_prec < 24) fail(errc::precision_underflow, "T_{p^2} output precision below one residue period");
    const CoeffRing& ring = F.ring();
    // p^2 = 1 mod 24, so the support class is preserved
    int64_t out_lead = first_congruent(ceil_div(F.lead(), p2), F.residue(), 24);
    GradedSeries out(ring, F.residue(), out_lead, out_prec);

    RingElement psip = ctx.psi.eval(ring, static_cast<int64_t>(p));
    RingElement pl = ring.pow(ring.from_mpz(mpz_class(static_cast<unsigned long>(p))), ctx.lambda - 1);
    // (-1/p)^((r-1)/2) psi(p) p^(lambda-1)
    int unit = kronecker(-1, static_cast<long long>(p));
    RingElement mid_base = ring.mul(psip, pl);
    if (((ctx.r - 1) / 2) % 2 != 0 && unit == -1) mid_base = ring.neg(mid_base);
    // psi^2(p) p^(2 lambda - 1)
    RingElement third = ring.mul(ring.mul(psip, psip),
                                 ring.pow(ring.from_mpz(mpz_class(static_cast<unsigned long>(p))), 2 * ctx.lambda - 1));

    for (int64_t n = out.lead(); n <= out_prec; n += 24) {
        RingElement v = F.at(p2 * n);
        int kr = kronecker(12 * n, static_cast<long long>(p));
        if (kr != 0) {
            RingElement t = ring.mul(mid_base, F.at(n));
            v = kr == 1 ? ring.add(v, t) : ring.sub(v, t);
        }
        if (n % p2 == 0) v = ring.add(v, ring.mul(third, F.at(n / p2)));
        out.set(n, v);
    }
    return out;
}

int atkin_lehner_sign(const IntegerSeries& f, uint64_t p, uint32_t k) {
    if (p != 2 && p != 3) fail(errc::invalid_argument, "Atkin-Lehner extraction implemented for p in {2,3}");
    if (!f.ring().is_exact()) fail(errc::invalid_argument, "Atkin-Lehner sign must be extracted in exact arithmetic");
    if (k < 2 || k % 2) fail(errc::invalid_argument, "weight must be even and >= 2");
    RingElement a1 = f.at(1);
    for (size_t i = 1; i < a1.c.size(); ++i)
        if (a1.c[i] != 0) fail(errc::not_normalized, "a(1) is not rational");
    if (a1.c[0] != 1) fail(errc::not_normalized, "a(1) != 1");
    RingElement ap = f.at(static_cast<int64_t>(p));
    for (size_t i = 1; i < ap.c.size(); ++i)
        if (ap.c[i] != 0) fail(errc::not_unit_eigenvalue, "a(p) is not rational");
    // epsilon = -p^(1-k/2) a(p): demand p^(k/2-1) | a(p) with quotient +-1
    mpz_class denom = 1;
    for (uint32_t i = 0; i + 1 < k / 2; ++i) denom *= static_cast<unsigned long>(p);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ap.c[0].get_mpz_t(), denom.get_mpz_t());
    if (r != 0 || (q != 1 && q != -1))
        fail(errc::not_unit_eigenvalue, "-p^(1-k/2) a(p) is not a unit; the form is not new at " + std::to_string(p));
    return q == 1 ? -1 : 1;
}

namespace {

RootOfUnity psi_value_as_root(const DirichletCharacter& psi, int64_t n) {
    auto e = psi.eval_exponent(n);
    if (!e) fail(errc::invalid_argument, "character vanishes at " + std::to_string(n) + "; epsilon undefined");
    return RootOfUnity::make(psi.order(), *e);
}

} // namespace

RootOfUnity epsilon_2(int64_t r, const DirichletCharacter& psi) {
    if (r % 2 == 0) fail(errc::invalid_argument, "r must be odd");
    int64_t g = std::gcd(r < 0 ? -r : r, int64_t(3));
    int kr = kronecker(8, r / g);
    RootOfUnity v = RootOfUnity::minus_one().times(psi_value_as_root(psi, 2));
    if (kr == -1) v = v.times(RootOfUnity::minus_one());
    return v;
}

RootOfUnity epsilon_3(int64_t r, const DirichletCharacter& psi) {
    if (r % 2 == 0) fail(errc::invalid_argument, "r must be odd");
    int kr = kronecker(12, r);
    if (kr == 0) fail(errc::invalid_argument, "epsilon_3 needs 3 coprime to r");
    RootOfUnity v = RootOfUnity::minus_one().times(psi_value_as_root(psi, 3));
    if (kr == -1) v = v.times(RootOfUnity::minus_one());
    return v;
}

int epsilon_2_sign(int64_t r, const DirichletCharacter& psi) { return epsilon_2(r, psi).sign(); }
int epsilon_3_sign(int64_t r, const DirichletCharacter& psi) { return epsilon_3(r, psi).sign(); }

int chi_r(int64_t r, int64_t p) {
    return r % 3 == 0 ? kronecker(-4, p) : kronecker(12, p);
}

} // namespace etaq
