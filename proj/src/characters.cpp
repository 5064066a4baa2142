#include "etaq/characters.hpp"

#include <algorithm>
#include <numeric>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

namespace {

constexpr uint64_t kMaxEvalModulus = uint64_t(1) << 22;

uint64_t pow_u64(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

void require_theorem_modulus(uint64_t N) {
    if (N == 0 || N % 2 == 0 || !is_squarefree(N))
        fail(errc::hypothesis_violation, "N must be an odd squarefree positive integer, got " + std::to_string(N));
}

DirichletCharacter DirichletCharacter::trivial(uint64_t N) {
    return from_components(N, {});
}

DirichletCharacter DirichletCharacter::quadratic(uint64_t N) {
    require_theorem_modulus(N);
    std::vector<std::pair<uint64_t, uint64_t>> comps;
    for (auto [q, e] : factorize(N)) {
        (void)e;
        comps.emplace_back(q, (q - 1) / 2); // psi(g) = -1 on a primitive root
    }
    return from_components(N, comps);
}

DirichletCharacter DirichletCharacter::from_components(uint64_t N,
                                                       const std::vector<std::pair<uint64_t, uint64_t>>& pairs) {
    if (N == 0) fail(errc::invalid_argument, "character modulus must be positive");
    DirichletCharacter chi;
    chi.modulus_ = N;
    for (auto [q, e] : factorize(N)) {
        Component c;
        c.q = q;
        c.e = e;
        c.q_pow = pow_u64(q, e);
        if (q == 2) {
            if (e == 1) {
                c.gen = 1;
                c.gen_order = 1;
            } else if (e == 2) {
                c.gen = 3;
                c.gen_order = 2;
            } else {
                c.gen = 5;
                c.gen_order = c.q_pow / 4; // order of 5 mod 2^e
            }
        } else {
            c.gen = primitive_root(q, e);
            c.gen_order = c.q_pow / q * (q - 1);
        }
        c.exponent = 0;
        chi.comps_.push_back(c);
    }
    for (auto [q_pow, k] : pairs) {
        bool matched = false;
        for (auto& c : chi.comps_) {
            if (c.q == 2 && c.e >= 3 && q_pow == 4) {
                c.sign_exponent = k % 2;
                matched = true;
                break;
            }
            if (c.q_pow == q_pow) {
                c.exponent = c.gen_order ? k % c.gen_order : 0;
                matched = true;
                break;
            }
        }
        if (!matched)
            fail(errc::invalid_argument,
                 "component modulus " + std::to_string(q_pow) + " does not divide " + std::to_string(N) + " exactly");
    }
    chi.recompute_order();
    return chi;
}

void DirichletCharacter::recompute_order() {
    uint64_t u = 1;
    for (auto& c : comps_) {
        uint64_t o = c.exponent == 0 ? 1 : c.gen_order / std::gcd(c.gen_order, c.exponent);
        u = std::lcm(u, o);
        if (c.sign_exponent) u = std::lcm(u, uint64_t(2));
    }
    order_ = u;
}

std::optional<uint64_t> DirichletCharacter::eval_exponent(int64_t n) const {
    uint64_t u = order_;
    uint64_t total = 0;
    for (auto& c : comps_) {
        uint64_t r = static_cast<uint64_t>(imod(n, static_cast<int64_t>(c.q_pow)));
        if (r % c.q == 0) return std::nullopt; // not a unit
        if (c.exponent == 0 && c.sign_exponent == 0) continue;
        if (c.q_pow > kMaxEvalModulus)
            fail(errc::invalid_argument, "character evaluation modulus too large");
        if (c.q == 2 && c.e >= 3) {
            // write r = (-1)^s 5^t mod 2^e
            uint64_t half = c.gen_order; // 2^(e-2)
            uint64_t x = 1;
            uint64_t t = 0, s = 0;
            bool found = false;
            for (t = 0; t < half; ++t) {
                if (x == r) {
                    s = 0;
                    found = true;
                    break;
                }
                if (c.q_pow - x == r) {
                    s = 1;
                    found = true;
                    break;
                }
                x = x * 5 % c.q_pow;
            }
            if (!found) fail(errc::invalid_argument, "unit decomposition failed");
            if (c.sign_exponent && s) total += u / 2;
            if (c.exponent) {
                uint64_t g = std::gcd(c.gen_order, c.exponent);
                uint64_t o = c.gen_order / g;
                uint64_t x1 = (c.exponent / g) % o * (t % o) % o;
                total += x1 * (u / o);
            }
        } else {
            uint64_t t = 0, x = 1;
            while (x != r) {
                x = static_cast<uint64_t>(__uint128_t(x) * c.gen % c.q_pow);
                if (++t >= c.gen_order) fail(errc::invalid_argument, "discrete log failed");
            }
            uint64_t g = std::gcd(c.gen_order, c.exponent);
            uint64_t o = c.gen_order / g;
            uint64_t x1 = (c.exponent / g) % o * (t % o) % o;
            total += x1 * (u / o);
        }
    }
    return total % u;
}

RingElement DirichletCharacter::eval(const CoeffRing& ring, int64_t n) const {
    auto e = eval_exponent(n);
    if (!e) return ring.zero();
    if (*e == 0) return ring.one();
    RingElement z = ring.unity_root(order_);
    return ring.pow(z, *e);
}

int DirichletCharacter::eval_real(int64_t n) const {
    if (order_ > 2) fail(errc::invalid_argument, "eval_real on non-real character");
    auto e = eval_exponent(n);
    if (!e) return 0;
    return *e == 0 ? 1 : -1;
}

uint64_t DirichletCharacter::conductor() const {
    uint64_t cond = 1;
    for (auto& c : comps_) {
        if (c.q == 2 && c.e >= 3) {
            uint64_t part = 1;
            if (c.exponent != 0) {
                uint64_t g = std::gcd(c.gen_order, c.exponent);
                uint64_t o = c.gen_order / g; // a power of 2, >= 2
                part = 4 * o;
            } else if (c.sign_exponent) {
                part = 4;
            }
            cond *= part;
        } else {
            if (c.exponent == 0) continue;
            uint64_t g = std::gcd(c.gen_order, c.exponent);
            uint64_t o = c.gen_order / g;
            uint32_t a = 0;
            while (o % c.q == 0) o /= c.q, ++a;
            cond *= pow_u64(c.q, a + 1);
        }
    }
    return cond;
}

bool DirichletCharacter::never_minus_one() const {
    if (order_ % 2 == 1) return true;
    // order even: -1 = zeta^(u/2) is always attained, because the value set of
    // a character is the full group of order()-th roots of unity.  Verify
    // exhaustively while the group is small enough to walk.
    uint64_t group_size = 1;
    for (auto& c : comps_) group_size *= c.gen_order * (c.q == 2 && c.e >= 3 ? 2 : 1);
    if (group_size <= (uint64_t(1) << 20)) {
        uint64_t u = order_;
        // walk exponent tuples component by component
        std::vector<uint64_t> steps; // value-exponent increment of one generator step
        std::vector<uint64_t> lens;
        for (auto& c : comps_) {
            {
                uint64_t g = std::gcd(c.gen_order, c.exponent);
                uint64_t o = c.exponent == 0 ? 1 : c.gen_order / g;
                steps.push_back(c.exponent == 0 ? 0 : (c.exponent / g) % o * (u / o) % u);
                lens.push_back(c.gen_order);
            }
            if (c.q == 2 && c.e >= 3) {
                steps.push_back(c.sign_exponent ? u / 2 : 0);
                lens.push_back(2);
            }
        }
        std::vector<uint64_t> idx(lens.size(), 0);
        for (;;) {
            uint64_t tot = 0;
            for (size_t i = 0; i < idx.size(); ++i) tot += idx[i] * steps[i] % u;
            if (tot % u == u / 2) return false;
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == lens[i]) idx[i++] = 0;
            if (i == idx.size()) break;
        }
        return true;
    }
    return false;
}

DirichletCharacter DirichletCharacter::squared() const {
    DirichletCharacter r = *this;
    for (auto& c : r.comps_) {
        c.exponent = c.gen_order ? 2 * c.exponent % c.gen_order : 0;
        c.sign_exponent = 0;
    }
    r.recompute_order();
    return r;
}

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.modulus_ != b.modulus_) fail(errc::modulus_mismatch, "char_mul requires equal moduli");
    DirichletCharacter r = a;
    for (size_t i = 0; i < r.comps_.size(); ++i) {
        auto& c = r.comps_[i];
        auto& d = b.comps_[i];
        c.exponent = c.gen_order ? (c.exponent + d.exponent) % c.gen_order : 0;
        c.sign_exponent = (c.sign_exponent + d.sign_exponent) % 2;
    }
    r.recompute_order();
    return r;
}

std::vector<std::pair<uint64_t, uint64_t>> DirichletCharacter::serialize() const {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (auto& c : comps_) {
        if (c.q == 2 && c.e >= 3) {
            out.emplace_back(4, c.sign_exponent);
            out.emplace_back(c.q_pow, c.exponent);
        } else {
            out.emplace_back(c.q_pow, c.exponent);
        }
    }
    return out;
}

} // namespace etaq
