#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "etaq/coeff_ring.hpp"

namespace etaq {

/// Dirichlet character mod N, stored as exponent data on canonical generators
/// of the unit groups mod the prime-power factors of N.  For odd q^e the
/// generator is the smallest primitive root; the 2^e case uses the standard
/// two-generator description <-1, 5>.
class DirichletCharacter {
public:
    struct Component {
        uint64_t q;         // prime
        uint32_t e;         // q^e || N
        uint64_t q_pow;     // q^e
        uint64_t gen;       // canonical generator (odd q); unused for q = 2
        uint64_t gen_order; // order of gen (phi(q^e) for odd q)
        uint64_t exponent;  // character exponent on gen, in [0, gen_order)
        // q = 2, e >= 3 only: exponent on -1 (the <5>-part lives in the fields above)
        uint64_t sign_exponent = 0;
    };

    static DirichletCharacter trivial(uint64_t N);
    /// The quadratic character n |-> kronecker(n, N) for odd squarefree N > 0.
    static DirichletCharacter quadratic(uint64_t N);
    /// From serialized (q_pow, exponent) pairs; missing factors get exponent 0.
    static DirichletCharacter from_components(uint64_t N, const std::vector<std::pair<uint64_t, uint64_t>>& comps);

    uint64_t modulus() const { return modulus_; }
    uint64_t order() const { return order_; }
    const std::vector<Component>& components() const { return comps_; }
    bool is_trivial() const { return order_ == 1; }
    bool is_real() const { return order_ <= 2; }

    /// Exponent j with psi(n) = zeta_order^j, or nullopt when gcd(n, N) > 1.
    std::optional<uint64_t> eval_exponent(int64_t n) const;
    /// Value as a ring element (ring must admit an order-`order()` root).
    RingElement eval(const CoeffRing& ring, int64_t n) const;
    /// Value of a real character as -1/0/+1; throws for non-real characters.
    int eval_real(int64_t n) const;

    uint64_t conductor() const;
    /// True iff no n has psi(n) = -1.
    bool never_minus_one() const;

    DirichletCharacter squared() const;

    /// Serialized pairs (q_pow, exponent); 2^e (e >= 3) emits [4, sign] + [2^e, exp5].
    std::vector<std::pair<uint64_t, uint64_t>> serialize() const;

    friend DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b);

private:
    DirichletCharacter() = default;
    void recompute_order();

    uint64_t modulus_ = 1;
    uint64_t order_ = 1;
    std::vector<Component> comps_;
};

DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b);
inline DirichletCharacter char_square(const DirichletCharacter& a) { return a.squared(); }

/// Enforce the hypotheses every theorem-facing entry point shares:
/// N odd, squarefree, positive.  Throws HypothesisViolation otherwise.
void require_theorem_modulus(uint64_t N);

} // namespace etaq
