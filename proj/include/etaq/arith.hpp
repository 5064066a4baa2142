#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace etaq {

/// Extended quadratic symbol (a/b) with the standard Kronecker conventions:
/// totally multiplicative in b, (a/1) = 1, (a/2) determined by a mod 8,
/// (a/-1) = -1 iff a < 0, (a/0) = 1 iff a = +-1.  Total function.
int kronecker(long long a, long long b);

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m); // throws if gcd(a,m) != 1

/// Deterministic primality for the full uint64 range (Miller-Rabin with a
/// witness set proven complete below 2^64).
bool is_prime(uint64_t n);

/// Factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

uint64_t euler_phi(uint64_t n);
bool is_squarefree(uint64_t n);

/// Least e >= 1 with a^e = 1 mod n; requires gcd(a,n) = 1.
uint64_t mult_order(uint64_t a, uint64_t n);

/// Smallest primitive root mod p^m (p odd prime, cyclic unit group).
uint64_t primitive_root(uint64_t p, uint32_t m = 1);

/// Primes <= limit, ascending.
std::vector<uint64_t> primes_up_to(uint64_t limit);

inline int64_t imod(int64_t x, int64_t n) {
    int64_t r = x % n;
    return r < 0 ? r + n : r;
}

inline int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

inline int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

/// Smallest n >= bound with n = residue (mod m).
inline int64_t first_congruent(int64_t bound, int64_t residue, int64_t m) {
    return bound + imod(residue - bound, m);
}

} // namespace etaq
