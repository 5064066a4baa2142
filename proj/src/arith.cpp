#include "etaq/arith.hpp"

#include <algorithm>
#include <numeric>

#include "etaq/errors.hpp"

namespace etaq {

int kronecker(long long a, long long b) {
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (b & 1) == 0) return 0;
    int k = 1;
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    int v = 0;
    while ((b & 1) == 0) {
        b >>= 1;
        ++v;
    }
    if (v & 1) {
        // (a/2)^v for odd a: +1 iff a = +-1 mod 8
        long long a8 = a & 7; // two's complement keeps this right for a < 0
        if (a8 == 3 || a8 == 5) k = -k;
    }
    // now b odd positive; reduce a into [0, b)
    a %= b;
    if (a < 0) a += b;
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) {
            long long b8 = b & 7;
            if (b8 == 3 || b8 == 5) k = -k;
        }
        if ((a & 3) == 3 && (b & 3) == 3) k = -k;
        std::swap(a, b);
        a %= b;
    }
    return b == 1 ? k : 0;
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    __uint128_t r = 1, base = a % m;
    while (e) {
        if (e & 1) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<uint64_t>(r);
}

uint64_t invmod(uint64_t a, uint64_t m) {
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
    while (nr != 0) {
        int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) fail(errc::invalid_argument, "invmod: arguments not coprime");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

namespace {

bool miller_rabin(uint64_t n, uint64_t a) {
    if (a % n == 0) return true;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = static_cast<uint64_t>(__uint128_t(x) * x % n);
        if (x == n - 1) return true;
    }
    return false;
}

uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    uint64_t x = 2, y = 2, c = 1;
    for (;;) {
        x = 2;
        y = 2;
        uint64_t d = 1;
        auto f = [&](uint64_t v) { return static_cast<uint64_t>((__uint128_t(v) * v + c) % n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic for n < 3.3e24, in particular for all uint64
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> out;
    if (n <= 1) return out;
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
        }
    }
    for (uint64_t p = 7; p * p <= n && p < 100000; p += 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
        }
    }
    // what remains has no prime factor below 1e5
    std::vector<uint64_t> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        uint64_t v = stack.back();
        stack.pop_back();
        if (is_prime(v)) {
            auto it = std::find_if(out.begin(), out.end(), [&](auto& pe) { return pe.first == v; });
            if (it != out.end())
                ++it->second;
            else
                out.emplace_back(v, 1);
            continue;
        }
        uint64_t d = pollard_rho(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t euler_phi(uint64_t n) {
    if (n == 0) fail(errc::invalid_argument, "euler_phi(0)");
    uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

bool is_squarefree(uint64_t n) {
    if (n == 0) return false;
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

uint64_t mult_order(uint64_t a, uint64_t n) {
    if (n == 0) fail(errc::invalid_argument, "mult_order: modulus 0");
    a %= n;
    if (n == 1) return 1;
    if (std::gcd(a, n) != 1) fail(errc::invalid_argument, "mult_order: gcd(a,n) != 1");
    uint64_t e = euler_phi(n);
    for (auto [p, k] : factorize(e)) {
        (void)k;
        while (e % p == 0 && powmod(a, e / p, n) == 1) e /= p;
    }
    return e;
}

uint64_t primitive_root(uint64_t p, uint32_t m) {
    if (!is_prime(p) || p == 2) fail(errc::invalid_argument, "primitive_root: p must be an odd prime");
    auto fac = factorize(p - 1);
    uint64_t g = 0;
    for (uint64_t c = 2; c < p; ++c) {
        bool ok = true;
        for (auto [q, e] : fac) {
            (void)e;
            if (powmod(c, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = c;
            break;
        }
    }
    if (m == 1) return g;
    // a primitive root mod p^2 is primitive mod every p^m
    uint64_t p2 = p * p;
    if (powmod(g, p - 1, p2) == 1) g += p;
    return g;
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
    std::vector<uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
        }
    }
    return out;
}

} // namespace etaq
