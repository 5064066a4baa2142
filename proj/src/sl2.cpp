#include "etaq/sl2.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"

namespace etaq {

MatFl::MatFl(uint32_t ell_, int64_t a, int64_t b, int64_t c, int64_t d) : ell(ell_) {
    if (ell < 5 || ell >= (1u << 16) || !is_prime(ell)) fail(errc::invalid_argument, "MatFl needs a prime 5 <= ell < 2^16");
    e = {static_cast<uint32_t>(imod(a, ell)), static_cast<uint32_t>(imod(b, ell)),
         static_cast<uint32_t>(imod(c, ell)), static_cast<uint32_t>(imod(d, ell))};
    if (det() == 0) fail(errc::invalid_argument, "matrix must be invertible");
}

uint32_t MatFl::det() const {
    return static_cast<uint32_t>(imod(static_cast<int64_t>(e[0]) * e[3] - static_cast<int64_t>(e[1]) * e[2], ell));
}

uint32_t MatFl::trace() const { return (e[0] + e[3]) % ell; }

MatFl MatFl::operator*(const MatFl& o) const {
    if (ell != o.ell) fail(errc::modulus_mismatch, "matrix fields differ");
    return MatFl(ell, static_cast<int64_t>(e[0]) * o.e[0] + static_cast<int64_t>(e[1]) * o.e[2],
                 static_cast<int64_t>(e[0]) * o.e[1] + static_cast<int64_t>(e[1]) * o.e[3],
                 static_cast<int64_t>(e[2]) * o.e[0] + static_cast<int64_t>(e[3]) * o.e[2],
                 static_cast<int64_t>(e[2]) * o.e[1] + static_cast<int64_t>(e[3]) * o.e[3]);
}

MatFl MatFl::operator-() const { return MatFl(ell, -(int64_t)e[0], -(int64_t)e[1], -(int64_t)e[2], -(int64_t)e[3]); }

MatFl MatFl::inverse() const {
    uint64_t di = invmod(det(), ell);
    return MatFl(ell, static_cast<int64_t>(di * e[3]), -static_cast<int64_t>(di * e[1]),
                 -static_cast<int64_t>(di * e[2]), static_cast<int64_t>(di * e[0]));
}

uint64_t MatFl::key() const {
    return (uint64_t(e[0]) << 48) | (uint64_t(e[1]) << 32) | (uint64_t(e[2]) << 16) | uint64_t(e[3]);
}

std::pair<uint32_t, uint32_t> char_poly(const MatFl& m) { return {m.trace(), m.det()}; }

bool is_conjugate(const MatFl& a, const MatFl& b) {
    if (a.ell != b.ell) fail(errc::modulus_mismatch, "matrix fields differ");
    if (a.is_scalar() || b.is_scalar()) return a == b;
    return char_poly(a) == char_poly(b);
}

std::vector<MatFl> enumerate_gl2(uint32_t ell) {
    if (ell > 11) fail(errc::feasibility_bound, "GL_2 enumeration gated at ell <= 11");
    std::vector<MatFl> out;
    for (uint32_t a = 0; a < ell; ++a)
        for (uint32_t b = 0; b < ell; ++b)
            for (uint32_t c = 0; c < ell; ++c)
                for (uint32_t d = 0; d < ell; ++d) {
                    if (imod(static_cast<int64_t>(a) * d - static_cast<int64_t>(b) * c, ell) == 0) continue;
                    out.push_back(MatFl(ell, a, b, c, d));
                }
    return out;
}

std::vector<MatFl> enumerate_sl2(uint32_t ell) {
    if (ell > 31) fail(errc::feasibility_bound, "SL_2 enumeration gated at ell <= 31");
    std::vector<MatFl> out;
    for (uint32_t a = 0; a < ell; ++a)
        for (uint32_t b = 0; b < ell; ++b)
            for (uint32_t c = 0; c < ell; ++c)
                for (uint32_t d = 0; d < ell; ++d) {
                    if (imod(static_cast<int64_t>(a) * d - static_cast<int64_t>(b) * c, ell) != 1) continue;
                    out.push_back(MatFl(ell, a, b, c, d));
                }
    return out;
}

std::vector<MatFl> closure(const std::vector<MatFl>& gens) {
    if (gens.empty()) fail(errc::invalid_argument, "closure needs at least one generator");
    uint32_t ell = gens[0].ell;
    std::unordered_set<uint64_t> seen;
    std::vector<MatFl> elems;
    std::queue<MatFl> todo;
    MatFl id = MatFl::identity(ell);
    seen.insert(id.key());
    elems.push_back(id);
    todo.push(id);
    while (!todo.empty()) {
        MatFl cur = todo.front();
        todo.pop();
        for (const auto& g : gens) {
            MatFl nxt = cur * g;
            if (seen.insert(nxt.key()).second) {
                elems.push_back(nxt);
                todo.push(nxt);
            }
        }
    }
    std::sort(elems.begin(), elems.end(), [](const MatFl& x, const MatFl& y) { return x.key() < y.key(); });
    return elems;
}

namespace {

bool contains_sl2(const std::vector<MatFl>& group, uint32_t ell) {
    std::unordered_set<uint64_t> keys;
    for (auto& g : group) keys.insert(g.key());
    for (auto& s : enumerate_sl2(ell))
        if (!keys.count(s.key())) return false;
    return true;
}

} // namespace

bool product_surjectivity(const std::vector<std::vector<MatFl>>& gens, uint32_t ell) {
    if (gens.empty()) fail(errc::invalid_argument, "need at least one generator tuple");
    size_t s = gens[0].size();
    if (s == 0) fail(errc::invalid_argument, "tuples must be nonempty");
    for (auto& t : gens)
        if (t.size() != s) fail(errc::invalid_argument, "generator tuples must share one arity");
    if (ell > 7 || s > 3) fail(errc::feasibility_bound, "product closure gated at ell <= 7, s <= 3");
    for (auto& t : gens)
        for (auto& m : t) {
            if (m.ell != ell) fail(errc::modulus_mismatch, "generator field mismatch");
            if (m.det() != 1) fail(errc::invalid_argument, "generators must lie in SL_2");
        }

    std::vector<MatFl> sl2 = enumerate_sl2(ell);
    const uint32_t n = static_cast<uint32_t>(sl2.size());
    std::unordered_map<uint64_t, uint32_t> index;
    index.reserve(2 * n);
    for (uint32_t i = 0; i < n; ++i) index.emplace(sl2[i].key(), i);
    std::vector<uint32_t> table(static_cast<size_t>(n) * n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = index.at((sl2[i] * sl2[j]).key());

    // generator tuples as index vectors
    std::vector<std::vector<uint32_t>> gidx;
    for (auto& t : gens) {
        std::vector<uint32_t> v;
        for (auto& m : t) v.push_back(index.at(m.key()));
        gidx.push_back(std::move(v));
    }

    uint64_t total = 1;
    for (size_t i = 0; i < s; ++i) total *= n;
    std::vector<bool> seen(total, false);
    std::vector<uint64_t> stack;
    // identity tuple
    uint32_t id = index.at(MatFl::identity(ell).key());
    uint64_t start = 0;
    for (size_t i = 0; i < s; ++i) start = start * n + id;
    seen[start] = true;
    stack.push_back(start);
    uint64_t count = 1;
    std::vector<uint32_t> comp(s), nxt(s);
    while (!stack.empty()) {
        uint64_t cur = stack.back();
        stack.pop_back();
        uint64_t tmp = cur;
        for (size_t i = s; i-- > 0;) {
            comp[i] = static_cast<uint32_t>(tmp % n);
            tmp /= n;
        }
        for (auto& g : gidx) {
            uint64_t code = 0;
            for (size_t i = 0; i < s; ++i) code = code * n + table[static_cast<size_t>(comp[i]) * n + g[i]];
            if (!seen[code]) {
                seen[code] = true;
                ++count;
                stack.push_back(code);
            }
        }
    }
    return count == total;
}

RepTuple RepTuple::make(uint32_t ell, std::vector<std::vector<MatFl>> component_gens,
                        std::vector<uint32_t> det_coset) {
    if (component_gens.empty()) fail(errc::invalid_argument, "RepTuple needs at least one component");
    if (det_coset.empty()) fail(errc::invalid_argument, "determinant coset must be nonempty");
    if (ell > 7) fail(errc::feasibility_bound, "RepTuple exhaustive verification gated at ell <= 7");
    for (auto& gens : component_gens) {
        auto H = closure(gens);
        if (!contains_sl2(H, ell)) fail(errc::hypothesis_violation, "component subgroup does not contain SL_2");
    }
    RepTuple r;
    r.ell = ell;
    r.component_gens = std::move(component_gens);
    r.det_coset = std::move(det_coset);
    return r;
}

std::optional<std::vector<MatFl>> find_sigma(const RepTuple& reps, const MatFl& gamma) {
    if (gamma.det() != 1) fail(errc::invalid_argument, "gamma must lie in SL_2");
    if (gamma.ell != reps.ell) fail(errc::modulus_mismatch, "field mismatch");
    // components conjugate to +-gamma all have determinant 1
    if (std::find(reps.det_coset.begin(), reps.det_coset.end(), 1u) == reps.det_coset.end()) return std::nullopt;
    MatFl neg = -gamma;
    std::vector<MatFl> witness;
    for (auto& gens : reps.component_gens) {
        auto H = closure(gens); // deterministic (sorted) order
        std::optional<MatFl> pick;
        for (auto& x : H) {
            if (x.det() != 1) continue;
            if (is_conjugate(x, gamma) || is_conjugate(x, neg)) {
                pick = x;
                break;
            }
        }
        if (!pick) return std::nullopt; // cannot happen when SL_2 is contained
        witness.push_back(*pick);
    }
    // every witness squares into the class of gamma^2
    MatFl g2 = gamma * gamma;
    for (auto& x : witness)
        if (!is_conjugate(x * x, g2)) fail(errc::not_found, "witness square left the class of gamma^2");
    return witness;
}

RandomSigmaResult find_sigma_randomized(uint32_t ell, const std::vector<std::vector<MatFl>>& component_gens,
                                        const MatFl& gamma, uint64_t seed, uint64_t max_steps) {
    if (gamma.det() != 1) fail(errc::invalid_argument, "gamma must lie in SL_2");
    std::mt19937_64 rng(seed);
    RandomSigmaResult res;
    MatFl neg = -gamma;
    MatFl g2 = gamma * gamma;
    std::vector<MatFl> witness;
    for (auto& gens : component_gens) {
        if (gens.empty()) fail(errc::invalid_argument, "component without generators");
        MatFl cur = MatFl::identity(ell);
        bool found = false;
        for (uint64_t step = 0; step < max_steps; ++step) {
            cur = cur * gens[rng() % gens.size()];
            ++res.steps;
            if (cur.det() == 1 && (is_conjugate(cur, gamma) || is_conjugate(cur, neg))) {
                found = true;
                break;
            }
        }
        if (!found) return res; // witness stays empty
        witness.push_back(cur);
    }
    for (auto& x : witness)
        if (!is_conjugate(x * x, g2)) fail(errc::not_found, "witness square left the class of gamma^2");
    res.witness = std::move(witness);
    return res;
}

} // namespace etaq
