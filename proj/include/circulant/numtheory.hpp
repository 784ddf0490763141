#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Elementary exact integer arithmetic on desk-scale inputs (m <= ~10^4).
// Everything is based on trial division; no probabilistic shortcuts.

namespace circulant {

/// Deterministic primality by trial division.
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization as (prime, exponent) pairs, ascending primes.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Largest j with p^j dividing m.
inline int p_adic_valuation(std::int64_t m, std::int64_t p) {
    if (m < 1) throw std::invalid_argument("p_adic_valuation: m must be positive");
    if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p must be prime");
    int v = 0;
    while (m % p == 0) { m /= p; ++v; }
    return v;
}

/// Greatest divisor of m coprime to p, i.e. m / p^{v_p(m)}.
inline std::int64_t p_free_part(std::int64_t m, std::int64_t p) {
    if (m < 1) throw std::invalid_argument("p_free_part: m must be positive");
    if (!is_prime(p)) throw std::invalid_argument("p_free_part: p must be prime");
    while (m % p == 0) m /= p;
    return m;
}

/// Euler totient, order of the unit group of Z_m.
inline std::int64_t euler_phi(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
    std::int64_t phi = m;
    for (const auto& [prime, exp] : factorize(m)) {
        phi -= phi / prime;
        (void)exp;
    }
    return phi;
}

/// All divisors of m, ascending, including 1 and m.
inline std::vector<std::int64_t> divisors(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("divisors: m must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((__int128)a * b % m);
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("mod_pow: modulus must be positive");
    if (m == 1) return 0;
    std::int64_t acc = 1;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) acc = mod_mul(acc, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return acc;
}

/// Least t >= 1 with a^t = 1 (mod m). Requires gcd(a, m) = 1; ord_1(a) = 1.
inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("multiplicative_order: m must be positive");
    if (m == 1) return 1;
    a %= m;
    if (a < 0) a += m;
    if (std::gcd(a, m) != 1)
        throw std::invalid_argument("multiplicative_order: a and m are not coprime");
    std::int64_t t = 1;
    std::int64_t x = a;
    while (x != 1) {
        x = mod_mul(x, a, m);
        ++t;
    }
    return t;
}

/// Invariant factors of Z_{orders[0]} x ... x Z_{orders[k-1]}: the unique
/// m_1 | m_2 | ... | m_s with the same product group. Repeated pairwise
/// (gcd, lcm) replacement until the divisibility chain holds; 1-factors are
/// dropped unless the group is trivial.
inline std::vector<std::int64_t> invariant_factors(std::vector<std::int64_t> orders) {
    if (orders.empty())
        throw std::invalid_argument("invariant_factors: order list must be nonempty");
    for (std::int64_t o : orders)
        if (o < 1) throw std::invalid_argument("invariant_factors: orders must be positive");
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            for (std::size_t j = i + 1; j < orders.size(); ++j) {
                std::int64_t g = std::gcd(orders[i], orders[j]);
                if (g != orders[i] && g != orders[j]) {
                    std::int64_t l = orders[i] / g * orders[j];
                    orders[i] = g;
                    orders[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(orders.begin(), orders.end());
    // establish the chain ordering: after the fixpoint each pair divides
    std::erase(orders, 1);
    if (orders.empty()) orders.push_back(1);
    return orders;
}

/// Splits q = p^e with p prime; nullopt if q is not a prime power.
inline std::optional<std::pair<std::int64_t, int>> prime_power_split(std::int64_t q) {
    if (q < 2) return std::nullopt;
    auto factors = factorize(q);
    if (factors.size() != 1) return std::nullopt;
    return std::make_pair(factors[0].first, factors[0].second);
}

}  // namespace circulant
