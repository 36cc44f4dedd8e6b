// SPDX-License-Identifier: Apache-2.0
#include "forge/numtheory.hpp"

#include <stdexcept>

namespace forge {

long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = (__uint128_t)r * base % m;
        base = (__uint128_t)base * base % m;
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Deterministic witness set for 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = (__uint128_t)x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Exact division of polynomials with integer coefficients: num / den,
// assuming den is monic up to sign and the division is exact.
std::vector<mpz_class> poly_divide_exact(const std::vector<mpz_class>& num,
                                         const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    long dn = (long)num.size() - 1, dd = (long)den.size() - 1;
    if (dd < 0 || den[dd] == 0) throw std::logic_error("poly_divide_exact: bad divisor");
    std::vector<mpz_class> quot(dn - dd + 1, 0);
    for (long k = dn - dd; k >= 0; --k) {
        mpz_class c = rem[k + dd] / den[dd];
        quot[k] = c;
        if (c != 0) {
            for (long j = 0; j <= dd; ++j) rem[k + j] -= c * den[j];
        }
    }
    for (const auto& r : rem) {
        if (r != 0) throw std::logic_error("poly_divide_exact: division not exact");
    }
    return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long N) {
    if (N <= 0) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    // x^N - 1 divided by the product of Phi_d over proper divisors d of N.
    std::vector<mpz_class> num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    for (long d : divisors(N)) {
        if (d == N) continue;
        num = poly_divide_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

std::uint64_t prime_congruent_1_mod(long N, std::uint64_t lower_bound) {
    std::uint64_t p = lower_bound / N * N + 1;
    while (p <= lower_bound || !is_prime_u64(p)) p += N;
    return p;
}

std::uint64_t element_of_order_mod(long N, std::uint64_t p) {
    if ((p - 1) % N != 0) throw std::invalid_argument("element_of_order_mod: N must divide p-1");
    auto pf = prime_factors(N);
    for (std::uint64_t g = 2; g < p; ++g) {
        std::uint64_t cand = pow_mod_u64(g, (p - 1) / N, p);
        if (cand == 1) continue;
        bool full_order = true;
        for (long q : pf) {
            if (pow_mod_u64(cand, N / q, p) == 1) {
                full_order = false;
                break;
            }
        }
        if (full_order) return cand;
    }
    throw std::logic_error("element_of_order_mod: no element found");
}

}  // namespace forge
