// SPDX-License-Identifier: Apache-2.0

#include "forge/modp.hpp"

#include "forge/numtheory.hpp"

namespace forge {

ModCtx::ModCtx(const FieldPtr& F, std::uint64_t prime) : p(prime), N(F->N) {
    if (p >= (1ull << 31)) throw std::invalid_argument("ModCtx: prime must be below 2^31");
    if (!is_prime_u64(p)) throw std::invalid_argument("ModCtx: modulus not prime");
    if ((p - 1) % (std::uint64_t)N != 0)
        throw std::invalid_argument("ModCtx: prime not congruent to 1 mod conductor");
    std::uint64_t z = element_of_order_mod(N, p);
    zpow.resize(F->deg);
    std::uint64_t acc = 1;
    for (long k = 0; k < F->deg; ++k) {
        zpow[k] = acc;
        acc = mul(acc, z);
    }
}

ModCtx ModCtx::make(const FieldPtr& F, std::uint64_t lower) {
    return ModCtx(F, prime_congruent_1_mod(F->N, lower));
}

std::uint64_t ModCtx::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t acc = 1;
    a %= p;
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

std::uint64_t ModCtx::inv(std::uint64_t a) const {
    a %= p;
    if (a == 0) throw std::domain_error("ModCtx::inv of zero");
    return pow(a, p - 2);
}

std::uint64_t ModCtx::reduce_rat(const Rat& q) const {
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) throw BadSpecializationPrime("denominator divisible by specialization prime");
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    return mul(num, inv(den));
}

std::uint64_t ModCtx::reduce(const Cyc& x) const {
    if (x.F && x.F->N != N)
        throw std::invalid_argument("ModCtx::reduce: conductor mismatch");
    std::uint64_t acc = 0;
    for (size_t k = 0; k < x.c.size(); ++k) {
        if (sgn(x.c[k]) == 0) continue;
        acc = add(acc, mul(reduce_rat(x.c[k]), zpow[k]));
    }
    return acc;
}

}  // namespace forge
