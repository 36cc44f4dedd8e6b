// SPDX-License-Identifier: Apache-2.0
/**
 * @file numtheory.hpp
 * @brief Elementary number theory helpers: totients, cyclotomic polynomials,
 *        primality, and arithmetic in prime fields used for modular
 *        specialization of exact cyclotomic computations.
 */
#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace forge {

long euler_phi(long n);
std::vector<long> divisors(long n);
std::vector<long> prime_factors(long n);  // distinct primes, ascending
long gcd_long(long a, long b);
// (base^e) mod m for machine integers, m < 2^31.
std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);  // deterministic Miller-Rabin for n < 3.3e24

// Coefficients of the N-th cyclotomic polynomial, ascending degree,
// length phi(N)+1, monic.  Computed by exact division of x^N - 1 by the
// cyclotomic polynomials of the proper divisors of N.
std::vector<mpz_class> cyclotomic_polynomial(long N);

// Smallest prime p ≡ 1 (mod N) with p > lower_bound (lower_bound ≥ 2).
std::uint64_t prime_congruent_1_mod(long N, std::uint64_t lower_bound);

// An element of exact multiplicative order N in Z/p, p prime with N | p-1.
// Deterministic: scans small candidates.
std::uint64_t element_of_order_mod(long N, std::uint64_t p);

}  // namespace forge
