// SPDX-License-Identifier: Apache-2.0
/**
 * @file modp.hpp
 * @brief Specialization of cyclotomic scalars to a prime field F_p.
 *
 * For rank computations on large matrices we map Q(zeta_N) -> F_p by choosing
 * a prime p = 1 (mod N) below 2^31 and sending zeta to a fixed element of
 * multiplicative order N.  This is a ring homomorphism wherever the rational
 * denominators avoid p, so
 *
 *     rank over F_p  <=  rank over Q(zeta_N),
 *
 * and a full-rank result mod p therefore *certifies* full rank exactly.
 * Nullity upper bounds obtained mod p are paired elsewhere with exactly
 * verified null vectors to pin the exact nullity from both sides.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "forge/cyclotomic.hpp"

namespace forge {

/// Thrown when a denominator is divisible by the chosen prime; callers retry
/// with the next prime = 1 (mod N).
struct BadSpecializationPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ModCtx {
  public:
    std::uint64_t p;           // prime, p = 1 (mod N), p < 2^31
    long N;                    // conductor being specialized
    std::vector<std::uint64_t> zpow;  // images of zeta^k for 0 <= k < deg

    ModCtx(const FieldPtr& F, std::uint64_t prime);

    /// First usable prime = 1 (mod N) at or above `lower`.
    static ModCtx make(const FieldPtr& F, std::uint64_t lower = (1u << 30));

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    /// Image of a rational a/b; throws BadSpecializationPrime if p | b.
    std::uint64_t reduce_rat(const Rat& q) const;
    /// Image of a cyclotomic scalar.
    std::uint64_t reduce(const Cyc& x) const;
};

}  // namespace forge
