// SPDX-License-Identifier: Apache-2.0
/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_N).
 *
 * A scalar is an element of Q(zeta_N) stored as a vector of exact rationals of
 * length phi(N): the coordinates with respect to the power basis
 * 1, zeta, ..., zeta^{phi(N)-1}, reduced modulo the N-th cyclotomic
 * polynomial.  All operations (including inversion, complex conjugation
 * zeta -> zeta^{-1}, and root-of-unity order computation) are exact; no
 * floating point is used anywhere.
 *
 * One CycField context per conductor N holds the reduction data:
 *   - rows x^k mod Phi_N for k up to 2*phi(N)-2 (used after convolution),
 *   - the reduced coordinates of zeta^k for all 0 <= k < N.
 * Contexts are shared through shared_ptr and cached per N.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace forge {

using Rat = mpq_class;

class CycField {
  public:
    long N;                                   // conductor
    long deg;                                 // phi(N)
    std::vector<mpz_class> phi_poly;          // Phi_N, ascending, length deg+1
    std::vector<std::vector<mpz_class>> red;  // red[k-deg] = x^k mod Phi_N, deg <= k <= 2deg-2
    std::vector<std::vector<mpz_class>> zeta_pow;  // zeta^k reduced, 0 <= k < N

    static std::shared_ptr<const CycField> get(long N);

  private:
    explicit CycField(long N);
};

using FieldPtr = std::shared_ptr<const CycField>;

class Cyc {
  public:
    FieldPtr F;
    std::vector<Rat> c;  // length F->deg (empty only for default-constructed)

    Cyc() = default;
    explicit Cyc(FieldPtr field) : F(std::move(field)), c(F->deg) {}

    static Cyc zero(const FieldPtr& F) { return Cyc(F); }
    static Cyc one(const FieldPtr& F);
    static Cyc rational(const FieldPtr& F, const Rat& q);
    static Cyc integer(const FieldPtr& F, long v);
    // zeta_N^k (k taken mod N, negative allowed)
    static Cyc root(const FieldPtr& F, long k);

    bool is_zero() const;
    bool is_rational() const;  // all coordinates beyond the constant vanish
    Rat rational_part() const { return c.empty() ? Rat(0) : c[0]; }

    Cyc operator-() const;
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    Cyc scaled(const Rat& q) const;
    Cyc inv() const;  // throws std::domain_error on zero
    Cyc operator/(const Cyc& o) const { return *this * o.inv(); }
    Cyc pow(long e) const;  // negative exponents allowed
    Cyc conj() const;       // zeta -> zeta^{-1}
    Cyc galois(long t) const;  // zeta -> zeta^t, requires gcd(t, N) = 1

    // Smallest k in [1, bound] with this^k == 1, or 0 if none.
    // Default bound 2N catches every root of unity of Q(zeta_N).
    long order_of(long bound = -1) const;

    // Re-express in Q(zeta_M) for N | M.
    Cyc promote(const FieldPtr& target) const;

    std::string str() const;
};

// Convenience: c * q for rational q.
inline Cyc operator*(const Cyc& a, const Rat& q) { return a.scaled(q); }

}  // namespace forge
