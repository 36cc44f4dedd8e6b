// SPDX-License-Identifier: Apache-2.0
/**
 * @file constructors.hpp
 * @brief Builders for the concrete Hopf algebra families under study.
 *
 * Three constructions feed the rest of the toolkit:
 *
 *  1. bicrossed_product: for a matched pair (G, F) with normalized cocycles
 *     sigma : G x F x F -> U(1) and tau : G x G x F -> U(1), the algebra
 *     k^G # kF on basis e_g # f with
 *
 *       (e_g # f)(e_g' # f') = [g <| f = g'] sigma(g, f, f') e_g # (f f')
 *       Delta(e_g # f) = sum_{g' g'' = g} tau(g', g'', f)
 *                            (e_g' # (g'' |> f)) (x) (e_g'' # f)
 *       eps(e_g # f) = [g = 1],   1 = sum_g e_g # 1
 *       S(e_g # f)   = sigma(g^-1, g|>f, (g|>f)^-1)^-1 tau(g^-1, g, f)^-1
 *                          e_{(g <| f)^-1} # (g |> f)^-1
 *       (e_g # f)^*  = sigma(g, f, f^-1)^-1 e_{g <| f} # f^-1.
 *
 *  2. carry_twisted: the two-parameter-group instance G = Z_p x| Z_q,
 *     F = Z_q = <x>, with (a^i b^j) <| x = b^-1 (a^i b^j) b, trivial |>, and
 *     sigma(a^i b^j, x^m, x^n) = zeta_q^{j * twist * carry(m, n)} where
 *     carry(m, n) = floor((m+n)/q).  The twist = 0 member is the input to
 *     the Drinfel'd-double pipeline.
 *
 *  3. taft: the rank-n Taft algebra on PBW basis x^A g^T (A, T in [0,l)^n)
 *     over a primitive l-th root of unity, with x_i^l = 0, g_i^l = 1,
 *     Delta(g_i) = g_i (x) g_i, Delta(x_i) = x_i (x) 1 + g_i (x) x_i.
 *
 * Structure maps are materialized as full tables (these algebras are small);
 * all axioms are verified independently by check_hopf / check_star.
 */
#pragma once

#include <functional>

#include "forge/group.hpp"
#include "forge/hopf.hpp"

namespace forge {

using Cocycle3 = std::function<Cyc(int, int, int)>;

/// Normalization, both cocycle identities, the mixed sigma-tau compatibility,
/// and |sigma| = |tau| = 1.  Exhaustive over all argument tuples.
Report validate_cocycles(const FieldPtr& F, const MatchedPair& mp, const Cocycle3& sigma,
                         const Cocycle3& tau);

/// The bicrossed product k^G # kF.  Basis index of e_g # f is g * |F| + f.
HopfPtr bicrossed_product(const FieldPtr& F, const MatchedPair& mp, const Cocycle3& sigma,
                          const Cocycle3& tau, bool with_star);

inline int bp_index(const MatchedPair& mp, int g, int f) { return g * mp.F.n + f; }

// ---------------------------------------------------------------------------
// The carry-twisted family on (Z_p x| Z_q, Z_q)
// ---------------------------------------------------------------------------

struct CarryTwisted {
    HopfPtr H;
    MatchedPair mp;
    long p, q, t, twist;
    int b_elt;         // index of b in G
    SVec x_elt;        // group-like sum_g e_g # x
    Functional chi;    // character with chi(e_g # x^m) = [g = b] zeta_q^m
    int idx(int g, int f) const { return bp_index(mp, g, f); }
};

/// Requires p, q prime, t of order q mod p, and q | N for the scalar field.
/// The star structure is attached (the cocycle values are unimodular).
CarryTwisted carry_twisted(const FieldPtr& F, long p, long q, long t, long twist);

// ---------------------------------------------------------------------------
// Rank-n Taft algebras
// ---------------------------------------------------------------------------

struct Taft {
    HopfPtr H;
    long l, rank;
    Cyc zeta;  // the chosen primitive l-th root

    // index of x^A g^T, digits little-endian per generator
    int idx(const std::vector<long>& A, const std::vector<long>& T) const;
    int g_idx(const std::vector<long>& T) const;  // A = 0
    int xi_idx(long i) const;                     // single x_i
    int gi_idx(long i) const;                     // single g_i

    SVec x_elt;      // g_n (= g_{rank}), the group-like entering the quotient
    Functional chi;  // character: chi(g^T) = zeta^{sum T}, chi kills every x
};

/// Requires l >= 2, rank >= 1, l | N for the scalar field.
Taft taft(const FieldPtr& F, long l, long rank);

/// Gaussian binomial [a choose j]_q computed by the Pascal recurrence; used to
/// cross-check the closed form of Delta on powers of the skew generators.
Cyc gauss_binomial(const FieldPtr& F, const Cyc& q, long a, long j);

// ---------------------------------------------------------------------------
// Group algebras and their function algebra duals (small test companions)
// ---------------------------------------------------------------------------

HopfPtr group_algebra(const FieldPtr& F, const FiniteGroup& G);
HopfPtr function_algebra(const FieldPtr& F, const FiniteGroup& G);

}  // namespace forge
