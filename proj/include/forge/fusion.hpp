// SPDX-License-Identifier: Apache-2.0
/**
 * @file fusion.hpp
 * @brief The fusion ring of A(p,q): closed-form structure constants and two
 *        independent multiplicity oracles.
 *
 * The tensor product of two simple A(p,q)-modules decomposes into simples
 * again (the algebra is semisimple), and the multiplicities follow a short
 * closed form over the label families T, U, V, W.  Writing labels as in
 * rep.hpp and all index arithmetic mod q (z/e indices) or mod p
 * (y-parameters), the rules are:
 *
 *   T(a,b) T(a',b')   = T(a+a', b+b')
 *   T(a,b) U(a',b')   = U(a+a', b')
 *   T(a,b) V(a',b',c') = V(a', a+b', t^a c')
 *   T(a,b) W(a',b',c') = W(a+a', a+b', b+c')
 *   U(a,b) U(a',b')   = sum over s in Z_q of U(a+a', tau_s) with
 *                       tau_s = b t^{a'} + b' t^s, where a vanishing tau_s
 *                       (at most one) is replaced by sum over r of T(a+a', r)
 *   U(a,b) V(a',b',c') = sum over s of V(a', a+b', t^a (c' + b t^{b'+s}))
 *   U(a,b) W(a',b',c') = sum over s of W(a+a', a+b', s)
 *   V(a,b,c) V(a',b',c') = sum over s of V(sigma_s, b+b', kappa_s) with
 *                       sigma_s = a + a' t^{s+b},  kappa_s = c t^{b'} + c' t^{-s};
 *                       a vanishing sigma_{s0} (at most one) contributes
 *                       instead sum over r of T(b+b', r) if kappa_{s0} = 0,
 *                       else U(b+b', kappa_{s0})
 *   V(a,b,c) W(a',b',c') = sum over s of W(b+a', b+b', s)
 *   W(a,b,c) W(a',b',c') = sum over s of m W(a+a', b+b', s) plus one extra
 *                       W(a+a', b+b', c+c')        when a+a' != b+b',
 *                     = T(a+a', c+c') + sum over r of U(a+a', beta^r)
 *                       + sum over r, s of V(beta^r, a+a', s)
 *                                                  when a+a' == b+b'
 *
 * (products in the reverse family order follow by commutativity, which the
 * oracle-level checks verify independently).  Labels produced by the rules
 * are canonicalized through label_index, so the V/U re-indexing equivalences
 * certified in check_simples are what makes the table well defined.
 *
 * Nothing here *trusts* the closed form: verify_fusion compares it against
 * two module-level oracles that do not know the rules,
 *
 *  - the integral-trace oracle: with Lambda the two-sided integral of A
 *    (counit 1), the multiplicity of X_c in X_a (x) X_b is the trace of
 *    Lambda on Hom(X_a (x) X_b, X_c), i.e.
 *        sum over Delta(Lambda) = sum Lambda_1 (x) Lambda_2 of
 *            tr_{a(x)b}(S(Lambda_1)) tr_c(Lambda_2),
 *    evaluated with exact cyclotomic arithmetic; the result is required to
 *    be a nonnegative rational integer (a built-in certificate, since a
 *    wrong integral or trace table has no reason to produce integers);
 *
 *  - the intertwiner oracle: dim Hom(X_a (x) X_b, X_c) by eliminating the
 *    weight-slot constraint system of rep.hpp, either fully exactly (small
 *    tensors) or over F_p with the dimension-sum certificate
 *        sum over c of hom(c) dim(c) = dim(a) dim(b),
 *    which pins every modular upper bound to the exact value.
 *
 * The integral itself is constructed, not assumed: Lambda is the projection
 * of (integral functional of the extension) (x) (integral of the extension)
 * and is certified by its counit and two-sided invariance h Lambda =
 * counit(h) Lambda (exact samples plus a full scan over F_p).
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/rep.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// Closed form
// ---------------------------------------------------------------------------

/// The fusion ring on the canonical simple labels: N[a][b][c] is the
/// multiplicity of labels[c] in labels[a] (x) labels[b].
struct FusionRing {
    ApqParams P;
    std::vector<SimpleLabel> labels;
    std::vector<long> dims;
    std::vector<std::vector<std::vector<long>>> N;

    long rank() const { return (long)labels.size(); }
};

/// Multiplicity vector of a (x) b from the closed-form rules.  When branch
/// is given it receives a short name of the rule branch that fired ("tt",
/// "uu_generic", "uu_split", "vv_generic", "vv_split_t", "vv_split_u",
/// "ww_generic", "ww_split", ...), which the verification layer uses to pin
/// one directed test per branch.
std::vector<long> fusion_closed_form(const ApqParams& P, const SimpleLabel& a,
                                     const SimpleLabel& b,
                                     std::string* branch = nullptr);

/// The full table (rank^2 closed-form products).
FusionRing fusion_table(const ApqParams& P);

/// Ring-level axioms of the table: unit row and column, nonnegativity,
/// the dimension homomorphism sum_c N[a][b][c] dim(c) = dim(a) dim(b) on
/// every pair, commutativity of the table, and associativity (exhaustive
/// over the one- and q-dimensional T and U labels, seeded samples over the
/// full label set).
Report check_fusion_ring(const FusionRing& R, long assoc_samples = 200,
                         std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Module-level oracles
// ---------------------------------------------------------------------------

/// Decomposition oracles for tensor products of simple modules, built on
/// the constructed quotient and its certified simple list.  Construction
/// builds the two-sided integral of A and its coproduct support; certify()
/// proves the integral properties before the oracle is trusted.
class FusionOracle {
  public:
    explicit FusionOracle(ApqAlgebra& A);

    const SVec& integral() const { return lambda_; }
    const std::vector<SimpleRep>& simples() const { return simples_; }
    RepTables& tables(size_t i) { return tabs_[i]; }

    /// Certifies the integral: counit 1 exactly; h Lambda = counit(h) Lambda
    /// and Lambda h = counit(h) Lambda on seeded exact basis samples and,
    /// through mq, on every basis element over F_p.
    Report certify(ModQuotient* mq, long samples = 25, std::uint64_t seed = 1);

    /// Integral-trace multiplicities of a (x) b against every simple.
    /// Exact cyclotomic evaluation; throws std::logic_error if any value
    /// fails to be a nonnegative rational integer.
    std::vector<long> decompose(const SimpleLabel& a, const SimpleLabel& b);

    /// Intertwiner-dimension multiplicities over F_p with the dimension-sum
    /// exactness certificate; throws std::logic_error if the certificate
    /// fails (so a returned vector is exact, not heuristic).
    std::vector<long> decompose_intertwiner(const SimpleLabel& a,
                                            const SimpleLabel& b,
                                            const ModCtx& ctx);

    /// Fully exact intertwiner dimensions (practical for small tensor
    /// products); also checks the dimension-sum identity.
    std::vector<long> decompose_intertwiner_exact(const SimpleLabel& a,
                                                  const SimpleLabel& b);

  private:
    ApqAlgebra* A_;
    std::vector<SimpleRep> simples_;
    std::vector<RepTables> tabs_;
    SVec lambda_;  ///< two-sided integral, counit 1
    SVec dpairs_;  ///< Delta(lambda) in tensor coordinates
};

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct FusionVerifyOptions {
    long samples = 40;       ///< seeded random pairs, closed form vs oracles
    long comm_samples = 8;   ///< of those, re-decomposed in reversed order
    long tensor_samples = 5; ///< sampled coproduct-vs-Kronecker identities
    std::uint64_t seed = 1;
    bool directed = true;    ///< one pinned pair per closed-form rule branch
    /// Tensor dimension bound up to which the fully exact intertwiner route
    /// runs on the directed pairs (on top of the certified modular route).
    long exact_hom_limit = 9;
};

/// End-to-end verification of the fusion ring:
///   - the integral certificate (FusionOracle::certify);
///   - tensor-action compatibility: on sampled pairs and basis elements,
///     the monomial tensor action equals the coproduct contraction
///     sum Delta(r) of rho_a (x) rho_b, as dense matrices, exactly;
///   - on seeded sampled pairs and on one directed pair per closed-form
///     branch: closed form vs integral-trace oracle vs certified
///     intertwiner oracle (and, on small directed tensors, the fully exact
///     intertwiner route), all values equal;
///   - oracle-level commutativity on reversed sampled pairs;
///   - every rule branch is hit by some directed pair.
/// The modular tiers need mq; with nullptr they are recorded as skipped.
Report verify_fusion(ApqAlgebra& A, FusionOracle& O, const FusionRing& R,
                     ModQuotient* mq, const FusionVerifyOptions& opts = {});

}  // namespace forge
