// SPDX-License-Identifier: Apache-2.0
/**
 * @file rep.hpp
 * @brief Simple modules of the bicrossed-double quotient A(p,q).
 *
 * A(p,q) is the quotient of the double of the split abelian extension
 * k^G # k[Z_q] (G = Z_p x| Z_q, untwisted) by its central group-like chi*x
 * of order q.  It has dimension p^2 q^3, carries a star structure, and is
 * generated by
 *
 *   x        the image of the group-like sum_g e_g # x of the extension,
 *   e_g      the images of the indicator idempotents e_g # 1,
 *   y, z_i   the images of the dual-basis sums Y = sum_j E_{a;x^j} and
 *            Z_i = E_{1;x^i} (E_{h;x^j} dual to the basis e_h x^j),
 *
 * with chi = x^{-1} holding in the quotient.  Every double basis coset is a
 * scalar times a word  y^i x^{-j} z_k e_h x^d  in these generators, which is
 * what makes exact module arithmetic cheap: the designated generators act on
 * every simple module by *monomial* matrices (one nonzero per column, scales
 * roots of unity), so the action of any basis element is again monomial and
 * is evaluated by exponent arithmetic.
 *
 * The module provides
 *   - the canonical labels of the p^2 + q^3 - 1 simple modules, in four
 *     families T (dim 1), U (dim q), V (dim q), W (dim p), with the coset
 *     normalization that removes the re-indexing equivalences,
 *   - the presentation certificate: every defining relation, coproduct,
 *     counit, antipode and star formula of the generators holds exactly in
 *     the constructed quotient, and every basis element is an exact
 *     generator word (so the generators provably span),
 *   - construction of the simple modules from their generator monomials and
 *     the word lift of the basis action,
 *   - the certification suite: module axioms against the quotient's own
 *     structure rows (exact samples plus a Freivalds-compressed scan over
 *     F_p of all basis pairs), unitarity, simplicity (End = k), pairwise
 *     non-isomorphism, family counts, sum of squared dimensions, explicit
 *     intertwiners for the label equivalences, and the center dimension.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forge/constructors.hpp"
#include "forge/drinfeld.hpp"
#include "forge/quotient.hpp"

namespace forge {

// ---------------------------------------------------------------------------
// Parameters and simple-module labels
// ---------------------------------------------------------------------------

/// Parameter pack of A(p,q): p, q odd primes with q | p - 1, t of order q
/// mod p, beta a generator of (Z/p)^* with beta^m = t for m = (p-1)/q.
/// The m cosets of <t> in (Z/p)^* are represented by beta^1 .. beta^m.
struct ApqParams {
    long p = 0, q = 0, t = 0, beta = 0, m = 0;
    std::vector<long> tpow;     ///< t^i mod p for 0 <= i < q
    std::vector<long> betapow;  ///< beta^r mod p for 0 <= r <= m

    long tp(long i) const;      ///< t^i mod p, any integer i
    long tinv(long i) const;    ///< t^{-i} mod p
    /// Writes c in (Z/p)^* as rep * t^shift with rep in {beta^1..beta^m};
    /// returns the rep and stores the shift (0 <= shift < q) when asked.
    long coset_rep(long c, long* shift = nullptr) const;
    /// Group element a^i b^j of G = Z_p x| Z_q as a sd_index.
    int g(long i, long j) const;
};

/// Validates the arithmetic conditions and fills the power tables.
ApqParams apq_params(long p, long q, long t, long beta);

enum class Family : char { T = 0, U = 1, V = 2, W = 3 };

/// Canonical label of a simple module.  Index meaning per family:
///   T(a,b):   a = common z/e index in Z_q, b = x-eigenvalue exponent in Z_q.
///   U(a,b):   a = z/e index in Z_q, b = y-parameter in {beta^1..beta^m}.
///   V(a,b,c): a = e-orbit parameter in {beta^1..beta^m}, b = z/e index in
///             Z_q, c = y-parameter in Z_p.
///   W(a,b,c): a = e-side index in Z_q, b = z index in Z_q (a != b),
///             c = x-scale exponent in Z_q.
struct SimpleLabel {
    Family fam = Family::T;
    long a = 0, b = 0, c = 0;

    bool operator==(const SimpleLabel&) const = default;
    std::string str() const;
};

/// Reduces an arbitrary (possibly non-canonical) label: indices are reduced
/// into their ranges and the U/V re-indexing equivalences
///   U(a, b) ~ U(a, b t),   V(a, b, c) ~ V(a t^s, b, c t^{-s})
/// are applied to land the U b-index / V a-index on its coset representative.
SimpleLabel canonical_label(const ApqParams& P, SimpleLabel L);

/// All p^2 + q^3 - 1 canonical labels in the fixed enumeration order
/// (T block, then U, V, W).
std::vector<SimpleLabel> simple_labels(const ApqParams& P);

long simple_dim(const ApqParams& P, const SimpleLabel& L);

/// Position of a canonical label inside simple_labels (canonicalize first).
long label_index(const ApqParams& P, const SimpleLabel& L);

// ---------------------------------------------------------------------------
// Monomial operators
// ---------------------------------------------------------------------------

/// Partial monomial operator on a free module with basis u_0..u_{dim-1}:
/// op(u_c) = zeta_N^{e[c]} u_{to[c]}, or 0 when to[c] == -1.  Products of
/// the generator actions on the simple modules stay in this class, so the
/// action of any basis element of A(p,q) is exponent arithmetic.
struct Mono {
    long dim = 0;
    std::vector<int> to;
    std::vector<long> e;  ///< exponents mod N (ignored where to[c] == -1)
};

Mono mono_id(long dim);
/// Composition a after b (matrix product a * b).
Mono mono_mul(long N, const Mono& a, const Mono& b);
Mono mono_pow(long N, const Mono& a, long k);  ///< k >= 0
/// Conjugate transpose; requires a to be a bijective monomial.
Mono mono_dagger(long N, const Mono& a);
/// Kronecker product (basis order (i,j) -> i * b.dim + j).
Mono mono_kron(long N, const Mono& a, const Mono& b);
bool mono_eq(long N, const Mono& a, const Mono& b);
/// Scales column exponents: zeta_N^k * a.
Mono mono_scale(long N, const Mono& a, long k);
/// Keeps only the columns where keep[c] is true.
Mono mono_filter(const Mono& a, const std::vector<char>& keep);
/// Trace / dense matrix; exponents are roots of order N inside F.
Cyc mono_trace(const FieldPtr& F, const Mono& a, long N);
std::vector<Cyc> mono_dense(const FieldPtr& F, const Mono& a, long N);

// ---------------------------------------------------------------------------
// Simple modules
// ---------------------------------------------------------------------------

/// A simple module, stored through its generator actions: x and y act by
/// invertible monomials; z_l and e_g act diagonally by 0/1 scalars recorded
/// as per-column weights (z_l u_c = [l = zw[c]] u_c, e_g u_c = [g = ew[c]]
/// u_c with g a sd_index into G).
struct SimpleRep {
    SimpleLabel L;
    long dim = 0;
    Mono x, y;
    std::vector<int> zw;
    std::vector<int> ew;
};

/// Builds the simple module of a canonical label from the closed-form
/// family actions.
SimpleRep build_simple(const ApqParams& P, const SimpleLabel& L);

/// All simple modules in label order.
std::vector<SimpleRep> build_simples(const ApqParams& P);

/// Tensor product module a (x) b under the coproduct (column order
/// (ca, cb) -> ca * b.dim + cb).  Because Delta sends each generator to a
/// sum of generator words whose z-legs partition the columns, the tensor
/// action of every generator is again monomial, so the result is a valid
/// SimpleRep carrier even though it is usually not simple (its label field
/// is not meaningful).  Derived actions: x acts as x (x) x; y acts on
/// column (ca, cb) as y^{t^i} (x) y with i = b.zw[cb]; z weights add mod q;
/// e weights multiply in G.
SimpleRep tensor_rep(const ApqParams& P, const SimpleRep& a,
                     const SimpleRep& b);

// ---------------------------------------------------------------------------
// The algebra bundle
// ---------------------------------------------------------------------------

/// A(p,q) together with its construction tower and designated generators.
/// Exact products in the quotient go through the parent double; the bundle
/// keeps a shared memo of structure rows plus fast paths for products whose
/// factors live in the embedded algebra / dual (certified against the
/// generic rows by verify_presentation).
class ApqAlgebra {
  public:
    ApqParams P;
    FieldPtr F;
    CarryTwisted ct;     ///< the extension k^G # k[Z_q], dim p q^2
    DoubleData dd;       ///< its double, dim (p q^2)^2
    CentralPairData pd;  ///< data of the central pair (x, chi)
    CentralQuotient cq;  ///< quotient by chi * x, dim p^2 q^3
    HopfPtr A;           ///< the quotient algebra (= cq.Q)

    SVec x, y, chi;           ///< designated generators of A
    std::vector<SVec> z;      ///< z_0 .. z_{q-1}
    std::vector<SVec> e;      ///< e_g, indexed by sd_index
    SVec Ydual;               ///< Y as dual coordinates on the extension
    std::vector<SVec> Zdual;  ///< Z_i as dual coordinates

    Cyc omega;  ///< primitive q-th root used by the family formulas
    Cyc eta;    ///< primitive p-th root

    long dim() const { return A->dim; }
    /// Decomposition of quotient basis element r: the parent representative
    /// is E_{a^yi b^xj; x^zk} (x) e_g x^xd, so r acts on every module by
    /// omega^{-xj*zk} y^yi x^{-xj} z_zk e_g x^xd.
    struct Word {
        long yi = 0, xj = 0, zk = 0, xd = 0;
        int g = 0;
        long omega_exp = 0;  ///< exponent of the q-th root prefactor
    };
    Word word(int r) const;

    /// Exact product in the quotient (generic route, memoized rows).
    SVec mult(const SVec& u, const SVec& v);
    SVec power(const SVec& u, long k);
    /// Fast product pi(i(f)) * w for a functional f in dual coordinates.
    SVec mult_fun_left(const SVec& f_dual, const SVec& w);
    /// Fast product w * pi(i(h)) for h an element of the extension.
    SVec mult_alg_right(const SVec& w, const SVec& h);
    /// Structural product pi(i(f)) * pi(i(h)): the projection of the parent
    /// basis pairing of a functional with an extension element.
    SVec fun_alg(const SVec& f_dual, const SVec& h);
    /// Exact coproduct / antipode / star / counit in the quotient, memoized.
    SVec delta(const SVec& v);
    SVec antipode(const SVec& v);
    SVec star(const SVec& v);
    Cyc counit(const SVec& v);

    /// Number of exact parent structure rows fetched so far (cost metric).
    long rows_fetched() const;

  private:
    friend ApqAlgebra build_apq(long, long, long, long, const FieldPtr&,
                                const QuotientOptions&);
    struct Memo;
    std::shared_ptr<Memo> memo_;
};

/// Builds the tower k^G # k[Z_q] -> double -> quotient and designates the
/// generators.  F must contain primitive pq-th roots of unity.  Throws
/// std::invalid_argument / CentralQuotientError on unusable parameters.
ApqAlgebra build_apq(long p, long q, long t, long beta, const FieldPtr& F,
                     const QuotientOptions& qopts = {});

// ---------------------------------------------------------------------------
// Presentation certificate
// ---------------------------------------------------------------------------

/// Tuning for verify_presentation.  The handful of relations whose right
/// hand sides need generic structure rows (y x, z_i x, e_g y, e_g z_i, and
/// the fast-path samples) are compared over F_p through mq by default; set
/// heavy_exact to recompute those products with exact arithmetic (slower,
/// used by the acceptance run).  Everything else is always exact.
struct PresOptions {
    bool heavy_exact = false;
    long fastpath_samples = 24;
    std::uint64_t seed = 1;
};

/// Exact verification, inside the constructed quotient, of the generator
/// presentation of A(p,q):
///   - algebra relations: y x = x y^t, z_i x = x z_i, e_g x = x e_{g<x},
///     z_i y = y z_i, e_g y = y sum_i z_i e_{a^{-t^i} g a}, e_g z_i = z_i
///     e_g, x^q = y^p = 1, z_i z_j = delta z_i, e_g e_h = delta e_g,
///     sum z_i = sum e_g = 1, chi = x^{-1};
///   - coproducts: Delta x = x (x) x, Delta y = sum_i y^{t^i} (x) y z_i,
///     Delta z_i = sum_j z_j (x) z_{i-j}, Delta e_g = sum_h e_h (x)
///     e_{h^{-1} g};
///   - counit, antipode and star values of every generator;
///   - the word identities: each embedded dual basis element equals
///     omega^{-jk} y^i x^{-j} z_k, each embedded algebra basis element
///     equals e_g x^d, and each quotient basis element is the product of
///     the two (so the generators span all of A(p,q));
///   - agreement of the fast product paths with the generic structure rows
///     on seeded samples.
Report verify_presentation(ApqAlgebra& A, ModQuotient* mq = nullptr,
                           const PresOptions& opts = {});

// ---------------------------------------------------------------------------
// Word lift and module certification
// ---------------------------------------------------------------------------

/// Per-module word evaluator: the monomial action of any basis element of
/// A(p,q), with cached generator power tables and a memoized trace table.
class RepTables {
  public:
    RepTables(const ApqAlgebra& A, const SimpleRep& X);

    const SimpleRep& rep() const { return *X_; }
    long dim() const { return X_->dim; }
    /// Monomial action of quotient basis element r.
    Mono op(int r) const;
    /// Action of an arbitrary element (sum of monomials, dense row-major).
    std::vector<Cyc> act(const SVec& v) const;
    /// tr(op(r)), memoized.
    const Cyc& trace(int r);
    /// tr of the antipode image of basis r (memoized); this is the trace of
    /// basis r on the dual module, so it is what tensor-with-dual traces use.
    const Cyc& trace_antipode(ApqAlgebra& A, int r);

  private:
    const ApqAlgebra* A_;
    const SimpleRep* X_;
    long N_;
    std::vector<Mono> xpow_, ypow_;
    std::vector<std::optional<Cyc>> tr_, trs_;
};

struct SimplesOptions {
    long exact_pairs = 60;        ///< exact module-axiom samples per module
    long freivalds_pairs = 20000; ///< 0 = all basis pairs (full scan)
    long freivalds_probes = 1;    ///< random left/right probe vectors per scan
    long star_samples = 25;       ///< exact basis-level star samples
    std::uint64_t seed = 1;
};

/// Certification of the simple-module list:
///   - family counts (q^2, qm, mqp, q^2(q-1)), total p^2 + q^3 - 1, and
///     sum of squared dimensions = dim A, all exact;
///   - per module: the generator matrices satisfy every presentation
///     relation; the unit acts as the identity; the generator actions are
///     unitary and star-compatible (basis-level on seeded samples); the
///     module axioms hold against the quotient's structure rows (exact on
///     seeded pairs, then a Freivalds-compressed scan over F_p driven by mq
///     across all modules at once); End = k (weight-filtered commutant);
///   - pairwise non-isomorphism: modules whose diagonal-subalgebra
///     fingerprints (multiset of (z,e) column weights) collide are separated
///     by an exact Hom = 0 computation, the rest structurally;
///   - the label equivalences hold via explicit re-indexing intertwiners.
Report check_simples(ApqAlgebra& A, std::vector<SimpleRep>& simples,
                     ModQuotient& mq, const SimplesOptions& opts = {});

/// Exact dimension of the space of module maps X -> Y between two monomial
/// carriers.  The diagonal subalgebra (z and e weights) forces the nonzero
/// entries of an intertwiner onto the weight-matched slots; the x and y
/// constraints on those slots are eliminated with exact cyclotomic
/// arithmetic.
long hom_dim(const FieldPtr& F, long N, const SimpleRep& X, const SimpleRep& Y);

/// The same constraint system eliminated over F_p, specializing the order-N
/// roots of unity through ctx.  Reduction can only lower the rank, so the
/// returned nullity is an upper bound for hom_dim; callers that know the
/// total dimension budget (sum over simples of hom * dim = dim X when Y
/// ranges over a complete simple list) can certify equality exactly.
long hom_dim_mod(const ModCtx& ctx, const FieldPtr& F, long N,
                 const SimpleRep& X, const SimpleRep& Y);

/// Dimension of the center of A(p,q) over F_p: the nullity of the
/// commutant system of the designated generators (an upper bound for the
/// exact center dimension; the simple count provides the matching lower
/// bound when the algebra is semisimple).
long center_dim_mod(ApqAlgebra& A, ModQuotient& mq);

}  // namespace forge
