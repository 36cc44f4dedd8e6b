// SPDX-License-Identifier: Apache-2.0
// Simple modules of the bicrossed-double quotient A(7,3): parameter and label
// arithmetic against hand-computed values, the monomial operator algebra, the
// generator presentation certificate inside the constructed quotient, the 75
// simple modules with their certification suite, and the center dimension.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "forge/rep.hpp"

using namespace forge;

namespace {

// The tower (extension -> double -> quotient) is built once and shared by
// the heavy cases; the modular row provider sits on top of the same tower.
ApqAlgebra& shared_apq() {
    static ApqAlgebra A = build_apq(7, 3, 2, 3, CycField::get(21));
    return A;
}

ModQuotient& shared_mq() {
    static ModCtx ctx = ModCtx::make(shared_apq().F);
    static ModDouble md(shared_apq().dd, ctx);
    static ModQuotient mq(shared_apq().cq, md);
    return mq;
}

}  // namespace

TEST_CASE("parameter arithmetic of A(7,3)") {
    ApqParams P = apq_params(7, 3, 2, 3);
    CHECK(P.p == 7);
    CHECK(P.q == 3);
    CHECK(P.t == 2);
    CHECK(P.beta == 3);
    CHECK(P.m == 2);
    CHECK(P.tpow == std::vector<long>({1, 2, 4}));
    CHECK(P.betapow == std::vector<long>({1, 3, 2}));
    CHECK(P.tp(5) == 4);    // t^5 = t^2
    CHECK(P.tp(-1) == 4);   // t^{-1} = t^2
    CHECK(P.tinv(1) == 4);
    CHECK(P.tinv(2) == 2);

    // Coset decomposition of (Z/7)^*: <t> = {1,2,4}, reps beta^1 = 3 and
    // beta^2 = 2, so 2<t> = {2,4,1} and 3<t> = {3,6,5}.
    long s = -1;
    CHECK(P.coset_rep(1, &s) == 2);
    CHECK(s == 2);  // 1 = 2 * 4 = 2 * t^2
    CHECK(P.coset_rep(2, &s) == 2);
    CHECK(s == 0);
    CHECK(P.coset_rep(4, &s) == 2);
    CHECK(s == 1);
    CHECK(P.coset_rep(3, &s) == 3);
    CHECK(s == 0);
    CHECK(P.coset_rep(6, &s) == 3);
    CHECK(s == 1);
    CHECK(P.coset_rep(5, &s) == 3);
    CHECK(s == 2);
    CHECK_THROWS_AS(P.coset_rep(0), std::invalid_argument);

    // The other order-3 residue t = 4 needs a different generator (5^2 = 4).
    CHECK_NOTHROW(apq_params(7, 3, 4, 5));
    // Rejections: q | p-1 fails, t of wrong order, beta not a generator,
    // beta^m != t, p not prime.
    CHECK_THROWS_AS(apq_params(5, 3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(apq_params(7, 3, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(apq_params(7, 3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(apq_params(7, 3, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(apq_params(9, 3, 2, 2), std::invalid_argument);
}

TEST_CASE("labels: canonical forms, enumeration, indexing") {
    ApqParams P = apq_params(7, 3, 2, 3);

    // Re-indexing equivalences land on the coset representative.
    CHECK(canonical_label(P, {Family::V, 6, 1, 1}) ==
          SimpleLabel{Family::V, 3, 1, 2});
    CHECK(canonical_label(P, {Family::U, 0, 5, 0}) ==
          SimpleLabel{Family::U, 0, 3, 0});
    CHECK(canonical_label(P, {Family::V, 1, 2, 3}) ==
          SimpleLabel{Family::V, 2, 2, 3 * 4 % 7});
    CHECK(canonical_label(P, {Family::T, -1, 5, 9}) ==
          SimpleLabel{Family::T, 2, 2, 0});
    CHECK(canonical_label(P, {Family::W, 0, 4, -1}) ==
          SimpleLabel{Family::W, 0, 1, 2});
    CHECK_THROWS_AS(canonical_label(P, {Family::W, 1, 1, 0}),
                    std::invalid_argument);

    auto labels = simple_labels(P);
    REQUIRE(labels.size() == 75);
    long nT = 0, nU = 0, nV = 0, nW = 0, sumsq = 0;
    for (const auto& L : labels) {
        switch (L.fam) {
            case Family::T: ++nT; break;
            case Family::U: ++nU; break;
            case Family::V: ++nV; break;
            case Family::W: ++nW; break;
        }
        long d = simple_dim(P, L);
        sumsq += d * d;
    }
    CHECK(nT == 9);
    CHECK(nU == 6);
    CHECK(nV == 42);
    CHECK(nW == 18);
    CHECK(sumsq == 1323);

    // label_index is the position in the enumeration, and canonical labels
    // are fixed points of canonicalization.
    for (size_t i = 0; i < labels.size(); ++i) {
        CHECK(label_index(P, labels[i]) == (long)i);
        CHECK(canonical_label(P, labels[i]) == labels[i]);
    }
    // Spot values of the block layout.
    CHECK(label_index(P, {Family::T, 0, 0, 0}) == 0);
    CHECK(label_index(P, {Family::U, 0, 3, 0}) == 9);
    CHECK(label_index(P, {Family::V, 3, 1, 2}) == 24);
    CHECK(label_index(P, {Family::W, 0, 1, 0}) == 57);
    CHECK(label_index(P, {Family::W, 2, 1, 2}) == 74);
    // Equivalent raw labels share an index.
    CHECK(label_index(P, {Family::V, 6, 1, 1}) ==
          label_index(P, {Family::V, 3, 1, 2}));
    CHECK(label_index(P, {Family::U, 0, 5, 0}) ==
          label_index(P, {Family::U, 0, 3, 0}));
}

TEST_CASE("monomial operator algebra") {
    auto F = CycField::get(4);
    const long N = 4;
    Mono a;  // a(u0) = zeta u1, a(u1) = u0
    a.dim = 2;
    a.to = {1, 0};
    a.e = {1, 0};

    CHECK(mono_eq(N, mono_pow(N, a, 0), mono_id(2)));
    Mono a2 = mono_pow(N, a, 2);  // diag(zeta, zeta)
    CHECK(a2.to == std::vector<int>({0, 1}));
    CHECK(a2.e == std::vector<long>({1, 1}));
    CHECK(mono_eq(N, mono_pow(N, a, 8), mono_id(2)));

    Mono ad = mono_dagger(N, a);
    CHECK(mono_eq(N, mono_mul(N, a, ad), mono_id(2)));
    CHECK(mono_eq(N, mono_mul(N, ad, a), mono_id(2)));

    Mono sc = mono_scale(N, a, 3);
    CHECK(sc.e == std::vector<long>({0, 3}));

    Mono k = mono_kron(N, a, a2);
    CHECK(k.dim == 4);
    // (a (x) a2)(u_{0,1}) = zeta^{1+1} u_{1,1}: column 1 -> row 3, exp 2.
    CHECK(k.to[1] == 3);
    CHECK(k.e[1] == 2);

    Mono f = mono_filter(a, {1, 0});
    CHECK(f.to[0] == 1);
    CHECK(f.to[1] == -1);
    CHECK_THROWS_AS(mono_dagger(N, f), std::invalid_argument);

    Mono d;  // diag(zeta^2, zeta^3)
    d.dim = 2;
    d.to = {0, 1};
    d.e = {2, 3};
    CHECK((mono_trace(F, d, N) - (Cyc::root(F, 2) + Cyc::root(F, 3))).is_zero());
    CHECK(mono_trace(F, a, N).is_zero());  // no fixed basis line

    auto dm = mono_dense(F, a, N);
    CHECK((dm[2] - Cyc::root(F, 1)).is_zero());  // row 1, col 0
    CHECK((dm[1] - Cyc::one(F)).is_zero());      // row 0, col 1
    CHECK(dm[0].is_zero());
    CHECK(dm[3].is_zero());
}

TEST_CASE("construction tower of A(7,3)") {
    ApqAlgebra& A = shared_apq();
    CHECK(A.ct.H->dim == 63);
    CHECK(A.dd.D->dim == 3969);
    CHECK(A.dim() == 1323);
    CHECK(A.cq.dim_ideal == 2646);
    CHECK(A.cq.orbit_count == 1323);
    CHECK(A.cq.good_orbit_count == 1323);

    auto pr = check_central_pair(*A.ct.H, A.pd);
    CHECK_MESSAGE(pr.ok(), pr.summary());

    // Generator sanity: decompositions partition the identity, x has the
    // announced support shape, and the word decoder inverts pair_index.
    CHECK(A.z.size() == 3);
    CHECK(A.e.size() == 21);
    CHECK(A.x.nnz() > 0);
    CHECK(A.y.nnz() > 0);
    for (int r = 0; r < (int)A.dim(); r += 97) {
        ApqAlgebra::Word w = A.word(r);
        int u = A.ct.idx(int(w.yi + 7 * w.xj), (int)w.zk);
        int v = A.ct.idx(w.g, (int)w.xd);
        CHECK(A.cq.pt->reps[r] == A.dd.pair_index(u, v));
    }
}

TEST_CASE("generator presentation holds in the constructed quotient") {
    ApqAlgebra& A = shared_apq();
    auto rep = verify_presentation(A, &shared_mq(), {});
    CHECK_MESSAGE(rep.ok(), rep.summary());
    MESSAGE("presentation checks: ", rep.summary(),
            ", exact parent rows fetched: ", A.rows_fetched());
}

TEST_CASE("simple modules certify against the quotient") {
    ApqAlgebra& A = shared_apq();
    auto simples = build_simples(A.P);
    REQUIRE(simples.size() == 75);
    auto rep = check_simples(A, simples, shared_mq());
    CHECK_MESSAGE(rep.ok(), rep.summary());
    MESSAGE("simple-module checks: ", rep.summary());
}

TEST_CASE("center dimension equals the simple count") {
    ApqAlgebra& A = shared_apq();
    CHECK(center_dim_mod(A, shared_mq()) == 75);
}
