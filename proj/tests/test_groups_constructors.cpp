// SPDX-License-Identifier: Apache-2.0
// Group algebras, function algebras, the carry-twisted bicrossed products and
// the rank-n Taft algebras: construction invariants and full axiom suites.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "forge/constructors.hpp"
#include "forge/group.hpp"
#include "forge/hopf.hpp"

using namespace forge;

TEST_CASE("group tables") {
    auto C6 = cyclic_group(6);
    CHECK(validate_group(C6).ok());
    CHECK(C6.is_abelian());
    CHECK(C6.order(1) == 6);
    CHECK(C6.order(2) == 3);

    auto G = semidirect_cp_cq(7, 3, 2);
    CHECK(validate_group(G).ok());
    CHECK(!G.is_abelian());
    CHECK(G.n == 21);
    // a has order 7, b has order 3, b a b^-1 = a^2
    int a = sd_index(7, 1, 0), b = sd_index(7, 0, 1);
    CHECK(G.order(a) == 7);
    CHECK(G.order(b) == 3);
    CHECK(G.op(G.op(b, a), G.inv[b]) == sd_index(7, 2, 0));

    // t of the wrong multiplicative order is rejected
    CHECK_THROWS_AS(semidirect_cp_cq(7, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(semidirect_cp_cq(7, 3, 1), std::invalid_argument);

    // homomorphisms to Z/21: the abelianization is Z_3, so exactly 3
    auto homs = group_homs_to_ZN(G, 21);
    CHECK(homs.size() == 3);
    auto homs6 = group_homs_to_ZN(C6, 6);
    CHECK(homs6.size() == 6);
}

TEST_CASE("group algebra and function algebra duality") {
    auto F = CycField::get(6);
    auto C6 = cyclic_group(6);
    auto kG = group_algebra(F, C6);
    auto kGd = function_algebra(F, C6);

    CHECK(check_hopf(*kG).ok());
    CHECK(check_star(*kG).ok());
    CHECK(check_hopf(*kGd).ok());
    CHECK(check_star(*kGd).ok());

    // dual of the group algebra has the function algebra's tables
    auto dual = dual_hopf(*kG);
    for (int i = 0; i < 6; ++i) {
        CHECK(sv_equal(dual->delta(i), kGd->delta(i)));
        CHECK(sv_equal(dual->antipode(i), kGd->antipode(i)));
        CHECK(sv_equal(dual->star(i), kGd->star(i)));
        CHECK(dual->counit[i] == kGd->counit[i]);
        for (int j = 0; j < 6; ++j) CHECK(sv_equal(dual->mult(i, j), kGd->mult(i, j)));
    }

    // integrals: sum of group elements / evaluation at the identity
    SVec lg = left_integral_exact(*kG);
    REQUIRE(!lg.empty());
    CHECK(check_left_integral(*kG, lg).ok());
    CHECK(integral_counit_nonzero(*kG, lg));  // semisimple
    SVec lf = left_integral_exact(*kGd);
    REQUIRE(!lf.empty());
    CHECK(check_left_integral(*kGd, lf).ok());
    CHECK(lf.nnz() == 1);
    CHECK(lf.t.front().first == 0);  // supported on e[1]
}

TEST_CASE("carry-twisted bicrossed product, untwisted member") {
    auto F = CycField::get(21);
    auto ct = carry_twisted(F, 7, 3, 2, 0);
    CHECK(ct.H->dim == 63);

    CHECK(check_hopf(*ct.H).ok());
    CHECK(check_star(*ct.H).ok());

    // the designated group-like element of order q
    CHECK(is_group_like(*ct.H, ct.x_elt));
    SVec x2 = mult_vv(*ct.H, ct.x_elt, ct.x_elt);
    SVec x3 = mult_vv(*ct.H, x2, ct.x_elt);
    CHECK(!sv_equal(x2, ct.H->unit));
    CHECK(sv_equal(x3, ct.H->unit));

    // the designated character and its convolution order
    CHECK(is_character(*ct.H, ct.chi));
    CHECK(convolution_order(*ct.H, ct.chi, 10) == 3);

    // semisimple (it is an extension of group algebras)
    SVec integral = left_integral_exact(*ct.H);
    REQUIRE(!integral.empty());
    CHECK(check_left_integral(*ct.H, integral).ok());
    CHECK(integral_counit_nonzero(*ct.H, integral));
}

TEST_CASE("carry-twisted bicrossed product, twisted member") {
    auto F = CycField::get(21);
    auto ct = carry_twisted(F, 7, 3, 2, 1);
    CHECK(ct.H->dim == 63);
    // cocycle values: zeta_3^{j * carry(m,n)} on e[a^i b^j], frozen spot checks
    auto omega = Cyc::root(F, 7);  // zeta_3
    int b = sd_index(7, 0, 1);
    int i_b_x2 = ct.idx(b, 2);
    int i_b_x1 = ct.idx(b, 1);
    // (e_b # x^2)(e_{b<|x^2} # x^2): carry(2,2) = 1 -> coefficient omega
    int tgt = ct.mp.ract[b][2];
    SVec prod = ct.H->mult(i_b_x2, ct.idx(tgt, 2));
    REQUIRE(prod.nnz() == 1);
    CHECK(prod.t.front().second == omega);
    // (e_b # x)(e_{b<|x} # x): carry(1,1) = 0 -> coefficient 1
    int tgt1 = ct.mp.ract[b][1];
    SVec prod1 = ct.H->mult(i_b_x1, ct.idx(tgt1, 1));
    REQUIRE(prod1.nnz() == 1);
    CHECK(prod1.t.front().second == Cyc::one(F));

    // full axiom suites with the nontrivial cocycle
    CHECK(check_hopf(*ct.H).ok());
    CHECK(check_star(*ct.H).ok());
}

TEST_CASE("rank-1 Taft algebra") {
    auto F = CycField::get(3);
    auto tf = taft(F, 3, 1);
    auto& H = *tf.H;
    CHECK(H.dim == 9);
    CHECK(check_hopf(H).ok());

    int x = tf.xi_idx(0), g = tf.gi_idx(0);
    // g x = zeta x g
    SVec gx = H.mult(g, x);
    SVec xg = H.mult(x, g);
    REQUIRE(gx.nnz() == 1);
    REQUIRE(xg.nnz() == 1);
    CHECK(gx.t.front().first == xg.t.front().first);
    CHECK(gx.t.front().second == tf.zeta * xg.t.front().second);
    // x^3 = 0, g^3 = 1
    SVec xv = SVec::unit(x, Cyc::one(F));
    SVec gv = SVec::unit(g, Cyc::one(F));
    CHECK(mult_vv(H, mult_vv(H, xv, xv), xv).empty());
    CHECK(sv_equal(mult_vv(H, mult_vv(H, gv, gv), gv), H.unit));

    // Delta on powers of x matches the Gaussian-binomial closed form:
    // Delta(x^a) = sum_j [a, j]_zeta  x^j g^{a-j} (x) x^{a-j}
    for (long a = 1; a <= 2; ++a) {
        Accum expect(F);
        for (long j = 0; j <= a; ++j) {
            int left = tf.idx({j}, {a - j});
            int right = tf.idx({a - j}, {0});
            expect.add(tensor_index(left, right, H.dim), gauss_binomial(F, tf.zeta, a, j));
        }
        CHECK(sv_equal(H.delta(tf.idx({a}, {0})), expect.take()));
    }

    // antipode: S(x) = -g^-1 x = -zeta^-1 x g^-1
    SVec sx = H.antipode(x);
    REQUIRE(sx.nnz() == 1);
    CHECK(sx.t.front().first == tf.idx({1}, {2}));
    CHECK(sx.t.front().second == -tf.zeta.inv());

    // non-semisimple: eps(integral) = 0
    SVec integral = left_integral_exact(H);
    REQUIRE(!integral.empty());
    CHECK(check_left_integral(H, integral).ok());
    CHECK(!integral_counit_nonzero(H, integral));

    // the designated character chi and group-like g_n
    CHECK(is_character(H, tf.chi));
    CHECK(is_group_like(H, tf.x_elt));
    CHECK(convolution_order(H, tf.chi, 10) == 3);

    // distinguished character alpha (integral is a right eigenvector family)
    Functional alpha = distinguished_character(H, integral);
    CHECK(is_character(H, alpha));
    CHECK(convolution_order(H, alpha, 10) == 3);
    CHECK(alpha[x].is_zero());
}

TEST_CASE("rank-2 Taft algebra") {
    auto F = CycField::get(3);
    auto tf = taft(F, 3, 2);
    auto& H = *tf.H;
    CHECK(H.dim == 81);

    // cross-generator commutation: x_2 x_1 = zeta x_1 x_2; g_1 x_2 = zeta^-1 x_2 g_1
    SVec x2x1 = mult_vv(H, SVec::unit(tf.xi_idx(1), Cyc::one(F)),
                        SVec::unit(tf.xi_idx(0), Cyc::one(F)));
    REQUIRE(x2x1.nnz() == 1);
    CHECK(x2x1.t.front().first == tf.idx({1, 1}, {0, 0}));
    CHECK(x2x1.t.front().second == tf.zeta);
    SVec g1x2 = mult_vv(H, SVec::unit(tf.gi_idx(0), Cyc::one(F)),
                        SVec::unit(tf.xi_idx(1), Cyc::one(F)));
    REQUIRE(g1x2.nnz() == 1);
    CHECK(g1x2.t.front().second == tf.zeta.inv());

    CHECK(check_hopf(H).ok());
    CHECK(is_character(H, tf.chi));
    CHECK(is_group_like(H, tf.x_elt));

    SVec integral = left_integral_exact(H);
    REQUIRE(!integral.empty());
    CHECK(check_left_integral(H, integral).ok());
    CHECK(!integral_counit_nonzero(H, integral));
}

TEST_CASE("taft over the session conductor") {
    // same algebra built over Q(zeta_21): needed when mixing with the
    // bicrossed-product pipeline
    auto F = CycField::get(21);
    auto tf = taft(F, 3, 1);
    CHECK(check_hopf(*tf.H).ok());
    CHECK(tf.zeta.order_of() == 3);
}
