// SPDX-License-Identifier: Apache-2.0
// Central group-like quotients of Drinfel'd doubles: the character/group-like
// pair certificates on the input algebra, the quotient construction with its
// exact ideal-rank and ideal-membership certificates, the pushed
// quasitriangular structure (exhaustive, streamed, and modular tiers),
// factorizability of the quotient, the two product families, and independence
// of the result from the orbit-representative choice.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "forge/constructors.hpp"
#include "forge/drinfeld.hpp"
#include "forge/group.hpp"
#include "forge/quotient.hpp"

using namespace forge;

namespace {

SVec basis(const FieldPtr& F, int i) { return SVec::unit(i, Cyc::one(F)); }

// The standard pair for a rank-one Taft algebra: x is the group-like
// generator, chi its dual character, and the family diagonalizes the skew
// generator powers, e_i = (1/l) sum_k zeta^{ik} x1^k.  Conjugation by the
// group-like shifts the family up, the character shifts it down.
CentralPairData taft_pair(const Taft& tf, const FieldPtr& F) {
    CentralPairData pd;
    pd.x = tf.x_elt;
    pd.chi = tf.chi;
    pd.n = tf.l;
    const long l = tf.l;
    for (long i = 0; i < l; ++i) {
        Accum acc(F);
        for (long k = 0; k < l; ++k)
            acc.add(tf.idx({k}, {0}), tf.zeta.pow((i * k) % l).scaled(Rat(1, l)));
        pd.family.push_back(acc.take());
        pd.sigma.push_back((int)((i + 1) % l));
        pd.tau.push_back((int)((i - 1 + l) % l));
    }
    return pd;
}

}  // namespace

TEST_CASE("pair and quotient for the double of a cyclic group algebra") {
    auto F = CycField::get(3);
    auto H = group_algebra(F, cyclic_group(3));
    auto dd = drinfeld_double(H);
    const HopfData& D = *dd.D;
    REQUIRE(D.dim == 9);

    CentralPairData pd;
    pd.x = basis(F, 1);
    pd.chi.assign(3, Cyc::zero(F));
    for (int v = 0; v < 3; ++v) pd.chi[v] = Cyc::root(F, v);
    pd.family = {H->unit};
    pd.sigma = {0};
    pd.tau = {0};
    pd.n = 3;

    auto pr = check_central_pair(*H, pd);
    CHECK_MESSAGE(pr.ok(), pr.summary());

    // the dual basis of {1 * x^j} is the indicator family
    FamilyDual fd = family_dual_basis(*H, pd);
    REQUIRE(fd.invertible);
    for (int j = 0; j < 3; ++j)
        for (int u = 0; u < 3; ++u)
            CHECK(fd.dual[j][u] == (u == j ? Cyc::one(F) : Cyc::zero(F)));

    // the inverse of chi under convolution really is an inverse
    {
        Functional ci = convolution_inverse_character(*H, pd.chi);
        Functional eps = counit_functional(*H);
        Functional lr = convolve(*H, pd.chi, ci);
        Functional rl = convolve(*H, ci, pd.chi);
        for (int u = 0; u < 3; ++u) {
            CHECK(lr[u] == eps[u]);
            CHECK(rl[u] == eps[u]);
        }
    }

    // z = chi . x in the double, explicitly sum_u zeta^u E_u (x) g
    SVec z = central_element(dd, pd);
    {
        Accum ze(F);
        for (int u = 0; u < 3; ++u) ze.add(dd.pair_index(u, 1), Cyc::root(F, u));
        CHECK(sv_equal(z, ze.take()));
    }

    auto cq = central_quotient(dd.D, z, 3);
    CHECK(cq.dim_q() == 3);
    CHECK(cq.dim_ideal == 6);
    CHECK(cq.orbit_count == 3);
    CHECK(cq.good_orbit_count == 3);
    CHECK(cq.pt->reps == std::vector<int>({2, 5, 8}));

    auto vr = verify_central_quotient(cq);
    CHECK_MESSAGE(vr.ok(), vr.summary());

    // powers of z act exactly as the recorded permutation and scale walk
    for (int i : {0, 1, 4, 7}) {
        SVec p = basis(F, i);
        for (long k = 1; k <= 3; ++k) {
            p = mult_vv(D, z, p);
            CHECK(sv_equal(p, basis(F, cq.power_index(i, k)).scaled(cq.power_scale(i, k))));
        }
    }

    const HopfData& Q = *cq.Q;
    auto hr = check_hopf(Q);
    CHECK_MESSAGE(hr.ok(), hr.summary());
    REQUIRE(Q.has_star());
    auto sr = check_star(Q);
    CHECK_MESSAGE(sr.ok(), sr.summary());

    // the quotient of the abelian double stays commutative and semisimple
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(sv_equal(Q.mult(i, j), Q.mult(j, i)));
    {
        SVec lam = left_integral_exact(Q);
        REQUIRE(!lam.empty());
        CHECK(check_left_integral(Q, lam).ok());
        CHECK(integral_counit_nonzero(Q, lam));
    }

    auto qr = check_pushed_quasitriangular(dd, cq);
    CHECK_MESSAGE(qr.ok(), qr.summary());
    CHECK(factorizable_rank_exact(Q, cq.project_tensor(dd.R)) == 3);

    ModCtx mc = ModCtx::make(F);
    ModDouble md(dd, mc);
    ModQuotient mq(cq, md);
    CHECK(pushed_factorizable_rank_mod(dd, cq, mq) == 3);

    auto pb = check_quotient_product_bases(dd, cq, pd, fd);
    CHECK_MESSAGE(pb.ok(), pb.summary());

    // the opposite representative choice gives the same quotient up to the
    // canonical coset bijection
    QuotientOptions lo;
    lo.rep_highest = false;
    auto cq2 = central_quotient(dd.D, z, 3, lo);
    CHECK(cq2.pt->reps == std::vector<int>({0, 3, 6}));
    auto vr2 = verify_central_quotient(cq2, lo);
    CHECK_MESSAGE(vr2.ok(), vr2.summary());
    auto ir = check_complement_independence(cq, cq2);
    CHECK_MESSAGE(ir.ok(), ir.summary());

    // order 1: the quotient by z = 1 is the double itself
    auto cq1 = central_quotient(dd.D, D.unit, 1);
    CHECK(cq1.dim_q() == 9);
    CHECK(cq1.dim_ideal == 0);
    CHECK(verify_central_quotient(cq1).ok());
    for (int i = 0; i < 9; i += 2)
        for (int j = 0; j < 9; j += 3) CHECK(sv_equal(cq1.Q->mult(i, j), D.mult(i, j)));

    // rejected inputs: wrong order, and a non-group-like candidate
    CHECK_THROWS_AS(central_quotient(dd.D, z, 5), CentralQuotientError);
    CHECK_THROWS_AS(central_quotient(dd.D, z, 1), CentralQuotientError);
    CHECK_THROWS_AS(central_quotient(dd.D, z, 0), CentralQuotientError);
    CHECK_THROWS_AS(central_quotient(dd.D, basis(F, dd.pair_index(0, 1)), 3),
                    CentralQuotientError);
}

TEST_CASE("quotient of the Taft double, 81 down to 27") {
    auto F = CycField::get(3);
    Taft tf = taft(F, 3, 1);
    auto dd = drinfeld_double(tf.H);
    const HopfData& D = *dd.D;
    REQUIRE(D.dim == 81);

    CentralPairData pd = taft_pair(tf, F);
    auto pr = check_central_pair(*tf.H, pd);
    CHECK_MESSAGE(pr.ok(), pr.summary());
    FamilyDual fd = family_dual_basis(*tf.H, pd);
    REQUIRE(fd.invertible);

    // z = chi . g explicitly: sum_t zeta^t E_{g^t} (x) g
    SVec z = central_element(dd, pd);
    {
        Accum ze(F);
        for (long t = 0; t < 3; ++t)
            ze.add(dd.pair_index(tf.g_idx({t}), tf.gi_idx(0)), Cyc::root(F, t));
        CHECK(sv_equal(z, ze.take()));
    }

    auto cq = central_quotient(dd.D, z, 3);
    CHECK(cq.dim_q() == 27);
    CHECK(cq.dim_ideal == 54);
    CHECK(cq.good_orbit_count == 27);

    auto vr = verify_central_quotient(cq);
    CHECK_MESSAGE(vr.ok(), vr.summary());

    const HopfData& Q = *cq.Q;
    CHECK(!Q.has_star());
    auto hr = check_hopf(Q);
    CHECK_MESSAGE(hr.ok(), hr.summary());

    // still non-semisimple: the skew generator survives in the quotient
    {
        SVec lam = left_integral_exact(Q);
        REQUIRE(!lam.empty());
        CHECK(check_left_integral(Q, lam).ok());
        CHECK(!integral_counit_nonzero(Q, lam));
        CHECK(!cq.project(dd.embed_alg(basis(F, tf.xi_idx(0)))).empty());
    }

    auto qr = check_pushed_quasitriangular(dd, cq);
    CHECK_MESSAGE(qr.ok(), qr.summary());
    CHECK(factorizable_rank_exact(Q, cq.project_tensor(dd.R)) == 27);

    ModCtx mc = ModCtx::make(F);
    ModDouble md(dd, mc);
    ModQuotient mq(cq, md);
    CHECK(pushed_factorizable_rank_mod(dd, cq, mq) == 27);

    // modular structure rows agree with the exact quotient rows
    for (int i = 0; i < 27; i += 5) {
        CHECK(mq.delta_row(i) == mq.reduce(Q.delta(i)));
        CHECK(mq.antipode_row(i) == mq.reduce(Q.antipode(i)));
        for (int j = 0; j < 27; j += 7) CHECK(mq.mult_row(i, j) == mq.reduce(Q.mult(i, j)));
    }

    // force the streamed tier at this small size so every branch also runs
    // where the exhaustive answer is known to pass
    {
        QuasiOptions qo;
        qo.exhaustive_limit = 8;
        qo.sample_pairs = 40;
        qo.sample_rows = 8;
        qo.functional_probes = 2;
        auto qb = check_pushed_quasitriangular(dd, cq, qo, &mq);
        CHECK_MESSAGE(qb.ok(), qb.summary());
    }

    auto pb = check_quotient_product_bases(dd, cq, pd, fd);
    CHECK_MESSAGE(pb.ok(), pb.summary());

    QuotientOptions lo;
    lo.rep_highest = false;
    auto cq2 = central_quotient(dd.D, z, 3, lo);
    auto vr2 = verify_central_quotient(cq2, lo);
    CHECK_MESSAGE(vr2.ok(), vr2.summary());
    auto ir = check_complement_independence(cq, cq2);
    CHECK_MESSAGE(ir.ok(), ir.summary());
    // the streamed/modular variant of the same comparison
    auto ir2 = check_complement_independence(cq, cq2, 8, 60, 1, &md);
    CHECK_MESSAGE(ir2.ok(), ir2.summary());

    // a non-central group-like is rejected, as is a non-group-like
    CHECK_THROWS_AS(central_quotient(dd.D, dd.embed_alg(basis(F, tf.gi_idx(0))), 3),
                    CentralQuotientError);
    CHECK_THROWS_AS(central_quotient(dd.D, dd.embed_alg(basis(F, tf.xi_idx(0))), 3),
                    CentralQuotientError);
}

TEST_CASE("even-order pairs are rejected and nothing else fails") {
    auto F = CycField::get(4);
    Taft tf = taft(F, 4, 1);
    CentralPairData pd = taft_pair(tf, F);
    auto pr = check_central_pair(*tf.H, pd);
    CHECK(!pr.ok());
    REQUIRE(pr.failures.size() == 1);
    CHECK(pr.failures[0].check == "pair.n_odd");
}

TEST_CASE("large Taft quotient, 625 down to 125, through the modular tiers") {
    auto F = CycField::get(5);
    Taft tf = taft(F, 5, 1);
    auto dd = drinfeld_double(tf.H);
    REQUIRE(dd.D->dim == 625);

    CentralPairData pd = taft_pair(tf, F);
    auto pr = check_central_pair(*tf.H, pd);
    CHECK_MESSAGE(pr.ok(), pr.summary());
    FamilyDual fd = family_dual_basis(*tf.H, pd);
    REQUIRE(fd.invertible);

    SVec z = central_element(dd, pd);
    auto cq = central_quotient(dd.D, z, 5);
    CHECK(cq.dim_q() == 125);
    CHECK(cq.dim_ideal == 500);

    auto vr = verify_central_quotient(cq);
    CHECK_MESSAGE(vr.ok(), vr.summary());

    const HopfData& Q = *cq.Q;
    {
        CheckOptions co;
        co.exhaustive_limit = 60;  // force the sampled + modular tiers
        co.sample_pairs = 40;
        co.sample_rows = 16;
        auto hr = check_hopf(Q, co);
        CHECK_MESSAGE(hr.ok(), hr.summary());
    }

    ModCtx mc = ModCtx::make(F);
    ModDouble md(dd, mc);
    ModQuotient mq(cq, md);
    {
        QuasiOptions qo;
        qo.exhaustive_limit = 60;  // force the streamed tier
        qo.sample_pairs = 30;
        qo.sample_rows = 6;
        qo.functional_probes = 2;
        auto qb = check_pushed_quasitriangular(dd, cq, qo, &mq);
        CHECK_MESSAGE(qb.ok(), qb.summary());
    }
    CHECK(pushed_factorizable_rank_mod(dd, cq, mq) == 125);

    auto pb = check_quotient_product_bases(dd, cq, pd, fd);
    CHECK_MESSAGE(pb.ok(), pb.summary());

    QuotientOptions lo;
    lo.rep_highest = false;
    auto cq2 = central_quotient(dd.D, z, 5, lo);
    auto ir = check_complement_independence(cq, cq2, 60, 60, 1, &md);
    CHECK_MESSAGE(ir.ok(), ir.summary());
}
