// SPDX-License-Identifier: Apache-2.0
// Fusion ring of A(7,3): closed-form structure constants against frozen hand
// calculations for every rule branch, the ring axiom suite on the full
// 75-label table, and the module-level verification that pits the closed
// form against the integral-trace and intertwiner oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "forge/fusion.hpp"

using namespace forge;

namespace {

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

SimpleLabel lab(Family f, long a, long b, long c = 0) {
    SimpleLabel L;
    L.fam = f;
    L.a = a;
    L.b = b;
    L.c = c;
    return L;
}

// Multiplicity vector from a list of (label, multiplicity) terms.
std::vector<long> terms(const ApqParams& P,
                        const std::vector<std::pair<SimpleLabel, long>>& ts) {
    std::vector<long> v(75, 0);
    for (const auto& [L, m] : ts) v[(size_t)label_index(P, L)] += m;
    return v;
}

}  // namespace

TEST_CASE("closed-form products match frozen hand calculations") {
    ApqParams P = apq_params(7, 3, 2, 3);
    auto T = [&](long a, long b) { return lab(Family::T, a, b); };
    auto U = [&](long a, long b) { return lab(Family::U, a, b); };
    auto V = [&](long a, long b, long c) { return lab(Family::V, a, b, c); };
    auto W = [&](long a, long b, long c) { return lab(Family::W, a, b, c); };

    std::string br;
    // One frozen product per rule branch; multiplicity vectors and fired
    // branches were worked out by hand from the label arithmetic.
    CHECK(fusion_closed_form(P, T(1, 2), T(2, 1), &br) == terms(P, {{T(0, 0), 1}}));
    CHECK(br == "tt");
    CHECK(fusion_closed_form(P, T(1, 2), T(2, 2)) == terms(P, {{T(0, 1), 1}}));

    CHECK(fusion_closed_form(P, T(1, 1), U(0, 3), &br) == terms(P, {{U(1, 3), 1}}));
    CHECK(br == "tu");

    CHECK(fusion_closed_form(P, T(1, 1), V(3, 1, 2), &br) ==
          terms(P, {{V(3, 2, 4), 1}}));
    CHECK(br == "tv");

    CHECK(fusion_closed_form(P, T(1, 2), W(0, 1, 1), &br) ==
          terms(P, {{W(1, 2, 0), 1}}));
    CHECK(br == "tw");

    CHECK(fusion_closed_form(P, U(0, 3), U(1, 3), &br) ==
          terms(P, {{U(1, 2), 2}, {U(1, 3), 1}}));
    CHECK(br == "uu_generic");

    CHECK(fusion_closed_form(P, U(0, 3), U(0, 2), &br) ==
          terms(P, {{U(0, 3), 1},
                    {U(0, 2), 1},
                    {T(0, 0), 1},
                    {T(0, 1), 1},
                    {T(0, 2), 1}}));
    CHECK(br == "uu_split");

    CHECK(fusion_closed_form(P, U(0, 3), V(2, 1, 3), &br) ==
          terms(P, {{V(2, 1, 2), 1}, {V(2, 1, 1), 1}, {V(2, 1, 6), 1}}));
    CHECK(br == "uv");

    CHECK(fusion_closed_form(P, U(1, 2), W(0, 1, 1), &br) ==
          terms(P, {{W(1, 2, 0), 1}, {W(1, 2, 1), 1}, {W(1, 2, 2), 1}}));
    CHECK(br == "uw");

    CHECK(fusion_closed_form(P, V(3, 0, 1), V(3, 1, 2), &br) ==
          terms(P, {{V(3, 1, 1), 1}, {V(2, 1, 3), 2}}));
    CHECK(br == "vv_generic");

    CHECK(fusion_closed_form(P, V(3, 0, 3), V(2, 0, 1), &br) ==
          terms(P, {{V(3, 0, 2), 1},
                    {V(2, 0, 3), 1},
                    {T(0, 0), 1},
                    {T(0, 1), 1},
                    {T(0, 2), 1}}));
    CHECK(br == "vv_split_t");

    CHECK(fusion_closed_form(P, V(3, 0, 1), V(2, 0, 1), &br) ==
          terms(P, {{V(3, 0, 1), 1}, {V(2, 0, 6), 1}, {U(0, 3), 1}}));
    CHECK(br == "vv_split_u");

    CHECK(fusion_closed_form(P, V(3, 1, 2), W(0, 1, 1), &br) ==
          terms(P, {{W(1, 2, 0), 1}, {W(1, 2, 1), 1}, {W(1, 2, 2), 1}}));
    CHECK(br == "vw");

    CHECK(fusion_closed_form(P, W(0, 1, 0), W(1, 2, 1), &br) ==
          terms(P, {{W(1, 0, 0), 2}, {W(1, 0, 1), 3}, {W(1, 0, 2), 2}}));
    CHECK(br == "ww_generic");

    std::vector<std::pair<SimpleLabel, long>> split = {
        {T(1, 2), 1}, {U(1, 3), 1}, {U(1, 2), 1}};
    for (long r = 2; r <= 3; ++r)
        for (long s = 0; s < 7; ++s) split.push_back({V(r, 1, s), 1});
    CHECK(fusion_closed_form(P, W(0, 1, 0), W(1, 0, 2), &br) == terms(P, split));
    CHECK(br == "ww_split");

    // Products are computed family-sorted, so the reversed order returns the
    // identical vector by construction.
    CHECK(fusion_closed_form(P, W(1, 0, 2), U(0, 3)) ==
          fusion_closed_form(P, U(0, 3), W(1, 0, 2)));
}

TEST_CASE("the fusion table passes the ring axiom suite") {
    ApqParams P = apq_params(7, 3, 2, 3);
    FusionRing R = fusion_table(P);
    CHECK(R.rank() == 75);
    Report rep = check_fusion_ring(R);
    INFO(rep.summary());
    CHECK(rep.ok());
    CHECK(rep.checks_run > 3375);  // exhaustive small-label associativity ran
}

TEST_CASE("closed form agrees with the integral-trace and intertwiner oracles") {
    ApqAlgebra& A = shared_apq();
    ModQuotient& mq = shared_mq();
    FusionRing R = fusion_table(A.P);
    FusionOracle O(A);

    // The integral itself: counit 1 and a frozen support sanity value.
    CHECK(!(O.integral().empty()));
    CHECK((A.counit(O.integral()) - Cyc::one(A.F)).is_zero());

    // Frozen decomposition through the module-level oracle alone: the
    // splitting product of the p-dimensional family.
    {
        std::vector<std::pair<SimpleLabel, long>> split = {
            {lab(Family::T, 1, 2), 1},
            {lab(Family::U, 1, 3), 1},
            {lab(Family::U, 1, 2), 1}};
        for (long r = 2; r <= 3; ++r)
            for (long s = 0; s < 7; ++s)
                split.push_back({lab(Family::V, r, 1, s), 1});
        CHECK(O.decompose(lab(Family::W, 0, 1, 0), lab(Family::W, 1, 0, 2)) ==
              terms(A.P, split));
    }

    FusionVerifyOptions opts;
    opts.samples = 8;
    opts.comm_samples = 3;
    opts.tensor_samples = 3;
    Report rep = verify_fusion(A, O, R, &mq, opts);
    INFO(rep.summary());
    CHECK(rep.ok());
    MESSAGE("fusion verification: ", rep.summary());
}
