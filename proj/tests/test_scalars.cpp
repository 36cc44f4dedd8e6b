// SPDX-License-Identifier: Apache-2.0
// Exact cyclotomic scalar arithmetic, its modular specialization, and the
// exact/modular linear algebra kernels.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "forge/cyclotomic.hpp"
#include "forge/linalg.hpp"
#include "forge/modp.hpp"
#include "forge/numtheory.hpp"

using namespace forge;

TEST_CASE("number theory helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(21) == 12);
    CHECK(euler_phi(63) == 36);
    CHECK(is_prime_u64(2147483647ull));
    CHECK(!is_prime_u64(2147483649ull));
    auto d = divisors(21);
    CHECK(d == std::vector<long>({1, 3, 7, 21}));

    // x^2 + x + 1
    auto p3 = cyclotomic_polynomial(3);
    CHECK(p3 == std::vector<mpz_class>({1, 1, 1}));
    // x^12 - x^11 + x^9 - x^8 + x^6 - x^4 + x^3 - x + 1
    auto p21 = cyclotomic_polynomial(21);
    CHECK(p21 == std::vector<mpz_class>({1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1}));

    std::uint64_t p = prime_congruent_1_mod(21, 1u << 30);
    CHECK(is_prime_u64(p));
    CHECK(p % 21 == 1);
    std::uint64_t z = element_of_order_mod(21, p);
    std::uint64_t acc = z;
    int ord = 1;
    while (acc != 1) {
        acc = (acc * z) % p;
        ++ord;
    }
    CHECK(ord == 21);
}

TEST_CASE("cyclotomic ring operations") {
    auto F3 = CycField::get(3);
    auto z3 = Cyc::root(F3, 1);
    CHECK(z3 * Cyc::root(F3, 2) == Cyc::one(F3));
    CHECK(z3 + Cyc::root(F3, 2) == Cyc::integer(F3, -1));

    auto F5 = CycField::get(5);
    auto z5 = Cyc::root(F5, 1);
    auto lhs = (Cyc::one(F5) + z5).pow(2);
    auto rhs = Cyc::one(F5) + z5.scaled(Rat(2)) + Cyc::root(F5, 2);
    CHECK(lhs == rhs);

    auto F7 = CycField::get(7);
    CHECK(Cyc::root(F7, 1).inv() == Cyc::root(F7, 6));
}

TEST_CASE("conjugation and galois action") {
    auto F5 = CycField::get(5);
    auto x = Cyc::one(F5) + Cyc::root(F5, 3);
    CHECK(x.conj() == Cyc::one(F5) + Cyc::root(F5, 2));

    auto F7 = CycField::get(7);
    auto a = Cyc::one(F7) + Cyc::root(F7, 3);
    auto b = Cyc::integer(F7, 2) - Cyc::root(F7, 1);
    CHECK((a * b).galois(2) == a.galois(2) * b.galois(2));
    CHECK(Cyc::root(F7, 1).galois(2) == Cyc::root(F7, 2));
    CHECK_THROWS_AS(a.galois(7), std::invalid_argument);

    // modulus of a root of unity is 1: z * conj(z) == 1
    auto F21 = CycField::get(21);
    auto z = Cyc::root(F21, 5);
    CHECK(z * z.conj() == Cyc::one(F21));
}

TEST_CASE("multiplicative order of scalars") {
    auto F21 = CycField::get(21);
    CHECK(Cyc::root(F21, 3).order_of() == 7);
    CHECK(Cyc::root(F21, 1).order_of() == 21);
    CHECK(Cyc::integer(F21, -1).order_of() == 2);
    CHECK(Cyc::integer(F21, 2).order_of() == 0);

    auto F3 = CycField::get(3);
    // 1 + z3 = -z3^2 has order 6
    CHECK((Cyc::one(F3) + Cyc::root(F3, 1)).order_of() == 6);
}

TEST_CASE("inversion against the minimal polynomial") {
    auto F5 = CycField::get(5);
    auto x = Cyc::one(F5) + Cyc::root(F5, 1);
    CHECK(x * x.inv() == Cyc::one(F5));

    auto F21 = CycField::get(21);
    auto y = Cyc::rational(F21, Rat(3, 2)) + Cyc::root(F21, 5) - Cyc::root(F21, 11);
    CHECK(y * y.inv() == Cyc::one(F21));
    CHECK_THROWS_AS(Cyc::zero(F21).inv(), std::domain_error);
}

TEST_CASE("promotion to a larger conductor") {
    auto F3 = CycField::get(3);
    auto F21 = CycField::get(21);
    auto z = Cyc::root(F3, 1).promote(F21);
    CHECK(z == Cyc::root(F21, 7));
    CHECK(z.pow(3) == Cyc::one(F21));
    // promotion is a ring homomorphism
    auto a = Cyc::one(F3) + Cyc::root(F3, 2);
    auto b = Cyc::integer(F3, 3) - Cyc::root(F3, 1);
    CHECK((a * b).promote(F21) == a.promote(F21) * b.promote(F21));
}

TEST_CASE("specialization to a prime field") {
    auto F21 = CycField::get(21);
    ModCtx ctx = ModCtx::make(F21);
    std::uint64_t z = ctx.reduce(Cyc::root(F21, 1));
    CHECK(ctx.pow(z, 21) == 1);
    CHECK(ctx.pow(z, 7) != 1);
    CHECK(ctx.pow(z, 3) != 1);

    auto a = Cyc::rational(F21, Rat(5, 3)) + Cyc::root(F21, 4);
    auto b = Cyc::root(F21, 17) - Cyc::rational(F21, Rat(1, 2));
    CHECK(ctx.reduce(a * b) == ctx.mul(ctx.reduce(a), ctx.reduce(b)));
    CHECK(ctx.reduce(a + b) == ctx.add(ctx.reduce(a), ctx.reduce(b)));
    CHECK(ctx.mul(ctx.reduce(a), ctx.reduce(a.inv())) == 1);
}

TEST_CASE("exact elimination: rank, kernel, solve, inverse") {
    auto F3 = CycField::get(3);
    auto z = Cyc::root(F3, 1);

    DMat A(F3, 2, 2);
    A.at(0, 0) = Cyc::one(F3);
    A.at(0, 1) = z;
    A.at(1, 0) = z;
    A.at(1, 1) = z * z;
    CHECK(rank_exact(A) == 1);
    auto ker = nullspace_exact(A);
    REQUIRE(ker.size() == 1);
    // check A * k == 0
    for (long r = 0; r < 2; ++r) {
        Cyc s = A.at(r, 0) * ker[0][0] + A.at(r, 1) * ker[0][1];
        CHECK(s.is_zero());
    }

    DMat B(F3, 2, 2);
    B.at(0, 0) = Cyc::one(F3);
    B.at(0, 1) = z;
    B.at(1, 0) = Cyc::integer(F3, 2);
    B.at(1, 1) = Cyc::one(F3);
    auto Binv = inverse_exact(B);
    for (long r = 0; r < 2; ++r)
        for (long c = 0; c < 2; ++c) {
            Cyc s = B.at(r, 0) * Binv.at(0, c) + B.at(r, 1) * Binv.at(1, c);
            CHECK(s == (r == c ? Cyc::one(F3) : Cyc::zero(F3)));
        }

    std::vector<Cyc> rhs = {z, Cyc::one(F3)};
    std::vector<Cyc> x;
    REQUIRE(solve_exact(B, rhs, x));
    for (long r = 0; r < 2; ++r) {
        Cyc s = B.at(r, 0) * x[0] + B.at(r, 1) * x[1];
        CHECK(s == rhs[r]);
    }

    // inconsistent system
    DMat C(F3, 2, 1);
    C.at(0, 0) = Cyc::one(F3);
    C.at(1, 0) = Cyc::one(F3);
    std::vector<Cyc> bad = {Cyc::one(F3), Cyc::zero(F3)};
    CHECK(!solve_exact(C, bad, x));
}

TEST_CASE("modular elimination agrees with exact rank") {
    auto F21 = CycField::get(21);
    ModCtx ctx = ModCtx::make(F21);

    // deterministic pseudo-random integer matrix with planted rank deficiency
    const long n = 8;
    std::uint64_t s = 1;
    auto next = [&s]() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return (long)((s >> 33) % 7) - 3;
    };
    DMat A(F21, n, n);
    for (long r = 0; r < n - 2; ++r)
        for (long c = 0; c < n; ++c) A.at(r, c) = Cyc::integer(F21, next());
    for (long c = 0; c < n; ++c) {
        A.at(n - 2, c) = A.at(0, c) + A.at(1, c);  // dependent row
        A.at(n - 1, c) = A.at(2, c) - A.at(3, c);  // dependent row
    }
    long exact = rank_exact(A);
    CHECK(exact == 6);

    ModMat M(n, n);
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) M.at(r, c) = ctx.reduce(A.at(r, c));
    CHECK(rank_mod(ctx, M) == exact);

    ModEchelon ech(ctx, n);
    for (long r = 0; r < n; ++r) {
        std::vector<std::uint64_t> row(n);
        for (long c = 0; c < n; ++c) row[c] = ctx.reduce(A.at(r, c));
        ech.feed(std::move(row));
    }
    CHECK(ech.rank() == exact);
}
