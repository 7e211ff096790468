#include <catch2/catch_amalgamated.hpp>

#include <fibform/modarith.hpp>
#include <fibform/pell.hpp>
#include <fibform/represent.hpp>

using namespace fibform;

TEST_CASE("continued fraction of sqrt(D)", "[pell]") {
    const CFExpansion cf13 = cf_sqrt(13);
    CHECK(cf13.a0 == 3);
    CHECK(cf13.period == std::vector<std::uint64_t>{1, 1, 1, 1, 6});
    const CFExpansion cf7 = cf_sqrt(7);
    CHECK(cf7.a0 == 2);
    CHECK(cf7.period == std::vector<std::uint64_t>{1, 1, 1, 4});
    CHECK_THROWS_AS(cf_sqrt(4), NotIrrational);
    CHECK_THROWS_AS(cf_sqrt(9), NotIrrational);
    CHECK_THROWS_AS(cf_sqrt(1), NotIrrational);
}

TEST_CASE("period-end convergent solves the +-1 Pell equation", "[pell]") {
    for (std::uint64_t D = 2; D <= 100; ++D) {
        if (is_perfect_square(mpz_class(static_cast<unsigned long>(D)))) continue;
        const CFExpansion cf = cf_sqrt(D);
        CHECK(cf.period.back() == 2 * cf.a0);
        const PellSolution s = pell_pm1_fundamental(D);
        CHECK(s.x * s.x - D * mpz_class(s.y * s.y) == s.norm);
        CHECK(s.norm == (cf.period.size() % 2 == 0 ? 1 : -1));
        CHECK(s.y >= 1);
    }
}

TEST_CASE("fundamental +-4 units at known primes", "[pell]") {
    struct Expect {
        std::uint64_t p;
        long X, Y;
        int norm4;
    };
    for (const Expect e : {Expect{5, 1, 1, -4}, Expect{13, 3, 1, -4}, Expect{29, 5, 1, -4},
                           Expect{17, 8, 2, -4}, Expect{37, 12, 2, -4}, Expect{41, 64, 10, -4},
                           Expect{53, 7, 1, -4}}) {
        const PellUnit u = fundamental_unit4(e.p);
        CHECK(u.X == e.X);
        CHECK(u.Y == e.Y);
        CHECK(u.norm4 == e.norm4);
    }
    CHECK_THROWS_AS(fundamental_unit4(7), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_unit4(2), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_unit4(9), NotPrime);
}

TEST_CASE("unit invariants hold for all p = 1 mod 4 up to 200", "[pell]") {
    for (std::uint64_t p = 5; p <= 200; ++p) {
        if (!is_prime(p) || p % 4 != 1) continue;
        const PellUnit f = fundamental_unit4(p);
        CHECK(f.X * f.X - p * mpz_class(f.Y * f.Y) == f.norm4);
        CHECK(f.Y >= 1);
        CHECK(mpz_odd_p(f.X.get_mpz_t()) == mpz_odd_p(f.Y.get_mpz_t()));
        const PellUnit plus = norm_plus4_unit(p);
        CHECK(plus.norm4 == 4);
        CHECK(plus.X * plus.X - p * mpz_class(plus.Y * plus.Y) == 4);
    }
}

TEST_CASE("norm +4 unit anchors", "[pell]") {
    const PellUnit u13 = norm_plus4_unit(13);
    CHECK(u13.X == 11);
    CHECK(u13.Y == 3);
    const PellUnit u5 = norm_plus4_unit(5);
    CHECK(u5.X == 3);
    CHECK(u5.Y == 1);
    const PellUnit u29 = norm_plus4_unit(29);
    CHECK(u29.X == 27);
    CHECK(u29.Y == 5);
}

TEST_CASE("orbit stepping", "[pell]") {
    const Representation r13{13, CaseTag::CaseI, 42, 8, 4 * fib(13)};
    const PellUnit u13 = norm_plus4_unit(13);
    const Representation fwd = orbit_step(r13, u13, OrbitDirection::Forward);
    CHECK(fwd.u == 387);
    CHECK(fwd.v == 107);
    CHECK(fwd.u * fwd.u - 13 * mpz_class(fwd.v * fwd.v) == 932);

    const Representation r5{5, CaseTag::CaseI, 5, 1, 20};
    const Representation fwd5 = orbit_step(r5, norm_plus4_unit(5), OrbitDirection::Forward);
    CHECK(fwd5.u == 10);
    CHECK(fwd5.v == 4);

    const PellUnit identity{2, 0, 4};
    const Representation same = orbit_step(r13, identity, OrbitDirection::Forward);
    CHECK(same.u == r13.u);
    CHECK(same.v == r13.v);

    const Representation caseii{7, CaseTag::CaseII, 3, 1, 52};
    CHECK_THROWS_AS(orbit_step(caseii, u13, OrbitDirection::Forward), std::invalid_argument);
    const PellUnit minus{3, 1, -4};
    CHECK_THROWS_AS(orbit_step(r13, minus, OrbitDirection::Forward), std::invalid_argument);
}

TEST_CASE("backward undoes forward and preserves the form", "[pell]") {
    for (std::uint64_t p : {5ULL, 13ULL, 17ULL, 29ULL, 37ULL, 41ULL}) {
        const Representation start = represent(p);
        const PellUnit unit = norm_plus4_unit(p);
        Representation cur = start;
        for (int i = 0; i < 4; ++i) {
            const Representation next = orbit_step(cur, unit, OrbitDirection::Forward);
            CHECK(verify_representation(next));
            const Representation back = orbit_step(next, unit, OrbitDirection::Backward);
            CHECK(back.u == cur.u);
            CHECK(back.v == cur.v);
            cur = next;
        }
    }
}

TEST_CASE("orbit reduction finds the small end", "[pell]") {
    const Representation big13{13, CaseTag::CaseI, 387, 107, 4 * fib(13)};
    const Representation red13 = reduce_in_orbit(big13);
    CHECK(red13.u == 42);
    CHECK(red13.v == 8);
    const Representation again = reduce_in_orbit(red13); // idempotent
    CHECK(again.u == 42);
    CHECK(again.v == 8);

    const Representation big5{5, CaseTag::CaseI, 10, 4, 20};
    const Representation red5 = reduce_in_orbit(big5);
    CHECK(red5.u == 5);
    CHECK(red5.v == 1);
}

TEST_CASE("generate_solutions walks the orbit upward", "[pell]") {
    const auto sols13 = generate_solutions(13, 2);
    REQUIRE(sols13.size() == 2);
    CHECK(sols13[0].u == 42);
    CHECK(sols13[0].v == 8);
    CHECK(sols13[1].u == 387);
    CHECK(sols13[1].v == 107);

    const auto sols5 = generate_solutions(5, 2);
    REQUIRE(sols5.size() == 2);
    CHECK(sols5[0].u == 5);
    CHECK(sols5[1].u == 10);

    CHECK(generate_solutions(13, 0).empty());
    CHECK_THROWS_AS(generate_solutions(7, 3), std::invalid_argument);

    const auto many = generate_solutions(13, 5);
    REQUIRE(many.size() == 5);
    for (std::size_t i = 0; i < many.size(); ++i) {
        CHECK(verify_representation(many[i]));
        if (i > 0) CHECK(many[i].u > many[i - 1].u);
    }
}
