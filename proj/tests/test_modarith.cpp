#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include <fibform/modarith.hpp>

using namespace fibform;

TEST_CASE("is_prime on small and structured inputs", "[modarith]") {
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91)); // 7 * 13
    CHECK(is_prime(1999));
    CHECK(is_prime((1ULL << 61) - 1)); // Mersenne
    CHECK_FALSE(is_prime((1ULL << 61) - 3));
    CHECK_FALSE(is_prime(3215031751ULL)); // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("legendre matches Euler criterion anchors", "[modarith]") {
    CHECK(legendre(1, 7) == 1);
    CHECK(legendre(3, 7) == -1); // 3^3 = 27 = -1 mod 7
    CHECK(legendre(0, 11) == 0);
    CHECK(legendre(-1, 13) == 1);  // 13 = 1 mod 4
    CHECK(legendre(-1, 11) == -1); // 11 = 3 mod 4
    CHECK_THROWS_AS(legendre(3, 4), NotPrime);
    CHECK_THROWS_AS(legendre(3, 2), NotPrime);
}

TEST_CASE("legendre is multiplicative", "[modarith]") {
    std::mt19937_64 rng(20260814);
    for (std::uint64_t p : {7ULL, 11ULL, 13ULL, 101ULL, 499ULL}) {
        std::uniform_int_distribution<std::uint64_t> pick(1, p - 1);
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t a = pick(rng), b = pick(rng);
            CHECK(legendre(static_cast<std::int64_t>(mul_mod(a, b, p)), p) ==
                  legendre(a, p) * legendre(b, p));
        }
    }
}

TEST_CASE("quadratic_residues gives the familiar sets", "[modarith]") {
    CHECK(quadratic_residues(7).residues == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(quadratic_residues(11).residues == std::vector<std::uint64_t>{1, 3, 4, 5, 9});
    CHECK(quadratic_residues(3).residues == std::vector<std::uint64_t>{1});
    CHECK_THROWS_AS(quadratic_residues(15), NotPrime);
}

TEST_CASE("residue sets partition and their sums vanish mod p", "[modarith]") {
    for (std::uint64_t p = 3; p <= 500; ++p) {
        if (!is_prime(p)) continue;
        const ResidueSets sets = quadratic_residues(p);
        REQUIRE(sets.residues.size() == (p - 1) / 2);
        REQUIRE(sets.nonresidues.size() == (p - 1) / 2);
        for (std::uint64_t r : sets.residues) CHECK(legendre(r, p) == 1);
        for (std::uint64_t n : sets.nonresidues) CHECK(legendre(n, p) == -1);

        std::uint64_t sum = 0;
        for (std::uint64_t r : sets.residues) sum += r;
        if (p == 3)
            CHECK(sum % p == 1); // the lone exception, excluded from the main construction
        else
            CHECK(sum % p == 0);
    }
}

TEST_CASE("primitive_root returns the smallest generator", "[modarith]") {
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(13) == 2);
    CHECK(primitive_root(3) == 2);
    for (std::uint64_t p = 3; p <= 199; ++p) {
        if (!is_prime(p)) continue;
        const std::uint64_t g = primitive_root(p);
        CHECK(legendre(g, p) == -1); // generators are non-residues
    }
}

TEST_CASE("isqrt anchors and random 512-bit inputs", "[modarith]") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1764) == 42);
    CHECK(isqrt(932) == 30);
    CHECK_THROWS_AS(isqrt(mpz_class(-1)), std::domain_error);

    std::mt19937_64 rng(977);
    for (int i = 0; i < 50; ++i) {
        mpz_class n = 0;
        for (int w = 0; w < 8; ++w) n = (n << 64) + rng();
        const mpz_class r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("is_perfect_square", "[modarith]") {
    CHECK(is_perfect_square(0));
    CHECK(is_perfect_square(1764));
    CHECK_FALSE(is_perfect_square(932));
    CHECK_FALSE(is_perfect_square(mpz_class(-4)));
}
