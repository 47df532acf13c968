#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diagcube/cyclo.hpp"
#include "diagcube/fp.hpp"
#include "diagcube/rational.hpp"
#include "testutil.hpp"

using namespace diagcube;
using dctest::kSeed;

TEST_CASE("omega satisfies its defining relations") {
    CycloRat w = CycloRat::omega();
    CHECK(w * w * w == CycloRat(1));
    CHECK(w * w + w + CycloRat(1) == CycloRat(0));
}

TEST_CASE("eta is a primitive sixth root: eta^6 = 1, eta^3 = -1") {
    CycloRat eta = CycloRat::eta();
    CHECK(eta.pow(6) == CycloRat(1));
    CHECK(eta.pow(3) == CycloRat(-1));
    CHECK(eta.pow(2) != CycloRat(1));
    CHECK(eta.pow(3) != CycloRat(1));
}

TEST_CASE("cyclotomic arithmetic normal form and inverse") {
    CycloRat a(make_rat(3, 2), make_rat(-1, 3));
    CycloRat ai = a.inv();
    CHECK(a * ai == CycloRat(1));
    CHECK_THROWS_AS(CycloRat(0).inv(), division_by_zero);
    // omega^2 rewritten onto the {1, omega} basis
    CycloRat w2 = CycloRat::omega() * CycloRat::omega();
    CHECK(w2 == CycloRat(Rat(-1), Rat(-1)));
}

TEST_CASE("rational cube test") {
    CHECK(rat_is_cube(make_rat(27, 8)));
    CHECK(rat_is_cube(Rat(-8)));
    CHECK_FALSE(rat_is_cube(Rat(2)));
    CHECK_FALSE(rat_is_cube(make_rat(4, 9)));
    CHECK(rat_is_cube(make_rat(-27, 64)));
    CHECK_THROWS_AS(rat_is_cube(Rat(0)), std::domain_error);
}

TEST_CASE("cyclo cube test is tri-valued") {
    CHECK(elem_is_cube(CycloRat(Rat(27))) == Tri::yes);
    CHECK(elem_is_cube(CycloRat(Rat(2))) == Tri::no);
    CHECK(elem_is_cube(CycloRat(Rat(1), Rat(1))) == Tri::unknown);
}

TEST_CASE("cyclo square roots") {
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 40; ++i) {
        CycloRat z = dctest::rnd_cyclo(rng);
        auto s = elem_sqrt(z * z);
        REQUIRE(s.has_value());
        CHECK((*s * *s == z * z));
    }
    CHECK_FALSE(elem_sqrt(CycloRat(Rat(2))).has_value());
    // -3 = (1 + 2 omega)^2
    auto r = elem_sqrt(CycloRat(Rat(-3)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == CycloRat(Rat(-3)));
}

TEST_CASE("fp_with_omega picks a primitive cube root") {
    // oracle: brute-force x^3 = 1, x != 1
    auto brute_roots = [](std::uint64_t p) {
        std::set<std::uint64_t> roots;
        for (std::uint64_t x = 2; x < p; ++x)
            if (x * x % p * x % p == 1) roots.insert(x);
        return roots;
    };
    for (std::uint64_t p : {7ull, 13ull}) {
        auto roots = brute_roots(p);
        FpField f = fp_with_omega(p);
        CHECK(roots.count(f.omega) == 1);
        CHECK(f.omega == *roots.begin()); // lexicographically smaller root by default
        FpField g = fp_with_omega(p, true);
        CHECK(roots.count(g.omega) == 1);
        CHECK(g.omega == *roots.rbegin());
    }
    CHECK(brute_roots(7) == std::set<std::uint64_t>{2, 4});
    CHECK(brute_roots(13) == std::set<std::uint64_t>{3, 9});

    CHECK_THROWS_AS(fp_with_omega(5), std::invalid_argument);     // 5 ≡ 2 (mod 3)
    CHECK_THROWS_AS(fp_with_omega(15), std::invalid_argument);    // not prime
    CHECK_THROWS_AS(fp_with_omega(10007), std::invalid_argument); // 10007 ≡ 2 (mod 3)
    CHECK(fp_plain(10007).p == 10007);                            // fine without cube roots
    CHECK_THROWS_AS(fp_plain(10007).omega_elem(), error);
    FpField f = fp_with_omega(10009);
    FpElem w = f.omega_elem();
    CHECK(w * w * w == f.one());
    CHECK(w != f.one());
    CHECK(w * w + w + f.one() == f.zero());
}

TEST_CASE("fp cube roots and squares") {
    FpField f = fp_with_omega(10009);
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 50; ++i) {
        FpElem a = f.make_u(1 + draw_u64(rng, f.p - 1));
        FpElem c = a * a * a;
        CHECK(elem_is_cube(c) == Tri::yes);
        auto r = elem_cbrt(c);
        REQUIRE(r.has_value());
        CHECK(*r * *r * *r == c);
        FpElem s = a * a;
        auto q = elem_sqrt(s);
        REQUIRE(q.has_value());
        CHECK(*q * *q == s);
    }
    // cube residues make up a third of the multiplicative group
    unsigned cubes = 0;
    for (std::uint64_t v = 1; v <= 300; ++v)
        if (elem_is_cube(f.make_u(v)) == Tri::yes) ++cubes;
    CHECK(cubes < 150);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(kSeed ^ 0xf1e1d);
    FpField f = fp_with_omega(999983ull % 3 == 1 ? 999983ull : 1000003ull);
    for (int i = 0; i < 100; ++i) {
        CycloRat a = dctest::rnd_cyclo(rng), b = dctest::rnd_cyclo(rng), c = dctest::rnd_cyclo(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        FpElem x = f.make_u(draw_u64(rng, f.p)), y = f.make_u(draw_u64(rng, f.p)),
               z = f.make_u(draw_u64(rng, f.p));
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inv() == f.one());
    }
}

TEST_CASE("specialization homomorphism respects ring structure") {
    std::mt19937_64 rng(kSeed ^ 0xcafe);
    FpField f = fp_with_omega(10009);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        CycloRat a = dctest::rnd_cyclo(rng), b = dctest::rnd_cyclo(rng);
        auto fa = cyclo_to_fp(a, f), fb = cyclo_to_fp(b, f);
        auto fsum = cyclo_to_fp(a + b, f), fprod = cyclo_to_fp(a * b, f);
        if (!fa || !fb || !fsum || !fprod) continue;
        ++checked;
        CHECK(*fa + *fb == *fsum);
        CHECK(*fa * *fb == *fprod);
    }
    CHECK(checked > 50);
}

TEST_CASE("prime sampler yields distinct admissible primes") {
    std::set<std::uint64_t> seen;
    for (unsigned i = 0; i < 20; ++i) {
        std::uint64_t p = nth_sample_prime(10000, 1000000, kSeed, i);
        CHECK(is_prime_u64(p));
        CHECK(p % 3 == 1);
        CHECK(p >= 10000);
        CHECK(p <= 1000000);
        CHECK(seen.insert(p).second);
    }
    // determinism
    CHECK(nth_sample_prime(10000, 1000000, kSeed, 7) == nth_sample_prime(10000, 1000000, kSeed, 7));
}
