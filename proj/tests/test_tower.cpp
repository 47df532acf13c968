#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagcube/chain.hpp"
#include "diagcube/specialize.hpp"
#include "testutil.hpp"

using namespace diagcube;
using dctest::kSeed;

namespace {

struct Exact4 {
    TowerAlgebraPtr<ExactCoeff> alg = make_exact_tower(4);
    ExactCoeff one = ExactCoeff::constant(4, CycloRat(1));
    ExactCoeff x(int i) const { return ExactCoeff::variable(4, i - 1, CycloRat(1)); }
    ExactTowerElem y(int i) const { return ExactTowerElem::gen(alg, i); }
    ExactTowerElem cst(const ExactCoeff& c) const { return ExactTowerElem::constant(alg, c); }
};

} // namespace

TEST_CASE("sextic relation drives multiplication") {
    Exact4 T;
    ExactCoeff r1 = T.x(1) * T.x(1) * (T.x(1) - T.one);

    // y1 * y1^5 reduces to x1^2(x1-1)
    CHECK(T.y(1) * T.y(1).pow(5) == T.cst(r1));
    // (y1^3)^2 reduces the same way
    CHECK(T.y(1).pow(3) * T.y(1).pow(3) == T.cst(r1));
    // unrelated generators stay a basis monomial
    ExactTowerElem m = T.y(1) * T.y(2);
    CHECK(m.coeffs().size() == 1);
    std::array<std::uint8_t, 8> e{1, 1, 0, 0};
    CHECK(m == ExactTowerElem::monomial(T.alg, e, T.one));
}

TEST_CASE("normal form uniqueness") {
    Exact4 T;
    // the same element built along two different routes
    ExactTowerElem a = (T.y(1) + T.y(2)).pow(2);
    ExactTowerElem b = T.y(1) * T.y(1) + T.y(1) * T.y(2) + T.y(2) * T.y(1) + T.y(2) * T.y(2);
    CHECK(a == b);
    CHECK((a - b).is_zero());
}

TEST_CASE("inverses") {
    Exact4 T;
    ExactCoeff r1 = T.x(1) * T.x(1) * (T.x(1) - T.one);

    SUBCASE("inv(y1) = y1^5 / (x1^2(x1-1))") {
        ExactTowerElem inv = T.y(1).inv();
        CHECK(inv == T.y(1).pow(5).scaled(r1.inv()));
        CHECK((T.y(1) * inv).is_one());
    }
    SUBCASE("coefficient-level inverse") {
        ExactTowerElem xel = T.cst(T.x(1));
        CHECK((xel * xel.inv()).is_one());
        CHECK(xel.inv() == T.cst(T.x(1).inv()));
    }
    SUBCASE("inv(t2) * t2 = 1") {
        ExactTowerElem t2 = T.y(2) * T.y(1).inv();
        CHECK((t2.inv() * t2).is_one());
    }
    SUBCASE("multi-term inverse") {
        ExactTowerElem a = T.y(1).pow(3) * T.y(2).pow(3) - ExactTowerElem::one(T.alg);
        ExactTowerElem ai = a.inv();
        CHECK((a * ai).is_one());
    }
    SUBCASE("zero input") {
        CHECK_THROWS_AS(ExactTowerElem(T.alg).inv(), division_by_zero);
    }
}

TEST_CASE("scaling action") {
    Exact4 T;
    CycloRat eta = CycloRat::eta();

    // g(y1) = -omega y1
    CHECK(T.y(1).apply_g(1) == T.y(1).scaled(ExactCoeff::constant(4, eta)));
    // order six
    ExactTowerElem a = T.y(1) * T.y(2).pow(3) + T.cst(T.x(2)) * T.y(4);
    CHECK(a.apply_g(6) == a);
    // total y-degree six is fixed
    std::array<std::uint8_t, 8> e{2, 2, 1, 1};
    ExactTowerElem m = ExactTowerElem::monomial(T.alg, e, T.one);
    CHECK(m.apply_g(1) == m);
}

TEST_CASE("invariance predicate") {
    Exact4 T;
    ExactTowerElem t2 = T.y(2) * T.y(1).inv(); // y2 * y1^5 / r1
    CHECK(t2.is_invariant());
    CHECK_FALSE(T.y(1).is_invariant());
    CHECK(T.cst(T.x(1)).is_invariant());
    // agreement with the action
    CHECK(t2.apply_g(1) == t2);
    CHECK(T.y(1).apply_g(1) != T.y(1));
}

TEST_CASE("invariant monomials factor through the generators") {
    // y1^m1 y2^m2 y3^m3 y4^m4 with sum 6k equals r1^k t2^m2 t3^m3 t4^m4
    Exact4 T;
    ExactCoeff r1 = T.x(1) * T.x(1) * (T.x(1) - T.one);
    ExactTowerElem y1inv = T.y(1).inv();
    std::array<ExactTowerElem, 5> t{ExactTowerElem::one(T.alg), ExactTowerElem::one(T.alg),
                                    T.y(2) * y1inv, T.y(3) * y1inv, T.y(4) * y1inv};
    std::mt19937_64 rng(kSeed ^ 0x70);
    int tested = 0;
    while (tested < 12) {
        std::array<std::uint8_t, 8> m{};
        for (int i = 1; i < 4; ++i) m[i] = static_cast<std::uint8_t>(draw_u64(rng, 6));
        unsigned rest = m[1] + m[2] + m[3];
        unsigned m1 = (6 - rest % 6) % 6;
        unsigned total = m1 + rest;
        if (total == 0 || total % 6 != 0) continue;
        m[0] = static_cast<std::uint8_t>(m1);
        unsigned k = total / 6;
        ExactTowerElem lhs = ExactTowerElem::monomial(T.alg, m, T.one);
        ExactTowerElem rhs = T.cst(T.one.pow(0));
        rhs = ExactTowerElem::one(T.alg);
        for (unsigned j = 0; j < k; ++j) rhs = rhs.scaled(r1);
        rhs = rhs * t[2].pow(m[1]) * t[3].pow(m[2]) * t[4].pow(m[3]);
        CHECK(lhs == rhs);
        ++tested;
    }
}

TEST_CASE("nonzero witnesses") {
    auto env = build_exact_env(4);
    ExactTowerElem one = ExactTowerElem::one(env.alg);

    ExactTowerElem cond1 = env.u.at(2).pow(3) - env.u.at(2);
    NonzeroWitness w1 = nonzero_witness(cond1, kSeed);
    CHECK(w1.nonzero);
    CHECK(w1.witnessed);
    CHECK(is_prime_u64(w1.prime));

    ExactTowerElem cond2 = env.w.at(2).pow(3) - one;
    NonzeroWitness w2 = nonzero_witness(cond2, kSeed);
    CHECK(w2.nonzero);
    CHECK(w2.witnessed);

    ExactTowerElem zero = env.t.at(3) - env.t.at(3);
    NonzeroWitness w3 = nonzero_witness(zero, kSeed);
    CHECK_FALSE(w3.nonzero);
}

TEST_CASE("random exact inversions of bounded support") {
    Exact4 T;
    std::mt19937_64 rng(kSeed ^ 0x99);
    int done = 0;
    while (done < 6) {
        ExactTowerElem a(T.alg);
        unsigned support = 1 + static_cast<unsigned>(draw_u64(rng, 2));
        for (unsigned s = 0; s < support; ++s) {
            std::array<std::uint8_t, 8> e{};
            for (int i = 0; i < 4; ++i) e[i] = static_cast<std::uint8_t>(draw_u64(rng, 6));
            long c = static_cast<long>(draw_u64(rng, 5)) - 2;
            if (c == 0) c = 1;
            a = a + ExactTowerElem::monomial(T.alg, e, ExactCoeff::constant(4, CycloRat(c)));
        }
        if (a.is_zero()) continue;
        CHECK((a * a.inv()).is_one());
        ++done;
    }
}

TEST_CASE("exact identities survive specialization") {
    auto env = build_exact_env(4);
    // an identity: lemma-1 residual for t2
    ExactCoeff r1 = env.alg->rel[0], r2 = env.alg->rel[1];
    ExactTowerElem residual = env.t.at(2).pow(6).scaled(r1) - env.cst(r2);
    CHECK(residual.is_zero());
    // and a non-identity
    ExactTowerElem wrong = env.t.at(2).pow(6).scaled(r1) - env.cst(r1);
    CHECK_FALSE(wrong.is_zero());

    std::mt19937_64 rng(kSeed ^ 0x31);
    int witnessed = 0;
    for (int trial = 0; trial < 10; ++trial) {
        std::uint64_t p = nth_sample_prime(10000, 1000000, kSeed + 5, trial);
        FpField f = fp_with_omega(p);
        std::vector<FpElem> xi;
        for (int i = 0; i < 4; ++i) xi.push_back(f.make_u(2 + draw_u64(rng, p - 2)));
        auto alg = make_modular_tower(f, xi);
        auto rs = specialize_tower_elem(residual, alg, f, xi);
        if (!rs) continue;
        CHECK(rs->is_zero()); // identities hold under every valid specialization
        auto ws = specialize_tower_elem(wrong, alg, f, xi);
        if (ws && !ws->is_zero()) ++witnessed;
    }
    CHECK(witnessed >= 8);
}

TEST_CASE("modular tower arithmetic matches exact arithmetic") {
    // multiply two elements exactly, then specialize; or specialize first
    // and multiply modularly: same answer
    Exact4 T;
    std::mt19937_64 rng(kSeed ^ 0xfe);
    ExactTowerElem a = T.y(1).pow(4) * T.y(3).scaled(ExactCoeff::variable(4, 0, CycloRat(1))) +
                       T.y(2).pow(5) * T.y(4).pow(2);
    ExactTowerElem b = T.y(1).pow(3) * T.y(2) + ExactTowerElem::one(T.alg).scaled(
                                                     ExactCoeff::variable(4, 2, CycloRat(1)));
    ExactTowerElem ab = a * b;
    std::uint64_t p = 10009;
    FpField f = fp_with_omega(p);
    std::vector<FpElem> xi{f.make_u(5), f.make_u(17), f.make_u(23), f.make_u(99)};
    auto alg = make_modular_tower(f, xi);
    auto sa = specialize_tower_elem(a, alg, f, xi);
    auto sb = specialize_tower_elem(b, alg, f, xi);
    auto sab = specialize_tower_elem(ab, alg, f, xi);
    REQUIRE(sa);
    REQUIRE(sb);
    REQUIRE(sab);
    CHECK(*sa * *sb == *sab);
}
