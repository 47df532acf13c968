#include "diagcube/selftest.hpp"

#include <array>
#include <functional>
#include <random>

#include "diagcube/chain.hpp"
#include "diagcube/expr.hpp"
#include "diagcube/specialize.hpp"

namespace diagcube {

namespace {

Rat random_rat(std::mt19937_64& rng) {
    long num = static_cast<long>(draw_u64(rng, 21)) - 10;
    long den = 1 + static_cast<long>(draw_u64(rng, 7));
    return make_rat(num, den);
}

CycloRat random_cyclo(std::mt19937_64& rng) {
    return CycloRat(random_rat(rng), random_rat(rng));
}

SparsePoly<CycloRat> random_poly2(std::mt19937_64& rng, unsigned max_terms = 4, unsigned max_deg = 3) {
    SparsePoly<CycloRat> p(2);
    unsigned terms = 1 + static_cast<unsigned>(draw_u64(rng, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m{static_cast<std::uint32_t>(draw_u64(rng, max_deg + 1)),
                   static_cast<std::uint32_t>(draw_u64(rng, max_deg + 1))};
        p.add_term(m, random_cyclo(rng));
    }
    return p;
}

template <FieldElem F, typename Sampler>
bool field_axioms_hold(std::mt19937_64& rng, Sampler sample, int rounds) {
    for (int i = 0; i < rounds; ++i) {
        F a = sample(rng), b = sample(rng), c = sample(rng);
        if (!((a + b) + c == a + (b + c))) return false;
        if (!((a * b) * c == a * (b * c))) return false;
        if (!(a * (b + c) == a * b + a * c)) return false;
        if (!(a + (-a) == a.zero_like())) return false;
        if (!a.is_zero() && !(a * a.inv() == a.one_like())) return false;
        F w = a.omega_like();
        if (!(w * w + w + a.one_like() == a.zero_like())) return false;
    }
    return true;
}

CheckRecord record(const std::string& name, const std::string& anchor, bool ok,
                   std::string witness, std::uint64_t seed) {
    CheckRecord r = make_record(name, anchor, "sampled", ok, {}, seed);
    r.witnesses.push_back(std::move(witness));
    return r;
}

} // namespace

Report run_selftest(std::uint64_t seed) {
    Report rep;
    std::mt19937_64 rng(seed);

    // 1. field axioms
    {
        std::mt19937_64 r1(seed ^ 0x11);
        bool ok = field_axioms_hold<CycloRat>(r1, [](std::mt19937_64& g) { return random_cyclo(g); }, 60);
        rep.add(record("selftest.fields.cyclo", "field axioms over Q(omega)", ok, "60 random triples", seed));

        bool okp = true;
        for (std::uint64_t p : {7ull, 13ull, 10009ull, 1000003ull}) {
            if (!fp_has_cube_roots(p)) continue;
            FpField f = fp_with_omega(p);
            std::mt19937_64 r2(seed ^ p);
            okp = okp && field_axioms_hold<FpElem>(
                             r2, [&](std::mt19937_64& g) { return f.make_u(draw_u64(g, f.p)); }, 60);
        }
        rep.add(record("selftest.fields.fp", "field axioms over F_p", okp, "60 random triples per prime", seed));

        std::mt19937_64 r3(seed ^ 0x33);
        bool okr = field_axioms_hold<ExactCoeff>(
            r3,
            [](std::mt19937_64& g) {
                SparsePoly<CycloRat> num = random_poly2(g, 3, 2);
                SparsePoly<CycloRat> den(2);
                while (den.is_zero()) den = random_poly2(g, 2, 1);
                if (num.is_zero()) return ExactCoeff::zero(2, CycloRat(1));
                return ExactCoeff(num, den);
            },
            25);
        rep.add(record("selftest.fields.ratfunc", "field axioms over k(s3,s4)", okr, "25 random triples", seed));

        // homomorphism Q(omega) -> F_p on sampled pairs
        bool okh = true;
        FpField f = fp_with_omega(10009);
        std::mt19937_64 r4(seed ^ 0x44);
        for (int i = 0; i < 60 && okh; ++i) {
            CycloRat a = random_cyclo(r4), b = random_cyclo(r4);
            auto fa = cyclo_to_fp(a, f), fb = cyclo_to_fp(b, f);
            auto fs = cyclo_to_fp(a + b, f), fp_ = cyclo_to_fp(a * b, f);
            if (!fa || !fb || !fs || !fp_) continue; // denominator divisible by p: skip
            okh = (*fa + *fb == *fs) && (*fa * *fb == *fp_);
        }
        rep.add(record("selftest.fields.hom", "specialization homomorphism", okh,
                       "omega -> omega_p respects + and * on sampled pairs", seed));
    }

    // 2. gcd and squarefree re-multiplication
    {
        std::mt19937_64 r(seed ^ 0x55);
        bool ok = true;
        int rounds = 0;
        for (int i = 0; i < 20 && ok; ++i) {
            SparsePoly<CycloRat> a = random_poly2(r), b = random_poly2(r);
            if (a.is_zero() || b.is_zero()) continue;
            ++rounds;
            SparsePoly<CycloRat> g = poly_gcd(a, b);
            if (!g.is_zero()) ok = divides(g, a) && divides(g, b);
            // squarefree re-multiplication on a*b^2
            SparsePoly<CycloRat> p = a * b * b;
            auto d = squarefree_decompose(p);
            SparsePoly<CycloRat> re = SparsePoly<CycloRat>::constant(2, d.content);
            for (const auto& [fac, mult] : d.factors) re = re * fac.pow(static_cast<unsigned>(mult));
            ok = ok && re == p;
        }
        rep.add(record("selftest.poly.gcd-squarefree", "gcd and squarefree decomposition", ok,
                       std::to_string(rounds) + " random pairs re-multiplied", seed));
    }

    // 3. cube test agrees with brute-force cube testing under specialization
    {
        std::mt19937_64 r(seed ^ 0x66);
        auto random_rat_poly2 = [](std::mt19937_64& g, unsigned mt, unsigned md) {
            SparsePoly<CycloRat> p(2);
            unsigned terms = 1 + static_cast<unsigned>(draw_u64(g, mt));
            for (unsigned t = 0; t < terms; ++t) {
                Monomial m{static_cast<std::uint32_t>(draw_u64(g, md + 1)),
                           static_cast<std::uint32_t>(draw_u64(g, md + 1))};
                p.add_term(m, CycloRat(random_rat(g)));
            }
            return p;
        };
        bool ok = true;
        for (int i = 0; i < 6 && ok; ++i) {
            SparsePoly<CycloRat> gn = random_rat_poly2(r, 3, 2), gd(2);
            while (gd.is_zero()) gd = random_rat_poly2(r, 2, 1);
            if (gn.is_zero()) continue;
            ExactCoeff g(gn, gd);
            ExactCoeff f = g * g * g;
            if (elem_is_cube(f) != Tri::yes) { ok = false; break; }
            // specializations of a cube stay cubes
            for (unsigned j = 0; j < 20 && ok; ++j) {
                std::uint64_t p = nth_sample_prime(10000, 1000000, seed + i, j);
                FpField fld = fp_with_omega(p);
                std::vector<FpElem> pt{fld.make_u(draw_u64(r, p)), fld.make_u(draw_u64(r, p))};
                auto val = ratfunc_eval_fp(f, fld, pt);
                if (!val || val->is_zero()) continue;
                ok = elem_is_cube(*val) == Tri::yes;
            }
            // a forced non-cube must fail at some specialization
            ExactCoeff s3 = ExactCoeff::variable(2, 0, CycloRat(1));
            ExactCoeff h = f * s3;
            if (elem_is_cube(h) != Tri::no) { ok = false; break; }
            bool refuted = false;
            for (unsigned j = 0; j < 40 && !refuted; ++j) {
                std::uint64_t p = nth_sample_prime(10000, 1000000, seed + 31 * i, j);
                FpField fld = fp_with_omega(p);
                std::vector<FpElem> pt{fld.make_u(draw_u64(r, p)), fld.make_u(draw_u64(r, p))};
                auto val = ratfunc_eval_fp(h, fld, pt);
                if (!val || val->is_zero()) continue;
                refuted = elem_is_cube(*val) == Tri::no;
            }
            ok = ok && refuted;
        }
        rep.add(record("selftest.poly.cube-oracle", "cube test vs specialization", ok,
                       "g^3 stays a cube at 20 primes; g^3*s3 refuted at some prime", seed));
    }

    // 4. tower inversion on 50 random nonzero elements of bounded support
    {
        std::mt19937_64 r(seed ^ 0x77);
        bool ok = true;
        int done = 0;
        FpField f = fp_with_omega(10009);
        while (done < 50 && ok) {
            std::vector<FpElem> xi;
            for (int i = 0; i < 4; ++i) xi.push_back(f.make_u(2 + draw_u64(r, f.p - 2)));
            auto alg = make_modular_tower(f, xi);
            TowerElem<FpElem> a(alg);
            unsigned support = 1 + static_cast<unsigned>(draw_u64(r, 4));
            for (unsigned t = 0; t < support; ++t) {
                std::array<std::uint8_t, 8> e{};
                for (int i = 0; i < 4; ++i) e[i] = static_cast<std::uint8_t>(draw_u64(r, 6));
                a = a + TowerElem<FpElem>::monomial(alg, e, f.make_u(1 + draw_u64(r, f.p - 1)));
            }
            if (a.is_zero()) continue;
            try {
                TowerElem<FpElem> b = a.inv();
                ok = (a * b).is_one();
                ++done;
            } catch (const not_invertible&) {
                continue; // zero divisor in the specialized algebra; resample
            }
        }
        rep.add(record("selftest.tower.inverse", "tower inversion", ok,
                       "50 random elements, product with inverse is 1", seed));

        // a couple of exact inversions
        bool okx = true;
        auto env = build_exact_env(4);
        TowerElem<ExactCoeff> one = env.one();
        okx = (env.t.at(2) * env.t.at(2).inv()).is_one() &&
              ((env.v.at(2) - one) * (env.v.at(2) - one).inv()).is_one();
        rep.add(record("selftest.tower.inverse-exact", "tower inversion (exact)", okx,
                       "t2 and v2-1 invert exactly", seed));
    }

    // 5. parse -> print -> parse round-trip
    {
        std::mt19937_64 r(seed ^ 0x88);
        const std::vector<std::string> vars{"s3", "s4"};
        // random AST generator
        std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
            auto node = [](ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); };
            if (depth <= 0 || draw_u64(r, 4) == 0) {
                switch (draw_u64(r, 3)) {
                    case 0: {
                        ExprNode n; n.kind = ExprNode::Kind::var; n.name = vars[draw_u64(r, 2)];
                        return node(std::move(n));
                    }
                    case 1: {
                        ExprNode n; n.kind = ExprNode::Kind::lit; n.lit = Rat(static_cast<long>(draw_u64(r, 9)));
                        return node(std::move(n));
                    }
                    default: {
                        ExprNode n; n.kind = ExprNode::Kind::omega;
                        return node(std::move(n));
                    }
                }
            }
            switch (draw_u64(r, 6)) {
                case 0: { ExprNode n; n.kind = ExprNode::Kind::add; n.a = gen(depth - 1); n.b = gen(depth - 1); return node(std::move(n)); }
                case 1: { ExprNode n; n.kind = ExprNode::Kind::sub; n.a = gen(depth - 1); n.b = gen(depth - 1); return node(std::move(n)); }
                case 2: { ExprNode n; n.kind = ExprNode::Kind::mul; n.a = gen(depth - 1); n.b = gen(depth - 1); return node(std::move(n)); }
                case 3: { ExprNode n; n.kind = ExprNode::Kind::div; n.a = gen(depth - 1); n.b = gen(depth - 1); return node(std::move(n)); }
                case 4: { ExprNode n; n.kind = ExprNode::Kind::pow; n.a = gen(depth - 1); n.exp = static_cast<unsigned>(draw_u64(r, 5)); return node(std::move(n)); }
                default: { ExprNode n; n.kind = ExprNode::Kind::neg; n.a = gen(depth - 1); return node(std::move(n)); }
            }
        };
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            ExprPtr e = gen(4);
            ExprPtr back = parse_expr(print_expr(e), vars);
            ok = expr_equal(e, back);
        }
        rep.add(record("selftest.expr.roundtrip", "parse/print round-trip", ok,
                       "200 generated expressions", seed));
    }

    return rep;
}

} // namespace diagcube
