#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diagcube/report.hpp"
#include "diagcube/specialize.hpp"
#include "diagcube/tower.hpp"

namespace diagcube {

constexpr std::uint64_t kDefaultSeed = 0xD1A6C0BEull;

// The named elements of the reduction chain over the tower with
// y_i^6 = x_i^2 (x_i - 1):
//   t_i = y_i / y_1
//   u_i = (x_1 / x_i) t_i^3
//   v_i = 1 / u_i,  w_i = t_i / u_i
//   s_i = (v_i - 1) / (v_2 - 1)        (i >= 3)
template <FieldElem F>
struct ChainEnv {
    TowerAlgebraPtr<F> alg;
    int n = 0;
    std::vector<F> xcoef;                 // x_1..x_n as coefficient-field values
    std::map<int, TowerElem<F>> t, u, v, w, s;

    TowerElem<F> one() const { return TowerElem<F>::one(alg); }
    TowerElem<F> cst(const F& c) const { return TowerElem<F>::constant(alg, c); }
    const F& x(int i) const { return xcoef.at(i - 1); }
};

// May throw not_invertible when the coefficient specialization makes a
// chain denominator a zero divisor; modular callers resample.
template <FieldElem F>
ChainEnv<F> build_env(TowerAlgebraPtr<F> alg, std::vector<F> xcoef) {
    ChainEnv<F> e;
    e.alg = alg;
    e.n = alg->n;
    e.xcoef = std::move(xcoef);
    const F one = e.x(1).one_like();
    TowerElem<F> y1 = TowerElem<F>::gen(alg, 1);
    TowerElem<F> y1inv = y1.inv();
    TowerElem<F> onee = TowerElem<F>::one(alg);
    for (int i = 2; i <= e.n; ++i) {
        TowerElem<F> ti = TowerElem<F>::gen(alg, i) * y1inv;
        TowerElem<F> ui = (ti * ti * ti).scaled(e.x(1) * e.x(i).inv());
        TowerElem<F> vi = ui.inv();
        TowerElem<F> wi = ti * vi;
        e.t.emplace(i, std::move(ti));
        e.u.emplace(i, std::move(ui));
        e.v.emplace(i, std::move(vi));
        e.w.emplace(i, std::move(wi));
    }
    TowerElem<F> v2m1inv = (e.v.at(2) - onee).inv();
    for (int i = 3; i <= e.n; ++i) e.s.emplace(i, (e.v.at(i) - onee) * v2m1inv);
    for (const auto& family : {&e.t, &e.u, &e.v, &e.w, &e.s})
        for (const auto& [i, el] : *family)
            if (!el.is_invariant()) throw error("chain element not invariant: internal inconsistency");
    return e;
}

// ---- residual builders -----------------------------------------------------
//
// Every identity is stated with denominators cleared, so each check is
// "this tower element is zero in normal form".

template <FieldElem F>
using NamedElems = std::vector<std::pair<std::string, TowerElem<F>>>;

template <FieldElem F>
NamedElems<F> env_defining_residuals(const ChainEnv<F>& e) {
    NamedElems<F> out;
    TowerElem<F> one = e.one();
    for (int i = 2; i <= e.n; ++i) {
        const auto &t = e.t.at(i), &u = e.u.at(i), &v = e.v.at(i), &w = e.w.at(i);
        out.emplace_back("env.u" + std::to_string(i), u.scaled(e.x(i)) - (t * t * t).scaled(e.x(1)));
        out.emplace_back("env.v" + std::to_string(i), v * u - one);
        out.emplace_back("env.w" + std::to_string(i), w * u - t);
    }
    for (int i = 3; i <= e.n; ++i)
        out.emplace_back("env.s" + std::to_string(i),
                         e.s.at(i) * (e.v.at(2) - one) - (e.v.at(i) - one));
    return out;
}

template <FieldElem F>
NamedElems<F> lemma_residuals(const ChainEnv<F>& e, int which) {
    NamedElems<F> out;
    TowerElem<F> one = e.one();
    const F cone = e.x(1).one_like();
    switch (which) {
        case 1:
            // t_i^6 x_1^2(x_1-1) = x_i^2(x_i-1)
            for (int i = 2; i <= e.n; ++i) {
                F r1 = e.alg->rel[0], ri = e.alg->rel[i - 1];
                out.emplace_back("lemma1.t" + std::to_string(i),
                                 e.t.at(i).pow(6).scaled(r1) - e.cst(ri));
            }
            break;
        case 2:
            // u_i (u_i^2 (x_1 - 1) + 1) = t_i^3 x_1
            for (int i = 2; i <= e.n; ++i) {
                const auto &u = e.u.at(i), &t = e.t.at(i);
                out.emplace_back("lemma2.u" + std::to_string(i),
                                 u.pow(3).scaled(e.x(1) - cone) + u - t.pow(3).scaled(e.x(1)));
            }
            break;
        case 3:
            // (u_i - t_i^3)(u_j^3 - u_j) = (u_j - t_j^3)(u_i^3 - u_i)
            for (int i = 2; i <= e.n; ++i)
                for (int j = i + 1; j <= e.n; ++j) {
                    const auto &ui = e.u.at(i), &ti = e.t.at(i), &uj = e.u.at(j), &tj = e.t.at(j);
                    out.emplace_back("lemma3.u" + std::to_string(i) + "u" + std::to_string(j),
                                     (ui - ti.pow(3)) * (uj.pow(3) - uj) -
                                         (uj - tj.pow(3)) * (ui.pow(3) - ui));
                }
            break;
        case 4:
            // (v_i^2 - 1)(w_2^3 - 1) = (v_2^2 - 1)(w_i^3 - 1)
            for (int i = 3; i <= e.n; ++i) {
                const auto &vi = e.v.at(i), &v2 = e.v.at(2), &wi = e.w.at(i), &w2 = e.w.at(2);
                out.emplace_back("lemma4.v" + std::to_string(i),
                                 (vi * vi - one) * (w2.pow(3) - one) -
                                     (v2 * v2 - one) * (wi.pow(3) - one));
                // bridge identity used by the proof:
                // (u_i - t_i^3)(1 - v_i^2) = (u_i^3 - u_i)((1 - w_i^3) - (1 - v_i^2))
                const auto &ui = e.u.at(i), &ti = e.t.at(i);
                out.emplace_back("lemma4.bridge" + std::to_string(i),
                                 (ui - ti.pow(3)) * (one - vi * vi) -
                                     (ui.pow(3) - ui) * ((one - wi.pow(3)) - (one - vi * vi)));
            }
            break;
        case 5: {
            // (s_3-s_4)s_3s_4(w_2^3-1) - (s_3-1)s_3(w_4^3-1) + (s_4-1)s_4(w_3^3-1) = 0
            const auto &s3 = e.s.at(3), &s4 = e.s.at(4);
            const auto &w2 = e.w.at(2), &w3 = e.w.at(3), &w4 = e.w.at(4);
            out.emplace_back("lemma5.relation",
                             (s3 - s4) * s3 * s4 * (w2.pow(3) - one) -
                                 (s3 - one) * s3 * (w4.pow(3) - one) +
                                 (s4 - one) * s4 * (w3.pow(3) - one));
            // the same relation multiplied through by (v_2 - 1)^3
            const auto &v2 = e.v.at(2), &v3 = e.v.at(3), &v4 = e.v.at(4);
            out.emplace_back("lemma5.cleared",
                             (v3 - v4) * (v3 - one) * (v4 - one) * (w2.pow(3) - one) -
                                 (v3 - v2) * (v3 - one) * (v2 - one) * (w4.pow(3) - one) +
                                 (v4 - v2) * (v4 - one) * (v2 - one) * (w3.pow(3) - one));
            break;
        }
        default:
            throw error("unknown lemma index");
    }
    return out;
}

template <FieldElem F>
NamedElems<F> roundtrip_residuals(const ChainEnv<F>& e) {
    NamedElems<F> out;
    TowerElem<F> one = e.one();
    const F cone = e.x(1).one_like();
    for (int i = 2; i <= e.n; ++i) {
        const auto &u = e.u.at(i), &t = e.t.at(i), &v = e.v.at(i), &w = e.w.at(i);
        // x_i = u_i^2 (x_1 - 1) + 1
        out.emplace_back("roundtrip.x" + std::to_string(i),
                         e.cst(e.x(i)) - ((u * u).scaled(e.x(1) - cone) + one));
        // x_1 (u_i^3 - t_i^3) = u_i^3 - u_i
        out.emplace_back("roundtrip.x1.from_u" + std::to_string(i),
                         (u.pow(3) - t.pow(3)).scaled(e.x(1)) - (u.pow(3) - u));
        // (1 - x_1)(u_i^3 - u_i) = x_1 (u_i - t_i^3)
        out.emplace_back("roundtrip.x1inv.from_u" + std::to_string(i),
                         (u.pow(3) - u).scaled(cone - e.x(1)) - (u - t.pow(3)).scaled(e.x(1)));
        out.emplace_back("roundtrip.u" + std::to_string(i), u * v - one);
        out.emplace_back("roundtrip.t" + std::to_string(i), t - w * u);
    }
    for (int i = 3; i <= e.n; ++i) {
        const auto &si = e.s.at(i), &v2 = e.v.at(2), &vi = e.v.at(i);
        const auto &w2 = e.w.at(2), &wi = e.w.at(i);
        // (v_2 - 1)(s_i^2 (w_2^3-1) - (w_i^3-1)) = 2(-s_i (w_2^3-1) + (w_i^3-1))
        out.emplace_back("roundtrip.v2.from_s" + std::to_string(i),
                         (v2 - one) * (si * si * (w2.pow(3) - one) - (wi.pow(3) - one)) -
                             ((wi.pow(3) - one) - si * (w2.pow(3) - one)).scaled(cone + cone));
        // v_i = s_i (v_2 - 1) + 1
        out.emplace_back("roundtrip.v" + std::to_string(i), vi - (si * (v2 - one) + one));
    }
    return out;
}

// the two bidegree-(3,3) relations of the five-curve tower
template <FieldElem F>
NamedElems<F> n5_residuals(const ChainEnv<F>& e) {
    if (e.n != 5) throw arity_mismatch("n5_residuals needs a five-curve environment");
    NamedElems<F> out;
    TowerElem<F> one = e.one();
    auto rel = [&](int a, int b, int idx) {
        const auto &sa = e.s.at(a), &sb = e.s.at(b);
        const auto &w2 = e.w.at(2), &wa = e.w.at(a), &wb = e.w.at(b);
        out.emplace_back(
            "n5.relation" + std::to_string(idx),
            (sa - sb) * sa * sb * (w2.pow(3) - one) -
                ((sa - one) * sa * (e.w.at(b).pow(3) - one) - (sb - one) * sb * (wa.pow(3) - one)));
        const auto &v2 = e.v.at(2), &va = e.v.at(a), &vb = e.v.at(b);
        out.emplace_back(
            "n5.relation" + std::to_string(idx) + ".cleared",
            (va - vb) * (va - one) * (vb - one) * (w2.pow(3) - one) -
                (va - v2) * (va - one) * (v2 - one) * (e.w.at(b).pow(3) - one) +
                (vb - v2) * (vb - one) * (v2 - one) * (wa.pow(3) - one));
        (void)wb;
    };
    rel(3, 4, 1);
    rel(3, 5, 2);
    return out;
}

// elements the chain proofs require to be nonzero
template <FieldElem F>
NamedElems<F> nonzero_condition_elems(const ChainEnv<F>& e) {
    NamedElems<F> out;
    TowerElem<F> one = e.one();
    for (int i = 2; i <= e.n; ++i) {
        const auto &u = e.u.at(i), &v = e.v.at(i), &w = e.w.at(i), &t = e.t.at(i);
        out.emplace_back("nonzero.u" + std::to_string(i), u);
        out.emplace_back("nonzero.u" + std::to_string(i) + "cube-minus-u", u.pow(3) - u);
        out.emplace_back("nonzero.v" + std::to_string(i) + "-minus-1", v - one);
        out.emplace_back("nonzero.w" + std::to_string(i) + "cube-minus-1", w.pow(3) - one);
        out.emplace_back("nonzero.t" + std::to_string(i) + "cube", t.pow(3));
    }
    for (int i = 3; i <= e.n; ++i) {
        const auto &si = e.s.at(i), &w2 = e.w.at(2), &wi = e.w.at(i);
        out.emplace_back("nonzero.sdenom" + std::to_string(i),
                         (wi.pow(3) - one) - si * si * (w2.pow(3) - one));
    }
    return out;
}

// ---- drivers ---------------------------------------------------------------

struct VerifyConfig {
    int n = 4;
    bool exact = true;
    unsigned samples = 20;
    std::uint64_t prime_lo = 10000;
    std::uint64_t prime_hi = 1000000;
    std::uint64_t seed = kDefaultSeed;
    int retry_budget = 100;
};

inline ChainEnv<ExactCoeff> build_exact_env(int n) {
    auto alg = make_exact_tower(n);
    const CycloRat one(1);
    std::vector<ExactCoeff> xs;
    for (int i = 0; i < n; ++i) xs.push_back(ExactCoeff::variable(n, i, one));
    return build_env<ExactCoeff>(alg, std::move(xs));
}

struct ModularSample {
    FpField field;
    std::vector<FpElem> xi;
    ChainEnv<FpElem> env;
};

// Draws x-values until every chain denominator is invertible in the
// specialized algebra; the retry budget covers divisions that vanish at
// unlucky points.
inline std::optional<ModularSample> build_modular_env(int n, const FpField& f, std::mt19937_64& rng,
                                                      int retry_budget = 100) {
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        std::vector<FpElem> xi;
        for (int i = 0; i < n; ++i) xi.push_back(f.make_u(2 + draw_u64(rng, f.p - 2)));
        bool bad = false;
        for (const auto& x : xi)
            if ((x * x * (x - f.one())).is_zero()) bad = true;
        if (bad) continue;
        auto alg = make_modular_tower(f, xi);
        try {
            ChainEnv<FpElem> env = build_env<FpElem>(alg, xi);
            return ModularSample{f, xi, std::move(env)};
        } catch (const not_invertible&) {
            continue;
        }
    }
    return std::nullopt;
}

// Degree bounds for the cleared relations as rational expressions in the
// x's (numerator degree plus cleared-denominator degree), measured from the
// exact construction and frozen here; a test recomputes them. They feed the
// Schwartz–Zippel failure-probability line in modular reports.
int relation_degree_bound(const std::string& name);

// measured bound: max over basis coefficients of num-degree + den-degree
inline int measured_degree_bound(const ExactTowerElem& el) {
    int b = 0;
    for (const auto& [code, c] : el.coeffs()) {
        int d = static_cast<int>(c.num().total_degree() + c.den().total_degree());
        if (d > b) b = d;
    }
    return b;
}

Report verify_lemmas(const VerifyConfig& cfg);
Report verify_roundtrip_report(const VerifyConfig& cfg);
Report verify_n5_report(const VerifyConfig& cfg);
Report mutation_report(const VerifyConfig& cfg, unsigned runs);
Report nonzero_conditions_report(const VerifyConfig& cfg);

} // namespace diagcube
