#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "diagcube/cyclo.hpp"
#include "diagcube/fp.hpp"
#include "diagcube/ratfunc.hpp"
#include "diagcube/tower.hpp"

namespace diagcube {

using ExactCoeff = RatFunc<CycloRat>;
using ExactTowerElem = TowerElem<ExactCoeff>;
using ModularTowerElem = TowerElem<FpElem>;

// deterministic bounded uniform draw (uniform_int_distribution is
// implementation-defined, which would break byte-stable reports)
inline std::uint64_t draw_u64(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t lim = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
        std::uint64_t v = rng();
        if (v < lim) return v % n;
    }
}

// the tower over k(x_1..x_n) with relations y_i^6 = x_i^2 (x_i - 1)
inline TowerAlgebraPtr<ExactCoeff> make_exact_tower(int n) {
    const CycloRat one(1);
    std::vector<ExactCoeff> rel;
    for (int i = 0; i < n; ++i) {
        ExactCoeff x = ExactCoeff::variable(n, i, one);
        rel.push_back(x * x * (x - ExactCoeff::constant(n, one)));
    }
    return make_tower<ExactCoeff>(n, std::move(rel));
}

// the same tower with x_i specialized to xi[i] in F_p
inline TowerAlgebraPtr<FpElem> make_modular_tower(const FpField& f, const std::vector<FpElem>& xi) {
    std::vector<FpElem> rel;
    for (const FpElem& x : xi) rel.push_back(x * x * (x - f.one()));
    return make_tower<FpElem>(static_cast<int>(xi.size()), std::move(rel));
}

inline std::optional<SparsePoly<FpElem>> poly_cyclo_to_fp(const SparsePoly<CycloRat>& p,
                                                          const FpField& f) {
    SparsePoly<FpElem> out(p.arity());
    for (const auto& [m, c] : p.terms()) {
        auto v = cyclo_to_fp(c, f);
        if (!v) return std::nullopt;
        out.add_term(m, *v);
    }
    return out;
}

// evaluate a rational function over Q(omega) at an F_p point
inline std::optional<FpElem> ratfunc_eval_fp(const ExactCoeff& r, const FpField& f,
                                             const std::vector<FpElem>& point) {
    auto num = poly_cyclo_to_fp(r.num(), f);
    auto den = poly_cyclo_to_fp(r.den(), f);
    if (!num || !den) return std::nullopt;
    FpElem d = den->eval(point);
    if (d.is_zero()) return std::nullopt;
    return num->eval(point) * d.inv();
}

inline std::optional<ModularTowerElem> specialize_tower_elem(const ExactTowerElem& a,
                                                             TowerAlgebraPtr<FpElem> alg,
                                                             const FpField& f,
                                                             const std::vector<FpElem>& point) {
    return map_tower<FpElem>(a, std::move(alg),
                             [&](const ExactCoeff& c) { return ratfunc_eval_fp(c, f, point); });
}

struct NonzeroWitness {
    bool nonzero = false;        // decided syntactically from the normal form
    bool witnessed = false;      // a modular specialization confirming it
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> point;
    std::string monomial;        // packed code of a nonvanishing basis coefficient
};

// Nonzero-ness is decided by normal-form nonemptiness (the basis is free);
// the specialization witness is audit data for reports.
inline NonzeroWitness nonzero_witness(const ExactTowerElem& a, std::uint64_t seed, int budget = 100) {
    NonzeroWitness w;
    w.nonzero = !a.is_zero();
    if (!w.nonzero) return w;
    std::mt19937_64 rng(seed ^ 0xabcdef12345ull);
    const int n = a.algebra()->n;
    for (int t = 0; t < budget; ++t) {
        std::uint64_t p = nth_sample_prime(10000, 1000000, rng(), 0);
        FpField f = fp_with_omega(p);
        std::vector<FpElem> xi;
        for (int i = 0; i < n; ++i) xi.push_back(f.make_u(2 + draw_u64(rng, p - 2)));
        auto alg = make_modular_tower(f, xi);
        auto sp = specialize_tower_elem(a, alg, f, xi);
        if (!sp || sp->is_zero()) continue;
        w.witnessed = true;
        w.prime = p;
        for (const auto& x : xi) w.point.push_back(x.value());
        w.monomial = "code:" + std::to_string(sp->coeffs().begin()->first);
        return w;
    }
    return w;
}

} // namespace diagcube
