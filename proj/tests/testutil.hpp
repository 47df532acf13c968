#pragma once

#include <random>

#include "diagcube/cyclo.hpp"
#include "diagcube/poly.hpp"
#include "diagcube/specialize.hpp"

namespace dctest {

using namespace diagcube;

constexpr std::uint64_t kSeed = 0xD1A6C0BEull;

inline Rat rnd_rat(std::mt19937_64& rng, long hi = 10) {
    long num = static_cast<long>(draw_u64(rng, 2 * hi + 1)) - hi;
    long den = 1 + static_cast<long>(draw_u64(rng, 6));
    return make_rat(num, den);
}

inline CycloRat rnd_cyclo(std::mt19937_64& rng) { return CycloRat(rnd_rat(rng), rnd_rat(rng)); }

template <diagcube::FieldElem F, typename CoeffGen>
SparsePoly<F> rnd_poly(std::mt19937_64& rng, int arity, unsigned max_terms, unsigned max_deg,
                       CoeffGen coeff) {
    SparsePoly<F> p(arity);
    unsigned terms = 1 + static_cast<unsigned>(draw_u64(rng, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m(arity);
        for (int i = 0; i < arity; ++i) m[i] = static_cast<std::uint32_t>(draw_u64(rng, max_deg + 1));
        p.add_term(m, coeff(rng));
    }
    return p;
}

inline SparsePoly<CycloRat> rnd_cyclo_poly(std::mt19937_64& rng, int arity = 2,
                                           unsigned max_terms = 4, unsigned max_deg = 3) {
    return rnd_poly<CycloRat>(rng, arity, max_terms, max_deg,
                              [](std::mt19937_64& g) { return rnd_cyclo(g); });
}

} // namespace dctest
