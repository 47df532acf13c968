#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "diagcube/fp.hpp"
#include "diagcube/poly.hpp"
#include "diagcube/specialize.hpp"

namespace diagcube {

// Rational maps into projective space. Components are homogeneous (or
// bihomogeneous) polynomials with no common factor.
enum class MapSource {
    proj_plane, // P^2, components in 3 variables, common degree
    biproj      // P^1 x P^1, components in (l, l0, m, m0), common bidegree
};

template <FieldElem F>
struct RationalMap {
    MapSource source = MapSource::proj_plane;
    std::vector<SparsePoly<F>> comps;

    int source_vars() const { return source == MapSource::proj_plane ? 3 : 4; }

    std::optional<std::vector<F>> eval(std::span<const F> point) const {
        std::vector<F> out;
        bool all_zero = true;
        for (const auto& c : comps) {
            F v = c.eval(point);
            if (!v.is_zero()) all_zero = false;
            out.push_back(v);
        }
        if (all_zero) return std::nullopt;
        return out;
    }
};

// removes the common factor across components
template <FieldElem F>
RationalMap<F> make_rational_map(MapSource source, std::vector<SparsePoly<F>> comps) {
    RationalMap<F> m;
    m.source = source;
    SparsePoly<F> g = comps.at(0);
    for (std::size_t i = 1; i < comps.size(); ++i) {
        if (g.is_constant()) break;
        g = poly_gcd(g, comps[i]);
    }
    if (!g.is_constant() && !g.is_zero()) {
        for (auto& c : comps) c = exact_div(c, g);
    }
    m.comps = std::move(comps);
    return m;
}

// P^1 x P^1 -> P^2 substitution (l:l0) = (x:z), (m:m0) = (y:z): presents a
// bihomogeneous map as a plane rational map of degree d_l + d_m
template <FieldElem F>
RationalMap<F> to_plane_map(const RationalMap<F>& bi) {
    if (bi.source != MapSource::biproj) return bi;
    std::uint32_t dl = 0, dm = 0;
    for (const auto& c : bi.comps) {
        dl = std::max(dl, std::max(c.deg_in(0), c.deg_in(1)));
        dm = std::max(dm, std::max(c.deg_in(2), c.deg_in(3)));
    }
    const F one = bi.comps.at(0).exemplar().one_like();
    std::vector<SparsePoly<F>> target{
        SparsePoly<F>::variable(3, 0, one), SparsePoly<F>::variable(3, 2, one),
        SparsePoly<F>::variable(3, 1, one), SparsePoly<F>::variable(3, 2, one)};
    std::vector<SparsePoly<F>> comps;
    for (const auto& c : bi.comps) {
        // homogenize each term to z^(dl - degl + dm - degm) after substitution
        SparsePoly<F> out(3);
        for (const auto& [mm, coeff] : c.terms()) {
            Monomial t(3);
            t[0] = mm[0];
            t[1] = mm[2];
            t[2] = (dl - mm[0] - mm[1]) + mm[1] + (dm - mm[2] - mm[3]) + mm[3];
            out.add_term(t, coeff);
        }
        comps.push_back(out);
    }
    (void)target;
    return make_rational_map(MapSource::proj_plane, std::move(comps));
}

// ---- dense univariate arithmetic over F_p for fiber counting ---------------

namespace fpuni {

using Poly = std::vector<std::uint64_t>; // dense, low to high

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly rem(Poly a, const Poly& b, std::uint64_t p) {
    int db = deg(b);
    std::uint64_t lbinv = fpdetail::powm(b[db], p - 2, p);
    while (deg(a) >= db) {
        int da = deg(a);
        std::uint64_t f = fpdetail::mulm(a[da], lbinv, p);
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = fpdetail::subm(a[da - db + i], fpdetail::mulm(f, b[i], p), p);
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = fpdetail::addm(r[i + j], fpdetail::mulm(a[i], b[j], p), p);
    }
    trim(r);
    return rem(std::move(r), m, p);
}

// number of distinct roots in F_p: deg gcd(x^p - x, g)
inline int distinct_roots(const Poly& g, std::uint64_t p) {
    Poly gg = g;
    trim(gg);
    if (gg.empty()) throw error("distinct_roots of zero polynomial");
    if (deg(gg) == 0) return 0;
    Poly x{0, 1};
    Poly xp{1}; // x^p mod g by square and multiply
    std::uint64_t e = p;
    Poly base = rem(x, gg, p);
    while (e) {
        if (e & 1) xp = mulmod(xp, base, gg, p);
        base = mulmod(base, base, gg, p);
        e >>= 1;
    }
    // x^p - x mod g
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = fpdetail::subm(diff[1], 1, p);
    trim(diff);
    if (diff.empty()) return deg(gg); // g divides x^p - x: all roots distinct and rational
    Poly h = gcd(gg, diff, p);
    return h.empty() ? 0 : deg(h);
}

} // namespace fpuni

// ---- fiber counting ---------------------------------------------------------

namespace mapdetail {

// distinct common roots of the condition polynomials minus those where the
// pivot also vanishes (base points of the map)
inline int count_line(const std::vector<fpuni::Poly>& conditions, const fpuni::Poly& pivot,
                      std::uint64_t p) {
    fpuni::Poly g;
    bool all_zero = true;
    for (const auto& c : conditions) {
        fpuni::Poly cc = c;
        fpuni::trim(cc);
        if (cc.empty()) continue;
        all_zero = false;
        g = g.empty() ? cc : fpuni::gcd(g, cc, p);
        if (fpuni::deg(g) == 0) return 0;
    }
    if (all_zero) {
        // degenerate line: count points where the pivot is nonzero is wrong
        // here (the whole line maps to the target); treat as no contribution
        // and let the caller resample
        return -1;
    }
    int total = fpuni::distinct_roots(g, p);
    if (total == 0) return 0;
    fpuni::Poly piv = pivot;
    fpuni::trim(piv);
    if (piv.empty()) return 0; // pivot vanishes identically: undefined points only
    fpuni::Poly bad = fpuni::gcd(g, piv, p);
    int badn = bad.empty() || fpuni::deg(bad) == 0 ? 0 : fpuni::distinct_roots(bad, p);
    return total - badn;
}

} // namespace mapdetail

// Counts rational points u in the source with map(u) = z projectively,
// excluding points where the map is undefined. Returns nullopt when a
// degenerate line is hit (caller should resample the target).
std::optional<int> count_preimages(const RationalMap<FpElem>& m, const std::vector<FpElem>& z);

struct DegreeEstimate {
    std::map<int, int> histogram; // fiber size -> occurrences
    int generic_fiber = 0;        // mode of the histogram
    int usable_trials = 0;
    bool small_prime_warning = false;
};

DegreeEstimate map_degree_estimate(const RationalMap<FpElem>& m, const FpField& f, int trials,
                                   std::mt19937_64& rng);

} // namespace diagcube
