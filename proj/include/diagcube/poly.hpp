#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diagcube/errors.hpp"
#include "diagcube/field.hpp"

namespace diagcube {

using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t monomial_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

// graded lexicographic: total degree first, then lex on exponents
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial over a field F. Terms are kept in a
// canonical graded-lex map with no explicit zeros, so equality is
// syntactic and the leading term is the map's last entry.
template <FieldElem F>
class SparsePoly {
public:
    using TermMap = std::map<Monomial, F, GradedLexLess>;

    SparsePoly() : arity_(0) {}
    explicit SparsePoly(int arity) : arity_(arity) {}

    static SparsePoly zero(int arity) { return SparsePoly(arity); }

    static SparsePoly constant(int arity, const F& c) {
        SparsePoly p(arity);
        if (!c.is_zero()) p.terms_.emplace(Monomial(arity, 0), c);
        return p;
    }

    static SparsePoly variable(int arity, int idx, const F& one) {
        SparsePoly p(arity);
        Monomial m(arity, 0);
        m.at(idx) = 1;
        p.terms_.emplace(std::move(m), one);
        return p;
    }

    static SparsePoly term(int arity, Monomial m, const F& c) {
        SparsePoly p(arity);
        if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // constant term (zero element needs an exemplar from existing terms)
    F constant_value() const {
        if (terms_.empty()) throw error("constant_value of zero polynomial has no exemplar");
        auto it = terms_.find(Monomial(arity_, 0));
        if (it != terms_.end()) return it->second;
        return terms_.begin()->second.zero_like();
    }

    std::uint64_t total_degree() const {
        if (terms_.empty()) return 0;
        return monomial_degree(terms_.rbegin()->first);
    }

    std::uint32_t deg_in(int var) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
        return d;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }
    const F& leading_coeff() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    void add_term(const Monomial& m, const F& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparsePoly operator+(const SparsePoly& o) const {
        check_arity(o);
        SparsePoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    SparsePoly operator-(const SparsePoly& o) const {
        check_arity(o);
        SparsePoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    SparsePoly operator-() const {
        SparsePoly r(arity_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    SparsePoly operator*(const SparsePoly& o) const {
        check_arity(o);
        SparsePoly r(arity_);
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : o.terms_) {
                F c = c1 * c2;
                if (c.is_zero()) continue;
                Monomial m(arity_);
                for (int i = 0; i < arity_; ++i) m[i] = m1[i] + m2[i];
                r.add_term(m, c);
            }
        }
        return r;
    }

    SparsePoly scaled(const F& c) const {
        SparsePoly r(arity_);
        if (c.is_zero()) return r;
        for (const auto& [m, a] : terms_) {
            F v = a * c;
            if (!v.is_zero()) r.terms_.emplace(m, v);
        }
        return r;
    }

    SparsePoly pow(unsigned e) const {
        if (terms_.empty() && e == 0) throw error("0^0 polynomial");
        SparsePoly base = *this;
        SparsePoly r = constant(arity_, exemplar().one_like());
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const SparsePoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    F eval(std::span<const F> point) const {
        if (static_cast<int>(point.size()) != arity_) throw arity_mismatch("eval point arity");
        if (terms_.empty()) {
            if (point.empty()) throw error("eval of zero polynomial with empty point needs exemplar");
            return point[0].zero_like();
        }
        F acc = exemplar().zero_like();
        for (const auto& [m, c] : terms_) {
            F t = c;
            for (int i = 0; i < arity_; ++i) {
                F b = point[i];
                for (std::uint32_t k = 0; k < m[i]; ++k) t = t * b;
            }
            acc = acc + t;
        }
        return acc;
    }

    // substitute targets[i] for variable i; targets share a common arity
    SparsePoly subst(std::span<const SparsePoly> targets) const {
        if (static_cast<int>(targets.size()) != arity_) throw arity_mismatch("subst target count");
        int out_arity = targets.empty() ? 0 : targets[0].arity();
        SparsePoly acc(out_arity);
        for (const auto& [m, c] : terms_) {
            SparsePoly t = constant(out_arity, c);
            for (int i = 0; i < arity_; ++i) {
                if (m[i] == 0) continue;
                t = t * targets[i].pow(m[i]);
            }
            acc = acc + t;
        }
        return acc;
    }

    SparsePoly derivative(int var) const {
        SparsePoly r(arity_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            F nc = c * c.from_int(static_cast<long>(m[var]));
            if (nc.is_zero()) continue;
            Monomial mm = m;
            mm[var] -= 1;
            r.add_term(mm, nc);
        }
        return r;
    }

    // some nonzero coefficient, used to mint zero/one of the right field context
    F exemplar() const {
        if (terms_.empty()) throw error("exemplar of zero polynomial");
        return terms_.begin()->second;
    }

    // deterministic total order for canonical factor lists
    static int compare(const SparsePoly& a, const SparsePoly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree() ? -1 : 1;
        if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        GradedLexLess less;
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (less(ia->first, ib->first)) return -1;
            if (less(ib->first, ia->first)) return 1;
            if (!(ia->second == ib->second)) return ia->second.rank_before(ib->second) ? -1 : 1;
        }
        return 0;
    }

private:
    void check_arity(const SparsePoly& o) const {
        if (arity_ != o.arity_) throw arity_mismatch("polynomial arity mismatch");
    }

    int arity_;
    TermMap terms_;
};

// ---- division ----------------------------------------------------------

template <FieldElem F>
std::optional<SparsePoly<F>> try_exact_div(const SparsePoly<F>& p, const SparsePoly<F>& q) {
    if (q.is_zero()) throw division_by_zero("polynomial division by zero");
    SparsePoly<F> r = p, quot(p.arity());
    const Monomial& qm = q.leading_monomial();
    const F qc_inv = q.leading_coeff().inv();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        Monomial d(r.arity());
        for (int i = 0; i < r.arity(); ++i) {
            if (rm[i] < qm[i]) return std::nullopt;
            d[i] = rm[i] - qm[i];
        }
        SparsePoly<F> t = SparsePoly<F>::term(r.arity(), d, r.leading_coeff() * qc_inv);
        quot = quot + t;
        r = r - t * q;
    }
    return quot;
}

template <FieldElem F>
SparsePoly<F> exact_div(const SparsePoly<F>& p, const SparsePoly<F>& q) {
    auto r = try_exact_div(p, q);
    if (!r) throw inexact_division();
    return *r;
}

template <FieldElem F>
bool divides(const SparsePoly<F>& q, const SparsePoly<F>& p) {
    return try_exact_div(p, q).has_value();
}

// scale so the graded-lex leading coefficient is one
template <FieldElem F>
SparsePoly<F> monic(const SparsePoly<F>& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coeff().inv());
}

// ---- univariate view helpers -------------------------------------------

// coefficients of p viewed as a univariate polynomial in `var`; each
// coefficient keeps the full arity with exponent 0 at `var`
template <FieldElem F>
std::vector<SparsePoly<F>> univariate_coeffs(const SparsePoly<F>& p, int var) {
    std::vector<SparsePoly<F>> out(p.deg_in(var) + 1, SparsePoly<F>(p.arity()));
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        std::uint32_t d = mm[var];
        mm[var] = 0;
        out[d].add_term(mm, c);
    }
    return out;
}

template <FieldElem F>
SparsePoly<F> from_univariate(const std::vector<SparsePoly<F>>& coeffs, int var, int arity) {
    SparsePoly<F> acc(arity);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        for (const auto& [m, c] : coeffs[d].terms()) {
            Monomial mm = m;
            mm[var] += static_cast<std::uint32_t>(d);
            acc.add_term(mm, c);
        }
    }
    return acc;
}

// ---- gcd (primitive pseudo-remainder sequence) ---------------------------

template <FieldElem F>
SparsePoly<F> poly_gcd(const SparsePoly<F>& a, const SparsePoly<F>& b);

namespace polydetail {

template <FieldElem F>
SparsePoly<F> content_in(const SparsePoly<F>& p, int var) {
    auto coeffs = univariate_coeffs(p, var);
    SparsePoly<F> c(p.arity());
    for (const auto& q : coeffs) {
        if (q.is_zero()) continue;
        c = c.is_zero() ? q : poly_gcd(c, q);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return monic(c);
}

// pseudo-remainder of a by b in variable var (scaling irrelevant for
// a primitive PRS, contents are stripped each step)
template <FieldElem F>
SparsePoly<F> pseudo_rem(SparsePoly<F> a, const SparsePoly<F>& b, int var) {
    const std::uint32_t db = b.deg_in(var);
    auto bcoeffs = univariate_coeffs(b, var);
    const SparsePoly<F>& lb = bcoeffs.at(db);
    while (!a.is_zero()) {
        std::uint32_t da = a.deg_in(var);
        if (da < db) break;
        auto acoeffs = univariate_coeffs(a, var);
        const SparsePoly<F>& la = acoeffs.at(da);
        // a <- lb * a - la * x^(da-db) * b
        SparsePoly<F> shift = SparsePoly<F>::term(
            a.arity(), [&] { Monomial m(a.arity(), 0); m[var] = da - db; return m; }(),
            la.exemplar().one_like());
        a = a * lb - la * shift * b;
    }
    return a;
}

} // namespace polydetail

template <FieldElem F>
SparsePoly<F> poly_gcd(const SparsePoly<F>& a, const SparsePoly<F>& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.arity() != b.arity()) throw arity_mismatch("gcd arity mismatch");
    if (a.is_constant() || b.is_constant())
        return SparsePoly<F>::constant(a.arity(), a.is_constant() ? a.exemplar().one_like() : b.exemplar().one_like());

    int var = -1;
    for (int i = a.arity() - 1; i >= 0; --i) {
        if (a.deg_in(i) > 0 || b.deg_in(i) > 0) { var = i; break; }
    }
    if (a.deg_in(var) == 0) return poly_gcd(a, polydetail::content_in(b, var));
    if (b.deg_in(var) == 0) return poly_gcd(polydetail::content_in(a, var), b);

    SparsePoly<F> ca = polydetail::content_in(a, var);
    SparsePoly<F> cb = polydetail::content_in(b, var);
    SparsePoly<F> c = poly_gcd(ca, cb);
    SparsePoly<F> pa = exact_div(a, ca);
    SparsePoly<F> pb = exact_div(b, cb);

    if (pa.deg_in(var) < pb.deg_in(var)) std::swap(pa, pb);
    while (true) {
        SparsePoly<F> r = polydetail::pseudo_rem(pa, pb, var);
        if (r.is_zero()) break;
        if (r.deg_in(var) == 0) {
            // coprime primitive parts
            pb = SparsePoly<F>::constant(a.arity(), r.exemplar().one_like());
            break;
        }
        r = exact_div(r, polydetail::content_in(r, var));
        pa = std::move(pb);
        pb = std::move(r);
    }
    SparsePoly<F> g = pb.is_constant() ? pb : exact_div(pb, polydetail::content_in(pb, var));
    return monic(c * g);
}

// ---- squarefree decomposition (Yun) --------------------------------------

template <FieldElem F>
struct SquarefreeDecomp {
    F content;
    std::vector<std::pair<SparsePoly<F>, int>> factors; // squarefree, pairwise coprime, monic
};

namespace polydetail {

template <FieldElem F>
void yun_in_var(const SparsePoly<F>& p, int var, std::vector<std::pair<SparsePoly<F>, int>>& out) {
    SparsePoly<F> dp = p.derivative(var);
    SparsePoly<F> g = poly_gcd(p, dp);
    SparsePoly<F> w = exact_div(p, g);
    SparsePoly<F> y = exact_div(dp, g);
    int i = 1;
    while (!w.is_constant()) {
        SparsePoly<F> z = y - w.derivative(var);
        SparsePoly<F> h = poly_gcd(w, z);
        if (!h.is_constant()) out.emplace_back(monic(h), i);
        w = exact_div(w, h);
        y = exact_div(z, h);
        ++i;
    }
}

template <FieldElem F>
void squarefree_rec(const SparsePoly<F>& p, std::vector<std::pair<SparsePoly<F>, int>>& out) {
    if (p.is_constant()) return;
    int var = -1;
    for (int i = p.arity() - 1; i >= 0; --i)
        if (p.deg_in(i) > 0) { var = i; break; }
    SparsePoly<F> cont = content_in(p, var);
    SparsePoly<F> prim = exact_div(p, cont);
    if (!cont.is_constant()) squarefree_rec(cont, out);
    yun_in_var(prim, var, out);
}

} // namespace polydetail

// p = content * prod f_i^{m_i}; exact in characteristic zero, and over
// F_p for polynomials of degree below p (the only modular use here).
template <FieldElem F>
SquarefreeDecomp<F> squarefree_decompose(const SparsePoly<F>& p) {
    if (p.is_zero()) throw error("squarefree decomposition of zero");
    SquarefreeDecomp<F> d{p.leading_coeff(), {}};
    polydetail::squarefree_rec(monic(p), d.factors);
    std::sort(d.factors.begin(), d.factors.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return SparsePoly<F>::compare(x.first, y.first) < 0;
    });
    return d;
}

// Splits decomposition factors further by trial division against supplied
// candidates (the linear forms the surfaces are built from).
template <FieldElem F>
SquarefreeDecomp<F> refine_with_candidates(const SquarefreeDecomp<F>& d,
                                           const std::vector<SparsePoly<F>>& candidates) {
    SquarefreeDecomp<F> out{d.content, {}};
    for (const auto& [f, mult] : d.factors) {
        SparsePoly<F> rest = f;
        for (const auto& cand : candidates) {
            SparsePoly<F> c = monic(cand);
            while (!rest.is_constant()) {
                auto q = try_exact_div(rest, c);
                if (!q) break;
                out.factors.emplace_back(c, mult);
                rest = *q;
            }
        }
        if (!rest.is_constant()) out.factors.emplace_back(monic(rest), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return SparsePoly<F>::compare(x.first, y.first) < 0;
    });
    return out;
}

// ---- Jacobian determinant -------------------------------------------------

template <FieldElem F>
SparsePoly<F> jacobian_det(const std::array<SparsePoly<F>, 3>& maps) {
    for (const auto& m : maps)
        if (m.arity() != 3) throw arity_mismatch("jacobian_det needs arity 3");
    std::array<std::array<SparsePoly<F>, 3>, 3> J;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) J[i][j] = maps[i].derivative(j);
    SparsePoly<F> det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1])
                      - J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0])
                      + J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    return det;
}

// ---- printing --------------------------------------------------------------

template <FieldElem F>
std::string poly_to_string(const SparsePoly<F>& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    if (static_cast<int>(names.size()) != p.arity()) throw arity_mismatch("poly_to_string names");
    std::string out;
    // graded-lex descending
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mon;
        for (int i = 0; i < p.arity(); ++i) {
            if (m[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += names[i];
            if (m[i] > 1) mon += "^" + std::to_string(m[i]);
        }
        std::string cs = c.str();
        std::string term;
        if (mon.empty()) term = cs;
        else if (c.is_one()) term = mon;
        else term = cs + "*" + mon;
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

} // namespace diagcube
