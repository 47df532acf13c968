#pragma once

#include <optional>
#include <string>

#include "diagcube/poly.hpp"

namespace diagcube {

// Normalized fraction of sparse polynomials over a field F. The invariant:
// den != 0, gcd(num, den) a unit, den monic in graded-lex — which makes
// equality syntactic.
template <FieldElem F>
class RatFunc {
public:
    // invalid sentinel for container use; every factory yields a valid value
    RatFunc() : num_(0), den_(0) {}

    RatFunc(SparsePoly<F> num, SparsePoly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc zero(int arity, const F& exemplar) {
        return RatFunc(SparsePoly<F>::zero(arity), SparsePoly<F>::constant(arity, exemplar.one_like()));
    }
    static RatFunc constant(int arity, const F& c) {
        return RatFunc(SparsePoly<F>::constant(arity, c),
                       SparsePoly<F>::constant(arity, c.one_like()));
    }
    static RatFunc variable(int arity, int idx, const F& one) {
        return RatFunc(SparsePoly<F>::variable(arity, idx, one),
                       SparsePoly<F>::constant(arity, one.one_like()));
    }
    static RatFunc from_poly(SparsePoly<F> p, const F& exemplar) {
        int n = p.arity();
        return RatFunc(std::move(p), SparsePoly<F>::constant(n, exemplar.one_like()));
    }

    const SparsePoly<F>& num() const { return num_; }
    const SparsePoly<F>& den() const { return den_; }
    int arity() const { return den_.arity(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator+(const RatFunc& o) const {
        if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc operator*(const RatFunc& o) const {
        if (is_zero() || o.is_zero()) return RatFunc(SparsePoly<F>::zero(arity()), den_);
        // cross-reduce before multiplying to keep intermediates small
        SparsePoly<F> g1 = poly_gcd(num_, o.den_);
        SparsePoly<F> g2 = poly_gcd(o.num_, den_);
        SparsePoly<F> n = exact_div(num_, g1) * exact_div(o.num_, g2);
        SparsePoly<F> d = exact_div(den_, g2) * exact_div(o.den_, g1);
        return RatFunc(std::move(n), std::move(d));
    }
    RatFunc inv() const {
        if (is_zero()) throw division_by_zero("RatFunc::inv of zero");
        return RatFunc(den_, num_);
    }
    RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc zero_like() const { return RatFunc(SparsePoly<F>::zero(arity()), den_exemplar_one()); }
    RatFunc one_like() const { return RatFunc(den_exemplar_one(), den_exemplar_one()); }
    RatFunc omega_like() const {
        return RatFunc(SparsePoly<F>::constant(arity(), field_exemplar().omega_like()), den_exemplar_one());
    }
    RatFunc from_int(long n) const {
        return RatFunc(SparsePoly<F>::constant(arity(), field_exemplar().from_int(n)), den_exemplar_one());
    }

    RatFunc pow(unsigned e) const {
        RatFunc r = one_like(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // evaluation; nullopt when the denominator vanishes at the point
    std::optional<F> eval(std::span<const F> point) const {
        F d = den_.eval(point);
        if (d.is_zero()) return std::nullopt;
        return num_.eval(point) * d.inv();
    }

    F field_exemplar() const {
        return den_.is_zero() ? num_.exemplar() : den_.exemplar();
    }

    std::string str() const { return str({}); }
    std::string str(std::vector<std::string> names) const {
        if (names.empty()) {
            for (int i = 0; i < arity(); ++i) names.push_back("x" + std::to_string(i + 1));
        }
        std::string n = poly_to_string(num_, names);
        if (den_.is_constant() && !den_.is_zero() && den_.leading_coeff().is_one()) return n;
        return "(" + n + ")/(" + poly_to_string(den_, names) + ")";
    }

    bool rank_before(const RatFunc& o) const {
        int c = SparsePoly<F>::compare(num_, o.num_);
        if (c != 0) return c < 0;
        return SparsePoly<F>::compare(den_, o.den_) < 0;
    }

private:
    SparsePoly<F> den_exemplar_one() const {
        return SparsePoly<F>::constant(arity(), field_exemplar().one_like());
    }

    void normalize() {
        if (den_.is_zero()) throw division_by_zero("RatFunc with zero denominator");
        if (num_.is_zero()) {
            den_ = SparsePoly<F>::constant(den_.arity(), den_.exemplar().one_like());
            return;
        }
        SparsePoly<F> g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        F lead = den_.leading_coeff();
        if (!lead.is_one()) {
            F li = lead.inv();
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    }

    SparsePoly<F> num_, den_;
};

// ---- cube / square tests on rational functions ----------------------------
//
// f = c * prod f_i^{e_i} with monic squarefree pairwise-coprime f_i is an
// n-th power in the fraction field iff all e_i are divisible by n and the
// constant c is an n-th power in the coefficient field.

template <FieldElem F>
Tri elem_is_cube(const RatFunc<F>& f) {
    if (f.is_zero()) return Tri::yes;
    auto dn = squarefree_decompose(f.num());
    for (const auto& [fac, mult] : dn.factors)
        if (mult % 3 != 0) return Tri::no;
    auto dd = squarefree_decompose(f.den());
    for (const auto& [fac, mult] : dd.factors)
        if (mult % 3 != 0) return Tri::no;
    F c = dn.content * dd.content.inv();
    return elem_is_cube(c);
}

template <FieldElem F>
std::optional<RatFunc<F>> elem_cbrt(const RatFunc<F>& f) {
    if (f.is_zero()) return f;
    auto build = [](const SquarefreeDecomp<F>& d, int arity) -> std::optional<SparsePoly<F>> {
        SparsePoly<F> r = SparsePoly<F>::constant(arity, d.content.one_like());
        for (const auto& [fac, mult] : d.factors) {
            if (mult % 3 != 0) return std::nullopt;
            r = r * fac.pow(static_cast<unsigned>(mult / 3));
        }
        return r;
    };
    auto dn = squarefree_decompose(f.num());
    auto dd = squarefree_decompose(f.den());
    auto rn = build(dn, f.num().arity());
    auto rd = build(dd, f.den().arity());
    if (!rn || !rd) return std::nullopt;
    auto c = elem_cbrt(dn.content * dd.content.inv());
    if (!c) return std::nullopt;
    return RatFunc<F>(rn->scaled(*c), *rd);
}

template <FieldElem F>
std::optional<RatFunc<F>> elem_sqrt(const RatFunc<F>& f) {
    if (f.is_zero()) return f;
    auto build = [](const SquarefreeDecomp<F>& d, int arity) -> std::optional<SparsePoly<F>> {
        SparsePoly<F> r = SparsePoly<F>::constant(arity, d.content.one_like());
        for (const auto& [fac, mult] : d.factors) {
            if (mult % 2 != 0) return std::nullopt;
            r = r * fac.pow(static_cast<unsigned>(mult / 2));
        }
        return r;
    };
    auto dn = squarefree_decompose(f.num());
    auto dd = squarefree_decompose(f.den());
    auto rn = build(dn, f.num().arity());
    auto rd = build(dd, f.den().arity());
    if (!rn || !rd) return std::nullopt;
    auto c = elem_sqrt(dn.content * dd.content.inv());
    if (!c) return std::nullopt;
    return RatFunc<F>(rn->scaled(*c), *rd);
}

} // namespace diagcube
