#pragma once

#include <memory>
#include <string>
#include <vector>

#include "diagcube/cyclo.hpp"
#include "diagcube/fp.hpp"
#include "diagcube/ratfunc.hpp"
#include "diagcube/rational.hpp"

namespace diagcube {

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := base ('^' uint)?
// base   := name | integer | 'omega' | '(' expr ')' | '-' base
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { var, lit, omega, add, sub, mul, div, pow, neg };
    Kind kind;
    std::string name;  // var
    Rat lit;           // lit
    ExprPtr a, b;
    unsigned exp = 0;  // pow
};

// Parses src over the declared variable names; rejects undeclared names
// with a position-carrying parse_error.
ExprPtr parse_expr(const std::string& src, const std::vector<std::string>& vars);

std::string print_expr(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// "name = expr" per nonempty line; '#' starts a comment
std::vector<std::pair<std::string, ExprPtr>> parse_named_exprs(const std::string& text,
                                                               const std::vector<std::string>& vars);

// ---- lowering ---------------------------------------------------------------

struct CycloLift {
    CycloRat from_rat(const Rat& q) const { return CycloRat(q); }
    CycloRat omega() const { return CycloRat::omega(); }
};

struct FpLift {
    FpField field;
    FpElem from_rat(const Rat& q) const {
        auto v = rat_to_fp(q, field);
        if (!v) throw error("literal denominator divisible by the field characteristic");
        return *v;
    }
    FpElem omega() const { return field.omega_elem(); }
};

template <FieldElem F, typename Lift>
RatFunc<F> lower_ratfunc(const ExprPtr& e, const std::vector<std::string>& vars, const Lift& lift) {
    const int n = static_cast<int>(vars.size());
    switch (e->kind) {
        case ExprNode::Kind::var: {
            for (int i = 0; i < n; ++i)
                if (vars[i] == e->name) return RatFunc<F>::variable(n, i, lift.from_rat(Rat(1)));
            throw error("unknown variable " + e->name);
        }
        case ExprNode::Kind::lit:
            return RatFunc<F>::constant(n, lift.from_rat(e->lit));
        case ExprNode::Kind::omega:
            return RatFunc<F>::constant(n, lift.omega());
        case ExprNode::Kind::add:
            return lower_ratfunc<F>(e->a, vars, lift) + lower_ratfunc<F>(e->b, vars, lift);
        case ExprNode::Kind::sub:
            return lower_ratfunc<F>(e->a, vars, lift) - lower_ratfunc<F>(e->b, vars, lift);
        case ExprNode::Kind::mul:
            return lower_ratfunc<F>(e->a, vars, lift) * lower_ratfunc<F>(e->b, vars, lift);
        case ExprNode::Kind::div: {
            RatFunc<F> d = lower_ratfunc<F>(e->b, vars, lift);
            if (d.is_zero()) throw division_by_zero("zero denominator in expression");
            return lower_ratfunc<F>(e->a, vars, lift) / d;
        }
        case ExprNode::Kind::pow:
            return lower_ratfunc<F>(e->a, vars, lift).pow(e->exp);
        case ExprNode::Kind::neg:
            return -lower_ratfunc<F>(e->a, vars, lift);
    }
    throw error("corrupt expression node");
}

// polynomial lowering: division permitted only when it cancels to a polynomial
template <FieldElem F, typename Lift>
SparsePoly<F> lower_poly(const ExprPtr& e, const std::vector<std::string>& vars, const Lift& lift) {
    RatFunc<F> r = lower_ratfunc<F>(e, vars, lift);
    if (!r.is_polynomial())
        throw error("expression is not polynomial (division node with nonconstant denominator)");
    return r.num().scaled(r.den().leading_coeff().inv());
}

// printing of lowered values back to expression syntax
std::string cyclo_poly_to_expr(const SparsePoly<CycloRat>& p, const std::vector<std::string>& names);

} // namespace diagcube
