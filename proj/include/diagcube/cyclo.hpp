#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagcube/field.hpp"
#include "diagcube/rational.hpp"

namespace diagcube {

// Element a + b*omega of Q(omega), omega a primitive cube root of unity,
// stored on the basis {1, omega} with omega^2 rewritten to -omega-1.
// Equality is therefore syntactic.
class CycloRat {
public:
    CycloRat() : a_(0), b_(0) {}
    explicit CycloRat(Rat a) : a_(std::move(a)), b_(0) {}
    CycloRat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit CycloRat(long n) : a_(n), b_(0) {}

    static CycloRat omega() { return CycloRat(Rat(0), Rat(1)); }
    // eta = -omega, the primitive sixth root of unity used by the curve action
    static CycloRat eta() { return CycloRat(Rat(0), Rat(-1)); }

    const Rat& re() const { return a_; }
    const Rat& wcoef() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    CycloRat operator+(const CycloRat& o) const { return CycloRat(a_ + o.a_, b_ + o.b_); }
    CycloRat operator-(const CycloRat& o) const { return CycloRat(a_ - o.a_, b_ - o.b_); }
    CycloRat operator-() const { return CycloRat(-a_, -b_); }

    CycloRat operator*(const CycloRat& o) const {
        // (a+b w)(c+d w) = ac - bd + (ad + bc - bd) w
        Rat bd = b_ * o.b_;
        return CycloRat(a_ * o.a_ - bd, a_ * o.b_ + b_ * o.a_ - bd);
    }

    // Field norm a^2 - a b + b^2; zero only at zero.
    Rat norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    CycloRat inv() const {
        if (is_zero()) throw division_by_zero("CycloRat::inv of zero");
        Rat n = norm();
        return CycloRat((a_ - b_) / n, -b_ / n);
    }

    bool operator==(const CycloRat& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const CycloRat& o) const { return !(*this == o); }

    CycloRat zero_like() const { return CycloRat(); }
    CycloRat one_like() const { return CycloRat(1); }
    CycloRat omega_like() const { return omega(); }
    CycloRat from_int(long n) const { return CycloRat(n); }

    CycloRat pow(unsigned long e) const {
        CycloRat r = one_like(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        if (b_ == 0) return rat_to_string(a_);
        std::string w;
        if (b_ == 1) w = "omega";
        else if (b_ == -1) w = "-omega";
        else w = rat_to_string(b_) + "*omega";
        if (a_ == 0) return w;
        if (b_ > 0) return "(" + rat_to_string(a_) + "+" + (b_ == 1 ? "omega" : rat_to_string(b_) + "*omega") + ")";
        Rat nb = -b_;
        return "(" + rat_to_string(a_) + "-" + (nb == 1 ? "omega" : rat_to_string(nb) + "*omega") + ")";
    }

    bool rank_before(const CycloRat& o) const {
        Rat h1 = abs(a_) + abs(b_), h2 = abs(o.a_) + abs(o.b_);
        if (h1 != h2) return h1 < h2;
        if (a_ != o.a_) return a_ < o.a_;
        return b_ < o.b_;
    }

private:
    Rat a_, b_;
};

// Cube test: decided only for rational constants; non-rational elements
// of Q(omega) report unknown (the toolkit never needs them decided).
inline Tri elem_is_cube(const CycloRat& c) {
    if (c.is_zero()) return Tri::yes;
    if (!c.is_rational()) return Tri::unknown;
    return rat_is_cube(c.re()) ? Tri::yes : Tri::no;
}

inline std::optional<CycloRat> elem_cbrt(const CycloRat& c) {
    if (c.is_zero()) return CycloRat();
    if (!c.is_rational()) return std::nullopt;
    auto r = rat_cbrt(c.re());
    if (!r) return std::nullopt;
    return CycloRat(*r);
}

// Exact square root in Q(omega). (c + d w)^2 = (c^2 - d^2) + (2cd - d^2) w,
// so z^2 = a + b w reduces to rational square-root extractions.
inline std::optional<CycloRat> elem_sqrt(const CycloRat& z) {
    const Rat a = z.re(), b = z.wcoef();
    auto check = [&](const Rat& c, const Rat& d) -> bool {
        return c * c - d * d == a && Rat(2) * c * d - d * d == b;
    };
    if (b == 0) {
        if (auto c = rat_sqrt(a)) return CycloRat(*c);
        // d = 2c branch: -3 c^2 = a
        if (auto c = rat_sqrt(-a / 3)) {
            if (check(*c, 2 * *c)) return CycloRat(*c, 2 * *c);
            if (check(-*c, -2 * *c)) return CycloRat(-*c, -2 * *c);
        }
        return std::nullopt;
    }
    // 3 d^4 + (4a - 2b) d^2 - b^2 = 0, quadratic in d^2
    Rat A(3), B = 4 * a - 2 * b, C = -b * b;
    Rat disc = B * B - 4 * A * C;
    auto sd = rat_sqrt(disc);
    if (!sd) return std::nullopt;
    for (int sign : {+1, -1}) {
        Rat e = (-B + sign * *sd) / (2 * A); // candidate d^2
        if (e < 0) continue;
        auto d = rat_sqrt(e);
        if (!d) continue;
        for (int s2 : {+1, -1}) {
            Rat dd = s2 * *d;
            if (dd == 0) continue;
            Rat c = (b + dd * dd) / (2 * dd);
            if (check(c, dd)) return CycloRat(c, dd);
        }
    }
    return std::nullopt;
}

} // namespace diagcube
