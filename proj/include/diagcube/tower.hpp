#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diagcube/errors.hpp"
#include "diagcube/field.hpp"

namespace diagcube {

// The function-field tower F(y_1..y_n), y_i^6 = rel[i], viewed as the free
// F-module on monomials y_1^{m_1}...y_n^{m_n}, 0 <= m_i <= 5. Exponent
// vectors are packed into a mixed-radix-6 code.
template <FieldElem F>
struct TowerAlgebra {
    int n;
    std::vector<F> rel;

    static std::uint32_t pow6(int k) {
        std::uint32_t r = 1;
        while (k--) r *= 6;
        return r;
    }
    std::uint32_t encode(const std::array<std::uint8_t, 8>& e) const {
        std::uint32_t code = 0;
        for (int i = n - 1; i >= 0; --i) code = code * 6 + e[i];
        return code;
    }
    std::array<std::uint8_t, 8> decode(std::uint32_t code) const {
        std::array<std::uint8_t, 8> e{};
        for (int i = 0; i < n; ++i) {
            e[i] = static_cast<std::uint8_t>(code % 6);
            code /= 6;
        }
        return e;
    }
    static unsigned ydeg(const std::array<std::uint8_t, 8>& e, int n) {
        unsigned d = 0;
        for (int i = 0; i < n; ++i) d += e[i];
        return d;
    }
};

template <FieldElem F>
using TowerAlgebraPtr = std::shared_ptr<const TowerAlgebra<F>>;

template <FieldElem F>
TowerAlgebraPtr<F> make_tower(int n, std::vector<F> rel) {
    if (static_cast<int>(rel.size()) != n) throw arity_mismatch("tower relation count");
    auto alg = std::make_shared<TowerAlgebra<F>>();
    alg->n = n;
    alg->rel = std::move(rel);
    return alg;
}

template <FieldElem F>
class TowerElem {
public:
    TowerElem() = default;
    explicit TowerElem(TowerAlgebraPtr<F> alg) : alg_(std::move(alg)) {}

    static TowerElem constant(TowerAlgebraPtr<F> alg, const F& c) {
        TowerElem e(std::move(alg));
        if (!c.is_zero()) e.c_.emplace(0u, c);
        return e;
    }
    static TowerElem one(TowerAlgebraPtr<F> alg) {
        const F ex = alg->rel.at(0);
        return constant(std::move(alg), ex.one_like());
    }
    // coeff * y_1^{e_1} ... y_n^{e_n}, exponents already reduced (< 6)
    static TowerElem monomial(TowerAlgebraPtr<F> alg, const std::array<std::uint8_t, 8>& exps, const F& coeff) {
        for (int i = 0; i < alg->n; ++i)
            if (exps[i] > 5) throw error("tower monomial exponent out of range");
        TowerElem e(alg);
        if (!coeff.is_zero()) e.c_.emplace(alg->encode(exps), coeff);
        return e;
    }
    // y_i (1-based index)
    static TowerElem gen(TowerAlgebraPtr<F> alg, int i) {
        std::array<std::uint8_t, 8> e{};
        e.at(i - 1) = 1;
        const F one = alg->rel.at(0).one_like();
        return monomial(std::move(alg), e, one);
    }

    const TowerAlgebraPtr<F>& algebra() const { return alg_; }
    const std::map<std::uint32_t, F>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const {
        return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
    }

    F field_one() const { return alg_->rel.at(0).one_like(); }
    F field_zero() const { return alg_->rel.at(0).zero_like(); }

    TowerElem operator+(const TowerElem& o) const {
        check(o);
        TowerElem r = *this;
        for (const auto& [k, v] : o.c_) r.add_term(k, v);
        return r;
    }
    TowerElem operator-(const TowerElem& o) const {
        check(o);
        TowerElem r = *this;
        for (const auto& [k, v] : o.c_) r.add_term(k, -v);
        return r;
    }
    TowerElem operator-() const {
        TowerElem r(alg_);
        for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
        return r;
    }

    TowerElem scaled(const F& s) const {
        TowerElem r(alg_);
        if (s.is_zero()) return r;
        for (const auto& [k, v] : c_) {
            F nv = v * s;
            if (!nv.is_zero()) r.c_.emplace(k, nv);
        }
        return r;
    }

    TowerElem operator*(const TowerElem& o) const {
        check(o);
        TowerElem r(alg_);
        const int n = alg_->n;
        for (const auto& [k1, v1] : c_) {
            auto e1 = alg_->decode(k1);
            for (const auto& [k2, v2] : o.c_) {
                auto e2 = alg_->decode(k2);
                F coeff = v1 * v2;
                if (coeff.is_zero()) continue;
                std::array<std::uint8_t, 8> e{};
                for (int i = 0; i < n; ++i) {
                    std::uint8_t d = static_cast<std::uint8_t>(e1[i] + e2[i]);
                    if (d >= 6) {
                        d -= 6;
                        coeff = coeff * alg_->rel[i];
                    }
                    e[i] = d;
                }
                if (!coeff.is_zero()) r.add_term(alg_->encode(e), coeff);
            }
        }
        return r;
    }

    TowerElem pow(unsigned e) const {
        TowerElem r = one(alg_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Inverse via extended gcd against T^6 - rel[i], one tower level at a
    // time. In the exact tower every nonzero element is a unit; in a
    // specialized algebra a zero divisor raises not_invertible and callers
    // resample the specialization point.
    TowerElem inv() const {
        if (is_zero()) throw division_by_zero("tower inverse of zero");
        return inv_level(*this, alg_->n);
    }

    // Scaling action y_i -> (-omega) y_i applied k times: a basis monomial
    // of total y-degree M picks up the factor (-omega)^{kM}.
    TowerElem apply_g(long k) const {
        const F one = field_one();
        const F eta = -one.omega_like();
        std::array<F, 6> etapow{one, eta, eta * eta, eta * eta * eta, eta * eta * eta * eta,
                                eta * eta * eta * eta * eta};
        TowerElem r(alg_);
        long kk = ((k % 6) + 6) % 6;
        for (const auto& [code, v] : c_) {
            unsigned m = TowerAlgebra<F>::ydeg(alg_->decode(code), alg_->n);
            unsigned idx = static_cast<unsigned>((kk * m) % 6);
            F nv = v * etapow[idx];
            if (!nv.is_zero()) r.c_.emplace(code, nv);
        }
        return r;
    }

    // invariant under the scaling action iff every stored monomial has
    // total y-degree divisible by 6
    bool is_invariant() const {
        for (const auto& [code, v] : c_)
            if (TowerAlgebra<F>::ydeg(alg_->decode(code), alg_->n) % 6 != 0) return false;
        return true;
    }

    bool operator==(const TowerElem& o) const { return c_ == o.c_; }
    bool operator!=(const TowerElem& o) const { return !(*this == o); }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [code, v] : c_) {
            auto e = alg_->decode(code);
            std::string mon;
            for (int i = 0; i < alg_->n; ++i) {
                if (e[i] == 0) continue;
                if (!mon.empty()) mon += "*";
                mon += "y" + std::to_string(i + 1);
                if (e[i] > 1) mon += "^" + std::to_string(static_cast<int>(e[i]));
            }
            std::string term = "(" + v.str() + ")" + (mon.empty() ? "" : "*" + mon);
            out += (out.empty() ? "" : " + ") + term;
        }
        return out;
    }

private:
    void check(const TowerElem& o) const {
        if (!alg_ || !o.alg_ || alg_->n != o.alg_->n)
            throw arity_mismatch("tower arity mismatch");
    }

    void add_term(std::uint32_t code, const F& v) {
        if (v.is_zero()) return;
        auto it = c_.find(code);
        if (it == c_.end()) {
            c_.emplace(code, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    // univariate coefficients of a in y_level (1-based level), entries
    // have digit level-1 equal to zero
    static std::vector<TowerElem> coeffs_in(const TowerElem& a, int level) {
        std::vector<TowerElem> out(6, TowerElem(a.alg_));
        const std::uint32_t base = TowerAlgebra<F>::pow6(level - 1);
        for (const auto& [code, v] : a.c_) {
            std::uint32_t d = (code / base) % 6;
            out[d].c_.emplace(code - d * base, v);
        }
        while (out.size() > 1 && out.back().is_zero()) out.pop_back();
        return out;
    }

    static TowerElem assemble(const std::vector<TowerElem>& coeffs, int level, const TowerAlgebraPtr<F>& alg) {
        TowerElem r(alg);
        const std::uint32_t base = TowerAlgebra<F>::pow6(level - 1);
        for (std::size_t d = 0; d < coeffs.size(); ++d)
            for (const auto& [code, v] : coeffs[d].c_)
                r.add_term(code + static_cast<std::uint32_t>(d) * base, v);
        return r;
    }

    using Upoly = std::vector<TowerElem>; // dense, low to high, over the sub-tower

    static int updeg(const Upoly& p) {
        for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
            if (!p[d].is_zero()) return d;
        return -1;
    }

    static Upoly upoly_sub(const Upoly& a, const Upoly& b) {
        Upoly r = a;
        if (r.size() < b.size()) r.resize(b.size(), TowerElem(a.empty() ? b[0].alg_ : a[0].alg_));
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
        return r;
    }

    static Upoly upoly_mul(const Upoly& a, const Upoly& b, const TowerAlgebraPtr<F>& alg) {
        Upoly r(a.size() + b.size(), TowerElem(alg));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] = r[i + j] + a[i] * b[j];
            }
        }
        return r;
    }

    // division with remainder over the sub-tower of the given level
    static std::pair<Upoly, Upoly> upoly_divmod(const Upoly& a, const Upoly& b, int level,
                                                const TowerAlgebraPtr<F>& alg) {
        int db = updeg(b);
        if (db < 0) throw division_by_zero("tower upoly division by zero");
        TowerElem lbinv = inv_level(b[db], level);
        Upoly q(std::max<std::size_t>(a.size(), 1), TowerElem(alg));
        Upoly r = a;
        for (int dr = updeg(r); dr >= db; dr = updeg(r)) {
            TowerElem t = r[dr] * lbinv;
            q[dr - db] = q[dr - db] + t;
            for (int j = 0; j <= db; ++j) r[dr - db + j] = r[dr - db + j] - t * b[j];
            if (!r[dr].is_zero()) throw error("tower division failed to cancel leading term");
        }
        return {q, r};
    }

    // inverse of a as an element of the level-deep sub-tower
    static TowerElem inv_level(const TowerElem& a, int level) {
        if (a.is_zero()) throw not_invertible("tower zero divisor (zero at sub-level)");
        const auto& alg = a.alg_;
        if (level == 0) {
            const F& c = a.c_.begin()->second;
            return constant(alg, c.inv());
        }
        Upoly A = coeffs_in(a, level);
        if (updeg(A) == 0) {
            // constant in the top generator of this level
            return inv_level(A[0], level - 1);
        }
        // modulus T^6 - rel[level-1]
        Upoly M(7, TowerElem(alg));
        M[0] = constant(alg, -alg->rel[level - 1]);
        M[6] = one(alg);

        Upoly r0 = M, r1 = A;
        Upoly s0{TowerElem(alg)}, s1{one(alg)};
        while (true) {
            int d1 = updeg(r1);
            if (d1 < 0) throw not_invertible("tower zero divisor");
            if (d1 == 0) {
                TowerElem ginv = inv_level(r1[0], level - 1);
                Upoly res(s1.size(), TowerElem(alg));
                for (std::size_t i = 0; i < s1.size(); ++i) res[i] = s1[i] * ginv;
                if (updeg(res) > 5) throw error("tower Bezout degree overflow");
                return assemble(res, level, alg);
            }
            auto [q, r2] = upoly_divmod(r0, r1, level - 1, alg);
            Upoly s2 = upoly_sub(s0, upoly_mul(q, s1, alg));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    TowerAlgebraPtr<F> alg_;
    std::map<std::uint32_t, F> c_;
};

// Rewrites coefficients through fn (e.g. a specialization homomorphism);
// nullopt if any coefficient fails to map.
template <FieldElem G, FieldElem F, typename Fn>
std::optional<TowerElem<G>> map_tower(const TowerElem<F>& a, TowerAlgebraPtr<G> alg2, Fn fn) {
    TowerElem<G> out(alg2);
    for (const auto& [code, v] : a.coeffs()) {
        std::optional<G> g = fn(v);
        if (!g) return std::nullopt;
        if (!g->is_zero()) {
            auto exps = a.algebra()->decode(code);
            out = out + TowerElem<G>::monomial(alg2, exps, *g);
        }
    }
    return out;
}

} // namespace diagcube
