#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "diagcube/cyclo.hpp"
#include "diagcube/errors.hpp"
#include "diagcube/field.hpp"

namespace diagcube {

namespace fpdetail {
inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
} // namespace fpdetail

bool is_prime_u64(std::uint64_t n);

// Element of F_p with the modulus carried alongside the value; the
// moduli in play are small enough (< 2^32) that this stays cheap.
class FpElem {
public:
    FpElem() : v_(0), p_(0) {}
    FpElem(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FpElem operator+(const FpElem& o) const { check(o); return raw(fpdetail::addm(v_, o.v_, p_)); }
    FpElem operator-(const FpElem& o) const { check(o); return raw(fpdetail::subm(v_, o.v_, p_)); }
    FpElem operator*(const FpElem& o) const { check(o); return raw(fpdetail::mulm(v_, o.v_, p_)); }
    FpElem operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }

    FpElem inv() const {
        if (v_ == 0) throw division_by_zero("FpElem::inv of zero");
        return raw(fpdetail::powm(v_, p_ - 2, p_));
    }

    FpElem pow(std::uint64_t e) const { return raw(fpdetail::powm(v_, e, p_)); }

    bool operator==(const FpElem& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }

    FpElem zero_like() const { return raw(0); }
    FpElem one_like() const { return raw(1 % p_); }
    FpElem omega_like() const; // defined after FpField
    FpElem from_int(long n) const {
        long long m = static_cast<long long>(n % static_cast<long long>(p_));
        if (m < 0) m += static_cast<long long>(p_);
        return raw(static_cast<std::uint64_t>(m));
    }

    std::string str() const { return std::to_string(v_); }
    bool rank_before(const FpElem& o) const { return v_ < o.v_; }

private:
    FpElem raw(std::uint64_t v) const { FpElem e; e.v_ = v; e.p_ = p_; return e; }
    void check(const FpElem& o) const {
        if (p_ != o.p_) throw arity_mismatch("FpElem moduli differ");
    }
    std::uint64_t v_, p_;
};

// A prime field F_p, p ≡ 1 (mod 3), together with a designated primitive
// cube root of unity omega_p (the smaller of the two by default).
struct FpField {
    std::uint64_t p = 0;
    std::uint64_t omega = 0;

    FpElem make(long n) const { return FpElem(0, p).from_int(n); }
    FpElem make_u(std::uint64_t n) const { return FpElem(n % p, p); }
    FpElem zero() const { return FpElem(0, p); }
    FpElem one() const { return FpElem(1, p); }
    FpElem omega_elem() const {
        if (omega == 0) throw error("field built without a cube root of unity");
        return FpElem(omega, p);
    }
};

// Builds F_p with a primitive cube root of unity. Errors when p is not
// prime or p ≢ 1 (mod 3). pick_larger selects the other root (the seedable
// override for specialization determinism experiments).
FpField fp_with_omega(std::uint64_t p, bool pick_larger = false);

// F_p without a designated cube root of unity, for work that never touches
// cube classes (fiber counting, square tests). Any prime p > 3.
FpField fp_plain(std::uint64_t p);

bool fp_has_cube_roots(std::uint64_t p); // p prime with p ≡ 1 (mod 3)

inline Tri elem_is_cube(const FpElem& x) {
    if (x.is_zero()) return Tri::yes;
    std::uint64_t p = x.modulus();
    if (p % 3 != 1) return Tri::yes; // cubing is a bijection when 3 ∤ p-1
    return fpdetail::powm(x.value(), (p - 1) / 3, p) == 1 ? Tri::yes : Tri::no;
}

std::optional<FpElem> elem_cbrt(const FpElem& x);
std::optional<FpElem> elem_sqrt(const FpElem& x);

inline FpElem FpElem::omega_like() const {
    FpField f = fp_with_omega(p_);
    return FpElem(f.omega, p_);
}

// Specialization homomorphism Q(omega) -> F_p, omega -> omega_p. Fails
// (nullopt) when a denominator is divisible by p.
std::optional<FpElem> cyclo_to_fp(const CycloRat& c, const FpField& f);

std::optional<FpElem> rat_to_fp(const Rat& q, const FpField& f);

// Deterministically enumerates primes p ≡ 1 (mod 3) in [lo, hi] from a
// seeded stream; used by the modular verification mode.
std::uint64_t nth_sample_prime(std::uint64_t lo, std::uint64_t hi, std::uint64_t seed, unsigned index);

} // namespace diagcube
