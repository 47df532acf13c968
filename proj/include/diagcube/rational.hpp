#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "diagcube/errors.hpp"

namespace diagcube {

// Exact rational numbers. GMP keeps them canonical (lowest terms,
// positive denominator) after canonicalize().
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

// Exact integer n-th root: returns root if x is a perfect n-th power.
inline std::optional<mpz_class> mpz_exact_root(const mpz_class& x, unsigned long n) {
    if (x == 0) return mpz_class(0);
    if (x < 0 && n % 2 == 0) return std::nullopt;
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), n);
    if (!exact) return std::nullopt;
    return r;
}

inline std::optional<Rat> rat_exact_root(const Rat& q, unsigned long n) {
    auto num = mpz_exact_root(q.get_num(), n);
    if (!num) return std::nullopt;
    auto den = mpz_exact_root(q.get_den(), n);
    if (!den) return std::nullopt;
    Rat r(*num, *den);
    r.canonicalize();
    return r;
}

// True iff c = d^3 for some rational d. Zero is a caller error by convention.
inline bool rat_is_cube(const Rat& c) {
    if (c == 0) throw std::domain_error("rat_is_cube: zero input");
    return rat_exact_root(c, 3).has_value();
}

inline std::optional<Rat> rat_cbrt(const Rat& c) { return rat_exact_root(c, 3); }

inline bool rat_is_square(const Rat& c) {
    if (c < 0) return false;
    return rat_exact_root(c, 2).has_value();
}

inline std::optional<Rat> rat_sqrt(const Rat& c) {
    if (c < 0) return std::nullopt;
    return rat_exact_root(c, 2);
}

} // namespace diagcube
