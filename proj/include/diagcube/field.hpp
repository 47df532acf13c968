#pragma once

#include <concepts>
#include <string>

namespace diagcube {

// Tri-valued answer for partial decision procedures (cube tests over
// fields where the general question is out of scope).
enum class Tri { yes, no, unknown };

inline const char* tri_name(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "unknown";
    }
}

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::no || b == Tri::no) return Tri::no;
    if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
    return Tri::yes;
}

// The field contract every coefficient domain implements. Values are
// immutable; zero_like/one_like/omega_like carry whatever runtime
// context the field needs (modulus, variable arity).
template <typename F>
concept FieldElem = requires(const F a, const F b) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.inv() } -> std::same_as<F>;
    { a.zero_like() } -> std::same_as<F>;
    { a.one_like() } -> std::same_as<F>;
    { a.omega_like() } -> std::same_as<F>;
    { a.from_int(long(0)) } -> std::same_as<F>;
    { a.str() } -> std::convertible_to<std::string>;
    // strict weak order used only for deterministic tie-breaking
    { a.rank_before(b) } -> std::convertible_to<bool>;
};

} // namespace diagcube
