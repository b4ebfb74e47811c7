#pragma once

#include <optional>
#include <string>
#include <utility>

#include "goldentiles/rational.hpp"

namespace goldentiles {

/// Element of Q[τ] with τ² = τ + 1, stored as a + b·τ with rational a, b.
/// The Galois conjugate sends τ to 1 − τ (equivalently −1/τ).
struct GoldenNumber {
    Rational a{}, b{};

    GoldenNumber() = default;
    GoldenNumber(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit GoldenNumber(Rational a_) : a(std::move(a_)) {}
    GoldenNumber(long a_, long b_) : a(a_), b(b_) {}
    explicit GoldenNumber(long a_) : a(a_) {}

    static GoldenNumber tau() { return GoldenNumber(0, 1); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    bool is_integral() const { return is_integer(a) && is_integer(b); }

    /// (rational part, τ part): 8τ+5 -> (5, 8).
    std::pair<Rational, Rational> tau_components() const { return {a, b}; }

    bool operator==(const GoldenNumber&) const = default;
};

inline GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a + y.a, x.b + y.b};
}
inline GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a - y.a, x.b - y.b};
}
inline GoldenNumber operator-(const GoldenNumber& x) { return {-x.a, -x.b}; }
inline GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
    // (a1 + b1·τ)(a2 + b2·τ) = a1a2 + b1b2 + (a1b2 + a2b1 + b1b2)·τ
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}
inline GoldenNumber& operator+=(GoldenNumber& x, const GoldenNumber& y) { return x = x + y; }
inline GoldenNumber& operator-=(GoldenNumber& x, const GoldenNumber& y) { return x = x - y; }
inline GoldenNumber& operator*=(GoldenNumber& x, const GoldenNumber& y) { return x = x * y; }

/// τ -> 1 − τ.
inline GoldenNumber conjugate(const GoldenNumber& x) { return {x.a + x.b, -x.b}; }

/// x · conjugate(x) = a² + ab − b² (rational).
inline Rational golden_norm(const GoldenNumber& x) { return x.a * x.a + x.a * x.b - x.b * x.b; }

GoldenNumber inverse(const GoldenNumber& x); // throws std::domain_error on 0
inline GoldenNumber operator/(const GoldenNumber& x, const GoldenNumber& y) {
    return x * inverse(y);
}

GoldenNumber golden_pow(GoldenNumber base, unsigned e);

/// Exact sign of a + b·τ as a real number (-1, 0, +1).
int sign(const GoldenNumber& x);

/// Exact square root within Q[τ]: returns y >= 0 with y² == x, when one exists.
std::optional<GoldenNumber> is_square_in_qtau(const GoldenNumber& x);

/// Compact exact rendering: "5", "τ", "2+3·τ", "1-2·τ", ...
std::string golden_str(const GoldenNumber& x);

} // namespace goldentiles
