#pragma once

#include <array>
#include <optional>
#include <string>

#include "goldentiles/golden.hpp"

namespace goldentiles {

/// Element of the degree-8 tower Q[τ, ρ, √3] with ρ = √(τ+2), written
///   w + x·ρ + y·√3 + z·ρ√3   (w, x, y, z in Q[τ]).
/// Coordinates in the fixed basis {1, τ, ρ, τρ, √3, τ√3, ρ√3, τρ√3}.
struct TowerElement {
    GoldenNumber w{}, x{}, y{}, z{};

    TowerElement() = default;
    TowerElement(GoldenNumber w_, GoldenNumber x_, GoldenNumber y_, GoldenNumber z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static TowerElement of(const GoldenNumber& g) { return {g, {}, {}, {}}; }
    static TowerElement of(const Rational& q) { return of(GoldenNumber(q)); }
    static TowerElement rho() { return {{}, GoldenNumber(1), {}, {}}; }
    static TowerElement sqrt3() { return {{}, {}, GoldenNumber(1), {}}; }

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_golden() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    std::array<Rational, 8> coords() const {
        return {w.a, w.b, x.a, x.b, y.a, y.b, z.a, z.b};
    }
    static TowerElement from_coords(const std::array<Rational, 8>& c) {
        return {{c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}, {c[6], c[7]}};
    }

    bool operator==(const TowerElement&) const = default;
};

TowerElement operator+(const TowerElement&, const TowerElement&);
TowerElement operator-(const TowerElement&, const TowerElement&);
TowerElement operator-(const TowerElement&);
TowerElement operator*(const TowerElement&, const TowerElement&);
inline TowerElement& operator+=(TowerElement& a, const TowerElement& b) { return a = a + b; }
inline TowerElement& operator-=(TowerElement& a, const TowerElement& b) { return a = a - b; }
inline TowerElement& operator*=(TowerElement& a, const TowerElement& b) { return a = a * b; }

/// Field automorphism σ: τ -> 1−τ, ρ -> (τ−1)·ρ, √3 -> √3. Order 4.
TowerElement sigma_auto(const TowerElement&);

/// Field automorphism φ: √3 -> −√3, fixes Q[τ, ρ]. Order 2. Commutes with σ.
TowerElement phi_auto(const TowerElement&);

/// Multiplicative inverse; throws std::domain_error on zero.
TowerElement inverse(const TowerElement&);
inline TowerElement operator/(const TowerElement& a, const TowerElement& b) {
    return a * inverse(b);
}

/// Square root of a Q[τ] value inside the tower, when it exists. Any tower
/// element squaring into Q[τ] is g·m for a monomial m in {1, ρ, √3, ρ√3},
/// so four exact branches decide completely.
std::optional<TowerElement> tower_sqrt_of_golden(const GoldenNumber& g);

std::string tower_str(const TowerElement&);

} // namespace goldentiles
