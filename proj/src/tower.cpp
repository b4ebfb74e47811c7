#include "goldentiles/tower.hpp"

#include <stdexcept>

namespace goldentiles {

namespace {
const GoldenNumber kRhoSq(2, 1);   // ρ² = τ + 2
const GoldenNumber kThree(3);      // (√3)² = 3
} // namespace

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
TowerElement operator-(const TowerElement& a, const TowerElement& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
TowerElement operator-(const TowerElement& a) { return {-a.w, -a.x, -a.y, -a.z}; }

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    const GoldenNumber& P = kRhoSq;
    GoldenNumber w = a.w * b.w + P * (a.x * b.x) + kThree * (a.y * b.y) +
                     kThree * P * (a.z * b.z);
    GoldenNumber x = a.w * b.x + a.x * b.w + kThree * (a.y * b.z + a.z * b.y);
    GoldenNumber y = a.w * b.y + a.y * b.w + P * (a.x * b.z + a.z * b.x);
    GoldenNumber z = a.w * b.z + a.z * b.w + a.x * b.y + a.y * b.x;
    return {w, x, y, z};
}

TowerElement sigma_auto(const TowerElement& t) {
    // σ(ρ) = (τ−1)ρ since √(3−τ) = τ⁻¹·√(τ+2) and τ⁻¹ = τ−1.
    const GoldenNumber m(-1, 1); // τ − 1
    return {conjugate(t.w), conjugate(t.x) * m, conjugate(t.y), conjugate(t.z) * m};
}

TowerElement phi_auto(const TowerElement& t) { return {t.w, t.x, -t.y, -t.z}; }

namespace {
// ρ -> −ρ on the Q[τ, ρ] part (only valid when y == z == 0 callers keep that)
TowerElement rho_conj(const TowerElement& t) { return {t.w, -t.x, t.y, -t.z}; }
} // namespace

TowerElement inverse(const TowerElement& t) {
    if (t.is_zero()) throw std::domain_error("division by zero in the tower");
    // peel √3, then ρ, then τ by multiplying with conjugates
    TowerElement n1 = t * phi_auto(t); // lands in Q[τ, ρ]
    TowerElement n1c = rho_conj(n1);
    TowerElement n2 = n1 * n1c; // lands in Q[τ]
    GoldenNumber g = n2.w;      // n2 == of(g)
    GoldenNumber ginv = inverse(g);
    return phi_auto(t) * n1c * TowerElement::of(ginv);
}

std::optional<TowerElement> tower_sqrt_of_golden(const GoldenNumber& g) {
    if (g.is_zero()) return TowerElement{};
    if (sign(g) < 0) return std::nullopt;
    if (auto r = is_square_in_qtau(g)) return TowerElement::of(*r);
    if (auto r = is_square_in_qtau(g / GoldenNumber(3)))
        return TowerElement::of(*r) * TowerElement::sqrt3();
    if (auto r = is_square_in_qtau(g / kRhoSq))
        return TowerElement::of(*r) * TowerElement::rho();
    if (auto r = is_square_in_qtau(g / (GoldenNumber(3) * kRhoSq)))
        return TowerElement::of(*r) * TowerElement::rho() * TowerElement::sqrt3();
    return std::nullopt;
}

std::string tower_str(const TowerElement& t) {
    if (t.is_zero()) return "0";
    std::string out;
    auto append = [&out](const GoldenNumber& g, const std::string& mono) {
        if (g.is_zero()) return;
        std::string part = golden_str(g);
        if (!mono.empty()) {
            // wrap composite coefficients like "1+2·τ" when a monomial follows
            bool needs_paren = part.find('+') != std::string::npos ||
                               (part.rfind('-') != std::string::npos && part.rfind('-') > 0);
            if (part == "1") part = mono;
            else if (part == "-1") part = "-" + mono;
            else part = (needs_paren ? "(" + part + ")" : part) + "·" + mono;
        }
        if (!out.empty() && part[0] != '-') out += "+";
        out += part;
    };
    append(t.w, "");
    append(t.x, "ρ");
    append(t.y, "√3");
    append(t.z, "ρ√3");
    return out;
}

} // namespace goldentiles
