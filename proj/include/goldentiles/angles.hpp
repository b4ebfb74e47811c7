#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "goldentiles/tower.hpp"

namespace goldentiles {

/// Key for an angle of the form (1/s)·arccos(a / (2·p^{s/2})).
struct CrsKey {
    long p = 0;
    long d = 0;
    auto operator<=>(const CrsKey&) const = default;
};

/// A formal angle q·π + m·β + n·δ + Σ cᵢ·⟨pᵢ⟩_{dᵢ}, where β and δ are the
/// two basis angles of the golden-tetrahedra family (the other two lateral
/// angles are eliminated via α = π − β − δ and γ = δ − β at construction).
struct AngleExpr {
    Rational pi_coeff;
    Rational beta_coeff;
    Rational delta_coeff;
    std::map<CrsKey, Rational> crs_terms;

    AngleExpr() = default;
    AngleExpr(Rational q, Rational m, Rational n)
        : pi_coeff(std::move(q)), beta_coeff(std::move(m)), delta_coeff(std::move(n)) {}
    AngleExpr(long q, long m, long n) : pi_coeff(q), beta_coeff(m), delta_coeff(n) {}

    static AngleExpr pi() { return {1, 0, 0}; }
    static AngleExpr pi_over_2() { return {Rational(1) / 2, Rational(0), Rational(0)}; }
    static AngleExpr alpha() { return {1, -1, -1}; }
    static AngleExpr beta() { return {0, 1, 0}; }
    static AngleExpr gamma() { return {0, -1, 1}; }
    static AngleExpr delta() { return {0, 0, 1}; }

    bool operator==(const AngleExpr&) const = default;
};

AngleExpr operator+(const AngleExpr&, const AngleExpr&);
AngleExpr operator-(const AngleExpr&, const AngleExpr&);
AngleExpr operator-(const AngleExpr&);
AngleExpr operator*(const Rational&, const AngleExpr&);

/// Exact (cos, sin) pair in the tower; composes under the angle-addition
/// formulas like a unit complex number.
struct CosSinPair {
    TowerElement c;
    TowerElement s;
    bool operator==(const CosSinPair&) const = default;
};

/// Angle addition: (cos(a+b), sin(a+b)) from the pairs for a and b.
CosSinPair cos_sin_product(const CosSinPair& a, const CosSinPair& b);
/// (cos(−a), sin(−a)).
CosSinPair cos_sin_conjugate(const CosSinPair& a);

/// Exact cosines and sines of the four lateral angles of the golden
/// tetrahedra. All eight values lie in the tower and satisfy
/// cos² + sin² = 1 exactly; the sines take the positive (acute) branch.
class GoldenAngleTable {
public:
    static const GoldenAngleTable& instance();

    const CosSinPair& alpha() const { return alpha_; }
    const CosSinPair& beta() const { return beta_; }
    const CosSinPair& gamma() const { return gamma_; }
    const CosSinPair& delta() const { return delta_; }

private:
    GoldenAngleTable();
    CosSinPair alpha_, beta_, gamma_, delta_;
};

/// Exact (cos, sin) of an AngleExpr via repeated addition formulas.
/// Supported: integer beta/delta coefficients, pi coefficient with
/// denominator at most 2, empty crs_terms. Throws UnsupportedExpr otherwise.
CosSinPair exact_cos_sin(const AngleExpr& e);
/// Cosine component of exact_cos_sin.
TowerElement exact_cos(const AngleExpr& e);

/// Invert exact_cos on the bounded lattice q ∈ {0, ±1/2, ±1, ±3/2, 2},
/// integer |m|,|n| ≤ 6, restricted to expressions representing an angle in
/// the open interval (0, π). Numeric prescreen at 1e−12, then exact
/// confirmation in the tower. Throws NotIdentified when nothing matches.
AngleExpr identify_angle(const TowerElement& cosine);

/// Human-readable form such as "π−β−δ" or "π/2".
std::string angle_str(const AngleExpr& e);

/// Dehn-invariant normal form: the β and δ components of Σ lᵢ⊗ᾱᵢ after
/// rational multiples of π are annihilated and α, γ are eliminated.
struct DehnValue {
    GoldenNumber beta;
    GoldenNumber delta;

    bool is_zero() const { return beta.is_zero() && delta.is_zero(); }
    std::map<std::string, GoldenNumber> components() const {
        return {{"beta", beta}, {"delta", delta}};
    }
    bool operator==(const DehnValue&) const = default;
};

DehnValue operator+(const DehnValue&, const DehnValue&);
DehnValue operator-(const DehnValue&, const DehnValue&);

/// Σ lᵢ ⊗ angleᵢ over the given edge list, in normal form.
DehnValue dehn_accumulate(const std::vector<std::pair<GoldenNumber, AngleExpr>>& terms);
/// Multiply every component by s (length rescaling of the polyhedron acts
/// this way because the invariant is linear in edge length).
DehnValue dehn_scale(const DehnValue& d, const GoldenNumber& s);

std::string dehn_str(const DehnValue& d);

} // namespace goldentiles
