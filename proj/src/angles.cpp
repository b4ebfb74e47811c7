#include "goldentiles/angles.hpp"

#include <sstream>

#include "goldentiles/errors.hpp"
#include "goldentiles/numeric.hpp"

namespace goldentiles {

namespace {

AngleExpr combine(const AngleExpr& a, const AngleExpr& b, int sgn) {
    AngleExpr out;
    out.pi_coeff = a.pi_coeff + sgn * b.pi_coeff;
    out.beta_coeff = a.beta_coeff + sgn * b.beta_coeff;
    out.delta_coeff = a.delta_coeff + sgn * b.delta_coeff;
    out.crs_terms = a.crs_terms;
    for (const auto& [k, v] : b.crs_terms) {
        Rational& slot = out.crs_terms[k];
        slot += sgn * v;
        if (slot == 0) out.crs_terms.erase(k);
    }
    return out;
}

GoldenNumber gn(long an, long ad, long bn, long bd) {
    return GoldenNumber(Rational(an) / ad, Rational(bn) / bd);
}

} // namespace

AngleExpr operator+(const AngleExpr& a, const AngleExpr& b) { return combine(a, b, 1); }
AngleExpr operator-(const AngleExpr& a, const AngleExpr& b) { return combine(a, b, -1); }
AngleExpr operator-(const AngleExpr& a) {
    AngleExpr zero;
    return combine(zero, a, -1);
}
AngleExpr operator*(const Rational& s, const AngleExpr& a) {
    AngleExpr out;
    out.pi_coeff = s * a.pi_coeff;
    out.beta_coeff = s * a.beta_coeff;
    out.delta_coeff = s * a.delta_coeff;
    if (s != 0)
        for (const auto& [k, v] : a.crs_terms) out.crs_terms[k] = s * v;
    return out;
}

CosSinPair cos_sin_product(const CosSinPair& a, const CosSinPair& b) {
    return {a.c * b.c - a.s * b.s, a.s * b.c + a.c * b.s};
}

CosSinPair cos_sin_conjugate(const CosSinPair& a) {
    return {a.c, TowerElement{} - a.s};
}

GoldenAngleTable::GoldenAngleTable() {
    // cos α = (2τ−1)/5, sin α = 2(2τ−1)/5      (both in Q[τ])
    alpha_.c = {gn(-1, 5, 2, 5), {}, {}, {}};
    alpha_.s = {gn(-2, 5, 4, 5), {}, {}, {}};
    // cos γ = (2τ−1)/3, sin γ = 2/3            (both in Q[τ])
    gamma_.c = {gn(-1, 3, 2, 3), {}, {}, {}};
    gamma_.s = {gn(2, 3, 0, 1), {}, {}, {}};
    // cos β = (τ+2)/15·ρ√3, sin β = (6−2τ)/15·ρ√3
    beta_.c = {{}, {}, {}, gn(2, 15, 1, 15)};
    beta_.s = {{}, {}, {}, gn(2, 5, -2, 15)};
    // cos δ = (3τ−4)/15·ρ√3, sin δ = (4τ−2)/15·ρ√3
    delta_.c = {{}, {}, {}, gn(-4, 15, 1, 5)};
    delta_.s = {{}, {}, {}, gn(-2, 15, 4, 15)};
}

const GoldenAngleTable& GoldenAngleTable::instance() {
    static const GoldenAngleTable t;
    return t;
}

CosSinPair exact_cos_sin(const AngleExpr& e) {
    if (!e.crs_terms.empty())
        throw UnsupportedExpr("exact trigonometry is not defined for expressions with arccos terms");
    if (!is_integer(e.beta_coeff) || !is_integer(e.delta_coeff))
        throw UnsupportedExpr("beta/delta coefficients must be integers");
    Rational two_q = 2 * e.pi_coeff;
    if (!is_integer(two_q))
        throw UnsupportedExpr("pi coefficient must have denominator at most 2");

    const auto& table = GoldenAngleTable::instance();
    CosSinPair acc{TowerElement::of(GoldenNumber(1)), TowerElement{}};

    auto apply = [&acc](const CosSinPair& unit, const Rational& coeff) {
        long n = static_cast<long>(num(coeff));
        CosSinPair step = n >= 0 ? unit : cos_sin_conjugate(unit);
        for (long i = 0; i < (n >= 0 ? n : -n); ++i) acc = cos_sin_product(acc, step);
    };
    apply(table.beta(), e.beta_coeff);
    apply(table.delta(), e.delta_coeff);

    // q·π contributes a rotation by (2q)·(π/2); reduce 2q mod 4.
    long k = static_cast<long>(num(two_q)) % 4;
    if (k < 0) k += 4;
    for (long i = 0; i < k; ++i) acc = {TowerElement{} - acc.s, acc.c}; // rotate by π/2
    return acc;
}

TowerElement exact_cos(const AngleExpr& e) { return exact_cos_sin(e).c; }

namespace {

struct AngleNumerics {
    Real pi, beta, delta;
    AngleNumerics() {
        const auto& t = GoldenAngleTable::instance();
        pi = real_pi();
        beta = atan2(to_real(t.beta().s), to_real(t.beta().c));
        delta = atan2(to_real(t.delta().s), to_real(t.delta().c));
    }
};

const AngleNumerics& angle_numerics() {
    static const AngleNumerics n;
    return n;
}

} // namespace

AngleExpr identify_angle(const TowerElement& cosine) {
    const auto& nums = angle_numerics();
    Real target = to_real(cosine);
    static const Real tol("1e-12");
    for (int q2 = -3; q2 <= 4; ++q2)
        for (int m = -6; m <= 6; ++m)
            for (int n = -6; n <= 6; ++n) {
                if (m == 0 && n == 0 && q2 != 1) continue; // only π/2 lies in (0, π)
                Real v = Real(q2) / 2 * nums.pi + m * nums.beta + n * nums.delta;
                if (v <= tol || v >= nums.pi - tol) continue;
                if (abs(cos(v) - target) >= tol) continue;
                AngleExpr cand(Rational(q2) / 2, Rational(m), Rational(n));
                if (exact_cos(cand) == cosine) return cand;
            }
    throw NotIdentified("no angle q·π+m·β+n·δ in (0,π) within the search bounds has this cosine");
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& coeff, const std::string& sym) {
    if (coeff == 0) return;
    Rational a = coeff < 0 ? Rational(-coeff) : coeff;
    if (first) {
        if (coeff < 0) os << "-";
        first = false;
    } else {
        os << (coeff < 0 ? "-" : "+");
    }
    if (a != 1) os << rational_str(a) << "·";
    os << sym;
}

} // namespace

std::string angle_str(const AngleExpr& e) {
    std::ostringstream os;
    bool first = true;
    append_term(os, first, e.pi_coeff, "π");
    append_term(os, first, e.beta_coeff, "β");
    append_term(os, first, e.delta_coeff, "δ");
    for (const auto& [k, v] : e.crs_terms)
        append_term(os, first, v,
                    "⟨" + std::to_string(k.p) + "⟩_" + std::to_string(k.d));
    if (first) os << "0";
    return os.str();
}

DehnValue operator+(const DehnValue& a, const DehnValue& b) {
    return {a.beta + b.beta, a.delta + b.delta};
}
DehnValue operator-(const DehnValue& a, const DehnValue& b) {
    return {a.beta - b.beta, a.delta - b.delta};
}

DehnValue dehn_accumulate(const std::vector<std::pair<GoldenNumber, AngleExpr>>& terms) {
    DehnValue d;
    for (const auto& [len, e] : terms) {
        if (!e.crs_terms.empty())
            throw std::invalid_argument("dehn_accumulate: arccos terms have no normal form here");
        d.beta = d.beta + GoldenNumber(e.beta_coeff) * len;
        d.delta = d.delta + GoldenNumber(e.delta_coeff) * len;
    }
    return d;
}

DehnValue dehn_scale(const DehnValue& d, const GoldenNumber& s) {
    return {d.beta * s, d.delta * s};
}

std::string dehn_str(const DehnValue& d) {
    return "(" + golden_str(d.beta) + ")⊗β + (" + golden_str(d.delta) + ")⊗δ";
}

} // namespace goldentiles
