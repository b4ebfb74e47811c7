// Property tests for the pure-geodetic angle layer: constructions ⟨p⟩_d,
// their exact defining identities, input validation, and the dihedral-angle
// decompositions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "goldentiles/angles.hpp"
#include "goldentiles/crs.hpp"
#include "goldentiles/errors.hpp"
#include "goldentiles/numeric.hpp"

using namespace goldentiles;

namespace {

// 4·p^s == a² + d·b², recomputed independently in exact integers.
bool defining_identity(const CrsAngle& c) {
    Int lhs = 4;
    for (long i = 0; i < c.s; ++i) lhs *= c.p;
    return lhs == c.a * c.a + Int(c.d) * c.b * c.b;
}

} // namespace

TEST_CASE("frozen constructions for the three reference pairs") {
    const CrsAngle a51 = crs_construct(5, 1);
    CHECK(a51.s == 1);
    CHECK(a51.a == 2);
    CHECK(a51.b == 4);
    const CrsAngle a35 = crs_construct(3, 5);
    CHECK(a35.s == 2);
    CHECK(a35.a == 4);
    CHECK(a35.b == 2);
    const CrsAngle a27 = crs_construct(2, 7);
    CHECK(a27.s == 1);
    CHECK(a27.a == 1);
    CHECK(a27.b == 1);
}

TEST_CASE("every accepted construction satisfies its exact identity") {
    for (const auto& [p, d] : std::vector<std::pair<long, long>>{
             {5, 1}, {3, 5}, {2, 7}, {7, 3}, {17, 1}, {13, 1}, {3, 11}, {5, 11}, {19, 3}}) {
        CAPTURE(p);
        CAPTURE(d);
        const CrsAngle c = crs_construct(p, d);
        CHECK(defining_identity(c));
        CHECK(c.s >= 1);
        CHECK(c.b >= 1);
        CHECK(c.p == p);
        CHECK(c.d == d);
        // The numeric value matches cos(s·θ)·2·p^{s/2} = a.
        Real scale = 2 * sqrt(pow(Real(p), int(c.s)));
        CHECK(abs(cos(Real(c.s) * c.value) * scale - to_real(Rational(c.a))) < Real("1e-25"));
        // θ lies in (0, π).
        CHECK(c.value > 0);
        CHECK(c.value < real_pi());
    }
}

TEST_CASE("the exponent s is minimal") {
    // For (3,5) the s = 1 equation 12 = a² + 5b² has no solution with b ≥ 1
    // (a² = 12−5b² ⇒ b = 1, a² = 7), so s = 2 is minimal.
    const CrsAngle a35 = crs_construct(3, 5);
    CHECK(a35.s == 2);
    for (Int a = 0; a * a <= 12; ++a) {
        const Int rest = 12 - a * a;
        if (rest % 5 != 0) continue;
        const Int b2 = rest / 5;
        const Int b = boost::multiprecision::sqrt(b2);
        const bool solves = b >= 1 && b * b == b2;
        CHECK_FALSE(solves);
    }
}

TEST_CASE("invalid pairs are rejected with diagnostics") {
    CHECK_THROWS_AS((void)crs_construct(4, 1), InvalidPair);   // p not prime
    CHECK_THROWS_AS((void)crs_construct(5, 4), InvalidPair);   // d not squarefree
    CHECK_THROWS_AS((void)crs_construct(5, 0), InvalidPair);   // d < 1
    CHECK_THROWS_AS((void)crs_construct(7, 11), InvalidPair);  // −11 ≡ 3 not a residue mod 7
    CHECK_THROWS_AS((void)crs_construct(2, 3), InvalidPair);   // p = 2 requires d ≡ 7 (mod 8)
    CHECK_THROWS_AS((void)crs_construct(-3, 1), InvalidPair);  // negative p
}

TEST_CASE("residue condition boundary cases") {
    // −1 ≡ 4 (mod 5) is a square (2²), so (5,1) is valid; −1 ≡ 2 (mod 3) is
    // not, so (3,1) must be rejected.
    CHECK_NOTHROW((void)crs_construct(5, 1));
    CHECK_THROWS_AS((void)crs_construct(3, 1), InvalidPair);
    // d ≡ 0 cases are covered by d = p: −p ≡ 0 is a residue by convention.
    CHECK_NOTHROW((void)crs_construct(5, 5));
}

TEST_CASE("parity constraints on b for small twists") {
    // d = 3 forces b even; d = 1 forces b ≡ 0 (mod 4).
    const CrsAngle d3 = crs_construct(7, 3);
    CHECK(d3.b % 2 == 0);
    const CrsAngle d1 = crs_construct(5, 1);
    CHECK(d1.b % 4 == 0);
    const CrsAngle d1b = crs_construct(17, 1);
    CHECK(d1b.b % 4 == 0);
}

TEST_CASE("pure geodetic classification by rational squared sine") {
    // sin²γ = 4/9 is rational → pure geodetic.
    CHECK(is_pure_geodetic(GoldenNumber(Rational(5, 9), Rational(0))));
    // sin²β = 1 − cos²β with cos²β = (3τ+2)/(3τ+6): irrational in Q[τ].
    const GoldenNumber cos2_beta = GoldenNumber(2, 3) * inverse(GoldenNumber(6, 3));
    CHECK_FALSE(is_pure_geodetic(cos2_beta));
    // cos²α = 1/5 → sin²α = 4/5 rational.
    CHECK(is_pure_geodetic(GoldenNumber(Rational(1, 5), Rational(0))));
}

TEST_CASE("the two dihedral decompositions hold to high precision") {
    const CrsDecompositionReport rep = verify_decompositions();
    CHECK(rep.alpha_matches);
    CHECK(rep.gamma_matches);
    CHECK(rep.labels_distinct);
    CHECK(rep.ok());
    CHECK(rep.alpha_error < Real("1e-12"));
    CHECK(rep.gamma_error < Real("1e-12"));
    // α literally equals ⟨5⟩₁ and γ = π/2 − 2⟨3⟩₅, numerically.
    const auto& t = GoldenAngleTable::instance();
    const Real alpha = atan2(to_real(t.alpha().s), to_real(t.alpha().c));
    const Real gamma = atan2(to_real(t.gamma().s), to_real(t.gamma().c));
    CHECK(abs(alpha - crs_construct(5, 1).value) < Real("1e-30"));
    CHECK(abs(gamma - (real_pi() / 2 - 2 * crs_construct(3, 5).value)) < Real("1e-30"));
}

TEST_CASE("beta and delta are not pure geodetic, so the labels differ") {
    const auto& t = GoldenAngleTable::instance();
    auto sin_sq_in_golden = [](const CosSinPair& p) -> std::optional<GoldenNumber> {
        const TowerElement s2 = p.s * p.s;
        if (s2.is_golden()) return s2.w;
        return std::nullopt;
    };
    // sin²(β) and sin²(δ) do lie in Q[τ] but are irrational there.
    const auto sb = sin_sq_in_golden(t.beta());
    const auto sd = sin_sq_in_golden(t.delta());
    REQUIRE(sb.has_value());
    REQUIRE(sd.has_value());
    CHECK_FALSE(is_pure_geodetic(GoldenNumber(1) - *sb));
    CHECK_FALSE(is_pure_geodetic(GoldenNumber(1) - *sd));
    // While sin²(α), sin²(γ) are rational.
    const auto sa = sin_sq_in_golden(t.alpha());
    const auto sg = sin_sq_in_golden(t.gamma());
    REQUIRE(sa.has_value());
    REQUIRE(sg.has_value());
    CHECK(sa->b == 0);
    CHECK(sg->b == 0);
}

TEST_CASE("constructed values are stable across repeated calls") {
    const CrsAngle first = crs_construct(5, 1);
    const CrsAngle second = crs_construct(5, 1);
    CHECK(first.s == second.s);
    CHECK(first.a == second.a);
    CHECK(first.b == second.b);
    CHECK(first.value == second.value);
}
