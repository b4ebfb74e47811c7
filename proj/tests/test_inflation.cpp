// Property tests for the inflation layer: Galois splitting, matrix
// reconstruction from invariants, exact powers, Fibonacci closed forms, and
// the covering-equation impossibility results.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <vector>

#include "goldentiles/constants.hpp"
#include "goldentiles/errors.hpp"
#include "goldentiles/inflation.hpp"
#include "test_util.hpp"

using namespace goldentiles;
using namespace goldentiles::testutil;
namespace C = constants;

namespace {

InvariantSystem golden_system() {
    InvariantSystem sys;
    sys.n = 6;
    sys.volume_vec = C::twelve_volumes();
    std::vector<GoldenNumber> beta, delta;
    for (const auto& d : C::dehn_table()) {
        beta.push_back(d.beta);
        delta.push_back(d.delta);
    }
    sys.dehn_vecs = {beta, delta};
    sys.lambda = GoldenNumber::tau();
    sys.rationality_hypothesis = true;
    return sys;
}

InvariantSystem tile_system() {
    InvariantSystem sys;
    sys.n = 4;
    sys.volume_vec = C::twelve_volumes_tiles();
    sys.dehn_vecs = {C::tile_dehn_factors()};
    sys.lambda = GoldenNumber::tau();
    sys.rationality_hypothesis = true;
    return sys;
}

} // namespace

TEST_CASE("galois splitting separates the tau and unit coordinates (500 random)") {
    auto rng = make_rng(31);
    for (int i = 0; i < 500; ++i) {
        std::vector<GoldenNumber> vec;
        for (int k = 0; k < 6; ++k) vec.push_back(random_golden(rng));
        const GoldenNumber lam = random_golden(rng);
        const SplitColumns s = galois_split(vec, lam);
        REQUIRE(s.in_tau.size() == vec.size());
        for (size_t k = 0; k < vec.size(); ++k) {
            REQUIRE(GoldenNumber(s.in_one[k], s.in_tau[k]) == vec[k]);
            REQUIRE(GoldenNumber(s.out_one[k], s.out_tau[k]) == lam * vec[k]);
        }
    }
}

TEST_CASE("constraint assembly reproduces the frozen constraint matrices") {
    const auto [x, y] = assemble_constraints(golden_system());
    CHECK(x == C::x_gt());
    CHECK(y == C::y_gt());
    const auto [xm, ym] = assemble_constraints(tile_system());
    CHECK(xm == C::x_ms());
    CHECK(ym == C::y_ms());
}

TEST_CASE("reconstruction returns the frozen inflation matrices exactly") {
    CHECK(reconstruct_matrix(golden_system()) == C::m_gt());
    CHECK(reconstruct_matrix(tile_system()) == C::m_ms());
}

TEST_CASE("reconstructed matrices satisfy their eigen-relations over the golden field") {
    for (const InvariantSystem& sys : {golden_system(), tile_system()}) {
        const GoldenMatrix m = to_golden(reconstruct_matrix(sys));
        const GoldenNumber tau3 = golden_pow(GoldenNumber::tau(), 3);
        auto check_vec = [&](const std::vector<GoldenNumber>& v, const GoldenNumber& factor) {
            for (size_t i = 0; i < v.size(); ++i) {
                GoldenNumber acc;
                for (size_t j = 0; j < v.size(); ++j) acc = acc + m(i, j) * v[j];
                REQUIRE(acc == factor * v[i]);
            }
        };
        check_vec(sys.volume_vec, tau3);
        for (const auto& d : sys.dehn_vecs) check_vec(d, sys.lambda);
    }
}

TEST_CASE("reconstruction requires enough constraints") {
    InvariantSystem sys = golden_system();
    sys.dehn_vecs.clear(); // only two columns remain for six unknown columns
    CHECK_THROWS_AS((void)reconstruct_matrix(sys), UnderDetermined);
}

TEST_CASE("reconstruction refuses to run without the rationality hypothesis") {
    InvariantSystem sys = golden_system();
    sys.rationality_hypothesis = false;
    CHECK_THROWS_AS((void)reconstruct_matrix(sys), std::invalid_argument);
}

TEST_CASE("a degenerate invariant system is reported as singular") {
    InvariantSystem sys = golden_system();
    // Replace every Dehn vector by a copy of the volume vector: the
    // constraint matrix keeps six columns but drops rank.
    sys.dehn_vecs = {sys.volume_vec, sys.volume_vec};
    CHECK_THROWS_AS((void)reconstruct_matrix(sys), SingularSystem);
}

TEST_CASE("matrix powers match the frozen squares and cubes") {
    CHECK(matrix_power(C::m_gt(), 0) == RationalMatrix::identity(6));
    CHECK(matrix_power(C::m_gt(), 1) == C::m_gt());
    CHECK(matrix_power(C::m_gt(), 2) == C::m_gt_squared());
    CHECK(matrix_power(C::m_gt(), 3) == C::m_gt_cubed());
    CHECK(matrix_power(C::m_gt(), 5) == matrix_power(C::m_gt(), 2) * matrix_power(C::m_gt(), 3));
}

TEST_CASE("integrality spectrum is exactly the multiples of three up to 30") {
    CHECK_FALSE(matrix_is_integer(C::m_gt()));
    CHECK_FALSE(matrix_is_integer(C::m_gt_squared()));
    CHECK(matrix_is_integer(C::m_gt_cubed()));
    const auto spec = integrality_spectrum(C::m_gt(), 30);
    REQUIRE(spec.size() == 30);
    for (const auto& [k, is_int] : spec) CHECK(is_int == (k % 3 == 0));
}

TEST_CASE("fibonacci numbers agree with the classical recurrence and identities") {
    CHECK(fibonacci_number(0) == 0);
    CHECK(fibonacci_number(1) == 1);
    CHECK(fibonacci_number(10) == 55);
    CHECK(fibonacci_number(20) == 6765);
    for (unsigned n = 2; n <= 60; ++n)
        CHECK(fibonacci_number(n) == fibonacci_number(n - 1) + fibonacci_number(n - 2));
    // Cassini: f_{n+1}·f_{n−1} − f_n² = (−1)^n.
    for (unsigned n = 1; n <= 60; ++n) {
        const Int lhs = fibonacci_number(n + 1) * fibonacci_number(n - 1) -
                        fibonacci_number(n) * fibonacci_number(n);
        CHECK(lhs == ((n % 2 == 0) ? Int(1) : Int(-1)));
    }
}

TEST_CASE("power coefficients satisfy the matrix recurrence for n up to 60") {
    // M^{n+1} = M·M^n combined with χ(M)=0 forces
    //   a_{n+1} = 5a_n + b_n, b_{n+1} = −2a_n + c_n,
    //   c_{n+1} = 5a_n + d_n ... with the signs of x⁴ = 5x³ − 2x² − 5x − 1.
    for (unsigned n = 1; n <= 60; ++n) {
        const PowerCoefficients p = power_coefficients(n);
        const PowerCoefficients q = power_coefficients(n + 1);
        CHECK(q.a == 5 * p.a + p.b);
        CHECK(q.b == -2 * p.a + p.c);
        CHECK(q.c == -5 * p.a + p.d);
        CHECK(q.d == -1 * p.a);
        CHECK(p.n == n);
    }
    // Base case: M¹ = 0·M³ + 0·M² + 1·M + 0.
    const PowerCoefficients one = power_coefficients(1);
    CHECK(one.a == 0);
    CHECK(one.b == 0);
    CHECK(one.c == 1);
    CHECK(one.d == 0);
}

TEST_CASE("the fibonacci closed form verifies against exact powers for n up to 15") {
    for (unsigned n = 1; n <= 15; ++n) CHECK(fibonacci_power_check(C::m_gt(), n));
}

TEST_CASE("characteristic polynomial vanishes on the matrix and its roots") {
    CHECK(char_poly_vanishes(C::m_gt()));
    CHECK_FALSE(char_poly_vanishes(RationalMatrix::identity(6)));
    GoldenNumber sum, prod(1);
    for (const auto& r : C::char_poly_roots()) {
        CHECK(poly_eval_golden(C::char_poly_coeffs(), r).is_zero());
        sum = sum + r;
        prod = prod * r;
    }
    CHECK(sum == GoldenNumber(5));  // trace coefficient of x⁴−5x³+2x²+5x+1
    CHECK(prod == GoldenNumber(1)); // constant coefficient (even degree)
}

TEST_CASE("eisenstein criterion separates the two quartics") {
    CHECK(eisenstein_criterion(C::rho_min_poly_coeffs(), 5));   // x⁴−5x²+5
    CHECK_FALSE(eisenstein_criterion(C::rho_min_poly_coeffs(), 3));
    CHECK_FALSE(eisenstein_criterion(C::char_poly_coeffs(), 5)); // constant term 1
}

TEST_CASE("the quartic of rho vanishes on all four tower roots") {
    for (const auto& r : C::rho_min_poly_roots())
        CHECK(poly_eval_tower(C::rho_min_poly_coeffs(), r).is_zero());
}

TEST_CASE("covering certificates are valid for k up to 100") {
    for (unsigned k = 1; k <= 100; ++k) {
        const CoveringCertificate cert = covering_certificate(k);
        CHECK(cert.k == k);
        CHECK(cert.conclusion == 0);
        REQUIRE(cert.psi.size() == k);
        // ψ-sequence: ψ₀ = 1, ψ₁ = 3, ψ_{n+1} = 3ψ_n − ψ_{n−1} = f_{2n+2}.
        for (size_t i = 0; i < cert.psi.size(); ++i)
            CHECK(cert.psi[i] == fibonacci_number(2 * unsigned(i) + 2));
        CHECK_FALSE(cert.note.empty());
    }
}

TEST_CASE("exhaustive search refutes the covering equation for k = 1..8") {
    const std::array<unsigned long long, 8> frozen_nodes{1,    1,     4,     18,
                                                         131, 1841, 55833, 3716830};
    for (unsigned k = 1; k <= 8; ++k) {
        const BruteForceResult r = covering_brute_force(k);
        CHECK_FALSE(r.solution.has_value());
        CHECK(r.nodes == frozen_nodes[k - 1]);
    }
}

TEST_CASE("the exhaustive search refuses k beyond its exact budget") {
    CHECK_THROWS_AS((void)covering_brute_force(9), SearchTooLarge);
}

TEST_CASE("area covering: mixed triangles are rejected") {
    const auto d1 = area_covering_decide({}, {1}, {});
    CHECK(d1.status == AreaCoveringStatus::mixed_triangles_present);
    const auto d2 = area_covering_decide({0, 2}, {}, {3});
    CHECK(d2.status == AreaCoveringStatus::mixed_triangles_present);
}

TEST_CASE("area covering: the pure scale equation is exactly unsatisfiable") {
    const auto d = area_covering_decide({0, 1}, {}, {});
    CHECK(d.status == AreaCoveringStatus::scale_equation_unsatisfied);
    CHECK(d.p1_value == GoldenNumber(2, -1)); // τ⁻² = 2−τ ≠ 1
    // No nonnegative combination of τ⁻², τ⁻⁴, τ⁻⁶ reaches 1 either.
    for (long a1 = 0; a1 <= 3; ++a1)
        for (long a2 = 0; a2 <= 3; ++a2)
            for (long a3 = 0; a3 <= 3; ++a3) {
                if (a1 + a2 + a3 == 0) continue;
                const auto r = area_covering_decide({0, a1, a2, a3}, {}, {});
                CHECK(r.status == AreaCoveringStatus::scale_equation_unsatisfied);
            }
}

TEST_CASE("area covering: malformed polynomials are rejected") {
    CHECK_THROWS_AS((void)area_covering_decide({1}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS((void)area_covering_decide({0, -1}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS((void)area_covering_decide({}, {-2}, {}), std::invalid_argument);
}
