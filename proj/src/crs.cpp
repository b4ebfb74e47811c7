#include "goldentiles/crs.hpp"

#include <boost/multiprecision/gmp.hpp>

#include "goldentiles/angles.hpp"

namespace goldentiles {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long f = 3; f <= n / f; f += 2)
        if (n % f == 0) return false;
    return true;
}

bool is_squarefree(long n) {
    if (n < 1) return false;
    for (long f = 2; f <= n / f; ++f) {
        if (n % (f * f) == 0) return false;
        while (n % f == 0) n /= f;
    }
    return true;
}

// Euler's criterion for odd p; 0 counts as a residue.
bool is_quadratic_residue(long value, long p) {
    const long t = ((value % p) + p) % p;
    if (t == 0) return true;
    return boost::multiprecision::powm(Int(t), Int((p - 1) / 2), Int(p)) == 1;
}

Real angle_value(long p, long s, const Int& a) {
    const Real denom = 2 * sqrt(pow(Real(p), static_cast<int>(s)));
    return acos(to_real(Rational(a)) / denom) / s;
}

} // namespace

CrsAngle crs_construct(long p, long d) {
    if (!is_prime(p)) throw InvalidPair("p must be prime");
    if (d < 1 || !is_squarefree(d)) throw InvalidPair("d must be positive and squarefree");
    if (p == 2) {
        if (d % 8 != 7) throw InvalidPair("for p = 2 the twist must satisfy d = 7 (mod 8)");
    } else if (!is_quadratic_residue(-d, p)) {
        throw InvalidPair("-d must be a quadratic residue mod p");
    }

    constexpr long kMaxExponent = 20;
    Int target = 4 * Int(p);  // 4·p^s, starting at s = 1
    for (long s = 1; s <= kMaxExponent; ++s, target *= p) {
        for (Int a = 0; a * a <= target; ++a) {
            const Int rest = target - a * a;
            if (rest % d != 0) continue;
            Int b;
            if (!is_perfect_square(rest / d, &b) || b < 1) continue;
            if (d == 3 && b % 2 != 0) continue;
            if (d == 1 && b % 4 != 0) continue;
            return CrsAngle{p, d, s, a, b, angle_value(p, s, a)};
        }
    }
    throw InvalidPair("no admissible solution with s <= 20");
}

bool is_pure_geodetic(const GoldenNumber& cos_squared) {
    return (GoldenNumber(1) - cos_squared).is_rational();
}

bool CrsDecompositionReport::ok() const {
    return alpha_matches && gamma_matches && labels_distinct;
}

CrsDecompositionReport verify_decompositions() {
    CrsDecompositionReport rep;
    rep.five_one = crs_construct(5, 1);
    rep.three_five = crs_construct(3, 5);

    const auto& table = GoldenAngleTable::instance();
    const Real alpha = atan2(to_real(table.alpha().s), to_real(table.alpha().c));
    const Real gamma = atan2(to_real(table.gamma().s), to_real(table.gamma().c));

    rep.alpha_error = abs(alpha - rep.five_one.value);
    rep.gamma_error = abs(gamma - (real_pi() / 2 - 2 * rep.three_five.value));
    const Real tol("1e-12");
    rep.alpha_matches = rep.alpha_error < tol;
    rep.gamma_matches = rep.gamma_error < tol;
    rep.labels_distinct = rep.five_one.p != rep.three_five.p ||
                          rep.five_one.d != rep.three_five.d;
    return rep;
}

} // namespace goldentiles
