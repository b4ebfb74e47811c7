#include "goldentiles/golden.hpp"

#include <stdexcept>
#include <vector>

namespace goldentiles {

GoldenNumber inverse(const GoldenNumber& x) {
    Rational n = golden_norm(x);
    if (n == 0) {
        if (x.is_zero()) throw std::domain_error("division by zero in Q[tau]");
        // norm vanishes only at 0 in a field; unreachable, kept as a guard
        throw std::domain_error("zero norm for nonzero element");
    }
    GoldenNumber c = conjugate(x);
    return {c.a / n, c.b / n};
}

GoldenNumber golden_pow(GoldenNumber base, unsigned e) {
    GoldenNumber acc(1);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

int sign(const GoldenNumber& x) {
    // a + b·τ = (2a + b)/2 + (b/2)·√5 ; compare the two halves exactly.
    Rational A = 2 * x.a + x.b; // times 2, sign-preserving
    const Rational& B = x.b;
    int sA = A == 0 ? 0 : (A > 0 ? 1 : -1);
    int sB = B == 0 ? 0 : (B > 0 ? 1 : -1);
    if (sA == sB) return sA;
    if (sA == 0) return sB;
    if (sB == 0) return sA;
    // opposite signs: sign decided by |A| vs |B|·√5, i.e. A² vs 5B²
    Rational lhs = A * A, rhs = 5 * B * B;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sA : sB;
}

std::optional<GoldenNumber> is_square_in_qtau(const GoldenNumber& x) {
    if (x.is_zero()) return GoldenNumber(0);
    if (sign(x) < 0) return std::nullopt;
    const Rational& q = x.a;
    const Rational& r = x.b;

    std::vector<GoldenNumber> candidates;
    auto consider = [&](const GoldenNumber& y) {
        if (y * y == x) candidates.push_back(y);
    };

    // y = u (rational): needs r == 0 and q a rational square
    if (r == 0) {
        if (auto u = rational_sqrt(q)) consider(GoldenNumber(*u));
    }
    // y = u + v·τ with v != 0: u = (r − v²)/(2v) and v² = w solves
    //   5w² − 2(r + 2q)w + r² = 0
    Rational s = r + 2 * q;
    Rational disc = s * s - 5 * r * r;
    if (auto sq = rational_sqrt(disc)) {
        for (const Rational& w : {(s + *sq) / 5, (s - *sq) / 5}) {
            if (w <= 0) continue;
            if (auto v = rational_sqrt(w)) {
                Rational u = (r - w) / (2 * *v);
                consider(GoldenNumber(u, *v));
                consider(GoldenNumber(-u, -*v));
            }
        }
    }
    for (const GoldenNumber& y : candidates)
        if (sign(y) >= 0) return y;
    return std::nullopt;
}

std::string golden_str(const GoldenNumber& x) {
    auto tau_part = [](const Rational& b) -> std::string {
        if (b == 1) return "τ";
        if (b == -1) return "-τ";
        return rational_str(b) + "·τ";
    };
    if (x.b == 0) return rational_str(x.a);
    if (x.a == 0) return tau_part(x.b);
    std::string t = tau_part(x.b > 0 ? x.b : -x.b);
    return rational_str(x.a) + (x.b > 0 ? "+" : "-") + t;
}

} // namespace goldentiles
