#include "goldentiles/inflation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "goldentiles/constants.hpp"
#include "goldentiles/errors.hpp"

namespace goldentiles {

SplitColumns galois_split(const std::vector<GoldenNumber>& vec, const GoldenNumber& lambda_pow) {
    SplitColumns out;
    for (const auto& v : vec) {
        auto [a, b] = v.tau_components();
        out.in_one.push_back(a);
        out.in_tau.push_back(b);
        auto [oa, ob] = (lambda_pow * v).tau_components();
        out.out_one.push_back(oa);
        out.out_tau.push_back(ob);
    }
    return out;
}

std::pair<RationalMatrix, RationalMatrix> assemble_constraints(const InvariantSystem& sys) {
    size_t n = sys.n;
    size_t cols = 2 * (1 + sys.dehn_vecs.size());
    RationalMatrix x(n, cols), y(n, cols);
    GoldenNumber lambda3 = sys.lambda * sys.lambda * sys.lambda;

    auto put = [&](size_t col, const SplitColumns& s) {
        for (size_t i = 0; i < n; ++i) {
            x(i, col) = s.in_tau[i];
            x(i, col + 1) = s.in_one[i];
            y(i, col) = s.out_tau[i];
            y(i, col + 1) = s.out_one[i];
        }
    };

    if (sys.volume_vec.size() != n) throw std::invalid_argument("volume vector has wrong size");
    put(0, galois_split(sys.volume_vec, lambda3));
    size_t col = 2;
    for (const auto& d : sys.dehn_vecs) {
        if (d.size() != n) throw std::invalid_argument("Dehn vector has wrong size");
        put(col, galois_split(d, sys.lambda));
        col += 2;
    }
    return {x, y};
}

RationalMatrix reconstruct_matrix(const InvariantSystem& sys) {
    if (!sys.rationality_hypothesis)
        throw std::invalid_argument(
            "reconstruction requires the explicit hypothesis that the matrix is rational; "
            "the τ⁰/τ¹ splitting is not valid otherwise");
    size_t cols = 2 * (1 + sys.dehn_vecs.size());
    if (cols < sys.n)
        throw UnderDetermined("only " + std::to_string(cols) + " constraint columns for " +
                              std::to_string(sys.n) + " unknowns per row");
    if (cols > sys.n)
        throw std::invalid_argument("constraint matrix is not square (" + std::to_string(cols) +
                                    " columns for n = " + std::to_string(sys.n) + ")");
    auto [x, y] = assemble_constraints(sys);
    if (det(x) == Rational(0))
        throw SingularSystem("constraint matrix X is singular; the system does not determine M");
    return solve_exact(x, y);
}

RationalMatrix matrix_power(const RationalMatrix& m, unsigned k) { return mat_pow(m, k); }

bool matrix_is_integer(const RationalMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) return false;
    return true;
}

std::vector<std::pair<unsigned, bool>> integrality_spectrum(const RationalMatrix& m,
                                                            unsigned kmax) {
    std::vector<std::pair<unsigned, bool>> out;
    RationalMatrix p = RationalMatrix::identity(m.rows());
    for (unsigned k = 1; k <= kmax; ++k) {
        p = p * m;
        out.emplace_back(k, matrix_is_integer(p));
    }
    return out;
}

Int fibonacci_number(unsigned n) {
    Int a = 0, b = 1;
    for (unsigned i = 0; i < n; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

PowerCoefficients power_coefficients(unsigned n) {
    if (n == 0) throw std::invalid_argument("power coefficients defined for n >= 1");
    auto a_of = [](unsigned m) -> Int {
        // (f_{3(m−1)}/2 − f_{m−1}) / 3; exact divisibility holds for all m
        Int num = fibonacci_number(3 * (m - 1)) / 2 - fibonacci_number(m - 1);
        return num / 3;
    };
    PowerCoefficients pc;
    pc.n = n;
    pc.a = a_of(n);
    Int a_next = a_of(n + 1);
    pc.b = a_next - 5 * pc.a;
    pc.c = -a_next + 3 * pc.a + fibonacci_number(n);
    pc.d = -a_next + 4 * pc.a + fibonacci_number(n - 1);
    return pc;
}

bool fibonacci_power_check(const RationalMatrix& m, unsigned n) {
    if (!char_poly_vanishes(m)) return false;
    PowerCoefficients pc = power_coefficients(n);
    RationalMatrix lhs = matrix_power(m, n);
    RationalMatrix rhs = Rational(pc.a) * matrix_power(m, 3) + Rational(pc.b) * matrix_power(m, 2) +
                         Rational(pc.c) * m + Rational(pc.d) * RationalMatrix::identity(m.rows());
    return lhs == rhs;
}

GoldenNumber poly_eval_golden(const std::array<long, 5>& coeffs, const GoldenNumber& x) {
    GoldenNumber acc;
    for (long c : coeffs) acc = acc * x + GoldenNumber(c);
    return acc;
}

TowerElement poly_eval_tower(const std::array<long, 5>& coeffs, const TowerElement& x) {
    TowerElement acc;
    for (long c : coeffs) acc = acc * x + TowerElement::of(GoldenNumber(c));
    return acc;
}

RationalMatrix poly_eval_matrix(const std::array<long, 5>& coeffs, const RationalMatrix& m) {
    RationalMatrix acc(m.rows(), m.cols());
    for (long c : coeffs) acc = acc * m + Rational(c) * RationalMatrix::identity(m.rows());
    return acc;
}

bool char_poly_vanishes(const RationalMatrix& m) {
    RationalMatrix z = poly_eval_matrix(constants::char_poly_coeffs(), m);
    return z == RationalMatrix(m.rows(), m.cols());
}

bool eisenstein_criterion(const std::array<long, 5>& coeffs, long p) {
    if (coeffs[0] % p == 0) return false;
    for (size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] % p != 0) return false;
    return coeffs.back() % (p * p) != 0;
}

CoveringCertificate covering_certificate(unsigned k) {
    if (k == 0) throw std::invalid_argument("covering certificate defined for k >= 1");
    CoveringCertificate cert;
    cert.k = k;
    Int prev = 1, cur = 3;
    cert.psi.push_back(prev);
    for (unsigned i = 1; i < k; ++i) {
        cert.psi.push_back(cur);
        Int next = 3 * cur - prev;
        prev = cur;
        cur = next;
    }
    for (const Int& p : cert.psi)
        if (p <= 0) throw std::logic_error("functional values must stay positive");
    cert.conclusion = Int(-3) * 1 + 3; // −3ψ₀ + ψ₁
    cert.note =
        k == 1 ? "a solution would make the irrational number σ equal the integer α₀"
               : "a solution would force 0 = −3ψ₀+ψ₁ = Σ α_{k−1−i}ψ_i ≥ α₀·ψ_{k−1} > 0";
    return cert;
}

namespace {

// exact sign of a + b·τ over machine integers (|a|,|b| < 2^31 here)
int golden_sign_ll(long long a, long long b) {
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return 1;
    if (a <= 0 && b <= 0) return -1;
    long long A = 2 * a + b; // sign(a+bτ) = sign(A + B√5)/2 with B = b
    long long lhs = A * A, rhs = 5 * b * b;
    int s = lhs > rhs ? 1 : lhs < rhs ? -1 : 0;
    return A > 0 ? s : -s;
}

} // namespace

BruteForceResult covering_brute_force(unsigned k) {
    if (k == 0) throw std::invalid_argument("covering search defined for k >= 1");
    if (k > 8) throw SearchTooLarge("exact search bounded at k <= 8");
    BruteForceResult res;

    // σ^i = τ^{2i} expanded in Z[τ]
    std::vector<std::pair<long long, long long>> pw(k + 1);
    pw[0] = {1, 0};
    for (unsigned i = 1; i <= k; ++i) {
        auto [a, b] = pw[i - 1];
        // multiply by σ = 1 + τ:  (a+bτ)(1+τ) = (a+b) + (a+2b)τ
        pw[i] = {a + b, a + 2 * b};
    }

    if (k == 1) {
        // σ = α₀ has no integer solution: the τ-component of σ is 1 ≠ 0
        res.nodes = 1;
        return res;
    }

    const double phi = 1.6180339887498949;
    std::vector<long long> alpha(k, 0);
    bool found = false;

    // choose α_i for i = k−1 .. 2; remaining two levels are forced:
    // r = α₁σ + α₀ ⇒ α₁ = r_τ and α₀ = r_1 − r_τ
    std::function<bool(unsigned, long long, long long)> rec = [&](unsigned i, long long ra,
                                                                  long long rb) -> bool {
        ++res.nodes;
        if (golden_sign_ll(ra, rb) < 0) return false;
        if (i == 1) {
            long long a1 = rb, a0 = ra - rb;
            if (a1 >= 0 && a0 >= 1) {
                alpha[1] = a1;
                alpha[0] = a0;
                return true;
            }
            return false;
        }
        auto [pa, pb] = pw[i];
        double num = static_cast<double>(ra) + static_cast<double>(rb) * phi;
        double den = static_cast<double>(pa) + static_cast<double>(pb) * phi;
        long long c = static_cast<long long>(num / den + 1e-9);
        // exact fix-up of the numeric bound
        while (c > 0 && golden_sign_ll(ra - c * pa, rb - c * pb) < 0) --c;
        while (golden_sign_ll(ra - (c + 1) * pa, rb - (c + 1) * pb) >= 0) ++c;
        for (long long v = c; v >= 0; --v) {
            alpha[i] = v;
            if (rec(i - 1, ra - v * pa, rb - v * pb)) return true;
        }
        return false;
    };

    found = rec(k - 1, pw[k].first, pw[k].second);
    if (found) res.solution = alpha;
    return res;
}

AreaCoveringDecision area_covering_decide(const std::vector<long long>& p1,
                                          const std::vector<long long>& p2,
                                          const std::vector<long long>& p3) {
    for (const auto* p : {&p1, &p2, &p3})
        for (long long c : *p)
            if (c < 0) throw std::invalid_argument("coefficients must be nonnegative integers");
    if (!p1.empty() && p1[0] != 0)
        throw std::invalid_argument("the similarity polynomial must have no constant term");

    GoldenNumber tau_inv_sq(2, -1); // τ⁻² = 2 − τ
    auto eval = [&](const std::vector<long long>& p) {
        GoldenNumber acc, x(1);
        for (long long c : p) {
            acc = acc + GoldenNumber(c) * x;
            x = x * tau_inv_sq;
        }
        return acc;
    };

    AreaCoveringDecision d{AreaCoveringStatus::holds, "", eval(p1)};
    bool p2_zero = std::all_of(p2.begin(), p2.end(), [](long long c) { return c == 0; });
    bool p3_zero = std::all_of(p3.begin(), p3.end(), [](long long c) { return c == 0; });
    if (!p2_zero || !p3_zero) {
        d.status = AreaCoveringStatus::mixed_triangles_present;
        d.reason =
            "the ρ-component of the area equation is nonzero: isoceles pieces cannot appear "
            "(their areas are not multiples of the equilateral area in the tower)";
        return d;
    }
    if (!(d.p1_value == GoldenNumber(1))) {
        d.status = AreaCoveringStatus::scale_equation_unsatisfied;
        d.reason = "p₁(τ⁻²) = " + golden_str(d.p1_value) +
                   " ≠ 1; equivalent to the impossible σ-power equation";
        return d;
    }
    d.reason = "all conditions met";
    return d;
}

} // namespace goldentiles
