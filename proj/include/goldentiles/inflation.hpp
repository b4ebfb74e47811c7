#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goldentiles/matrix.hpp"
#include "goldentiles/tower.hpp"

namespace goldentiles {

/// τ⁰/τ¹ rational constraint columns extracted from one Q[τ]-valued
/// eigen-relation M·vec = λpow·vec of a matrix assumed rational: the input
/// columns come from vec, the output columns from λpow·vec.
struct SplitColumns {
    std::vector<Rational> in_tau, in_one;
    std::vector<Rational> out_tau, out_one;
};

SplitColumns galois_split(const std::vector<GoldenNumber>& vec, const GoldenNumber& lambda_pow);

/// Eigen-data of an inflation: volumes scale by λ³ (dimension 3), Dehn
/// components by λ (dimension 1). The Galois splitting that doubles each
/// constraint is only valid if the matrix is assumed rational, so that
/// assumption is an explicit flag.
struct InvariantSystem {
    size_t n = 0;
    std::vector<GoldenNumber> volume_vec;
    std::vector<std::vector<GoldenNumber>> dehn_vecs;
    GoldenNumber lambda;
    bool rationality_hypothesis = false;
};

/// Constraint pair (X, Y) with the unknown matrix satisfying M·X = Y.
/// Column order: volume τ¹, volume τ⁰, then per Dehn vector τ¹, τ⁰.
std::pair<RationalMatrix, RationalMatrix> assemble_constraints(const InvariantSystem& sys);

/// The unique rational matrix M with M·X = Y. Throws UnderDetermined when
/// there are fewer than n constraint columns, SingularSystem when X is
/// square but singular, and std::invalid_argument when the rationality
/// hypothesis is not asserted (the splitting is meaningless without it).
RationalMatrix reconstruct_matrix(const InvariantSystem& sys);

/// Exact k-th power by repeated multiplication.
RationalMatrix matrix_power(const RationalMatrix& m, unsigned k);

bool matrix_is_integer(const RationalMatrix& m);

/// For k = 1..kmax, whether M^k has all-integer entries.
std::vector<std::pair<unsigned, bool>> integrality_spectrum(const RationalMatrix& m, unsigned kmax);

/// Fibonacci numbers, f(0)=0, f(1)=1 (exact big integers).
Int fibonacci_number(unsigned n);

/// Coefficients expressing the n-th power of the 6×6 inflation matrix in its
/// minimal polynomial basis: M^n = a·M³ + b·M² + c·M + d. The aₙ follow
/// (f_{3(n−1)}/2 − f_{n−1})/3; b, c, d are forced by the recurrence
/// x⁴ = 5x³ − 2x² − 5x − 1.
struct PowerCoefficients {
    unsigned n = 0;
    Int a, b, c, d;
};

PowerCoefficients power_coefficients(unsigned n);

/// Verify M^n = aₙM³ + bₙM² + cₙM + dₙ·I and χ(M) = 0 exactly.
bool fibonacci_power_check(const RationalMatrix& m, unsigned n);

/// Evaluate an integer polynomial (degree-descending coefficients).
GoldenNumber poly_eval_golden(const std::array<long, 5>& coeffs, const GoldenNumber& x);
TowerElement poly_eval_tower(const std::array<long, 5>& coeffs, const TowerElement& x);
RationalMatrix poly_eval_matrix(const std::array<long, 5>& coeffs, const RationalMatrix& m);

/// χ(M) = 0 for χ(x) = x⁴ − 5x³ + 2x² + 5x + 1.
bool char_poly_vanishes(const RationalMatrix& m);

/// Eisenstein irreducibility criterion at prime p (degree-descending
/// integer coefficients).
bool eisenstein_criterion(const std::array<long, 5>& coeffs, long p);

/// Impossibility certificate for σ^k = Σ αᵢσ^i (σ = τ², nonneg integer αᵢ,
/// α₀ ≥ 1): the functional with values ψ₀=1, ψ₁=3, ψ_{n+1}=3ψ_n−ψ_{n−1}
/// annihilates every candidate equation term-by-term (its value is
/// −3ψ₀+ψ₁ = 0) yet must be ≥ α₀·ψ_{k−1} > 0 on a solution.
struct CoveringCertificate {
    unsigned k = 0;
    std::vector<Int> psi; // ψ₀ .. ψ_{k−1}
    Int conclusion;       // −3ψ₀ + ψ₁ = 0
    std::string note;
};

CoveringCertificate covering_certificate(unsigned k);

/// Independent oracle: exhaustive exact search for σ^k = Σ αᵢσ^i over
/// nonneg integers with α₀ ≥ 1, remainders tracked exactly in Z[τ].
/// Throws SearchTooLarge for k > 8.
struct BruteForceResult {
    std::optional<std::vector<long long>> solution; // α₀ .. α_{k−1}
    unsigned long long nodes = 0;
};

BruteForceResult covering_brute_force(unsigned k);

/// Decision on the face-covering equation
///   A_unit = p₁(τ⁻²)·A_unit + p₂(τ⁻²)·A_long + p₃(τ⁻²)·A_short
/// for polynomials with nonnegative integer coefficients (p₁ without
/// constant term). Splitting off the √3-free part forces p₂ = p₃ = 0, and
/// the remaining scale equation p₁(τ⁻²) = 1 is decided exactly in Q[τ].
enum class AreaCoveringStatus { holds, mixed_triangles_present, scale_equation_unsatisfied };

struct AreaCoveringDecision {
    AreaCoveringStatus status;
    std::string reason;
    GoldenNumber p1_value; // exact p₁(τ⁻²)
};

/// Coefficient lists are ascending (index i ↔ power i). Preconditions
/// (nonnegative coefficients; p1[0] absent or zero) are enforced with
/// std::invalid_argument.
AreaCoveringDecision area_covering_decide(const std::vector<long long>& p1,
                                          const std::vector<long long>& p2,
                                          const std::vector<long long>& p3);

} // namespace goldentiles
