#pragma once

#include "goldentiles/errors.hpp"
#include "goldentiles/golden.hpp"
#include "goldentiles/numeric.hpp"
#include "goldentiles/rational.hpp"

namespace goldentiles {

/// A basis angle (1/s)·arccos(a / (2·p^{s/2})) built from the minimal
/// solution of 4·p^s = a² + d·b² in integers.
struct CrsAngle {
    long p = 0;  // prime
    long d = 0;  // positive squarefree twist
    long s = 0;  // minimal admissible exponent
    Int a;       // canonical solution: smallest admissible a ≥ 0
    Int b;       // b ≥ 1
    Real value;  // the angle in radians, at the working precision
};

/// Construct ⟨p⟩_d. Preconditions (InvalidPair otherwise): p prime, d
/// positive and squarefree, −d a quadratic residue mod p (for p = 2 the rule
/// is d ≡ 7 mod 8). Admissible solutions additionally require b even when
/// d = 3 and b ≡ 0 (mod 4) when d = 1. The minimal-s search is capped at
/// s ≤ 20 (InvalidPair beyond).
CrsAngle crs_construct(long p, long d);

/// True iff an angle with the given exact squared cosine is pure geodetic,
/// i.e. its squared sine is rational: the τ-component of 1 − cos² vanishes.
bool is_pure_geodetic(const GoldenNumber& cos_squared);

/// Numeric confirmation, at the current working precision, of the two basis
/// decompositions behind the independence argument for the tetrahedral
/// dihedral angles, together with the distinctness of the basis labels.
struct CrsDecompositionReport {
    CrsAngle five_one;           // ⟨5⟩₁
    CrsAngle three_five;         // ⟨3⟩₅
    Real alpha_error;            // |α − ⟨5⟩₁|
    Real gamma_error;            // |γ − (π/2 − 2·⟨3⟩₅)|
    bool alpha_matches = false;  // alpha_error < 1e−12
    bool gamma_matches = false;  // gamma_error < 1e−12
    bool labels_distinct = false;
    bool ok() const;
};
CrsDecompositionReport verify_decompositions();

} // namespace goldentiles
