#pragma once

#include <array>
#include <string>
#include <vector>

#include "goldentiles/angles.hpp"
#include "goldentiles/matrix.hpp"

namespace goldentiles::constants {

/// Name order used everywhere for the six golden tetrahedra.
const std::array<std::string, 6>& tetrahedron_names();
/// The four composite tiles, in the order (z, h, s, a).
const std::array<std::string, 4>& tile_names();
/// Five-tile basis ordering used by the printed 5×5 matrix.
const std::array<std::string, 5>& five_tile_names();
/// Colored 8-tile ordering (A*, B*, C*ᵇ, C*ʳ, D*, F*, G*ᵇ, G*ʳ).
const std::array<std::string, 8>& colored_names();

/// 12 × volume of each golden tetrahedron, name order: {2τ+1, 1, τ+1, τ, τ+1, τ}.
const std::vector<GoldenNumber>& twelve_volumes();
/// Dehn invariants of the six golden tetrahedra, name order.
const std::vector<DehnValue>& dehn_table();

/// Canonical {1,τ}-edge-bit vectors (order e01,e02,e03,e12,e13,e23; 0↦1, 1↦τ)
/// of the six named classes, name order.
const std::array<std::array<int, 6>, 6>& catalog_edge_bits();
/// The unique flat assignment's canonical bit vector.
const std::array<int, 6>& flat_edge_bits();

/// Reconstruction target: the 6×6 volume-inflation matrix (has half-integer rows).
const RationalMatrix& m_gt();
const RationalMatrix& m_gt_squared();
const RationalMatrix& m_gt_cubed();
/// The 6×6 constraint pair X, Y with M·X = Y (columns: volume τ¹, volume τ⁰,
/// β-Dehn τ¹, β-Dehn τ⁰, δ-Dehn τ¹, δ-Dehn τ⁰).
const RationalMatrix& x_gt();
const RationalMatrix& y_gt();

/// 12 × volume of the composite tiles (z,h,s,a): {4τ+2, 6τ+4, 4τ+3, 2τ+1}.
const std::vector<GoldenNumber>& twelve_volumes_tiles();
/// c-vector of the tile Dehn invariants: d(tile) = −5·c⊗ᾱ with c from (τ,2,τ−1,−τ).
const std::vector<GoldenNumber>& tile_dehn_factors();
/// Tile Dehn invariants expanded into (β,δ) components via ᾱ = −β̄−δ̄.
const std::vector<DehnValue>& tile_dehn_table();

/// The 4×4 tile inflation matrix and its constraint pair.
const RationalMatrix& m_ms();
const RationalMatrix& x_ms();
const RationalMatrix& y_ms();

/// Packing maps (rows = tetrahedra basis, columns = tiles).
const RationalMatrix& psi_gt();    // 6×4, columns (z,h,s,a)
const RationalMatrix& psi_gt5();   // 6×5, columns (z,m,r,s,a) — rank 4
const RationalMatrix& psi_2f();    // 8×4, columns (z,h,s,a)
const RationalMatrix& psi_2f5();   // 8×5, columns (z,m,r,s,a) — rank 5

/// The colored 8×8 inflation matrix over Z[τ], tile order colored_names().
const GoldenMatrix& m_2f();
/// Frozen row-sum checksums of m_2f.
const std::vector<GoldenNumber>& m_2f_row_sums();
/// 12 × volumes with colored duplicates: (2τ+1, 1, τ+1, τ+1, τ, τ+1, τ, τ).
const std::vector<GoldenNumber>& twelve_volumes_colored();

/// The singular 5×5 matrix printed for the five-tile system, order (a,m,r,z,s).
const RationalMatrix& five_tile_matrix();

/// Coefficients of χ(x) = x⁴ − 5x³ + 2x² + 5x + 1 (degree-descending).
const std::array<long, 5>& char_poly_coeffs();
/// The four roots of χ in Q[τ]: τ³ = 2τ+1, −τ⁻³ = 3−2τ, τ, −τ⁻¹ = 1−τ.
const std::vector<GoldenNumber>& char_poly_roots();
/// Coefficients of f(x) = x⁴ − 5x² + 5 (degree-descending), the minimal
/// polynomial of ρ over Q.
const std::array<long, 5>& rho_min_poly_coeffs();
/// The four roots of f in the tower: ±ρ, ±(τ−1)ρ.
const std::vector<TowerElement>& rho_min_poly_roots();

} // namespace goldentiles::constants
