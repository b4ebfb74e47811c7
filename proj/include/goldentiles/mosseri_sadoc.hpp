#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "goldentiles/angles.hpp"
#include "goldentiles/errors.hpp"
#include "goldentiles/matrix.hpp"
#include "goldentiles/polyhedra.hpp"

namespace goldentiles {

/// A packing map expressing composite tiles as multisets of tetrahedra.
/// `matrix` has one row per source tetrahedron (plain or colored basis) and
/// one column per composite tile; entries are nonnegative integer
/// multiplicities.
struct PackingMap {
    std::string name;
    std::vector<std::string> row_names;     // tetrahedra basis
    std::vector<std::string> column_names;  // composite tiles
    RationalMatrix matrix;
};

/// The four standard packing maps:
///  - packing_gt():  6×4, plain basis → (z,h,s,a); full column rank.
///  - packing_gt5(): 6×5, plain basis → (z,m,r,s,a); rank 4, not injective.
///  - packing_2f():  8×4, colored basis → (z,h,s,a); full column rank.
///  - packing_2f5(): 8×5, colored basis → (z,m,r,s,a); full column rank.
const PackingMap& packing_gt();
const PackingMap& packing_gt5();
const PackingMap& packing_2f();
const PackingMap& packing_2f5();

/// Exact invariants of one composite tile.
struct TileInvariant {
    GoldenNumber volume;
    DehnValue dehn;
};
using TileInvariants = std::map<std::string, TileInvariant>;

/// Push the per-tetrahedron volumes and Dehn invariants of the catalog
/// through a packing map by additivity. The catalog must contain exactly the
/// six named classes (CatalogIncomplete otherwise); colored rows reuse the
/// invariants of their base class.
TileInvariants build_tile_invariants(const std::vector<CatalogEntry>& catalog,
                                     const PackingMap& psi);

/// Exact induced operator on the tile basis. With every matrix written in
/// the printed orientation (row i lists the contents of inflated tile i),
/// invariance of the image of ψ under M reads Mᵀ·ψ = ψ·Nᵀ. Solves for N
/// through the normal equations on ψ and verifies the residual is exactly
/// zero: returns N when the identity holds, an empty optional otherwise.
/// Throws NotInjective when ψᵀψ is singular and std::invalid_argument when
/// M is not square of ψ's row dimension.
std::optional<RationalMatrix> subspace_invariance(const RationalMatrix& m,
                                                  const PackingMap& psi);
std::optional<GoldenMatrix> subspace_invariance(const GoldenMatrix& m,
                                                const PackingMap& psi);

/// Facts verified about the five-tile system; ok() iff every field is true.
struct FiveTileReport {
    bool kernel_relation = false;         ///< ψ′(e_r)+ψ′(e_s) = 2·ψ′(e_z) for the 6-row map
    bool gt5_not_injective = false;       ///< inducing through the 6-row map throws NotInjective
    bool printed_matrix_singular = false; ///< det of the printed 5×5 is 0
    bool row_dependency = false;          ///< row s = 2·row z − row r in the printed 5×5
    bool aggregation_matches = false;     ///< collapsing m,r → h reproduces the 4×4 tile matrix
    bool colored_full_rank = false;       ///< the 8-row five-tile map has full column rank
    bool colored_induces_printed = false; ///< operator induced through it equals the printed 5×5
    bool ok() const;
};
FiveTileReport five_tile_analysis();

/// Facts verified about the colored 8×8 inflation matrix. Every field is
/// true on return; the first failing identity throws MatrixMismatch instead,
/// carrying 0-indexed cell coordinates (for per-row aggregates — row sums and
/// eigenvector entries — col is reported as 0 and what() names the check).
struct T2FReport {
    bool spot_entries = false;       ///< three pinned entries match
    bool row_sums = false;           ///< all eight row sums match the frozen checksums
    bool volume_eigenvector = false; ///< M·v = τ³·v for the colored volume vector
    bool intertwiner = false;        ///< Mᵀ·ψ = ψ·Nᵀ against the 4×4 tile matrix
    bool color_aggregation = false;  ///< B*,D*,F* rows reproduce the 6×6 rows up to colors
    bool ok() const;
};
T2FReport t2f_checks(const GoldenMatrix& m2f);

} // namespace goldentiles
