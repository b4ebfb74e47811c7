#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goldentiles/angles.hpp"

namespace goldentiles {

/// Edge order convention: e01, e02, e03, e12, e13, e23 (vertex pairs in
/// lexicographic order).
struct TetrahedronSpec {
    std::array<GoldenNumber, 6> edges;
    bool operator==(const TetrahedronSpec&) const = default;
};

/// Vertex pair of edge index 0..5 under the fixed convention.
std::pair<int, int> edge_vertices(int edge_index);
/// Edge index of an unordered vertex pair.
int edge_index(int u, int v);

/// Triangle shape classes occurring among {1,τ}-edged faces.
enum class FaceType { regular_unit, regular_tau, isoceles_short, isoceles_long };
/// Short labels: r1, rt, o (sides 1,1,τ), a (sides 1,τ,τ).
std::string face_type_str(FaceType t);

/// Classify the four faces of a {1,τ}-edged tetrahedron.
std::array<FaceType, 4> face_types(const TetrahedronSpec& t);

/// Exact volume via the Cayley–Menger determinant: 288·V² is a determinant
/// over Q[τ]; the volume itself must again lie in Q[τ].
/// Returns 0 for flat configurations. Throws NotRepresentable when V² has no
/// square root in Q[τ] (e.g. the regular unit tetrahedron).
GoldenNumber cm_volume(const TetrahedronSpec& t);

/// Exact cosine of the interior dihedral angle along the given edge, from the
/// Gram matrix of the two adjacent faces. Throws Degenerate when the
/// tetrahedron is flat.
TowerElement dihedral_cos(const TetrahedronSpec& t, int edge);

/// Dehn invariant of a tetrahedron: identify every dihedral angle and
/// accumulate length⊗angle.
DehnValue tetrahedron_dehn(const TetrahedronSpec& t);

/// All congruence classes of {1,τ}-edge assignments whose four faces are not
/// all congruent: exactly 7, exactly one of which is flat. Returned in
/// ascending canonical-bit-vector order (canonical = lexicographically
/// smallest under the 24 vertex relabelings; bit 1 ⟺ edge length τ).
std::vector<TetrahedronSpec> enumerate_golden_tetrahedra();

/// Canonical bit vector of a {1,τ} tetrahedron under vertex relabeling.
std::array<int, 6> canonical_bits(const TetrahedronSpec& t);

struct CatalogEntry {
    std::string name;
    TetrahedronSpec spec;
    GoldenNumber volume;
    DehnValue dehn;
    std::array<FaceType, 4> faces;
    std::array<AngleExpr, 6> edge_angles;
};

/// Assign the catalog names to the six non-flat classes by matching volume
/// and Dehn invariant jointly against the reference tables; the bijection
/// must be unique. Throws AmbiguousNaming / NoMatch. Result in name order.
std::vector<CatalogEntry> catalog_identify(const std::vector<TetrahedronSpec>& specs);

/// enumerate → drop the flat class → name: the full golden catalog.
std::vector<CatalogEntry> build_catalog();

/// Exact face areas: side-1 regular √3/4, side-τ regular τ²√3/4,
/// (1,1,τ) isoceles ρ/4, (1,τ,τ) isoceles τρ/4.
class FaceAreaTable {
public:
    static const FaceAreaTable& instance();
    const TowerElement& area(FaceType t) const;

private:
    FaceAreaTable();
    std::map<FaceType, TowerElement> areas_;
};

/// Exact area of face f (0..3) of a tetrahedron, via the Gram matrix.
TowerElement face_area(const TetrahedronSpec& t, int face);

/// Invariant-level description of a polyhedron: edge lengths with their
/// dihedral angles (no embedding), optionally with a known volume.
struct ExactPolyhedron {
    std::vector<std::pair<GoldenNumber, AngleExpr>> edges;
    std::optional<GoldenNumber> volume;
};

DehnValue polyhedron_dehn(const ExactPolyhedron& p);

/// Volume + Dehn invariant: by Sydler's theorem this pair decides scissor
/// equivalence in dimension 3.
struct SydlerPair {
    GoldenNumber volume;
    DehnValue dehn;
    bool operator==(const SydlerPair&) const = default;
};

bool scissor_equivalent(const SydlerPair& p1, const SydlerPair& p2);

} // namespace goldentiles
