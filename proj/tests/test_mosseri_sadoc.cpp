// Property tests for the composite-tile layer: packing maps, tile
// invariants, induced operators, the five-tile analysis, and the colored
// 8×8 inflation matrix.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "goldentiles/constants.hpp"
#include "goldentiles/errors.hpp"
#include "goldentiles/mosseri_sadoc.hpp"
#include "goldentiles/polyhedra.hpp"
#include "test_util.hpp"

using namespace goldentiles;
namespace C = constants;

namespace {

template <class Array>
bool same_names(const std::vector<std::string>& v, const Array& a) {
    return std::equal(v.begin(), v.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("packing maps carry the expected shapes and labels") {
    const PackingMap& gt = packing_gt();
    CHECK(gt.matrix.rows() == 6);
    CHECK(gt.matrix.cols() == 4);
    CHECK(same_names(gt.row_names, C::tetrahedron_names()));
    CHECK(same_names(gt.column_names, C::tile_names()));

    const PackingMap& gt5 = packing_gt5();
    CHECK(gt5.matrix.rows() == 6);
    CHECK(gt5.matrix.cols() == 5);
    // The packing lists (z, m, r, s, a); the printed five-tile matrix uses
    // its own ordering (a, m, r, z, s). Same tiles either way.
    const std::vector<std::string> packing_order = {"z", "m", "r", "s", "a"};
    CHECK(gt5.column_names == packing_order);
    std::vector<std::string> sorted_packing = packing_order;
    std::vector<std::string> sorted_printed(C::five_tile_names().begin(),
                                            C::five_tile_names().end());
    std::sort(sorted_packing.begin(), sorted_packing.end());
    std::sort(sorted_printed.begin(), sorted_printed.end());
    CHECK(sorted_packing == sorted_printed);

    const PackingMap& c2f = packing_2f();
    CHECK(c2f.matrix.rows() == 8);
    CHECK(c2f.matrix.cols() == 4);
    CHECK(same_names(c2f.row_names, C::colored_names()));

    const PackingMap& c2f5 = packing_2f5();
    CHECK(c2f5.matrix.rows() == 8);
    CHECK(c2f5.matrix.cols() == 5);
}

TEST_CASE("tile invariants follow by additivity from the tetrahedra") {
    const auto catalog = build_catalog();
    const TileInvariants inv = build_tile_invariants(catalog, packing_gt());
    REQUIRE(inv.size() == 4);
    const GoldenNumber twelve(12);
    for (size_t j = 0; j < 4; ++j) {
        const auto& tile = inv.at(C::tile_names()[j]);
        CHECK(twelve * tile.volume == C::twelve_volumes_tiles()[j]);
        CHECK(tile.dehn == C::tile_dehn_table()[j]);
    }
}

TEST_CASE("every composite tile has equal beta and delta Dehn components") {
    const auto catalog = build_catalog();
    for (const PackingMap* pm : {&packing_gt(), &packing_gt5()}) {
        const TileInvariants inv = build_tile_invariants(catalog, *pm);
        for (const auto& [name, tile] : inv) {
            CAPTURE(name);
            CHECK(tile.dehn.beta == tile.dehn.delta);
        }
    }
}

TEST_CASE("the five-tile invariants refine the four-tile ones") {
    const auto catalog = build_catalog();
    const TileInvariants inv4 = build_tile_invariants(catalog, packing_gt());
    const TileInvariants inv5 = build_tile_invariants(catalog, packing_gt5());
    REQUIRE(inv5.size() == 5);
    // z, s, a agree between the two systems; h splits as m ∪ r.
    for (const char* shared : {"z", "s", "a"}) {
        CHECK(inv5.at(shared).volume == inv4.at(shared).volume);
        CHECK(inv5.at(shared).dehn == inv4.at(shared).dehn);
    }
    CHECK(inv5.at("m").volume + inv5.at("r").volume == inv4.at("h").volume);
    CHECK(inv5.at("m").dehn + inv5.at("r").dehn == inv4.at("h").dehn);
    // Frozen factors: every Dehn value is 5·factor·(β+δ), factor per tile.
    const auto factors = C::tile_dehn_factors();
    const GoldenNumber five(5);
    CHECK(inv5.at("m").dehn.beta == GoldenNumber(5, -5));
    CHECK(inv5.at("r").dehn.beta == GoldenNumber(5, 5));
    CHECK(inv4.at("z").dehn.beta == GoldenNumber(0, 5));
    for (size_t j = 0; j < 4; ++j) {
        const GoldenNumber scaled = five * factors[j];
        CHECK(inv4.at(C::tile_names()[j]).dehn == DehnValue{scaled, scaled});
    }
}

TEST_CASE("colored packing reproduces the same tile invariants") {
    const auto catalog = build_catalog();
    const TileInvariants plain = build_tile_invariants(catalog, packing_gt());
    const TileInvariants colored = build_tile_invariants(catalog, packing_2f());
    REQUIRE(plain.size() == colored.size());
    for (const auto& [name, tile] : plain) {
        CHECK(colored.at(name).volume == tile.volume);
        CHECK(colored.at(name).dehn == tile.dehn);
    }
}

TEST_CASE("an incomplete catalog is rejected") {
    auto catalog = build_catalog();
    catalog.pop_back();
    CHECK_THROWS_AS((void)build_tile_invariants(catalog, packing_gt()), CatalogIncomplete);
}

TEST_CASE("the packing map intertwines the two inflation matrices") {
    const auto n = subspace_invariance(C::m_gt(), packing_gt());
    REQUIRE(n.has_value());
    CHECK(*n == C::m_ms());
    // Exact intertwining identity M_gtᵀ·ψ = ψ·M_MSᵀ.
    const RationalMatrix lhs = C::m_gt().transpose() * packing_gt().matrix;
    const RationalMatrix rhs = packing_gt().matrix * C::m_ms().transpose();
    CHECK(lhs == rhs);
}

TEST_CASE("the identity induces the identity through any full-rank packing") {
    const auto n = subspace_invariance(RationalMatrix::identity(6), packing_gt());
    REQUIRE(n.has_value());
    CHECK(*n == RationalMatrix::identity(4));
}

TEST_CASE("the colored matrix induces the four-tile matrix over the golden field") {
    const auto n = subspace_invariance(C::m_2f(), packing_2f());
    REQUIRE(n.has_value());
    CHECK(*n == to_golden(C::m_ms()));
}

TEST_CASE("a rank-deficient packing map is rejected as non-injective") {
    CHECK_THROWS_AS((void)subspace_invariance(C::m_gt(), packing_gt5()), NotInjective);
}

TEST_CASE("a perturbed matrix no longer preserves the packed subspace") {
    RationalMatrix bad = C::m_gt();
    bad(0, 0) = bad(0, 0) + Rational(1);
    CHECK_FALSE(subspace_invariance(bad, packing_gt()).has_value());
}

TEST_CASE("a shape mismatch between matrix and packing is an input error") {
    CHECK_THROWS_AS((void)subspace_invariance(RationalMatrix::identity(5), packing_gt()),
                    std::invalid_argument);
}

TEST_CASE("the four-tile matrix fixes its frozen eigenvectors") {
    const GoldenMatrix m = to_golden(C::m_ms());
    const GoldenNumber tau3(1, 2), tau(0, 1);
    const auto& v = C::twelve_volumes_tiles();
    const auto& d = C::tile_dehn_factors();
    for (size_t i = 0; i < 4; ++i) {
        GoldenNumber accv, accd;
        for (size_t j = 0; j < 4; ++j) {
            accv = accv + m(i, j) * v[j];
            accd = accd + m(i, j) * d[j];
        }
        CHECK(accv == tau3 * v[i]);
        CHECK(accd == tau * d[i]);
    }
}

TEST_CASE("five-tile analysis: singular system collapsing onto the four tiles") {
    const FiveTileReport rep = five_tile_analysis();
    CHECK(rep.kernel_relation);
    CHECK(rep.gt5_not_injective);
    CHECK(rep.printed_matrix_singular);
    CHECK(rep.row_dependency);
    CHECK(rep.aggregation_matches);
    CHECK(rep.colored_full_rank);
    CHECK(rep.colored_induces_printed);
    CHECK(rep.ok());
    // The singularity is also visible directly.
    CHECK(det(C::five_tile_matrix()) == Rational(0));
    CHECK(rank(C::five_tile_matrix()) == 4);
}

TEST_CASE("the colored inflation matrix passes every identity") {
    const T2FReport rep = t2f_checks(C::m_2f());
    CHECK(rep.spot_entries);
    CHECK(rep.row_sums);
    CHECK(rep.volume_eigenvector);
    CHECK(rep.intertwiner);
    CHECK(rep.color_aggregation);
    CHECK(rep.ok());
}

TEST_CASE("frozen spot entries of the colored matrix") {
    const GoldenMatrix& m = C::m_2f();
    CHECK(m(0, 0) == GoldenNumber(-16, 11)); // 11τ−16
    CHECK(m(3, 5) == GoldenNumber(14, -8));  // 14−8τ
    CHECK(m(7, 5) == GoldenNumber(13, -8));  // 13−8τ
}

TEST_CASE("colored row sums reproduce the integer checksums") {
    const GoldenMatrix& m = C::m_2f();
    const auto& sums = C::m_2f_row_sums();
    for (size_t i = 0; i < 8; ++i) {
        GoldenNumber acc;
        for (size_t j = 0; j < 8; ++j) acc = acc + m(i, j);
        CHECK(acc == sums[i]);
    }
    // Rows B*, D*, F* sum to plain integers 2, 3, 4.
    CHECK(sums[1] == GoldenNumber(2));
    CHECK(sums[4] == GoldenNumber(3));
    CHECK(sums[5] == GoldenNumber(4));
}

TEST_CASE("the colored matrix scales the colored volume vector by tau cubed") {
    const GoldenMatrix& m = C::m_2f();
    const auto& v8 = C::twelve_volumes_colored();
    const GoldenNumber tau3(1, 2);
    for (size_t i = 0; i < 8; ++i) {
        GoldenNumber acc;
        for (size_t j = 0; j < 8; ++j) acc = acc + m(i, j) * v8[j];
        CHECK(acc == tau3 * v8[i]);
    }
}

TEST_CASE("a corrupted cell is reported with exact coordinates") {
    GoldenMatrix bad = C::m_2f();
    bad(0, 0) = bad(0, 0) + GoldenNumber(1);
    try {
        (void)t2f_checks(bad);
        FAIL("expected a mismatch exception");
    } catch (const MatrixMismatch& e) {
        CHECK(e.row == 0);
        CHECK(e.col == 0);
        CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }
}
