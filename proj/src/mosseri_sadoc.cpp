#include "goldentiles/mosseri_sadoc.hpp"

#include <array>

#include "goldentiles/constants.hpp"

namespace goldentiles {

namespace {

template <class A>
std::vector<std::string> to_vec(const A& arr) {
    return std::vector<std::string>(arr.begin(), arr.end());
}

// Column order shared by the two five-tile maps (h split in place into m, r).
const std::vector<std::string>& five_map_columns() {
    static const std::vector<std::string> v = {"z", "m", "r", "s", "a"};
    return v;
}

template <class T>
std::optional<Mat<T>> induced_operator(const Mat<T>& m, const Mat<T>& psi) {
    if (m.rows() != m.cols() || m.rows() != psi.rows())
        throw std::invalid_argument("operator must be square of the map's source dimension");
    const Mat<T> pt = psi.transpose();
    const Mat<T> gram = pt * psi;
    if (det(gram) == T{}) throw NotInjective("packing map does not have full column rank");
    const Mat<T> target = m.transpose() * psi;
    const Mat<T> t = solve_left(gram, pt * target);
    if (!(psi * t == target)) return std::nullopt;
    return t.transpose();
}

} // namespace

const PackingMap& packing_gt() {
    static const PackingMap m{"psi_gt", to_vec(constants::tetrahedron_names()),
                              to_vec(constants::tile_names()), constants::psi_gt()};
    return m;
}

const PackingMap& packing_gt5() {
    static const PackingMap m{"psi_gt5", to_vec(constants::tetrahedron_names()),
                              five_map_columns(), constants::psi_gt5()};
    return m;
}

const PackingMap& packing_2f() {
    static const PackingMap m{"psi_2f", to_vec(constants::colored_names()),
                              to_vec(constants::tile_names()), constants::psi_2f()};
    return m;
}

const PackingMap& packing_2f5() {
    static const PackingMap m{"psi_2f5", to_vec(constants::colored_names()),
                              five_map_columns(), constants::psi_2f5()};
    return m;
}

TileInvariants build_tile_invariants(const std::vector<CatalogEntry>& catalog,
                                     const PackingMap& psi) {
    const auto& names = constants::tetrahedron_names();
    std::map<std::string, const CatalogEntry*> by_name;
    for (const auto& e : catalog) by_name[e.name] = &e;
    if (by_name.size() != names.size()) throw CatalogIncomplete("catalog must contain exactly the six named tetrahedra");
    for (const auto& n : names)
        if (by_name.find(n) == by_name.end()) throw CatalogIncomplete("catalog must contain exactly the six named tetrahedra");

    TileInvariants out;
    for (size_t j = 0; j < psi.matrix.cols(); ++j) {
        TileInvariant inv;
        for (size_t i = 0; i < psi.matrix.rows(); ++i) {
            const Rational& mult = psi.matrix(i, j);
            if (mult == 0) continue;
            // Colored rows ("C*b", "G*r", ...) carry the base class invariants.
            const CatalogEntry& e = *by_name.at(psi.row_names[i].substr(0, 2));
            const GoldenNumber g{mult, Rational(0)};
            inv.volume = inv.volume + g * e.volume;
            inv.dehn = inv.dehn + dehn_scale(e.dehn, g);
        }
        out[psi.column_names[j]] = inv;
    }
    return out;
}

std::optional<RationalMatrix> subspace_invariance(const RationalMatrix& m,
                                                  const PackingMap& psi) {
    return induced_operator(m, psi.matrix);
}

std::optional<GoldenMatrix> subspace_invariance(const GoldenMatrix& m,
                                                const PackingMap& psi) {
    return induced_operator(m, to_golden(psi.matrix));
}

bool FiveTileReport::ok() const {
    return kernel_relation && gt5_not_injective && printed_matrix_singular &&
           row_dependency && aggregation_matches && colored_full_rank &&
           colored_induces_printed;
}

FiveTileReport five_tile_analysis() {
    FiveTileReport rep;

    // Kernel of the 6-row five-tile map: r + s − 2z ↦ 0 (columns z,m,r,s,a).
    const RationalMatrix& p5 = constants::psi_gt5();
    rep.kernel_relation = true;
    for (size_t i = 0; i < p5.rows(); ++i)
        if (p5(i, 2) + p5(i, 3) != Rational(2) * p5(i, 0)) rep.kernel_relation = false;

    try {
        (void)subspace_invariance(constants::m_gt(), packing_gt5());
    } catch (const NotInjective&) {
        rep.gt5_not_injective = true;
    }

    // Printed 5×5, basis order (a,m,r,z,s): singular, row s = 2·row z − row r.
    const RationalMatrix& five = constants::five_tile_matrix();
    rep.printed_matrix_singular = det(five) == Rational(0);
    rep.row_dependency = true;
    for (size_t j = 0; j < five.cols(); ++j)
        if (five(4, j) != Rational(2) * five(3, j) - five(2, j)) rep.row_dependency = false;

    // Collapse m,r → h: m and r always occur with equal multiplicity, so rows
    // z, s, a survive unchanged (with the m entry as the h count) and
    // row h = row m + row r. The result must be the 4×4 tile matrix.
    {
        auto collapse = [](const std::array<Rational, 5>& r5)
            -> std::optional<std::array<Rational, 4>> {
            if (r5[1] != r5[2]) return std::nullopt;  // multiplicity of m vs r
            // (a,m,r,z,s) entries → (z,h,s,a) entries
            return std::array<Rational, 4>{r5[3], r5[1], r5[4], r5[0]};
        };
        auto row_of = [&five](size_t i) {
            std::array<Rational, 5> r;
            for (size_t j = 0; j < 5; ++j) r[j] = five(i, j);
            return r;
        };
        std::array<Rational, 5> row_h;
        for (size_t j = 0; j < 5; ++j) row_h[j] = five(1, j) + five(2, j);
        const std::array<std::array<Rational, 5>, 4> rows = {row_of(3), row_h, row_of(4),
                                                             row_of(0)};  // z, h, s, a
        rep.aggregation_matches = true;
        for (size_t i = 0; i < 4; ++i) {
            auto c = collapse(rows[i]);
            if (!c) {
                rep.aggregation_matches = false;
                break;
            }
            for (size_t j = 0; j < 4; ++j)
                if ((*c)[j] != constants::m_ms()(i, j)) rep.aggregation_matches = false;
        }
    }

    // The colored five-tile map is injective and induces exactly the printed
    // 5×5 once its (z,m,r,s,a) order is permuted to the printed (a,m,r,z,s).
    {
        const RationalMatrix& p = constants::psi_2f5();
        rep.colored_full_rank = det(p.transpose() * p) != Rational(0);
        try {
            const auto n5 = subspace_invariance(constants::m_2f(), packing_2f5());
            if (n5) {
                static const size_t perm[5] = {4, 1, 2, 0, 3};  // printed idx → map idx
                const GoldenMatrix printed = to_golden(constants::five_tile_matrix());
                rep.colored_induces_printed = true;
                for (size_t i = 0; i < 5; ++i)
                    for (size_t j = 0; j < 5; ++j)
                        if (!((*n5)(perm[i], perm[j]) == printed(i, j)))
                            rep.colored_induces_printed = false;
            }
        } catch (const NotInjective&) {
            rep.colored_induces_printed = false;
        }
    }
    return rep;
}

bool T2FReport::ok() const {
    return spot_entries && row_sums && volume_eigenvector && intertwiner &&
           color_aggregation;
}

T2FReport t2f_checks(const GoldenMatrix& m2f) {
    if (m2f.rows() != 8 || m2f.cols() != 8)
        throw std::invalid_argument("colored inflation matrix must be 8x8");
    T2FReport rep;

    const struct {
        size_t r, c;
        GoldenNumber v;
    } spots[] = {{1, 1, GoldenNumber(-16, 11)},
                 {4, 6, GoldenNumber(14, -8)},
                 {8, 6, GoldenNumber(13, -8)}};
    for (const auto& s : spots)
        if (!(m2f(s.r - 1, s.c - 1) == s.v)) throw MatrixMismatch(s.r - 1, s.c - 1, "pinned entry mismatch");
    rep.spot_entries = true;

    const auto& sums = constants::m_2f_row_sums();
    for (size_t i = 0; i < 8; ++i) {
        GoldenNumber s;
        for (size_t j = 0; j < 8; ++j) s = s + m2f(i, j);
        if (!(s == sums[i])) throw MatrixMismatch(i, 0, "row sum mismatch");
    }
    rep.row_sums = true;

    const auto& vols = constants::twelve_volumes_colored();
    const GoldenNumber tau_cubed(1, 2);
    for (size_t i = 0; i < 8; ++i) {
        GoldenNumber acc;
        for (size_t j = 0; j < 8; ++j) acc = acc + m2f(i, j) * vols[j];
        if (!(acc == tau_cubed * vols[i]))
            throw MatrixMismatch(i, 0, "volume eigenvector mismatch");
    }
    rep.volume_eigenvector = true;

    {
        const GoldenMatrix psi = to_golden(constants::psi_2f());
        const GoldenMatrix lhs = m2f.transpose() * psi;
        const GoldenMatrix rhs = psi * to_golden(constants::m_ms()).transpose();
        for (size_t i = 0; i < lhs.rows(); ++i)
            for (size_t j = 0; j < lhs.cols(); ++j)
                if (!(lhs(i, j) == rhs(i, j)))
                    throw MatrixMismatch(i, j, "intertwiner mismatch");
    }
    rep.intertwiner = true;

    {
        // Forgetting colors (summing the C* and G* color columns), the B*, D*
        // and F* rows must reproduce the corresponding 6×6 rows exactly.
        const size_t colored_rows[3] = {1, 4, 5};  // B*, D*, F* in the colored order
        const size_t plain_rows[3] = {1, 3, 4};    // B*, D*, F* in the plain order
        const RationalMatrix& mgt = constants::m_gt();
        for (size_t k = 0; k < 3; ++k) {
            const size_t i = colored_rows[k];
            const std::array<GoldenNumber, 6> agg = {m2f(i, 0),            m2f(i, 1),
                                                     m2f(i, 2) + m2f(i, 3), m2f(i, 4),
                                                     m2f(i, 5),            m2f(i, 6) + m2f(i, 7)};
            for (size_t j = 0; j < 6; ++j)
                if (!(agg[j] == GoldenNumber(mgt(plain_rows[k], j), Rational(0))))
                    throw MatrixMismatch(i, j, "color aggregation mismatch");
        }
    }
    rep.color_aggregation = true;
    return rep;
}

} // namespace goldentiles
