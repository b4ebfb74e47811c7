#include "goldentiles/constants.hpp"

namespace goldentiles::constants {

namespace {

GoldenNumber gn(long a, long b) { return GoldenNumber(a, b); }

RationalMatrix from_longs(size_t r, size_t c, const long* v) {
    RationalMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = Rational(v[i * c + j]);
    return m;
}

GoldenMatrix from_pairs(size_t r, size_t c, const long* v) {
    GoldenMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            m(i, j) = gn(v[2 * (i * c + j)], v[2 * (i * c + j) + 1]);
    return m;
}

} // namespace

const std::array<std::string, 6>& tetrahedron_names() {
    static const std::array<std::string, 6> v = {"A*", "B*", "C*", "D*", "F*", "G*"};
    return v;
}

const std::array<std::string, 4>& tile_names() {
    static const std::array<std::string, 4> v = {"z", "h", "s", "a"};
    return v;
}

const std::array<std::string, 5>& five_tile_names() {
    static const std::array<std::string, 5> v = {"a", "m", "r", "z", "s"};
    return v;
}

const std::array<std::string, 8>& colored_names() {
    static const std::array<std::string, 8> v = {"A*", "B*", "C*b", "C*r", "D*", "F*", "G*b", "G*r"};
    return v;
}

const std::vector<GoldenNumber>& twelve_volumes() {
    static const std::vector<GoldenNumber> v = {gn(1, 2), gn(1, 0), gn(1, 1),
                                                gn(0, 1), gn(1, 1), gn(0, 1)};
    return v;
}

const std::vector<DehnValue>& dehn_table() {
    static const std::vector<DehnValue> v = {
        {gn(-1, -1), gn(-1, 5)}, // A*
        {gn(5, 1), gn(-1, 1)},   // B*
        {gn(-2, 3), gn(-2, 0)},  // C*
        {gn(0, -2), gn(-3, -2)}, // D*
        {gn(0, -3), gn(3, -3)},  // F*
        {gn(3, 3), gn(3, 0)},    // G*
    };
    return v;
}

const std::array<std::array<int, 6>, 6>& catalog_edge_bits() {
    static const std::array<std::array<int, 6>, 6> v = {{
        {0, 1, 1, 1, 1, 1}, // A*
        {0, 0, 0, 0, 0, 1}, // B*
        {0, 0, 1, 1, 1, 1}, // C*
        {0, 0, 0, 0, 1, 1}, // D*
        {0, 0, 1, 0, 1, 1}, // F*
        {0, 0, 0, 1, 1, 1}, // G*
    }};
    return v;
}

const std::array<int, 6>& flat_edge_bits() {
    static const std::array<int, 6> v = {0, 0, 1, 1, 0, 1};
    return v;
}

const RationalMatrix& m_gt() {
    static const RationalMatrix m = [] {
        RationalMatrix r(6, 6);
        const long num[6][6] = {{4, 0, 2, 0, 4, 2}, {0, 0, 2, 0, 0, 2}, {1, 1, 2, 2, 2, 2},
                                {0, 0, 2, 2, 2, 0}, {2, 0, 2, 2, 2, 0}, {1, 1, 2, 0, 0, 2}};
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 6; ++j) r(i, j) = Rational(num[i][j]) / 2;
        return r;
    }();
    return m;
}

const RationalMatrix& m_gt_squared() {
    static const RationalMatrix m = [] {
        RationalMatrix r(6, 6);
        const long num[6][6] = {{14, 2, 12, 6, 14, 8}, {2, 2, 4, 2, 2, 4},  {6, 2, 10, 6, 8, 6},
                                {3, 1, 6, 6, 6, 2},    {7, 1, 8, 6, 10, 4}, {4, 2, 6, 2, 4, 6}};
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 6; ++j) r(i, j) = Rational(num[i][j]) / 2;
        return r;
    }();
    return m;
}

const RationalMatrix& m_gt_cubed() {
    static const long v[36] = {26, 5, 28, 16, 30, 18, 5,  2, 8,  4,  6,  6,  14, 4, 19, 12, 18, 12,
                               8,  2, 12, 9,  12, 6,  15, 3, 18, 12, 19, 10, 9,  3, 12, 6,  10, 9};
    static const RationalMatrix m = from_longs(6, 6, v);
    return m;
}

const RationalMatrix& x_gt() {
    static const long v[36] = {2, 1, -1, -1, 5,  -1, 0, 1, 1,  5, 1,  -1, 1, 1, 3, -2, 0, -2,
                               1, 0, -2, 0,  -2, -3, 1, 1, -3, 0, -3, 3,  1, 0, 3, 3,  0, 3};
    static const RationalMatrix m = from_longs(6, 6, v);
    return m;
}

const RationalMatrix& y_gt() {
    static const long v[36] = {8, 5, -2, -1, 4,  5,  2, 1, 6,  1,  0, 1, 5, 3, 1, 3, -2, 0,
                               3, 2, -2, -2, -5, -2, 5, 3, -3, -3, 0, -3, 3, 2, 6, 3, 3,  0};
    static const RationalMatrix m = from_longs(6, 6, v);
    return m;
}

const std::vector<GoldenNumber>& twelve_volumes_tiles() {
    static const std::vector<GoldenNumber> v = {gn(2, 4), gn(4, 6), gn(3, 4), gn(1, 2)};
    return v;
}

const std::vector<GoldenNumber>& tile_dehn_factors() {
    static const std::vector<GoldenNumber> v = {gn(0, 1), gn(2, 0), gn(-1, 1), gn(0, -1)};
    return v;
}

const std::vector<DehnValue>& tile_dehn_table() {
    static const std::vector<DehnValue> v = [] {
        // d = −5·c⊗ᾱ = 5c⊗β̄ + 5c⊗δ̄ since ᾱ = −β̄−δ̄
        std::vector<DehnValue> out;
        for (const auto& c : tile_dehn_factors()) {
            GoldenNumber five_c = GoldenNumber(5) * c;
            out.push_back({five_c, five_c});
        }
        return out;
    }();
    return v;
}

const RationalMatrix& m_ms() {
    static const long v[16] = {1, 1, 1, 1, 2, 1, 2, 2, 1, 1, 1, 2, 0, 0, 1, 2};
    static const RationalMatrix m = from_longs(4, 4, v);
    return m;
}

const RationalMatrix& x_ms() {
    static const long v[16] = {4, 2, 1, 0, 6, 4, 0, 2, 4, 3, 1, -1, 2, 1, -1, 0};
    static const RationalMatrix m = from_longs(4, 4, v);
    return m;
}

const RationalMatrix& y_ms() {
    static const long v[16] = {16, 10, 1, 1, 26, 16, 2, 0, 18, 11, 0, 1, 8, 5, -1, -1};
    static const RationalMatrix m = from_longs(4, 4, v);
    return m;
}

const RationalMatrix& psi_gt() {
    static const long v[24] = {1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 2, 0,
                               0, 0, 0, 1, 0, 2, 0, 1, 1, 2, 0, 0};
    static const RationalMatrix m = from_longs(6, 4, v);
    return m;
}

const RationalMatrix& psi_gt5() {
    static const long v[30] = {1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 2, 0,
                               0, 0, 0, 0, 1, 0, 2, 0, 0, 1, 1, 0, 2, 0, 0};
    static const RationalMatrix m = from_longs(6, 5, v);
    return m;
}

const RationalMatrix& psi_2f() {
    static const long v[32] = {1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0,
                               0, 0, 0, 1, 0, 2, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0};
    static const RationalMatrix m = from_longs(8, 4, v);
    return m;
}

const RationalMatrix& psi_2f5() {
    static const long v[40] = {1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0,
                               0, 0, 0, 0, 1, 0, 2, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0};
    static const RationalMatrix m = from_longs(8, 5, v);
    return m;
}

const GoldenMatrix& m_2f() {
    // entries as (rational part, τ part)
    static const long v[128] = {
        -16, 11, 0, 0, -2, 2, -3, 2, 0, 0, -13, 9, -1, 1, -4, 3, // A* row
        0,   0,  0, 0, 0,  0, 1,  0, 0, 0, 0,   0, 0,  0, 1,  0, // B*
        4,   -2, 1, 0, 0,  0, 2,  -1, 1, 0, 3,  -1, 0, 0, 2,  -1, // C*b
        15,  -9, 0, 0, 4,  -2, 2, -1, 1, 0, 14, -8, 2, -1, 4, -2, // C*r
        0,   0,  0, 0, 0,  0, 1,  0, 1, 0, 1,   0, 0,  0, 0,  0, // D*
        1,   0,  0, 0, 1,  0, 0,  0, 1, 0, 1,   0, 0,  0, 0,  0, // F*
        4,   -2, 1, 0, 0,  0, 2,  -1, 0, 0, 2,  -1, 0, 0, 2,  -1, // G*b
        15,  -9, 0, 0, 4,  -2, 2, -1, 0, 0, 13, -8, 2, -1, 4, -2, // G*r
    };
    static const GoldenMatrix m = from_pairs(8, 8, v);
    return m;
}

const std::vector<GoldenNumber>& m_2f_row_sums() {
    static const std::vector<GoldenNumber> v = {gn(-39, 28), gn(2, 0),  gn(13, -5), gn(42, -23),
                                                gn(3, 0),    gn(4, 0), gn(11, -5), gn(40, -23)};
    return v;
}

const std::vector<GoldenNumber>& twelve_volumes_colored() {
    static const std::vector<GoldenNumber> v = {gn(1, 2), gn(1, 0), gn(1, 1), gn(1, 1),
                                                gn(0, 1), gn(1, 1), gn(0, 1), gn(0, 1)};
    return v;
}

const RationalMatrix& five_tile_matrix() {
    static const long v[25] = {2, 0, 0, 0, 1, 2, 0, 0, 1, 1, 0, 1, 1,
                               1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1};
    static const RationalMatrix m = from_longs(5, 5, v);
    return m;
}

const std::array<long, 5>& char_poly_coeffs() {
    static const std::array<long, 5> v = {1, -5, 2, 5, 1};
    return v;
}

const std::vector<GoldenNumber>& char_poly_roots() {
    static const std::vector<GoldenNumber> v = {gn(1, 2), gn(3, -2), gn(0, 1), gn(1, -1)};
    return v;
}

const std::array<long, 5>& rho_min_poly_coeffs() {
    static const std::array<long, 5> v = {1, 0, -5, 0, 5};
    return v;
}

const std::vector<TowerElement>& rho_min_poly_roots() {
    static const std::vector<TowerElement> v = [] {
        TowerElement rho = TowerElement::rho();
        TowerElement sig = TowerElement::of(gn(-1, 1)) * rho; // (τ−1)ρ
        return std::vector<TowerElement>{rho, TowerElement{} - rho, sig, TowerElement{} - sig};
    }();
    return v;
}

} // namespace goldentiles::constants
