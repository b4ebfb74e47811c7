#include "goldentiles/polyhedra.hpp"

#include <algorithm>
#include <functional>

#include "goldentiles/constants.hpp"
#include "goldentiles/errors.hpp"
#include "goldentiles/matrix.hpp"

namespace goldentiles {

namespace {

constexpr int kEdgePairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
constexpr int kFaceVertices[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

/// Squared length of the edge between vertices u, v.
GoldenNumber sq_dist(const TetrahedronSpec& t, int u, int v) {
    const GoldenNumber& e = t.edges[edge_index(u, v)];
    return e * e;
}

/// Dot product (b−a)·(c−a) from squared distances alone.
GoldenNumber dot_from_sq(const TetrahedronSpec& t, int a, int b, int c) {
    GoldenNumber two = GoldenNumber(2);
    return (sq_dist(t, a, b) + sq_dist(t, a, c) - sq_dist(t, b, c)) * inverse(two);
}

} // namespace

std::pair<int, int> edge_vertices(int edge_index) {
    return {kEdgePairs[edge_index][0], kEdgePairs[edge_index][1]};
}

int edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < 6; ++e)
        if (kEdgePairs[e][0] == u && kEdgePairs[e][1] == v) return e;
    throw std::invalid_argument("edge_index: bad vertex pair");
}

std::string face_type_str(FaceType t) {
    switch (t) {
        case FaceType::regular_unit: return "r1";
        case FaceType::regular_tau: return "rt";
        case FaceType::isoceles_short: return "o";
        case FaceType::isoceles_long: return "a";
    }
    return "?";
}

std::array<FaceType, 4> face_types(const TetrahedronSpec& t) {
    GoldenNumber tau = GoldenNumber::tau();
    std::array<FaceType, 4> out;
    for (int f = 0; f < 4; ++f) {
        int taus = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const GoldenNumber& e = t.edges[edge_index(kFaceVertices[f][i], kFaceVertices[f][j])];
                if (e == tau)
                    ++taus;
                else if (!(e == GoldenNumber(1)))
                    throw std::invalid_argument("face_types: edges must be 1 or τ");
            }
        out[f] = taus == 0   ? FaceType::regular_unit
                 : taus == 1 ? FaceType::isoceles_short
                 : taus == 2 ? FaceType::isoceles_long
                             : FaceType::regular_tau;
    }
    return out;
}

namespace {

/// 288·V² as the Cayley–Menger determinant (exact, sign included).
GoldenNumber cm_det288(const TetrahedronSpec& t) {
    GoldenMatrix cm(5, 5);
    for (int i = 1; i < 5; ++i) {
        cm(0, i) = GoldenNumber(1);
        cm(i, 0) = GoldenNumber(1);
    }
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            cm(u + 1, v + 1) = u == v ? GoldenNumber() : sq_dist(t, u, v);
    return det(cm);
}

} // namespace

GoldenNumber cm_volume(const TetrahedronSpec& t) {
    GoldenNumber v2 = cm_det288(t) * inverse(GoldenNumber(288));
    if (v2.is_zero()) return GoldenNumber();
    auto root = is_square_in_qtau(v2);
    if (!root)
        throw NotRepresentable("squared volume " + golden_str(v2) +
                               " has no square root in the golden field");
    return *root;
}

TowerElement dihedral_cos(const TetrahedronSpec& t, int edge) {
    if (cm_det288(t).is_zero()) throw Degenerate("flat tetrahedron has no dihedral angles");
    auto [i, j] = edge_vertices(edge);
    // the two remaining vertices
    int k = -1, l = -1;
    for (int v = 0; v < 4; ++v)
        if (v != i && v != j) (k < 0 ? k : l) = v;
    // u = j−i, v = k−i, w = l−i; all dot products exact in Q[τ]
    GoldenNumber guu = sq_dist(t, i, j);
    GoldenNumber guv = dot_from_sq(t, i, j, k);
    GoldenNumber guw = dot_from_sq(t, i, j, l);
    GoldenNumber gvv = sq_dist(t, i, k);
    GoldenNumber gww = sq_dist(t, i, l);
    GoldenNumber gvw = dot_from_sq(t, i, k, l);
    // |u×v|² and |u×w|² (4× squared face areas)
    GoldenNumber a1 = guu * gvv - guv * guv;
    GoldenNumber a2 = guu * gww - guw * guw;
    if (a1.is_zero() || a2.is_zero()) throw Degenerate("adjacent face degenerates to a segment");
    GoldenNumber numer = guu * gvw - guv * guw;
    auto denom = tower_sqrt_of_golden(a1 * a2);
    if (!denom)
        throw NotRepresentable("face-area product has no square root in the tower");
    return TowerElement::of(numer) * inverse(*denom);
}

DehnValue tetrahedron_dehn(const TetrahedronSpec& t) {
    std::vector<std::pair<GoldenNumber, AngleExpr>> terms;
    for (int e = 0; e < 6; ++e)
        terms.emplace_back(t.edges[e], identify_angle(dihedral_cos(t, e)));
    return dehn_accumulate(terms);
}

namespace {

std::array<int, 6> bits_of(const TetrahedronSpec& t) {
    GoldenNumber tau = GoldenNumber::tau();
    std::array<int, 6> b{};
    for (int e = 0; e < 6; ++e) b[e] = t.edges[e] == tau ? 1 : 0;
    return b;
}

TetrahedronSpec spec_of_bits(const std::array<int, 6>& bits) {
    TetrahedronSpec t;
    for (int e = 0; e < 6; ++e)
        t.edges[e] = bits[e] ? GoldenNumber::tau() : GoldenNumber(1);
    return t;
}

} // namespace

std::array<int, 6> canonical_bits(const TetrahedronSpec& t) {
    std::array<int, 6> bits = bits_of(t);
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::array<int, 6> best = bits;
    do {
        std::array<int, 6> cand;
        for (int e = 0; e < 6; ++e) {
            auto [u, v] = edge_vertices(e);
            cand[e] = bits[edge_index(perm[u], perm[v])];
        }
        if (cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<TetrahedronSpec> enumerate_golden_tetrahedra() {
    std::vector<std::array<int, 6>> canon;
    for (int mask = 0; mask < 64; ++mask) {
        std::array<int, 6> bits;
        for (int e = 0; e < 6; ++e) bits[e] = (mask >> e) & 1;
        auto c = canonical_bits(spec_of_bits(bits));
        if (std::find(canon.begin(), canon.end(), c) == canon.end()) canon.push_back(c);
    }
    std::sort(canon.begin(), canon.end());
    std::vector<TetrahedronSpec> out;
    for (const auto& c : canon) {
        TetrahedronSpec t = spec_of_bits(c);
        auto faces = face_types(t);
        bool all_same = std::all_of(faces.begin(), faces.end(),
                                    [&](FaceType f) { return f == faces[0]; });
        if (!all_same) out.push_back(t);
    }
    return out;
}

std::vector<CatalogEntry> catalog_identify(const std::vector<TetrahedronSpec>& specs) {
    const auto& names = constants::tetrahedron_names();
    const auto& vols12 = constants::twelve_volumes();
    const auto& dehns = constants::dehn_table();
    GoldenNumber twelfth = inverse(GoldenNumber(12));

    size_t n = specs.size();
    if (n != 6) throw NoMatch("expected the 6 non-flat classes, got " + std::to_string(n));

    std::vector<GoldenNumber> vol(n);
    std::vector<DehnValue> dehn(n);
    std::vector<std::array<AngleExpr, 6>> angles(n);
    for (size_t s = 0; s < n; ++s) {
        vol[s] = cm_volume(specs[s]);
        std::vector<std::pair<GoldenNumber, AngleExpr>> terms;
        for (int e = 0; e < 6; ++e) {
            angles[s][e] = identify_angle(dihedral_cos(specs[s], e));
            terms.emplace_back(specs[s].edges[e], angles[s][e]);
        }
        dehn[s] = dehn_accumulate(terms);
    }

    // candidate name sets per spec
    std::vector<std::vector<size_t>> options(n);
    for (size_t s = 0; s < n; ++s)
        for (size_t i = 0; i < 6; ++i)
            if (vol[s] == vols12[i] * twelfth && dehn[s] == dehns[i]) options[s].push_back(i);

    // count perfect matchings (stop at 2); record the first
    std::vector<int> assign(n, -1), found;
    std::vector<bool> used(6, false);
    int matchings = 0;
    std::function<void(size_t)> rec = [&](size_t s) {
        if (matchings >= 2) return;
        if (s == n) {
            ++matchings;
            if (matchings == 1) found.assign(assign.begin(), assign.end());
            return;
        }
        for (size_t i : options[s]) {
            if (used[i]) continue;
            used[i] = true;
            assign[s] = static_cast<int>(i);
            rec(s + 1);
            used[i] = false;
        }
    };
    rec(0);
    if (matchings == 0)
        throw NoMatch("no assignment of catalog names matches both the volume and Dehn tables");
    if (matchings > 1)
        throw AmbiguousNaming("more than one name assignment matches the invariant tables");

    std::vector<CatalogEntry> out(6);
    for (size_t s = 0; s < n; ++s) {
        size_t i = static_cast<size_t>(found[s]);
        out[i] = CatalogEntry{names[i], specs[s], vol[s], dehn[s], face_types(specs[s]), angles[s]};
    }
    return out;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<TetrahedronSpec> non_flat;
    for (const auto& t : enumerate_golden_tetrahedra())
        if (!cm_volume(t).is_zero()) non_flat.push_back(t);
    return catalog_identify(non_flat);
}

FaceAreaTable::FaceAreaTable() {
    GoldenNumber quarter(Rational(1) / 4);
    TowerElement sqrt3 = TowerElement::sqrt3();
    TowerElement rho = TowerElement::rho();
    GoldenNumber tau = GoldenNumber::tau();
    areas_[FaceType::regular_unit] = TowerElement::of(quarter) * sqrt3;
    areas_[FaceType::regular_tau] = TowerElement::of(quarter * tau * tau) * sqrt3;
    areas_[FaceType::isoceles_short] = TowerElement::of(quarter) * rho;
    areas_[FaceType::isoceles_long] = TowerElement::of(quarter * tau) * rho;
}

const FaceAreaTable& FaceAreaTable::instance() {
    static const FaceAreaTable t;
    return t;
}

const TowerElement& FaceAreaTable::area(FaceType t) const { return areas_.at(t); }

TowerElement face_area(const TetrahedronSpec& t, int face) {
    int a = kFaceVertices[face][0], b = kFaceVertices[face][1], c = kFaceVertices[face][2];
    GoldenNumber guu = sq_dist(t, a, b);
    GoldenNumber gvv = sq_dist(t, a, c);
    GoldenNumber guv = dot_from_sq(t, a, b, c);
    GoldenNumber cross_sq = guu * gvv - guv * guv; // |u×v|² = (2·area)²
    auto root = tower_sqrt_of_golden(cross_sq);
    if (!root) throw NotRepresentable("squared face area has no square root in the tower");
    return TowerElement::of(GoldenNumber(Rational(1) / 2)) * *root;
}

DehnValue polyhedron_dehn(const ExactPolyhedron& p) { return dehn_accumulate(p.edges); }

bool scissor_equivalent(const SydlerPair& p1, const SydlerPair& p2) {
    return p1.volume == p2.volume && p1.dehn == p2.dehn;
}

} // namespace goldentiles
