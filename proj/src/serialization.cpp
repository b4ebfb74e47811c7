#include "goldentiles/serialization.hpp"

#include <fstream>
#include <sstream>

#include "goldentiles/numeric.hpp"

namespace goldentiles {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

Rational rat_at(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    fail(where, "expected a rational as \"p/q\" string or integer");
}

Rational rat_field(const Json& j, const std::string& key, const std::string& where,
                   const Rational& missing) {
    if (!j.is_object()) fail(where, "expected an object");
    if (!j.contains(key)) return missing;
    return rat_at(j.at(key), where + "." + key);
}

GoldenNumber golden_at(const Json& j, const std::string& where) {
    return GoldenNumber(rat_field(j, "a", where, Rational(0)),
                        rat_field(j, "b", where, Rational(0)));
}

AngleExpr angle_at(const Json& j, const std::string& where) {
    AngleExpr e(rat_field(j, "pi", where, Rational(0)),
                rat_field(j, "beta", where, Rational(0)),
                rat_field(j, "delta", where, Rational(0)));
    if (j.contains("crs")) {
        const Json& terms = j.at("crs");
        if (!terms.is_array()) fail(where + ".crs", "expected an array");
        for (size_t i = 0; i < terms.size(); ++i) {
            const std::string at = where + ".crs[" + std::to_string(i) + "]";
            const Json& t = terms[i];
            if (!t.is_object() || !t.contains("p") || !t.contains("d"))
                fail(at, "expected {p, d, coeff}");
            CrsKey key{t.at("p").get<long>(), t.at("d").get<long>()};
            const Rational c = rat_field(t, "coeff", at, Rational(0));
            if (c != 0) e.crs_terms[key] = e.crs_terms[key] + c;
        }
    }
    return e;
}

Json int_str(const Int& n) { return n.str(); }

} // namespace

Json to_json(const Rational& q) { return rational_str(q); }

Json to_json(const GoldenNumber& g) {
    return Json{{"a", to_json(g.a)}, {"b", to_json(g.b)}};
}

Json to_json(const TowerElement& t) {
    return Json::array({to_json(t.w.a), to_json(t.w.b), to_json(t.x.a), to_json(t.x.b),
                        to_json(t.y.a), to_json(t.y.b), to_json(t.z.a), to_json(t.z.b)});
}

Json to_json(const AngleExpr& e) {
    Json j{{"pi", to_json(e.pi_coeff)},
           {"beta", to_json(e.beta_coeff)},
           {"delta", to_json(e.delta_coeff)}};
    if (!e.crs_terms.empty()) {
        Json terms = Json::array();
        for (const auto& [key, coeff] : e.crs_terms)
            terms.push_back(Json{{"p", key.p}, {"d", key.d}, {"coeff", to_json(coeff)}});
        j["crs"] = std::move(terms);
    }
    return j;
}

Json to_json(const DehnValue& d) {
    return Json{{"beta", to_json(d.beta)}, {"delta", to_json(d.delta)}};
}

Json to_json(const ExactPolyhedron& p) {
    Json edges = Json::array();
    for (const auto& [length, angle] : p.edges)
        edges.push_back(Json{{"length", to_json(length)}, {"angle", to_json(angle)}});
    Json j{{"edges", std::move(edges)}};
    if (p.volume) j["volume"] = to_json(*p.volume);
    return j;
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const GoldenMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const CoveringCertificate& c) {
    Json psi = Json::array();
    for (const auto& v : c.psi) psi.push_back(int_str(v));
    return Json{{"k", c.k},
                {"psi", std::move(psi)},
                {"conclusion", int_str(c.conclusion)},
                {"note", c.note}};
}

Json to_json(const CrsAngle& c) {
    return Json{{"p", c.p},
                {"d", c.d},
                {"s", c.s},
                {"a", int_str(c.a)},
                {"b", int_str(c.b)},
                {"value_decimal_string", real_str(c.value)}};
}

Rational rational_from_json(const Json& j) { return rat_at(j, "$"); }

GoldenNumber golden_from_json(const Json& j) { return golden_at(j, "$"); }

TowerElement tower_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 8)
        fail("$", "expected an array of 8 rational strings");
    std::array<Rational, 8> c;
    for (size_t i = 0; i < 8; ++i) c[i] = rat_at(j[i], "$[" + std::to_string(i) + "]");
    return TowerElement(GoldenNumber(c[0], c[1]), GoldenNumber(c[2], c[3]),
                        GoldenNumber(c[4], c[5]), GoldenNumber(c[6], c[7]));
}

AngleExpr angle_from_json(const Json& j) { return angle_at(j, "$"); }

DehnValue dehn_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("beta") || !j.contains("delta"))
        fail("$", "expected {beta, delta}");
    return DehnValue{golden_at(j.at("beta"), "$.beta"), golden_at(j.at("delta"), "$.delta")};
}

ExactPolyhedron polyhedron_from_json(const Json& j) {
    if (!j.is_object()) fail("$", "expected a polyhedron object");
    if (!j.contains("edges")) fail("$", "missing required field \"edges\"");
    const Json& edges = j.at("edges");
    if (!edges.is_array() || edges.empty()) fail("$.edges", "expected a nonempty array");
    ExactPolyhedron p;
    for (size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "$.edges[" + std::to_string(i) + "]";
        const Json& e = edges[i];
        if (!e.is_object() || !e.contains("length") || !e.contains("angle"))
            fail(where, "expected {length, angle}");
        p.edges.emplace_back(golden_at(e.at("length"), where + ".length"),
                             angle_at(e.at("angle"), where + ".angle"));
    }
    if (j.contains("volume")) p.volume = golden_at(j.at("volume"), "$.volume");
    return p;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        fail("$", "expected a nonempty array of rows");
    const size_t rows = j.size(), cols = j[0].size();
    RationalMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) fail("$", "ragged rows");
        for (size_t k = 0; k < cols; ++k)
            m(i, k) = rat_at(j[i][k], "$[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

GoldenMatrix golden_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        fail("$", "expected a nonempty array of rows");
    const size_t rows = j.size(), cols = j[0].size();
    GoldenMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) fail("$", "ragged rows");
        for (size_t k = 0; k < cols; ++k)
            m(i, k) = golden_at(j[i][k], "$[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

CoveringCertificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("psi") || !j.contains("conclusion"))
        fail("$", "expected {k, psi, conclusion}");
    CoveringCertificate c;
    c.k = j.at("k").get<unsigned>();
    for (size_t i = 0; i < j.at("psi").size(); ++i)
        c.psi.emplace_back(j.at("psi")[i].get<std::string>());
    c.conclusion = Int(j.at("conclusion").get<std::string>());
    if (j.contains("note")) c.note = j.at("note").get<std::string>();
    return c;
}

ExactPolyhedron load_polyhedron(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    try {
        return polyhedron_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

Json catalog_to_json() {
    Json out = Json::array();
    for (const auto& entry : build_catalog()) {
        Json edges = Json::array();
        for (size_t i = 0; i < 6; ++i)
            edges.push_back(Json{{"length", to_json(entry.spec.edges[i])},
                                 {"angle", to_json(entry.edge_angles[i])}});
        Json faces = Json::array();
        for (const auto& f : entry.faces) faces.push_back(face_type_str(f));
        out.push_back(Json{{"name", entry.name},
                           {"edges", std::move(edges)},
                           {"faces", std::move(faces)},
                           {"volume", to_json(entry.volume)},
                           {"dehn", to_json(entry.dehn)}});
    }
    return out;
}

} // namespace goldentiles
