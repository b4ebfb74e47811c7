#include "goldentiles/checks.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <sstream>

#include "goldentiles/constants.hpp"
#include "goldentiles/crs.hpp"
#include "goldentiles/mosseri_sadoc.hpp"
#include "goldentiles/numeric.hpp"
#include "goldentiles/polyhedra.hpp"

namespace goldentiles {

namespace C = constants;

InvariantSystem golden_invariant_system() {
    InvariantSystem sys;
    sys.n = 6;
    sys.volume_vec = C::twelve_volumes();
    std::vector<GoldenNumber> beta, delta;
    for (const auto& d : C::dehn_table()) {
        beta.push_back(d.beta);
        delta.push_back(d.delta);
    }
    sys.dehn_vecs = {std::move(beta), std::move(delta)};
    sys.lambda = GoldenNumber::tau();
    sys.rationality_hypothesis = true;
    return sys;
}

InvariantSystem tile_invariant_system() {
    InvariantSystem sys;
    sys.n = 4;
    sys.volume_vec = C::twelve_volumes_tiles();
    sys.dehn_vecs = {C::tile_dehn_factors()};
    sys.lambda = GoldenNumber::tau();
    sys.rationality_hypothesis = true;
    return sys;
}

namespace {

struct CheckBody {
    std::string id;
    std::string description;
    std::string statement;
    // Returns pass/fail; may fill details either way. Throwing means "error".
    std::function<bool(Json&)> run;
};

// Exact golden matrix × golden vector.
std::vector<GoldenNumber> mat_apply(const GoldenMatrix& m, const std::vector<GoldenNumber>& v) {
    std::vector<GoldenNumber> out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        GoldenNumber acc;
        for (size_t j = 0; j < m.cols(); ++j) acc = acc + m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

bool eigen_holds(const RationalMatrix& m, const std::vector<GoldenNumber>& v,
                 const GoldenNumber& factor) {
    const auto lhs = mat_apply(to_golden(m), v);
    for (size_t i = 0; i < v.size(); ++i)
        if (!(lhs[i] == factor * v[i])) return false;
    return true;
}

std::string golden_str_local(const GoldenNumber& g) {
    return rational_str(g.a) + (g.b >= 0 ? "+" : "") + rational_str(g.b) + "*tau";
}

std::vector<CheckBody> make_checks(const CheckOptions& options) {
    std::vector<CheckBody> checks;

    checks.push_back({"enumeration-classes",
                      "Enumerate all unit/long edge assignments up to relabeling",
                      "classification of golden tetrahedra: seven classes, one flat",
                      [](Json& details) {
                          const auto classes = enumerate_golden_tetrahedra();
                          int flat = 0;
                          for (const auto& t : classes)
                              if (cm_volume(t).is_zero()) ++flat;
                          details["classes"] = classes.size();
                          details["flat"] = flat;
                          return classes.size() == 7 && flat == 1;
                      }});

    checks.push_back({"catalog-volumes",
                      "Exact volumes of the six catalogued tetrahedra",
                      "volume table of the six golden tetrahedra",
                      [](Json& details) {
                          const auto catalog = build_catalog();
                          const GoldenNumber twelve(12);
                          bool ok = catalog.size() == 6;
                          Json vols = Json::array();
                          for (size_t i = 0; i < catalog.size() && ok; ++i) {
                              const GoldenNumber v12 = twelve * catalog[i].volume;
                              vols.push_back(golden_str_local(v12));
                              ok = catalog[i].name == C::tetrahedron_names()[i] &&
                                   v12 == C::twelve_volumes()[i];
                          }
                          details["twelve_volumes"] = vols;
                          return ok;
                      }});

    checks.push_back({"catalog-dehn",
                      "Dehn invariants computed from dihedral angles, not transcribed",
                      "Dehn invariant table of the six golden tetrahedra",
                      [](Json& details) {
                          const auto catalog = build_catalog();
                          bool ok = catalog.size() == 6;
                          for (size_t i = 0; i < catalog.size() && ok; ++i)
                              ok = catalog[i].dehn == C::dehn_table()[i];
                          details["entries"] = catalog.size();
                          return ok;
                      }});

    checks.push_back({"angle-identities",
                      "The two exact linear relations among the lateral angles",
                      "two angle relations: a+c+2b and a-c+2d are both flat",
                      [](Json& details) {
                          const auto& t = GoldenAngleTable::instance();
                          const auto two_beta = cos_sin_product(t.beta(), t.beta());
                          const auto two_delta = cos_sin_product(t.delta(), t.delta());
                          const auto first =
                              cos_sin_product(cos_sin_product(t.alpha(), t.gamma()), two_beta);
                          const auto second = cos_sin_product(
                              cos_sin_product(t.alpha(), cos_sin_conjugate(t.gamma())), two_delta);
                          const TowerElement minus_one = TowerElement::of(GoldenNumber(-1));
                          const bool table_ok = first.c == minus_one && first.s.is_zero() &&
                                                second.c == minus_one && second.s.is_zero();
                          const AngleExpr e1 = AngleExpr::alpha() + AngleExpr::gamma() +
                                               AngleExpr::beta() + AngleExpr::beta();
                          const AngleExpr e2 = AngleExpr::alpha() - AngleExpr::gamma() +
                                               AngleExpr::delta() + AngleExpr::delta();
                          const bool expr_ok = exact_cos(e1) == minus_one && exact_cos(e2) == minus_one;
                          details["table_products"] = table_ok;
                          details["expression_cosines"] = expr_ok;
                          return table_ok && expr_ok;
                      }});

    checks.push_back({"angle-identification",
                      "Round-trip numeric identification of lattice angles",
                      "recognition of angles in the pi/b/d lattice",
                      [](Json& details) {
                          const auto& t = GoldenAngleTable::instance();
                          bool ok = identify_angle(t.alpha().c) == AngleExpr::alpha() &&
                                    identify_angle(t.beta().c) == AngleExpr::beta() &&
                                    identify_angle(t.gamma().c) == AngleExpr::gamma() &&
                                    identify_angle(t.delta().c) == AngleExpr::delta() &&
                                    identify_angle(TowerElement{}) == AngleExpr::pi_over_2();
                          int roundtrips = 0;
                          for (long q2 = 0; q2 <= 2 && ok; ++q2)
                              for (long m = -2; m <= 2 && ok; ++m)
                                  for (long n = -2; n <= 2 && ok; ++n) {
                                      const AngleExpr e(Rational(q2) / 2, Rational(m),
                                                        Rational(n));
                                      const auto cs = exact_cos_sin(e);
                                      const Real x = atan2(to_real(cs.s), to_real(cs.c));
                                      if (x <= Real("1e-9") || x >= real_pi() - Real("1e-9"))
                                          continue;
                                      const AngleExpr found = identify_angle(cs.c);
                                      ok = exact_cos(found) == cs.c;
                                      ++roundtrips;
                                  }
                          details["lattice_roundtrips"] = roundtrips;
                          return ok;
                      }});

    checks.push_back({"reconstruction-gt",
                      "Reconstruct the 6x6 inflation matrix from invariants",
                      "unique reconstruction of the six-tile volume inflation matrix",
                      [](Json& details) {
                          const auto sys = golden_invariant_system();
                          const auto [x, y] = assemble_constraints(sys);
                          const bool xy_ok = x == C::x_gt() && y == C::y_gt();
                          const RationalMatrix m = reconstruct_matrix(sys);
                          const bool m_ok = m == C::m_gt();
                          const GoldenNumber tau3(1, 2), tau(0, 1);
                          bool eigen = eigen_holds(m, sys.volume_vec, tau3);
                          for (const auto& d : sys.dehn_vecs)
                              eigen = eigen && eigen_holds(m, d, tau);
                          details["constraints_match"] = xy_ok;
                          details["matrix_matches"] = m_ok;
                          details["eigen_relations"] = eigen;
                          return xy_ok && m_ok && eigen;
                      }});

    checks.push_back({"reconstruction-ms",
                      "Reconstruct the 4x4 tile inflation matrix from invariants",
                      "unique reconstruction of the four-tile inflation matrix",
                      [](Json& details) {
                          const auto sys = tile_invariant_system();
                          const auto [x, y] = assemble_constraints(sys);
                          const bool xy_ok = x == C::x_ms() && y == C::y_ms();
                          const RationalMatrix m = reconstruct_matrix(sys);
                          const bool m_ok = m == C::m_ms();
                          const GoldenNumber tau3(1, 2), tau(0, 1);
                          const bool eigen = eigen_holds(m, sys.volume_vec, tau3) &&
                                             eigen_holds(m, sys.dehn_vecs[0], tau);
                          details["constraints_match"] = xy_ok;
                          details["matrix_matches"] = m_ok;
                          details["eigen_relations"] = eigen;
                          return xy_ok && m_ok && eigen;
                      }});

    checks.push_back({"matrix-powers",
                      "Second and third powers; characteristic polynomial",
                      "exact square and cube of the inflation matrix; char poly vanishes",
                      [](Json& details) {
                          const bool sq = matrix_power(C::m_gt(), 2) == C::m_gt_squared();
                          const bool cu = matrix_power(C::m_gt(), 3) == C::m_gt_cubed();
                          const bool chi = char_poly_vanishes(C::m_gt());
                          details["square_matches"] = sq;
                          details["cube_matches"] = cu;
                          details["char_poly_vanishes"] = chi;
                          return sq && cu && chi;
                      }});

    checks.push_back({"integrality-spectrum",
                      "Integer powers occur exactly at multiples of three",
                      "integrality pattern of inflation-matrix powers",
                      [](Json& details) {
                          const auto spec = integrality_spectrum(C::m_gt(), 30);
                          bool ok = true;
                          Json integer_ks = Json::array();
                          for (const auto& [k, is_int] : spec) {
                              if (is_int) integer_ks.push_back(k);
                              ok = ok && (is_int == (k % 3 == 0));
                          }
                          details["integer_powers"] = integer_ks;
                          return ok;
                      }});

    checks.push_back({"fibonacci-powers",
                      "Power closed form with Fibonacci coefficients, n = 1..15",
                      "matrix powers expressed in the cubic basis with Fibonacci data",
                      [](Json& details) {
                          bool ok = true;
                          for (unsigned n = 1; n <= 15; ++n)
                              ok = ok && fibonacci_power_check(C::m_gt(), n);
                          details["max_n"] = 15;
                          return ok;
                      }});

    checks.push_back({"covering-brute-force",
                      "Exhaustive exact search refutes scaled-tile coverings, k = 1..8",
                      "no covering equation exists for powers one through eight",
                      [](Json& details) {
                          bool ok = true;
                          Json nodes = Json::array();
                          for (unsigned k = 1; k <= 8; ++k) {
                              const auto res = covering_brute_force(k);
                              nodes.push_back(res.nodes);
                              ok = ok && !res.solution.has_value();
                          }
                          details["nodes"] = nodes;
                          return ok;
                      }});

    checks.push_back({"covering-certificates",
                      "Certificate functional refutes coverings for k up to 100",
                      "certified impossibility of covering equations for all k",
                      [](Json& details) {
                          bool ok = true;
                          for (unsigned k = 1; k <= 100; ++k) {
                              const auto cert = covering_certificate(k);
                              ok = ok && cert.conclusion == 0;
                              for (size_t i = 0; i < cert.psi.size(); ++i)
                                  ok = ok &&
                                       cert.psi[i] == fibonacci_number(2 * unsigned(i) + 2);
                          }
                          details["max_k"] = 100;
                          return ok;
                      }});

    checks.push_back({"area-covering",
                      "The face-area analogue of the covering equation fails",
                      "two-dimensional scaled-face covering equations are unsatisfiable",
                      [](Json& details) {
                          const auto mixed = area_covering_decide({}, {1}, {});
                          const auto scale = area_covering_decide({0, 1}, {}, {});
                          details["mixed_rejected"] =
                              mixed.status == AreaCoveringStatus::mixed_triangles_present;
                          details["scale_value"] = golden_str_local(scale.p1_value);
                          return mixed.status == AreaCoveringStatus::mixed_triangles_present &&
                                 scale.status == AreaCoveringStatus::scale_equation_unsatisfied;
                      }});

    checks.push_back({"ms-tile-invariants",
                      "Composite tile volumes and Dehn invariants by additivity",
                      "volume and Dehn tables of the four composite tiles and their halves",
                      [](Json& details) {
                          const auto catalog = build_catalog();
                          const auto inv = build_tile_invariants(catalog, packing_gt());
                          const auto inv5 = build_tile_invariants(catalog, packing_gt5());
                          const GoldenNumber twelfth(Rational(1, 12), Rational(0));
                          bool ok = true;
                          for (size_t j = 0; j < 4; ++j) {
                              const auto& name = C::tile_names()[j];
                              ok = ok &&
                                   inv.at(name).volume == twelfth * C::twelve_volumes_tiles()[j] &&
                                   inv.at(name).dehn == C::tile_dehn_table()[j] &&
                                   inv.at(name).dehn.beta == inv.at(name).dehn.delta;
                          }
                          const bool halves =
                              inv5.at("m").dehn + inv5.at("r").dehn == inv.at("h").dehn &&
                              inv5.at("m").volume + inv5.at("r").volume == inv.at("h").volume;
                          details["tiles_match"] = ok;
                          details["h_splits_into_m_r"] = halves;
                          return ok && halves;
                      }});

    checks.push_back({"ms-induced-operator",
                      "Operators induced on the tile basis through the packing maps",
                      "both packing maps induce the same four-tile inflation operator",
                      [](Json& details) {
                          const auto n1 = subspace_invariance(C::m_gt(), packing_gt());
                          const auto n2 = subspace_invariance(C::m_2f(), packing_2f());
                          const bool plain = n1 && *n1 == C::m_ms();
                          const bool colored = n2 && *n2 == to_golden(C::m_ms());
                          bool rejected = false;
                          try {
                              (void)subspace_invariance(C::m_gt(), packing_gt5());
                          } catch (const NotInjective&) {
                              rejected = true;
                          }
                          details["plain_map"] = plain;
                          details["colored_map"] = colored;
                          details["degenerate_map_rejected"] = rejected;
                          return plain && colored && rejected;
                      }});

    checks.push_back({"ms-five-tile",
                      "Five-tile system: kernel, singular matrix, aggregation",
                      "the five-tile matrix is singular and collapses onto the four-tile one",
                      [](Json& details) {
                          const auto rep = five_tile_analysis();
                          details["kernel_relation"] = rep.kernel_relation;
                          details["printed_matrix_singular"] = rep.printed_matrix_singular;
                          details["row_dependency"] = rep.row_dependency;
                          details["aggregation_matches"] = rep.aggregation_matches;
                          details["colored_induces_printed"] = rep.colored_induces_printed;
                          return rep.ok();
                      }});

    checks.push_back({"ms-colored-matrix",
                      "Colored 8x8 inflation matrix: checksums, eigenvector, intertwiner",
                      "the colored inflation matrix is consistent with every derived identity",
                      [options](Json& details) {
                          GoldenMatrix m = C::m_2f();
                          if (options.corrupt_m2f) m(0, 0) = m(0, 0) + GoldenNumber(1);
                          try {
                              const auto rep = t2f_checks(m);
                              details["all_identities"] = rep.ok();
                              return rep.ok();
                          } catch (const MatrixMismatch& e) {
                              details["mismatch"] = {{"row", e.row + 1},
                                                     {"col", e.col + 1},
                                                     {"what", e.what()}};
                              return false;
                          }
                      }});

    checks.push_back({"field-tower",
                      "Degree-8 tower: irreducibility, roots, automorphisms",
                      "structure of the quartic extension holding the exact trigonometry",
                      [](Json& details) {
                          const bool eis = eisenstein_criterion(C::rho_min_poly_coeffs(), 5);
                          bool roots = true;
                          for (const auto& r : C::rho_min_poly_roots())
                              roots = roots && poly_eval_tower(C::rho_min_poly_coeffs(), r).is_zero();
                          const TowerElement rho = TowerElement::rho();
                          const TowerElement tau = TowerElement::of(GoldenNumber::tau());
                          TowerElement r1 = sigma_auto(rho);
                          TowerElement r2 = sigma_auto(r1);
                          TowerElement r3 = sigma_auto(r2);
                          TowerElement r4 = sigma_auto(r3);
                          const bool order4 = r4 == rho && !(r2 == rho) && !(r1 == rho);
                          const bool fixed = sigma_auto(sigma_auto(tau)) == tau && r2 == -rho;
                          const bool no_sqrt3 = !is_square_in_qtau(GoldenNumber(3)).has_value();
                          const bool phi_fixes =
                              phi_auto(rho) == rho && phi_auto(tau) == tau &&
                              phi_auto(TowerElement::sqrt3()) == -TowerElement::sqrt3();
                          details["eisenstein_at_5"] = eis;
                          details["all_roots_vanish"] = roots;
                          details["sigma_order_4"] = order4;
                          details["sigma_sq_fixes_golden_line"] = fixed;
                          details["three_not_square"] = no_sqrt3;
                          details["phi_fixes_rho_block"] = phi_fixes;
                          return eis && roots && order4 && fixed && no_sqrt3 && phi_fixes;
                      }});

    checks.push_back({"crs-construction",
                      "Minimal solutions of the basis-angle equations",
                      "construction data of the two basis angles",
                      [](Json& details) {
                          const auto a51 = crs_construct(5, 1);
                          const auto a35 = crs_construct(3, 5);
                          const auto a27 = crs_construct(2, 7);
                          details["five_one"] = to_json(a51);
                          details["three_five"] = to_json(a35);
                          bool invalid_ok = false;
                          try {
                              (void)crs_construct(2, 3);
                          } catch (const InvalidPair&) {
                              invalid_ok = true;
                          }
                          details["invalid_pair_rejected"] = invalid_ok;
                          return a51.s == 1 && a51.a == 2 && a51.b == 4 && a35.s == 2 &&
                                 a35.a == 4 && a35.b == 2 && a27.s == 1 && a27.a == 1 &&
                                 a27.b == 1 && invalid_ok;
                      }});

    checks.push_back({"crs-decompositions",
                      "Numeric confirmation of the two dihedral decompositions",
                      "the two tetrahedral dihedral angles decompose over the angle basis",
                      [](Json& details) {
                          const auto rep = verify_decompositions();
                          details["alpha_error"] = real_str(rep.alpha_error);
                          details["gamma_error"] = real_str(rep.gamma_error);
                          details["labels_distinct"] = rep.labels_distinct;
                          return rep.ok();
                      }});

    checks.push_back({"dehn-cube",
                      "The unit cube has vanishing Dehn invariant",
                      "vanishing Dehn invariant of the cube",
                      [](Json& details) {
                          ExactPolyhedron cube;
                          for (int i = 0; i < 12; ++i)
                              cube.edges.emplace_back(GoldenNumber(1), AngleExpr::pi_over_2());
                          cube.volume = GoldenNumber(1);
                          const DehnValue d = polyhedron_dehn(cube);
                          details["dehn_is_zero"] = d.is_zero();
                          return d.is_zero();
                      }});

    checks.push_back({"scissor-pair",
                      "Equal volumes with different Dehn invariants",
                      "two equal-volume tetrahedra that are not scissors equivalent",
                      [](Json& details) {
                          const auto catalog = build_catalog();
                          const CatalogEntry* c = nullptr;
                          const CatalogEntry* f = nullptr;
                          for (const auto& e : catalog) {
                              if (e.name == "C*") c = &e;
                              if (e.name == "F*") f = &e;
                          }
                          if (!c || !f) return false;
                          const bool same_volume = c->volume == f->volume;
                          const bool equivalent = scissor_equivalent(SydlerPair{c->volume, c->dehn},
                                                                     SydlerPair{f->volume, f->dehn});
                          details["same_volume"] = same_volume;
                          details["scissor_equivalent"] = equivalent;
                          return same_volume && !equivalent;
                      }});

    return checks;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

Report run_all_checks(const CheckOptions& options) {
    Report report;
    report.version = kVersion;
    report.generated_at = timestamp_utc();
    for (auto& body : make_checks(options)) {
        CheckResult result;
        result.id = body.id;
        result.description = body.description;
        result.statement = body.statement;
        try {
            const bool ok = body.run(result.details);
            result.status = ok ? "pass" : "fail";
        } catch (const std::exception& e) {
            result.status = "error";
            result.details["exception"] = e.what();
        }
        if (result.status == "pass")
            ++report.pass;
        else if (result.status == "fail")
            ++report.fail;
        else
            ++report.error;
        report.checks.push_back(std::move(result));
    }
    return report;
}

Json report_to_json(const Report& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"id", c.id},
                              {"description", c.description},
                              {"status", c.status},
                              {"paper_ref", c.statement},
                              {"details", c.details}});
    return Json{{"version", report.version},
                {"generated_at", report.generated_at},
                {"checks", std::move(checks)},
                {"summary",
                 Json{{"pass", report.pass}, {"fail", report.fail}, {"error", report.error}}}};
}

Report report_from_json(const Json& j) {
    Report report;
    report.version = j.at("version").get<std::string>();
    report.generated_at = j.at("generated_at").get<std::string>();
    for (const auto& c : j.at("checks")) {
        CheckResult r;
        r.id = c.at("id").get<std::string>();
        r.description = c.at("description").get<std::string>();
        r.status = c.at("status").get<std::string>();
        r.statement = c.at("paper_ref").get<std::string>();
        r.details = c.at("details");
        report.checks.push_back(std::move(r));
    }
    report.pass = j.at("summary").at("pass").get<int>();
    report.fail = j.at("summary").at("fail").get<int>();
    report.error = j.at("summary").at("error").get<int>();
    return report;
}

std::string report_to_markdown(const Report& report) {
    std::ostringstream out;
    out << "# Verification report\n\n";
    out << "Version " << report.version << ", generated " << report.generated_at << "\n\n";
    out << "| check | status | statement |\n|---|---|---|\n";
    for (const auto& c : report.checks)
        out << "| " << c.id << " | " << c.status << " | " << c.statement << " |\n";
    out << "\n**" << report.pass << " passed, " << report.fail << " failed, " << report.error
        << " errored.**\n";
    return out.str();
}

} // namespace goldentiles
