// Command-line front end for the goldentiles library: verification suite,
// invariant computation for user-supplied polyhedra, matrix reconstruction,
// covering certificates, and field-tower inspection.
//
// Exit codes: 0 success / all checks pass, 1 at least one check failed,
// 2 usage or input error (with a diagnostic on stderr).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goldentiles/checks.hpp"
#include "goldentiles/constants.hpp"
#include "goldentiles/crs.hpp"
#include "goldentiles/errors.hpp"
#include "goldentiles/inflation.hpp"
#include "goldentiles/mosseri_sadoc.hpp"
#include "goldentiles/numeric.hpp"
#include "goldentiles/polyhedra.hpp"
#include "goldentiles/serialization.hpp"

using namespace goldentiles;
namespace C = constants;

namespace {

enum class Format { markdown, json };

// Exact value followed by its 15-digit decimal.
std::string num(const GoldenNumber& g) { return golden_str(g) + " = " + real_str(to_real(g)); }

std::string dehn_full(const DehnValue& d) {
    return dehn_str(d) + "   [β: " + real_str(to_real(d.beta)) +
           ", δ: " + real_str(to_real(d.delta)) + "]";
}

void print_matrix(const RationalMatrix& m, const std::string& title) {
    std::cout << title << " (" << m.rows() << "x" << m.cols() << "):\n";
    for (size_t i = 0; i < m.rows(); ++i) {
        std::cout << "  [";
        for (size_t j = 0; j < m.cols(); ++j)
            std::cout << (j ? ", " : " ") << rational_str(m(i, j));
        std::cout << " ]\n";
    }
}

int cmd_catalog(Format format) {
    const auto catalog = build_catalog();
    if (format == Format::json) {
        std::cout << catalog_to_json().dump(2) << "\n";
        return 0;
    }
    std::cout << "# Golden tetrahedra catalog\n\n";
    std::cout << "| name | faces | volume | 12·volume | Dehn invariant |\n|---|---|---|---|---|\n";
    for (const auto& e : catalog) {
        std::cout << "| " << e.name << " | ";
        for (size_t i = 0; i < e.faces.size(); ++i)
            std::cout << (i ? "," : "") << face_type_str(e.faces[i]);
        std::cout << " | " << num(e.volume) << " | " << golden_str(GoldenNumber(12) * e.volume)
                  << " | " << dehn_str(e.dehn) << " |\n";
    }
    std::cout << "\nEdge lists (length, dihedral angle):\n";
    for (const auto& e : catalog) {
        std::cout << "  " << e.name << ":";
        for (size_t i = 0; i < 6; ++i)
            std::cout << "  (" << golden_str(e.spec.edges[i]) << ", "
                      << angle_str(e.edge_angles[i]) << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_volumes(Format format) {
    const auto catalog = build_catalog();
    if (format == Format::json) {
        Json arr = Json::array();
        for (const auto& e : catalog)
            arr.push_back(Json{{"name", e.name},
                               {"volume", to_json(e.volume)},
                               {"twelve_volume", to_json(GoldenNumber(12) * e.volume)},
                               {"volume_decimal", real_str(to_real(e.volume))}});
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << "# Exact volumes\n\n| name | volume | 12·volume | decimal |\n|---|---|---|---|\n";
    for (const auto& e : catalog)
        std::cout << "| " << e.name << " | " << golden_str(e.volume) << " | "
                  << golden_str(GoldenNumber(12) * e.volume) << " | "
                  << real_str(to_real(e.volume)) << " |\n";
    return 0;
}

int cmd_dehn(Format format, const std::string& path) {
    const ExactPolyhedron p = load_polyhedron(path);
    const DehnValue d = polyhedron_dehn(p);
    if (format == Format::json) {
        Json out{{"input", path}, {"dehn", to_json(d)},
                 {"dehn_decimal",
                  Json{{"beta", real_str(to_real(d.beta))}, {"delta", real_str(to_real(d.delta))}}},
                 {"edges", p.edges.size()}};
        if (p.volume) {
            out["volume"] = to_json(*p.volume);
            out["volume_decimal"] = real_str(to_real(*p.volume));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "Polyhedron: " << path << " (" << p.edges.size() << " edges)\n";
    std::cout << "Dehn invariant: " << dehn_full(d) << "\n";
    if (d.is_zero()) std::cout << "The Dehn invariant vanishes.\n";
    if (p.volume) {
        std::cout << "Volume: " << num(*p.volume) << "\n";
        std::cout << "Sydler pair (volume, Dehn) shown above classifies the polyhedron up to "
                     "scissors equivalence.\n";
    }
    return 0;
}

int cmd_reconstruct(Format format, const std::string& set, bool check_eigen) {
    const InvariantSystem sys =
        (set == "gt") ? golden_invariant_system() : tile_invariant_system();
    const auto [x, y] = assemble_constraints(sys);
    const RationalMatrix m = reconstruct_matrix(sys);

    bool eigen_ok = true;
    if (check_eigen) {
        const GoldenMatrix gm = to_golden(m);
        const GoldenNumber tau3(1, 2), tau(0, 1);
        auto holds = [&](const std::vector<GoldenNumber>& v, const GoldenNumber& factor) {
            for (size_t i = 0; i < v.size(); ++i) {
                GoldenNumber acc;
                for (size_t j = 0; j < v.size(); ++j) acc = acc + gm(i, j) * v[j];
                if (!(acc == factor * v[i])) return false;
            }
            return true;
        };
        eigen_ok = holds(sys.volume_vec, tau3);
        for (const auto& dv : sys.dehn_vecs) eigen_ok = eigen_ok && holds(dv, tau);
    }

    if (format == Format::json) {
        Json out{{"set", set},
                 {"constraints", Json{{"x", to_json(x)}, {"y", to_json(y)}}},
                 {"matrix", to_json(m)}};
        if (check_eigen) out["eigen_relations_verified"] = eigen_ok;
        std::cout << out.dump(2) << "\n";
        return eigen_ok ? 0 : 1;
    }
    std::cout << "# Reconstruction of the " << (set == "gt" ? "six-tetrahedron" : "four-tile")
              << " inflation matrix\n\n";
    std::cout << "Invariant vectors: volume eigenvector (factor τ³ = " << num(GoldenNumber(1, 2))
              << ")\nand " << sys.dehn_vecs.size()
              << " Dehn component vector(s) (factor τ = " << num(GoldenNumber(0, 1)) << ").\n\n";
    print_matrix(x, "Constraint matrix X (unknown-side)");
    print_matrix(y, "Constraint matrix Y (value-side)");
    print_matrix(m, "Reconstructed matrix");
    if (check_eigen)
        std::cout << "Eigen-relations over Q[τ]: " << (eigen_ok ? "verified exactly" : "FAILED")
                  << "\n";
    return eigen_ok ? 0 : 1;
}

int cmd_power(Format format, unsigned k) {
    const RationalMatrix p = matrix_power(C::m_gt(), k);
    bool integral = true;
    for (size_t i = 0; i < p.rows() && integral; ++i)
        for (size_t j = 0; j < p.cols() && integral; ++j)
            integral = boost::multiprecision::denominator(p(i, j)) == 1;
    if (format == Format::json) {
        std::cout << Json{{"k", k}, {"matrix", to_json(p)}, {"integral", integral}}.dump(2)
                  << "\n";
        return 0;
    }
    print_matrix(p, "Inflation matrix to the power " + std::to_string(k));
    std::cout << "All entries integral: " << (integral ? "yes" : "no") << "\n";
    return 0;
}

int cmd_integrality(Format format, unsigned kmax) {
    const auto spec = integrality_spectrum(C::m_gt(), kmax);
    if (format == Format::json) {
        Json arr = Json::array();
        for (const auto& [k, is_int] : spec) arr.push_back(Json{{"k", k}, {"integral", is_int}});
        std::cout << Json{{"kmax", kmax}, {"spectrum", arr}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "Integrality of matrix powers, k = 1.." << kmax << ":\n";
    for (const auto& [k, is_int] : spec)
        std::cout << "  k = " << k << ": " << (is_int ? "integral" : "non-integral") << "\n";
    std::cout << "Integral exactly at multiples of three.\n";
    return 0;
}

int cmd_covering(Format format, unsigned k, const std::string& method) {
    if (method == "brute") {
        const auto res = covering_brute_force(k);
        if (format == Format::json) {
            Json out{{"k", k}, {"nodes", res.nodes}, {"solution_found", res.solution.has_value()}};
            if (res.solution) out["solution"] = *res.solution;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "Exhaustive exact search for a covering equation at k = " << k << ":\n";
            std::cout << "  nodes visited: " << res.nodes << "\n";
            std::cout << (res.solution ? "  a solution was found (unexpected)"
                                       : "  no solution exists")
                      << "\n";
        }
        return res.solution ? 1 : 0;
    }
    const auto cert = covering_certificate(k);
    if (format == Format::json) {
        std::cout << to_json(cert).dump(2) << "\n";
        return 0;
    }
    std::cout << "Impossibility certificate for the covering equation at k = " << k << ":\n";
    std::cout << "  functional values ψ₀..ψ_" << (cert.psi.size() - 1) << ":";
    for (const auto& v : cert.psi) std::cout << " " << v;
    std::cout << "\n  conclusion value (must be 0): " << cert.conclusion << "\n";
    std::cout << "  " << cert.note << "\n";
    return 0;
}

int cmd_fields(Format format) {
    const auto& coeffs = C::rho_min_poly_coeffs();
    const bool eis = eisenstein_criterion(coeffs, 5);
    const auto& roots = C::rho_min_poly_roots();
    bool roots_ok = true;
    for (const auto& r : roots) roots_ok = roots_ok && poly_eval_tower(coeffs, r).is_zero();
    const TowerElement rho = TowerElement::rho();
    TowerElement s1 = sigma_auto(rho), s2 = sigma_auto(s1), s3 = sigma_auto(s2),
                 s4 = sigma_auto(s3);
    const bool order4 = s4 == rho && !(s2 == rho);
    const bool square3 = is_square_in_qtau(GoldenNumber(3)).has_value();

    if (format == Format::json) {
        Json root_arr = Json::array();
        for (const auto& r : roots) root_arr.push_back(to_json(r));
        std::cout << Json{{"minimal_polynomial", "x^4 - 5x^2 + 5"},
                          {"eisenstein_prime", 5},
                          {"eisenstein_applies", eis},
                          {"roots", root_arr},
                          {"all_roots_vanish", roots_ok},
                          {"sigma_order", 4},
                          {"sigma_order_verified", order4},
                          {"three_is_square_in_golden_field", square3}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "# Field tower Q[τ] ⊂ Q[τ,ρ] ⊂ Q[τ,ρ,√3], ρ = √(τ+2)\n\n";
    std::cout << "Minimal polynomial of ρ over Q: x⁴ − 5x² + 5 (Eisenstein at 5: "
              << (eis ? "applies" : "fails") << ")\n";
    std::cout << "Roots in the tower (all vanish exactly: " << (roots_ok ? "yes" : "NO") << "):\n";
    for (const auto& r : roots) std::cout << "  " << tower_str(r) << "\n";
    std::cout << "σ: ρ ↦ ρ·(τ−1), order " << (order4 ? 4 : 0)
              << "; σ² fixes 1 and τ, negates ρ and τ·ρ.\n";
    std::cout << "φ: fixes the Q[τ,ρ] block pointwise, negates √3.\n";
    std::cout << "3 is " << (square3 ? "" : "not ") << "a square in Q[τ] — √3 genuinely "
              << "enlarges the field.\n";
    if (const auto r = tower_sqrt_of_golden(GoldenNumber(2, 1)))
        std::cout << "√(τ+2) exists in the tower: " << tower_str(*r) << "\n";
    std::cout << "Working precision: " << precision_bits() << " bits\n";
    return 0;
}

int cmd_crs(Format format, std::optional<long> p, std::optional<long> d) {
    if (p.has_value() != d.has_value())
        throw std::invalid_argument("crs: --p and --d must be given together");
    if (p) {
        const CrsAngle a = crs_construct(*p, *d);
        if (format == Format::json) {
            std::cout << to_json(a).dump(2) << "\n";
        } else {
            std::cout << "⟨" << a.p << "⟩_" << a.d << ": s = " << a.s << ", a = " << a.a
                      << ", b = " << a.b << "\n";
            std::cout << "  4·" << a.p << "^" << a.s << " = " << a.a << "² + " << a.d << "·"
                      << a.b << "²\n";
            std::cout << "  value = arccos(a / (2·p^{s/2})) / s = " << real_str(a.value) << "\n";
        }
        return 0;
    }
    const auto a51 = crs_construct(5, 1);
    const auto a35 = crs_construct(3, 5);
    const auto rep = verify_decompositions();
    if (format == Format::json) {
        std::cout << Json{{"five_one", to_json(a51)},
                          {"three_five", to_json(a35)},
                          {"alpha_minus_five_one_error", real_str(rep.alpha_error)},
                          {"gamma_decomposition_error", real_str(rep.gamma_error)},
                          {"labels_distinct", rep.labels_distinct},
                          {"ok", rep.ok()}}
                         .dump(2)
                  << "\n";
        return rep.ok() ? 0 : 1;
    }
    std::cout << "# Basis angles and dihedral decompositions\n\n";
    std::cout << "⟨5⟩₁: s=" << a51.s << " a=" << a51.a << " b=" << a51.b
              << "  value = " << real_str(a51.value) << "\n";
    std::cout << "⟨3⟩₅: s=" << a35.s << " a=" << a35.a << " b=" << a35.b
              << "  value = " << real_str(a35.value) << "\n";
    std::cout << "α = ⟨5⟩₁ exactly; numeric residual " << real_str(rep.alpha_error) << "\n";
    std::cout << "γ = π/2 − 2·⟨3⟩₅; numeric residual " << real_str(rep.gamma_error) << "\n";
    std::cout << (rep.ok() ? "Both decompositions confirmed.\n" : "Decomposition check FAILED.\n");
    return rep.ok() ? 0 : 1;
}

int cmd_equivalent(Format format, const std::string& path1, const std::string& path2) {
    const ExactPolyhedron p1 = load_polyhedron(path1);
    const ExactPolyhedron p2 = load_polyhedron(path2);
    if (!p1.volume || !p2.volume)
        throw std::invalid_argument(
            "equivalent: both polyhedron files must carry a \"volume\" field");
    const DehnValue d1 = polyhedron_dehn(p1);
    const DehnValue d2 = polyhedron_dehn(p2);
    const bool eq = scissor_equivalent(SydlerPair{*p1.volume, d1}, SydlerPair{*p2.volume, d2});
    if (format == Format::json) {
        std::cout << Json{{"first", Json{{"path", path1},
                                         {"volume", to_json(*p1.volume)},
                                         {"dehn", to_json(d1)}}},
                          {"second", Json{{"path", path2},
                                          {"volume", to_json(*p2.volume)},
                                          {"dehn", to_json(d2)}}},
                          {"scissors_equivalent", eq}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "First:  " << path1 << "  volume " << num(*p1.volume) << "\n        Dehn "
              << dehn_full(d1) << "\n";
    std::cout << "Second: " << path2 << "  volume " << num(*p2.volume) << "\n        Dehn "
              << dehn_full(d2) << "\n";
    std::cout << "Scissors equivalent: " << (eq ? "yes" : "no")
              << (eq ? " (equal volume and equal Dehn invariant)"
                     : (p1.volume == p2.volume ? " (equal volume but different Dehn invariants)"
                                               : " (volumes differ)"))
              << "\n";
    return 0;
}

int cmd_verify_all(Format format, bool corrupt_m2f) {
    CheckOptions options;
    options.corrupt_m2f = corrupt_m2f;
    const Report report = run_all_checks(options);
    if (format == Format::json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_markdown(report);
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    init_precision();
    CLI::App app{"goldentiles — exact invariants, inflation matrices, and verification\n"
                 "for the golden-tetrahedra tiling family"};
    app.require_subcommand(1);

    std::string format_name = "markdown";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"markdown", "json"}))
        ->capture_default_str();

    auto* sc_catalog = app.add_subcommand("catalog", "Six golden tetrahedra with exact data");
    auto* sc_volumes = app.add_subcommand("volumes", "Exact volume table");
    auto* sc_dehn = app.add_subcommand("dehn", "Dehn invariant of a polyhedron JSON file");
    std::string dehn_path;
    sc_dehn->add_option("file", dehn_path, "Polyhedron JSON file")->required();

    auto* sc_rec = app.add_subcommand("reconstruct", "Rebuild an inflation matrix from invariants");
    std::string rec_set = "gt";
    bool rec_eigen = false;
    sc_rec->add_option("--set", rec_set, "Which system: gt (6 tetrahedra) or ms (4 tiles)")
        ->check(CLI::IsMember({"gt", "ms"}))
        ->capture_default_str();
    sc_rec->add_flag("--check-eigen", rec_eigen, "Re-verify the eigen-relations over Q[τ]");

    auto* sc_power = app.add_subcommand("power", "Exact power of the six-tetrahedron matrix");
    unsigned power_k = 2;
    sc_power->add_option("--k", power_k, "Exponent")->required();

    auto* sc_integ = app.add_subcommand("integrality", "Which powers are integer matrices");
    unsigned integ_kmax = 30;
    sc_integ->add_option("--kmax", integ_kmax, "Largest exponent to test")->capture_default_str();

    auto* sc_cov = app.add_subcommand("covering", "Covering-equation impossibility for σ = τ²");
    unsigned cov_k = 0;
    std::string cov_method = "certificate";
    sc_cov->add_option("--k", cov_k, "Power k in σ^k = Σ αᵢσ^i")->required();
    sc_cov->add_option("--method", cov_method, "certificate (any k) or brute (exhaustive, k ≤ 8)")
        ->check(CLI::IsMember({"certificate", "brute"}))
        ->capture_default_str();

    auto* sc_fields = app.add_subcommand("fields", "Structure of the degree-8 field tower");

    auto* sc_crs = app.add_subcommand("crs", "Pure-geodetic basis angles ⟨p⟩_d");
    long crs_p = 0, crs_d = 0;
    auto* opt_p = sc_crs->add_option("--p", crs_p, "Prime p");
    auto* opt_d = sc_crs->add_option("--d", crs_d, "Squarefree d with −d a residue mod p");

    auto* sc_eq = app.add_subcommand("equivalent", "Scissors equivalence of two polyhedra");
    std::string eq_path1, eq_path2;
    sc_eq->add_option("first", eq_path1, "First polyhedron JSON")->required();
    sc_eq->add_option("second", eq_path2, "Second polyhedron JSON")->required();

    auto* sc_verify = app.add_subcommand("verify-all", "Run the complete verification suite");
    bool corrupt_m2f = false;
    sc_verify->add_flag("--selftest-corrupt-m2f", corrupt_m2f)->group(""); // hidden test hook

    // Let "--format" be written after the subcommand name as well.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format format = (format_name == "json") ? Format::json : Format::markdown;

    try {
        if (app.got_subcommand(sc_catalog)) return cmd_catalog(format);
        if (app.got_subcommand(sc_volumes)) return cmd_volumes(format);
        if (app.got_subcommand(sc_dehn)) return cmd_dehn(format, dehn_path);
        if (app.got_subcommand(sc_rec)) return cmd_reconstruct(format, rec_set, rec_eigen);
        if (app.got_subcommand(sc_power)) return cmd_power(format, power_k);
        if (app.got_subcommand(sc_integ)) return cmd_integrality(format, integ_kmax);
        if (app.got_subcommand(sc_cov)) return cmd_covering(format, cov_k, cov_method);
        if (app.got_subcommand(sc_fields)) return cmd_fields(format);
        if (app.got_subcommand(sc_crs))
            return cmd_crs(format,
                           opt_p->count() ? std::optional<long>(crs_p) : std::nullopt,
                           opt_d->count() ? std::optional<long>(crs_d) : std::nullopt);
        if (app.got_subcommand(sc_eq)) return cmd_equivalent(format, eq_path1, eq_path2);
        if (app.got_subcommand(sc_verify)) return cmd_verify_all(format, corrupt_m2f);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidPair& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const SearchTooLarge& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable: require_subcommand guarantees a branch above
}
