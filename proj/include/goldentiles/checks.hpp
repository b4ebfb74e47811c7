#pragma once

#include <string>
#include <vector>

#include "goldentiles/inflation.hpp"
#include "goldentiles/serialization.hpp"

namespace goldentiles {

/// Library version reported by the CLI and embedded in reports.
inline constexpr const char* kVersion = "1.0.0";

/// Outcome of one verification check. `statement` names the mathematical
/// fact being verified; it is serialized under the report schema's
/// "paper_ref" key.
struct CheckResult {
    std::string id;
    std::string description;
    std::string status;  // "pass" | "fail" | "error"
    std::string statement;
    Json details = Json::object();
    bool operator==(const CheckResult&) const = default;
};

struct Report {
    std::string version;
    std::string generated_at;  // ISO-8601 UTC timestamp
    std::vector<CheckResult> checks;
    int pass = 0, fail = 0, error = 0;
    bool all_passed() const { return fail == 0 && error == 0; }
    bool operator==(const Report&) const = default;
};

struct CheckOptions {
    /// Corrupt one pinned entry of the colored 8×8 matrix before checking it
    /// (self-test hook proving the negative path reports a failure).
    bool corrupt_m2f = false;
};

/// Run the complete verification suite in a fixed check order.
Report run_all_checks(const CheckOptions& options = {});

Json report_to_json(const Report& report);
Report report_from_json(const Json& j);
std::string report_to_markdown(const Report& report);

/// Eigen-data systems used by the matrix reconstructions.
InvariantSystem golden_invariant_system();  // six tetrahedra, λ = τ
InvariantSystem tile_invariant_system();    // four composite tiles, λ = τ

} // namespace goldentiles
