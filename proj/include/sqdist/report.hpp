#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "sqdist/closed_forms.hpp"
#include "sqdist/graph.hpp"
#include "sqdist/linalg.hpp"
#include "sqdist/spectral.hpp"
#include "sqdist/verify.hpp"

namespace sqdist {

using json = nlohmann::json;

inline json shape_to_json(const Shape& shape) {
    return json(shape.parts);
}

inline json inertia_to_json(const Inertia& in) {
    return json::array({in.positive, in.zero, in.negative});
}

inline json bracket_to_json(const RootBracket& bracket) {
    return json{{"lo", to_string(bracket.lo)}, {"hi", to_string(bracket.hi)}};
}

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const Rational& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

// Everything `analyze` prints for one shape. Null fields appear exactly
// when the inverse-decomposition preconditions fail (S(1,1) or b = 1).
struct AnalysisReport {
    Shape shape;  // canonical
    int n = 0;
    int b = 0;
    Rational det_delta;
    Rational det_delta22;
    Rational cof_delta;
    Rational cof_delta22;
    Poly charpoly_delta;
    Inertia inertia_delta;
    Inertia inertia_delta22;
    std::optional<Rational> lambda;
    std::optional<EtaVector> eta_vector;
    std::optional<Rational> cof_constant;
    std::optional<Inertia> laplacian_inertia;
    std::optional<std::string> note;
    RootBracket rho;
    CheckMap checks;

    bool all_checks_passed() const {
        for (const auto& [name, outcome] : checks)
            if (!outcome.all_passed()) return false;
        return true;
    }
};

inline AnalysisReport analyze_shape(const Shape& input, const Rational& width_limit,
                                    const FaultInjection& fault = {}) {
    AnalysisReport report;
    report.shape = input.canonical();
    const Shape& shape = report.shape;
    report.n = shape.vertex_count();
    report.b = shape.block_count();
    report.det_delta = det_delta_closed(shape);
    report.det_delta22 = det_delta22_closed(shape);
    report.cof_delta = cof_delta_closed(shape);
    report.cof_delta22 = cof_delta22_closed(shape);
    report.charpoly_delta = charpoly_delta_closed(shape);
    report.inertia_delta = inertia_delta_closed(shape);
    report.inertia_delta22 = inertia_delta22_closed(shape);
    ScalarInvariants s = scalar_invariants(shape);
    if (report.b >= 2 && s.a2b != 0) {
        report.lambda = *s.lambda;
        report.eta_vector = eta(shape);
        report.cof_constant = cofactor_constant(shape);
        report.laplacian_inertia = inertia_congruence(laplacian_like(shape).l);
    } else if (s.a2b == 0) {
        report.note = "inverse undefined: S(1,1)";
    } else {
        report.note = "inverse decomposition requires b >= 2";
    }
    report.rho = spectral_radius(shape, width_limit);
    run_shape_checks(shape, report.checks, fault);
    run_balancing_checks(shape, report.checks);
    return report;
}

inline json analysis_to_json(const AnalysisReport& r) {
    json out;
    out["shape"] = shape_to_json(r.shape);
    out["n"] = r.n;
    out["b"] = r.b;
    out["det_delta"] = to_string(r.det_delta);
    out["det_delta22"] = to_string(r.det_delta22);
    out["cof_delta"] = to_string(r.cof_delta);
    out["cof_delta22"] = to_string(r.cof_delta22);
    out["charpoly_delta"] = poly_to_json(r.charpoly_delta);
    out["inertia_delta"] = inertia_to_json(r.inertia_delta);
    out["inertia_delta22"] = inertia_to_json(r.inertia_delta22);
    out["lambda"] = r.lambda ? json(to_string(*r.lambda)) : json(nullptr);
    if (r.eta_vector) {
        json arr = json::array();
        for (const Rational& e : r.eta_vector->entries) arr.push_back(to_string(e));
        out["eta"] = arr;
    } else {
        out["eta"] = nullptr;
    }
    out["cofactor_constant"] = r.cof_constant ? json(to_string(*r.cof_constant)) : json(nullptr);
    out["laplacian_inertia"] =
        r.laplacian_inertia ? inertia_to_json(*r.laplacian_inertia) : json(nullptr);
    if (r.note) out["note"] = *r.note;
    out["rho"] = bracket_to_json(r.rho);
    json checks = json::object();
    for (const auto& [name, outcome] : r.checks)
        checks[name] = outcome.all_passed() ? "pass" : "fail";
    out["checks"] = checks;
    return out;
}

inline json extremal_to_json(const ExtremalReport& r) {
    json out;
    out["n"] = r.n;
    out["b"] = r.b;
    json shapes = json::array();
    for (const auto& entry : r.shapes)
        shapes.push_back(json{{"shape", shape_to_json(entry.shape)},
                              {"rho", bracket_to_json(entry.rho)}});
    out["shapes"] = shapes;
    out["argmin_shape"] = shape_to_json(r.argmin_shape);
    out["argmax_shape"] = shape_to_json(r.argmax_shape);
    out["min_unique"] = r.min_unique;
    out["max_unique"] = r.max_unique;
    return out;
}

struct SweepRow {
    Shape shape;
    int n = 0;
    int b = 0;
    Rational det_delta;
    Rational cof_delta;
    RootBracket rho;
    std::optional<Inertia> laplacian_inertia;
};

inline SweepRow sweep_row(const Shape& shape, const Rational& width_limit) {
    SweepRow row;
    row.shape = shape.canonical();
    row.n = shape.vertex_count();
    row.b = shape.block_count();
    row.det_delta = det_delta_closed(shape);
    row.cof_delta = cof_delta_closed(shape);
    row.rho = spectral_radius(shape, width_limit);
    ScalarInvariants s = scalar_invariants(shape);
    if (row.b >= 2 && s.a2b != 0)
        row.laplacian_inertia = inertia_congruence(laplacian_like(shape).l);
    return row;
}

inline std::string sweep_csv_header() {
    return "shape,n,b,det_delta,cof_delta,rho_lo,rho_hi,"
           "lap_inertia_plus,lap_inertia_zero,lap_inertia_minus";
}

inline std::string sweep_row_csv(const SweepRow& row) {
    std::string out = "\"" + row.shape.to_string() + "\"," + std::to_string(row.n) + "," +
                      std::to_string(row.b) + "," + to_string(row.det_delta) + "," +
                      to_string(row.cof_delta) + "," + to_string(row.rho.lo) + "," +
                      to_string(row.rho.hi) + ",";
    if (row.laplacian_inertia) {
        out += std::to_string(row.laplacian_inertia->positive) + "," +
               std::to_string(row.laplacian_inertia->zero) + "," +
               std::to_string(row.laplacian_inertia->negative);
    } else {
        out += ",,";
    }
    return out;
}

inline json sweep_row_json(const SweepRow& row) {
    json out;
    out["shape"] = shape_to_json(row.shape);
    out["n"] = row.n;
    out["b"] = row.b;
    out["det_delta"] = to_string(row.det_delta);
    out["cof_delta"] = to_string(row.cof_delta);
    out["rho"] = bracket_to_json(row.rho);
    out["rho_mid_approx"] = to_decimal(row.rho.midpoint());
    out["laplacian_inertia"] =
        row.laplacian_inertia ? inertia_to_json(*row.laplacian_inertia) : json(nullptr);
    return out;
}

}  // namespace sqdist
