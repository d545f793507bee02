#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <vector>

#include "sqdist/parallel.hpp"
#include "sqdist/report.hpp"

namespace {

using namespace sqdist;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailure = 2;

void print_analysis_text(const AnalysisReport& r) {
    std::cout << "shape          S(" << r.shape.to_string() << ")\n"
              << "n, b           " << r.n << ", " << r.b << "\n"
              << "det Delta      " << to_string(r.det_delta) << "\n"
              << "det Delta22    " << to_string(r.det_delta22) << "\n"
              << "cof Delta      " << to_string(r.cof_delta) << "\n"
              << "cof Delta22    " << to_string(r.cof_delta22) << "\n"
              << "charpoly Delta " << r.charpoly_delta.to_string() << "\n"
              << "inertia Delta  (" << r.inertia_delta.positive << ", " << r.inertia_delta.zero
              << ", " << r.inertia_delta.negative << ")\n"
              << "lambda         " << (r.lambda ? to_string(*r.lambda) : "null") << "\n"
              << "cof constant   " << (r.cof_constant ? to_string(*r.cof_constant) : "null")
              << "\n";
    if (r.laplacian_inertia)
        std::cout << "inertia L      (" << r.laplacian_inertia->positive << ", "
                  << r.laplacian_inertia->zero << ", " << r.laplacian_inertia->negative << ")\n";
    if (r.note) std::cout << "note           " << *r.note << "\n";
    std::cout << "rho in         (" << to_string(r.rho.lo) << ", " << to_string(r.rho.hi)
              << ")  ~ " << to_decimal(r.rho.midpoint()) << " (approx)\n";
    for (const auto& [name, outcome] : r.checks)
        std::cout << (outcome.all_passed() ? "  [pass] " : "  [FAIL] ") << name << "\n";
}

int cmd_analyze(const std::string& shape_text, const std::string& precision,
                const std::string& format) {
    Shape shape = Shape::parse(shape_text);
    Rational width = parse_rational(precision);
    AnalysisReport report = analyze_shape(shape, width);
    if (format == "json")
        std::cout << analysis_to_json(report).dump(2) << "\n";
    else
        print_analysis_text(report);
    return report.all_checks_passed() ? kExitOk : kExitCheckFailure;
}

int cmd_verify(int max_n, const std::string& shape_text, const std::string& fault_target) {
    std::vector<Shape> shapes;
    if (!shape_text.empty()) {
        shapes.push_back(Shape::parse(shape_text).canonical());
    } else {
        if (max_n < 3) {
            std::cerr << "error: --max-n must be at least 3 (no valid shapes below n=3)\n";
            return kExitUsage;
        }
        shapes = all_shapes_up_to(max_n);
    }
    FaultInjection fault{fault_target};

    std::vector<CheckMap> partial(shapes.size());
    parallel_for_index(shapes.size(), [&](std::size_t i) {
        run_shape_checks(shapes[i], partial[i], fault);
        run_balancing_checks(shapes[i], partial[i]);
    });
    CheckMap merged;
    for (const auto& cm : partial)
        for (const auto& [name, outcome] : cm) {
            merged[name].passed += outcome.passed;
            merged[name].failed += outcome.failed;
        }

    bool all_ok = true;
    std::cout << "shapes checked: " << shapes.size() << "\n";
    for (const auto& [name, outcome] : merged) {
        bool ok = outcome.all_passed();
        all_ok = all_ok && ok;
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << "  (" << outcome.passed
                  << " pass, " << outcome.failed << " fail)\n";
    }
    return all_ok ? kExitOk : kExitCheckFailure;
}

int cmd_extremal(int n, int b, const std::string& precision, const std::string& format) {
    if (b < 2 || n < b + 1) {
        std::cerr << "error: need n >= b+1 >= 3\n";
        return kExitUsage;
    }
    Rational width = parse_rational(precision);
    ExtremalReport report = extremal_report(n, b, width);
    if (format == "json") {
        std::cout << extremal_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "n=" << report.n << " b=" << report.b << " shapes=" << report.shapes.size()
                  << "\n";
        for (const auto& entry : report.shapes)
            std::cout << "  S(" << entry.shape.to_string() << ")  rho ~ "
                      << to_decimal(entry.rho.midpoint()) << " (approx)\n";
        std::cout << "argmin S(" << report.argmin_shape.to_string() << ")"
                  << (report.min_unique ? " (unique)" : " (NOT unique)") << "\n"
                  << "argmax S(" << report.argmax_shape.to_string() << ")"
                  << (report.max_unique ? " (unique)" : " (NOT unique)") << "\n";
    }
    return report.matches_theorem() ? kExitOk : kExitCheckFailure;
}

int cmd_sweep(int max_n, const std::string& format, const std::string& out_path,
              const std::string& precision) {
    if (max_n < 3) {
        std::cerr << "error: --max-n must be at least 3\n";
        return kExitUsage;
    }
    Rational width = parse_rational(precision);
    std::vector<Shape> shapes = all_shapes_up_to(max_n);
    std::vector<SweepRow> rows(shapes.size());
    parallel_for_index(shapes.size(), [&](std::size_t i) {
        rows[i] = sweep_row(shapes[i], width);
    });

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out = &file;
    }
    if (format == "csv") {
        *out << sweep_csv_header() << "\n";
        for (const auto& row : rows) *out << sweep_row_csv(row) << "\n";
    } else {
        for (const auto& row : rows) *out << sweep_row_json(row).dump() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact closed forms and oracles for squared distance matrices of starlike "
                 "block graphs"};
    app.require_subcommand(1);

    std::string shape_text, precision = "1e-9", format = "text", out_path, fault_target;
    int max_n = 0, arg_n = 0, arg_b = 0;

    auto* analyze = app.add_subcommand("analyze", "Full exact report for one shape");
    analyze->add_option("shape", shape_text, "Comma-separated block sizes, e.g. 2,1,1")
        ->required();
    analyze->add_option("--precision", precision, "Bracket width limit (default 1e-9)");
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("shape", shape_text, "Single shape to verify");
    verify->add_option("--max-n", max_n, "Verify every shape with n up to this bound");
    verify->add_option("--inject-fault", fault_target)->group("");  // hidden: mutation smoke test

    auto* extremal = app.add_subcommand("extremal", "Spectral-radius extremal report for (n, b)");
    extremal->add_option("n", arg_n, "Vertex count")->required();
    extremal->add_option("b", arg_b, "Block count")->required();
    extremal->add_option("--precision", precision, "Bracket width limit (default 1e-9)");
    extremal->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* sweep = app.add_subcommand("sweep", "Tabulate key quantities over all shapes");
    sweep->add_option("--max-n", max_n)->required();
    sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("-o,--output", out_path, "Write to file instead of stdout");
    sweep->add_option("--precision", precision, "Bracket width limit (default 1e-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze)) {
            if (format == "csv") format = "text";
            return cmd_analyze(shape_text, precision, format);
        }
        if (app.got_subcommand(verify)) {
            if (shape_text.empty() && max_n == 0) {
                std::cerr << "error: verify needs --max-n N or a shape\n";
                return kExitUsage;
            }
            return cmd_verify(max_n, shape_text, fault_target);
        }
        if (app.got_subcommand(extremal)) return cmd_extremal(arg_n, arg_b, precision, format);
        if (app.got_subcommand(sweep)) {
            if (format == "text") format = "csv";
            return cmd_sweep(max_n, format, out_path, precision);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
