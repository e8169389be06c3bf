// Batch front end: evaluate block-matrix instances, check them against the
// dense reference path, and fuzz random instances.
//
// Exit codes: 0 success, 1 mismatch found, 2 parse/validation error,
// 3 evaluation error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hybridmat/instance.hpp"
#include "hybridmat/oracle.hpp"

namespace {

using namespace hybridmat;

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitEvalError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_eval(const std::string& path, const std::string& format) {
    Instance inst = load_instance(path);
    DenseMatrix result = eval_instance(inst);
    if (format == "text") std::cout << result.to_text();
    else std::cout << matrix_to_json(result);
    return 0;
}

int check_once(const Instance& inst, const std::optional<std::string>& expect_path,
               const Rational& tolerance, bool print_report) {
    DenseMatrix actual = eval_instance(inst);
    DenseMatrix expected = expect_path ? matrix_from_json(read_file(*expect_path))
                                       : oracle_instance(inst);
    DiffReport report = compare(expected, actual, tolerance);
    if (print_report) std::cout << report_to_json(report);
    return report.identical() ? 0 : kExitMismatch;
}

int cmd_check(const std::string& path, const std::optional<std::string>& expect_path,
              const std::string& tolerance_text, const std::optional<std::string>& sweep) {
    Instance inst = load_instance(path);
    Rational tolerance = Rational::parse(tolerance_text);

    if (!sweep) return check_once(inst, expect_path, tolerance, true);

    auto ranges = parse_sweep_ranges(*sweep);
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    long long combos = 0;

    std::vector<long long> values(ranges.size());
    auto run_combo = [&](const auto& self, std::size_t axis) -> void {
        if (axis == ranges.size()) {
            Instance bound = inst;
            nlohmann::ordered_json assignment;
            for (std::size_t i = 0; i < ranges.size(); ++i) {
                bound.env.bind(std::get<0>(ranges[i]), values[i]);
                assignment[std::get<0>(ranges[i])] = values[i];
            }
            ++combos;
            try {
                validate(bound);
                if (check_once(bound, expect_path, tolerance, false) != 0) {
                    nlohmann::ordered_json f;
                    f["env"] = assignment;
                    f["reason"] = "mismatch";
                    failures.push_back(std::move(f));
                }
            } catch (const std::exception& e) {
                nlohmann::ordered_json f;
                f["env"] = assignment;
                f["reason"] = e.what();
                failures.push_back(std::move(f));
            }
            return;
        }
        for (long long v = std::get<1>(ranges[axis]); v <= std::get<2>(ranges[axis]); ++v) {
            values[axis] = v;
            self(self, axis + 1);
        }
    };
    run_combo(run_combo, 0);

    nlohmann::ordered_json out;
    out["combinations"] = combos;
    out["failures"] = failures;
    out["all_passed"] = failures.empty();
    std::cout << out.dump(2) << "\n";
    return failures.empty() ? 0 : kExitMismatch;
}

int cmd_fuzz(long long count, std::uint64_t seed, int max_dim) {
    for (long long i = 0; i < count; ++i) {
        std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i);
        Instance inst = random_instance(case_seed, max_dim);
        DenseMatrix actual = eval_instance(inst);
        DenseMatrix expected = oracle_instance(inst);
        DiffReport report = compare(expected, actual);
        if (!report.identical()) {
            std::cout << "FAIL seed=" << case_seed << "\n" << report_to_json(report);
            std::cerr << "failing instance:\n" << instance_to_json(inst);
            return kExitMismatch;
        }
    }
    std::cout << "OK " << count << " instances\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic block matrix arithmetic with hybrid intervals"};
    app.require_subcommand(1);

    std::string eval_path;
    std::string format = "json";
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an instance file to a dense matrix");
    eval_cmd->add_option("file", eval_path, "Instance JSON file")->required();
    eval_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string check_path;
    std::optional<std::string> expect_path;
    std::string tolerance = "0";
    std::optional<std::string> sweep;
    auto* check_cmd =
        app.add_subcommand("check", "Evaluate an instance and compare with the dense reference");
    check_cmd->add_option("file", check_path, "Instance JSON file")->required();
    check_cmd->add_option("--expect", expect_path, "Compare against this matrix JSON file");
    check_cmd->add_option("--tolerance", tolerance,
                          "Allowed absolute difference per entry (rational, default exact)");
    check_cmd->add_option("--sweep", sweep, "Parameter ranges, e.g. q=0..5,r=0..5");

    long long fuzz_count = 100;
    std::uint64_t fuzz_seed = 0;
    int fuzz_max_dim = 6;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Check random instances");
    fuzz_cmd->add_option("--n", fuzz_count, "Number of instances");
    fuzz_cmd->add_option("--seed", fuzz_seed, "Base seed");
    fuzz_cmd->add_option("--max-dim", fuzz_max_dim, "Dimension cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return cmd_eval(eval_path, format);
        if (check_cmd->parsed()) return cmd_check(check_path, expect_path, tolerance, sweep);
        return cmd_fuzz(fuzz_count, fuzz_seed, fuzz_max_dim);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kExitEvalError;
    }
}
