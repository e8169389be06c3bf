#include "hybridmat/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hybridmat/oracle.hpp"

namespace hybridmat {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Rational entry_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_float()) {
        // Doubles are dyadic rationals; convert exactly or not at all.
        double d = v.get<double>();
        int exp = 0;
        double mant = std::frexp(d, &exp);
        long long shift = 53 - exp;
        if (shift < 0 || shift > 62)
            throw ValidationError("float payload entry cannot be represented exactly; "
                                  "write it as a rational string instead");
        auto num = static_cast<long long>(std::ldexp(mant, 53));
        return Rational(num, 1LL << shift);
    }
    throw ValidationError("payload entries must be integers, rational strings, or floats");
}

std::vector<SizeExpr> cuts_from_json(const json& arr, const std::string& what) {
    if (!arr.is_array() || arr.size() < 2)
        throw ValidationError(what + " must be an array of at least two fence expressions");
    std::vector<SizeExpr> cuts;
    for (const auto& c : arr) {
        if (c.is_number_integer()) cuts.push_back(SizeExpr(c.get<long long>()));
        else if (c.is_string()) cuts.push_back(SizeExpr::parse(c.get<std::string>()));
        else throw ValidationError(what + " entries must be strings or integers");
    }
    return cuts;
}

OperandDesc operand_from_json(const json& obj, const std::string& name) {
    if (!obj.is_object()) throw ValidationError("operand " + name + " must be an object");
    OperandDesc desc;
    desc.name = name;
    if (!obj.contains("rows") || !obj.contains("cols"))
        throw ValidationError("operand " + name + " needs rows and cols totals");
    auto total = [&](const json& v, const char* what) {
        if (v.is_number_integer()) return SizeExpr(v.get<long long>());
        if (v.is_string()) return SizeExpr::parse(v.get<std::string>());
        throw ValidationError("operand " + name + " " + what + " must be a string or integer");
    };
    desc.rows = total(obj.at("rows"), "rows");
    desc.cols = total(obj.at("cols"), "cols");
    desc.row_cuts = cuts_from_json(obj.value("row_cuts", json::array({json(0), obj.at("rows")})),
                                   name + " row_cuts");
    desc.col_cuts = cuts_from_json(obj.value("col_cuts", json::array({json(0), obj.at("cols")})),
                                   name + " col_cuts");
    for (const auto& blk : obj.value("blocks", json::array())) {
        if (!blk.is_object() || !blk.contains("at"))
            throw ValidationError("operand " + name + " block needs an \"at\" index pair");
        OperandDesc::BlockTable table;
        table.bi = blk.at("at").at(0).get<int>();
        table.bj = blk.at("at").at(1).get<int>();
        for (const auto& row : blk.value("entries", json::array())) {
            std::vector<Rational> cells;
            for (const auto& cell : row) cells.push_back(entry_from_json(cell));
            table.entries.push_back(std::move(cells));
        }
        desc.blocks.push_back(std::move(table));
    }
    return desc;
}

// splitmix64; used for seed-derived payloads so the values do not depend on
// any library's distribution implementation.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fold(std::uint64_t h, std::uint64_t v) { return mix64(h ^ (v + 0x9e3779b9ULL)); }

long long seeded_value(std::uint64_t seed, const std::string& operand, int bi, int bj,
                       long long i, long long j) {
    std::uint64_t h = seed;
    for (char c : operand) h = fold(h, static_cast<std::uint64_t>(c));
    h = fold(h, static_cast<std::uint64_t>(bi));
    h = fold(h, static_cast<std::uint64_t>(bj));
    h = fold(h, static_cast<std::uint64_t>(i));
    h = fold(h, static_cast<std::uint64_t>(j));
    return static_cast<long long>(h % 19) - 9;
}

} // namespace

Instance parse_instance_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("instance must be a JSON object");

    Instance inst;
    try {
        std::string op = doc.value("operation", "");
        if (op == "add") inst.op = Instance::Op::Add;
        else if (op == "mul") inst.op = Instance::Op::Mul;
        else throw ValidationError("operation must be \"add\" or \"mul\"");

        if (!doc.contains("lhs") || !doc.contains("rhs"))
            throw ValidationError("instance needs lhs and rhs operands");
        inst.lhs = operand_from_json(doc.at("lhs"), "lhs");
        inst.rhs = operand_from_json(doc.at("rhs"), "rhs");

        if (!doc.contains("env") || !doc.at("env").is_object())
            throw ValidationError("instance needs an env object of parameter bindings");
        for (const auto& [key, value] : doc.at("env").items()) {
            if (!value.is_number_integer())
                throw ValidationError("env binding for " + key + " must be an integer");
            inst.env.bind(key, value.get<long long>());
        }
        if (doc.contains("seed")) {
            if (!doc.at("seed").is_number_unsigned() && !doc.at("seed").is_number_integer())
                throw ValidationError("seed must be an integer");
            inst.seed = doc.at("seed").get<std::uint64_t>();
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed instance: ") + e.what());
    }
    validate(inst);
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

namespace {

void validate_operand(const OperandDesc& desc, const ParamEnv& env,
                      std::optional<std::uint64_t> seed) {
    auto check_params_bound = [&](const SizeExpr& e, const std::string& what) {
        for (const auto& [name, coeff] : e.coefficients()) {
            (void)coeff;
            if (!env.contains(name))
                throw ValidationError(desc.name + " " + what + " references unbound parameter " +
                                      name);
        }
    };
    check_params_bound(desc.rows, "rows");
    check_params_bound(desc.cols, "cols");
    for (const auto& c : desc.row_cuts) check_params_bound(c, "row cut");
    for (const auto& c : desc.col_cuts) check_params_bound(c, "column cut");

    if (!desc.row_cuts.front().is_zero() || !desc.col_cuts.front().is_zero())
        throw ValidationError(desc.name + " fences must start at 0");
    if (!(desc.row_cuts.back() == desc.rows) || !(desc.col_cuts.back() == desc.cols))
        throw ValidationError(desc.name + " fences must end at the declared totals");

    // Within one operand the paper's fences are ordered; only the relation
    // between the two operands' fences is left open.
    std::vector<long long> rows = bound_fences(desc.row_cuts, env, desc.name + " rows");
    std::vector<long long> cols = bound_fences(desc.col_cuts, env, desc.name + " columns");

    const int row_blocks = static_cast<int>(desc.row_cuts.size()) - 1;
    const int col_blocks = static_cast<int>(desc.col_cuts.size()) - 1;
    std::set<std::pair<int, int>> seen;
    for (const auto& blk : desc.blocks) {
        if (blk.bi < 1 || blk.bi > row_blocks || blk.bj < 1 || blk.bj > col_blocks)
            throw ValidationError(desc.name + " block (" + std::to_string(blk.bi) + "," +
                                  std::to_string(blk.bj) + ") is outside the block grid");
        if (!seen.emplace(blk.bi, blk.bj).second)
            throw ValidationError(desc.name + " block (" + std::to_string(blk.bi) + "," +
                                  std::to_string(blk.bj) + ") appears twice");
        long long want_rows = rows[blk.bi] - rows[blk.bi - 1];
        long long want_cols = cols[blk.bj] - cols[blk.bj - 1];
        if (static_cast<long long>(blk.entries.size()) != want_rows)
            throw ValidationError(desc.name + " block (" + std::to_string(blk.bi) + "," +
                                  std::to_string(blk.bj) + ") has " +
                                  std::to_string(blk.entries.size()) + " rows, expected " +
                                  std::to_string(want_rows));
        for (const auto& row : blk.entries)
            if (static_cast<long long>(row.size()) != want_cols)
                throw ValidationError(desc.name + " block (" + std::to_string(blk.bi) + "," +
                                      std::to_string(blk.bj) + ") has a row of " +
                                      std::to_string(row.size()) + " entries, expected " +
                                      std::to_string(want_cols));
    }
    if (!seed) {
        for (int bi = 1; bi <= row_blocks; ++bi)
            for (int bj = 1; bj <= col_blocks; ++bj)
                if (!seen.count({bi, bj}))
                    throw ValidationError(desc.name + " block (" + std::to_string(bi) + "," +
                                          std::to_string(bj) +
                                          ") has no entries and the instance has no seed");
    }
}

} // namespace

void validate(const Instance& inst) {
    validate_operand(inst.lhs, inst.env, inst.seed);
    validate_operand(inst.rhs, inst.env, inst.seed);
    if (inst.op == Instance::Op::Add) {
        if (!(inst.lhs.rows == inst.rhs.rows) || !(inst.lhs.cols == inst.rhs.cols))
            throw ValidationError("add operands must declare the same symbolic totals");
    } else {
        if (!(inst.lhs.cols == inst.rhs.rows))
            throw ValidationError("mul operands must share the inner symbolic total");
    }
}

BlockSpec to_block_spec(const OperandDesc& desc, std::optional<std::uint64_t> seed) {
    BlockSpec spec(desc.name, desc.row_cuts, desc.col_cuts);
    std::set<std::pair<int, int>> covered;
    for (const auto& blk : desc.blocks) {
        spec.set_entries(blk.bi, blk.bj, blk.entries);
        covered.emplace(blk.bi, blk.bj);
    }
    if (seed) {
        for (int bi = 1; bi <= spec.row_blocks(); ++bi) {
            for (int bj = 1; bj <= spec.col_blocks(); ++bj) {
                if (covered.count({bi, bj})) continue;
                SizeExpr block_rows = spec.block_rows(bi);
                SizeExpr block_cols = spec.block_cols(bj);
                std::uint64_t s = *seed;
                std::string name = desc.name;
                spec.set_payload(bi, bj,
                                 [s, name, bi, bj, block_rows, block_cols](
                                     const ParamEnv& env, long long i,
                                     long long j) -> std::optional<Rational> {
                                     if (i < 0 || j < 0 || i >= block_rows.eval(env) ||
                                         j >= block_cols.eval(env))
                                         return std::nullopt;
                                     return Rational(seeded_value(s, name, bi, bj, i, j));
                                 });
            }
        }
    }
    return spec;
}

DenseMatrix eval_instance(const Instance& inst) {
    BlockSpec lhs = to_block_spec(inst.lhs, inst.seed);
    BlockSpec rhs = to_block_spec(inst.rhs, inst.seed);
    if (inst.op == Instance::Op::Add) return build_sum(lhs, rhs).evaluate(inst.env);
    return build_product(lhs, rhs).evaluate(inst.env);
}

DenseMatrix oracle_instance(const Instance& inst) {
    DenseMatrix lhs = materialize_operand(to_block_spec(inst.lhs, inst.seed), inst.env);
    DenseMatrix rhs = materialize_operand(to_block_spec(inst.rhs, inst.seed), inst.env);
    if (inst.op == Instance::Op::Add) return dense_add(lhs, rhs);
    return dense_mul(lhs, rhs);
}

DiffReport compare(const DenseMatrix& expected, const DenseMatrix& actual,
                   const Rational& tolerance) {
    DiffReport report;
    if (expected.rows() != actual.rows() || expected.cols() != actual.cols())
        throw ShapeMismatch("cannot compare " + std::to_string(expected.rows()) + "x" +
                            std::to_string(expected.cols()) + " with " +
                            std::to_string(actual.rows()) + "x" + std::to_string(actual.cols()));
    for (long long r = 0; r < expected.rows(); ++r) {
        for (long long c = 0; c < expected.cols(); ++c) {
            Rational diff = (expected.at(r, c) - actual.at(r, c)).abs();
            if (diff > report.max_abs_diff) report.max_abs_diff = diff;
            if (diff > tolerance) {
                ++report.mismatch_count;
                if (!report.first_mismatch)
                    report.first_mismatch = {r, c, expected.at(r, c), actual.at(r, c)};
            }
        }
    }
    return report;
}

namespace {

ordered_json matrix_json(const DenseMatrix& m) {
    ordered_json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    ordered_json rows = ordered_json::array();
    for (long long r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (long long c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

} // namespace

std::string matrix_to_json(const DenseMatrix& m) { return matrix_json(m).dump(2) + "\n"; }

DenseMatrix matrix_from_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("entries"))
        throw ValidationError("matrix JSON needs rows, cols and entries");
    try {
        DenseMatrix out(doc.at("rows").get<long long>(), doc.at("cols").get<long long>());
        const auto& entries = doc.at("entries");
        if (static_cast<long long>(entries.size()) != out.rows())
            throw ValidationError("matrix JSON row count does not match entries");
        for (long long r = 0; r < out.rows(); ++r) {
            const auto& row = entries.at(static_cast<std::size_t>(r));
            if (static_cast<long long>(row.size()) != out.cols())
                throw ValidationError("matrix JSON column count does not match entries");
            for (long long c = 0; c < out.cols(); ++c)
                out.at(r, c) = entry_from_json(row.at(static_cast<std::size_t>(c)));
        }
        return out;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed matrix JSON: ") + e.what());
    }
}

std::string report_to_json(const DiffReport& report) {
    ordered_json out;
    out["identical"] = report.identical();
    out["mismatch_count"] = report.mismatch_count;
    out["max_abs_diff"] = report.max_abs_diff.str();
    if (report.first_mismatch) {
        const auto& [r, c, expected, actual] = *report.first_mismatch;
        ordered_json fm;
        fm["row"] = r;
        fm["col"] = c;
        fm["expected"] = expected.str();
        fm["actual"] = actual.str();
        out["first_mismatch"] = std::move(fm);
    } else {
        out["first_mismatch"] = nullptr;
    }
    return out.dump(2) + "\n";
}

namespace {

ordered_json operand_json(const OperandDesc& desc) {
    ordered_json out;
    out["rows"] = desc.rows.str();
    out["cols"] = desc.cols.str();
    ordered_json row_cuts = ordered_json::array();
    for (const auto& c : desc.row_cuts) row_cuts.push_back(c.str());
    out["row_cuts"] = std::move(row_cuts);
    ordered_json col_cuts = ordered_json::array();
    for (const auto& c : desc.col_cuts) col_cuts.push_back(c.str());
    out["col_cuts"] = std::move(col_cuts);
    ordered_json blocks = ordered_json::array();
    for (const auto& blk : desc.blocks) {
        ordered_json b;
        b["at"] = {blk.bi, blk.bj};
        ordered_json rows = ordered_json::array();
        for (const auto& row : blk.entries) {
            ordered_json cells = ordered_json::array();
            for (const auto& cell : row) cells.push_back(cell.str());
            rows.push_back(std::move(cells));
        }
        b["entries"] = std::move(rows);
        blocks.push_back(std::move(b));
    }
    out["blocks"] = std::move(blocks);
    return out;
}

} // namespace

std::string instance_to_json(const Instance& inst) {
    ordered_json out;
    out["operation"] = inst.op == Instance::Op::Add ? "add" : "mul";
    out["lhs"] = operand_json(inst.lhs);
    out["rhs"] = operand_json(inst.rhs);
    ordered_json env;
    for (const auto& [name, value] : inst.env.bindings()) env[name] = value;
    out["env"] = std::move(env);
    if (inst.seed) out["seed"] = *inst.seed;
    return out.dump(2) + "\n";
}

namespace {

// Deterministic stream over mix64; avoids distribution implementations that
// differ between standard libraries.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : state_(mix64(seed ^ 0xa0761d6478bd642fULL)) {}

    std::uint64_t next() { return state_ = mix64(state_); }
    long long below(long long n) { return n <= 0 ? 0 : static_cast<long long>(next() % n); }
    long long between(long long lo, long long hi) { return lo + below(hi - lo + 1); }

private:
    std::uint64_t state_;
};

std::vector<SizeExpr> random_cuts(SeedStream& rng, const std::string& prefix, long long total,
                                  const SizeExpr& total_expr, ParamEnv& env, int max_blocks) {
    int blocks = static_cast<int>(rng.between(1, max_blocks));
    std::vector<long long> inner;
    for (int i = 1; i < blocks; ++i) inner.push_back(rng.between(0, total));
    std::sort(inner.begin(), inner.end());
    std::vector<SizeExpr> cuts;
    cuts.push_back(SizeExpr(0));
    for (std::size_t i = 0; i < inner.size(); ++i) {
        std::string name = prefix + std::to_string(i + 1);
        env.bind(name, inner[i]);
        cuts.push_back(SizeExpr::param(name));
    }
    cuts.push_back(total_expr);
    return cuts;
}

} // namespace

Instance random_instance(std::uint64_t seed, int max_dim) {
    SeedStream rng(seed);
    Instance inst;
    inst.seed = seed;
    inst.op = rng.below(2) == 0 ? Instance::Op::Add : Instance::Op::Mul;

    long long n = rng.between(0, max_dim);
    long long m = rng.between(0, max_dim);
    long long p = rng.between(0, max_dim);
    inst.env.bind("n", n);
    inst.env.bind("m", m);

    inst.lhs.name = "lhs";
    inst.lhs.rows = SizeExpr::param("n");
    inst.lhs.cols = SizeExpr::param("m");
    inst.lhs.row_cuts = random_cuts(rng, "q", n, inst.lhs.rows, inst.env, 4);
    inst.lhs.col_cuts = random_cuts(rng, "r", m, inst.lhs.cols, inst.env, 4);

    inst.rhs.name = "rhs";
    if (inst.op == Instance::Op::Add) {
        inst.rhs.rows = SizeExpr::param("n");
        inst.rhs.cols = SizeExpr::param("m");
        inst.rhs.row_cuts = random_cuts(rng, "s", n, inst.rhs.rows, inst.env, 4);
        inst.rhs.col_cuts = random_cuts(rng, "t", m, inst.rhs.cols, inst.env, 4);
    } else {
        inst.env.bind("p", p);
        inst.rhs.rows = SizeExpr::param("m");
        inst.rhs.cols = SizeExpr::param("p");
        inst.rhs.row_cuts = random_cuts(rng, "s", m, inst.rhs.rows, inst.env, 4);
        inst.rhs.col_cuts = random_cuts(rng, "t", p, inst.rhs.cols, inst.env, 4);
    }
    return inst;
}

std::vector<std::tuple<std::string, long long, long long>> parse_sweep_ranges(
    const std::string& text) {
    std::vector<std::tuple<std::string, long long, long long>> ranges;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto eq = part.find('=');
        auto dots = part.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq)
            throw ParseError("sweep range must look like q=0..5: " + part);
        std::string name = part.substr(0, eq);
        while (!name.empty() && name.back() == ' ') name.pop_back();
        while (!name.empty() && name.front() == ' ') name.erase(name.begin());
        if (name.empty()) throw ParseError("sweep range missing parameter name: " + part);
        try {
            long long lo = std::stoll(part.substr(eq + 1, dots - eq - 1));
            long long hi = std::stoll(part.substr(dots + 2));
            ranges.emplace_back(name, lo, hi);
        } catch (const std::exception&) {
            throw ParseError("sweep range bounds must be integers: " + part);
        }
    }
    if (ranges.empty()) throw ParseError("empty sweep specification");
    return ranges;
}

} // namespace hybridmat
