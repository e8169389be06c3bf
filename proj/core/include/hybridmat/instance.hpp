#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hybridmat/block_matrix.hpp"
#include "hybridmat/dense_matrix.hpp"
#include "hybridmat/size_expr.hpp"

namespace hybridmat {

// One operand of an instance file: declared symbolic totals, fence
// expressions, and explicit entry tables per block (blocks may instead be
// filled from the instance seed).
struct OperandDesc {
    struct BlockTable {
        int bi = 0;
        int bj = 0;
        std::vector<std::vector<Rational>> entries;
    };

    std::string name;
    SizeExpr rows;
    SizeExpr cols;
    std::vector<SizeExpr> row_cuts;
    std::vector<SizeExpr> col_cuts;
    std::vector<BlockTable> blocks;
};

struct Instance {
    enum class Op { Add, Mul };

    Op op = Op::Add;
    OperandDesc lhs;
    OperandDesc rhs;
    ParamEnv env;
    std::optional<std::uint64_t> seed;
};

// Parsing throws ParseError on malformed JSON and ValidationError on schema
// violations; validate() additionally checks the instance-level constraints
// (parameters bound, conformability, fences monotone under the environment,
// table dimensions matching the bound block sizes).
Instance parse_instance_text(const std::string& json_text);
Instance load_instance(const std::string& path);
void validate(const Instance& inst);

// Deterministic serialization: the same instance always yields the same
// bytes.
std::string instance_to_json(const Instance& inst);

// Operand with payloads attached: tables where given, seed-derived values
// elsewhere (ValidationError if neither is available for some block).
BlockSpec to_block_spec(const OperandDesc& desc, std::optional<std::uint64_t> seed);

// The two evaluation routes an instance can take.
DenseMatrix eval_instance(const Instance& inst);   // hybrid construction
DenseMatrix oracle_instance(const Instance& inst); // dense reference

struct DiffReport {
    Rational max_abs_diff;
    long long mismatch_count = 0;
    std::optional<std::tuple<long long, long long, Rational, Rational>> first_mismatch;

    bool identical() const { return mismatch_count == 0; }
};

// Entrywise comparison; entries differing by more than the tolerance count as
// mismatches (tolerance 0 = exact).
DiffReport compare(const DenseMatrix& expected, const DenseMatrix& actual,
                   const Rational& tolerance = Rational(0));

std::string matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const std::string& json_text);
std::string report_to_json(const DiffReport& report);

// Seeded random instance over small dimensions, with symbolic fences bound in
// the environment and seed-derived payloads. Same seed, same instance.
Instance random_instance(std::uint64_t seed, int max_dim);

// Sweep ranges of the form "q=0..5,r=0..5".
std::vector<std::tuple<std::string, long long, long long>> parse_sweep_ranges(const std::string& text);

} // namespace hybridmat
