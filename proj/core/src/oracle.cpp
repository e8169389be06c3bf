#include "hybridmat/oracle.hpp"

namespace hybridmat {

DenseMatrix materialize_operand(const BlockSpec& spec, const ParamEnv& env) {
    std::vector<long long> rows = bound_fences(spec.row_cuts(), env, spec.name() + " rows");
    std::vector<long long> cols = bound_fences(spec.col_cuts(), env, spec.name() + " columns");

    DenseMatrix out(rows.back(), cols.back());
    for (int bi = 1; bi <= spec.row_blocks(); ++bi) {
        for (int bj = 1; bj <= spec.col_blocks(); ++bj) {
            const PayloadFn& payload = spec.payload(bi, bj);
            for (long long x = rows[bi - 1]; x < rows[bi]; ++x) {
                for (long long y = cols[bj - 1]; y < cols[bj]; ++y) {
                    if (!payload)
                        throw ValidationError(spec.name() + " block (" + std::to_string(bi) +
                                              "," + std::to_string(bj) + ") has no payload");
                    auto v = payload(env, x - rows[bi - 1], y - cols[bj - 1]);
                    if (!v)
                        throw ValidationError(spec.name() + " block (" + std::to_string(bi) +
                                              "," + std::to_string(bj) +
                                              ") payload undefined inside its block");
                    out.at(x, y) = *v;
                }
            }
        }
    }
    return out;
}

DenseMatrix dense_add(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("dense sum of " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
    DenseMatrix out(a.rows(), a.cols());
    for (long long r = 0; r < a.rows(); ++r)
        for (long long c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeMismatch("dense product of " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
    DenseMatrix out(a.rows(), b.cols());
    for (long long r = 0; r < a.rows(); ++r) {
        for (long long c = 0; c < b.cols(); ++c) {
            Rational acc;
            for (long long k = 0; k < a.cols(); ++k) acc += a.at(r, k) * b.at(k, c);
            out.at(r, c) = acc;
        }
    }
    return out;
}

} // namespace hybridmat
