#pragma once

#include "hybridmat/block_matrix.hpp"
#include "hybridmat/dense_matrix.hpp"

namespace hybridmat {

// Straightforward dense reference path. It reads block specs directly (fences
// plus payload tables) and uses schoolbook arithmetic; none of the hybrid
// evaluation machinery is involved, so it serves as an independent
// cross-check of that machinery.

// Tile the bound index rectangle from the blocks. Requires payloads defined
// across their blocks and fences monotone under the environment.
DenseMatrix materialize_operand(const BlockSpec& spec, const ParamEnv& env);

DenseMatrix dense_add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b);

} // namespace hybridmat
