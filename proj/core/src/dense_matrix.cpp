#include "hybridmat/dense_matrix.hpp"

#include <algorithm>

namespace hybridmat {

std::string DenseMatrix::to_text() const {
    std::vector<std::string> cells;
    cells.reserve(entries_.size());
    std::size_t width = 1;
    for (const auto& e : entries_) {
        cells.push_back(e.str());
        width = std::max(width, cells.back().size());
    }
    std::string out;
    for (long long r = 0; r < rows_; ++r) {
        for (long long c = 0; c < cols_; ++c) {
            const std::string& cell = cells[static_cast<std::size_t>(r * cols_ + c)];
            if (c > 0) out += ' ';
            out.append(width - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

} // namespace hybridmat
