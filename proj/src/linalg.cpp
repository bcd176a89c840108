#include "ellsurf/linalg.hpp"

#include <stdexcept>

namespace ellsurf {

int row_reduce(QMatrix& m) {
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        int sel = -1;
        for (std::size_t row = rank; row < m.size(); ++row)
            if (m[row][col] != 0) {
                sel = static_cast<int>(row);
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[rank]);
        mpq_class inv = 1 / m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t row = 0; row < m.size(); ++row) {
            if (static_cast<int>(row) == rank || m[row][col] == 0) continue;
            mpq_class factor = m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[row][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

int matrix_rank(QMatrix m) { return row_reduce(m); }

}  // namespace ellsurf
