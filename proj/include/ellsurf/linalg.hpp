#pragma once

#include <gmpxx.h>

#include <vector>

namespace ellsurf {

using QMatrix = std::vector<std::vector<mpq_class>>;

/// In-place row echelon reduction over Q; returns the rank.
int row_reduce(QMatrix& m);

int matrix_rank(QMatrix m);

}  // namespace ellsurf
