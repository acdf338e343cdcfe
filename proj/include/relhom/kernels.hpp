#pragma once

// Hot inner loops of the engine. The default entry points are OpenMP
// parallel above a size threshold; the `serial` namespace keeps plain
// reference versions that the tests compare against and the benchmark
// times side by side.

#include <cstddef>
#include <vector>

#include "relhom/linalg.hpp"

namespace relhom::kernels {

/// Work (rows × inner × cols) above which matmul fans out over rows.
inline constexpr std::size_t kParallelMatmulWork = 1u << 15;
/// Row count × width above which elimination fans out over rows.
inline constexpr std::size_t kParallelEliminationWork = 1u << 13;

Matrix matmul(const Matrix& a, const Matrix& b);

/// Gauss–Jordan elimination in place; returns pivot columns.
std::vector<std::size_t> rref_inplace(Matrix& m);

int max_threads();

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b);
std::vector<std::size_t> rref_inplace(Matrix& m);

}  // namespace serial
}  // namespace relhom::kernels
