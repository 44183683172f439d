#pragma once
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace migsim {

// Compressed sparse row matrix with integer values (bandwidth studies only
// need exact, cheap arithmetic).
struct CsrMatrix {
  std::uint64_t n_rows = 0;
  std::uint64_t n_cols = 0;
  std::vector<std::uint64_t> row_ptr;  // length n_rows + 1, non-decreasing
  std::vector<std::uint32_t> col_idx;  // length nnz, each < n_cols
  std::vector<std::int64_t> values;    // length nnz

  std::uint64_t nnz() const { return values.size(); }
  void validate() const;  // throws std::invalid_argument on malformed structure

  // y = A * x with plain host arithmetic, independent of any simulation.
  std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& x) const;
};

// 5-point 2-D stencil on an n x n grid: the matrix is n^2 x n^2 with value 4
// on the diagonal, -1 for each existing N/S/E/W neighbor, nnz = 5n^2 - 4n.
struct LaplacianSpec {
  std::uint32_t n = 1;
  static constexpr std::uint32_t dimension = 2;
  static constexpr std::uint32_t stencil_points = 5;
};

CsrMatrix laplacian_csr(const LaplacianSpec& spec);

// Matrix Market "coordinate integer general" interchange.
void write_matrix_market(const CsrMatrix& a, std::ostream& os);
CsrMatrix read_matrix_market(std::istream& is);

}  // namespace migsim
