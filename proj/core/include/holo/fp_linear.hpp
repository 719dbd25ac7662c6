#pragma once

#include <cstdint>
#include <vector>

namespace holo {

/// Dense matrix over F_p, row-major, entries reduced to [0, p).
struct MatrixFp {
  unsigned p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  MatrixFp() = default;
  MatrixFp(unsigned p, std::size_t rows, std::size_t cols)
  : p(p), rows(rows), cols(cols), data(rows * cols, 0) {}

  std::uint32_t &at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  /// Appends a row given as signed integers.
  void push_row(const std::vector<long long> &row);
};

std::uint32_t inverse_mod(std::uint32_t a, unsigned p);

/// Reduced row echelon form in place, pivoting on the first nonzero entry
/// of each column. Returns the pivot columns.
std::vector<std::size_t> row_reduce(MatrixFp &m);

std::size_t rank(MatrixFp m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<std::uint32_t>> nullspace(MatrixFp m);

} // namespace holo
