#include "holo/fp_linear.hpp"

#include "holo/error.hpp"

namespace holo {

void MatrixFp::push_row(const std::vector<long long> &row)
{
  if (row.size() != cols)
    raise(ErrorKind::InvalidArgument, "row length does not match column count");
  for (long long v : row)
    data.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
  ++rows;
}

std::uint32_t inverse_mod(std::uint32_t a, unsigned p)
{
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1)
    raise(ErrorKind::InvalidArgument, "element is not invertible");
  return static_cast<std::uint32_t>((t % p + p) % p);
}

std::vector<std::size_t> row_reduce(MatrixFp &m)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::uint64_t p = m.p;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0)
      ++piv;
    if (piv == m.rows)
      continue;
    if (piv != r)
      for (std::size_t k = 0; k < m.cols; ++k)
        std::swap(m.at(piv, k), m.at(r, k));
    std::uint64_t inv = inverse_mod(m.at(r, c), m.p);
    for (std::size_t k = c; k < m.cols; ++k)
      m.at(r, k) = static_cast<std::uint32_t>(m.at(r, k) * inv % p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0)
        continue;
      std::uint64_t f = m.at(i, c);
      for (std::size_t k = c; k < m.cols; ++k)
        m.at(i, k) = static_cast<std::uint32_t>((m.at(i, k) + (p - f) * m.at(r, k)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(MatrixFp m)
{
  return row_reduce(m).size();
}

std::vector<std::vector<std::uint32_t>> nullspace(MatrixFp m)
{
  auto pivots = row_reduce(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : pivots)
    is_pivot[c] = 1;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = (m.p - m.at(i, f)) % m.p;
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace holo
