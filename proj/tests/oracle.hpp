#pragma once

// Independent reference constructions used as test oracles. Nothing here
// calls into the collector or the search code.

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::uint32_t>;

inline long long mod(long long a, long long m) { return ((a % m) + m) % m; }

/// Cayley table from an element list (index 0 must be the identity) and a
/// multiplication on coordinates.
template <typename T>
Table cayley(const std::vector<T> &elems, const std::function<T(const T &, const T &)> &mul)
{
  std::size_t n = elems.size();
  Table t(n * n);
  auto find = [&](const T &x) {
    for (std::size_t i = 0; i < n; ++i)
      if (elems[i] == x)
        return static_cast<std::uint32_t>(i);
    return static_cast<std::uint32_t>(n);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = find(mul(elems[i], elems[j]));
  return t;
}

/// Z_{p^2} x| Z_{yo}: x^a y^b with y^-1 x y = x^{1+p}, yo = p^2 or p.
inline Table metacyclic(unsigned p, unsigned yo)
{
  long long q = static_cast<long long>(p) * p;
  std::vector<std::pair<long long, long long>> elems;
  for (long long b = 0; b < yo; ++b)
    for (long long a = 0; a < q; ++a)
      elems.emplace_back(a, b);
  // y^b x^c = x^{c (1+p)^{-b}} y^b and (1+p)^{-b} = 1 - bp mod p^2
  return cayley<std::pair<long long, long long>>(
    elems, [&](const auto &u, const auto &v) {
      return std::pair{mod(u.first + v.first * (1 - u.second * static_cast<long long>(p)), q),
                       mod(u.second + v.second, yo)};
    });
}

/// Unitriangular 3x3 matrices over F_p.
inline Table heisenberg(unsigned p)
{
  std::vector<std::array<long long, 3>> elems;
  for (long long c = 0; c < p; ++c)
    for (long long b = 0; b < p; ++b)
      for (long long a = 0; a < p; ++a)
        elems.push_back({a, b, c});
  return cayley<std::array<long long, 3>>(elems, [&](const auto &u, const auto &v) {
    return std::array<long long, 3>{mod(u[0] + v[0], p), mod(u[1] + v[1], p),
                                    mod(u[2] + v[2] + u[0] * v[1], p)};
  });
}

inline std::size_t center_size(const Table &t, std::size_t n)
{
  std::size_t z = 0;
  for (std::size_t a = 0; a < n; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n && central; ++b)
      central = t[a * n + b] == t[b * n + a];
    z += central;
  }
  return z;
}

inline std::vector<std::uint32_t> inverses(const Table &t, std::size_t n)
{
  std::vector<std::uint32_t> inv(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t[a * n + b] == 0)
        inv[a] = static_cast<std::uint32_t>(b);
  return inv;
}

/// Closure of a set under multiplication (finite, so a subgroup).
inline std::set<std::uint32_t> closure(const Table &t, std::size_t n, std::set<std::uint32_t> s)
{
  s.insert(0);
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<std::uint32_t> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur)
        if (s.insert(t[a * n + b]).second)
          grown = true;
  }
  return s;
}

inline std::size_t derived_size(const Table &t, std::size_t n)
{
  auto inv = inverses(t, n);
  std::set<std::uint32_t> comms;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      comms.insert(t[t[inv[a] * n + inv[b]] * n + t[a * n + b]]);
  return closure(t, n, comms).size();
}

inline unsigned element_order(const Table &t, std::size_t n, std::uint32_t a)
{
  unsigned k = 1;
  for (std::uint32_t x = a; x != 0; x = t[x * n + a])
    ++k;
  return k;
}

inline unsigned exponent(const Table &t, std::size_t n)
{
  unsigned e = 1;
  for (std::uint32_t a = 0; a < n; ++a)
    e = std::lcm(e, element_order(t, n, a));
  return e;
}

} // namespace oracle
