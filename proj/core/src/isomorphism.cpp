#include "holo/isomorphism.hpp"

#include <algorithm>

#include "holo/error.hpp"

namespace holo {

namespace {

/// Packed coordinates of G/K for an elementary abelian quotient, plus the
/// quotient rank.
struct FrattiniCoordinates {
  std::vector<std::size_t> coord;
  std::size_t rank = 0;
};

FrattiniCoordinates frattini_coordinates(const Group &G, unsigned p)
{
  Subgroup F = frattini(G);
  Quotient q = quotient(G, F);
  const Group &Q = q.group;

  // greedy basis of the elementary abelian quotient
  std::vector<Elem> basis;
  std::vector<std::size_t> coord_q(Q.order(), SIZE_MAX);
  coord_q[0] = 0;
  std::vector<Elem> span{0};
  std::size_t weight = 1;
  for (Elem g = 1; g < Q.order(); ++g) {
    if (coord_q[g] != SIZE_MAX)
      continue;
    basis.push_back(g);
    std::vector<Elem> grown;
    std::vector<std::size_t> grown_coord;
    for (std::size_t c = 0; c < p; ++c) {
      Elem step = Q.pow(g, static_cast<long long>(c));
      for (Elem s : span) {
        Elem x = Q.mul(s, step);
        std::size_t cx = coord_q[s] + c * weight;
        grown.push_back(x);
        grown_coord.push_back(cx);
      }
    }
    for (std::size_t i = 0; i < grown.size(); ++i)
      coord_q[grown[i]] = grown_coord[i];
    span = std::move(grown);
    weight *= p;
  }

  FrattiniCoordinates out;
  out.rank = basis.size();
  out.coord.resize(G.order());
  for (Elem g = 0; g < G.order(); ++g)
    out.coord[g] = coord_q[q.projection[g]];
  return out;
}

std::size_t coord_add(std::size_t a, std::size_t b, unsigned p, std::size_t rank)
{
  std::size_t out = 0, weight = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    out += ((a % p + b % p) % p) * weight;
    a /= p;
    b /= p;
    weight *= p;
  }
  return out;
}

std::size_t coord_scale(std::size_t a, std::size_t c, unsigned p, std::size_t rank)
{
  std::size_t out = 0, weight = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    out += ((a % p) * c % p) * weight;
    a /= p;
    weight *= p;
  }
  return out;
}

std::size_t max_letter(const Word &w)
{
  std::size_t m = 0;
  for (auto const &l : w)
    m = std::max<std::size_t>(m, l.gen);
  return m;
}

} // namespace

HomSearch::HomSearch(const Group &G, const Group &H, std::uint64_t node_budget)
: _G(G), _H(H), _budget(node_budget)
{
  if (G.order() != H.order()) {
    _compatible = false;
    return;
  }

  _p = group_prime(G);
  _p_group = _p > 1 && group_prime(H) == _p;

  if (G.has_presentation()) {
    _base.assign(G.generators().begin(), G.generators().end());
  } else if (_p_group) {
    _base = minimal_generators(G);
  } else {
    _base.assign(G.generators().begin(), G.generators().end());
  }

  Subgroup ZG = center(G), ZH = center(H);
  Subgroup FG, FH;
  if (_p_group) {
    FG = frattini(G);
    FH = frattini(H);
  }
  auto invariants = [&](const Group &X, const Subgroup &Z, const Subgroup &F) {
    std::vector<Invariant> inv(X.order());
    for (Elem g = 0; g < X.order(); ++g)
      inv[g] = Invariant{X.element_order(g), Z.contains(g), _p_group && F.contains(g)};
    return inv;
  };
  _inv_G = invariants(G, ZG, FG);
  _inv_H = invariants(H, ZH, FH);

  std::size_t L = _base.size();
  _forced.assign(L, std::nullopt);
  _relations_at_level.assign(L, {});
  _essential.assign(L, 1);

  if (G.has_presentation()) {
    auto const &pres = G.presentation();
    for (unsigned k = 0; k < L; ++k) {
      Relation r;
      r.lhs = {{k, static_cast<long long>(pres.orders[k])}};
      if (auto it = pres.powers.find(k); it != pres.powers.end())
        r.rhs = it->second;
      _relations.push_back(std::move(r));
    }
    for (unsigned j = 0; j < L; ++j) {
      for (unsigned i = 0; i < j; ++i) {
        Relation r;
        r.lhs = {{j, -1}, {i, -1}, {j, 1}, {i, 1}};
        if (auto it = pres.commutators.find({j, i}); it != pres.commutators.end())
          r.rhs = it->second;
        _relations.push_back(std::move(r));
      }
    }
    for (std::size_t ri = 0; ri < _relations.size(); ++ri) {
      auto &r = _relations[ri];
      if (r.rhs.size() == 1 && r.rhs[0].exp == 1 && !r.lhs.empty() &&
          r.rhs[0].gen > max_letter(r.lhs) && !_forced[r.rhs[0].gen]) {
        r.defines = r.rhs[0].gen;
        _forced[r.rhs[0].gen] = ri;
      }
      std::size_t level = std::max(max_letter(r.lhs), r.rhs.empty() ? 0 : max_letter(r.rhs));
      _relations_at_level[level].push_back(ri);
    }
  } else {
    // spanning tree of G over the base for edge-by-edge checks
    _bfs_parent.assign(G.order(), SIZE_MAX);
    _bfs_gen.assign(G.order(), SIZE_MAX);
    _bfs_parent[0] = 0;
    _bfs_order.push_back(0);
    for (std::size_t i = 0; i < _bfs_order.size(); ++i) {
      Elem a = _bfs_order[i];
      for (std::size_t s = 0; s < L; ++s) {
        Elem b = G.mul(a, _base[s]);
        if (_bfs_parent[b] == SIZE_MAX) {
          _bfs_parent[b] = a;
          _bfs_gen[b] = s;
          _bfs_order.push_back(b);
        }
      }
    }
  }

  if (_p_group) {
    auto cg = frattini_coordinates(G, _p);
    auto ch = frattini_coordinates(H, _p);
    if (cg.rank != ch.rank) {
      _compatible = false;
      return;
    }
    _h_quot = std::move(ch.coord);
    _quot_radix.assign(1, 1);
    for (std::size_t i = 0; i < cg.rank; ++i)
      _quot_radix.push_back(_quot_radix.back() * _p);

    // base element is essential iff independent of earlier ones mod Frat(G)
    std::size_t qsize = _quot_radix.back();
    std::vector<char> span(qsize, 0);
    span[0] = 1;
    for (std::size_t k = 0; k < L; ++k) {
      std::size_t v = cg.coord[_base[k]];
      _essential[k] = !span[v];
      if (_essential[k]) {
        std::vector<char> grown(qsize, 0);
        for (std::size_t s = 0; s < qsize; ++s)
          if (span[s])
            for (std::size_t c = 0; c < _p; ++c)
              grown[coord_add(s, coord_scale(v, c, _p, cg.rank), _p, cg.rank)] = 1;
        span = std::move(grown);
      }
    }
  }
}

Elem HomSearch::eval_word(const Word &w, const std::vector<Elem> &images) const
{
  Elem x = 0;
  for (auto const &l : w)
    x = _H.mul(x, _H.pow(images[l.gen], l.exp));
  return x;
}

bool HomSearch::relations_hold(std::size_t level, const std::vector<Elem> &images) const
{
  for (std::size_t ri : _relations_at_level[level]) {
    auto const &r = _relations[ri];
    if (eval_word(r.lhs, images) != eval_word(r.rhs, images))
      return false;
  }
  return true;
}

std::optional<Automorphism> HomSearch::extend(std::span<const Elem> images) const
{
  std::size_t n = _G.order();
  std::vector<Elem> map(n);
  if (_G.has_presentation()) {
    for (Elem g = 0; g < n; ++g) {
      auto nf = _G.normal_form(g);
      Elem x = 0;
      for (std::size_t i = 0; i < nf.size(); ++i)
        if (nf[i] != 0)
          x = _H.mul(x, _H.pow(images[i], nf[i]));
      map[g] = x;
    }
  } else {
    map[0] = 0;
    for (std::size_t i = 1; i < _bfs_order.size(); ++i) {
      Elem b = _bfs_order[i];
      map[b] = _H.mul(map[_bfs_parent[b]], images[_bfs_gen[b]]);
    }
    for (Elem a = 0; a < n; ++a)
      for (std::size_t s = 0; s < _base.size(); ++s)
        if (map[_G.mul(a, _base[s])] != _H.mul(map[a], images[s]))
          return std::nullopt;
  }
  std::vector<char> seen(n, 0);
  for (Elem x : map) {
    if (seen[x])
      return std::nullopt;
    seen[x] = 1;
  }
  return Automorphism(std::move(map));
}

bool HomSearch::search(std::size_t level, std::vector<Elem> &images,
                       std::vector<std::vector<char>> &spans,
                       const std::function<bool(const std::vector<Elem> &, const Automorphism &)> &visit)
{
  if (level == _base.size()) {
    if (auto map = extend(images))
      return visit(images, *map);
    return true;
  }

  auto try_candidate = [&](Elem h) -> bool {
    if (++_nodes > _budget)
      raise(ErrorKind::SearchBudgetExceeded,
            "homomorphism search exceeded " + std::to_string(_budget) + " nodes");
    if (!(_inv_H[h] == _inv_G[_base[level]]))
      return true;
    if (_p_group) {
      std::size_t v = _h_quot[h];
      bool in_span = spans[level][v] != 0;
      if (_essential[level] == in_span)
        return true;
    }
    images[level] = h;
    if (!relations_hold(level, images))
      return true;
    if (_p_group) {
      std::size_t rank = _quot_radix.size() - 1;
      std::size_t qsize = _quot_radix.back();
      auto &next = spans[level + 1];
      if (_essential[level]) {
        std::fill(next.begin(), next.end(), 0);
        std::size_t v = _h_quot[h];
        for (std::size_t s = 0; s < qsize; ++s)
          if (spans[level][s])
            for (std::size_t c = 0; c < _p; ++c)
              next[coord_add(s, coord_scale(v, c, _p, rank), _p, rank)] = 1;
      } else {
        next = spans[level];
      }
    }
    return search(level + 1, images, spans, visit);
  };

  if (level < _fixed.size()) {
    return try_candidate(_fixed[level]);
  }
  if (_forced[level]) {
    auto const &r = _relations[*_forced[level]];
    return try_candidate(eval_word(r.lhs, images));
  }
  for (Elem h = 0; h < _H.order(); ++h)
    if (!try_candidate(h))
      return false;
  return true;
}

void HomSearch::run(std::span<const Elem> prefix,
                    const std::function<bool(const std::vector<Elem> &, const Automorphism &)> &visit)
{
  if (!_compatible)
    return;
  _fixed.assign(prefix.begin(), prefix.end());
  std::vector<Elem> images(_base.size(), 0);
  std::size_t qsize = _p_group ? _quot_radix.back() : 1;
  std::vector<std::vector<char>> spans(_base.size() + 1, std::vector<char>(qsize, 0));
  spans[0][0] = 1;
  search(0, images, spans, visit);
  _fixed.clear();
}

std::optional<Automorphism> HomSearch::first(std::span<const Elem> prefix)
{
  std::optional<Automorphism> found;
  run(prefix, [&](const std::vector<Elem> &, const Automorphism &map) {
    found = map;
    return false;
  });
  return found;
}

bool invariants_match(const Group &G, const Group &H)
{
  if (G.order() != H.order() || G.is_abelian() != H.is_abelian())
    return false;
  if (order_statistics(G) != order_statistics(H))
    return false;
  if (center(G).size() != center(H).size())
    return false;
  return derived(G).size() == derived(H).size();
}

std::optional<Automorphism> isomorphism_search(const Group &G, const Group &H,
                                               std::uint64_t node_budget)
{
  if (!invariants_match(G, H))
    return std::nullopt;
  HomSearch search(G, H, node_budget);
  return search.first();
}

} // namespace holo
