#include "holo/automorphism.hpp"

#include <algorithm>
#include <deque>

#include "holo/error.hpp"
#include "holo/isomorphism.hpp"

namespace holo {

Automorphism Automorphism::identity(std::size_t degree)
{
  std::vector<Elem> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Elem>(i);
  return Automorphism(std::move(images));
}

Automorphism Automorphism::inverse() const
{
  std::vector<Elem> out(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    out[_images[i]] = static_cast<Elem>(i);
  return Automorphism(std::move(out));
}

bool Automorphism::is_identity() const noexcept
{
  for (std::size_t i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return false;
  return true;
}

Automorphism operator*(const Automorphism &a, const Automorphism &b)
{
  std::vector<Elem> out(a._images.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = b._images[a._images[i]];
  return Automorphism(std::move(out));
}

bool is_automorphism(const Group &G, const Automorphism &alpha)
{
  std::size_t n = G.order();
  if (alpha.degree() != n || alpha(0) != 0)
    return false;
  std::vector<char> seen(n, 0);
  for (Elem g = 0; g < n; ++g) {
    Elem x = alpha(g);
    if (x >= n || seen[x])
      return false;
    seen[x] = 1;
  }
  // multiplicative on (g, s) for generators s implies it on all pairs
  for (Elem a = 0; a < n; ++a)
    for (Elem s : G.generators())
      if (alpha(G.mul(a, s)) != G.mul(alpha(a), alpha(s)))
        return false;
  return true;
}

Automorphism inner_automorphism(const Group &G, Elem g)
{
  std::vector<Elem> images(G.order());
  for (Elem h = 0; h < G.order(); ++h)
    images[h] = G.conj(h, g);
  return Automorphism(std::move(images));
}

bool is_central_automorphism(const Group &G, const Automorphism &alpha, const Subgroup &Z)
{
  for (Elem g : G.generators())
    if (!Z.contains(G.mul(G.inv(g), alpha(g))))
      return false;
  return true;
}

Automorphism commutator(const Automorphism &a, const Automorphism &b)
{
  return a.inverse() * b.inverse() * a * b;
}

std::size_t KeyHash::operator()(const std::vector<Elem> &key) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (Elem e : key) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t AutomorphismGroup::order() const noexcept
{
  std::uint64_t n = 1;
  for (std::size_t s : _orbit_sizes)
    n *= s;
  return n;
}

bool AutomorphismGroup::can_materialize() const noexcept
{
  return order() * _group.order() <= _options.materialize_cap;
}

std::vector<Elem> AutomorphismGroup::key(const Automorphism &alpha) const
{
  std::vector<Elem> k;
  k.reserve(_key_elements.size());
  for (Elem g : _key_elements)
    k.push_back(alpha(g));
  return k;
}

const std::vector<Automorphism> &AutomorphismGroup::elements() const
{
  if (!_elements.empty())
    return _elements;
  if (!can_materialize())
    raise(ErrorKind::OrderCapExceeded,
          "|Aut| * |G| = " + std::to_string(order()) + " * " +
            std::to_string(_group.order()) + " exceeds materialisation cap");

  std::vector<Automorphism> all{Automorphism::identity(_group.order())};
  for (std::size_t level = _transversals.size(); level-- > 0;) {
    std::vector<Automorphism> next;
    next.reserve(all.size() * _transversals[level].size());
    for (auto const &[point, u] : _transversals[level])
      for (auto const &a : all)
        next.push_back(a * u);
    all = std::move(next);
  }
  std::vector<std::pair<std::vector<Elem>, std::size_t>> keyed;
  keyed.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    keyed.emplace_back(key(all[i]), i);
  // identity first, the rest by key
  auto id_key = key(Automorphism::identity(_group.order()));
  std::sort(keyed.begin(), keyed.end(), [&](const auto &a, const auto &b) {
    bool ia = a.first == id_key, ib = b.first == id_key;
    if (ia != ib)
      return ia;
    return a.first < b.first;
  });

  _elements.reserve(all.size());
  _index.reserve(all.size());
  for (auto &[k, i] : keyed) {
    _index.emplace(k, _elements.size());
    _elements.push_back(std::move(all[i]));
  }
  return _elements;
}

std::optional<std::size_t> AutomorphismGroup::index_of_key(const std::vector<Elem> &k) const
{
  elements();
  auto it = _index.find(k);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> AutomorphismGroup::index_of(const Automorphism &alpha) const
{
  auto i = index_of_key(key(alpha));
  if (i && _elements[*i] == alpha)
    return i;
  return std::nullopt;
}

bool AutomorphismGroup::contains(const Automorphism &alpha) const
{
  if (alpha.degree() != _group.order())
    return false;
  Automorphism a = alpha;
  for (std::size_t level = 0; level < _base.size(); ++level) {
    auto it = _transversals[level].find(a(_base[level]));
    if (it == _transversals[level].end())
      return false;
    a = a * it->second.inverse();
  }
  return a.is_identity();
}

AutTable::AutTable(const AutomorphismGroup &A) : _A(&A) { A.elements(); }

std::uint32_t AutTable::mul(std::uint32_t a, std::uint32_t b) const
{
  auto const &x = (*this)[a];
  auto const &y = (*this)[b];
  std::vector<Elem> k;
  k.reserve(_A->key_elements().size());
  for (Elem e : _A->key_elements())
    k.push_back(y(x(e)));
  return static_cast<std::uint32_t>(*_A->index_of_key(k));
}

std::uint32_t AutTable::inv(std::uint32_t a) const
{
  if (_inverse.empty()) {
    _inverse.assign(size(), 0);
    for (std::uint32_t i = 0; i < size(); ++i)
      _inverse[i] = static_cast<std::uint32_t>(*_A->index_of_key(_A->key((*this)[i].inverse())));
  }
  return _inverse[a];
}

std::uint32_t AutTable::pow(std::uint32_t a, long long e) const
{
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::uint32_t r = identity();
  while (e > 0) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t AutTable::index(const Automorphism &alpha) const
{
  auto i = _A->index_of(alpha);
  if (!i)
    raise(ErrorKind::InvalidArgument, "automorphism is not in the group");
  return static_cast<std::uint32_t>(*i);
}

void AutomorphismGroup::build_chain(std::vector<Automorphism> gens)
{
  std::size_t L = _base.size();
  auto level_of = [&](const Automorphism &a) {
    for (std::size_t i = 0; i < L; ++i)
      if (a(_base[i]) != _base[i])
        return i;
    return L;
  };
  std::erase_if(gens, [](const Automorphism &a) { return a.is_identity(); });
  std::stable_sort(gens.begin(), gens.end(), [&](const auto &a, const auto &b) {
    return level_of(a) < level_of(b);
  });
  _generators = gens;

  _transversals.assign(L, {});
  _orbit_sizes.assign(L, 1);
  for (std::size_t i = 0; i < L; ++i) {
    std::vector<const Automorphism *> S;
    for (auto const &g : _generators)
      if (level_of(g) >= i)
        S.push_back(&g);
    auto &T = _transversals[i];
    T.emplace(_base[i], Automorphism::identity(_group.order()));
    std::deque<Elem> queue{_base[i]};
    while (!queue.empty()) {
      Elem v = queue.front();
      queue.pop_front();
      for (auto *s : S) {
        Elem w = (*s)(v);
        if (!T.contains(w)) {
          T.emplace(w, T.at(v) * *s);
          queue.push_back(w);
        }
      }
    }
    _orbit_sizes[i] = T.size();
  }
}

AutomorphismGroup automorphism_group(const Group &G, const AutSearchOptions &options)
{
  AutomorphismGroup A;
  A._group = G;
  A._options = options;
  HomSearch search(G, G, options.node_budget);
  A._base.assign(search.base().begin(), search.base().end());
  A._key_elements = group_prime(G) > 1 ? minimal_generators(G) : A._base;

  std::size_t L = A._base.size();
  std::vector<Automorphism> gens;
  // levels from the bottom: stabilizer of base[0..i-1] acting on base[i]
  for (std::size_t i = L; i-- > 0;) {
    std::vector<Automorphism> S;
    for (auto const &g : gens)
      S.push_back(g);
    std::vector<char> in_orbit(G.order(), 0);
    std::vector<Elem> orbit{A._base[i]};
    in_orbit[A._base[i]] = 1;
    auto close_orbit = [&]() {
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (auto const &s : S) {
          Elem w = s(orbit[k]);
          if (!in_orbit[w]) {
            in_orbit[w] = 1;
            orbit.push_back(w);
          }
        }
    };
    // gens found at deeper levels fix base[0..i-1] by construction
    close_orbit();
    std::vector<Elem> prefix(A._base.begin(), A._base.begin() + static_cast<long>(i));
    prefix.push_back(0);
    for (Elem v = 0; v < G.order(); ++v) {
      if (in_orbit[v] || G.element_order(v) != G.element_order(A._base[i]))
        continue;
      prefix.back() = v;
      if (auto alpha = search.first(prefix)) {
        gens.push_back(*alpha);
        S.push_back(*alpha);
        in_orbit[v] = 1;
        orbit.push_back(v);
        close_orbit();
      }
    }
  }
  A.build_chain(std::move(gens));
  return A;
}

AutomorphismGroup automorphism_group_from_generators(const Group &G,
                                                     std::vector<Automorphism> gens,
                                                     const AutSearchOptions &options)
{
  for (auto const &g : gens)
    if (!is_automorphism(G, g))
      raise(ErrorKind::CacheCorrupt, "cached generator is not an automorphism");
  AutomorphismGroup A;
  A._group = G;
  A._options = options;
  HomSearch search(G, G, options.node_budget);
  A._base.assign(search.base().begin(), search.base().end());
  A._key_elements = group_prime(G) > 1 ? minimal_generators(G) : A._base;
  A.build_chain(std::move(gens));
  return A;
}

} // namespace holo
