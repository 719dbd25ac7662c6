#include "holo/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "holo/error.hpp"

namespace holo {

namespace {

using Exps = std::vector<long long>;

constexpr int max_collection_depth = 64;

/// Class-2 collector over exponent vectors. Commutator words are central,
/// so moving x_k^b left past x_j^a (j > k) leaves the central factor
/// [x_j, x_k]^{ab}; an overflowing x_k^{m_k} is replaced by its power word
/// after being moved past the reduced tail.
class Collector {
public:
  explicit Collector(const ClassTwoPresentation &pres)
  : _pres(pres), _n(pres.generator_count()), _order(pres.declared_order()),
    _power_elems(_n), _comm_elems(_n * _n)
  {
    for (unsigned m : pres.orders)
      _m.push_back(m);
  }

  Exps identity() const { return Exps(_n, 0); }

  Exps unit(unsigned k) const
  {
    Exps e = identity();
    e[k] = 1;
    return e;
  }

  Exps multiply(const Exps &a, const Exps &b, int depth = 0)
  {
    if (depth > max_collection_depth)
      raise(ErrorKind::InconsistentPresentation, "collection does not terminate");

    Exps r(_n);
    for (std::size_t i = 0; i < _n; ++i)
      r[i] = a[i] + b[i];

    std::vector<std::pair<const Exps *, long long>> centrals;
    for (std::size_t k = 0; k < _n; ++k) {
      if (b[k] == 0)
        continue;
      for (std::size_t j = k + 1; j < _n; ++j) {
        if (a[j] != 0 && !is_trivial(commutator(j, k, depth)))
          centrals.emplace_back(&commutator(j, k, depth), a[j] * b[k]);
      }
    }

    std::deque<const Exps *> trailing;
    for (std::size_t k = _n; k-- > 0;) {
      if (r[k] < _m[k])
        continue;
      r[k] -= _m[k];
      // x_k^{m_k} moves right past the reduced tail: [x_k, x_j] = [x_j, x_k]^-1
      for (std::size_t j = k + 1; j < _n; ++j) {
        if (r[j] != 0 && !is_trivial(commutator(j, k, depth)))
          centrals.emplace_back(&commutator(j, k, depth), -_m[k] * r[j]);
      }
      const Exps &w = power(k, depth);
      if (!is_trivial(w))
        trailing.push_front(&w);
    }

    Exps result = std::move(r);
    for (const Exps *w : trailing)
      result = multiply(result, *w, depth + 1);
    for (auto const &[c, e] : centrals) {
      long long reduced = mod_order(e);
      if (reduced != 0)
        result = multiply(result, power_of(*c, reduced, depth + 1), depth + 1);
    }
    return result;
  }

  Exps power_of(const Exps &a, long long e, int depth)
  {
    Exps result = identity();
    Exps base = a;
    auto k = static_cast<unsigned long long>(mod_order(e));
    while (k != 0) {
      if (k & 1)
        result = multiply(result, base, depth + 1);
      k >>= 1;
      if (k != 0)
        base = multiply(base, base, depth + 1);
    }
    return result;
  }

  Exps letter(const Letter &l, int depth)
  {
    long long e = mod_order(l.exp);
    if (e < _m[l.gen]) {
      Exps v = identity();
      v[l.gen] = e;
      return v;
    }
    return power_of(unit(l.gen), e, depth);
  }

  Exps evaluate(const Word &w, int depth = 0)
  {
    Exps result = identity();
    for (auto const &l : w)
      result = multiply(result, letter(l, depth + 1), depth + 1);
    return result;
  }

  const Exps &commutator(std::size_t j, std::size_t k, int depth)
  {
    auto &slot = _comm_elems[j * _n + k];
    if (!slot) {
      auto it = _pres.commutators.find({static_cast<unsigned>(j), static_cast<unsigned>(k)});
      slot = (it == _pres.commutators.end()) ? identity() : evaluate(it->second, depth + 1);
    }
    return *slot;
  }

  const Exps &power(std::size_t k, int depth)
  {
    auto &slot = _power_elems[k];
    if (!slot) {
      auto it = _pres.powers.find(static_cast<unsigned>(k));
      slot = (it == _pres.powers.end()) ? identity() : evaluate(it->second, depth + 1);
    }
    return *slot;
  }

private:
  static bool is_trivial(const Exps &v)
  { return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }); }

  long long mod_order(long long e) const
  {
    auto n = static_cast<long long>(_order);
    e %= n;
    return e < 0 ? e + n : e;
  }

  const ClassTwoPresentation &_pres;
  std::size_t _n;
  std::uint64_t _order;
  std::vector<long long> _m;
  std::vector<std::optional<Exps>> _power_elems;
  std::vector<std::optional<Exps>> _comm_elems;
};

std::uint64_t fnv1a(std::span<const Elem> table, std::size_t order)
{
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  feed(order);
  for (Elem e : table)
    feed(e);
  return h;
}

std::vector<Elem> greedy_generators(std::size_t order, std::span<const Elem> table)
{
  std::vector<Elem> gens;
  std::vector<char> in(order, 0);
  in[0] = 1;
  std::vector<Elem> members{0};
  for (Elem g = 1; g < order; ++g) {
    if (in[g])
      continue;
    gens.push_back(g);
    // extend closure: new subgroup is generated by members and g
    std::vector<Elem> frontier = members;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (Elem s : gens) {
        Elem x = table[static_cast<std::size_t>(frontier[i]) * order + s];
        if (!in[x]) {
          in[x] = 1;
          frontier.push_back(x);
        }
      }
    }
    members = std::move(frontier);
  }
  return gens;
}

} // namespace

Group::Group()
: _data(std::make_shared<Data>())
{}

std::shared_ptr<Group::Data> Group::finish(std::shared_ptr<Data> d)
{
  std::size_t n = d->order;
  d->inverse.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (d->table[static_cast<std::size_t>(a) * n + b] == 0) {
        d->inverse[a] = b;
        break;
      }
    }
  }
  d->orders.assign(n, 1);
  for (Elem a = 1; a < n; ++a) {
    unsigned k = 1;
    Elem x = a;
    while (x != 0) {
      x = d->table[static_cast<std::size_t>(x) * n + a];
      ++k;
    }
    d->orders[a] = k;
  }
  d->abelian = true;
  for (Elem a = 0; a < n && d->abelian; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (d->table[static_cast<std::size_t>(a) * n + b] !=
          d->table[static_cast<std::size_t>(b) * n + a]) {
        d->abelian = false;
        break;
      }
  d->hash = fnv1a(d->table, n);
  return d;
}

namespace {

/// Identity at 0, Latin square, and associativity by Light's test: if
/// (ab)s = a(bs) for all a, b and every s in a generating set then the
/// operation is associative.
std::optional<std::string> table_defect(std::span<const Elem> t, std::size_t n,
                                        std::span<const Elem> gens)
{
  auto at = [&](Elem a, Elem b) { return t[static_cast<std::size_t>(a) * n + b]; };
  for (Elem a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a)
      return "element 0 is not a two-sided identity";
  }
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      Elem x = at(a, b);
      if (x >= n || seen[x])
        return "row " + std::to_string(a) + " is not a permutation";
      seen[x] = 1;
    }
  }
  for (Elem b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      Elem x = at(a, b);
      if (seen[x])
        return "column " + std::to_string(b) + " is not a permutation";
      seen[x] = 1;
    }
  }
  for (Elem s : gens)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (at(at(a, b), s) != at(a, at(b, s)))
          return "associativity fails at (" + std::to_string(a) + ", " +
                 std::to_string(b) + ", " + std::to_string(s) + ")";
  return std::nullopt;
}

} // namespace

Group Group::from_table(std::vector<Elem> table, std::size_t order)
{
  if (order == 0 || table.size() != order * order)
    raise(ErrorKind::NotAGroup, "table size does not match the order");
  for (Elem x : table)
    if (x >= order)
      raise(ErrorKind::NotAGroup, "table entry out of range");

  auto d = std::make_shared<Data>();
  d->order = order;
  d->table = std::move(table);
  d->generators = greedy_generators(order, d->table);
  if (auto defect = table_defect(d->table, order, d->generators))
    raise(ErrorKind::NotAGroup, *defect);
  return Group(finish(std::move(d)));
}

const ClassTwoPresentation &Group::presentation() const
{
  if (!_data->presentation)
    raise(ErrorKind::InvalidArgument, "group has no presentation");
  return *_data->presentation;
}

std::span<const int> Group::normal_form(Elem a) const
{
  std::size_t n = _data->strides.size();
  if (n == 0 && !_data->presentation)
    raise(ErrorKind::InvalidArgument, "group has no presentation");
  return std::span<const int>(_data->normal_forms).subspan(static_cast<std::size_t>(a) * n, n);
}

Elem Group::from_normal_form(std::span<const int> exps) const
{
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exps.size(); ++i)
    idx += static_cast<std::size_t>(exps[i]) * _data->strides[i];
  return static_cast<Elem>(idx);
}

Elem Group::pow(Elem a, long long e) const noexcept
{
  long long ord = element_order(a);
  e %= ord;
  if (e < 0)
    e += ord;
  Elem result = 0;
  Elem base = a;
  while (e != 0) {
    if (e & 1)
      result = mul(result, base);
    e >>= 1;
    if (e != 0)
      base = mul(base, base);
  }
  return result;
}

Group build_group(const ClassTwoPresentation &pres, const BuildOptions &options)
{
  pres.validate();
  std::uint64_t declared = pres.declared_order();
  if (declared > options.order_cap)
    raise(ErrorKind::OrderCapExceeded,
          "declared order " + std::to_string(declared) + " exceeds cap " +
            std::to_string(options.order_cap));

  std::size_t n = static_cast<std::size_t>(declared);
  std::size_t ngens = pres.generator_count();

  auto d = std::make_shared<Group::Data>();
  d->order = n;
  d->presentation = std::make_shared<const ClassTwoPresentation>(pres);
  d->strides.assign(ngens, 1);
  for (std::size_t i = ngens; i-- > 1;)
    d->strides[i - 1] = d->strides[i] * pres.orders[i];

  d->normal_forms.assign(n * ngens, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < ngens; ++i) {
      d->normal_forms[idx * ngens + i] = static_cast<int>(rest / d->strides[i]);
      rest %= d->strides[i];
    }
  }

  auto decode = [&](std::size_t idx) {
    Exps v(ngens);
    for (std::size_t i = 0; i < ngens; ++i)
      v[i] = d->normal_forms[idx * ngens + i];
    return v;
  };
  const std::vector<std::size_t> strides = d->strides;
  auto encode = [&](const Exps &v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < ngens; ++i) {
      if (v[i] < 0 || v[i] >= static_cast<long long>(pres.orders[i]))
        raise(ErrorKind::InconsistentPresentation, "collection left an unreduced exponent");
      idx += static_cast<std::size_t>(v[i]) * strides[i];
    }
    return static_cast<Elem>(idx);
  };

  Collector collector(pres);

  // right multiplication by each generator
  std::vector<std::vector<Elem>> right(ngens, std::vector<Elem>(n));
  for (std::size_t k = 0; k < ngens; ++k) {
    Exps unit = collector.unit(static_cast<unsigned>(k));
    for (std::size_t g = 0; g < n; ++g)
      right[k][g] = encode(collector.multiply(decode(g), unit));
  }

  // g * h = (g * h') * x_k where h = h' x_k in normal form
  d->table.assign(n * n, 0);
  std::vector<std::size_t> last_gen(n, 0);
  for (std::size_t h = 1; h < n; ++h) {
    std::size_t k = ngens;
    while (d->normal_forms[h * ngens + (k - 1)] == 0)
      --k;
    last_gen[h] = k - 1;
  }
  for (std::size_t g = 0; g < n; ++g) {
    Elem *row = d->table.data() + g * n;
    row[0] = static_cast<Elem>(g);
    for (std::size_t h = 1; h < n; ++h) {
      std::size_t k = last_gen[h];
      row[h] = right[k][row[h - d->strides[k]]];
    }
  }

  for (std::size_t k = 0; k < ngens; ++k)
    d->generators.push_back(static_cast<Elem>(d->strides[k]));

  if (auto defect = table_defect(d->table, n, d->generators))
    raise(ErrorKind::InconsistentPresentation, *defect);

  Group G(Group::finish(std::move(d)));

  // the collected group must satisfy the presentation's relations
  auto gen = [&](std::size_t k) { return G.generators()[k]; };
  for (std::size_t k = 0; k < ngens; ++k) {
    Elem lhs = G.pow(gen(k), pres.orders[k]);
    auto it = pres.powers.find(static_cast<unsigned>(k));
    Elem rhs = it == pres.powers.end() ? 0 : encode(collector.evaluate(it->second));
    if (lhs != rhs)
      raise(ErrorKind::InconsistentPresentation,
            "power relation of generator " + std::to_string(k + 1) + " fails");
  }
  Subgroup Z = center(G);
  for (std::size_t j = 0; j < ngens; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Elem lhs = G.comm(gen(j), gen(i));
      auto it = pres.commutators.find({static_cast<unsigned>(j), static_cast<unsigned>(i)});
      Elem rhs = it == pres.commutators.end() ? 0 : encode(collector.evaluate(it->second));
      if (lhs != rhs)
        raise(ErrorKind::InconsistentPresentation,
              "commutator relation (" + std::to_string(j + 1) + "," +
                std::to_string(i + 1) + ") fails");
      if (!Z.contains(rhs))
        raise(ErrorKind::InconsistentPresentation,
              "commutator word (" + std::to_string(j + 1) + "," +
                std::to_string(i + 1) + ") is not central");
    }
  }
  if (!is_class_le_two(G))
    raise(ErrorKind::InconsistentPresentation, "collected group has class > 2");
  return G;
}

bool Subgroup::contains(Elem g) const noexcept
{ return std::binary_search(elements.begin(), elements.end(), g); }

Subgroup subgroup_closure(const Group &G, std::span<const Elem> gens)
{
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : gens) {
      Elem x = G.mul(members[i], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members), std::vector<Elem>(gens.begin(), gens.end())};
}

Subgroup center(const Group &G)
{
  std::vector<Elem> z;
  auto gens = G.generators();
  for (Elem a = 0; a < G.order(); ++a) {
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](Elem s) { return G.mul(a, s) == G.mul(s, a); });
    if (central)
      z.push_back(a);
  }
  return Subgroup{z, z};
}

Subgroup derived(const Group &G)
{
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> comms;
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b) {
      Elem c = G.comm(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  std::sort(comms.begin(), comms.end());
  return subgroup_closure(G, comms);
}

Subgroup power_subgroup(const Group &G, unsigned k)
{
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> powers;
  for (Elem a = 0; a < G.order(); ++a) {
    Elem x = G.pow(a, k);
    if (!seen[x]) {
      seen[x] = 1;
      powers.push_back(x);
    }
  }
  std::sort(powers.begin(), powers.end());
  return subgroup_closure(G, powers);
}

unsigned group_prime(const Group &G) noexcept
{
  std::size_t n = G.order();
  if (n == 1)
    return 1;
  unsigned p = 2;
  while (n % p != 0)
    ++p;
  while (n % p == 0)
    n /= p;
  return n == 1 ? p : 0;
}

Subgroup frattini(const Group &G)
{
  unsigned p = group_prime(G);
  if (p == 0)
    raise(ErrorKind::InvalidArgument, "Frattini subgroup is computed for p-groups only");
  if (p == 1)
    return Subgroup{{0}, {}};
  Subgroup D = derived(G);
  Subgroup P = power_subgroup(G, p);
  std::vector<Elem> gens = D.elements;
  gens.insert(gens.end(), P.elements.begin(), P.elements.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_closure(G, gens);
}

unsigned exponent(const Group &G)
{
  unsigned e = 1;
  for (Elem a = 0; a < G.order(); ++a)
    e = std::lcm(e, G.element_order(a));
  return e;
}

bool is_class_le_two(const Group &G)
{
  Subgroup Z = center(G);
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b : G.generators())
      if (!Z.contains(G.comm(a, b)))
        return false;
  return true;
}

bool is_normal(const Group &G, const Subgroup &N)
{
  for (Elem n : N.elements)
    for (Elem s : G.generators())
      if (!N.contains(G.conj(n, s)))
        return false;
  return true;
}

std::vector<Elem> minimal_generators(const Group &G)
{
  if (G.order() == 1)
    return {};
  Subgroup F = frattini(G);
  std::vector<Elem> chosen;
  std::vector<Elem> span_gens = F.elements;
  std::size_t covered = F.size();

  auto try_add = [&](Elem g) {
    std::vector<Elem> trial = span_gens;
    trial.push_back(g);
    Subgroup S = subgroup_closure(G, trial);
    if (S.size() > covered) {
      chosen.push_back(g);
      span_gens = std::move(trial);
      covered = S.size();
    }
  };

  if (G.has_presentation())
    for (Elem g : G.generators())
      if (covered < G.order())
        try_add(g);
  for (Elem g = 1; g < G.order() && covered < G.order(); ++g)
    try_add(g);
  return chosen;
}

Quotient quotient(const Group &G, const Subgroup &N)
{
  if (!is_normal(G, N))
    raise(ErrorKind::NotNormal, "subgroup is not normal");

  std::size_t n = G.order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> proj(n, unset);
  std::vector<Elem> lifts;
  for (Elem g = 0; g < n; ++g) {
    if (proj[g] != unset)
      continue;
    auto idx = static_cast<Elem>(lifts.size());
    lifts.push_back(g);
    for (Elem x : N.elements)
      proj[G.mul(g, x)] = idx;
  }

  std::size_t q = lifts.size();
  std::vector<Elem> table(q * q);
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a) * q + b] = proj[G.mul(lifts[a], lifts[b])];

  return Quotient{Group::from_table(std::move(table), q), std::move(proj), std::move(lifts)};
}

std::vector<std::size_t> order_statistics(const Group &G)
{
  std::vector<std::size_t> stats(G.order() + 1, 0);
  for (Elem a = 0; a < G.order(); ++a)
    ++stats[G.element_order(a)];
  return stats;
}

} // namespace holo
