#include "holo/holomorph.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "holo/error.hpp"
#include "holo/isomorphism.hpp"

namespace holo {

Elem hol_act(const Group &G, const HolElement &e, Elem h)
{
  return G.mul(e.alpha(h), e.g);
}

HolElement hol_mul(const Group &G, const HolElement &a, const HolElement &b)
{
  return {a.alpha * b.alpha, G.mul(b.alpha(a.g), b.g)};
}

HolElement hol_inv(const Group &G, const HolElement &a)
{
  Automorphism ai = a.alpha.inverse();
  return {ai, ai(G.inv(a.g))};
}

HolElement rho(const Group &G, Elem g)
{
  return {Automorphism::identity(G.order()), g};
}

HolElement lambda(const Group &G, Elem g)
{
  return {inner_automorphism(G, G.inv(g)), g};
}

GammaMap::GammaMap(std::vector<Automorphism> pool, std::vector<std::uint32_t> index)
{
  std::map<std::span<const Elem>, std::uint32_t,
           decltype([](std::span<const Elem> a, std::span<const Elem> b) {
             return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
           })>
    seen;
  std::vector<std::uint32_t> remap(pool.size(), UINT32_MAX);
  _index.resize(index.size());
  for (std::size_t h = 0; h < index.size(); ++h) {
    std::uint32_t i = index[h];
    if (i >= pool.size())
      raise(ErrorKind::InvalidArgument, "gamma index out of range");
    if (remap[i] == UINT32_MAX) {
      auto [it, fresh] = seen.emplace(pool[i].images(), static_cast<std::uint32_t>(_pool.size()));
      if (fresh)
        _pool.push_back(pool[i]);
      remap[i] = it->second;
    }
    _index[h] = remap[i];
  }
}

GammaMap GammaMap::identity(const Group &G)
{
  return GammaMap({Automorphism::identity(G.order())},
                  std::vector<std::uint32_t>(G.order(), 0));
}

GammaMap GammaMap::from_values(std::vector<Automorphism> values)
{
  std::vector<std::uint32_t> index(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    index[i] = static_cast<std::uint32_t>(i);
  return GammaMap(std::move(values), std::move(index));
}

std::vector<Elem> GammaMap::signature(std::span<const Elem> key) const
{
  std::vector<Elem> sig;
  sig.reserve(_index.size() * key.size());
  for (std::uint32_t i : _index)
    for (Elem k : key)
      sig.push_back(_pool[i](k));
  return sig;
}

bool is_anti_homomorphism(const Group &G, const GammaMap &gamma)
{
  auto gens = G.generators();
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem s : gens) {
      auto const &lhs = gamma(G.mul(g, s));
      auto const &a = gamma(s);
      auto const &b = gamma(g);
      for (Elem e : gens)
        if (lhs(e) != b(a(e)))
          return false;
    }
  return true;
}

bool is_equivariant(const Group &G, const GammaMap &gamma, std::span<const Automorphism> betas)
{
  auto gens = G.generators();
  for (auto const &beta : betas) {
    Automorphism bi = beta.inverse();
    for (Elem g = 0; g < G.order(); ++g) {
      auto const &lhs = gamma(beta(g));
      auto const &c = gamma(g);
      for (Elem e : gens)
        if (lhs(e) != beta(c(bi(e))))
          return false;
    }
  }
  return true;
}

bool is_gamma(const Group &G, const AutomorphismGroup &A, const GammaMap &gamma)
{
  if (gamma.degree() != G.order() || !gamma(0).is_identity())
    return false;
  for (auto const &a : gamma.pool())
    if (!A.contains(a))
      return false;
  return is_anti_homomorphism(G, gamma) && is_equivariant(G, gamma, A.generators());
}

Group circle_group(const Group &G, const GammaMap &gamma)
{
  std::size_t n = G.order();
  std::vector<Elem> table(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      table[g * n + h] = G.mul(gamma.act(g, h), h);
  return Group::from_table(std::move(table), n);
}

RegularSubgroup regular_subgroup(const Group &G, GammaMap gamma)
{
  RegularSubgroup N;
  N.circle = circle_group(G, gamma);
  N.gamma = std::move(gamma);
  N.circle_abelian = N.circle.is_abelian();
  return N;
}

PooledHol::PooledHol(const Group &G, const GammaMap &gamma)
: _G(G), _gamma(gamma), _n(gamma.pool().size())
{
  auto gens = G.generators();
  auto pool = gamma.pool();
  std::unordered_map<std::vector<Elem>, std::uint32_t, KeyHash> lookup;
  auto key = [&](auto &&f) {
    std::vector<Elem> k;
    for (Elem e : gens)
      k.push_back(f(e));
    return k;
  };
  for (std::uint32_t i = 0; i < _n; ++i)
    lookup.emplace(key([&](Elem e) { return pool[i](e); }), i);

  auto find = [&](const std::vector<Elem> &k) {
    auto it = lookup.find(k);
    if (it == lookup.end())
      raise(ErrorKind::ClosureFailure, "gamma(G) is not closed under composition");
    return it->second;
  };
  _identity = find(key([](Elem e) { return e; }));
  _mul.resize(_n * _n);
  _inv.resize(_n);
  for (std::uint32_t a = 0; a < _n; ++a)
    for (std::uint32_t b = 0; b < _n; ++b) {
      std::uint32_t c = find(key([&](Elem e) { return pool[b](pool[a](e)); }));
      _mul[a * _n + b] = c;
      if (c == _identity)
        _inv[a] = b;
    }
}

PooledHol::Element PooledHol::inv(Element x) const
{
  // (alpha, g)^-1 = (alpha^-1, (g^-1)^{alpha^-1})
  std::uint32_t ai = _inv[x.a];
  return {ai, _gamma.pool()[ai](_G.inv(x.g))};
}

PooledHol::Element PooledHol::pow(Element x, long long e) const
{
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  Element r{_identity, 0};
  while (e > 0) {
    if (e & 1)
      r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

unsigned PooledHol::order(Element x) const
{
  Element id{_identity, 0};
  Element y = x;
  unsigned k = 1;
  while (!(y == id)) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

namespace {

struct GeneratorRelation {
  Word lhs;
  Word rhs;
};

std::size_t word_level(const Word &w)
{
  std::size_t m = 0;
  for (auto const &l : w)
    m = std::max<std::size_t>(m, l.gen);
  return m;
}

} // namespace

std::vector<GammaMap> enumerate_gammas_generic(const Group &G, const AutomorphismGroup &A,
                                               const EnumOptions &options)
{
  if (!G.has_presentation())
    raise(ErrorKind::InvalidArgument, "generic enumeration needs a presented group");
  AutTable T(A);
  auto const &pres = G.presentation();
  auto gens = G.generators();
  std::size_t n = gens.size();
  auto key = A.key_elements();

  // relations of the presentation, checked in Aut^op once all letters are set
  std::vector<GeneratorRelation> rels;
  for (unsigned k = 0; k < n; ++k) {
    GeneratorRelation r{{{k, static_cast<long long>(pres.orders[k])}}, {}};
    if (auto it = pres.powers.find(k); it != pres.powers.end())
      r.rhs = it->second;
    rels.push_back(std::move(r));
  }
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < j; ++i) {
      GeneratorRelation r{{{j, -1}, {i, -1}, {j, 1}, {i, 1}}, {}};
      if (auto it = pres.commutators.find({j, i}); it != pres.commutators.end())
        r.rhs = it->second;
      rels.push_back(std::move(r));
    }
  std::vector<std::vector<std::size_t>> at_level(n);
  std::vector<std::optional<std::size_t>> forced(n);
  for (std::size_t ri = 0; ri < rels.size(); ++ri) {
    auto const &r = rels[ri];
    std::size_t lvl = std::max(word_level(r.lhs), r.rhs.empty() ? 0 : word_level(r.rhs));
    if (r.rhs.size() == 1 && r.rhs[0].exp == 1 && r.rhs[0].gen > word_level(r.lhs) &&
        !forced[r.rhs[0].gen])
      forced[r.rhs[0].gen] = ri;
    at_level[lvl].push_back(ri);
  }

  // gamma(x_k) has order dividing |x_k| and commutes with Stab_Aut(x_k)
  std::vector<std::vector<std::uint32_t>> candidates(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (forced[k])
      continue;
    std::vector<std::uint32_t> stab;
    for (std::uint32_t i = 0; i < T.size(); ++i)
      if (T[i](gens[k]) == gens[k])
        stab.push_back(i);
    unsigned ord = G.element_order(gens[k]);
    for (std::uint32_t i = 0; i < T.size(); ++i) {
      if (T.pow(i, ord) != AutTable::identity())
        continue;
      bool commutes = true;
      for (std::uint32_t s : stab) {
        for (Elem e : key)
          if (T[s](T[i](e)) != T[i](T[s](e))) {
            commutes = false;
            break;
          }
        if (!commutes)
          break;
      }
      if (commutes)
        candidates[k].push_back(i);
    }
  }

  std::vector<std::uint32_t> val(n, 0);
  auto eval = [&](const Word &w) {
    std::uint32_t r = AutTable::identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      r = T.mul(r, T.pow(val[it->gen], it->exp));
    return r;
  };

  std::vector<Automorphism> beta_inv;
  for (auto const &b : A.generators())
    beta_inv.push_back(b.inverse());

  std::vector<GammaMap> found;
  std::uint64_t nodes = 0;

  auto leaf = [&]() {
    // gamma(x_0^a_0 ... x_{n-1}^a_{n-1}) = gamma(x_{n-1})^a_{n-1} ... gamma(x_0)^a_0
    std::vector<std::vector<std::uint32_t>> powers(n);
    for (std::size_t k = 0; k < n; ++k) {
      powers[k].assign(pres.orders[k], AutTable::identity());
      for (unsigned a = 1; a < pres.orders[k]; ++a)
        powers[k][a] = T.mul(powers[k][a - 1], val[k]);
    }
    std::vector<std::uint32_t> total(G.order());
    for (Elem g = 0; g < G.order(); ++g) {
      auto nf = G.normal_form(g);
      std::uint32_t r = AutTable::identity();
      for (std::size_t k = n; k-- > 0;)
        if (nf[k] != 0)
          r = T.mul(r, powers[k][static_cast<std::size_t>(nf[k])]);
      total[g] = r;
    }
    auto const &betas = A.generators();
    for (std::size_t b = 0; b < betas.size(); ++b)
      for (std::size_t k = 0; k < n; ++k) {
        auto const &lhs = T[total[betas[b](gens[k])]];
        auto const &c = T[val[k]];
        for (Elem e : key)
          if (lhs(e) != betas[b](c(beta_inv[b](e))))
            return;
      }
    std::vector<Automorphism> pool;
    std::vector<std::uint32_t> index(G.order());
    std::unordered_map<std::uint32_t, std::uint32_t> slot;
    for (Elem g = 0; g < G.order(); ++g) {
      auto [it, fresh] = slot.emplace(total[g], static_cast<std::uint32_t>(pool.size()));
      if (fresh)
        pool.push_back(T[total[g]]);
      index[g] = it->second;
    }
    found.emplace_back(std::move(pool), std::move(index));
  };

  auto search = [&](auto &&self, std::size_t level) -> void {
    if (level == n) {
      leaf();
      return;
    }
    auto attempt = [&](std::uint32_t v) {
      if (++nodes > options.node_budget)
        raise(ErrorKind::SearchBudgetExceeded,
              "gamma enumeration exceeded " + std::to_string(options.node_budget) + " nodes");
      val[level] = v;
      for (std::size_t ri : at_level[level])
        if (eval(rels[ri].lhs) != eval(rels[ri].rhs))
          return;
      self(self, level + 1);
    };
    if (forced[level]) {
      attempt(eval(rels[*forced[level]].lhs));
      return;
    }
    for (std::uint32_t v : candidates[level])
      attempt(v);
  };
  search(search, 0);

  std::vector<std::pair<std::vector<Elem>, std::size_t>> order;
  for (std::size_t i = 0; i < found.size(); ++i)
    order.emplace_back(found[i].signature(key), i);
  std::sort(order.begin(), order.end());
  std::vector<GammaMap> sorted;
  for (auto &[sig, i] : order)
    sorted.push_back(std::move(found[i]));
  return sorted;
}

bool is_normal_in_hol(const Group &G, const AutomorphismGroup &A, const GammaMap &gamma)
{
  if (gamma.degree() != G.order())
    return false;
  for (auto const &a : gamma.pool())
    if (!A.contains(a))
      return false;
  auto gens = G.generators();

  // closure: nu(g) nu(h) = (gamma(g) gamma(h), g^{gamma(h)} h) must be nu(...)
  if (!gamma(0).is_identity())
    return false;
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h) {
      auto const &target = gamma(G.mul(gamma.act(g, h), h));
      auto const &a = gamma(g);
      auto const &b = gamma(h);
      for (Elem e : gens)
        if (target(e) != b(a(e)))
          return false;
    }

  auto in_N = [&](const HolElement &x) { return x.alpha == gamma(x.g); };
  auto conj = [&](const HolElement &x, const HolElement &y) {
    return hol_mul(G, hol_mul(G, hol_inv(G, y), x), y);
  };
  for (Elem s : gens) {
    HolElement nu{gamma(s), s};
    for (auto const &beta : A.generators())
      if (!in_N(conj(nu, HolElement{beta, 0})))
        return false;
    for (Elem t : gens)
      if (!in_N(conj(nu, rho(G, t))))
        return false;
  }
  return true;
}

std::vector<RegularSubgroup> regular_subgroups(const Group &G, std::vector<GammaMap> gammas,
                                               std::uint64_t iso_budget)
{
  std::vector<RegularSubgroup> out;
  out.reserve(gammas.size());
  for (auto &gamma : gammas) {
    RegularSubgroup N = regular_subgroup(G, std::move(gamma));
    N.iso_to_G = isomorphism_search(G, N.circle, iso_budget).has_value();
    out.push_back(std::move(N));
  }
  return out;
}

std::vector<RegularSubgroup> jc_set(const Group &G, const AutomorphismGroup &A,
                                    const EnumOptions &options)
{
  return regular_subgroups(G, enumerate_gammas_generic(G, A, options), options.node_budget);
}

std::vector<RegularSubgroup> hc_set(std::span<const RegularSubgroup> jc)
{
  std::vector<RegularSubgroup> out;
  for (auto const &N : jc)
    if (N.iso_to_G)
      out.push_back(N);
  return out;
}

CheckReport formulas_check(const Group &G, const AutomorphismGroup &A, const GammaMap &gamma)
{
  CheckReport rep;
  auto gens = G.generators();
  std::vector<Automorphism> pool_inv;
  for (auto const &a : gamma.pool())
    pool_inv.push_back(a.inverse());

  std::span<const Automorphism> betas = A.generators();
  if (A.can_materialize())
    betas = A.elements();

  // gamma(g^beta g^-1) = [gamma(g), beta]
  for (auto const &beta : betas) {
    Automorphism bi = beta.inverse();
    for (Elem g = 0; g < G.order(); ++g) {
      ++rep.checked;
      auto const &lhs = gamma(G.mul(beta(g), G.inv(g)));
      auto const &c = gamma(g);
      auto const &ci = pool_inv[gamma.index()[g]];
      for (Elem e : gens)
        if (lhs(e) != beta(c(bi(ci(e))))) {
          rep.fail("first identity fails at g = " + std::to_string(g));
          return rep;
        }
    }
  }

  // gamma([h, g^-1]) = iota([gamma(g), h]) with [gamma(g), h] = rho((h^-1)^{gamma(g)} h)
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h) {
      ++rep.checked;
      Elem z = G.mul(gamma.act(G.inv(h), g), h);
      Elem w = G.mul(G.mul(G.inv(h), g), G.mul(h, G.inv(g)));
      auto const &lhs = gamma(w);
      for (Elem e : gens)
        if (lhs(e) != G.conj(e, z)) {
          rep.fail("second identity fails at g = " + std::to_string(g) +
                   ", h = " + std::to_string(h));
          return rep;
        }
    }
  return rep;
}

EqcondReport eqcond_check(const Group &G, const GammaMap &gamma)
{
  EqcondReport r;
  auto pool = gamma.pool();
  auto gens = G.generators();
  Subgroup Z = center(G), D = derived(G);
  std::vector<char> trivial(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    trivial[i] = pool[i].is_identity();

  r.derived_in_kernel = std::all_of(D.elements.begin(), D.elements.end(),
                                    [&](Elem g) { return trivial[gamma.index()[g]]; });

  r.image_abelian = true;
  for (std::size_t a = 0; a < pool.size() && r.image_abelian; ++a)
    for (std::size_t b = a + 1; b < pool.size() && r.image_abelian; ++b)
      for (Elem e : gens)
        if (pool[a](pool[b](e)) != pool[b](pool[a](e))) {
          r.image_abelian = false;
          break;
        }

  // [alpha, g] = rho((g^-1)^alpha g)
  r.commutators_central = true;
  r.commutators_in_kernel = true;
  for (auto const &alpha : pool)
    for (Elem g = 0; g < G.order(); ++g) {
      Elem c = G.mul(G.inv(alpha(g)), g);
      r.commutators_central = r.commutators_central && Z.contains(c);
      r.commutators_in_kernel = r.commutators_in_kernel && trivial[gamma.index()[c]];
    }

  r.derived_fixed = true;
  for (auto const &alpha : pool)
    for (Elem g : D.elements)
      r.derived_fixed = r.derived_fixed && alpha(g) == g;
  return r;
}

bool central_hypotheses(const Group &G, const GammaMap &gamma)
{
  Subgroup Z = center(G);
  for (auto const &alpha : gamma.pool()) {
    if (!is_central_automorphism(G, alpha, Z))
      return false;
    for (Elem z : Z.elements)
      if (alpha(z) != z)
        return false;
  }
  return true;
}

CheckReport commutator_of_nu_check(const Group &G, const GammaMap &gamma)
{
  CheckReport rep;
  PooledHol P(G, gamma);
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h) {
      ++rep.checked;
      Elem a = G.mul(G.inv(g), gamma.act(g, h));  // [g, gamma(h)]
      Elem b = G.mul(G.inv(h), gamma.act(h, g));  // [h, gamma(g)]
      Elem w = G.mul(G.mul(G.comm(g, h), a), G.inv(b));
      if (!(P.comm(P.nu(g), P.nu(h)) == P.nu(w))) {
        rep.fail("commutator formula fails at g = " + std::to_string(g) +
                 ", h = " + std::to_string(h));
        return rep;
      }
    }
  return rep;
}

CheckReport powers_check(const Group &G, const GammaMap &gamma)
{
  CheckReport rep;
  PooledHol P(G, gamma);
  unsigned e = exponent(G);
  for (Elem g = 0; g < G.order(); ++g) {
    auto x = P.nu(g);
    for (unsigned n = 1; n <= e; n += 2) {
      ++rep.checked;
      Elem gn = G.pow(g, n);
      Elem rhs = gamma.act(gn, G.pow(g, (n - 1) / 2));
      if (!(P.pow(x, n) == P.nu(rhs))) {
        rep.fail("power formula fails at g = " + std::to_string(g) + ", n = " + std::to_string(n));
        return rep;
      }
    }
    if (P.order(x) != G.element_order(g)) {
      rep.fail("order of nu(g) differs from order of g at g = " + std::to_string(g));
      return rep;
    }
  }
  return rep;
}

CheckReport nu_isomorphism_check(const Group &G, const RegularSubgroup &N)
{
  CheckReport rep;
  PooledHol P(G, N.gamma);
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h) {
      ++rep.checked;
      Elem gh = N.circle.mul(g, h);
      if (!(P.mul(P.nu(g), P.nu(h)) == P.nu(gh)) || P.act(P.nu(h), g) != gh) {
        rep.fail("nu fails at g = " + std::to_string(g) + ", h = " + std::to_string(h));
        return rep;
      }
    }
  return rep;
}

nlohmann::json regular_subgroups_to_json(const AutomorphismGroup &A,
                                         std::span<const RegularSubgroup> subgroups)
{
  nlohmann::json out = nlohmann::json::array();
  bool by_aut = A.can_materialize();
  for (auto const &N : subgroups) {
    nlohmann::json rec;
    std::vector<std::size_t> gamma;
    if (by_aut) {
      std::vector<std::size_t> pool_index;
      for (auto const &a : N.gamma.pool())
        pool_index.push_back(*A.index_of(a));
      for (std::uint32_t i : N.gamma.index())
        gamma.push_back(pool_index[i]);
    } else {
      nlohmann::json keys = nlohmann::json::array();
      for (auto const &a : N.gamma.pool())
        keys.push_back(A.key(a));
      rec["automorphism_keys"] = std::move(keys);
      gamma.assign(N.gamma.index().begin(), N.gamma.index().end());
    }
    rec["gamma"] = std::move(gamma);
    rec["circle_abelian"] = N.circle_abelian;
    rec["iso_to_G"] = N.iso_to_G;
    out.push_back(std::move(rec));
  }
  return out;
}

} // namespace holo
