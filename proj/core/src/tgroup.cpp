#include "holo/tgroup.hpp"

#include <algorithm>
#include <functional>

#include "holo/error.hpp"
#include "holo/isomorphism.hpp"

namespace holo {

Permutation compose(std::span<const Elem> theta1, std::span<const Elem> theta2)
{
  Permutation out(theta1.size());
  for (std::size_t g = 0; g < out.size(); ++g)
    out[g] = theta2[theta1[g]];
  return out;
}

Permutation inverse(std::span<const Elem> theta)
{
  Permutation out(theta.size());
  for (std::size_t g = 0; g < theta.size(); ++g)
    out[theta[g]] = static_cast<Elem>(g);
  return out;
}

Permutation inversion_map(const Group &G)
{
  Permutation out(G.order());
  for (Elem g = 0; g < G.order(); ++g)
    out[g] = G.inv(g);
  return out;
}

Permutation power_map(const Group &G, long long d)
{
  Permutation out(G.order());
  for (Elem g = 0; g < G.order(); ++g)
    out[g] = G.pow(g, d);
  return out;
}

namespace {

void require_permutation(const Group &G, std::span<const Elem> theta)
{
  if (theta.size() != G.order() || theta[0] != 0)
    raise(ErrorKind::InvalidArgument, "theta must be a permutation of G fixing 1");
  std::vector<char> seen(G.order(), 0);
  for (Elem x : theta) {
    if (x >= G.order() || seen[x])
      raise(ErrorKind::InvalidArgument, "theta must be a permutation of G fixing 1");
    seen[x] = 1;
  }
}

} // namespace

GammaMap gamma_from_theta(const Group &G, const AutomorphismGroup &A, std::span<const Elem> theta)
{
  require_permutation(G, theta);
  Permutation ti = inverse(theta);
  std::vector<Automorphism> values;
  values.reserve(G.order());
  for (Elem h = 0; h < G.order(); ++h) {
    Elem hi = G.inv(h);
    std::vector<Elem> img(G.order());
    for (Elem g = 0; g < G.order(); ++g)
      img[g] = G.mul(theta[G.mul(ti[g], ti[h])], hi);
    Automorphism a(std::move(img));
    if (!is_automorphism(G, a))
      raise(ErrorKind::NotInNHol, "gamma(" + std::to_string(h) + ") is not an automorphism");
    values.push_back(std::move(a));
  }
  GammaMap gamma = GammaMap::from_values(std::move(values));
  if (!is_anti_homomorphism(G, gamma) || !is_equivariant(G, gamma, A.generators()))
    raise(ErrorKind::NotInNHol, "rho(G)^theta is not normal in Hol(G)");
  return gamma;
}

std::optional<Permutation> theta_from_images(const Group &G, const GammaMap &gamma,
                                             std::span<const Elem> images)
{
  if (!G.has_presentation() || images.size() != G.generators().size())
    raise(ErrorKind::InvalidArgument, "need one image per presentation generator");
  auto circ = [&](Elem a, Elem b) { return G.mul(gamma.act(a, b), b); };
  Permutation theta(G.order());
  std::vector<char> seen(G.order(), 0);
  for (Elem g = 0; g < G.order(); ++g) {
    auto nf = G.normal_form(g);
    Elem x = 0;
    for (std::size_t i = 0; i < nf.size(); ++i)
      for (int k = 0; k < nf[i]; ++k)
        x = circ(x, images[i]);
    if (seen[x])
      return std::nullopt;
    seen[x] = 1;
    theta[g] = x;
  }
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem s : G.generators())
      if (theta[G.mul(g, s)] != circ(theta[g], theta[s]))
        return std::nullopt;
  return theta;
}

bool conjugates_rho_to_nu(const Group &G, std::span<const Elem> theta, const GammaMap &gamma)
{
  Permutation ti = inverse(theta);
  for (Elem g = 0; g < G.order(); ++g) {
    Elem gt = theta[g];
    for (Elem h = 0; h < G.order(); ++h)
      if (theta[G.mul(ti[h], g)] != G.mul(gamma.act(h, gt), gt))
        return false;
  }
  return true;
}

ThetaClass theta_for(const Group &G, const GammaMap &gamma, std::uint64_t node_budget)
{
  Group circle = circle_group(G, gamma);
  auto iso = isomorphism_search(G, circle, node_budget);
  if (!iso)
    raise(ErrorKind::NoIsomorphism, "circle group is not isomorphic to G");
  auto images = iso->images();
  ThetaClass c{Permutation(images.begin(), images.end()), gamma};
  if (!conjugates_rho_to_nu(G, c.theta, gamma))
    raise(ErrorKind::InvalidArgument, "isomorphism G -> (G, o) does not conjugate rho(G) to N");
  return c;
}

std::optional<std::uint32_t> TGroup::class_of(const GammaMap &gamma) const
{
  auto it = _by_signature.find(gamma.signature(_key));
  if (it == _by_signature.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> TGroup::class_of_theta(const Group &G, std::span<const Elem> theta) const
{
  Permutation ti = inverse(theta);
  std::vector<Elem> sig;
  sig.reserve(G.order() * _key.size());
  for (Elem h = 0; h < G.order(); ++h) {
    Elem hi = G.inv(h);
    for (Elem k : _key)
      sig.push_back(G.mul(theta[G.mul(ti[k], ti[h])], hi));
  }
  auto it = _by_signature.find(sig);
  if (it == _by_signature.end())
    return std::nullopt;
  return it->second;
}

TGroup build_t_group(const Group &G, const AutomorphismGroup &A, std::span<const GammaMap> hc,
                     std::uint64_t node_budget)
{
  TGroup T;
  T._p = group_prime(G);
  T._key.assign(A.key_elements().begin(), A.key_elements().end());

  auto id = std::find_if(hc.begin(), hc.end(), [](const GammaMap &g) { return g.is_identity(); });
  if (id == hc.end())
    raise(ErrorKind::InvalidArgument, "H(G) must contain rho(G)");
  std::vector<const GammaMap *> order{&*id};
  for (auto const &g : hc)
    if (&g != &*id)
      order.push_back(&g);

  for (auto *g : order) {
    auto [it, fresh] = T._by_signature.emplace(g->signature(T._key),
                                                static_cast<std::uint32_t>(T._classes.size()));
    if (!fresh)
      raise(ErrorKind::InvalidArgument, "H(G) lists a gamma twice");
    T._classes.push_back(theta_for(G, *g, node_budget));
  }

  std::size_t n = T._classes.size();
  T._table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto c = T.class_of_theta(G, compose(T._classes[a].theta, T._classes[b].theta));
      if (!c)
        raise(ErrorKind::ClosureFailure, "product of classes " + std::to_string(a) + " and " +
                                           std::to_string(b) + " is not in H(G)");
      T._table[a * n + b] = *c;
    }
  T._group = Group::from_table(T._table, n);
  return T;
}

PowerFamily power_theta_family(const Group &G, const AutomorphismGroup &A)
{
  PowerFamily f;
  f.modulus = exponent(quotient(G, center(G)).group);
  unsigned p = group_prime(G);
  if (f.modulus == 1)
    f.d = {1};
  for (long long d = 1; d < f.modulus; ++d)
    if (d % p != 0)
      f.d.push_back(d);
  for (long long d : f.d) {
    Permutation theta = power_map(G, d);
    GammaMap gamma = gamma_from_theta(G, A, theta);
    f.classes.push_back({std::move(theta), std::move(gamma)});
  }
  return f;
}

CheckReport power_map_identity_check(const Group &G, long long d)
{
  CheckReport r;
  long long e = exponent(G);
  long long half = (((1 - d) % e + e) % e) * ((e + 1) / 2) % e;
  Permutation theta = power_map(G, d);
  Permutation ti = inverse(theta);
  for (Elem g = 0; g < G.order(); ++g) {
    Elem x = G.pow(g, half), gd = G.pow(g, d);
    for (Elem h = 0; h < G.order(); ++h) {
      ++r.checked;
      if (theta[G.mul(ti[h], g)] != G.mul(G.conj(h, x), gd)) {
        r.fail("d=" + std::to_string(d) + " g=" + std::to_string(g) + " h=" + std::to_string(h));
        return r;
      }
    }
  }
  return r;
}

DeltaThetaFamily delta_theta_family(const Group &G, const AutomorphismGroup &A)
{
  DeltaThetaFamily f{symmetric_equivariant_deltas(G, A), {}};
  auto gens = G.generators();
  for (auto const &d : f.space.elements) {
    GammaMap gamma = gamma_from_delta(G, d);
    auto theta = theta_from_images(G, gamma, gens);
    if (!theta)
      raise(ErrorKind::NoIsomorphism, "no isomorphism G -> (G, o) fixing the generators");
    f.classes.push_back({std::move(*theta), std::move(gamma)});
  }
  return f;
}

Group agl1(unsigned p)
{
  std::size_t n = static_cast<std::size_t>(p) * (p - 1);
  std::vector<Elem> table(n * n);
  auto index = [&](unsigned a, unsigned b) { return static_cast<Elem>((a - 1) * p + b); };
  for (unsigned a1 = 1; a1 < p; ++a1)
    for (unsigned b1 = 0; b1 < p; ++b1)
      for (unsigned a2 = 1; a2 < p; ++a2)
        for (unsigned b2 = 0; b2 < p; ++b2)
          table[index(a1, b1) * n + index(a2, b2)] = index(a1 * a2 % p, (a2 * b1 + b2) % p);
  return Group::from_table(std::move(table), n);
}

namespace {

unsigned elementary_rank(const Group &T, unsigned p)
{
  if (p < 2)
    return 0;
  std::vector<Elem> E;
  for (Elem x = 0; x < T.order(); ++x)
    if (T.element_order(x) == p)
      E.push_back(x);
  unsigned best = 0;
  std::function<void(std::vector<Elem> &, const Subgroup &, std::size_t)> rec =
    [&](std::vector<Elem> &gens, const Subgroup &S, std::size_t start) {
      best = std::max(best, static_cast<unsigned>(gens.size()));
      for (std::size_t i = start; i < E.size(); ++i) {
        Elem x = E[i];
        if (S.contains(x))
          continue;
        bool commutes = std::all_of(gens.begin(), gens.end(),
                                    [&](Elem g) { return T.mul(g, x) == T.mul(x, g); });
        if (!commutes)
          continue;
        gens.push_back(x);
        rec(gens, subgroup_closure(T, gens), i + 1);
        gens.pop_back();
      }
    };
  std::vector<Elem> gens;
  rec(gens, subgroup_closure(T, gens), 0);
  return best;
}

} // namespace

TReport analyze(const Group &G, const TGroup &T)
{
  TReport r;
  const Group &X = T.group();
  unsigned p = T.prime();
  r.order = X.order();
  r.abelian = X.is_abelian();
  r.exponent = exponent(X);
  std::vector<Elem> inv;
  std::size_t order_p = 0;
  bool has_p_minus_1 = false;
  r.cyclic = false;
  for (Elem x = 0; x < X.order(); ++x) {
    unsigned o = X.element_order(x);
    if (o == 2)
      inv.push_back(x);
    if (o == p)
      ++order_p;
    if (p > 1 && o == p - 1)
      has_p_minus_1 = true;
    if (o == X.order())
      r.cyclic = true;
  }
  r.involutions = inv.size();
  r.inv_subgroup_order = subgroup_closure(X, inv).size();
  r.inv_subgroup_index = r.order / r.inv_subgroup_order;
  r.elem_abelian_p_rank = elementary_rank(X, p);

  if (p > 2 && r.order == static_cast<std::size_t>(p) * (p - 1)) {
    bool structural = !r.abelian && order_p == p - 1 && has_p_minus_1;
    bool iso = isomorphism_search(X, agl1(p)).has_value();
    if (structural != iso)
      raise(ErrorKind::InvalidArgument, "AGL(1,p) recognition disagrees with isomorphism search");
    r.agl1p = iso;
  }

  auto gens = G.generators();
  for (auto const &c : T.classes()) {
    nlohmann::json theta = nlohmann::json::array(), gamma = nlohmann::json::array();
    for (Elem x : gens) {
      theta.push_back(c.theta[x]);
      nlohmann::json row = nlohmann::json::array();
      for (Elem y : gens)
        row.push_back(c.gamma.act(y, x));
      gamma.push_back(std::move(row));
    }
    r.class_gammas.push_back({{"theta_on_generators", std::move(theta)},
                              {"gamma_on_generators", std::move(gamma)}});
  }
  return r;
}

nlohmann::json to_json(const TReport &r)
{
  return {{"order", r.order},
          {"abelian", r.abelian},
          {"exponent", r.exponent},
          {"involutions", r.involutions},
          {"inv_subgroup_order", r.inv_subgroup_order},
          {"inv_subgroup_index", r.inv_subgroup_index},
          {"cyclic", r.cyclic},
          {"elem_abelian_p_rank", r.elem_abelian_p_rank},
          {"agl1p", r.agl1p},
          {"class_gammas", r.class_gammas}};
}

} // namespace holo
