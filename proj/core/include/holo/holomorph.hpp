#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "holo/automorphism.hpp"
#include "holo/group.hpp"

namespace holo {

/// (alpha, g) in Hol(G) = Aut(G) rho(G), acting by h -> h^alpha g.
struct HolElement {
  Automorphism alpha;
  Elem g = 0;

  friend bool operator==(const HolElement &, const HolElement &) = default;
};

Elem hol_act(const Group &G, const HolElement &e, Elem h);

/// (alpha, g)(beta, h) = (alpha beta, g^beta h)
HolElement hol_mul(const Group &G, const HolElement &a, const HolElement &b);
HolElement hol_inv(const Group &G, const HolElement &a);

/// Right translation (id, g).
HolElement rho(const Group &G, Elem g);

/// Left translation h -> g h, as (iota(g^-1), g).
HolElement lambda(const Group &G, Elem g);

/// Map G -> Aut(G), stored as a pool of distinct values (ordered by first
/// occurrence) and an index per element.
class GammaMap {
public:
  GammaMap() = default;

  /// Canonicalises the pool; duplicate values are merged.
  GammaMap(std::vector<Automorphism> pool, std::vector<std::uint32_t> index);

  static GammaMap identity(const Group &G);

  /// One automorphism per element.
  static GammaMap from_values(std::vector<Automorphism> values);

  const Automorphism &operator()(Elem h) const { return _pool[_index[h]]; }

  /// g^{gamma(h)}
  Elem act(Elem g, Elem h) const { return _pool[_index[h]](g); }

  std::size_t degree() const noexcept { return _index.size(); }
  std::span<const Automorphism> pool() const noexcept { return _pool; }
  std::span<const std::uint32_t> index() const noexcept { return _index; }

  bool is_identity() const noexcept { return _pool.size() == 1 && _pool[0].is_identity(); }

  /// Images of the key elements under gamma(h), for h in element order.
  std::vector<Elem> signature(std::span<const Elem> key) const;

  friend bool operator==(const GammaMap &, const GammaMap &) = default;

private:
  std::vector<Automorphism> _pool;
  std::vector<std::uint32_t> _index;
};

/// gamma(g h) = gamma(h) gamma(g), checked on all g and generators h.
bool is_anti_homomorphism(const Group &G, const GammaMap &gamma);

/// gamma(g^beta) = beta^-1 gamma(g) beta for all g and the given betas.
bool is_equivariant(const Group &G, const GammaMap &gamma, std::span<const Automorphism> betas);

/// gamma(1) = 1, anti-homomorphism, values in Aut(G), equivariant under the
/// generators of Aut(G).
bool is_gamma(const Group &G, const AutomorphismGroup &A, const GammaMap &gamma);

/// Table of g o h = g^{gamma(h)} h; throws NotAGroup.
Group circle_group(const Group &G, const GammaMap &gamma);

struct RegularSubgroup {
  GammaMap gamma;
  Group circle;
  bool circle_abelian = false;
  bool iso_to_G = false;

  /// nu(h) = (gamma(h), h)
  HolElement nu(Elem h) const { return {gamma(h), h}; }
};

RegularSubgroup regular_subgroup(const Group &G, GammaMap gamma);

/// Hol arithmetic restricted to gamma(G) x G, with the automorphism part
/// stored as an index into the pool of gamma. gamma(G) is a subgroup of
/// Aut(G) for any anti-homomorphism, so the pool is closed; throws
/// ClosureFailure otherwise.
class PooledHol {
public:
  struct Element {
    std::uint32_t a = 0;
    Elem g = 0;
    friend bool operator==(const Element &, const Element &) = default;
  };

  PooledHol(const Group &G, const GammaMap &gamma);

  Element mul(Element x, Element y) const
  { return {_mul[x.a * _n + y.a], _G.mul(_gamma.pool()[y.a](x.g), y.g)}; }
  Element inv(Element x) const;
  Element pow(Element x, long long e) const;
  Element comm(Element x, Element y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  Element nu(Elem h) const { return {_gamma.index()[h], h}; }
  Element rho(Elem g) const { return {_identity, g}; }
  bool in_nu(Element x) const { return _gamma.index()[x.g] == x.a; }
  Elem act(Element x, Elem h) const { return _G.mul(_gamma.pool()[x.a](h), x.g); }

  unsigned order(Element x) const;

private:
  Group _G;
  GammaMap _gamma;
  std::size_t _n;
  std::uint32_t _identity = 0;
  std::vector<std::uint32_t> _mul;
  std::vector<std::uint32_t> _inv;
};

struct EnumOptions {
  /// Candidate assignments tried before SearchBudgetExceeded.
  std::uint64_t node_budget = 100'000'000;
};

/// Every gamma satisfying the anti-homomorphism and equivariance laws,
/// found by backtracking over gamma-values on the presentation generators.
/// Requires a presented G and a materialisable Aut(G) (OrderCapExceeded
/// otherwise). Sorted by signature over the key elements of Aut(G).
std::vector<GammaMap> enumerate_gammas_generic(const Group &G, const AutomorphismGroup &A,
                                               const EnumOptions &options = {});

/// Closure and normality of N = nu(G) in Hol(G), using Hol arithmetic only:
/// N is closed under products, and conjugates of nu(generators) by the
/// generators of Aut(G) and rho(G) lie in N.
bool is_normal_in_hol(const Group &G, const AutomorphismGroup &A, const GammaMap &gamma);

/// J(G) for a list of gammas, with circle groups and isomorphism flags.
std::vector<RegularSubgroup> regular_subgroups(const Group &G, std::vector<GammaMap> gammas,
                                               std::uint64_t iso_budget = 100'000'000);

std::vector<RegularSubgroup> jc_set(const Group &G, const AutomorphismGroup &A,
                                    const EnumOptions &options = {});

/// Members of J(G) isomorphic to G.
std::vector<RegularSubgroup> hc_set(std::span<const RegularSubgroup> jc);

struct CheckReport {
  bool pass = true;
  std::uint64_t checked = 0;
  std::string witness;

  void fail(std::string w)
  {
    if (pass)
      witness = std::move(w);
    pass = false;
  }
};

/// gamma(g^beta g^-1) = [gamma(g), beta] for all g and beta (all of Aut(G)
/// when materialised, else its generators), and
/// gamma(h^-1 g h g^-1) = iota((h^-1)^{gamma(g)} h) for all g, h.
CheckReport formulas_check(const Group &G, const AutomorphismGroup &A, const GammaMap &gamma);

struct EqcondReport {
  bool derived_in_kernel = false;   // gamma(G') = 1
  bool image_abelian = false;       // gamma(G) abelian
  bool commutators_central = false; // [gamma(G), G] <= Z(G)
  bool commutators_in_kernel = false; // [gamma(G), G] <= ker gamma
  bool derived_fixed = false;       // [G', gamma(G)] = 1

  bool consistent() const noexcept
  {
    bool all = derived_in_kernel && image_abelian && commutators_central && commutators_in_kernel;
    bool none = !derived_in_kernel && !image_abelian && !commutators_central && !commutators_in_kernel;
    return (all || none) && (!all || derived_fixed);
  }
};

EqcondReport eqcond_check(const Group &G, const GammaMap &gamma);

/// gamma(G) <= Aut_c(G) and [Z(G), gamma(G)] = 1.
bool central_hypotheses(const Group &G, const GammaMap &gamma);

/// [nu(g), nu(h)] = nu([g,h][g,gamma(h)][h,gamma(g)]^-1) for all pairs,
/// by Hol arithmetic. Only meaningful under central_hypotheses.
CheckReport commutator_of_nu_check(const Group &G, const GammaMap &gamma);

/// nu(g)^n = nu((g^n)^{gamma(g^{(n-1)/2})}) for odd n < exp(G) and
/// order(nu(g)) = order(g), for all g.
CheckReport powers_check(const Group &G, const GammaMap &gamma);

/// nu(g o h) = nu(g) nu(h) and g^{nu(h)} = g o h for all pairs.
CheckReport nu_isomorphism_check(const Group &G, const RegularSubgroup &N);

/// Records {gamma, circle_abelian, iso_to_G}. gamma holds Aut indices when
/// Aut(G) is materialised, otherwise indices into a per-record list of
/// automorphisms given by their key images.
nlohmann::json regular_subgroups_to_json(const AutomorphismGroup &A,
                                         std::span<const RegularSubgroup> subgroups);

} // namespace holo
