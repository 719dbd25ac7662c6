#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "holo/automorphism.hpp"
#include "holo/delta.hpp"
#include "holo/group.hpp"
#include "holo/holomorph.hpp"

namespace holo {

/// Permutation of the elements of G, acting on the right: g^theta = theta[g].
using Permutation = std::vector<Elem>;

/// g -> g^{theta1 theta2}: theta1 first.
Permutation compose(std::span<const Elem> theta1, std::span<const Elem> theta2);
Permutation inverse(std::span<const Elem> theta);

Permutation inversion_map(const Group &G);
Permutation power_map(const Group &G, long long d);

/// An element of T(G): a 1-fixing representative and the gamma of the
/// regular subgroup rho(G)^theta. Classes are compared by gamma only.
struct ThetaClass {
  Permutation theta;
  GammaMap gamma;
};

/// g^{gamma(h)} = (g^{theta^-1} h^{theta^-1})^theta h^-1. Throws NotInNHol
/// unless every gamma(h) is an automorphism and gamma satisfies the gamma
/// laws (then rho(G)^theta is normal in Hol(G)).
GammaMap gamma_from_theta(const Group &G, const AutomorphismGroup &A, std::span<const Elem> theta);

/// The homomorphism G -> (G, o) sending the i-th presentation generator to
/// images[i], if it is well defined and bijective.
std::optional<Permutation> theta_from_images(const Group &G, const GammaMap &gamma,
                                             std::span<const Elem> images);

/// rho(g)^theta = nu(g^theta) for all g, as permutations of G.
bool conjugates_rho_to_nu(const Group &G, std::span<const Elem> theta, const GammaMap &gamma);

/// Class of gamma from the first isomorphism G -> (G, o) in search order.
/// Throws NoIsomorphism when the circle group is not isomorphic to G.
ThetaClass theta_for(const Group &G, const GammaMap &gamma,
                     std::uint64_t node_budget = 100'000'000);

class TGroup {
public:
  std::size_t order() const noexcept { return _classes.size(); }
  unsigned prime() const noexcept { return _p; }
  std::span<const ThetaClass> classes() const noexcept { return _classes; }

  /// Multiplication of class indices; 0 is the identity class.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return _table[a * order() + b]; }
  const Group &group() const noexcept { return _group; }

  /// Class whose gamma equals the gamma of the given representative.
  std::optional<std::uint32_t> class_of(const GammaMap &gamma) const;

  /// Class of theta, found from gamma(h) on the key elements of Aut(G) for
  /// every h. Valid whenever theta lies in NHol(G).
  std::optional<std::uint32_t> class_of_theta(const Group &G, std::span<const Elem> theta) const;

  friend TGroup build_t_group(const Group &, const AutomorphismGroup &,
                              std::span<const GammaMap>, std::uint64_t);

private:
  unsigned _p = 0;
  std::vector<Elem> _key;
  std::vector<ThetaClass> _classes;
  std::map<std::vector<Elem>, std::uint32_t> _by_signature;
  std::vector<std::uint32_t> _table;
  Group _group;
};

/// T(G) from H(G): one class per gamma, products of representatives looked
/// up by gamma. The identity gamma must be among `hc`. Throws
/// ClosureFailure, NoIsomorphism.
TGroup build_t_group(const Group &G, const AutomorphismGroup &A, std::span<const GammaMap> hc,
                     std::uint64_t node_budget = 100'000'000);

struct PowerFamily {
  /// exp(G/Z(G))
  unsigned modulus = 1;
  /// Residues d coprime to p, ascending (just 1 when G is abelian).
  std::vector<long long> d;
  std::vector<ThetaClass> classes;
};

/// Classes of g -> g^d for d coprime to p modulo exp(G/Z(G)).
PowerFamily power_theta_family(const Group &G, const AutomorphismGroup &A);

/// rho(g)^{theta_d} = iota(g^{(1-d)/2}) rho(g^d) for every g, as
/// permutations of G, with (1-d)/2 taken modulo exp(G).
CheckReport power_map_identity_check(const Group &G, long long d);

struct DeltaThetaFamily {
  DeltaSpace space;
  /// classes[i] belongs to space.elements[i].
  std::vector<ThetaClass> classes;
};

/// For each symmetric equivariant Delta, the isomorphism G -> (G, o) fixing
/// the presentation generators. Throws NoIsomorphism if one does not exist.
DeltaThetaFamily delta_theta_family(const Group &G, const AutomorphismGroup &A);

struct TReport {
  std::size_t order = 1;
  bool abelian = true;
  unsigned exponent = 1;
  std::size_t involutions = 0;
  std::size_t inv_subgroup_order = 1;
  std::size_t inv_subgroup_index = 1;
  bool cyclic = true;
  /// Largest r with an elementary abelian subgroup of order p^r, p the
  /// prime of G.
  unsigned elem_abelian_p_rank = 0;
  bool agl1p = false;
  nlohmann::json class_gammas = nlohmann::json::array();
};

/// Structural report. AGL(1,p) is recognised structurally (nonabelian of
/// order p(p-1) with a unique subgroup of order p and a cyclic complement)
/// and by an explicit isomorphism search; a disagreement throws
/// InvalidArgument.
TReport analyze(const Group &G, const TGroup &T);

/// Affine maps x -> a x + b of F_p, (a, b) at index (a - 1) p + b, the
/// left factor applied first.
Group agl1(unsigned p);

nlohmann::json to_json(const TReport &r);

} // namespace holo
