#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "holo/group.hpp"

namespace holo {

/// A bijection of element indices; g^alpha is `alpha(g)`. Products compose
/// left to right: (alpha * beta)(g) = beta(alpha(g)).
class Automorphism {
public:
  Automorphism() = default;
  explicit Automorphism(std::vector<Elem> images) : _images(std::move(images)) {}

  static Automorphism identity(std::size_t degree);

  Elem operator()(Elem g) const noexcept { return _images[g]; }
  std::span<const Elem> images() const noexcept { return _images; }
  std::size_t degree() const noexcept { return _images.size(); }

  Automorphism inverse() const;
  bool is_identity() const noexcept;

  friend Automorphism operator*(const Automorphism &a, const Automorphism &b);
  friend bool operator==(const Automorphism &, const Automorphism &) = default;
  friend auto operator<=>(const Automorphism &, const Automorphism &) = default;

private:
  std::vector<Elem> _images;
};

/// Bijective, fixes the identity and multiplicative on every pair (checked
/// against the generators, which is equivalent).
bool is_automorphism(const Group &G, const Automorphism &alpha);

/// iota(g) : h -> g^-1 h g
Automorphism inner_automorphism(const Group &G, Elem g);

/// [G, alpha] <= Z(G), checked on the generators of G.
bool is_central_automorphism(const Group &G, const Automorphism &alpha,
                             const Subgroup &Z);

/// [alpha, beta] = alpha^-1 beta^-1 alpha beta
Automorphism commutator(const Automorphism &a, const Automorphism &b);

struct KeyHash {
  std::size_t operator()(const std::vector<Elem> &key) const noexcept;
};

struct AutSearchOptions {
  /// Largest |Aut(G)| * |G| that `elements()` will materialise.
  std::uint64_t materialize_cap = 60'000'000;
  /// Backtracking nodes allowed in the generator search.
  std::uint64_t node_budget = 100'000'000;
};

/// Aut(G) as a stabilizer chain over a base of generators: a strong
/// generating set, the transversal sizes (whose product is |Aut(G)|) and,
/// on request, the full element list in ascending order of generator images.
class AutomorphismGroup {
public:
  AutomorphismGroup() = default;

  const Group &group() const noexcept { return _group; }

  /// Elements whose images determine an automorphism (minimal generators).
  std::span<const Elem> key_elements() const noexcept { return _key_elements; }

  std::span<const Automorphism> generators() const noexcept { return _generators; }
  std::span<const std::size_t> orbit_sizes() const noexcept { return _orbit_sizes; }

  std::uint64_t order() const noexcept;

  bool can_materialize() const noexcept;
  bool is_materialized() const noexcept { return !_elements.empty(); }

  /// Full sorted element list; identity first. Throws OrderCapExceeded when
  /// |Aut| * |G| is above the materialisation cap.
  const std::vector<Automorphism> &elements() const;

  std::vector<Elem> key(const Automorphism &alpha) const;

  /// Position in `elements()`, if alpha is one of them.
  std::optional<std::size_t> index_of(const Automorphism &alpha) const;
  std::optional<std::size_t> index_of_key(const std::vector<Elem> &key) const;

  /// Whether alpha lies in the group (membership by sifting through the
  /// stabilizer chain, no materialisation needed).
  bool contains(const Automorphism &alpha) const;

  friend AutomorphismGroup automorphism_group(const Group &, const AutSearchOptions &);
  friend AutomorphismGroup automorphism_group_from_generators(
    const Group &, std::vector<Automorphism>, const AutSearchOptions &);

private:
  void build_chain(std::vector<Automorphism> gens_by_level_seed);

  Group _group;
  AutSearchOptions _options;
  std::vector<Elem> _base;
  std::vector<Elem> _key_elements;
  std::vector<Automorphism> _generators;
  std::vector<std::size_t> _orbit_sizes;
  // per level: orbit point -> transversal element mapping base[level] to it
  std::vector<std::unordered_map<Elem, Automorphism>> _transversals;

  mutable std::vector<Automorphism> _elements;
  mutable std::unordered_map<std::vector<Elem>, std::size_t, KeyHash> _index;
};

/// Index arithmetic over a materialised automorphism group: products are
/// resolved through the key lookup, inverses are tabulated on first use.
class AutTable {
public:
  explicit AutTable(const AutomorphismGroup &A);

  std::size_t size() const noexcept { return _A->elements().size(); }
  const Automorphism &operator[](std::uint32_t i) const { return _A->elements()[i]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, long long e) const;
  /// Index of alpha; throws InvalidArgument when alpha is not in the group.
  std::uint32_t index(const Automorphism &alpha) const;
  static constexpr std::uint32_t identity() noexcept { return 0; }

private:
  const AutomorphismGroup *_A;
  mutable std::vector<std::uint32_t> _inverse;
};

/// Computes Aut(G) by backtracking over generator images, pruned by element
/// order, Frattini and centre membership, relation satisfaction and
/// independence modulo Frat(G). Throws OrderCapExceeded,
/// SearchBudgetExceeded.
AutomorphismGroup automorphism_group(const Group &G, const AutSearchOptions &options = {});

/// Rebuilds the chain from a trusted generating set (cache reload). The
/// generators are re-verified as automorphisms; throws CacheCorrupt.
AutomorphismGroup automorphism_group_from_generators(const Group &G,
                                                     std::vector<Automorphism> gens,
                                                     const AutSearchOptions &options = {});

} // namespace holo
