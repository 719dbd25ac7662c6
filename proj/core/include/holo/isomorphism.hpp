#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "holo/automorphism.hpp"
#include "holo/group.hpp"

namespace holo {

/// Backtracking search for homomorphisms G -> H that are bijections,
/// assigning images to a base of generators of G in ascending element
/// order. When G carries a presentation the base is its generator list and
/// partial assignments are pruned by the relations; otherwise the base is a
/// generating set and complete assignments are checked edge by edge.
class HomSearch {
public:
  HomSearch(const Group &G, const Group &H, std::uint64_t node_budget = 100'000'000);

  std::span<const Elem> base() const noexcept { return _base; }

  /// Calls `visit` with each bijective homomorphism extending `prefix`
  /// (images of the first prefix.size() base elements), in lexicographic
  /// order of base images, until it returns false.
  void run(std::span<const Elem> prefix,
           const std::function<bool(const std::vector<Elem> &images,
                                    const Automorphism &map)> &visit);

  /// First isomorphism extending the prefix, if any.
  std::optional<Automorphism> first(std::span<const Elem> prefix = {});

  /// Images of the base under `map` turned into the full element map, if
  /// consistent.
  std::optional<Automorphism> extend(std::span<const Elem> images) const;

  std::uint64_t nodes() const noexcept { return _nodes; }

private:
  struct Invariant {
    unsigned order;
    bool in_center;
    bool in_frattini;
    friend bool operator==(const Invariant &, const Invariant &) = default;
  };

  bool relations_hold(std::size_t level, const std::vector<Elem> &images) const;
  Elem eval_word(const Word &w, const std::vector<Elem> &images) const;
  bool search(std::size_t level, std::vector<Elem> &images,
              std::vector<std::vector<char>> &spans,
              const std::function<bool(const std::vector<Elem> &, const Automorphism &)> &visit);

  Group _G;
  Group _H;
  std::uint64_t _budget;
  std::uint64_t _nodes = 0;
  bool _p_group = false;
  bool _compatible = true;
  std::vector<Elem> _base;
  std::vector<Invariant> _inv_G;
  std::vector<Invariant> _inv_H;
  // relations checked once all their letters are assigned, by level
  std::vector<std::vector<std::size_t>> _relations_at_level;
  // level -> relation index defining the image outright
  std::vector<std::optional<std::size_t>> _forced;
  std::vector<char> _essential;
  // H -> H/Frat(H) coordinates packed as an integer, and the quotient size
  std::vector<std::size_t> _h_quot;
  std::vector<std::size_t> _quot_radix;
  unsigned _p = 0;

  struct Relation {
    // lhs word == rhs word, both in base generators
    Word lhs;
    Word rhs;
    std::size_t defines = SIZE_MAX;
  };
  std::vector<Relation> _relations;
  std::vector<std::size_t> _bfs_parent;
  std::vector<std::size_t> _bfs_gen;
  std::vector<Elem> _bfs_order;
  std::vector<Elem> _fixed;
};

/// An isomorphism G -> H if one exists (first in lexicographic order of
/// generator images), after cheap invariant checks.
std::optional<Automorphism> isomorphism_search(const Group &G, const Group &H,
                                               std::uint64_t node_budget = 100'000'000);

/// Structural invariants compared before a search: order, abelian flag,
/// order statistics, centre and derived sizes.
bool invariants_match(const Group &G, const Group &H);

} // namespace holo
