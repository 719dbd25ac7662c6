#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "holo/automorphism.hpp"
#include "holo/group.hpp"
#include "holo/holomorph.hpp"

namespace holo {

/// A finite abelian p-group (a quotient of G or a subgroup of G) with a
/// basis of cyclic factors. Coordinates are packed in mixed radix, first
/// factor least significant.
struct AbelianSection {
  std::vector<unsigned> moduli;
  /// Basis elements as elements of G (lifts, for a quotient section).
  std::vector<Elem> basis;
  /// Element of G -> packed coordinates; UINT32_MAX outside a subgroup section.
  std::vector<std::uint32_t> packed;
  /// Packed coordinates -> an element of G with those coordinates.
  std::vector<Elem> element_of;

  std::size_t rank() const noexcept { return moduli.size(); }
  std::size_t size() const noexcept { return element_of.size(); }
  unsigned exponent() const noexcept;

  std::vector<long long> coords(Elem g) const;
  std::uint32_t pack(std::span<const long long> c) const;
  std::vector<long long> unpack(std::uint32_t packed_coords) const;
};

/// Basis for an abelian p-group given by its elements inside G; throws
/// InvalidArgument if the set is not an abelian subgroup.
AbelianSection subgroup_section(const Group &G, const Subgroup &S);

/// G/K for K normal with abelian quotient; throws NotNormal.
AbelianSection quotient_section(const Group &G, const Subgroup &K);

/// V = G/Z(G), V' = G/G', W = Z(G). When one of them has exponent p (or
/// V or V' is trivial) every bilinear map V x V' -> W factors through
/// G/(Z(G) G^p) x G/Frat(G) -> W[p], and those elementary sections are
/// used instead.
struct SectionSpace {
  unsigned p = 0;
  bool elementary = false;
  AbelianSection V;
  AbelianSection Vp;
  AbelianSection W;
};

std::shared_ptr<const SectionSpace> section_space(const Group &G);

/// Bilinear map V x V' -> W fixed by its values on basis pairs.
class BilinearDelta {
public:
  BilinearDelta() = default;

  /// values[i * rank(V') + j] = packed W-coordinates of Delta(b_i, b'_j).
  /// Throws InvalidArgument when a value is not killed by gcd of the two
  /// basis orders.
  BilinearDelta(std::shared_ptr<const SectionSpace> sections, std::vector<std::uint32_t> values);

  const SectionSpace &sections() const noexcept { return *_sections; }
  std::shared_ptr<const SectionSpace> shared_sections() const noexcept { return _sections; }
  std::span<const std::uint32_t> values() const noexcept { return _values; }

  /// Delta(g Z(G), h G') as an element of G.
  Elem operator()(Elem g, Elem h) const
  { return _sections->W.element_of[_table[_sections->V.packed[g] * _vp_size + _sections->Vp.packed[h]]]; }

  bool is_zero() const noexcept;

  /// Delta(b_i, b_j) = Delta(b_j, b_i) for a common basis of V = V'.
  bool is_symmetric() const;

  friend bool operator==(const BilinearDelta &a, const BilinearDelta &b)
  { return a._values == b._values; }

  BilinearDelta operator+(const BilinearDelta &o) const;
  BilinearDelta scaled(long long c) const;

private:
  std::shared_ptr<const SectionSpace> _sections;
  std::vector<std::uint32_t> _values;
  std::vector<std::uint32_t> _table;
  std::size_t _vp_size = 0;
};

/// Delta(v^beta, w^beta) = Delta(v, w)^beta on basis pairs, for each beta.
bool is_equivariant(const Group &G, const BilinearDelta &delta, std::span<const Automorphism> betas);

/// (a) gamma(G) <= Aut_c(G); (b) [Z(G), gamma(G)] = 1.
bool hypothesis_a(const Group &G, const GammaMap &gamma);
bool hypothesis_b(const Group &G, const GammaMap &gamma);

/// Delta(g Z, h G') = g^-1 g^{gamma(h)}; well-definedness and bilinearity
/// are checked on all pairs. Throws HypothesisViolated.
BilinearDelta delta_from_gamma(const Group &G, const GammaMap &gamma);

/// g^{gamma(h)} = g Delta(g, h), re-validated as an anti-homomorphism.
GammaMap gamma_from_delta(const Group &G, const BilinearDelta &delta);

/// (g, h) -> [g, h]^c on the sections of G.
BilinearDelta commutator_delta(const Group &G, long long c);

struct DeltaOptions {
  /// Enumerate every solution when there are at most this many.
  std::uint64_t report_cap = 100'000;
  /// Largest value space searched when the sections are not elementary.
  std::uint64_t exhaustive_cap = 10'000'000;
};

struct DeltaSpace {
  std::shared_ptr<const SectionSpace> sections;
  /// F_p-dimension of the solution space (elementary sections only).
  std::size_t dimension = 0;
  std::uint64_t count = 0;
  std::vector<BilinearDelta> basis;
  /// All solutions, when count <= report_cap.
  std::vector<BilinearDelta> elements;
  bool exhaustive = false;
};

/// All Aut(G)-equivariant bilinear Delta, from the equivariance equations
/// under the generators of Aut(G) (solved over F_p for elementary
/// sections, else by exhaustive filtering). Throws UnsupportedModuli.
DeltaSpace enumerate_deltas(const Group &G, const AutomorphismGroup &A, const DeltaOptions &options = {});

struct SymmetricSpace {
  std::size_t n = 0;
  unsigned p = 0;
  std::size_t dimension = 0;
  /// Basis vectors over the unknowns c_{ijk} = k-th W-coordinate of
  /// Delta(b_i, b_j), index (i * n + j) * C(n,2) + k.
  std::vector<std::vector<std::uint32_t>> basis;
};

/// Symmetric bilinear maps F_p^n x F_p^n -> F_p^{C(n,2)}, by elimination on
/// the symmetry equations.
SymmetricSpace symmetric_delta_space(std::size_t n, unsigned p);

/// For a group of that shape (V = V' elementary of rank n, W elementary of
/// rank C(n,2)) whose automorphisms are all central. Throws ShapeMismatch.
SymmetricSpace symmetric_delta_space(const Group &G, const AutomorphismGroup &A);

/// Symmetric and equivariant Delta on elementary sections with V = V'.
DeltaSpace symmetric_equivariant_deltas(const Group &G, const AutomorphismGroup &A);

/// {basis_values, symmetric, equivariant_checked, dimension}
nlohmann::json delta_to_json(const BilinearDelta &delta, bool equivariant_checked, std::size_t dimension);

} // namespace holo
