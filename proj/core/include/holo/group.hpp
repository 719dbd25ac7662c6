#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "holo/presentation.hpp"

namespace holo {

using Elem = std::uint32_t;

struct BuildOptions {
  std::size_t order_cap = 3000;
};

/// A finite group given by its multiplication table. Element 0 is always the
/// identity. Instances are immutable after construction; copies share the
/// underlying tables.
class Group {
public:
  Group();

  /// Wraps a row-major `order` x `order` table. Verifies that 0 is a
  /// two-sided identity, that the table is a Latin square and that it is
  /// associative (Light's test over a generating set). Throws NotAGroup.
  static Group from_table(std::vector<Elem> table, std::size_t order);

  std::size_t order() const noexcept { return _data->order; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem a, Elem b) const noexcept
  { return _data->table[static_cast<std::size_t>(a) * _data->order + b]; }

  Elem inv(Elem a) const noexcept { return _data->inverse[a]; }
  Elem pow(Elem a, long long e) const noexcept;

  /// [a, b] = a^-1 b^-1 a b
  Elem comm(Elem a, Elem b) const noexcept
  { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  /// a^b = b^-1 a b
  Elem conj(Elem a, Elem b) const noexcept
  { return mul(mul(inv(b), a), b); }

  unsigned element_order(Elem a) const noexcept { return _data->orders[a]; }

  /// Presentation generators when built from a presentation, otherwise a
  /// greedily chosen generating set.
  std::span<const Elem> generators() const noexcept
  { return _data->generators; }

  bool has_presentation() const noexcept { return _data->presentation != nullptr; }
  const ClassTwoPresentation &presentation() const;

  /// Exponent vector of `a` with respect to the presentation generators.
  std::span<const int> normal_form(Elem a) const;

  /// Index of the element x_0^{e_0} ... x_{n-1}^{e_{n-1}}; exponents must be
  /// reduced.
  Elem from_normal_form(std::span<const int> exps) const;

  bool is_abelian() const noexcept { return _data->abelian; }

  /// FNV-1a hash over the order and the table.
  std::uint64_t table_hash() const noexcept { return _data->hash; }

  std::span<const Elem> table() const noexcept { return _data->table; }

  friend Group build_group(const ClassTwoPresentation &, const BuildOptions &);

private:
  struct Data {
    std::size_t order = 1;
    std::vector<Elem> table{0};
    std::vector<Elem> inverse{0};
    std::vector<unsigned> orders{1};
    std::vector<Elem> generators;
    std::shared_ptr<const ClassTwoPresentation> presentation;
    std::vector<int> normal_forms;
    std::vector<std::size_t> strides;
    bool abelian = true;
    std::uint64_t hash = 0;
  };

  explicit Group(std::shared_ptr<const Data> data) : _data(std::move(data)) {}
  static std::shared_ptr<Data> finish(std::shared_ptr<Data> data);

  std::shared_ptr<const Data> _data;
};

/// Collects the presentation into a multiplication table. Throws
/// InconsistentPresentation when the collected table is not a group of the
/// declared order satisfying the relations, or is not of class <= 2, and
/// OrderCapExceeded when the declared order is above the cap.
Group build_group(const ClassTwoPresentation &pres,
                  const BuildOptions &options = {});

/// Sorted element set of a subgroup plus the generators it was built from.
struct Subgroup {
  std::vector<Elem> elements;
  std::vector<Elem> generators;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Elem g) const noexcept;

  friend bool operator==(const Subgroup &a, const Subgroup &b) noexcept
  { return a.elements == b.elements; }
};

Subgroup subgroup_closure(const Group &G, std::span<const Elem> gens);
Subgroup center(const Group &G);
Subgroup derived(const Group &G);

/// G' G^p for the prime p dividing |G|; requires a p-group.
Subgroup frattini(const Group &G);

/// Subgroup generated by all k-th powers.
Subgroup power_subgroup(const Group &G, unsigned k);

unsigned exponent(const Group &G);
bool is_class_le_two(const Group &G);
bool is_normal(const Group &G, const Subgroup &N);

/// The prime p if |G| is a power of p (1 for the trivial group), else 0.
unsigned group_prime(const Group &G) noexcept;

/// Minimal generating set of a p-group: presentation generators first, then
/// elements in ascending order, each kept iff it is independent of the
/// previous ones modulo the Frattini subgroup.
std::vector<Elem> minimal_generators(const Group &G);

struct Quotient {
  Group group;
  std::vector<Elem> projection;  // element of G -> coset index
  std::vector<Elem> lifts;       // coset index -> smallest representative
};

/// Coset table of G/N. Throws NotNormal.
Quotient quotient(const Group &G, const Subgroup &N);

/// Counts of elements by order, indexed by order.
std::vector<std::size_t> order_statistics(const Group &G);

} // namespace holo
