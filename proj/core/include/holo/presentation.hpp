#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace holo {

/// One letter x_gen^exp of a word; generators are 0-based, exponents may be
/// negative.
struct Letter {
  unsigned gen = 0;
  long long exp = 1;

  friend bool operator==(const Letter &, const Letter &) = default;
};

using Word = std::vector<Letter>;

/// A power-commutator presentation of a class-2 p-group, p odd.
///
/// Generators x_0, ..., x_{n-1} have relative orders `orders[i]` (powers of
/// p). `powers[i]` is the word equal to x_i^{orders[i]} (absent means the
/// identity); `commutators[{j, i}]`, j > i, is the central word equal to
/// [x_j, x_i] (absent means trivial). Elements are collected into the normal
/// form x_0^{a_0} ... x_{n-1}^{a_{n-1}}, 0 <= a_i < orders[i].
struct ClassTwoPresentation {
  unsigned p = 3;
  std::vector<unsigned> orders;
  std::map<unsigned, Word> powers;
  std::map<std::pair<unsigned, unsigned>, Word> commutators;
  std::string name;

  std::size_t generator_count() const noexcept { return orders.size(); }

  /// Product of the relative orders, saturating at UINT64_MAX.
  std::uint64_t declared_order() const noexcept;

  /// Structural checks (odd prime, prime-power relative orders, index
  /// ranges, j > i for commutator keys). Throws InconsistentPresentation.
  void validate() const;

  friend bool operator==(const ClassTwoPresentation &,
                         const ClassTwoPresentation &) = default;
};

bool is_prime(unsigned n) noexcept;

struct PresetParams {
  unsigned rank = 2;
  std::vector<unsigned> factors;
};

/// <x, y : x^{p^2}, y^{p^2}, [x, y] = x^p>, order p^4.
ClassTwoPresentation preset_gp(unsigned p);

/// <x, y : x^{p^2}, y^p, [x, y] = x^p>, order p^3 and exponent p^2.
ClassTwoPresentation preset_hp(unsigned p);

/// Free group of class two and exponent p on `rank` generators, with the
/// commutators [x_k, x_j] (j < k) realised as extra central generators.
ClassTwoPresentation preset_free(unsigned p, unsigned rank);

/// Abelian group with the given invariant factors (all powers of one odd
/// prime).
ClassTwoPresentation preset_abelian(const std::vector<unsigned> &factors);

/// Dispatch by name: "gp", "hp", "free_c2_exp_p" (alias "free"), "abelian".
/// Throws UnsupportedPreset, or OrderCapExceeded when the declared order is
/// above `order_cap`.
ClassTwoPresentation preset(std::string_view name, unsigned p,
                            const PresetParams &params = {},
                            std::size_t order_cap = 3000);

/// File format: {"p": 3, "orders": [9, 9], "powers": {"1": [[2, 1]]},
/// "commutators": {"2,1": [[1, -3]]}} with 1-based generator numbers.
nlohmann::json to_json(const ClassTwoPresentation &pres);
ClassTwoPresentation presentation_from_json(const nlohmann::json &j);

} // namespace holo
