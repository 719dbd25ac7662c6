#include "holo/presentation.hpp"

#include <limits>
#include <sstream>

#include "holo/error.hpp"

namespace holo {

namespace {

bool is_power_of(unsigned m, unsigned p) noexcept
{
  if (m < p)
    return false;
  while (m % p == 0)
    m /= p;
  return m == 1;
}

void check_word(const Word &w, std::size_t n, const std::string &where)
{
  for (auto const &l : w) {
    if (l.gen >= n)
      raise(ErrorKind::InconsistentPresentation,
            where + " refers to generator " + std::to_string(l.gen + 1) +
              " of " + std::to_string(n));
  }
}

} // namespace

bool is_prime(unsigned n) noexcept
{
  if (n < 2)
    return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::uint64_t ClassTwoPresentation::declared_order() const noexcept
{
  std::uint64_t total = 1;
  for (unsigned m : orders) {
    if (m != 0 && total > std::numeric_limits<std::uint64_t>::max() / m)
      return std::numeric_limits<std::uint64_t>::max();
    total *= m;
  }
  return total;
}

void ClassTwoPresentation::validate() const
{
  if (p % 2 == 0 || !is_prime(p))
    raise(ErrorKind::InconsistentPresentation,
          "p = " + std::to_string(p) + " is not an odd prime");

  std::size_t n = orders.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_power_of(orders[i], p))
      raise(ErrorKind::InconsistentPresentation,
            "relative order " + std::to_string(orders[i]) + " of generator " +
              std::to_string(i + 1) + " is not a power of " + std::to_string(p));
  }
  for (auto const &[i, w] : powers) {
    if (i >= n)
      raise(ErrorKind::InconsistentPresentation, "power relation for missing generator");
    check_word(w, n, "power relation");
  }
  for (auto const &[key, w] : commutators) {
    auto [j, i] = key;
    if (j >= n || i >= j)
      raise(ErrorKind::InconsistentPresentation,
            "commutator key must be (j, i) with j > i");
    check_word(w, n, "commutator relation");
  }
}

ClassTwoPresentation preset_gp(unsigned p)
{
  ClassTwoPresentation pres;
  pres.p = p;
  pres.orders = {p * p, p * p};
  // [x, y] = x^p, hence [y, x] = x^{-p}
  pres.commutators[{1, 0}] = {{0, -static_cast<long long>(p)}};
  pres.name = "gp";
  return pres;
}

ClassTwoPresentation preset_hp(unsigned p)
{
  ClassTwoPresentation pres;
  pres.p = p;
  pres.orders = {p * p, p};
  pres.commutators[{1, 0}] = {{0, -static_cast<long long>(p)}};
  pres.name = "hp";
  return pres;
}

ClassTwoPresentation preset_free(unsigned p, unsigned rank)
{
  ClassTwoPresentation pres;
  pres.p = p;
  pres.orders.assign(rank, p);
  unsigned next = rank;
  for (unsigned j = 0; j < rank; ++j) {
    for (unsigned k = j + 1; k < rank; ++k) {
      pres.orders.push_back(p);
      pres.commutators[{k, j}] = {{next, 1}};
      ++next;
    }
  }
  pres.name = "free_c2_exp_p";
  return pres;
}

ClassTwoPresentation preset_abelian(const std::vector<unsigned> &factors)
{
  if (factors.empty())
    raise(ErrorKind::UnsupportedPreset, "abelian preset needs at least one factor");

  unsigned p = 0;
  for (unsigned d = 2; d <= factors.front(); ++d) {
    if (factors.front() % d == 0) {
      p = d;
      break;
    }
  }
  if (p < 3)
    raise(ErrorKind::UnsupportedPreset, "abelian factors must be powers of an odd prime");
  for (unsigned f : factors) {
    if (!is_power_of(f, p))
      raise(ErrorKind::UnsupportedPreset,
            "abelian factor " + std::to_string(f) + " is not a power of " +
              std::to_string(p));
  }

  ClassTwoPresentation pres;
  pres.p = p;
  pres.orders = factors;
  pres.name = "abelian";
  return pres;
}

ClassTwoPresentation preset(std::string_view name, unsigned p,
                            const PresetParams &params, std::size_t order_cap)
{
  ClassTwoPresentation pres;
  if (name == "abelian") {
    pres = preset_abelian(params.factors);
  } else {
    if (p % 2 == 0 || !is_prime(p))
      raise(ErrorKind::UnsupportedPreset,
            "p = " + std::to_string(p) + " is not an odd prime");
    if (name == "gp") {
      pres = preset_gp(p);
    } else if (name == "hp") {
      pres = preset_hp(p);
    } else if (name == "free_c2_exp_p" || name == "free") {
      if (params.rank < 2)
        raise(ErrorKind::UnsupportedPreset, "free preset needs rank >= 2");
      // avoid overflow for silly ranks before the cap check
      if (params.rank > 12)
        raise(ErrorKind::OrderCapExceeded, "rank too large for the order cap");
      pres = preset_free(p, params.rank);
    } else {
      raise(ErrorKind::UnsupportedPreset, "unknown preset '" + std::string(name) + "'");
    }
  }

  if (pres.declared_order() > order_cap)
    raise(ErrorKind::OrderCapExceeded,
          "declared order " + std::to_string(pres.declared_order()) +
            " exceeds cap " + std::to_string(order_cap));
  return pres;
}

namespace {

nlohmann::json word_to_json(const Word &w)
{
  auto out = nlohmann::json::array();
  for (auto const &l : w)
    out.push_back({l.gen + 1, l.exp});
  return out;
}

Word word_from_json(const nlohmann::json &j)
{
  Word w;
  for (auto const &entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      raise(ErrorKind::InconsistentPresentation, "word letters must be [generator, exponent]");
    long long gen = entry[0].get<long long>();
    if (gen < 1)
      raise(ErrorKind::InconsistentPresentation, "generator numbers are 1-based");
    w.push_back({static_cast<unsigned>(gen - 1), entry[1].get<long long>()});
  }
  return w;
}

} // namespace

nlohmann::json to_json(const ClassTwoPresentation &pres)
{
  nlohmann::json j;
  j["p"] = pres.p;
  j["orders"] = pres.orders;
  auto powers = nlohmann::json::object();
  for (auto const &[i, w] : pres.powers)
    powers[std::to_string(i + 1)] = word_to_json(w);
  j["powers"] = powers;
  auto comms = nlohmann::json::object();
  for (auto const &[key, w] : pres.commutators)
    comms[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] =
      word_to_json(w);
  j["commutators"] = comms;
  if (!pres.name.empty())
    j["name"] = pres.name;
  return j;
}

ClassTwoPresentation presentation_from_json(const nlohmann::json &j)
{
  ClassTwoPresentation pres;
  try {
    pres.p = j.at("p").get<unsigned>();
    pres.orders = j.at("orders").get<std::vector<unsigned>>();
    if (j.contains("powers")) {
      for (auto const &[key, value] : j.at("powers").items()) {
        unsigned i = static_cast<unsigned>(std::stoul(key));
        if (i < 1)
          raise(ErrorKind::InconsistentPresentation, "generator numbers are 1-based");
        pres.powers[i - 1] = word_from_json(value);
      }
    }
    if (j.contains("commutators")) {
      for (auto const &[key, value] : j.at("commutators").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
          raise(ErrorKind::InconsistentPresentation, "commutator key must be \"j,i\"");
        unsigned a = static_cast<unsigned>(std::stoul(key.substr(0, comma)));
        unsigned b = static_cast<unsigned>(std::stoul(key.substr(comma + 1)));
        if (a < 1 || b < 1)
          raise(ErrorKind::InconsistentPresentation, "generator numbers are 1-based");
        pres.commutators[{a - 1, b - 1}] = word_from_json(value);
      }
    }
    if (j.contains("name"))
      pres.name = j.at("name").get<std::string>();
  } catch (nlohmann::json::exception const &e) {
    raise(ErrorKind::InconsistentPresentation, std::string("malformed presentation: ") + e.what());
  } catch (std::logic_error const &e) {
    raise(ErrorKind::InconsistentPresentation, std::string("malformed presentation: ") + e.what());
  }
  pres.validate();
  return pres;
}

} // namespace holo
