#include "holo/delta.hpp"

#include <algorithm>
#include <numeric>

#include "holo/error.hpp"
#include "holo/fp_linear.hpp"

namespace holo {

namespace {

struct Decomposition {
  std::vector<Elem> basis;   // elements of X
  std::vector<unsigned> moduli;
  std::vector<std::uint32_t> coord;  // element of X -> packed, UINT32_MAX outside
  std::vector<Elem> element_of;      // packed -> element of X
};

/// Basis of an abelian p-subgroup S of X: repeatedly take an element of
/// largest order modulo the current span whose cyclic group meets the span
/// trivially; the span stays a direct summand, so this always succeeds.
Decomposition decompose(const Group &X, std::span<const Elem> S)
{
  Decomposition d;
  d.coord.assign(X.order(), UINT32_MAX);
  std::vector<char> in_span(X.order(), 0);
  in_span[0] = 1;
  d.coord[0] = 0;
  d.element_of = {0};
  std::uint32_t radix = 1;

  while (d.element_of.size() < S.size()) {
    unsigned best = 0;
    std::vector<unsigned> qorder(S.size(), 0);
    for (std::size_t i = 0; i < S.size(); ++i) {
      Elem s = S[i];
      if (in_span[s])
        continue;
      unsigned k = 1;
      for (Elem x = s; !in_span[x]; x = X.mul(x, s))
        ++k;
      qorder[i] = k;
      best = std::max(best, qorder[i]);
    }
    std::optional<Elem> pick;
    for (std::size_t i = 0; i < S.size() && !pick; ++i)
      if (qorder[i] == best && X.element_order(S[i]) == best)
        pick = S[i];
    if (!pick)
      raise(ErrorKind::InvalidArgument, "element set is not an abelian p-subgroup");

    std::vector<Elem> next_element_of(d.element_of.size() * best);
    Elem power = 0;
    for (unsigned c = 0; c < best; ++c) {
      for (std::size_t a = 0; a < d.element_of.size(); ++a) {
        Elem x = X.mul(d.element_of[a], power);
        std::uint32_t packed = static_cast<std::uint32_t>(a + c * radix);
        next_element_of[packed] = x;
        d.coord[x] = packed;
        in_span[x] = 1;
      }
      power = X.mul(power, *pick);
    }
    d.element_of = std::move(next_element_of);
    d.basis.push_back(*pick);
    d.moduli.push_back(best);
    radix *= best;
  }
  if (d.element_of.size() != S.size())
    raise(ErrorKind::InvalidArgument, "element set is not an abelian p-subgroup");
  return d;
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

} // namespace

unsigned AbelianSection::exponent() const noexcept
{
  unsigned e = 1;
  for (unsigned m : moduli)
    e = std::lcm(e, m);
  return e;
}

std::vector<long long> AbelianSection::coords(Elem g) const
{
  return unpack(packed[g]);
}

std::uint32_t AbelianSection::pack(std::span<const long long> c) const
{
  std::uint32_t out = 0, radix = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    out += static_cast<std::uint32_t>(mod(c[i], moduli[i])) * radix;
    radix *= moduli[i];
  }
  return out;
}

std::vector<long long> AbelianSection::unpack(std::uint32_t v) const
{
  std::vector<long long> c(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    c[i] = v % moduli[i];
    v /= moduli[i];
  }
  return c;
}

AbelianSection subgroup_section(const Group &G, const Subgroup &S)
{
  auto d = decompose(G, S.elements);
  AbelianSection a;
  a.moduli = std::move(d.moduli);
  a.basis = std::move(d.basis);
  a.packed = std::move(d.coord);
  a.element_of = std::move(d.element_of);
  return a;
}

AbelianSection quotient_section(const Group &G, const Subgroup &K)
{
  Quotient q = quotient(G, K);
  if (!q.group.is_abelian())
    raise(ErrorKind::InvalidArgument, "quotient is not abelian");
  std::vector<Elem> all(q.group.order());
  std::iota(all.begin(), all.end(), Elem{0});
  auto d = decompose(q.group, all);
  AbelianSection a;
  a.moduli = std::move(d.moduli);
  for (Elem b : d.basis)
    a.basis.push_back(q.lifts[b]);
  a.packed.resize(G.order());
  for (Elem g = 0; g < G.order(); ++g)
    a.packed[g] = d.coord[q.projection[g]];
  for (Elem e : d.element_of)
    a.element_of.push_back(q.lifts[e]);
  return a;
}

std::shared_ptr<const SectionSpace> section_space(const Group &G)
{
  auto s = std::make_shared<SectionSpace>();
  s->p = group_prime(G);
  if (s->p < 3)
    raise(ErrorKind::InvalidArgument, "sections need a p-group for odd p");
  Subgroup Z = center(G);
  Subgroup D = derived(G);
  s->V = quotient_section(G, Z);
  s->Vp = quotient_section(G, D);
  s->W = subgroup_section(G, Z);

  auto exp_is = [&](const AbelianSection &a) { return a.exponent() <= s->p; };
  if (exp_is(s->V) || exp_is(s->Vp) || exp_is(s->W)) {
    s->elementary = true;
    // G/(Z G^p), G/Frat(G), Omega_1(Z)
    std::vector<Elem> zp(Z.elements);
    for (Elem g = 0; g < G.order(); ++g)
      zp.push_back(G.pow(g, s->p));
    s->V = quotient_section(G, subgroup_closure(G, zp));
    s->Vp = quotient_section(G, frattini(G));
    std::vector<Elem> omega;
    for (Elem z : Z.elements)
      if (G.pow(z, s->p) == 0)
        omega.push_back(z);
    s->W = subgroup_section(G, subgroup_closure(G, omega));
  }
  return s;
}

BilinearDelta::BilinearDelta(std::shared_ptr<const SectionSpace> sections,
                             std::vector<std::uint32_t> values)
: _sections(std::move(sections)), _values(std::move(values))
{
  auto const &S = *_sections;
  std::size_t r = S.V.rank(), rp = S.Vp.rank(), rw = S.W.rank();
  if (_values.size() != r * rp)
    raise(ErrorKind::InvalidArgument, "delta needs one value per basis pair");

  std::vector<std::vector<long long>> val(_values.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rp; ++j) {
      auto &v = val[i * rp + j];
      v = S.W.unpack(_values[i * rp + j]);
      long long g = std::gcd(S.V.moduli[i], S.Vp.moduli[j]);
      for (std::size_t k = 0; k < rw; ++k)
        if (mod(g * v[k], S.W.moduli[k]) != 0)
          raise(ErrorKind::InvalidArgument, "delta value not killed by the basis orders");
    }

  _vp_size = S.Vp.size();
  _table.resize(S.V.size() * _vp_size);
  std::vector<std::vector<long long>> vp_coords(_vp_size);
  for (std::uint32_t b = 0; b < _vp_size; ++b)
    vp_coords[b] = S.Vp.unpack(b);
  std::vector<long long> w(rw);
  for (std::uint32_t a = 0; a < S.V.size(); ++a) {
    auto ca = S.V.unpack(a);
    for (std::uint32_t b = 0; b < _vp_size; ++b) {
      auto const &cb = vp_coords[b];
      std::fill(w.begin(), w.end(), 0);
      for (std::size_t i = 0; i < r; ++i) {
        if (ca[i] == 0)
          continue;
        for (std::size_t j = 0; j < rp; ++j) {
          if (cb[j] == 0)
            continue;
          long long f = ca[i] * cb[j];
          auto const &v = val[i * rp + j];
          for (std::size_t k = 0; k < rw; ++k)
            w[k] += f * v[k];
        }
      }
      _table[a * _vp_size + b] = S.W.pack(w);
    }
  }
}

bool BilinearDelta::is_zero() const noexcept
{
  return std::all_of(_values.begin(), _values.end(), [](std::uint32_t v) { return v == 0; });
}

bool BilinearDelta::is_symmetric() const
{
  auto const &S = *_sections;
  if (S.V.packed != S.Vp.packed)
    return false;
  std::size_t r = S.V.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (_values[i * r + j] != _values[j * r + i])
        return false;
  return true;
}

BilinearDelta BilinearDelta::operator+(const BilinearDelta &o) const
{
  auto const &W = _sections->W;
  std::vector<std::uint32_t> out(_values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto a = W.unpack(_values[i]);
    auto b = W.unpack(o._values[i]);
    for (std::size_t k = 0; k < a.size(); ++k)
      a[k] += b[k];
    out[i] = W.pack(a);
  }
  return BilinearDelta(_sections, std::move(out));
}

BilinearDelta BilinearDelta::scaled(long long c) const
{
  auto const &W = _sections->W;
  std::vector<std::uint32_t> out(_values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto a = W.unpack(_values[i]);
    for (auto &x : a)
      x *= c;
    out[i] = W.pack(a);
  }
  return BilinearDelta(_sections, std::move(out));
}

bool is_equivariant(const Group &, const BilinearDelta &delta, std::span<const Automorphism> betas)
{
  auto const &S = delta.sections();
  for (auto const &beta : betas)
    for (Elem g : S.V.basis)
      for (Elem h : S.Vp.basis)
        if (delta(beta(g), beta(h)) != beta(delta(g, h)))
          return false;
  return true;
}

bool hypothesis_a(const Group &G, const GammaMap &gamma)
{
  Subgroup Z = center(G);
  for (auto const &alpha : gamma.pool())
    if (!is_central_automorphism(G, alpha, Z))
      return false;
  return true;
}

bool hypothesis_b(const Group &G, const GammaMap &gamma)
{
  Subgroup Z = center(G);
  for (auto const &alpha : gamma.pool())
    for (Elem z : Z.elements)
      if (alpha(z) != z)
        return false;
  return true;
}

BilinearDelta delta_from_gamma(const Group &G, const GammaMap &gamma)
{
  if (!hypothesis_a(G, gamma))
    raise(ErrorKind::HypothesisViolated, "(a): gamma(G) is not contained in Aut_c(G)");
  if (!hypothesis_b(G, gamma))
    raise(ErrorKind::HypothesisViolated, "(b): gamma(G) does not centralise Z(G)");

  auto S = section_space(G);
  std::vector<std::uint32_t> values;
  for (Elem g : S->V.basis)
    for (Elem h : S->Vp.basis) {
      Elem d = G.mul(G.inv(g), gamma.act(g, h));
      if (S->W.packed[d] == UINT32_MAX)
        raise(ErrorKind::HypothesisViolated, "[g, gamma(h)] lies outside the value section");
      values.push_back(S->W.packed[d]);
    }
  BilinearDelta delta(S, std::move(values));
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h)
      if (delta(g, h) != G.mul(G.inv(g), gamma.act(g, h)))
        raise(ErrorKind::HypothesisViolated,
              "[g, gamma(h)] is not a well-defined bilinear map on the sections");
  return delta;
}

GammaMap gamma_from_delta(const Group &G, const BilinearDelta &delta)
{
  auto const &S = delta.sections();
  std::vector<Automorphism> pool;
  pool.reserve(S.Vp.size());
  for (std::uint32_t b = 0; b < S.Vp.size(); ++b) {
    Elem h = S.Vp.element_of[b];
    std::vector<Elem> img(G.order());
    for (Elem g = 0; g < G.order(); ++g)
      img[g] = G.mul(g, delta(g, h));
    Automorphism a(std::move(img));
    if (!is_automorphism(G, a))
      raise(ErrorKind::InvalidArgument, "g -> g Delta(g, h) is not an automorphism");
    pool.push_back(std::move(a));
  }
  std::vector<std::uint32_t> index(G.order());
  for (Elem h = 0; h < G.order(); ++h)
    index[h] = S.Vp.packed[h];
  GammaMap gamma(std::move(pool), std::move(index));
  if (!is_anti_homomorphism(G, gamma))
    raise(ErrorKind::InvalidArgument, "gamma built from Delta is not an anti-homomorphism");
  return gamma;
}

BilinearDelta commutator_delta(const Group &G, long long c)
{
  auto S = section_space(G);
  std::vector<std::uint32_t> values;
  for (Elem g : S->V.basis)
    for (Elem h : S->Vp.basis) {
      Elem d = G.pow(G.comm(g, h), c);
      if (S->W.packed[d] == UINT32_MAX)
        raise(ErrorKind::InvalidArgument, "commutator lies outside the value section");
      values.push_back(S->W.packed[d]);
    }
  BilinearDelta delta(S, std::move(values));
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); h += 1)
      if (delta(g, h) != G.pow(G.comm(g, h), c))
        raise(ErrorKind::InvalidArgument, "commutator map is not well defined on the sections");
  return delta;
}

namespace {

/// Matrices of beta on V, V', W over F_p (row i = coordinates of b_i^beta).
struct ActionMatrices {
  std::vector<std::vector<long long>> V, Vp, W;
};

ActionMatrices action(const SectionSpace &S, const Automorphism &beta)
{
  ActionMatrices m;
  for (Elem b : S.V.basis)
    m.V.push_back(S.V.coords(beta(b)));
  for (Elem b : S.Vp.basis)
    m.Vp.push_back(S.Vp.coords(beta(b)));
  for (Elem b : S.W.basis)
    m.W.push_back(S.W.coords(beta(b)));
  return m;
}

/// Equivariance rows: sum_{k,l} M[i,k] M'[j,l] c_{klm} - sum_{m'} c_{ijm'} R[m',m] = 0.
void add_equivariance_rows(MatrixFp &sys, const SectionSpace &S, std::span<const Automorphism> betas)
{
  std::size_t r = S.V.rank(), rp = S.Vp.rank(), rw = S.W.rank();
  auto u = [&](std::size_t i, std::size_t j, std::size_t m) { return (i * rp + j) * rw + m; };
  for (auto const &beta : betas) {
    auto M = action(S, beta);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < rp; ++j)
        for (std::size_t m = 0; m < rw; ++m) {
          std::vector<long long> row(sys.cols, 0);
          for (std::size_t k = 0; k < r; ++k)
            for (std::size_t l = 0; l < rp; ++l)
              row[u(k, l, m)] += M.V[i][k] * M.Vp[j][l];
          for (std::size_t mp = 0; mp < rw; ++mp)
            row[u(i, j, mp)] -= M.W[mp][m];
          sys.push_row(row);
        }
  }
}

BilinearDelta delta_from_vector(std::shared_ptr<const SectionSpace> S, std::span<const std::uint32_t> v)
{
  std::size_t rw = S->W.rank();
  std::vector<std::uint32_t> values;
  for (std::size_t ij = 0; ij * rw < v.size(); ++ij) {
    std::vector<long long> c(v.begin() + static_cast<long>(ij * rw),
                             v.begin() + static_cast<long>((ij + 1) * rw));
    values.push_back(S->W.pack(c));
  }
  return BilinearDelta(std::move(S), std::move(values));
}

void fill_from_basis(DeltaSpace &out, const std::vector<std::vector<std::uint32_t>> &kernel,
                     unsigned p, std::uint64_t report_cap, std::size_t unknowns)
{
  out.dimension = kernel.size();
  for (auto const &v : kernel)
    out.basis.push_back(delta_from_vector(out.sections, v));

  out.count = 1;
  for (std::size_t i = 0; i < out.dimension; ++i) {
    if (out.count > UINT64_MAX / p) {
      out.count = UINT64_MAX;
      break;
    }
    out.count *= p;
  }
  if (out.count > report_cap)
    return;

  // coefficient vectors in lexicographic order, first basis vector most significant
  std::vector<std::uint32_t> coeff(out.dimension, 0);
  for (std::uint64_t n = 0; n < out.count; ++n) {
    std::uint64_t rest = n;
    for (std::size_t i = out.dimension; i-- > 0;) {
      coeff[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    std::vector<std::uint32_t> sum(unknowns, 0);
    for (std::size_t i = 0; i < out.dimension; ++i)
      for (std::size_t k = 0; k < unknowns; ++k)
        sum[k] = (sum[k] + coeff[i] * kernel[i][k]) % p;
    out.elements.push_back(delta_from_vector(out.sections, sum));
  }
}

} // namespace

DeltaSpace enumerate_deltas(const Group &G, const AutomorphismGroup &A, const DeltaOptions &options)
{
  DeltaSpace out;
  out.sections = section_space(G);
  auto const &S = *out.sections;
  std::size_t r = S.V.rank(), rp = S.Vp.rank(), rw = S.W.rank();
  std::size_t unknowns = r * rp * rw;

  if (S.elementary) {
    MatrixFp sys(S.p, 0, unknowns);
    add_equivariance_rows(sys, S, A.generators());
    auto kernel = nullspace(std::move(sys));
    fill_from_basis(out, kernel, S.p, options.report_cap, unknowns);
    for (auto const &d : out.basis)
      if (!is_equivariant(G, d, A.generators()))
        raise(ErrorKind::InvalidArgument, "solver returned a non-equivariant Delta");
    return out;
  }

  // exhaustive filter over values killed by the basis orders
  out.exhaustive = true;
  std::vector<std::vector<std::uint32_t>> choices(r * rp);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rp; ++j) {
      long long g = std::gcd(S.V.moduli[i], S.Vp.moduli[j]);
      for (std::uint32_t w = 0; w < S.W.size(); ++w) {
        auto c = S.W.unpack(w);
        bool ok = true;
        for (std::size_t k = 0; k < rw && ok; ++k)
          ok = mod(g * c[k], S.W.moduli[k]) == 0;
        if (ok)
          choices[i * rp + j].push_back(w);
      }
      space *= choices[i * rp + j].size();
      if (space > options.exhaustive_cap)
        raise(ErrorKind::UnsupportedModuli,
              "non-elementary sections with a value space above " +
                std::to_string(options.exhaustive_cap));
    }
  std::vector<std::size_t> pos(choices.size(), 0);
  for (std::uint64_t n = 0; n < space; ++n) {
    std::vector<std::uint32_t> values(choices.size());
    for (std::size_t k = 0; k < choices.size(); ++k)
      values[k] = choices[k][pos[k]];
    BilinearDelta d(out.sections, std::move(values));
    if (is_equivariant(G, d, A.generators())) {
      ++out.count;
      if (out.count <= options.report_cap)
        out.elements.push_back(std::move(d));
    }
    for (std::size_t k = choices.size(); k-- > 0;) {
      if (++pos[k] < choices[k].size())
        break;
      pos[k] = 0;
    }
  }
  return out;
}

SymmetricSpace symmetric_delta_space(std::size_t n, unsigned p)
{
  if (n < 2 || !is_prime(p))
    raise(ErrorKind::ShapeMismatch, "symmetric space needs n >= 2 and a prime p");
  SymmetricSpace out;
  out.n = n;
  out.p = p;
  std::size_t rw = choose2(n);
  std::size_t unknowns = n * n * rw;
  MatrixFp sys(p, 0, unknowns);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < rw; ++k) {
        std::vector<long long> row(unknowns, 0);
        row[(i * n + j) * rw + k] = 1;
        row[(j * n + i) * rw + k] = -1;
        sys.push_row(row);
      }
  out.basis = nullspace(std::move(sys));
  out.dimension = out.basis.size();
  return out;
}

namespace {

/// V = V' elementary of rank n and W elementary; returns n.
std::size_t common_rank(const SectionSpace &S)
{
  if (!S.elementary || S.V.packed != S.Vp.packed)
    raise(ErrorKind::ShapeMismatch, "G/Z(G) and G/G' do not coincide as elementary sections");
  return S.V.rank();
}

} // namespace

SymmetricSpace symmetric_delta_space(const Group &G, const AutomorphismGroup &A)
{
  auto S = section_space(G);
  std::size_t n = common_rank(*S);
  Subgroup Z = center(G);
  if (S->W.size() != Z.size() || S->W.rank() != choose2(n) || n < 2)
    raise(ErrorKind::ShapeMismatch, "Z(G) is not elementary abelian of rank C(n,2)");
  if (derived(G).size() != Z.size())
    raise(ErrorKind::ShapeMismatch, "G' differs from Z(G)");
  for (auto const &beta : A.generators())
    if (!is_central_automorphism(G, beta, Z))
      raise(ErrorKind::ShapeMismatch, "Aut(G) contains a non-central automorphism");
  return symmetric_delta_space(n, S->p);
}

DeltaSpace symmetric_equivariant_deltas(const Group &G, const AutomorphismGroup &A)
{
  DeltaSpace out;
  out.sections = section_space(G);
  auto const &S = *out.sections;
  std::size_t n = common_rank(S);
  std::size_t rw = S.W.rank();
  std::size_t unknowns = n * n * rw;
  MatrixFp sys(S.p, 0, unknowns);
  add_equivariance_rows(sys, S, A.generators());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < rw; ++k) {
        std::vector<long long> row(unknowns, 0);
        row[(i * n + j) * rw + k] = 1;
        row[(j * n + i) * rw + k] = -1;
        sys.push_row(row);
      }
  fill_from_basis(out, nullspace(std::move(sys)), S.p, 100'000, unknowns);
  return out;
}

nlohmann::json delta_to_json(const BilinearDelta &delta, bool equivariant_checked, std::size_t dimension)
{
  auto const &S = delta.sections();
  nlohmann::json m = nlohmann::json::array();
  for (std::size_t i = 0; i < S.V.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < S.Vp.rank(); ++j)
      row.push_back(S.W.unpack(delta.values()[i * S.Vp.rank() + j]));
    m.push_back(std::move(row));
  }
  return {{"basis_values", std::move(m)},
          {"symmetric", delta.is_symmetric()},
          {"equivariant_checked", equivariant_checked},
          {"dimension", dimension}};
}

} // namespace holo
