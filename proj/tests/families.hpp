#pragma once

// Explicit gamma families for the two-generator presets, written directly
// from their closed forms.

#include <vector>

#include "holo/group.hpp"
#include "holo/holomorph.hpp"

namespace families {

using namespace holo;

inline long long mod(long long a, long long m) { return ((a % m) + m) % m; }

/// x^i y^j -> X^i Y^j for a two-generator preset.
inline Automorphism from_images(const Group &G, Elem X, Elem Y)
{
  std::vector<Elem> img(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    auto nf = G.normal_form(g);
    img[g] = G.mul(G.pow(X, nf[0]), G.pow(Y, nf[1]));
  }
  return Automorphism(std::move(img));
}

/// gamma(x^i y^j) = gamma(y)^j gamma(x)^i
inline GammaMap from_generator_values(const Group &G, const Automorphism &gx,
                                      const Automorphism &gy)
{
  std::vector<Automorphism> vals;
  for (Elem g = 0; g < G.order(); ++g) {
    auto nf = G.normal_form(g);
    Automorphism a = Automorphism::identity(G.order());
    for (int j = 0; j < nf[1]; ++j)
      a = a * gy;
    for (int i = 0; i < nf[0]; ++i)
      a = a * gx;
    vals.push_back(std::move(a));
  }
  return GammaMap::from_values(std::move(vals));
}

/// gamma_{s,t}(x): x -> x, y -> x^{ps} y;
/// gamma_{s,t}(y): x -> x^{1+pt}, y -> y^{1+p(s+t)}.
inline GammaMap gp_gamma(const Group &G, long long p, long long s, long long t)
{
  Elem x = G.generators()[0], y = G.generators()[1];
  long long q = p * p;
  auto gx = from_images(G, x, G.mul(G.pow(x, mod(p * s, q)), y));
  auto gy = from_images(G, G.pow(x, mod(1 + p * t, q)), G.pow(y, mod(1 + p * (s + t), q)));
  return from_generator_values(G, gx, gy);
}

/// gamma_t(x): x -> x, y -> x^{-pt} y; gamma_t(y): x -> x^{1+pt}, y -> y.
inline GammaMap hp_gamma(const Group &G, long long p, long long t)
{
  Elem x = G.generators()[0], y = G.generators()[1];
  long long q = p * p;
  auto gx = from_images(G, x, G.mul(G.pow(x, mod(-p * t, q)), y));
  auto gy = from_images(G, G.pow(x, mod(1 + p * t, q)), y);
  return from_generator_values(G, gx, gy);
}

/// theta_{d,s}: x^i y^j -> x^i o y^{dj + p d^2 C(j,2) (s+t)} in the circle
/// group of gamma_{s,t}, t = d' + s - 1. The exponent is the expansion of
/// (y^{dj})^{gamma(y^{d(j-1)/2})}.
inline std::vector<Elem> gp_theta(const Group &G, long long p, long long d, long long s)
{
  long long di = 1;
  while ((d * di) % p != 1)
    ++di;
  long long t = mod(di + s - 1, p);
  GammaMap gamma = gp_gamma(G, p, s, t);
  Elem x = G.generators()[0], y = G.generators()[1];
  std::vector<Elem> theta(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    auto nf = G.normal_form(g);
    long long j = nf[1];
    Elem Y = G.pow(y, mod(d * j + p * d * d * (j * (j - 1) / 2) * (s + t), p * p));
    theta[g] = G.mul(gamma.act(G.pow(x, nf[0]), Y), Y);
  }
  return theta;
}

} // namespace families
