#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "viconj/context.hpp"
#include "viconj/word.hpp"

namespace viconj {

/// A preset group with the display alias of its generators: y_i or z_i, with
/// i counted from 0, names the internal generator x_{i+1}.
struct ArtinPreset {
  VIContext context;
  char alias;
  Word fixed_word;  // Delta (even) or Sigma (odd) as written in the presentation
  int presentation_power;
};

namespace detail {

// Throws if an identity fails or a smaller inner power exists.
inline ArtinPreset validated_preset(ContextData data, char alias, Word fixed) {
  const int power = data.m;
  return {VIContext::create(std::move(data)), alias, std::move(fixed), power};
}

}  // namespace detail

/// A(2n) = <x, y | (xy)^n = (yx)^n> as F_n(phi) with t = x, y_i = t^i y t^-i:
///   phi(y_0) = y_0 y_1 ... y_{n-2} y_{n-1} y_{n-2}^-1 ... y_0^-1,  phi(y_i) = y_{i-1},
/// fixing Delta = y_0 ... y_{n-1} with phi^n(y) = Delta y Delta^-1. The context
/// stores the witness Delta^-1 so that phi^n(f) = witness^-1 f witness.
inline ArtinPreset artin_even(int n) {
  if (n < 2) throw std::invalid_argument("artin_even requires n >= 2");
  std::vector<Word> images(static_cast<std::size_t>(n));
  Word head;
  for (int i = 1; i <= n - 1; ++i) head *= Word::generator(i);
  images[0] = head * Word::generator(n) * head.inverse();
  for (int i = 2; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = Word::generator(i - 1);
  Word delta = head * Word::generator(n);

  ContextData data;
  data.rank = n;
  data.phi = Automorphism(n, std::move(images));
  data.m = n;
  data.delta = delta.inverse();
  return detail::validated_preset(std::move(data), 'y', std::move(delta));
}

/// A(2n+1) = <x, y | (xy)^n x = (yx)^n y> as F_2n(psi) with t = x,
/// z = y t^-1, z_i = t^i z t^-i:
///   psi(z_0) = z_0 z_2 ... z_{2n-2} z_{2n-1}^-1 ... z_3^-1 z_1^-1,  psi(z_i) = z_{i-1},
/// fixing Sigma = z_0 z_2 ... z_{2n-2} (z_0 z_1 ... z_{2n-1})^-1 z_1 z_3 ... z_{2n-1}
/// with psi^{2(2n+1)}(z) = Sigma z Sigma^-1.
inline ArtinPreset artin_odd(int n) {
  if (n < 1) throw std::invalid_argument("artin_odd requires n >= 1");
  const int rank = 2 * n;
  // z_j is x_{j+1}.
  auto z = [](int j) { return Word::generator(j + 1); };
  Word evens, odds, all;
  for (int j = 0; j <= 2 * n - 2; j += 2) evens *= z(j);
  for (int j = 1; j <= 2 * n - 1; j += 2) odds *= z(j);
  for (int j = 0; j <= 2 * n - 1; ++j) all *= z(j);

  std::vector<Word> images(static_cast<std::size_t>(rank));
  images[0] = evens * odds.inverse();
  for (int j = 1; j < rank; ++j) images[static_cast<std::size_t>(j)] = z(j - 1);
  Word sigma = evens * all.inverse() * odds;

  ContextData data;
  data.rank = rank;
  data.phi = Automorphism(rank, std::move(images));
  data.m = 2 * (2 * n + 1);
  data.delta = sigma.inverse();
  return detail::validated_preset(std::move(data), 'z', std::move(sigma));
}

/// A(m), m >= 3.
inline ArtinPreset artin(int m) {
  if (m < 3) throw std::invalid_argument("Artin preset needs m >= 3");
  return m % 2 == 0 ? artin_even(m / 2) : artin_odd((m - 1) / 2);
}

}  // namespace viconj
