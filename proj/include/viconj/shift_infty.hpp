#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <span>
#include <utility>
#include <vector>

#include "viconj/word.hpp"

namespace viconj {

// F_oo(phi): the free group on x_i (i in Z) extended by t with
// t^-1 x_i t = x_{i-1}.

/// t^t_exp * x_part.
struct ShiftElement {
  std::int64_t t_exp = 0;
  Word x_part;

  friend bool operator==(const ShiftElement&, const ShiftElement&) = default;
};

/// phi^m: every index drops by m.
inline Word shift(std::int64_t m, const Word& v) {
  std::vector<Letter> out;
  out.reserve(v.size());
  for (Letter l : v) out.push_back({static_cast<std::int32_t>(l.index - m), l.inverse});
  return Word(std::span<const Letter>(out));
}

inline ShiftElement multiply(const ShiftElement& a, const ShiftElement& b) {
  return {a.t_exp + b.t_exp, shift(b.t_exp, a.x_part) * b.x_part};
}

inline ShiftElement inverse(const ShiftElement& a) {
  return {-a.t_exp, shift(-a.t_exp, a.x_part.inverse())};
}

/// u^-1 v u.
inline ShiftElement conjugate(const ShiftElement& v, const ShiftElement& u) {
  return multiply(multiply(inverse(u), v), u);
}

/// Cyclic phi^m-shift of the final letter: U x_k^e -> x_{k-m}^e U. Conjugating
/// t^m V by the inverse of the final letter gives t^m tau_m(V).
inline Word tau(std::int64_t m, const Word& v) {
  if (v.empty()) throw std::invalid_argument("tau: the word is empty");
  Word out{Letter{static_cast<std::int32_t>(v.back().index - m), v.back().inverse}};
  out *= v.prefix(v.size() - 1);
  return out;
}

struct ShiftCoreReduction {
  Word core;
  Word conjugator;  // v == shift(m, conjugator) * core * conjugator^-1
};

/// Peels letters while V starts with phi^m(u) and ends with u^-1.
inline ShiftCoreReduction cyclically_shift_reduce(std::int64_t m, const Word& v) {
  std::size_t k = 0;
  const std::size_t n = v.size();
  while (2 * k + 1 < n) {
    const Letter last_inv = v[n - 1 - k].inv();
    const Letter shifted{static_cast<std::int32_t>(last_inv.index - m), last_inv.inverse};
    if (v[k] != shifted) break;
    ++k;
  }
  Word u;
  for (std::size_t i = 0; i < k; ++i) u.push_back(v[n - 1 - i].inv());
  return {v.slice(k, n - 2 * k), u};
}

struct ShiftNormalForm {
  ShiftElement form;
  ShiftElement conjugator;  // conjugator^-1 v conjugator == form
};

/// Picks one tau_m-rotation of the cyclically phi^m-reduced core and shifts it
/// so its first letter has index 0.
///
/// tau_m^n is phi^m rather than the identity, so the first index f_i of the
/// i-th rotation drifts by -m every n steps. The rotation chosen minimises
/// f_i + m i / n, which is periodic in i and so does not depend on where the
/// rotation count starts; ties go to the shortlex-least shifted rotation. With
/// m = 0 this is the least rotation.
inline ShiftNormalForm shift_normal_form(const ShiftElement& v) {
  const std::int64_t m = v.t_exp;
  const ShiftCoreReduction red = cyclically_shift_reduce(m, v.x_part);
  ShiftElement conj{0, red.conjugator};
  if (red.core.empty()) return {{m, {}}, conj};

  const auto n = static_cast<std::int64_t>(red.core.size());
  auto key = [&](const Word& rotation, std::int64_t i) { return n * rotation.front().index + m * i; };
  auto normalised = [](const Word& rotation) { return shift(rotation.front().index, rotation); };

  Word cur = red.core;
  Word best = cur;
  std::int64_t best_i = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    cur = tau(m, cur);
    const std::int64_t a = key(cur, i);
    const std::int64_t b = key(best, best_i);
    if (a < b || (a == b && shortlex_compare(normalised(cur), normalised(best)) < 0)) {
      best = cur;
      best_i = i;
    }
  }
  // tau^i is conjugation by the inverse of the last i letters, taken in order.
  cur = red.core;
  for (std::int64_t i = 0; i < best_i; ++i) {
    conj = multiply(conj, {0, Word{cur.back().inv()}});
    cur = tau(m, cur);
  }
  const std::int64_t k = best.front().index;
  conj = multiply(conj, {k, {}});
  return {{m, shift(k, best)}, conj};
}

inline bool shift_are_conjugate(const ShiftElement& u, const ShiftElement& v) {
  if (u.t_exp != v.t_exp) return false;
  return shift_normal_form(u).form == shift_normal_form(v).form;
}

}  // namespace viconj
