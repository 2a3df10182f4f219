#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "viconj/context.hpp"
#include "viconj/word.hpp"

namespace viconj {

/// delta^-exponent * v * delta^exponent, reduced.
struct DeltaConjugate {
  Word word;
  std::int64_t exponent = 0;
};

struct DeltaLength {
  std::int64_t exponent;
  std::size_t length;
};

/// Minimal-length conjugates of v by powers of delta, plus the length profile
/// of the window that was scanned.
struct DeltaOrbit {
  std::size_t min_length = 0;
  std::vector<DeltaConjugate> minimal;  // preferred exponent first
  std::vector<DeltaLength> profile;     // ascending exponent
  bool commutes = false;
};

namespace detail {

// With delta = S delta_c S^-1 and delta_c cyclically reduced, work in the
// frame X = S^-1 v S where X_k = delta_c^-k X delta_c^k. Once |k| |delta_c|
// passes |X| the cancellation between X and delta_c^k is saturated and
// |X_k| grows by 2|delta_c| per step; the collar S changes lengths by at most
// 2|S|, which costs another 2|S|/|delta_c| steps.
inline std::int64_t delta_window(const Word& v, const CyclicReduction& d) {
  const std::size_t dc = d.core.size();
  const std::size_t s = d.collar.size();
  return static_cast<std::int64_t>((v.size() + 4 * s + dc - 1) / dc) + 4;
}

inline bool prefer_exponent(std::int64_t a, std::int64_t b) {
  const std::int64_t aa = a < 0 ? -a : a;
  const std::int64_t bb = b < 0 ? -b : b;
  if (aa != bb) return aa < bb;
  return a > b;  // positive wins ties
}

}  // namespace detail

/// Scan of |delta^-k v delta^k| for |k| <= window (window < 0 means the
/// default sufficient bound).
inline DeltaOrbit delta_orbit(const Word& delta, const Word& v, std::int64_t window = -1) {
  DeltaOrbit orbit;
  if (delta.empty()) {
    orbit.min_length = v.size();
    orbit.minimal.push_back({v, 0});
    orbit.profile.push_back({0, v.size()});
    orbit.commutes = true;
    return orbit;
  }

  const CyclicReduction d = cyclically_reduce(delta);
  const Word& dc = d.core;
  const Word& s = d.collar;
  const Word s_inv = s.inverse();
  const Word dc_inv = dc.inverse();
  const Word frame = s_inv * v * s;

  if (dc_inv * frame * dc == frame) {
    orbit.min_length = v.size();
    orbit.minimal.push_back({v, 0});
    orbit.profile.push_back({0, v.size()});
    orbit.commutes = true;
    return orbit;
  }

  if (window < 0) window = detail::delta_window(v, d);

  std::vector<DeltaConjugate> scanned;
  scanned.reserve(static_cast<std::size_t>(2 * window + 1));
  scanned.push_back({v, 0});
  for (int dir : {1, -1}) {
    const Word& left = dir > 0 ? dc_inv : dc;
    const Word& right = dir > 0 ? dc : dc_inv;
    Word x = frame;
    for (std::int64_t j = 1; j <= window; ++j) {
      x = left * x * right;
      scanned.push_back({s * x * s_inv, dir * j});
    }
  }

  orbit.min_length = v.size();
  for (const auto& c : scanned) orbit.min_length = std::min(orbit.min_length, c.word.size());
  for (const auto& c : scanned) {
    orbit.profile.push_back({c.exponent, c.word.size()});
    if (c.word.size() == orbit.min_length) orbit.minimal.push_back(c);
  }
  std::sort(orbit.profile.begin(), orbit.profile.end(),
            [](const DeltaLength& a, const DeltaLength& b) { return a.exponent < b.exponent; });
  std::sort(orbit.minimal.begin(), orbit.minimal.end(),
            [](const DeltaConjugate& a, const DeltaConjugate& b) {
              return detail::prefer_exponent(a.exponent, b.exponent);
            });
  return orbit;
}

/// Minimal-length conjugate by a power of delta; among minimal exponents the
/// smallest |k| wins, positive on ties.
inline DeltaConjugate delta_reduce(const Word& delta, const Word& v) {
  return delta_orbit(delta, v).minimal.front();
}

inline DeltaConjugate delta_reduce(const VIContext& ctx, const Word& v) {
  return delta_reduce(ctx.delta(), v);
}

inline bool is_delta_reduced(const Word& delta, const Word& v, std::int64_t window = -1) {
  if (is_cyclically_reduced(v) || delta.empty()) return true;
  return delta_orbit(delta, v, window).min_length >= v.size();
}

inline bool is_delta_reduced(const VIContext& ctx, const Word& v, std::int64_t window = -1) {
  return is_delta_reduced(ctx.delta(), v, window);
}

/// Greedy descent by delta^{+-1} while the length strictly drops. Reaches a
/// delta-reduced word when delta is cyclically reduced; otherwise it can stop
/// on a plateau above the true minimum.
inline DeltaConjugate delta_reduce_greedy(const Word& delta, const Word& v) {
  DeltaConjugate cur{v, 0};
  if (delta.empty()) return cur;
  const Word di = delta.inverse();
  for (;;) {
    const Word up = di * cur.word * delta;
    const Word down = delta * cur.word * di;
    if (up.size() < cur.word.size() && up.size() <= down.size()) {
      cur = {up, cur.exponent + 1};
    } else if (down.size() < cur.word.size()) {
      cur = {down, cur.exponent - 1};
    } else {
      return cur;
    }
  }
}

/// Lengths |delta^-k v delta^k| for k in [from, to], computed directly.
inline std::vector<std::size_t> delta_length_profile(const Word& delta, const Word& v,
                                                     std::int64_t from, std::int64_t to) {
  std::vector<std::size_t> out;
  for (std::int64_t k = from; k <= to; ++k) {
    const Word dk = delta.power(k);
    out.push_back((dk.inverse() * v * dk).size());
  }
  return out;
}

}  // namespace viconj
