#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "viconj/context.hpp"
#include "viconj/finite_action.hpp"
#include "viconj/presets.hpp"
#include "viconj/shift_infty.hpp"
#include "viconj/text.hpp"
#include "viconj/word.hpp"

namespace viconj {

// GTest printers.
inline void PrintTo(const Word& w, std::ostream* os) { *os << format_word(w); }
inline void PrintTo(const ExtElement& e, std::ostream* os) { *os << format_element(e.t_exp, e.x_part); }
inline void PrintTo(const ShiftElement& e, std::ostream* os) { *os << format_element(e.t_exp, e.x_part); }
inline void PrintTo(const MElement& e, std::ostream* os) {
  *os << "(" << e.action << ", " << format_word(e.x_part) << ")";
}

}  // namespace viconj

namespace viconj::testing {

using Rng = std::mt19937_64;

/// Seed from VICONJ_SEED when set, else the given default.
inline std::uint64_t seed_or(std::uint64_t fallback) {
  if (const char* s = std::getenv("VICONJ_SEED")) return std::stoull(s);
  return fallback;
}

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Reduced word of exactly len letters with indices in [lo, hi].
inline Word random_word(Rng& rng, int lo, int hi, std::size_t len) {
  Word w;
  while (w.size() < len) {
    const Letter l{uniform(rng, lo, hi), uniform(rng, 0, 1) == 1};
    if (!w.empty() && cancels(w.back(), l)) continue;
    w.push_back(l);
  }
  return w;
}

inline Word random_word(Rng& rng, int rank, std::size_t max_len) {
  return random_word(rng, 1, rank, static_cast<std::size_t>(uniform(rng, 0, int(max_len))));
}

inline ExtElement random_element(Rng& rng, const VIContext& ctx, std::size_t max_len, int t_bound) {
  return canonical(ctx, {uniform(rng, -t_bound, t_bound), random_word(rng, ctx.rank(), max_len)});
}

// F_2 with the generator swap: phi of order 2, m = 2, Delta empty, t of order 2.
inline VIContext swap_context() {
  ContextData d;
  d.rank = 2;
  d.t_order = 2;
  d.phi = Automorphism(2, {Word::generator(2), Word::generator(1)});
  d.m = 2;
  return VIContext::create(std::move(d));
}

inline FiniteActionContext swap_action() {
  return FiniteActionContext::create(
      2, {Automorphism::identity(2), Automorphism(2, {Word::generator(2), Word::generator(1)})});
}

// ---- abelianization invariant ------------------------------------------------

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // row-major, square

inline Vec abelianize(const Word& w, int rank) {
  Vec v(static_cast<std::size_t>(rank), 0);
  for (Letter l : w) v[static_cast<std::size_t>(l.index - 1)] += l.sign();
  return v;
}

// Column i is the abelianized image of x_{i+1}.
inline Mat abelian_matrix(const VIContext& ctx, std::int64_t power) {
  const auto n = static_cast<std::size_t>(ctx.rank());
  Mat a(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec col = abelianize(ctx.power_apply(power, Word::generator(int(i) + 1)), ctx.rank());
    for (std::size_t r = 0; r < n; ++r) a[r][i] = col[r];
  }
  return a;
}

inline Vec mat_vec(const Mat& a, const Vec& v) {
  Vec out(v.size(), 0);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += a[r][c] * v[c];
  return out;
}

/// Whether target lies in the integer span of the columns of a.
inline bool in_column_lattice(Mat a, Vec target) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t r = 0; r < rows; ++r) a[r][dst] -= f * a[r][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][x], a[r][y]);
  };
  // Column echelon form by Euclid on each row.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::size_t p = 0;
  for (std::size_t r = 0; r < rows && p < cols; ++r) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t c = p; c < cols; ++c) {
        if (a[r][c] != 0 && (best == cols || std::llabs(a[r][c]) < std::llabs(a[r][best]))) best = c;
      }
      if (best == cols) break;
      col_swap(p, best);
      bool done = true;
      for (std::size_t c = p + 1; c < cols; ++c) {
        if (a[r][c] == 0) continue;
        col_axpy(c, p, a[r][c] / a[r][p]);
        if (a[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][p] != 0) pivots.push_back({r, p++});
  }
  std::size_t next = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (next < pivots.size() && pivots[next].first == r) {
      const std::size_t c = pivots[next++].second;
      if (target[r] % a[r][c] != 0) return false;
      const std::int64_t f = target[r] / a[r][c];
      for (std::size_t rr = 0; rr < rows; ++rr) target[rr] -= f * a[rr][c];
    } else if (target[r] != 0) {
      return false;
    }
  }
  return true;
}

/// True when u and v cannot be conjugate: different t-exponents, or the
/// abelianized x-parts differ modulo im(I - A^l) for every A-translate.
/// Conjugating by a word c adds (I - A^l) c_ab, conjugating by t applies A.
inline bool separated_by_invariant(const VIContext& ctx, const ExtElement& u, const ExtElement& v) {
  const ExtElement cu = canonical(ctx, u);
  const ExtElement cv = canonical(ctx, v);
  if (cu.t_exp != cv.t_exp) return true;
  const int n = ctx.rank();
  Mat b = abelian_matrix(ctx, cu.t_exp);
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) b[r][c] = (r == c ? 1 : 0) - b[r][c];
  const Mat a = abelian_matrix(ctx, 1);
  Vec orbit = abelianize(cu.x_part, n);
  const Vec target = abelianize(cv.x_part, n);
  // A^m is the identity on the abelianization, so m translates suffice.
  for (int j = 0; j < ctx.m(); ++j) {
    Vec diff = target;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= orbit[i];
    if (in_column_lattice(b, diff)) return false;
    orbit = mat_vec(a, orbit);
  }
  return true;
}

// ---- classical free-group conjugacy (for the shift group at m = 0) ---------

/// Least rotation of the cyclic core.
inline Word least_rotation(const Word& v) {
  const Word core = cyclically_reduce(v).core;
  Word best = core;
  for (std::size_t i = 1; i < core.size(); ++i) {
    const Word r = core.suffix_from(i) * core.prefix(i);
    if (shortlex_compare(r, best) < 0) best = r;
  }
  return best;
}

}  // namespace viconj::testing
