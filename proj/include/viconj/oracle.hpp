#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "viconj/context.hpp"
#include "viconj/finite_action.hpp"
#include "viconj/word.hpp"

namespace viconj {

/// Calls visit on every reduced word of length <= max_len over x_1..x_rank,
/// in shortlex order, stopping early when visit returns true.
inline bool for_each_reduced_word(int rank, std::size_t max_len,
                                  const std::function<bool(const Word&)>& visit) {
  std::vector<Letter> letters;
  for (int i = 1; i <= rank; ++i) {
    letters.push_back(gen(i));
    letters.push_back(gen_inv(i));
  }
  Word cur;
  std::function<bool(std::size_t)> extend = [&](std::size_t remaining) -> bool {
    if (remaining == 0) return visit(cur);
    for (Letter l : letters) {
      if (!cur.empty() && cancels(cur.back(), l)) continue;
      cur.push_back(l);
      const bool stop = extend(remaining - 1);
      // Undo by appending the inverse, which cancels the letter just added.
      cur.push_back(l.inv());
      if (stop) return true;
    }
    return false;
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (extend(len)) return true;
  }
  return false;
}

/// t-offsets 0, 1, -1, 2, -2, ... up to t_bound, made canonical and
/// de-duplicated when t has finite order.
inline std::vector<std::int64_t> oracle_t_offsets(const VIContext& ctx, std::int64_t t_bound) {
  std::vector<std::int64_t> out;
  std::set<std::int64_t> seen;
  for (std::int64_t mag = 0; mag <= t_bound; ++mag) {
    for (std::int64_t a : {mag, -mag}) {
      if (mag == 0 && a < 0) continue;
      if (seen.insert(ctx.canonical_t(a)).second) out.push_back(a);
    }
  }
  return out;
}

/// Exhaustive search for u = t^a U with u^-1 v u == w, |a| <= t_bound and
/// |U| <= len_bound. Candidates are tried by ascending |a| (positive first),
/// then U in shortlex order; the first hit is returned.
///
/// Uses v u == u w, i.e. phi^a(V) U == phi^l(U) W after the t-parts match,
/// with phi^l(U) built letter by letter.
inline std::optional<ConjugacyCertificate> brute_force_conjugacy(const VIContext& ctx,
                                                                 const ExtElement& v,
                                                                 const ExtElement& w,
                                                                 std::size_t len_bound,
                                                                 std::int64_t t_bound) {
  const ExtElement cv = canonical(ctx, v);
  const ExtElement cw = canonical(ctx, w);
  if (cv.t_exp != cw.t_exp) return std::nullopt;

  const std::int64_t ell = cv.t_exp;
  std::vector<Word> letter_image;  // phi^l(x_i), phi^l(x_i^-1) in alphabet order
  for (int i = 1; i <= ctx.rank(); ++i) {
    const Word img = ctx.power_apply(ell, Word::generator(i));
    letter_image.push_back(img);
    letter_image.push_back(img.inverse());
  }

  std::optional<ConjugacyCertificate> found;
  for (std::int64_t a : oracle_t_offsets(ctx, t_bound)) {
    const Word twisted_v = ctx.power_apply(a, cv.x_part);
    // Depth-first over U with the running value of phi^l(U).
    Word u;
    std::vector<Word> image_stack{Word{}};
    std::function<bool(std::size_t)> extend = [&](std::size_t remaining) -> bool {
      if (remaining == 0) {
        if (twisted_v * u == image_stack.back() * cw.x_part) {
          found = ConjugacyCertificate{{a, u}};
          return true;
        }
        return false;
      }
      for (int i = 1; i <= ctx.rank(); ++i) {
        for (bool inv : {false, true}) {
          const Letter l{i, inv};
          if (!u.empty() && cancels(u.back(), l)) continue;
          u.push_back(l);
          image_stack.push_back(image_stack.back() *
                                letter_image[static_cast<std::size_t>(2 * (i - 1) + (inv ? 1 : 0))]);
          const bool stop = extend(remaining - 1);
          image_stack.pop_back();
          u.push_back(l.inv());
          if (stop) return true;
        }
      }
      return false;
    };
    for (std::size_t len = 0; len <= len_bound; ++len) {
      if (extend(len)) return found;
    }
  }
  return std::nullopt;
}

/// Same search in F_n x| M: u = (g, U) over all g in list order, |U| <= len_bound.
inline std::optional<MElement> brute_force_conjugacy_finite(const FiniteActionContext& mctx,
                                                            const MElement& v, const MElement& w,
                                                            std::size_t len_bound) {
  std::optional<MElement> found;
  for (std::size_t g = 0; g < mctx.size(); ++g) {
    if (mctx.conjugate(v.action, g) != w.action) continue;
    for_each_reduced_word(mctx.rank(), len_bound, [&](const Word& u) {
      const MElement cand{g, u};
      if (conjugate(mctx, v, cand) == w) {
        found = cand;
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace viconj
