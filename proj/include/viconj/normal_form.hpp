#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "viconj/context.hpp"
#include "viconj/delta_reduction.hpp"
#include "viconj/twisted_shift.hpp"
#include "viconj/word.hpp"

namespace viconj {

/// psi = phi^l, the automorphism induced by t^l.
class PowerTwist {
 public:
  PowerTwist(const VIContext& ctx, std::int64_t ell) : ctx_(&ctx), ell_(ell) {}
  Word forward(const Word& w) const { return ctx_->power_apply(ell_, w); }
  Word backward(const Word& w) const { return ctx_->power_apply(-ell_, w); }

 private:
  const VIContext* ctx_;
  std::int64_t ell_;
};

inline Word cyclic_psi_shift(const VIContext& ctx, std::int64_t ell, const Word& v,
                             std::size_t split, ShiftSide side) {
  return twisted_shift(PowerTwist(ctx, ell), v, split, side).word;
}

inline Word cyclically_psi_reduce(const VIContext& ctx, std::int64_t ell, const Word& v) {
  return twisted_reduce(PowerTwist(ctx, ell), v).word;
}

inline bool is_cyclically_psi_reduced(const VIContext& ctx, std::int64_t ell, const Word& v) {
  return !best_decreasing_shift(PowerTwist(ctx, ell), v).has_value();
}

/// An element together with a certificate that it is conjugate to the input
/// it was derived from.
struct CertifiedConjugate {
  ExtElement element;
  ConjugacyCertificate certificate;
};

inline ExtElement t_power(std::int64_t k) { return {k, {}}; }
inline ExtElement free_element(Word w) { return {0, std::move(w)}; }

/// Cyclic psi-reduction followed by delta-reduction, repeated to a fixpoint.
inline CertifiedConjugate reduce_element(const VIContext& ctx, const ExtElement& v) {
  const ExtElement c = canonical(ctx, v);
  ReducedWord r = twisted_delta_reduce(PowerTwist(ctx, c.t_exp), ctx.delta(), c.x_part);
  return {{c.t_exp, std::move(r.word)}, {free_element(std::move(r.conjugator))}};
}

namespace detail {

using CertifiedSet = std::map<Word, ExtElement, ShortLexLess>;  // x-part -> conjugator

inline std::vector<CertifiedConjugate> to_vector(std::int64_t ell, const CertifiedSet& set) {
  std::vector<CertifiedConjugate> out;
  out.reserve(set.size());
  for (const auto& [w, conj] : set) out.push_back({{ell, w}, {conj}});
  return out;
}

/// Memoised D_0 computations for one context and one t-exponent.
class DSetBuilder {
 public:
  DSetBuilder(const VIContext& ctx, std::int64_t ell) : ctx_(ctx), ell_(ctx.canonical_t(ell)) {}

  /// D_0 of t^l V, with conjugators relative to t^l V. Restarts from any
  /// strictly shorter conjugate that turns up.
  CertifiedSet d0(const Word& v) {
    ExtElement conj = t_power(0);
    Word cur = v;
    for (;;) {
      const CertifiedConjugate r = reduce_element(ctx_, {ell_, cur});
      conj = multiply(ctx_, conj, r.certificate.conjugator);
      const auto [closure_ptr, offset] = closure_of(r.element.x_part);
      const ShiftClosure& closure = *closure_ptr;
      conj = multiply(ctx_, conj, free_element(offset));
      if (closure.shorter) {
        conj = multiply(ctx_, conj, free_element(closure.shorter->conjugator));
        cur = closure.shorter->word;
        continue;
      }
      CertifiedSet out;
      for (const auto& [w, c] : closure.members) {
        out.emplace(w, multiply(ctx_, conj, free_element(c)));
      }
      return out;
    }
  }

  /// Union of D_0(t^l phi^k(V)) over k in {0, d, ..., m - d}, d = gcd(m, l).
  CertifiedSet d(const Word& v) {
    const std::int64_t m = ctx_.m();
    const std::int64_t step = std::gcd(m, ell_ < 0 ? -ell_ : ell_);
    CertifiedSet out;
    for (std::int64_t k = 0; k < m; k += step) {
      merge(out, d0(ctx_.power_apply(k, v)), t_power(k));
    }
    return out;
  }

  /// Union of D(t^-k w t^k) over 0 <= k < m, closed over every member w and
  /// kept at the least length found. Taking only the seed's t-conjugates is
  /// not enough: a reduced shift need not be reversible, so two conjugate
  /// seeds can see different sets.
  CertifiedSet dbar(const Word& v) {
    CertifiedSet out;
    std::deque<Word> queue;
    auto absorb = [&](const CertifiedSet& found, const ExtElement& prefix) {
      for (const auto& [w, c] : found) {
        if (!out.empty()) {
          const std::size_t least = out.begin()->first.size();
          if (w.size() > least) continue;
          if (w.size() < least) {
            out.clear();
            queue.clear();
          }
        }
        if (out.emplace(w, multiply(ctx_, prefix, c)).second) queue.push_back(w);
      }
    };
    absorb(d(v), t_power(0));
    while (!queue.empty()) {
      const Word w = std::move(queue.front());
      queue.pop_front();
      const auto it = out.find(w);
      if (it == out.end()) continue;
      const ExtElement conj = it->second;
      for (std::int64_t k = 0; k < ctx_.m(); ++k) {
        absorb(d0(ctx_.power_apply(k, w)), multiply(ctx_, conj, t_power(k)));
      }
    }
    return out;
  }

 private:
  // A word already inside a cached closure reuses it; the offset carries the
  // word to the closure's start.
  std::pair<const ShiftClosure*, Word> closure_of(const Word& start) {
    if (auto m = member_of_.find(start); m != member_of_.end()) {
      return {m->second, m->second->members.at(start).inverse()};
    }
    auto it = cache_.find(start);
    if (it == cache_.end()) {
      it = cache_.emplace(start, shift_closure(PowerTwist(ctx_, ell_), ctx_.delta(), start)).first;
      for (const auto& [w, c] : it->second.members) member_of_.emplace(w, &it->second);
    }
    return {&it->second, Word{}};
  }

  // Members are relative to t^-k v t^k; prefix the conjugator t^k.
  void merge(CertifiedSet& into, const CertifiedSet& from, const ExtElement& prefix) {
    for (const auto& [w, c] : from) into.emplace(w, multiply(ctx_, prefix, c));
  }

  const VIContext& ctx_;
  std::int64_t ell_;
  std::map<Word, ShiftClosure, ShortLexLess> cache_;
  std::map<Word, const ShiftClosure*, ShortLexLess> member_of_;
};

}  // namespace detail

/// D_0(v): conjugates of v reachable by cyclic psi-shifts and delta-reduction,
/// all cyclically psi-reduced and delta-reduced, sorted by shortlex x-part.
inline std::vector<CertifiedConjugate> build_D0(const VIContext& ctx, const ExtElement& v) {
  const ExtElement c = canonical(ctx, v);
  detail::DSetBuilder builder(ctx, c.t_exp);
  return detail::to_vector(c.t_exp, builder.d0(c.x_part));
}

inline std::vector<CertifiedConjugate> build_D(const VIContext& ctx, const ExtElement& v) {
  const ExtElement c = canonical(ctx, v);
  detail::DSetBuilder builder(ctx, c.t_exp);
  return detail::to_vector(c.t_exp, builder.d(c.x_part));
}

inline std::vector<CertifiedConjugate> build_Dbar(const VIContext& ctx, const ExtElement& v) {
  const ExtElement c = canonical(ctx, v);
  detail::DSetBuilder builder(ctx, c.t_exp);
  return detail::to_vector(c.t_exp, builder.dbar(c.x_part));
}

struct NormalFormResult {
  ExtElement form;
  ConjugacyCertificate certificate;  // certificate.conjugator^-1 v conjugator == form
  std::size_t dbar_size = 0;
  std::vector<std::string> diagnostics;
};

/// The shortlex-least element of Dbar(v). The input is first reduced; if Dbar
/// turns up anything shorter than its seed, the construction restarts there.
inline NormalFormResult normal_form(const VIContext& ctx, const ExtElement& v) {
  NormalFormResult out;
  if (!ctx.minimality_verified()) {
    out.diagnostics.push_back(
        "non-minimal m: minimality of the inner power was not verified for this context");
  }
  ExtElement conj = t_power(0);
  ExtElement cur = canonical(ctx, v);
  for (;;) {
    const CertifiedConjugate r = reduce_element(ctx, cur);
    conj = multiply(ctx, conj, r.certificate.conjugator);
    cur = r.element;
    detail::DSetBuilder builder(ctx, cur.t_exp);
    const detail::CertifiedSet dbar = builder.dbar(cur.x_part);
    const auto& [least, least_conj] = *dbar.begin();
    conj = multiply(ctx, conj, least_conj);
    if (least.size() < cur.x_part.size()) {
      cur = {cur.t_exp, least};
      continue;
    }
    out.form = {cur.t_exp, least};
    out.certificate = {conj};
    out.dbar_size = dbar.size();
    return out;
  }
}

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<ConjugacyCertificate> certificate;  // certificate.conjugator^-1 u c == v
  std::vector<std::string> diagnostics;
};

inline ConjugacyResult are_conjugate(const VIContext& ctx, const ExtElement& u,
                                     const ExtElement& v) {
  ConjugacyResult out;
  if (ctx.canonical_t(u.t_exp) != ctx.canonical_t(v.t_exp)) return out;
  const NormalFormResult nu = normal_form(ctx, u);
  const NormalFormResult nv = normal_form(ctx, v);
  out.diagnostics = nu.diagnostics;
  if (nu.form != nv.form) return out;
  out.conjugate = true;
  out.certificate = ConjugacyCertificate{
      multiply(ctx, nu.certificate.conjugator, inverse(ctx, nv.certificate.conjugator))};
  return out;
}

}  // namespace viconj
