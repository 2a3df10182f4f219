#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "viconj/automorphism.hpp"
#include "viconj/twisted_shift.hpp"
#include "viconj/word.hpp"

namespace viconj {

/// A finite group M of automorphisms of F_n, listed with the identity first.
/// List position is the order used to pick class representatives.
///
/// In F_n x| M an element alpha acts on F_n by alpha^-1 f alpha = alpha(f),
/// so the group product alpha * beta acts as beta o alpha; product(i, j)
/// records exactly that.
class FiniteActionContext {
 public:
  static FiniteActionContext create(int rank, std::vector<Automorphism> elements) {
    if (elements.empty() || !elements.front().is_identity()) {
      throw std::invalid_argument("the first element of M must be the identity");
    }
    for (const auto& a : elements) {
      if (a.rank() != rank) throw std::invalid_argument("automorphism rank differs from M's rank");
    }
    const std::size_t k = elements.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (elements[i] == elements[j]) {
          throw std::invalid_argument("M lists element " + std::to_string(i) + " twice");
        }
      }
    }
    std::vector<std::vector<std::size_t>> product(k, std::vector<std::size_t>(k));
    std::vector<std::size_t> inverse(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const Automorphism composed = elements[j].after(elements[i]);
        std::size_t found = k;
        for (std::size_t c = 0; c < k; ++c) {
          if (elements[c] == composed) {
            found = c;
            break;
          }
        }
        if (found == k) {
          throw std::invalid_argument("M is not closed under composition (elements " +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        product[i][j] = found;
        if (found == 0) inverse[i] = j;
      }
      if (inverse[i] == k) {
        throw std::invalid_argument("element " + std::to_string(i) + " has no inverse in M");
      }
    }
    return FiniteActionContext(rank, std::move(elements), std::move(product), std::move(inverse));
  }

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Automorphism& element(std::size_t i) const { return elements_.at(i); }
  std::size_t product(std::size_t i, std::size_t j) const { return product_.at(i).at(j); }
  std::size_t inverse(std::size_t i) const { return inverse_.at(i); }

  /// g^-1 i g in M.
  std::size_t conjugate(std::size_t i, std::size_t g) const {
    return product(product(inverse(g), i), g);
  }

 private:
  FiniteActionContext(int rank, std::vector<Automorphism> elements,
                      std::vector<std::vector<std::size_t>> product,
                      std::vector<std::size_t> inverse)
      : rank_(rank),
        elements_(std::move(elements)),
        product_(std::move(product)),
        inverse_(std::move(inverse)) {}

  int rank_;
  std::vector<Automorphism> elements_;
  std::vector<std::vector<std::size_t>> product_;
  std::vector<std::size_t> inverse_;
};

/// alpha_action * x_part.
struct MElement {
  std::size_t action = 0;
  Word x_part;

  friend bool operator==(const MElement&, const MElement&) = default;
};

inline MElement multiply(const FiniteActionContext& mctx, const MElement& a, const MElement& b) {
  return {mctx.product(a.action, b.action), mctx.element(b.action).apply(a.x_part) * b.x_part};
}

inline MElement inverse(const FiniteActionContext& mctx, const MElement& a) {
  const std::size_t inv = mctx.inverse(a.action);
  return {inv, mctx.element(inv).apply(a.x_part.inverse())};
}

inline MElement conjugate(const FiniteActionContext& mctx, const MElement& v, const MElement& u) {
  return multiply(mctx, multiply(mctx, inverse(mctx, u), v), u);
}

class ActionTwist {
 public:
  ActionTwist(const FiniteActionContext& mctx, std::size_t action)
      : fwd_(&mctx.element(action)), bwd_(&mctx.element(mctx.inverse(action))) {}
  Word forward(const Word& w) const { return fwd_->apply(w); }
  Word backward(const Word& w) const { return bwd_->apply(w); }

 private:
  const Automorphism* fwd_;
  const Automorphism* bwd_;
};

struct FiniteNormalForm {
  MElement form;
  MElement conjugator;  // conjugator^-1 v conjugator == form
  std::size_t set_size = 0;
};

/// Least M-class representative for the action, then the shortlex-least free
/// part over the D_0 sets reachable through conjugates that keep that
/// representative.
inline FiniteNormalForm normal_form_finite_M(const FiniteActionContext& mctx, const MElement& v) {
  std::size_t rep = v.action;
  for (std::size_t g = 0; g < mctx.size(); ++g) rep = std::min(rep, mctx.conjugate(v.action, g));

  const ActionTwist twist(mctx, rep);
  const Word no_delta;
  std::size_t to_rep = 0;
  while (mctx.conjugate(v.action, to_rep) != rep) ++to_rep;
  MElement cur_conj{to_rep, {}};
  MElement cur = conjugate(mctx, v, cur_conj);

  for (;;) {
    const ReducedWord seed = twisted_delta_reduce(twist, no_delta, cur.x_part);
    cur_conj = multiply(mctx, cur_conj, {0, seed.conjugator});
    cur = {rep, seed.word};

    // Closed over members: centraliser elements c keep the representative,
    // c^-1 (rep W) c = rep c(W), and every member is moved by every c.
    std::map<Word, MElement, ShortLexLess> set{{cur.x_part, MElement{0, {}}}};
    std::deque<Word> queue{cur.x_part};
    std::optional<std::pair<Word, MElement>> shorter;
    while (!queue.empty() && !shorter) {
      const Word w = std::move(queue.front());
      queue.pop_front();
      const MElement to_w = set.at(w);
      for (std::size_t c = 0; c < mctx.size() && !shorter; ++c) {
        if (mctx.conjugate(rep, c) != rep) continue;
        const MElement start = conjugate(mctx, {rep, w}, {c, {}});
        const ReducedWord r = twisted_delta_reduce(twist, no_delta, start.x_part);
        const MElement to_r = multiply(mctx, multiply(mctx, to_w, {c, {}}), {0, r.conjugator});
        if (r.word.size() < cur.x_part.size()) {
          shorter.emplace(r.word, to_r);
          break;
        }
        if (r.word.size() > cur.x_part.size()) continue;
        const ShiftClosure closure = shift_closure(twist, no_delta, r.word);
        if (closure.shorter) {
          shorter.emplace(closure.shorter->word,
                          multiply(mctx, to_r, {0, closure.shorter->conjugator}));
          break;
        }
        for (const auto& [x, u] : closure.members) {
          if (set.emplace(x, multiply(mctx, to_r, {0, u})).second) queue.push_back(x);
        }
      }
    }
    if (shorter) {
      cur_conj = multiply(mctx, cur_conj, shorter->second);
      cur = {rep, shorter->first};
      continue;
    }
    const auto& [least, least_conj] = *set.begin();
    return {{rep, least}, multiply(mctx, cur_conj, least_conj), set.size()};
  }
}

inline bool finite_are_conjugate(const FiniteActionContext& mctx, const MElement& u,
                                 const MElement& v) {
  return normal_form_finite_M(mctx, u).form == normal_form_finite_M(mctx, v).form;
}

}  // namespace viconj
