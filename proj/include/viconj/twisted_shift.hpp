#pragma once

#include <concepts>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "viconj/delta_reduction.hpp"
#include "viconj/word.hpp"

namespace viconj {

/// A twist supplies psi and psi^-1 on F_n, where psi is the automorphism
/// induced by conjugation with the non-free part of the element (t^l, or a
/// finite automorphism).
template <class T>
concept Twist = requires(const T& tw, const Word& w) {
  { tw.forward(w) } -> std::same_as<Word>;
  { tw.backward(w) } -> std::same_as<Word>;
};

enum class ShiftSide { initial, final };

/// Result of moving part of the free part across the twist. The conjugator
/// lies in F_n: conjugator^-1 (g V) conjugator == g word.
struct TwistedShift {
  Word word;
  Word conjugator;
};

/// V == V' V'' with V' = V[0, split). Final side gives psi(V'') V' (conjugator
/// V''^-1); initial side gives V'' psi^-1(V') (conjugator psi^-1(V')).
/// For |V| = 1 the whole letter moves, whatever the split.
template <Twist T>
TwistedShift twisted_shift(const T& tw, const Word& v, std::size_t split, ShiftSide side) {
  if (v.empty()) throw std::invalid_argument("cannot shift a part of the empty word");
  if (v.size() == 1) {
    if (split > 1) throw std::invalid_argument("invalid split position for a one-letter word");
    split = side == ShiftSide::final ? 0 : 1;
  } else if (split < 1 || split >= v.size()) {
    throw std::invalid_argument("split position must lie in [1, |V|-1]");
  }
  const Word head = v.prefix(split);
  const Word tail = v.suffix_from(split);
  if (side == ShiftSide::final) {
    return {tw.forward(tail) * head, tail.inverse()};
  }
  Word moved = tw.backward(head);
  return {tail * moved, moved};
}

/// Every cyclic shift of an initial or a final part of v.
template <Twist T>
std::vector<TwistedShift> all_twisted_shifts(const T& tw, const Word& v) {
  std::vector<TwistedShift> out;
  if (v.empty()) return out;
  if (v.size() == 1) {
    out.push_back(twisted_shift(tw, v, 0, ShiftSide::final));
    out.push_back(twisted_shift(tw, v, 1, ShiftSide::initial));
    return out;
  }
  out.reserve(2 * (v.size() - 1));
  for (std::size_t split = 1; split < v.size(); ++split) {
    out.push_back(twisted_shift(tw, v, split, ShiftSide::final));
    out.push_back(twisted_shift(tw, v, split, ShiftSide::initial));
  }
  return out;
}

/// Shortest (then shortlex-least) length-decreasing shift, if any.
template <Twist T>
std::optional<TwistedShift> best_decreasing_shift(const T& tw, const Word& v) {
  std::optional<TwistedShift> best;
  for (auto& s : all_twisted_shifts(tw, v)) {
    if (s.word.size() >= v.size()) continue;
    if (!best || shortlex_compare(s.word, best->word) < 0) best = std::move(s);
  }
  return best;
}

/// Free part plus the F_n conjugator that carries the original to it.
struct ReducedWord {
  Word word;
  Word conjugator;
};

template <Twist T>
ReducedWord twisted_reduce(const T& tw, const Word& v) {
  ReducedWord cur{v, {}};
  while (auto step = best_decreasing_shift(tw, cur.word)) {
    cur.word = std::move(step->word);
    cur.conjugator *= step->conjugator;
  }
  return cur;
}

/// Alternates twisted reduction and delta-reduction until neither shortens.
/// delta must be fixed by the twist so that delta-conjugation commutes with it.
template <Twist T>
ReducedWord twisted_delta_reduce(const T& tw, const Word& delta, const Word& v) {
  ReducedWord cur{v, {}};
  for (;;) {
    ReducedWord r = twisted_reduce(tw, cur.word);
    cur.word = std::move(r.word);
    cur.conjugator *= r.conjugator;
    const DeltaConjugate d = delta_reduce(delta, cur.word);
    if (d.word.size() >= cur.word.size()) return cur;
    cur.word = d.word;
    cur.conjugator *= delta.power(d.exponent);
  }
}

/// Closure of a reduced word under (shift, then delta-reduce) at fixed length.
/// If any move reaches a strictly shorter word the closure stops and reports it.
struct ShiftClosure {
  std::map<Word, Word, ShortLexLess> members;  // word -> conjugator from start
  std::optional<ReducedWord> shorter;
};

template <Twist T>
ShiftClosure shift_closure(const T& tw, const Word& delta, const Word& start) {
  ShiftClosure out;
  const std::size_t len = start.size();
  std::deque<Word> queue;

  auto admit = [&](const Word& w, const Word& conj) {
    if (out.members.emplace(w, conj).second) queue.push_back(w);
  };
  // Returns false once a shorter word has been recorded.
  auto offer = [&](const Word& w, const Word& conj) {
    if (w.size() < len) {
      out.shorter = ReducedWord{w, conj};
      return false;
    }
    if (cyclically_reduce(w).core.size() > len) return true;
    const DeltaOrbit orbit = delta_orbit(delta, w);
    if (orbit.min_length < len) {
      const auto& best = orbit.minimal.front();
      out.shorter = ReducedWord{best.word, conj * delta.power(best.exponent)};
      return false;
    }
    if (orbit.min_length > len) return true;
    for (const auto& c : orbit.minimal) admit(c.word, conj * delta.power(c.exponent));
    return true;
  };

  if (!offer(start, Word{})) return out;
  while (!queue.empty()) {
    const Word x = std::move(queue.front());
    queue.pop_front();
    const Word conj_x = out.members.at(x);
    for (const auto& s : all_twisted_shifts(tw, x)) {
      if (!offer(s.word, conj_x * s.conjugator)) return out;
    }
  }
  return out;
}

}  // namespace viconj
