#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace viconj {

/// A generator x_i or its inverse. Ordered by (index, inverse) so that
/// x_i < x_i^-1 < x_{i+1}; the same order serves rank-n and Z-indexed alphabets.
struct Letter {
  std::int32_t index = 0;
  bool inverse = false;

  constexpr Letter inv() const noexcept { return {index, !inverse}; }
  constexpr int sign() const noexcept { return inverse ? -1 : 1; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter gen(std::int32_t index) noexcept { return {index, false}; }
constexpr Letter gen_inv(std::int32_t index) noexcept { return {index, true}; }

constexpr bool cancels(Letter a, Letter b) noexcept {
  return a.index == b.index && a.inverse != b.inverse;
}

/// Freely reduced word. Every constructor and mutator keeps the word reduced,
/// so two Words compare equal exactly when they denote the same element.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) push_back(l);
  }
  explicit Word(std::span<const Letter> raw) {
    letters_.reserve(raw.size());
    for (Letter l : raw) push_back(l);
  }

  static Word generator(std::int32_t index, int exponent = 1) {
    Word w;
    const Letter l{index, exponent < 0};
    for (int i = 0; i < std::abs(exponent); ++i) w.letters_.push_back(l);
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  /// Appends with cancellation against the current last letter.
  void push_back(Letter l) {
    if (!letters_.empty() && cancels(letters_.back(), l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  Word& operator*=(const Word& rhs) {
    if (&rhs == this) {
      const Word copy = rhs;
      return *this *= copy;
    }
    for (Letter l : rhs.letters_) push_back(l);
    return *this;
  }

  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inv());
    }
    return w;
  }

  /// Subword [pos, pos + len). A subword of a reduced word is reduced.
  Word slice(std::size_t pos, std::size_t len) const {
    if (pos > letters_.size() || len > letters_.size() - pos) {
      throw std::out_of_range("Word::slice: range outside word");
    }
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return w;
  }
  Word prefix(std::size_t len) const { return slice(0, len); }
  Word suffix_from(std::size_t pos) const { return slice(pos, size() - pos); }

  Word power(std::int64_t k) const {
    const Word base = k < 0 ? inverse() : *this;
    Word w;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) w *= base;
    return w;
  }

  /// Sum of exponents of all letters.
  std::int64_t exponent_sum() const noexcept {
    std::int64_t s = 0;
    for (Letter l : letters_) s += l.sign();
    return s;
  }

  std::int32_t max_index() const {
    std::int32_t m = 0;
    for (Letter l : letters_) m = std::max(m, l.index);
    return m;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

inline Word free_reduce(std::span<const Letter> raw) { return Word(raw); }

/// Length of the reduction of U*V without materializing it.
inline std::size_t product_length(const Word& u, const Word& v) {
  std::size_t k = 0;
  const std::size_t lim = std::min(u.size(), v.size());
  while (k < lim && cancels(u[u.size() - 1 - k], v[k])) ++k;
  return u.size() + v.size() - 2 * k;
}

inline Word conjugate_by(const Word& v, const Word& u) {
  return u.inverse() * v * u;
}

struct CyclicReduction {
  Word core;
  Word collar;  // input == collar * core * collar^-1
};

inline bool is_cyclically_reduced(const Word& v) {
  return v.size() < 2 || !cancels(v.front(), v.back());
}

inline CyclicReduction cyclically_reduce(const Word& v) {
  std::size_t k = 0;
  while (2 * k + 1 < v.size() && cancels(v[k], v[v.size() - 1 - k])) ++k;
  return {v.slice(k, v.size() - 2 * k), v.prefix(k)};
}

/// Length-first, then lexicographic with the letter order above.
inline std::strong_ordering shortlex_compare(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (auto c = u[i] <=> v[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

struct ShortLexLess {
  bool operator()(const Word& a, const Word& b) const {
    return shortlex_compare(a, b) < 0;
  }
};

/// Which letters are legal: x_1..x_n for a finite rank, any integer index for
/// the countably generated group.
class Alphabet {
 public:
  static Alphabet of_rank(int rank) {
    if (rank < 1) throw std::invalid_argument("alphabet rank must be positive");
    return Alphabet(rank);
  }
  static Alphabet integers() { return Alphabet(0); }

  bool integer_indexed() const noexcept { return rank_ == 0; }
  int rank() const noexcept { return rank_; }

  bool contains(Letter l) const noexcept {
    return integer_indexed() || (l.index >= 1 && l.index <= rank_);
  }

  void check(const Word& w) const {
    for (Letter l : w) {
      if (!contains(l)) {
        throw std::out_of_range("generator index " + std::to_string(l.index) +
                                " outside alphabet of rank " + std::to_string(rank_));
      }
    }
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  explicit Alphabet(int rank) : rank_(rank) {}
  int rank_;
};

/// Checked comparison: both words must belong to the given alphabet.
inline std::strong_ordering shortlex_compare(const Alphabet& alphabet, const Word& u,
                                             const Word& v) {
  for (const Word* w : {&u, &v}) {
    for (Letter l : *w) {
      if (!alphabet.contains(l)) {
        throw std::invalid_argument("shortlex_compare: word letter x" +
                                    std::to_string(l.index) +
                                    " does not belong to the alphabet");
      }
    }
  }
  return shortlex_compare(u, v);
}

}  // namespace viconj
