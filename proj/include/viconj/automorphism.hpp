#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "viconj/word.hpp"

namespace viconj {

/// Endomorphism of F_n given by the images of x_1..x_n. When inverse images
/// are supplied they are checked at construction and certify that the map is
/// an automorphism.
class Automorphism {
 public:
  Automorphism(int rank, std::vector<Word> images,
               std::optional<std::vector<Word>> inverse_images = std::nullopt)
      : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
    if (rank_ < 1) throw std::invalid_argument("automorphism rank must be positive");
    if (images_.size() != static_cast<std::size_t>(rank_)) {
      throw std::invalid_argument("expected " + std::to_string(rank_) +
                                  " generator images, got " +
                                  std::to_string(images_.size()));
    }
    const Alphabet alphabet = Alphabet::of_rank(rank_);
    for (const Word& w : images_) alphabet.check(w);
    if (inverse_images_) {
      if (inverse_images_->size() != images_.size()) {
        throw std::invalid_argument("inverse image table has the wrong size");
      }
      for (const Word& w : *inverse_images_) alphabet.check(w);
      const Automorphism fwd(rank_, images_);
      const Automorphism bwd(rank_, *inverse_images_);
      for (int i = 1; i <= rank_; ++i) {
        const Word x = Word::generator(i);
        if (fwd.apply(bwd.apply(x)) != x || bwd.apply(fwd.apply(x)) != x) {
          throw std::invalid_argument("inverse images do not invert the map on x" +
                                      std::to_string(i));
        }
      }
    }
  }

  static Automorphism identity(int rank) {
    std::vector<Word> images;
    for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(i));
    return Automorphism(rank, images, images);
  }

  /// x_i -> w^-1 x_i w.
  static Automorphism conjugation(int rank, const Word& w) {
    std::vector<Word> images, inverses;
    for (int i = 1; i <= rank; ++i) {
      images.push_back(conjugate_by(Word::generator(i), w));
      inverses.push_back(conjugate_by(Word::generator(i), w.inverse()));
    }
    return Automorphism(rank, std::move(images), std::move(inverses));
  }

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(int index) const { return images_.at(static_cast<std::size_t>(index - 1)); }
  const std::optional<std::vector<Word>>& inverse_images() const noexcept {
    return inverse_images_;
  }
  bool certified() const noexcept { return inverse_images_.has_value(); }

  Word apply(Letter l) const {
    if (l.index < 1 || l.index > rank_) {
      throw std::out_of_range("generator x" + std::to_string(l.index) +
                              " outside rank " + std::to_string(rank_));
    }
    const Word& img = images_[static_cast<std::size_t>(l.index - 1)];
    return l.inverse ? img.inverse() : img;
  }

  Word apply(const Word& v) const {
    Word out;
    for (Letter l : v) {
      if (l.index < 1 || l.index > rank_) {
        throw std::out_of_range("generator x" + std::to_string(l.index) +
                                " outside rank " + std::to_string(rank_));
      }
      const Word& img = images_[static_cast<std::size_t>(l.index - 1)];
      if (l.inverse) {
        for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
          out.push_back(it->inv());
        }
      } else {
        out *= img;
      }
    }
    return out;
  }

  /// (*this) o inner: x -> this(inner(x)).
  Automorphism after(const Automorphism& inner) const {
    if (inner.rank_ != rank_) throw std::invalid_argument("rank mismatch in composition");
    std::vector<Word> images;
    images.reserve(images_.size());
    for (const Word& w : inner.images_) images.push_back(apply(w));
    std::optional<std::vector<Word>> inverses;
    if (inverse_images_ && inner.inverse_images_) {
      const Automorphism inner_inv(rank_, *inner.inverse_images_);
      std::vector<Word> inv;
      for (const Word& w : *inverse_images_) inv.push_back(inner_inv.apply(w));
      inverses = std::move(inv);
    }
    Automorphism out(rank_, std::move(images));
    out.inverse_images_ = std::move(inverses);
    return out;
  }

  /// k-fold composition, k >= 0, by direct iteration.
  Automorphism power(int k) const {
    if (k < 0) throw std::invalid_argument("Automorphism::power needs k >= 0");
    Automorphism out = identity(rank_);
    for (int i = 0; i < k; ++i) out = after(out);
    return out;
  }

  bool is_identity() const {
    for (int i = 1; i <= rank_; ++i) {
      if (image(i) != Word::generator(i)) return false;
    }
    return true;
  }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }

 private:
  int rank_;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_images_;
};

inline Word apply(const Automorphism& alpha, const Word& v) { return alpha.apply(v); }

/// alpha applied k times, k >= 0.
inline Word iterate(const Automorphism& alpha, std::int64_t k, Word v) {
  for (std::int64_t i = 0; i < k; ++i) v = alpha.apply(v);
  return v;
}

/// Returns w with alpha(x_i) = w^-1 x_i w for every generator, if one exists.
///
/// alpha(x_1) must be a conjugate S x_1 S^-1 of x_1, which fixes one solution
/// w_1 = S^-1; all others are x_1^a w_1. Matching x_2 forces
/// x_1^-a x_2 x_1^a = w_1 alpha(x_2) w_1^-1, so |a| is bounded by half the
/// length of the right-hand side and the remaining candidates are checked
/// against every generator. The centre of F_n is trivial for n >= 2, so the
/// witness is unique.
inline std::optional<Word> find_inner_witness(const Automorphism& alpha) {
  const int n = alpha.rank();
  if (n < 2) throw std::invalid_argument("find_inner_witness requires rank >= 2");

  const Word x1 = Word::generator(1);
  const auto [core, collar] = cyclically_reduce(alpha.image(1));
  if (core != x1) return std::nullopt;
  const Word w1 = collar.inverse();

  const Word rhs = w1 * alpha.image(2) * w1.inverse();
  const auto bound = static_cast<std::int64_t>(rhs.size() / 2);

  auto check = [&](const Word& w) {
    for (int i = 1; i <= n; ++i) {
      if (conjugate_by(Word::generator(i), w) != alpha.image(i)) return false;
    }
    return true;
  };

  // a = 0, 1, -1, 2, -2, ... keeps the search order deterministic.
  for (std::int64_t mag = 0; mag <= bound; ++mag) {
    for (std::int64_t a : {mag, -mag}) {
      if (mag == 0 && a < 0) continue;
      const Word w = x1.power(a) * w1;
      if (check(w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace viconj
