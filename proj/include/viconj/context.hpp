#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "viconj/automorphism.hpp"
#include "viconj/word.hpp"

namespace viconj {

/// Raw description of F_n(t): t acts by phi, phi^m(f) = delta^-1 f delta.
/// An empty t_order means t has infinite order.
struct ContextData {
  int rank = 2;
  std::optional<std::int64_t> t_order;
  Automorphism phi = Automorphism::identity(2);
  int m = 1;
  Word delta;
};

struct ValidationIssue {
  enum class Kind { shape, inner_power, delta_not_fixed, finite_order, not_minimal };
  Kind kind;
  int generator = 0;  // 1-based, 0 when not tied to one generator
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool minimality_checked = false;

  bool ok() const noexcept { return issues.empty(); }

  std::string describe() const {
    std::ostringstream os;
    for (const auto& issue : issues) os << issue.message << '\n';
    return os.str();
  }
};

struct ValidationOptions {
  bool check_minimality = true;
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

/// Checks every context invariant on the generators and reports each failure.
/// phi^m is computed by direct iteration here, never through the delta shortcut.
inline ValidationReport verify_vi(const ContextData& data, ValidationOptions options = {}) {
  ValidationReport report;
  auto fail = [&](ValidationIssue::Kind kind, int gen, std::string msg) {
    report.issues.push_back({kind, gen, std::move(msg)});
  };

  if (data.rank < 2) fail(ValidationIssue::Kind::shape, 0, "rank must be at least 2");
  if (data.phi.rank() != data.rank) {
    fail(ValidationIssue::Kind::shape, 0, "automorphism rank differs from context rank");
  }
  if (data.m < 1) fail(ValidationIssue::Kind::shape, 0, "inner power m must be positive");
  if (data.t_order && *data.t_order < 1) {
    fail(ValidationIssue::Kind::shape, 0, "order of t must be positive");
  }
  for (Letter l : data.delta) {
    if (l.index < 1 || l.index > data.rank) {
      fail(ValidationIssue::Kind::shape, 0, "delta uses a generator outside the rank");
      break;
    }
  }
  if (!report.ok()) return report;

  const Automorphism& phi = data.phi;
  const Automorphism phi_m = phi.power(data.m);
  for (int i = 1; i <= data.rank; ++i) {
    const Word x = Word::generator(i);
    if (phi_m.image(i) != conjugate_by(x, data.delta)) {
      fail(ValidationIssue::Kind::inner_power, i,
           "phi^" + std::to_string(data.m) + "(x" + std::to_string(i) +
               ") is not delta^-1 x" + std::to_string(i) + " delta");
    }
  }
  if (phi.apply(data.delta) != data.delta) {
    fail(ValidationIssue::Kind::delta_not_fixed, 0, "phi(delta) != delta");
  }
  if (data.t_order) {
    const Automorphism phi_w = phi.power(static_cast<int>(*data.t_order));
    for (int i = 1; i <= data.rank; ++i) {
      if (phi_w.image(i) != Word::generator(i)) {
        fail(ValidationIssue::Kind::finite_order, i,
             "phi^" + std::to_string(*data.t_order) + " moves x" + std::to_string(i) +
                 ", inconsistent with the order of t");
      }
    }
  }
  if (options.check_minimality && report.ok()) {
    report.minimality_checked = true;
    Automorphism power = phi;
    for (int j = 1; j < data.m; ++j) {
      if (find_inner_witness(power)) {
        fail(ValidationIssue::Kind::not_minimal, 0,
             "phi^" + std::to_string(j) + " is already inner; m = " +
                 std::to_string(data.m) + " is not minimal");
        break;
      }
      power = phi.after(power);
    }
  }
  return report;
}

/// A validated group F_n(t). Caches the images of phi^r for 0 <= r < m so
/// that any power of phi is one substitution plus a delta-conjugation.
class VIContext {
 public:
  static VIContext create(ContextData data, ValidationOptions options = {}) {
    ValidationReport report = verify_vi(data, options);
    if (!report.ok()) {
      throw std::invalid_argument("invalid virtually inner context:\n" + report.describe());
    }
    return VIContext(std::move(data), report.minimality_checked);
  }

  int rank() const noexcept { return data_.rank; }
  const std::optional<std::int64_t>& t_order() const noexcept { return data_.t_order; }
  const Automorphism& phi() const noexcept { return data_.phi; }
  int m() const noexcept { return data_.m; }
  const Word& delta() const noexcept { return data_.delta; }
  const ContextData& data() const noexcept { return data_; }
  bool minimality_verified() const noexcept { return minimality_verified_; }
  Alphabet alphabet() const { return Alphabet::of_rank(data_.rank); }

  std::int64_t canonical_t(std::int64_t k) const {
    return data_.t_order ? floor_mod(k, *data_.t_order) : k;
  }

  /// phi^k(v) via k = m q + r: phi^r(delta^-q v delta^q), 0 <= r < m.
  Word power_apply(std::int64_t k, const Word& v) const {
    k = canonical_t(k);
    if (k == 0) return v;
    const std::int64_t q = floor_div(k, data_.m);
    const auto r = static_cast<std::size_t>(k - q * data_.m);
    Word image = phi_powers_[r].apply(v);
    if (q == 0 || data_.delta.empty()) return image;
    const Word dq = data_.delta.power(q);
    return dq.inverse() * image * dq;
  }

 private:
  VIContext(ContextData data, bool minimality_verified)
      : data_(std::move(data)), minimality_verified_(minimality_verified) {
    phi_powers_.reserve(static_cast<std::size_t>(data_.m));
    phi_powers_.push_back(Automorphism::identity(data_.rank));
    for (int r = 1; r < data_.m; ++r) phi_powers_.push_back(data_.phi.after(phi_powers_.back()));
  }

  ContextData data_;
  bool minimality_verified_;
  std::vector<Automorphism> phi_powers_;
};

inline Word power_apply(const VIContext& ctx, std::int64_t k, const Word& v) {
  return ctx.power_apply(k, v);
}

/// t^t_exp * x_part.
struct ExtElement {
  std::int64_t t_exp = 0;
  Word x_part;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

inline ExtElement canonical(const VIContext& ctx, ExtElement e) {
  e.t_exp = ctx.canonical_t(e.t_exp);
  return e;
}

/// (t^a A)(t^b B) = t^(a+b) phi^b(A) B, from f t = t phi(f).
inline ExtElement multiply(const VIContext& ctx, const ExtElement& a, const ExtElement& b) {
  return canonical(ctx, {a.t_exp + b.t_exp, ctx.power_apply(b.t_exp, a.x_part) * b.x_part});
}

inline ExtElement inverse(const VIContext& ctx, const ExtElement& a) {
  return canonical(ctx, {-a.t_exp, ctx.power_apply(-a.t_exp, a.x_part.inverse())});
}

/// u^-1 v u.
inline ExtElement conjugate(const VIContext& ctx, const ExtElement& v, const ExtElement& u) {
  return multiply(ctx, multiply(ctx, inverse(ctx, u), v), u);
}

/// Conjugator u with u^-1 * from * u == to.
struct ConjugacyCertificate {
  ExtElement conjugator;

  bool replays(const VIContext& ctx, const ExtElement& from, const ExtElement& to) const {
    return conjugate(ctx, canonical(ctx, from), conjugator) == canonical(ctx, to);
  }
};

}  // namespace viconj
