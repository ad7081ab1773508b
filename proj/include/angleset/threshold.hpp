#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "angleset/rational.hpp"

namespace angleset {

enum class Cmp { Less, Equal, Greater, Undecided };
enum class Mode { Strict, Weak };

/// An angle threshold as written on the command line; `value` is the exact
/// rational payload (c, radians, or degrees).
struct AngleSpec {
  enum class Kind { PiThirdPlusC, Radians, Degrees };
  Kind kind = Kind::PiThirdPlusC;
  Rational value;
};

/// A decision procedure for "cos∠ versus cos α" where cos∠ = D/sqrt(a·b)
/// with rational D (any sign) and positive rationals a, b.
///
/// Thresholds whose cosine (or squared cosine) is rational are decided
/// exactly, with Equal representable — this covers π/3 and the quarter/third
/// turn degree values. All other thresholds are decided against a rational
/// enclosure [lo, hi] of cos α computed by directed rounding, escalating the
/// working precision (p, 2p, 4p bits) until the enclosure separates. Such
/// cosines are irrational and can never equal a quadratic surd D/sqrt(ab), so
/// escalation terminates whenever the compared values differ; Undecided is
/// returned only when they are still inseparable at 4p bits.
class AngleThreshold {
 public:
  explicit AngleThreshold(const AngleSpec& spec, unsigned base_prec_bits = 0);

  const AngleSpec& spec() const { return spec_; }
  double alpha_radians() const { return alpha_radians_; }
  double cos_alpha() const { return cos_alpha_; }
  bool has_exact_cos() const { return exact_cos_.has_value() || exact_cos_sq_.has_value(); }

  /// cos∠ versus cos α.
  Cmp compare_cos(const Rational& dot, const Rational& a_sq, const Rational& b_sq) const;

  /// The angle versus α (reversed ordering of compare_cos, since cos is
  /// decreasing on [0, π]). Less means the angle is strictly below α.
  Cmp compare_angle(const Rational& dot, const Rational& a_sq, const Rational& b_sq) const;

 private:
  AngleSpec spec_;
  double alpha_radians_ = 0;
  double cos_alpha_ = 0;
  std::optional<Rational> exact_cos_;
  std::optional<std::pair<Rational, int>> exact_cos_sq_;  // (cos²α, sign of cos α)
  std::vector<std::pair<Rational, Rational>> enclosures_;  // [lo, hi] per precision tier
};

/// Exact comparison of D/sqrt(a·b) against a rational t (sign analysis plus
/// squaring). Never returns Undecided.
Cmp compare_cos_to_rational(const Rational& dot, const Rational& a_sq, const Rational& b_sq,
                            const Rational& t);

}  // namespace angleset
