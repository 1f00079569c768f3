#pragma once

#include <string>

namespace cornerlab {

// Real number extended by tagged +inf / -inf sentinels. Stored results never
// carry IEEE infinities; use ExtReal where a value may be unbounded.
class ExtReal {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  constexpr ExtReal() = default;
  // Non-finite doubles are mapped to the matching sentinel; NaN is rejected.
  ExtReal(double v);  // NOLINT(google-explicit-constructor)

  static constexpr ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

  // Throws InvalidArgument on a sentinel.
  double value() const;
  // IEEE view for comparisons and arithmetic in local code.
  double as_double() const noexcept;

  // "inf", "-inf", or the value with 9 significant digits.
  std::string to_string() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b) noexcept {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.v_ == b.v_);
  }

 private:
  constexpr explicit ExtReal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  double v_ = 0.0;
};

// Negation swaps the sentinels.
ExtReal operator-(const ExtReal& a);

// printf("%.9g") formatting shared by CLI and reports.
std::string format_g9(double v);

}  // namespace cornerlab
