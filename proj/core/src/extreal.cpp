#include "cornerlab/extreal.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "cornerlab/errors.hpp"

namespace cornerlab {

ExtReal::ExtReal(double v) {
  if (std::isnan(v)) fail(ErrorCode::InvalidArgument, "ExtReal from NaN");
  if (std::isinf(v)) {
    kind_ = v > 0 ? Kind::PosInf : Kind::NegInf;
  } else {
    v_ = v;
  }
}

double ExtReal::value() const {
  if (kind_ != Kind::Finite) fail(ErrorCode::InvalidArgument, "value() on an infinite ExtReal");
  return v_;
}

double ExtReal::as_double() const noexcept {
  switch (kind_) {
    case Kind::PosInf: return std::numeric_limits<double>::infinity();
    case Kind::NegInf: return -std::numeric_limits<double>::infinity();
    case Kind::Finite: break;
  }
  return v_;
}

std::string ExtReal::to_string() const {
  if (kind_ == Kind::PosInf) return "inf";
  if (kind_ == Kind::NegInf) return "-inf";
  return format_g9(v_);
}

ExtReal operator-(const ExtReal& a) {
  if (a.is_pos_inf()) return ExtReal::neg_inf();
  if (a.is_neg_inf()) return ExtReal::pos_inf();
  return ExtReal(-a.value());
}

std::string format_g9(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace cornerlab
