#include "pairwalk/exact.hpp"

#include <cmath>
#include <numeric>

namespace pairwalk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::InvalidMatrix: return "invalid-matrix";
    case ErrorCode::NumericFailure: return "numeric-failure";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::CertificationUnavailable: return "certification-unavailable";
    case ErrorCode::TooLarge: return "too-large";
    case ErrorCode::Internal: return "internal";
  }
  return "internal";
}

ExactScalar ExactScalar::integer(std::int64_t v) { return rational(v, 1); }

ExactScalar ExactScalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidParameter, "rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  ExactScalar s;
  s.is_rational_ = true;
  s.num_ = g ? num / g : 0;
  s.den_ = g ? den / g : 1;
  return s;
}

ExactScalar ExactScalar::surd(std::int64_t x, std::int64_t y, std::int64_t delta) {
  if (y == 0) throw Error(ErrorCode::InvalidParameter, "surd with y = 0; use rational instead");
  if (delta <= 1) throw Error(ErrorCode::InvalidParameter, "surd needs delta > 1");
  const auto [root, core] = square_free_decompose(delta);
  if (root != 1)
    throw Error(ErrorCode::InvalidParameter, "surd delta must be square-free");
  (void)core;
  ExactScalar s;
  s.is_rational_ = false;
  s.x_ = x;
  s.y_ = y;
  s.delta_ = delta;
  return s;
}

std::int64_t ExactScalar::as_integer() const {
  if (!is_integer()) throw Error(ErrorCode::Internal, "exact value " + str() + " is not an integer");
  return num_;
}

double ExactScalar::value() const {
  if (is_rational_) return static_cast<double>(num_) / static_cast<double>(den_);
  return (static_cast<double>(x_) + static_cast<double>(y_) * std::sqrt(static_cast<double>(delta_))) / 2.0;
}

std::string ExactScalar::str() const {
  if (is_rational_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  const std::string sign = y_ < 0 ? "-" : "+";
  const std::int64_t mag = y_ < 0 ? -y_ : y_;
  return "(" + std::to_string(x_) + sign + std::to_string(mag) + "*sqrt(" +
         std::to_string(delta_) + "))/2";
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_rational_ != b.is_rational_) return false;
  if (a.is_rational_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.x_ == b.x_ && a.y_ == b.y_ && a.delta_ == b.delta_;
}

ExactScalar ExactScalar::operator+(const ExactScalar& other) const {
  if (is_rational_ && other.is_rational_)
    return rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
  if (!is_rational_ && !other.is_rational_) {
    if (delta_ != other.delta_)
      throw Error(ErrorCode::Unsupported, "sum of surds from different fields");
    const std::int64_t y = y_ + other.y_;
    if (y == 0) return rational(x_ + other.x_, 2);
    return surd(x_ + other.x_, y, delta_);
  }
  // rational + surd: representable only when the rational is a half-integer
  const ExactScalar& rat = is_rational_ ? *this : other;
  const ExactScalar& srd = is_rational_ ? other : *this;
  if (rat.den_ > 2)
    throw Error(ErrorCode::Unsupported, "sum not representable as (x+y*sqrt(d))/2");
  const std::int64_t shift = rat.den_ == 1 ? 2 * rat.num_ : rat.num_;
  return surd(srd.x_ + shift, srd.y_, srd.delta_);
}

ExactScalar ExactScalar::operator-(const ExactScalar& other) const {
  if (other.is_rational_) return *this + rational(-other.num_, other.den_);
  return *this + ExactScalar::surd(-other.x_, -other.y_, other.delta_);
}

ExactScalar ExactScalar::operator*(const ExactScalar& other) const {
  if (is_rational_ && other.is_rational_)
    return rational(num_ * other.num_, den_ * other.den_);
  if (!is_rational_ && !other.is_rational_) {
    if (delta_ != other.delta_)
      throw Error(ErrorCode::Unsupported, "product of surds from different fields");
    // ((x1+y1*s)(x2+y2*s))/4 with s = sqrt(delta)
    const std::int64_t rat_part = x_ * other.x_ + y_ * other.y_ * delta_;
    const std::int64_t surd_part = x_ * other.y_ + y_ * other.x_;
    if (surd_part == 0) return rational(rat_part, 4);
    if (rat_part % 2 != 0 || surd_part % 2 != 0)
      throw Error(ErrorCode::Unsupported, "product not representable as (x+y*sqrt(d))/2");
    return surd(rat_part / 2, surd_part / 2, delta_);
  }
  const ExactScalar& rat = is_rational_ ? *this : other;
  const ExactScalar& srd = is_rational_ ? other : *this;
  const std::int64_t px = srd.x_ * rat.num_;
  const std::int64_t py = srd.y_ * rat.num_;
  if (px % rat.den_ != 0 || py % rat.den_ != 0)
    throw Error(ErrorCode::Unsupported, "product not representable as (x+y*sqrt(d))/2");
  const std::int64_t y = py / rat.den_;
  if (y == 0) return rational(0, 1);
  return surd(px / rat.den_, y, srd.delta_);
}

std::pair<std::int64_t, std::int64_t> square_free_decompose(std::int64_t k) {
  if (k <= 0) throw Error(ErrorCode::InvalidParameter, "square_free_decompose needs k >= 1");
  std::int64_t root = 1, core = 1;
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    int exp = 0;
    while (k % p == 0) { k /= p; ++exp; }
    for (int i = 0; i < exp / 2; ++i) root *= p;
    if (exp % 2) core *= p;
  }
  core *= k;  // leftover prime (or 1)
  return {root, core};
}

}  // namespace pairwalk
