#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "pairwalk/types.hpp"

namespace pairwalk {

/// Exact value of a Laplacian eigenvalue at desk scale: either a rational
/// p/q in lowest terms, or a quadratic surd (x + y*sqrt(delta))/2 with
/// integer x, nonzero integer y and square-free delta > 1.
class ExactScalar {
public:
  static ExactScalar integer(std::int64_t v);
  static ExactScalar rational(std::int64_t num, std::int64_t den);
  static ExactScalar surd(std::int64_t x, std::int64_t y, std::int64_t delta);

  bool is_rational() const { return is_rational_; }
  bool is_integer() const { return is_rational_ && den_ == 1; }

  std::int64_t as_integer() const;
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t surd_x() const { return x_; }
  std::int64_t surd_y() const { return y_; }
  std::int64_t surd_delta() const { return delta_; }

  double value() const;
  std::string str() const;

  ExactScalar operator+(const ExactScalar& other) const;
  ExactScalar operator-(const ExactScalar& other) const;
  ExactScalar operator*(const ExactScalar& other) const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b);
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Strict ordering by numeric value (exact values that compare equal
  /// numerically are equal exactly at the scales this library handles).
  bool less_value(const ExactScalar& other) const { return value() < other.value(); }

private:
  ExactScalar() = default;

  bool is_rational_ = true;
  std::int64_t num_ = 0, den_ = 1;          // rational state
  std::int64_t x_ = 0, y_ = 0, delta_ = 1;  // surd state
};

/// Writes k = x^2 * delta with delta square-free; trial division, which is
/// plenty for the small integers arising from (r+2)^2 - 4*theta.
std::pair<std::int64_t, std::int64_t> square_free_decompose(std::int64_t k);

}  // namespace pairwalk
