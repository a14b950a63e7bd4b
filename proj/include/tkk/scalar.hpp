#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tkk {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are kept
/// inline; anything larger spills into a GMP rational. Every value is kept
/// reduced with a positive denominator, whichever representation holds it.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long num, long long den);
  explicit Scalar(const mpq_class& value);

  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  /// Parses "p", "-p" or "p/q". Rejects zero denominators and trailing junk.
  static Scalar parse(std::string_view text);

  /// "p" for integers, otherwise "p/q".
  std::string str() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  /// this += a * b, without a temporary on the fast path.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  void assign_big(mpq_class value);
  void normalize_big();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace tkk
