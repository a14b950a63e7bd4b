#include "tkk/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "tkk/errors.hpp"

namespace tkk {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 x) { return x <= kMax && x >= -static_cast<i128>(kMax); }

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0)
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 x) {
  const bool neg = x < 0;
  u128 u = uabs(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw ParseError("scalar with zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    assign_big(mpq_class(to_mpz(n), to_mpz(d)));
  }
}

Scalar::Scalar(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  assign_big(std::move(v));
}

Scalar::Scalar(const Scalar& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_)
    big_ = std::make_unique<mpq_class>(*other.big_);
  else
    big_.reset();
  return *this;
}

void Scalar::assign_big(mpq_class value) {
  big_ = std::make_unique<mpq_class>(std::move(value));
  normalize_big();
}

void Scalar::normalize_big() {
  if (!big_) return;
  const mpz_class& n = big_->get_num();
  const mpz_class& d = big_->get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    long nn = n.get_si();
    long dd = d.get_si();
    if (nn != std::numeric_limits<long>::min()) {
      num_ = nn;
      den_ = dd;
      big_.reset();
    }
  }
}

Scalar Scalar::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw ParseError("empty scalar");
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num_part = text;
  std::string_view den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = trim(text.substr(0, slash));
    den_part = trim(text.substr(slash + 1));
    if (!den_part.empty() && (den_part.front() == '-' || den_part.front() == '+'))
      throw ParseError("signed denominator in scalar '" + std::string(text) + "'");
  }
  if (!valid_int(num_part) || !valid_int(den_part))
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  std::string n(num_part);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class num(n, 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
  return Scalar(mpq_class(num, den));
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Scalar::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Scalar::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Scalar Scalar::operator-() const {
  if (big_) return Scalar(mpq_class(-*big_));
  if (num_ == std::numeric_limits<std::int64_t>::min()) return Scalar(mpq_class(-to_mpq()));
  Scalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, rhs.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
        num_ = s;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (n == 0) d = 1;
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign_big(mpq_class(to_mpz(n), to_mpz(d)));
    }
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(num_, rhs.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) {
        num_ = p;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * rhs.num_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (n == 0) d = 1;
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign_big(mpq_class(to_mpz(n), to_mpz(d)));
    }
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DimensionError("division by zero scalar");
  if (!big_ && !rhs.big_) {
    i128 n = static_cast<i128>(num_) * rhs.den_;
    i128 d = static_cast<i128>(den_) * rhs.num_;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (n == 0) d = 1;
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign_big(mpq_class(to_mpz(n), to_mpz(d)));
    }
    return *this;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    std::int64_t p, s;
    if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &s) &&
        s != std::numeric_limits<std::int64_t>::min()) {
      num_ = s;
      return;
    }
  }
  *this += a * b;
}

bool operator==(const Scalar& a, const Scalar& b) {
  // Both sides are canonical, so a big value never equals a small one.
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_)
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tkk
