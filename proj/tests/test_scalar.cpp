#include <catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "tkk/errors.hpp"
#include "tkk/scalar.hpp"

using tkk::Scalar;

TEST_CASE("parse and print") {
  CHECK(Scalar::parse("3").str() == "3");
  CHECK(Scalar::parse("-4/6").str() == "-2/3");
  CHECK(Scalar::parse("10/5").str() == "2");
  CHECK(Scalar::parse("0/7").str() == "0");
  CHECK_THROWS_AS(Scalar::parse("1/0"), tkk::ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/"), tkk::ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), tkk::ParseError);
  CHECK_THROWS_AS(Scalar::parse("2x"), tkk::ParseError);
  CHECK(Scalar::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
}

TEST_CASE("normal form") {
  Scalar a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(Scalar(0, -5).is_zero());
  CHECK(Scalar(4, 2).is_integer());
  CHECK(Scalar(-1, 3).sign() == -1);
  CHECK_THROWS(Scalar(1, 0));
}

mpz_class Z(long long v) { return mpz_class(static_cast<long>(v)); }

TEST_CASE("overflow spills to big and shrinks back") {
  const long long big = std::numeric_limits<long long>::max();
  Scalar x(big);
  Scalar y = x * x;
  CHECK_FALSE(y.is_small());
  CHECK(y.to_mpq() == mpq_class(Z(big) * Z(big)));
  Scalar z = y / x;
  CHECK(z == x);
  CHECK(z.is_small());
  Scalar w = Scalar(std::numeric_limits<long long>::min());
  CHECK((-w).to_mpq() == -mpq_class(Z(std::numeric_limits<long long>::min())));
}

TEST_CASE("arithmetic agrees with GMP on random operands") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> small(-50, 50);
  std::uniform_int_distribution<long long> large(std::numeric_limits<long long>::min() / 2,
                                                 std::numeric_limits<long long>::max() / 2);
  for (int trial = 0; trial < 2000; ++trial) {
    auto pick = [&] { return trial % 3 == 0 ? large(rng) : small(rng); };
    long long an = pick(), ad = pick(), bn = pick(), bd = pick();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 3;
    Scalar a(an, ad), b(bn, bd);
    mpq_class qa{Z(an), Z(ad)}, qb{Z(bn), Z(bd)};
    qa.canonicalize();
    qb.canonicalize();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (qb != 0) CHECK((a / b).to_mpq() == qa / qb);
    Scalar acc = a;
    acc.add_product(a, b);
    CHECK(acc.to_mpq() == qa + qa * qb);
    CHECK((a < b) == (qa < qb));
    CHECK((a == b) == (qa == qb));
    // every result is reduced with a positive denominator
    mpq_class r = (a * b + a).to_mpq();
    mpq_class canon = r;
    canon.canonicalize();
    CHECK(r == canon);
    CHECK(sgn(r.get_den()) > 0);
  }
}

TEST_CASE("division by zero throws") { CHECK_THROWS(Scalar(1) / Scalar(0)); }
