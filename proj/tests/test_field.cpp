#include "doctest.h"

#include <random>

#include "socle/field.hpp"

using namespace socle;

TEST_CASE("rational arithmetic is exact and canonical") {
  const Field q = Field::rationals();
  CHECK((Scalar::of_ratio(q, 1, 2) + Scalar::of_ratio(q, 1, 3)).str() == "5/6");
  CHECK(Scalar::of_ratio(q, -2, -4).str() == "1/2");
  CHECK(Scalar::of_ratio(q, 2, -4).str() == "-1/2");
  CHECK(Scalar::of_int(q, -7).str() == "-7");
  CHECK((Scalar::of_int(q, 3) * Scalar::of_ratio(q, 1, 3)).is_one());
}

TEST_CASE("prime field arithmetic") {
  const Field g7 = Field::prime(7);
  CHECK(Scalar::of_int(g7, 5).inv() == Scalar::of_int(g7, 3));
  CHECK((Scalar::of_int(g7, 5) * Scalar::of_int(g7, 3)).is_one());
  CHECK(Scalar::of_int(g7, -1) == Scalar::of_int(g7, 6));
  CHECK_THROWS_AS(Scalar::of_int(g7, 0).inv(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::of_int(g7, 1) / Scalar::of_int(g7, 0), DivisionByZero);
}

TEST_CASE("modulus must be prime, checked deterministically") {
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(32003));
  CHECK_NOTHROW(Field::prime((1ull << 61) - 1));  // Mersenne prime
  CHECK_THROWS(Field::prime(1));
  CHECK_THROWS(Field::prime(32004));
  CHECK_THROWS(Field::prime(1ull << 62));
  CHECK_THROWS(Field::prime(3215031751ull));  // strong pseudoprime to small bases
}

TEST_CASE("mixed-field operations throw") {
  const Field q = Field::rationals();
  const Field g = Field::prime(7);
  CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(g), FieldMismatch);
  CHECK_THROWS_AS(Scalar::one(Field::prime(5)) * Scalar::one(g), FieldMismatch);
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(32003)}) {
    for (int it = 0; it < 200; ++it) {
      auto rand_scalar = [&]() {
        const long long n = static_cast<long long>(rng() % 2001) - 1000;
        const long long d = 1 + static_cast<long long>(rng() % 999);
        return f.kind() == FieldKind::Rationals ? Scalar::of_ratio(f, n, d) : Scalar::of_int(f, n);
      };
      const Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
      CHECK(Scalar::parse(f, a.str()) == a);
    }
  }
}

TEST_CASE("field spec parsing") {
  CHECK(Field::parse("q") == Field::rationals());
  CHECK(Field::parse("gf:32003") == Field::prime(32003));
  CHECK_THROWS(Field::parse("gf:32004"));
  CHECK_THROWS(Field::parse("float"));
}
