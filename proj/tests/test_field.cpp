#include <doctest.h>

#include "support.hpp"

#include <gsf/field.hpp>

#include <set>

using namespace gsf;

TEST_CASE("descriptors parse and round-trip") {
  CHECK(Field::parse("q") == Field::rationals());
  CHECK(Field::parse("gf(7)") == Field::prime(7));
  CHECK(Field::parse("gf(7)").descriptor() == "gf(7)");
  const Field f4 = test::gf4();
  CHECK(f4.kind() == FieldKind::extension);
  CHECK(f4.characteristic() == 2);
  CHECK(f4.degree() == 2);
  CHECK(*f4.order() == 4);
  CHECK(Field::parse(f4.descriptor()) == f4);
  CHECK_FALSE(Field::rationals().order().has_value());
  CHECK(Field::rationals().characteristic() == 0);
}

TEST_CASE("bad descriptors are rejected") {
  for (const char* d : {"", "r", "gf(4)", "gf(1)", "gf(2,2;1,0,1)", "gf(2,2;1,1)", "gf(2,5;1,0,1,0,0,1)",
                        "gf(101,2;2,0,1)", "gf(2,2;1,1,0)", "gf(7", "gf(x)"})
    CHECK_THROWS_AS(Field::parse(d), InputError);
}

TEST_CASE("prime field arithmetic matches integer arithmetic mod p") {
  const std::uint32_t p = 97;
  const Field f = Field::prime(p);
  Rng rng(1);
  for (int k = 0; k < 1000; ++k) {
    const auto a = uniform_below(rng, p), b = uniform_below(rng, p);
    const Scalar x = f.from_int(static_cast<long long>(a)), y = f.from_int(static_cast<long long>(b));
    CHECK((x + y).residue() == (a + b) % p);
    CHECK((x * y).residue() == (a * b) % p);
    CHECK((x - y).residue() == (a + p - b) % p);
    if (b != 0) CHECK(((x / y) * y) == x);
  }
  CHECK(f.from_int(-1).residue() == p - 1);
}

TEST_CASE("field axioms on 1000 random pairs") {
  for (const Field& f : {Field::rationals(), Field::prime(11), Field::prime(2), test::gf4(),
                         Field::parse("gf(3,2;1,0,1)"), Field::parse("gf(5,3;2,4,0,1)")}) {
    CAPTURE(f.descriptor());
    Rng rng(7);
    for (int k = 0; k < 1000; ++k) {
      const Scalar a = f.random(rng), b = f.random(rng), c = f.random(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("GF(4) inverses by exhaustive search") {
  const Field f = test::gf4();
  std::vector<Scalar> all;
  for (unsigned c0 = 0; c0 < 2; ++c0)
    for (unsigned c1 = 0; c1 < 2; ++c1) all.push_back(test::gf4_elem(c0, c1));
  for (const Scalar& a : all) {
    if (a.is_zero()) continue;
    int found = 0;
    for (const Scalar& b : all)
      if ((a * b).is_one()) {
        ++found;
        CHECK(a.inverse() == b);
      }
    CHECK(found == 1);
  }
  // ζ² = ζ + 1 and ζ⁻¹ = ζ²
  const Scalar z = test::gf4_elem(0, 1);
  CHECK(z * z == test::gf4_elem(1, 1));
  CHECK(z.inverse() == z * z);
  (void)f;
}

TEST_CASE("nonzero elements satisfy a^(q-1) = 1") {
  for (const char* d : {"gf(2,2;1,1,1)", "gf(3,2;1,0,1)", "gf(2,3;1,1,0,1)"}) {
    const Field f = Field::parse(d);
    const auto q = *f.order();
    std::set<std::string> seen;
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
      const Scalar a = f.random(rng);
      seen.insert(a.to_string());
      if (a.is_zero()) continue;
      Scalar pw = f.one();
      for (std::uint64_t e = 0; e + 1 < q; ++e) pw *= a;
      CHECK(pw.is_one());
    }
    CHECK(seen.size() == q);
  }
}

TEST_CASE("rationals stay canonical") {
  const Field f = Field::rationals();
  CHECK(f.parse_scalar("2/4") == f.parse_scalar("1/2"));
  CHECK(f.parse_scalar("-6/3").to_string() == "-2");
  CHECK(f.parse_scalar("3/-6").to_string() == "-1/2");
  CHECK_THROWS_AS(f.parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(f.parse_scalar("abc"), InputError);
  CHECK_THROWS_AS(f.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(f.one() / f.zero(), DivisionByZero);
}

TEST_CASE("scalar text forms") {
  CHECK(Field::prime(7).parse_scalar("10").residue() == 3);
  CHECK(Field::prime(7).parse_scalar("-1").residue() == 6);
  const Scalar z = test::gf4().parse_scalar("0:1");
  CHECK(z.coeffs()[1] == 1);
  CHECK(test::gf4().parse_scalar(z.to_string()) == z);
  CHECK_THROWS_AS(test::gf4().parse_scalar("0:1:1"), InputError);
}

TEST_CASE("mixing fields throws") {
  CHECK_THROWS_AS(Field::prime(5).one() + Field::prime(7).one(), FieldMismatch);
  CHECK_THROWS_AS(Field::rationals().one() * Field::prime(7).one(), FieldMismatch);
}

TEST_CASE("rng stream is reproducible") {
  Rng a(99), b(99);
  for (int k = 0; k < 100; ++k) CHECK(uniform_below(a, 1000) == uniform_below(b, 1000));
  Rng c(5);
  for (int k = 0; k < 1000; ++k) CHECK(uniform_below(c, 7) < 7);
}
