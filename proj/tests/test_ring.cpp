#include <doctest.h>

#include <random>

#include "hermlat/ring.hpp"

using namespace hermlat;

namespace {

const std::vector<std::int64_t> kFields = {1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 19, 23};

// Norm from the explicit binary quadratic form, independent of Field::norm.
Int form_norm(std::int64_t m, const Int& a, const Int& b) {
  if (m % 4 == 3) return a * a + a * b + Int((1 + m) / 4) * b * b;
  return a * a + Int(m) * b * b;
}

std::vector<AlgInt> norm_scan(std::int64_t m, std::int64_t n) {
  std::int64_t r = 1;
  while (r * r <= n) ++r;
  std::vector<AlgInt> out;
  for (std::int64_t a = -3 * r; a <= 3 * r; ++a)
    for (std::int64_t b = -3 * r; b <= 3 * r; ++b)
      if (form_norm(m, a, b) == n) out.push_back(AlgInt(Int(a), Int(b)));
  std::sort(out.begin(), out.end());
  return out;
}

AlgInt random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  return AlgInt(Int(d(rng)), Int(d(rng)));
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("field construction") {
    Field f1 = Field::make(1);
    CHECK(f1.omega_kind() == OmegaKind::Sqrt);
    CHECK(f1.discriminant() == 4);
    Field f3 = Field::make(3);
    CHECK(f3.omega_kind() == OmegaKind::Half);
    CHECK(f3.discriminant() == 3);
    CHECK(Field::make(2).discriminant() == 8);
    CHECK(Field::make(7).omega_norm() == 2);
    CHECK(Field::make(11).omega_norm() == 3);

    auto code_of = [](std::int64_t m) {
      try {
        Field::make(m);
      } catch (const Error& e) {
        return e.code();
      }
      FAIL("no error for m = " << m);
      return ErrorCode::ParseError;
    };
    CHECK(code_of(12) == ErrorCode::NonSquareFree);
    CHECK(code_of(0) == ErrorCode::NonPositive);
    CHECK(code_of(-5) == ErrorCode::NonPositive);
  }

  TEST_CASE("square-free test") {
    for (std::int64_t m = 1; m <= 200; ++m) {
      bool sf = true;
      for (std::int64_t p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) sf = false;
      CHECK(is_square_free(m) == sf);
    }
  }

  TEST_CASE("arithmetic examples") {
    Field f1 = Field::make(1), f7 = Field::make(7), f11 = Field::make(11);
    CHECK(f1.norm(AlgInt(Int(1), Int(1))) == 2);
    CHECK(f7.norm(f7.omega()) == 2);
    CHECK(f11.conj(f11.omega()) == AlgInt(Int(1), Int(-1)));
    // omega^2 = -m or omega - (1 + m) / 4.
    CHECK(f1.mul(f1.omega(), f1.omega()) == AlgInt(-1));
    CHECK(f7.mul(f7.omega(), f7.omega()) == AlgInt(Int(-2), Int(1)));
    CHECK(f7.trace(f7.omega()) == 1);
  }

  TEST_CASE("units") {
    for (auto m : kFields) {
      Field f = Field::make(m);
      std::size_t expected = m == 1 ? 4 : m == 3 ? 6 : 2;
      CHECK(f.units().size() == expected);
    }
    Field f1 = Field::make(1);
    CHECK(f1.units() == std::vector<AlgInt>{AlgInt(Int(-1), Int(0)), AlgInt(Int(0), Int(-1)),
                                            AlgInt(Int(0), Int(1)), AlgInt(Int(1), Int(0))});
    Field f3 = Field::make(3);
    auto u3 = f3.units();
    CHECK(std::find(u3.begin(), u3.end(), AlgInt(Int(1), Int(-1))) != u3.end());
    CHECK(Field::make(5).elements_of_norm(2).empty());
  }

  TEST_CASE("elements_of_norm agrees with a direct scan") {
    for (auto m : kFields) {
      Field f = Field::make(m);
      for (std::int64_t n = 0; n <= 40; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(f.elements_of_norm(n) == norm_scan(m, n));
      }
    }
  }

  TEST_CASE("norm is multiplicative and conjugation is an involutive automorphism") {
    std::mt19937 rng(7);
    for (auto m : kFields) {
      Field f = Field::make(m);
      for (int k = 0; k < 200; ++k) {
        AlgInt x = random_element(rng), y = random_element(rng);
        CHECK(f.norm(f.mul(x, y)) == f.norm(x) * f.norm(y));
        CHECK(f.norm(x) == form_norm(m, x.a, x.b));
        CHECK(f.conj(f.conj(x)) == x);
        CHECK(f.conj(f.mul(x, y)) == f.mul(f.conj(x), f.conj(y)));
        CHECK(f.conj(x + y) == f.conj(x) + f.conj(y));
        AlgInt tr = x + f.conj(x);
        CHECK(tr.is_rational());
        CHECK(tr.a == f.trace(x));
        CHECK((f.norm(x) == 0) == x.is_zero());
        CHECK(f.mul(x, f.conj(x)) == AlgInt(f.norm(x)));
      }
    }
  }

  TEST_CASE("divisibility") {
    Field f1 = Field::make(1), f7 = Field::make(7);
    CHECK(f1.divides(AlgInt(Int(1), Int(1)), AlgInt(2)));
    CHECK(f7.divides(f7.omega(), AlgInt(2)));
    CHECK_FALSE(f7.divides(f7.omega(), AlgInt(1)));
    CHECK_THROWS_AS(f1.divides(AlgInt(0), AlgInt(1)), Error);

    std::mt19937 rng(11);
    for (auto m : kFields) {
      Field f = Field::make(m);
      for (int k = 0; k < 100; ++k) {
        AlgInt d = random_element(rng), q = random_element(rng);
        if (d.is_zero()) continue;
        AlgInt x = f.mul(d, q);
        CHECK(f.divides(d, x));
        CHECK(f.exact_div(x, d) == q);
        CHECK(f.divides(d, x + AlgInt(1)) == (f.norm(d) == 1));
      }
    }
  }

  TEST_CASE("ideal principality") {
    // (2, 1 + sqrt(-5)) is the standard non-principal ideal.
    Field f5 = Field::make(5);
    CHECK_FALSE(f5.is_principal_ideal({AlgInt(2), AlgInt(Int(1), Int(1))}));
    CHECK(f5.ideal_norm({AlgInt(2), AlgInt(Int(1), Int(1))}) == 2);
    CHECK(f5.is_principal_ideal({AlgInt(2), AlgInt(Int(0), Int(2))}));
    CHECK(f5.ideal_contains({AlgInt(2), AlgInt(Int(1), Int(1))}, AlgInt(Int(3), Int(1))));
    CHECK_FALSE(f5.ideal_contains({AlgInt(2), AlgInt(Int(1), Int(1))}, AlgInt(1)));
    // Class number one fields.
    for (std::int64_t m : {1, 2, 3, 7, 11, 19}) {
      Field f = Field::make(m);
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) CHECK(f.is_principal_ideal({AlgInt(3), AlgInt(Int(a), Int(b))}));
    }
  }
}
