// SPDX-License-Identifier: MIT
/**
 * @file test_field.cpp
 * @brief Exhaustive and frozen-value tests for F_p / F_{p^2} arithmetic.
 *
 * Small fields are cheap enough to test by total enumeration, so the axioms
 * (associativity, distributivity, inverses) are checked on every element
 * rather than sampled.  Frozen constants below were computed once by
 * independent hand/desk calculation and pinned.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "isocone/field.hpp"

using isocone::Field;
using isocone::FieldElement;

TEST_CASE("construction validates the characteristic") {
  CHECK_THROWS_AS((void)Field::prime(2), std::invalid_argument);
  CHECK_THROWS_AS((void)Field::prime(9), std::invalid_argument);
  CHECK_THROWS_AS((void)Field::prime(1), std::invalid_argument);
  CHECK_THROWS_AS((void)Field::prime(101), std::invalid_argument);
  CHECK_THROWS_AS((void)Field::prime(-7), std::invalid_argument);
  CHECK(Field::prime(97).size() == 97);
  CHECK(Field::quadratic(97).size() == 97LL * 97);
}

TEST_CASE("least non-square picks the first quadratic non-residue") {
  // Frozen: squares mod p enumerated by hand.
  CHECK(isocone::least_nonsquare(3) == 2);
  CHECK(isocone::least_nonsquare(5) == 2);
  CHECK(isocone::least_nonsquare(7) == 3);
  CHECK(isocone::least_nonsquare(11) == 2);
  CHECK(isocone::least_nonsquare(13) == 2);
  CHECK(Field::quadratic(3).modulus_nonsquare() == 2);
  CHECK(Field::quadratic(7).modulus_nonsquare() == 3);
}

TEST_CASE("frozen multiplication facts in F_9 = F_3[x]/(x^2-2)") {
  Field f9 = Field::quadratic(3);
  FieldElement x = f9.element(0, 1);
  CHECK(x * x == f9.from_int(2));
  // (1+x)(1+2x) = 1 + 3x + 2x^2 = 1 + 4 = 5 = 2 mod 3.
  CHECK(f9.element(1, 1) * f9.element(1, 2) == f9.from_int(2));
  // (2+x)^2 = 4 + 4x + x^2 = 4 + 4x + 2 = 6 + 4x = 0 + 1x mod 3.
  CHECK(f9.element(2, 1) * f9.element(2, 1) == f9.element(0, 1));
}

TEST_CASE("field axioms hold by exhaustion") {
  for (Field f : {Field::prime(7), Field::quadratic(3)}) {
    CAPTURE(f.str());
    auto elems = f.all_elements();
    for (const auto& a : elems) {
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK(a - a == f.zero());
      CHECK(a + (-a) == f.zero());
      for (const auto& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : elems) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("inverses and Fermat order by exhaustion") {
  for (Field f : {Field::prime(13), Field::quadratic(5)}) {
    CAPTURE(f.str());
    for (const auto& a : f.all_elements()) {
      if (a.is_zero()) {
        CHECK_THROWS_AS((void)a.inverse(), std::domain_error);
        continue;
      }
      CHECK(a * a.inverse() == f.one());
      CHECK(a / a == f.one());
      CHECK(a.pow(f.size() - 1) == f.one());
    }
  }
}

TEST_CASE("square roots are deterministic with the documented tie-break") {
  Field f5 = Field::prime(5);
  // Roots of 4 are {2, 3}; the smaller canonical residue wins.
  CHECK(f5.from_int(4).sqrt_in_field().value() == f5.from_int(2));
  CHECK(f5.from_int(0).sqrt_in_field().value() == f5.zero());
  CHECK(!f5.from_int(2).is_square());
  CHECK(!f5.from_int(2).sqrt_in_field().has_value());

  Field f9 = Field::quadratic(3);
  // Roots of 2 = x^2 are {x, 2x}; lexicographic (a, b) order picks (0, 1).
  CHECK(f9.from_int(2).sqrt_in_field().value() == f9.element(0, 1));
}

TEST_CASE("square counts match the (q-1)/2 rule") {
  for (Field f : {Field::prime(7), Field::quadratic(3), Field::quadratic(5)}) {
    CAPTURE(f.str());
    long long nonzero_squares = 0;
    for (const auto& a : f.all_elements()) {
      if (!a.is_zero() && a.is_square()) ++nonzero_squares;
    }
    CHECK(nonzero_squares == (f.size() - 1) / 2);
  }
}

TEST_CASE("every base-field element becomes a square in the extension") {
  for (int p : {3, 5, 7, 11, 13}) {
    CAPTURE(p);
    Field fp = Field::prime(p);
    for (const auto& a : fp.all_elements()) {
      FieldElement lifted = a.lift();
      CHECK(lifted.is_square());
      FieldElement r = a.sqrt_or_extend();
      if (a.is_square()) {
        // The root already exists downstairs, so we stay there.
        CHECK(r.field().degree() == 1);
        CHECK(r * r == a);
      } else {
        CHECK(r.field().degree() == 2);
        CHECK(r * r == lifted);
      }
    }
  }
}

TEST_CASE("in-field roots are preferred by sqrt_or_extend") {
  Field f5 = Field::prime(5);
  CHECK(f5.from_int(4).sqrt_or_extend() == f5.from_int(2));
  CHECK(f5.from_int(4).sqrt_or_extend().field().degree() == 1);
  FieldElement r = f5.from_int(2).sqrt_or_extend();
  CHECK(r.field().degree() == 2);
  CHECK(r * r == f5.from_int(2).lift());
}

TEST_CASE("mismatched fields never mix silently") {
  Field f3 = Field::prime(3);
  Field f5 = Field::prime(5);
  Field f9 = Field::quadratic(3);
  CHECK_THROWS_AS((void)(f3.one() + f5.one()), std::invalid_argument);
  CHECK_THROWS_AS((void)(f3.one() * f9.one()), std::invalid_argument);
  CHECK_THROWS_AS((void)(f9.one() - f3.one()), std::invalid_argument);
  CHECK(f3.one().lift() + f9.one() == f9.from_int(2));
  CHECK(f3.one() != f9.one());  // comparison is allowed and false
  CHECK_THROWS_AS((void)f9.one().lift(), std::invalid_argument);
}

TEST_CASE("enumeration order round-trips and is lexicographic") {
  Field f49 = Field::quadratic(7);
  long long k = 0;
  std::set<long long> seen;
  for (const auto& e : f49.all_elements()) {
    CHECK(e.index() == k);
    CHECK(f49.element_at(k) == e);
    seen.insert(e.index());
    ++k;
  }
  CHECK(k == 49);
  CHECK(seen.size() == 49);
  CHECK(f49.element_at(7 * 2 + 3) == f49.element(2, 3));
  CHECK_THROWS_AS((void)f49.element_at(49), std::invalid_argument);
}

TEST_CASE("degree-1 fields reject x coefficients") {
  Field f7 = Field::prime(7);
  CHECK_THROWS_AS((void)f7.element(1, 2), std::invalid_argument);
  CHECK(f7.element(9, 0) == f7.from_int(2));
  CHECK(f7.from_int(-1).equals_int(6));
}
