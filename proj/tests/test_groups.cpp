// SPDX-License-Identifier: MIT
/**
 * @file test_groups.cpp
 * @brief Tests for group shapes, dimension formulas, involutions and
 *        similitude elements.
 *
 * Fixed-space dimensions are not taken from the formulas on faith: an
 * independent rank oracle builds the matrix of each involution on a basis of
 * its block space and measures dim ker(J - I) directly.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "isocone/groups.hpp"
#include "support/group_random.hpp"

using isocone::Field;
using isocone::FieldElement;
using isocone::GroupKind;
using isocone::GroupShape;
using isocone::HomPair;
using isocone::Matrix;
using isocone::ParabolicShape;
using isocone::SimilitudeElement;

namespace {

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(0, f.size() - 1);
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.set(i, j, f.element_at(dist(rng)));
  }
  return m;
}

// Fixed-space dimension of an involution given as a callable on block data,
// measured as dim ker(op - id) on the flattened coordinate space.
template <typename Apply>
long fixed_dim_oracle(const Field& f, int space_dim, Apply&& to_coords) {
  Matrix op(f, space_dim, space_dim);
  for (int b = 0; b < space_dim; ++b) {
    std::vector<FieldElement> img = to_coords(b);
    REQUIRE(static_cast<int>(img.size()) == space_dim);
    for (int r = 0; r < space_dim; ++r) op.set(r, b, img[static_cast<size_t>(r)]);
  }
  return space_dim - isocone::rank(op - Matrix::identity(f, space_dim));
}

}  // namespace

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(GroupShape(GroupKind::symplectic, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(GroupShape(GroupKind::orthogonal, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GroupShape(GroupKind::unitary, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(ParabolicShape(GroupKind::orthogonal, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(ParabolicShape(GroupKind::symplectic, 5, 1), std::invalid_argument);
  CHECK(ParabolicShape(GroupKind::orthogonal, 4, 2).m == 2);
}

TEST_CASE("borel unipotent dimensions: frozen values") {
  using isocone::borel_unipotent_dim;
  CHECK(borel_unipotent_dim(GroupShape(GroupKind::symplectic, 4, 1)) == 4);
  CHECK(borel_unipotent_dim(GroupShape(GroupKind::symplectic, 8, 1)) == 16);
  CHECK(borel_unipotent_dim(GroupShape(GroupKind::orthogonal, 4, 1)) == 2);
  CHECK(borel_unipotent_dim(GroupShape(GroupKind::orthogonal, 5, 1)) == 4);
  CHECK(borel_unipotent_dim(GroupShape(GroupKind::orthogonal, 7, 1)) == 9);
  CHECK(borel_unipotent_dim(GroupShape(GroupKind::orthogonal, 1, 1)) == 0);
  CHECK(borel_unipotent_dim(GroupShape(GroupKind::unitary, 3, 2)) == 6);
  CHECK(borel_unipotent_dim(GroupShape(GroupKind::unitary, 4, 2)) == 12);
}

TEST_CASE("parabolic dimension table: frozen values") {
  auto d1 = parabolic_dims(ParabolicShape(GroupKind::orthogonal, 4, 2));
  CHECK(d1.dim_center_full == 4);
  CHECK(d1.dim_hom_half == 0);
  CHECK(d1.dim_center_fixed.value() == 1);
  CHECK(d1.dim_hom_fixed.value() == 0);
  CHECK(d1.dim_unipotent_fixed.value() == 1);
  auto d2 = parabolic_dims(ParabolicShape(GroupKind::symplectic, 4, 1));
  CHECK(d2.dim_center_full == 1);
  CHECK(d2.dim_hom_half == 2);
  CHECK(d2.dim_center_fixed.value() == 1);
  CHECK(d2.dim_unipotent_fixed.value() == 3);
  auto d3 = parabolic_dims(ParabolicShape(GroupKind::unitary, 3, 1));
  CHECK(d3.fixed_dims_convention_dependent);
  CHECK(!d3.dim_center_fixed.has_value());
  CHECK(d3.dim_center_full == 1);
  CHECK(d3.dim_unipotent_full == 3);
}

TEST_CASE("unipotent difference identity across parabolic steps") {
  using isocone::borel_unipotent_dim;
  for (int d = 1; d <= 3; ++d) {
    for (GroupKind kind : {GroupKind::symplectic, GroupKind::orthogonal}) {
      for (int n = 0; n <= 24; ++n) {
        if (kind == GroupKind::symplectic && n % 2 == 1) continue;
        for (int r = 0; 2 * r <= n; ++r) {
          if (kind == GroupKind::symplectic && (n - 2 * r) % 2 == 1) continue;
          CAPTURE(group_kind_name(kind));
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(d);
          long lhs = borel_unipotent_dim(GroupShape(kind, n, d)) -
                     borel_unipotent_dim(GroupShape(kind, n - 2 * r, d));
          auto dims = parabolic_dims(ParabolicShape(kind, n, r));
          long rhs =
              static_cast<long>(d) * (static_cast<long>(r) * (r - 1) / 2 +
                                      dims.dim_unipotent_fixed.value());
          CHECK(lhs == rhs);
        }
      }
    }
    // Unitary: with the full (un-halved) unipotent dimension the identity
    // holds exactly for r in {0, 1}, and the residual is d*r(r-1)/2 beyond.
    for (int n = 0; n <= 12; ++n) {
      for (int r = 0; 2 * r <= n; ++r) {
        long lhs = borel_unipotent_dim(GroupShape(GroupKind::unitary, n, d)) -
                   borel_unipotent_dim(GroupShape(GroupKind::unitary, n - 2 * r, d));
        auto dims = parabolic_dims(ParabolicShape(GroupKind::unitary, n, r));
        long rhs = static_cast<long>(d) *
                   (static_cast<long>(r) * (r - 1) / 2 + dims.dim_unipotent_full);
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(d);
        CHECK(lhs - rhs == static_cast<long>(d) * r * (r - 1) / 2);
        if (r <= 1) CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("hom-block involution: involutive, linear, correct fixed dimension") {
  std::mt19937_64 rng(31);
  for (int p : {3, 5}) {
    Field f = Field::prime(p);
    for (GroupKind kind : {GroupKind::symplectic, GroupKind::orthogonal}) {
      for (int n = 0; n <= 8; ++n) {
        if (kind == GroupKind::symplectic && n % 2 == 1) continue;
        for (int m = 0; 2 * m <= n && m <= 4; ++m) {
          if (kind == GroupKind::symplectic && (n - 2 * m) % 2 == 1) continue;
          ParabolicShape shape(kind, n, m);
          const int k = n - 2 * m;
          CAPTURE(p);
          CAPTURE(group_kind_name(kind));
          CAPTURE(n);
          CAPTURE(m);
          for (int trial = 0; trial < 5; ++trial) {
            HomPair v{random_matrix(f, m, k, rng), random_matrix(f, k, m, rng)};
            HomPair w{random_matrix(f, m, k, rng), random_matrix(f, k, m, rng)};
            HomPair jv = involution_j(shape, f, v);
            HomPair jjv = involution_j(shape, f, jv);
            CHECK(jjv.x == v.x);
            CHECK(jjv.y == v.y);
            // Linearity.
            HomPair sum{v.x + w.x, v.y + w.y};
            HomPair jsum = involution_j(shape, f, sum);
            HomPair jw = involution_j(shape, f, w);
            CHECK(jsum.x == jv.x + jw.x);
            CHECK(jsum.y == jv.y + jw.y);
          }
          // Rank oracle for the fixed dimension on the flattened pair space.
          const int space_dim = 2 * m * k;
          auto to_coords = [&](int b) {
            HomPair basis{Matrix(f, m, k), Matrix(f, k, m)};
            if (b < m * k) {
              basis.x.set(b / k, b % k, f.one());
            } else {
              int c = b - m * k;
              basis.y.set(c / m, c % m, f.one());
            }
            HomPair img = involution_j(shape, f, basis);
            std::vector<FieldElement> out;
            for (int i = 0; i < m; ++i) {
              for (int j = 0; j < k; ++j) out.push_back(img.x.at(i, j));
            }
            for (int i = 0; i < k; ++i) {
              for (int j = 0; j < m; ++j) out.push_back(img.y.at(i, j));
            }
            return out;
          };
          long fixed = fixed_dim_oracle(f, space_dim, to_coords);
          CHECK(fixed == parabolic_dims(shape).dim_hom_fixed.value());
        }
      }
    }
  }
}

TEST_CASE("center-block involution: involutive with the correct fixed dimension") {
  std::mt19937_64 rng(37);
  for (int p : {3, 5}) {
    Field f = Field::prime(p);
    for (GroupKind kind : {GroupKind::symplectic, GroupKind::orthogonal}) {
      for (int m = 0; m <= 4; ++m) {
        ParabolicShape shape(kind, 2 * m + (kind == GroupKind::orthogonal ? 1 : 0), m);
        CAPTURE(p);
        CAPTURE(group_kind_name(kind));
        CAPTURE(m);
        for (int trial = 0; trial < 5; ++trial) {
          Matrix z = random_matrix(f, m, m, rng);
          CHECK(involution_j_z(shape, involution_j_z(shape, z)) == z);
        }
        auto to_coords = [&](int b) {
          Matrix basis(f, m, m);
          basis.set(b / m, b % m, f.one());
          Matrix img = involution_j_z(shape, basis);
          std::vector<FieldElement> out;
          for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) out.push_back(img.at(i, j));
          }
          return out;
        };
        long fixed = fixed_dim_oracle(f, m * m, to_coords);
        CHECK(fixed == parabolic_dims(shape).dim_center_fixed.value());
      }
    }
  }
  CHECK_THROWS_AS(
      (void)involution_j_z(ParabolicShape(GroupKind::unitary, 4, 2), Matrix(Field::prime(3), 2, 2)),
      std::invalid_argument);
}

TEST_CASE("similitude form matrices have the expected structure") {
  Field f5 = Field::prime(5);
  for (int size : {2, 4, 6, 8}) {
    for (int m = 0; 2 * m <= size; ++m) {
      if ((size - 2 * m) % 2 == 1) continue;
      CAPTURE(size);
      CAPTURE(m);
      Matrix j = isocone::similitude_form(GroupKind::symplectic, f5, size, m);
      CHECK(j.transpose() == -j);
      CHECK(j * j == -Matrix::identity(f5, size));
      CHECK(!det(j).is_zero());
    }
  }
  CHECK(isocone::similitude_form(GroupKind::symplectic, f5, 4, 0) ==
        isocone::antidiag_signed(f5, 4));
  CHECK(isocone::similitude_form(GroupKind::orthogonal, f5, 5, 1) == isocone::antidiag(f5, 5));
  CHECK_THROWS_AS((void)isocone::similitude_form(GroupKind::symplectic, f5, 5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)isocone::similitude_form(GroupKind::unitary, f5, 4, 0),
                  std::invalid_argument);
}

TEST_CASE("similitude membership and multipliers") {
  std::mt19937_64 rng(41);
  Field f5 = Field::prime(5);
  // Scalar matrices have multiplier c^2.
  for (long long c = 1; c < 5; ++c) {
    auto elem = isocone::similitude(GroupKind::symplectic,
                                    Matrix::identity(f5, 4).scaled(f5.from_int(c)), 0);
    CHECK(elem.lambda == f5.from_int(c * c));
  }
  // The half-block scaler realizes an arbitrary multiplier.
  for (long long mu = 1; mu < 5; ++mu) {
    auto elem = isocone::similitude(
        GroupKind::orthogonal, isocone_test::half_scaler(f5, 6, f5.from_int(mu)), 0);
    CHECK(elem.lambda == f5.from_int(mu));
  }
  // Transvections and reflections have multiplier 1.
  Matrix j = isocone::similitude_form(GroupKind::symplectic, f5, 6, 1);
  for (int trial = 0; trial < 10; ++trial) {
    isocone::Vec v = isocone_test::random_nonzero_vec(f5, 6, rng);
    auto elem =
        isocone::similitude(GroupKind::symplectic, isocone_test::transvection(j, v, f5.one()), 1);
    CHECK(elem.lambda == f5.one());
  }
  // A matrix violating the constant-ratio condition.
  Matrix bad = Matrix::identity(f5, 4);
  bad.set(3, 3, f5.from_int(2));
  CHECK(!isocone::similitude_factor(GroupKind::symplectic, bad, 0).has_value());
  CHECK_THROWS_AS((void)isocone::similitude(GroupKind::symplectic, bad, 0), std::invalid_argument);
  // Singular matrices are rejected.
  CHECK(!isocone::similitude_factor(GroupKind::orthogonal, Matrix(f5, 4, 4), 0).has_value());
}

TEST_CASE("theta: frozen diagonal fixed point") {
  Field f5 = Field::prime(5);
  // diag(a, b, lambda/b, lambda/a) with a=2, b=3, lambda=4 is theta-fixed.
  Matrix psi = Matrix::from_rows(f5, {{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 2}});
  auto elem = isocone::similitude(GroupKind::symplectic, psi, 0);
  CHECK(elem.lambda == f5.from_int(4));
  auto image = isocone::theta(elem);
  CHECK(image.mat == psi);
  CHECK(image.lambda == elem.lambda);
}

TEST_CASE("theta is an involution preserving membership and multiplier") {
  std::mt19937_64 rng(43);
  for (int p : {3, 5}) {
    Field f = Field::prime(p);
    struct Case { GroupKind kind; int size; int m; };
    for (auto [kind, size, m] : {Case{GroupKind::symplectic, 4, 0},
                                 Case{GroupKind::symplectic, 6, 1},
                                 Case{GroupKind::symplectic, 8, 2},
                                 Case{GroupKind::orthogonal, 5, 1},
                                 Case{GroupKind::orthogonal, 6, 0},
                                 Case{GroupKind::orthogonal, 7, 2}}) {
      CAPTURE(p);
      CAPTURE(group_kind_name(kind));
      CAPTURE(size);
      for (int trial = 0; trial < 8; ++trial) {
        Matrix g = isocone_test::random_similitude_matrix(kind, f, size, m, rng);
        auto elem = isocone::similitude(kind, g, m);  // membership asserted here
        auto t1 = isocone::theta(elem);
        CHECK(t1.lambda == elem.lambda);
        auto t2 = isocone::theta(t1);
        CHECK(t2.mat == elem.mat);
        CHECK(t2.lambda == elem.lambda);
      }
    }
  }
}

TEST_CASE("automorphism dimension table and elliptic bound: frozen values") {
  using isocone::aut_dim_table;
  using isocone::ell_bound;
  CHECK(aut_dim_table(GroupKind::symplectic, 2) == 4);
  CHECK(aut_dim_table(GroupKind::orthogonal, 2) == 2);
  CHECK(aut_dim_table(GroupKind::unitary, 1) == 0);
  CHECK(aut_dim_table(GroupKind::symplectic, 0) == 1);
  CHECK(aut_dim_table(GroupKind::orthogonal, 0) == 1);
  CHECK(aut_dim_table(GroupKind::unitary, 0) == 0);
  CHECK(aut_dim_table(GroupKind::orthogonal, 4) == 7);
  CHECK_THROWS_AS((void)aut_dim_table(GroupKind::symplectic, 3), std::invalid_argument);

  CHECK(ell_bound(GroupKind::symplectic, 2) == -4);
  CHECK(ell_bound(GroupKind::orthogonal, 2) == -2);
  CHECK(ell_bound(GroupKind::unitary, 1) == -1);
  CHECK(ell_bound(GroupKind::symplectic, 0) == -1);
  CHECK(ell_bound(GroupKind::orthogonal, 0) == -1);
  CHECK(ell_bound(GroupKind::unitary, 0) == -1);
}
