// SPDX-License-Identifier: MIT
/**
 * @file test_forms.cpp
 * @brief Structural and counting tests for bilinear spaces.
 *
 * The closed-form isotropic counters are audited against honest enumeration
 * on every split space of dimension <= 6 over F_3 and F_5 (and a family of
 * non-split ones); the counting layers built on top of this module are only
 * trustworthy because these cross-checks pass first.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "isocone/forms.hpp"

using isocone::BigInt;
using isocone::BilinearSpace;
using isocone::Field;
using isocone::FieldElement;
using isocone::FormKind;
using isocone::Matrix;
using isocone::Vec;

namespace {

Matrix diag_matrix(const Field& f, const std::vector<long long>& d) {
  Matrix m(f, static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) {
    m.set(static_cast<int>(i), static_cast<int>(i), f.from_int(d[i]));
  }
  return m;
}

Vec random_vec(const Field& f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(0, f.size() - 1);
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(f.element_at(dist(rng)));
  return v;
}

}  // namespace

TEST_CASE("space construction enforces the structural invariants") {
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS((void)BilinearSpace::symmetric(Matrix::from_rows(f5, {{0, 1}, {2, 0}})),
                  std::invalid_argument);  // not symmetric
  CHECK_THROWS_AS((void)BilinearSpace::symmetric(Matrix::from_rows(f5, {{1, 2}, {2, 4}})),
                  std::invalid_argument);  // degenerate
  CHECK_THROWS_AS((void)BilinearSpace::alternating(Matrix::from_rows(f5, {{0, 1}, {1, 0}})),
                  std::invalid_argument);  // not antisymmetric
  CHECK_THROWS_AS((void)BilinearSpace::split_alternating(f5, 3), std::invalid_argument);
  CHECK_THROWS_AS(
      (void)BilinearSpace::alternating(Matrix::from_rows(f5, {{1, 1}, {4, 1}})),
      std::invalid_argument);  // nonzero diagonal (and 1 = -1 fails anyway)
  CHECK(BilinearSpace::split_symmetric(f5, 4).dim() == 4);
  CHECK(BilinearSpace::split_alternating(f5, 4).kind() == FormKind::alternating);
}

TEST_CASE("pairing is bilinear and has the right symmetry") {
  std::mt19937_64 rng(101);
  Field f7 = Field::prime(7);
  for (BilinearSpace s : {BilinearSpace::split_symmetric(f7, 4),
                          BilinearSpace::split_alternating(f7, 4),
                          BilinearSpace::identity_symmetric(f7, 4)}) {
    CAPTURE(form_kind_name(s.kind()));
    for (int trial = 0; trial < 10; ++trial) {
      Vec u = random_vec(f7, 4, rng);
      Vec v = random_vec(f7, 4, rng);
      Vec w = random_vec(f7, 4, rng);
      FieldElement c = f7.from_int(3);
      CHECK(s.pair(isocone::vec_add(u, isocone::vec_scaled(v, c)), w) ==
            s.pair(u, w) + c * s.pair(v, w));
      if (s.kind() == FormKind::symmetric) {
        CHECK(s.pair(u, v) == s.pair(v, u));
      } else {
        CHECK(s.pair(u, v) == -s.pair(v, u));
        CHECK(s.norm(u).is_zero());
      }
    }
  }
}

TEST_CASE("frozen orthonormalization examples over F_5") {
  Field f5 = Field::prime(5);
  // diag(1, 4): second diagonal norm 4 has the in-field root 2, and
  // normalization divides by it: e_2 / 2 = (0, 3) since 2 * 3 = 1 mod 5.
  auto r1 = gram_schmidt(BilinearSpace::symmetric(diag_matrix(f5, {1, 4})));
  CHECK(!r1.escalated);
  CHECK(r1.basis == Matrix::from_rows(f5, {{1, 0}, {0, 3}}));
  // diag(1, 2): 2 is a non-square mod 5, so the basis escalates to F_25.
  auto r2 = gram_schmidt(BilinearSpace::symmetric(diag_matrix(f5, {1, 2})));
  CHECK(r2.escalated);
  CHECK(r2.basis.field().degree() == 2);
}

TEST_CASE("gram_schmidt output is orthonormal for a zoo of spaces") {
  for (int p : {3, 5, 7}) {
    Field f = Field::prime(p);
    std::vector<BilinearSpace> spaces = {
        BilinearSpace::identity_symmetric(f, 3),
        BilinearSpace::split_symmetric(f, 2),
        BilinearSpace::split_symmetric(f, 4),
        BilinearSpace::symmetric(diag_matrix(f, {1, 2, 1})),
        BilinearSpace::symmetric(Matrix::from_rows(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})),
    };
    for (const auto& s : spaces) {
      CAPTURE(p);
      CAPTURE(s.gram().str());
      auto r = gram_schmidt(s);
      const BilinearSpace checked = r.escalated ? s.lifted() : s;
      Matrix prod = r.basis * checked.gram() * r.basis.transpose();
      CHECK(prod == Matrix::identity(checked.field(), s.dim()));
    }
  }
}

TEST_CASE("identity Gram is already orthonormal and never escalates") {
  Field f7 = Field::prime(7);
  auto r = gram_schmidt(BilinearSpace::identity_symmetric(f7, 5));
  CHECK(!r.escalated);
  CHECK(r.basis == Matrix::identity(f7, 5));
  auto frame = orthonormal_frame(BilinearSpace::identity_symmetric(f7, 5), 2);
  CHECK(frame.basis == Matrix::from_rows(f7, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}));
}

TEST_CASE("witt decomposition certifies its basis pairings") {
  for (int p : {3, 5}) {
    Field f = Field::prime(p);
    std::vector<BilinearSpace> spaces;
    for (int h : {2, 4, 6}) {
      spaces.push_back(BilinearSpace::split_symmetric(f, h));
      spaces.push_back(BilinearSpace::split_alternating(f, h));
    }
    for (int h : {1, 2, 3, 4, 5}) spaces.push_back(BilinearSpace::identity_symmetric(f, h));
    spaces.push_back(BilinearSpace::symmetric(diag_matrix(f, {1, 2})));
    spaces.push_back(BilinearSpace::symmetric(diag_matrix(f, {1, 1, 2, 2})));
    for (const auto& s : spaces) {
      CAPTURE(p);
      CAPTURE(form_kind_name(s.kind()));
      CAPTURE(s.gram().str());
      auto wd = witt_decompose(s);
      CHECK(2 * wd.witt_index + wd.anisotropic_dim == s.dim());
      // Hyperbolic pairings: pair(e_i, f_i) = 1, everything else zero.
      for (int i = 0; i < 2 * wd.witt_index; ++i) {
        for (int j = i; j < 2 * wd.witt_index; ++j) {
          FieldElement want = (j == i + 1 && i % 2 == 0) ? f.one() : f.zero();
          CHECK(s.pair(wd.hyperbolic_rows.row_copy(i), wd.hyperbolic_rows.row_copy(j)) == want);
        }
        for (int j = 0; j < wd.anisotropic_dim; ++j) {
          CHECK(s.pair(wd.hyperbolic_rows.row_copy(i), wd.anisotropic_rows.row_copy(j)).is_zero());
        }
      }
      // The full row collection is a basis.
      Matrix all(f, s.dim(), s.dim());
      for (int i = 0; i < 2 * wd.witt_index; ++i) all.set_row(i, wd.hyperbolic_rows.row_copy(i));
      for (int j = 0; j < wd.anisotropic_dim; ++j) {
        all.set_row(2 * wd.witt_index + j, wd.anisotropic_rows.row_copy(j));
      }
      CHECK(!det(all).is_zero());
      // Anisotropic kernel has no nonzero isotropic vector (exhaustive).
      if (wd.anisotropic_dim > 0) {
        Matrix sg = wd.anisotropic_rows * s.gram() * wd.anisotropic_rows.transpose();
        auto aniso = BilinearSpace::symmetric(sg);
        CHECK(isotropic_vector_count_brute(aniso) == 1);
      }
    }
  }
}

TEST_CASE("frozen witt indices") {
  Field f3 = Field::prime(3);
  Field f5 = Field::prime(5);
  // x^2 + y^2 over F_3: -1 is a non-square, anisotropic.
  CHECK(witt_index(BilinearSpace::identity_symmetric(f3, 2)) == 0);
  // Same form over F_5: -1 = 4 = 2^2, split.
  CHECK(witt_index(BilinearSpace::identity_symmetric(f5, 2)) == 1);
  CHECK(witt_index(BilinearSpace::identity_symmetric(f3, 3)) == 1);
  CHECK(witt_index(BilinearSpace::identity_symmetric(f3, 4)) == 2);
  CHECK(witt_index(BilinearSpace::split_symmetric(f3, 6)) == 3);
  CHECK(witt_index(BilinearSpace::split_alternating(f5, 6)) == 3);
  // x^2 + 2y^2: -2 = 1 is a square mod 3 (split), while -2 = 3 is a
  // non-square mod 5 (anisotropic).
  CHECK(witt_index(BilinearSpace::symmetric(diag_matrix(f3, {1, 2}))) == 1);
  CHECK(witt_index(BilinearSpace::symmetric(diag_matrix(f5, {1, 2}))) == 0);
}

TEST_CASE("hyperbolic basis exists exactly for split spaces") {
  Field f3 = Field::prime(3);
  Matrix hb = hyperbolic_basis(BilinearSpace::split_symmetric(f3, 4));
  CHECK(hb.rows() == 4);
  CHECK_THROWS_AS((void)hyperbolic_basis(BilinearSpace::identity_symmetric(f3, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)hyperbolic_basis(BilinearSpace::identity_symmetric(f3, 3)),
                  std::invalid_argument);
}

TEST_CASE("find_isotropic is honest in both directions") {
  Field f3 = Field::prime(3);
  Field f5 = Field::prime(5);
  for (auto [space, expect] :
       std::vector<std::pair<BilinearSpace, bool>>{
           {BilinearSpace::identity_symmetric(f3, 1), false},
           {BilinearSpace::identity_symmetric(f3, 2), false},
           {BilinearSpace::identity_symmetric(f5, 2), true},
           {BilinearSpace::identity_symmetric(f3, 3), true},
           {BilinearSpace::split_symmetric(f3, 2), true},
           {BilinearSpace::split_alternating(f3, 2), true},
           {BilinearSpace::symmetric(diag_matrix(f5, {1, 2})), false},
       }) {
    CAPTURE(space.gram().str());
    auto v = find_isotropic(space);
    CHECK(v.has_value() == expect);
    if (v) {
      CHECK(!isocone::is_zero_vec(*v));
      CHECK(space.norm(*v).is_zero());
    }
  }
}

// The mandatory audit: closed-form counts must equal honest enumeration on
// split spaces of dimension <= 6 over F_3 and F_5 before the cone module may
// rely on them.
TEST_CASE("isotropic vector counts: brute force equals closed form") {
  for (int p : {3, 5}) {
    Field f = Field::prime(p);
    std::vector<BilinearSpace> spaces;
    for (int h = 2; h <= 6; ++h) spaces.push_back(BilinearSpace::split_symmetric(f, h));
    for (int h : {2, 4, 6}) spaces.push_back(BilinearSpace::split_alternating(f, h));
    for (int h = 1; h <= 6; ++h) spaces.push_back(BilinearSpace::identity_symmetric(f, h));
    spaces.push_back(BilinearSpace::symmetric(diag_matrix(f, {1, 2})));
    spaces.push_back(BilinearSpace::symmetric(diag_matrix(f, {1, 1, 1, 2})));
    for (const auto& s : spaces) {
      CAPTURE(p);
      CAPTURE(form_kind_name(s.kind()));
      CAPTURE(s.gram().str());
      CHECK(isotropic_vector_count(s) == isotropic_vector_count_brute(s));
    }
  }
}

TEST_CASE("frozen isotropic vector counts") {
  CHECK(isotropic_vector_count(BilinearSpace::split_symmetric(Field::prime(5), 4)) == 145);
  CHECK(isotropic_vector_count(BilinearSpace::split_symmetric(Field::prime(3), 2)) == 5);
  CHECK(isotropic_vector_count(BilinearSpace::split_alternating(Field::prime(3), 4)) == 81);
  CHECK(isotropic_vector_count(BilinearSpace::identity_symmetric(Field::prime(3), 2)) == 1);
}

TEST_CASE("isotropic subspace counts: brute force equals closed form") {
  for (int p : {3, 5}) {
    Field f = Field::prime(p);
    for (int h = 2; h <= 6; ++h) {
      std::vector<BilinearSpace> spaces = {BilinearSpace::split_symmetric(f, h),
                                           BilinearSpace::identity_symmetric(f, h)};
      if (h % 2 == 0) spaces.push_back(BilinearSpace::split_alternating(f, h));
      for (const auto& s : spaces) {
        for (int k = 0; k <= h / 2 + 1 && k <= h; ++k) {
          CAPTURE(p);
          CAPTURE(h);
          CAPTURE(k);
          CAPTURE(form_kind_name(s.kind()));
          CAPTURE(s.gram().str());
          CHECK(isotropic_subspace_count(s, k) == isotropic_subspace_count_brute(s, k));
        }
      }
    }
  }
}

TEST_CASE("frozen isotropic subspace counts") {
  Field f3 = Field::prime(3);
  Field f5 = Field::prime(5);
  auto split4_q3 = BilinearSpace::split_symmetric(f3, 4);
  CHECK(isotropic_subspace_count(split4_q3, 1) == 16);
  CHECK(isotropic_subspace_count(split4_q3, 2) == 8);
  auto split4_q5 = BilinearSpace::split_symmetric(f5, 4);
  CHECK(isotropic_subspace_count(split4_q5, 1) == 36);
  CHECK(isotropic_subspace_count(split4_q5, 2) == 12);
  // Alternating h = 4 over F_3: every line is isotropic; 40 Lagrangian planes.
  auto alt4_q3 = BilinearSpace::split_alternating(f3, 4);
  CHECK(isotropic_subspace_count(alt4_q3, 1) == 40);
  CHECK(isotropic_subspace_count(alt4_q3, 2) == 40);
  // Beyond the Witt index the count vanishes instead of erroring.
  CHECK(isotropic_subspace_count(BilinearSpace::split_symmetric(f3, 2), 2) == 0);
  CHECK(isotropic_subspace_count(BilinearSpace::identity_symmetric(f3, 2), 1) == 0);
}

TEST_CASE("gaussian binomial: frozen values, symmetry, and enumeration oracle") {
  CHECK(isocone::gaussian_binomial(4, 2, 3) == 130);
  CHECK(isocone::gaussian_binomial(6, 3, 5) == 2558556);
  CHECK(isocone::gaussian_binomial(3, 5, 7) == 0);
  CHECK(isocone::gaussian_binomial(5, 0, 3) == 1);
  for (int h = 1; h <= 6; ++h) {
    for (int k = 0; k <= h; ++k) {
      CHECK(isocone::gaussian_binomial(h, k, 3) == isocone::gaussian_binomial(h, h - k, 3));
    }
  }
  // In an alternating space every line is isotropic, so the brute subspace
  // counter at k = 1 doubles as a coverage test of the subspace enumerator:
  // it must visit exactly (q^h - 1)/(q - 1) lines.
  for (int p : {3, 5}) {
    for (int h : {2, 4, 6}) {
      Field f = Field::prime(p);
      auto s = BilinearSpace::split_alternating(f, h);
      CAPTURE(p);
      CAPTURE(h);
      CHECK(isotropic_subspace_count_brute(s, 1) == isocone::gaussian_binomial(h, 1, p));
    }
  }
}

TEST_CASE("iso-grassmannian dimensions: frozen values and degree oracle") {
  using isocone::iso_grassmannian_dim;
  CHECK(iso_grassmannian_dim(FormKind::symmetric, 4, 2) == 1);
  CHECK(iso_grassmannian_dim(FormKind::alternating, 4, 2) == 3);
  CHECK(iso_grassmannian_dim(FormKind::symmetric, 6, 3) == 3);
  CHECK(iso_grassmannian_dim(FormKind::alternating, 6, 3) == 6);
  CHECK(iso_grassmannian_dim(FormKind::symmetric, 2, 1) == 0);
  CHECK_THROWS_AS((void)iso_grassmannian_dim(FormKind::symmetric, 4, 3), std::invalid_argument);
  // Degree oracle: the subspace count, as q grows, is dominated by q^dim.
  // Compare counts at q = 3, 5 against the predicted polynomial degree by
  // checking count(q) lies between q^dim and (4q)^dim.
  for (int h : {4, 6}) {
    for (int k = 1; 2 * k <= h; ++k) {
      for (int p : {3, 5}) {
        for (FormKind kind : {FormKind::symmetric, FormKind::alternating}) {
          if (kind == FormKind::alternating && h % 2 == 1) continue;
          Field f = Field::prime(p);
          BilinearSpace s = kind == FormKind::symmetric ? BilinearSpace::split_symmetric(f, h)
                                                        : BilinearSpace::split_alternating(f, h);
          long d = iso_grassmannian_dim(kind, h, k);
          BigInt count = isotropic_subspace_count(s, k);
          CAPTURE(h);
          CAPTURE(k);
          CAPTURE(p);
          CAPTURE(form_kind_name(kind));
          CHECK(count >= isocone::big_pow(p, d));
          CHECK(count < isocone::big_pow(4 * p, d == 0 ? 1 : d));
        }
      }
    }
  }
}

TEST_CASE("budget guard refuses oversized enumerations") {
  Field f97 = Field::prime(97);
  auto s = BilinearSpace::split_symmetric(f97, 4);
  CHECK_THROWS_AS((void)isotropic_vector_count_brute(s), std::invalid_argument);
  CHECK_THROWS_AS((void)isotropic_subspace_count_brute(s, 2), std::invalid_argument);
}

TEST_CASE("lifted spaces pair consistently with lifted vectors") {
  Field f3 = Field::prime(3);
  auto s = BilinearSpace::split_symmetric(f3, 4);
  auto sl = s.lifted();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Vec u = random_vec(f3, 4, rng);
    Vec v = random_vec(f3, 4, rng);
    CHECK(sl.pair(isocone::lift_vec(u), isocone::lift_vec(v)) == s.pair(u, v).lift());
  }
}
