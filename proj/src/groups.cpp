// SPDX-License-Identifier: MIT
#include "isocone/groups.hpp"

#include <stdexcept>
#include <string>

namespace isocone {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// ceil(a / 4) for possibly negative integer a.
long ceil_div4(long a) { return (a >= 0) ? (a + 3) / 4 : -((-a) / 4); }

}  // namespace

const char* group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::symplectic: return "symplectic";
    case GroupKind::orthogonal: return "orthogonal";
    case GroupKind::unitary: return "unitary";
  }
  return "?";
}

GroupShape::GroupShape(GroupKind kind_, int n_, int d_) : kind(kind_), n(n_), d(d_) {
  require(n >= 0, "group rank parameter n must be >= 0");
  require(d >= 1, "degree multiplier d must be >= 1");
  require(kind != GroupKind::symplectic || n % 2 == 0, "symplectic shapes need even n");
}

long borel_unipotent_dim(const GroupShape& shape) {
  const long n = shape.n;
  const long d = shape.d;
  switch (shape.kind) {
    case GroupKind::symplectic:
      return d * (n * n / 4);
    case GroupKind::orthogonal:
      return d * ceil_div4(n * n - 2 * n);
    case GroupKind::unitary:
      return d * (n * (n - 1) / 2);
  }
  throw std::logic_error("unreachable");
}

ParabolicShape::ParabolicShape(GroupKind kind_, int n_, int m_) : kind(kind_), n(n_), m(m_) {
  require(n >= 0, "group rank parameter n must be >= 0");
  require(m >= 0 && 2 * m <= n, "parabolic shapes need 0 <= 2m <= n");
  require(kind != GroupKind::symplectic || n % 2 == 0, "symplectic shapes need even n");
}

ParabolicDims parabolic_dims(const ParabolicShape& shape) {
  const long m = shape.m;
  const long k = shape.n - 2 * shape.m;
  ParabolicDims out;
  out.dim_center_full = m * m;
  out.dim_hom_half = m * k;
  out.dim_unipotent_full = m * m + 2 * m * k;
  if (shape.kind == GroupKind::unitary) {
    out.fixed_dims_convention_dependent = true;
    return out;
  }
  out.dim_center_fixed =
      shape.kind == GroupKind::symplectic ? m * (m + 1) / 2 : m * (m - 1) / 2;
  out.dim_hom_fixed = m * k;
  out.dim_unipotent_fixed = *out.dim_center_fixed + *out.dim_hom_fixed;
  return out;
}

HomPair involution_j(const ParabolicShape& shape, const Field& f, const HomPair& v) {
  require(shape.kind != GroupKind::unitary,
          "the hom-block involution is convention-dependent for unitary shapes");
  const int m = shape.m;
  const int k = shape.n - 2 * shape.m;
  require(v.x.rows() == m && v.x.cols() == k, "x block must be m x (n-2m)");
  require(v.y.rows() == k && v.y.cols() == m, "y block must be (n-2m) x m");
  require(v.x.field() == f && v.y.field() == f, "hom pair must live over the given field");
  Matrix wm = antidiag(f, m);
  if (shape.kind == GroupKind::symplectic) {
    Matrix wk = antidiag_signed(f, k);
    return HomPair{wm * v.y.transpose() * wk, wk * v.x.transpose() * wm};
  }
  Matrix wk = antidiag(f, k);
  return HomPair{-(wm * v.y.transpose() * wk), -(wk * v.x.transpose() * wm)};
}

Matrix involution_j_z(const ParabolicShape& shape, const Matrix& z) {
  require(shape.kind != GroupKind::unitary,
          "the center-block involution is convention-dependent for unitary shapes");
  require(z.rows() == shape.m && z.cols() == shape.m, "center block must be m x m");
  Matrix wm = antidiag(z.field(), shape.m);
  Matrix img = wm * z.transpose() * wm;
  return shape.kind == GroupKind::symplectic ? img : -img;
}

Matrix similitude_form(GroupKind kind, const Field& f, int size, int m) {
  require(size >= 0 && m >= 0 && 2 * m <= size, "need 0 <= 2m <= size");
  if (kind == GroupKind::orthogonal) return antidiag(f, size);
  require(kind == GroupKind::symplectic,
          "similitude forms are realized for symplectic/orthogonal kinds only");
  require(size % 2 == 0, "symplectic forms need even size");
  const int k = size - 2 * m;
  Matrix j(f, size, size);
  Matrix wm = antidiag(f, m);
  Matrix wk = antidiag_signed(f, k);
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c < m; ++c) {
      j.set(i, size - m + c, wm.at(i, c));
      j.set(size - m + i, c, -wm.at(i, c));
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < k; ++c) j.set(m + i, m + c, wk.at(i, c));
  }
  return j;
}

std::optional<FieldElement> similitude_factor(GroupKind kind, const Matrix& g, int m) {
  require(g.rows() == g.cols(), "similitude candidates must be square");
  const Field& f = g.field();
  Matrix j = similitude_form(kind, f, g.rows(), m);
  Matrix p = g.transpose() * j * g;
  // lambda from the first nonzero entry of J, then verify everywhere.
  std::optional<FieldElement> lambda;
  for (int i = 0; i < j.rows() && !lambda; ++i) {
    for (int c = 0; c < j.cols() && !lambda; ++c) {
      if (!j.at(i, c).is_zero()) lambda = p.at(i, c) / j.at(i, c);
    }
  }
  if (!lambda || lambda->is_zero()) return std::nullopt;
  if (p != j.scaled(*lambda)) return std::nullopt;
  return lambda;
}

SimilitudeElement similitude(GroupKind kind, const Matrix& g, int m) {
  auto lambda = similitude_factor(kind, g, m);
  if (!lambda) {
    throw std::invalid_argument("matrix is not a similitude of the requested form");
  }
  return SimilitudeElement{kind, g.rows(), m, g, *lambda};
}

SimilitudeElement theta(const SimilitudeElement& elem) {
  const Field& f = elem.mat.field();
  Matrix j = similitude_form(elem.kind, f, elem.size, elem.m);
  Matrix image = inverse(elem.mat).transpose().scaled(elem.lambda);
  image = j * image * inverse(j);
  // The image is again a similitude with the same multiplier.
  return similitude(elem.kind, image, elem.m);
}

long aut_dim_table(GroupKind kind, int v2) {
  require(v2 >= 0, "v2 must be >= 0");
  const long v = v2;
  switch (kind) {
    case GroupKind::symplectic:
      require(v2 % 2 == 0, "symplectic aut dimensions need even v2");
      return v * (v + 1) / 2 + 1;
    case GroupKind::orthogonal:
      return v * (v - 1) / 2 + 1;
    case GroupKind::unitary:
      return v * (v - 1) / 2;
  }
  throw std::logic_error("unreachable");
}

long ell_bound(GroupKind kind, int v2) {
  const long correction = kind == GroupKind::unitary ? 0 : 1;
  return -1 - (aut_dim_table(kind, v2) - correction);
}

}  // namespace isocone
