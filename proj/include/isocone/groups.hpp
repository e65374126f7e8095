// SPDX-License-Identifier: MIT
/**
 * @file groups.hpp
 * @brief Classical-group bookkeeping: shapes, parabolic dimension formulas,
 *        block involutions, and similitude elements.
 *
 * The combinatorial layer (GroupShape, ParabolicShape, the dimension
 * formulas) is pure integer arithmetic and feeds the inequality ledgers.
 * The matrix layer realizes the standard maximal-parabolic presentation with
 * block sizes (m, n-2m, m): the unipotent radical has a hom block of pairs
 * (x, y) and a center block z, and the duality involution j acts on those
 * blocks through the antidiagonal matrices.  j is dressed with w_m on both
 * sides — this is the form the group action actually induces, and it is an
 * involution (j o j = identity), which the raw transpose-swap would not be.
 *
 * Similitude elements carry their multiplier lambda exactly; theta is the
 * twisted-conjugation involution psi -> lambda * J psi^{-t} J^{-1}, which
 * preserves membership and lambda and squares to the identity because
 * J J^t = I for both of the matrix kinds realized here.
 */
#pragma once

#include <optional>

#include "isocone/forms.hpp"
#include "isocone/linalg.hpp"

namespace isocone {

enum class GroupKind { symplectic, orthogonal, unitary };

[[nodiscard]] const char* group_kind_name(GroupKind k);

/**
 * @brief A classical group datum: kind, rank parameter n, and the degree
 *        multiplier d of the coefficient field over the base (1 for split
 *        symplectic/orthogonal, 2 for the quadratic-extension unitary
 *        presentation; the sweeps also probe other small d).
 *
 * Validation: n >= 0, d >= 1, and symplectic kinds need n even.
 */
struct GroupShape {
  GroupKind kind;
  int n;
  int d;

  GroupShape(GroupKind kind_, int n_, int d_);
};

/// Dimension of the unipotent radical of a Borel subgroup, scaled by d:
/// symplectic d*n^2/4, orthogonal d*ceil(n^2/4 - n/2), unitary d*n(n-1)/2.
[[nodiscard]] long borel_unipotent_dim(const GroupShape& shape);

/**
 * @brief Maximal-parabolic shape with block sizes (m, n-2m, m).
 *
 * Validation: 0 <= 2m <= n, plus the GroupShape rules (without d, which the
 * dimension formulas apply at their use sites).
 */
struct ParabolicShape {
  GroupKind kind;
  int n;
  int m;

  ParabolicShape(GroupKind kind_, int n_, int m_);
};

struct ParabolicDims {
  long dim_center_full = 0;   ///< full center block: m^2
  long dim_hom_half = 0;      ///< one wing of the hom block: m(n-2m)
  /// Fixed space of the involution on the center block:
  /// m(m+1)/2 symplectic, m(m-1)/2 orthogonal; absent for unitary
  /// (convention-dependent there).
  std::optional<long> dim_center_fixed;
  /// Fixed space of the involution on the hom block: m(n-2m); absent for
  /// unitary.
  std::optional<long> dim_hom_fixed;
  /// dim_center_fixed + dim_hom_fixed when both are present.
  std::optional<long> dim_unipotent_fixed;
  /// Full unipotent radical m^2 + 2m(n-2m); always defined, and the value
  /// the unitary bookkeeping uses in place of the fixed dimension.
  long dim_unipotent_full = 0;
  bool fixed_dims_convention_dependent = false;
};

[[nodiscard]] ParabolicDims parabolic_dims(const ParabolicShape& shape);

/**
 * @brief A point of the hom block: x is m x (n-2m), y is (n-2m) x m.
 */
struct HomPair {
  Matrix x;
  Matrix y;
};

/**
 * @brief The duality involution on the hom block.
 *
 * symplectic: (x, y) -> ( w_m y^t w'_{n-2m},  w'_{n-2m} x^t w_m )
 * orthogonal: (x, y) -> (-w_m y^t w_{n-2m},  -w_{n-2m} x^t w_m )
 *
 * Defined for symplectic/orthogonal shapes over any supported field; the
 * unitary case is convention-dependent and rejected.  j o j = identity, and
 * the fixed space has dimension m(n-2m) (y is determined by x).
 */
[[nodiscard]] HomPair involution_j(const ParabolicShape& shape, const Field& f, const HomPair& v);

/**
 * @brief The duality involution on the center block (z is m x m):
 *        symplectic z -> w_m z^t w_m, orthogonal z -> -w_m z^t w_m.
 *
 * Fixed spaces: w_m z symmetric (dim m(m+1)/2) resp. antisymmetric
 * (dim m(m-1)/2).
 */
[[nodiscard]] Matrix involution_j_z(const ParabolicShape& shape, const Matrix& z);

/**
 * @brief The invariant-form matrix of the (kind, size, m) presentation.
 *
 * symplectic: [[0, 0, w_m], [0, w'_{size-2m}, 0], [-w_m, 0, 0]]
 * (the signed antidiagonal w'_size when m = 0); orthogonal: w_size.
 * Unitary is rejected (its hermitian form needs the conjugation action,
 * which the similitude layer here does not model).
 */
[[nodiscard]] Matrix similitude_form(GroupKind kind, const Field& f, int size, int m);

struct SimilitudeElement {
  GroupKind kind;
  int size;
  int m;               ///< presentation parameter fixing the form matrix
  Matrix mat;
  FieldElement lambda; ///< multiplier: mat^t J mat = lambda J
};

/// Multiplier of g if g^t J g is a nonzero scalar multiple of J, else nullopt.
[[nodiscard]] std::optional<FieldElement> similitude_factor(GroupKind kind, const Matrix& g,
                                                            int m = 0);

/// Checked constructor; std::invalid_argument when g is not a similitude.
[[nodiscard]] SimilitudeElement similitude(GroupKind kind, const Matrix& g, int m = 0);

/// psi -> lambda_psi * J psi^{-t} J^{-1}; an involution preserving lambda.
[[nodiscard]] SimilitudeElement theta(const SimilitudeElement& elem);

/**
 * @brief Dimension of the automorphism-group member attached to a profile
 *        value v2: symplectic v2(v2+1)/2 + 1 (v2 even required),
 *        orthogonal v2(v2-1)/2 + 1, unitary v2(v2-1)/2.
 *        v2 = 0 degenerates to the torus (1, 1, 0 respectively).
 */
[[nodiscard]] long aut_dim_table(GroupKind kind, int v2);

/// -1 - (aut_dim_table(kind, v2) - c) with c = 1 for the similitude kinds
/// (central torus) and c = 0 for unitary.
[[nodiscard]] long ell_bound(GroupKind kind, int v2);

}  // namespace isocone
