// SPDX-License-Identifier: MIT
/**
 * @file forms.hpp
 * @brief Nondegenerate bilinear spaces over small finite fields.
 *
 * A BilinearSpace bundles a field, a kind (symmetric or alternating) and an
 * invertible Gram matrix; pairings are evaluated exactly as u^T * G * v.
 * On top of that sit the structural algorithms this project leans on:
 *
 *  - gram_schmidt: orthonormal diagonalization of symmetric spaces, with the
 *    documented repair step for isotropic leading vectors, escalating into
 *    the quadratic extension only when a needed square root is missing;
 *  - witt_decompose: a maximal chain of hyperbolic planes plus anisotropic
 *    remainder, certified by the exact pairings of the returned basis;
 *  - isotropic vector / subspace counting, both by honest enumeration and by
 *    the classical closed formulas, so each side can audit the other.
 *
 * The closed-form counters are what the cone-counting module ultimately
 * trusts, which is why the test suite cross-checks them against enumeration
 * on every split space of dimension <= 6 over F_3 and F_5 before anything
 * else is allowed to build on them.
 */
#pragma once

#include <optional>

#include "isocone/bigint.hpp"
#include "isocone/linalg.hpp"

namespace isocone {

enum class FormKind { symmetric, alternating };

[[nodiscard]] const char* form_kind_name(FormKind k);

class BilinearSpace {
 public:
  /// Symmetric space; gram must be symmetric and invertible.
  static BilinearSpace symmetric(const Matrix& gram);
  /// Alternating space; gram must be antisymmetric with zero diagonal,
  /// invertible, and of even dimension.
  static BilinearSpace alternating(const Matrix& gram);
  /// Split symmetric fixture: gram = antidiagonal 1s (w_h).
  static BilinearSpace split_symmetric(const Field& f, int h);
  /// Split alternating fixture: gram = signed antidiagonal (w'_h), h even.
  static BilinearSpace split_alternating(const Field& f, int h);
  /// Symmetric space with identity Gram (sum-of-squares form).
  static BilinearSpace identity_symmetric(const Field& f, int h);

  [[nodiscard]] FormKind kind() const { return kind_; }
  [[nodiscard]] int dim() const { return gram_.rows(); }
  [[nodiscard]] const Field& field() const { return gram_.field(); }
  [[nodiscard]] const Matrix& gram() const { return gram_; }

  /// u^T * G * v; lengths must equal dim() and fields must match exactly.
  [[nodiscard]] FieldElement pair(const Vec& u, const Vec& v) const;
  /// pair(u, u).
  [[nodiscard]] FieldElement norm(const Vec& u) const;
  [[nodiscard]] bool is_isotropic_vector(const Vec& u) const;
  /// True iff all pairings between rows vanish (i <= j symmetric, i < j
  /// alternating), i.e. the row span is totally isotropic.
  [[nodiscard]] bool is_totally_isotropic_rows(const Matrix& rows) const;

  /// The same form viewed over the quadratic extension.
  [[nodiscard]] BilinearSpace lifted() const;

 private:
  BilinearSpace(FormKind k, const Matrix& g) : kind_(k), gram_(g) {}
  FormKind kind_;
  Matrix gram_;
};

struct OrthonormalBasisResult {
  Matrix basis;    ///< rows u_i with pair(u_i, u_j) = delta_ij
  bool escalated;  ///< true iff the basis needed the quadratic extension
};

/**
 * @brief Orthonormal basis of a symmetric space (deterministic).
 *
 * Diagonalizes over the base field first — an isotropic leading vector v is
 * repaired as v + t*w for the lowest-index remaining w with pair(v, w) != 0
 * and the smallest t in {1, 2} that makes the norm nonzero (always possible
 * for p >= 3) — then normalizes each vector, lifting the whole basis into
 * the quadratic extension iff some diagonal norm is a non-square.
 * Degree-2 input spaces that would need a second extension raise
 * std::domain_error.
 */
[[nodiscard]] OrthonormalBasisResult gram_schmidt(const BilinearSpace& space);

/// First r rows of gram_schmidt(space); convenience for building frames.
[[nodiscard]] OrthonormalBasisResult orthonormal_frame(const BilinearSpace& space, int r);

/// A nonzero isotropic vector if one exists (deterministic search).
[[nodiscard]] std::optional<Vec> find_isotropic(const BilinearSpace& space);

struct WittDecomposition {
  int witt_index = 0;        ///< number of hyperbolic planes
  int anisotropic_dim = 0;   ///< dimension of the anisotropic kernel
  Matrix hyperbolic_rows;    ///< 2*witt_index rows: e_1, f_1, e_2, f_2, ...
  Matrix anisotropic_rows;   ///< anisotropic_dim rows, orthogonal to the planes
};

/**
 * @brief Maximal hyperbolic splitting: 2*witt_index + anisotropic_dim = dim.
 *
 * The returned rows satisfy exactly: pair(e_i, f_i) = 1, all other pairings
 * between the listed vectors vanish (up to the forced antisymmetry), and the
 * anisotropic block contains no nonzero isotropic vector.
 */
[[nodiscard]] WittDecomposition witt_decompose(const BilinearSpace& space);

/// Witt index alone (via witt_decompose).
[[nodiscard]] int witt_index(const BilinearSpace& space);

/**
 * @brief Basis rows e_1, f_1, ..., e_v, f_v of a split space.
 *
 * Requires anisotropic_dim == 0; throws std::invalid_argument otherwise.
 */
[[nodiscard]] Matrix hyperbolic_basis(const BilinearSpace& space);

/// Number of isotropic vectors including zero, by enumeration (q^h <= 1e6).
[[nodiscard]] BigInt isotropic_vector_count_brute(const BilinearSpace& space);
/// Number of isotropic vectors including zero, by the classical closed form.
[[nodiscard]] BigInt isotropic_vector_count(const BilinearSpace& space);

/// Totally isotropic k-subspaces by enumerating RREF representatives
/// (budget guard q^h <= 1e6); k > witt index simply yields 0.
[[nodiscard]] BigInt isotropic_subspace_count_brute(const BilinearSpace& space, int k);
/// Totally isotropic k-subspaces via the frame/stabilizer product formula.
[[nodiscard]] BigInt isotropic_subspace_count(const BilinearSpace& space, int k);

/**
 * @brief Dimension of the variety of totally isotropic k-subspaces of a
 *        split form on h-space: k(h-k) - k(k+1)/2 symmetric,
 *        k(h-k) - k(k-1)/2 alternating.  Requires 0 <= 2k <= h.
 */
[[nodiscard]] long iso_grassmannian_dim(FormKind kind, int h, int k);

/// Number of k-subspaces of an h-space over F_q (Gaussian binomial).
[[nodiscard]] BigInt gaussian_binomial(int h, int k, long long q);

}  // namespace isocone
