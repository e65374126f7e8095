// SPDX-License-Identifier: MIT
/**
 * @file goodconfig.hpp
 * @brief Good configurations: correcting the last row of a configuration
 *        inside an orthonormal frame, classifying the solution set, and the
 *        two companion searches (free-variable subsets and quadratic
 *        reducibility).
 *
 * A configuration is a list of rows c_1, ..., c_r in a symmetric bilinear
 * space together with an orthonormal frame u_1, ..., u_r.  The question is
 * whether the corrected vector
 *
 *     w(lambda) = c_r + sum_j lambda_j u_j
 *
 * can be made isotropic and orthogonal to c_1, ..., c_{r-1}.  The conditions
 * are r-1 linear equations and one quadratic equation in lambda; the
 * configuration is *good* when the solution set is finite over the algebraic
 * closure (the quadratic never degenerates into a positive-dimensional
 * family).  Since the equations have degree at most two, the closure
 * classification is decided exactly by linear algebra plus one discriminant.
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isocone/forms.hpp"

namespace isocone {

/// Rows plus an orthonormal frame of equal shape.  The space must be
/// symmetric and the frame rows must satisfy pair(u_i, u_j) = delta_ij.
struct Configuration {
  BilinearSpace space;
  Matrix rows;   ///< r x h
  Matrix frame;  ///< r x h, orthonormal

  Configuration(const BilinearSpace& s, const Matrix& rows_in, const Matrix& frame_in);
  [[nodiscard]] int r() const { return rows.rows(); }
  [[nodiscard]] int h() const { return space.dim(); }
  /// The first k rows with the first k frame vectors.
  [[nodiscard]] Configuration prefix(int k) const;
  /// Rows reordered as rows[perm[0]], rows[perm[1]], ...; frame unchanged.
  [[nodiscard]] Configuration reordered(const std::vector<int>& perm) const;
};

/// The correction system in lambda: `linear * lambda = rhs` plus the single
/// quadratic equation  lambda.lambda + quad_linear.lambda + quad_const = 0.
struct QuadSystem {
  Matrix linear;          ///< (r-1) x r
  Vec rhs;                ///< length r-1
  Vec quad_linear;        ///< length r: 2 * pair(c_r, u_j)
  FieldElement quad_const;  ///< pair(c_r, c_r)
};

[[nodiscard]] QuadSystem build_system(const Configuration& config);

/// c_r + sum_j lambda_j u_j.
[[nodiscard]] Vec corrected_row(const Configuration& config, const Vec& lambda);

/// True iff lambda satisfies every equation of the system.
[[nodiscard]] bool satisfies_system(const QuadSystem& system, const Vec& lambda);

enum class SolutionKind { finite, infinite };

/**
 * @brief Classification of the solution set over the algebraic closure.
 *
 * When finite, `solutions` lists the rational solutions, taken in the base
 * field when possible and in its quadratic extension otherwise
 * (`escalated`); `closure_count` counts distinct closure solutions, which
 * the quadratic caps at two.  `roots_enumerated` is false only in the one
 * unreachable case: a degree-two base field whose discriminant is a
 * non-square there (the roots then live two extension steps up; the
 * classification is still exact).  When infinite, `infinite_dim` is the
 * dimension of the solution family.
 */
struct SolutionDescription {
  SolutionKind kind = SolutionKind::finite;
  long closure_count = 0;
  bool has_double_root = false;
  std::vector<Vec> solutions;
  bool escalated = false;
  bool roots_enumerated = true;
  long infinite_dim = 0;
  long linear_free_dim = 0;  ///< free variables after the linear block
};

[[nodiscard]] SolutionDescription solve_system(const QuadSystem& system);

/// Finite solution set over the closure for the full configuration.
[[nodiscard]] bool is_good(const Configuration& config);

/// is_good for every prefix of length 2, ..., r (length-1 prefixes are
/// always good: their equation is a monic one-variable quadratic).
[[nodiscard]] bool is_good_sequence(const Configuration& config);

/**
 * @brief Lexicographically first row permutation making every prefix good.
 *
 * The frame is kept in place; only the rows are permuted.  Exhaustive over
 * all r! orders, so r <= 6 is enforced.  Returns std::nullopt when no order
 * works.
 */
[[nodiscard]] std::optional<std::pair<std::vector<int>, Configuration>> reorder_to_good(
    const Configuration& config);

/**
 * @brief A polynomial of total degree exactly two:
 *        P(x) = x^T quad x + linear.x + constant, with quad symmetric
 *        and nonzero.
 */
struct QuadPoly {
  Matrix quad;
  Vec linear;
  FieldElement constant;

  QuadPoly(const Matrix& q, const Vec& l, const FieldElement& c);
  [[nodiscard]] int nvars() const { return quad.rows(); }
  [[nodiscard]] const Field& field() const { return quad.field(); }
};

[[nodiscard]] FieldElement evaluate(const QuadPoly& p, const Vec& point);

/// The (n+1) x (n+1) symmetric matrix G with P(x) = (1, x)^T G (1, x):
/// quadratic block `quad`, border linear/2, corner the constant.
[[nodiscard]] Matrix homogenized_gram(const QuadPoly& p);

/// Product of two affine-linear factors over the closure.  In odd
/// characteristic this is exactly rank(homogenized_gram) <= 2.
[[nodiscard]] bool is_reducible_quadratic(const QuadPoly& p);

/// Options for the free-subset search.  Exhaustive work is capped by k; the
/// sampled phase draws `sampled_subsets` subsets and up to
/// `trials_per_subset` assignments each, escalating to exhaustive
/// assignments when sampling finds no obstruction.
struct ColoringOptions {
  long sampled_subsets = 40;
  long trials_per_subset = 50;
  unsigned long long seed = 20260801;
};

/// One audited subset of variable slots (row-major indices into the k x k
/// variable matrix).
struct SubsetCheck {
  std::vector<int> entries;
  bool is_free = false;
  bool exhaustive = false;      ///< all q^|S| assignments were tried
  long long trials = 0;
};

/**
 * @brief Search for the maximal free subset of correction variables.
 *
 * The model: k rows lambda_1, ..., lambda_k in F^k must satisfy
 * lambda_i . lambda_j = -delta_ij (the Gram conditions of a corrected
 * orthonormal block).  A subset S of the k^2 variable slots is *free* when
 * every base-field assignment to S extends to a full solution over the
 * quadratic extension.  Freeness is monotone downward (any subset of a free
 * set is free), so the maximum is bounded above by checking only the sizes
 * around the expected value k(k-1)/2.
 *
 * For k <= 2 the search is exhaustive in both subsets and assignments; for
 * k = 3 the above-bound sizes are sampled per `options` (obstructions stop
 * a subset early; suspected-free subsets escalate to exhaustive
 * assignments).  k > 3 is rejected.
 */
struct ColoringResult {
  int k = 0;
  long long q = 0;
  long bound = 0;                      ///< k(k-1)/2
  long number = 0;                     ///< size of the largest verified free subset
  bool found_free_at_bound = false;
  std::vector<int> free_subset;        ///< witness, ascending slot indices
  bool any_free_above_bound = false;   ///< expected false
  bool above_bound_exhaustive = false; ///< all size-(bound+1) subsets fully checked
  std::vector<SubsetCheck> above_bound_checks;
  long long trials_run = 0;
};

[[nodiscard]] ColoringResult coloring_number(int k, long long q,
                                             const ColoringOptions& options = {});

}  // namespace isocone
