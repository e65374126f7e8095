// SPDX-License-Identifier: MIT
/**
 * @file bounds.hpp
 * @brief Closed-form dimension ledger: the codimension gap delta(m,h;k) and
 *        its minimum, H^2 tables for the center block, the fiber-dimension
 *        formula dim Y_x evaluated through two independent display lines,
 *        and the induction / degeneration / base-case inequality sweeps.
 *
 * Everything here is exact integer arithmetic.  Fractional terms in the
 * source inequalities (halves of squares) are handled by doubling: functions
 * whose name ends in `_x2` compute twice the quantity so no division ever
 * happens.  Side conditions (parity of shapes, windows such as n >= 2*v2) are
 * explicit preconditions of the sweeps, never silently assumed; a sweep
 * records every violated case in an InequalityReport, and passing means the
 * counterexample list is empty.
 *
 * Symplectic and orthogonal sweeps are asserted.  The unitary fixed-block
 * convention is unsettled (see groups.hpp: ParabolicDims marks its fixed
 * dimensions convention-dependent), so unitary sweeps run in report-only
 * mode: their reports carry `asserted = false` and are excluded from
 * pass/fail gating by callers that honor the flag.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isocone/groups.hpp"

namespace isocone {

/**
 * @brief The codimension gap of the rank-k stratum:
 *        delta(m,h;k) = (h-k)(m-k) + k(k+1)/2.
 *
 * Requires m, h >= 0 and 0 <= k <= min(m, h).  Symmetric in m and h.
 */
[[nodiscard]] long long delta_mhk(long long m, long long h, long long k);

/// min over 0 <= k <= min(m,h) of delta_mhk(m,h,k).  Requires m, h >= 0.
[[nodiscard]] long long cone_bound(long long m, long long h);

/// The smallest k achieving cone_bound(m,h).  delta is strictly convex in k,
/// so the minimizers are at most two consecutive integers.
[[nodiscard]] long long cone_bound_argmin(long long m, long long h);

/**
 * @brief H^2 table for the center block at multiplicity v2.
 *
 * Resonant case (the relevant twist matches): v2(v2+1)/2 for symplectic and
 * unitary, v2(v2-1)/2 for orthogonal.  Non-resonant case: 0 regardless of
 * kind.  Requires v2 >= 0.
 */
[[nodiscard]] long long h2_Z(GroupKind kind, long long v2, bool resonant = true);

/**
 * @brief The 6-tuple of cohomology dimensions attached to the two graded
 *        pieces of a parabolic unipotent radical: v0, v1, v2 are
 *        dim H^0/H^1/H^2 of the hom block V and z0, z1, z2 of the center
 *        block Z.
 *
 * Use make_dim_profile to construct one against a shape: that factory checks
 * the Euler identities v1 - v0 - v2 = d*dim(V) and z1 - z0 - z2 = d*dim(Z).
 */
struct DimProfile {
  long long v0 = 0;
  long long v1 = 0;
  long long v2 = 0;
  long long z0 = 0;
  long long z1 = 0;
  long long z2 = 0;
};

/**
 * @brief Dimensions of the graded pieces of the parabolic unipotent radical
 *        U = Z . V for the block presentation of `shape`.
 *
 * Symplectic/orthogonal: the involution-fixed dimensions from
 * parabolic_dims (hom block m(n-2m), center block m(m+1)/2 resp. m(m-1)/2),
 * which are the values satisfying u_n - u_{n-2m} = d(m(m-1)/2 + dim U).
 * Unitary: the full block dimensions, flagged convention-dependent.
 */
struct UnipotentGradedDims {
  long long dim_v = 0;  ///< hom block
  long long dim_z = 0;  ///< center block
  long long dim_u = 0;  ///< dim_v + dim_z
  bool convention_dependent = false;  ///< true for unitary
};

[[nodiscard]] UnipotentGradedDims unipotent_graded_dims(const ParabolicShape& shape);

/// Euler-checked factory: throws std::invalid_argument when the tuple is
/// negative anywhere or violates v1 - v0 - v2 = d*dim(V), z1 - z0 - z2 =
/// d*dim(Z) for the graded dimensions of `shape`.
[[nodiscard]] DimProfile make_dim_profile(const ParabolicShape& shape, int d, long long v0,
                                          long long v1, long long v2, long long z0, long long z1,
                                          long long z2);

/**
 * @brief Fiber dimension dim Y_x, evaluated through both display lines.
 *
 * Second line (the returned value):
 *     v2*v2' - v2^2 - delta_x + d*dim(U) + h2_Z
 * First line (recomputed independently with dim V and dim Z separate):
 *     v2*v2' + d*dim(V) - delta_x + h2_Z + d*dim(Z) - v2^2
 * with v2 = profile.v2, v2' = profile_prime.v2 and the graded dimensions
 * taken from `scaled_shape` (whose block parameter is already the product
 * multiplicity * m).  The two lines must agree given dim U = dim V + dim Z;
 * a disagreement is an invariant breach and throws std::logic_error.
 *
 * Preconditions (std::invalid_argument): delta_x >= 0, d >= 1, both profiles
 * Euler-consistent where checkable (`profile` against `scaled_shape`), and
 * profile.z2 equal to the h2_Z table value selected by `resonant`.
 */
[[nodiscard]] long long dim_Yx(const ParabolicShape& scaled_shape, const DimProfile& profile,
                               const DimProfile& profile_prime, long long delta_x, int d,
                               bool resonant = true);

/**
 * @brief Right-hand side of the universal induction inequality:
 *        delta_prev + delta_x - v2*v2' + v2^2 + d*(v2*m)(v2*m - 1)/2 - h2z.
 *
 * The caller supplies delta_prev (the minimized previous-level gap) and h2z
 * (from h2_Z).  Exact: (v2*m)(v2*m - 1) is always even.
 */
[[nodiscard]] long long induction_rhs(long long delta_prev, long long delta_x, long long v2,
                                      long long v2prime, long long m, int d, long long h2z);

/**
 * @brief Doubled right-hand side of the weakened induction inequality, in
 *        the invariant combination 2*delta - v2^2:
 *        prev_term_x2 + 2*delta_x + v2(v2-1) - 2*h2z + m(m-1)*v2,
 *        where prev_term_x2 = 2*delta_prev - v2'^2.
 */
[[nodiscard]] long long induction_rhs_weak_x2(long long prev_term_x2, long long delta_x,
                                              long long v2, long long m, long long h2z);

/**
 * @brief Elliptic-locus dimension bound: -1 - dim Aut_ad, where the
 *        adjoint automorphism dimension is aut_dim_table(kind, v2) minus the
 *        central line (1 for the similitude kinds, 0 for unitary).
 *
 * The tuple multiplicity m >= 1 is validated but does not affect the value
 * (the automorphism group is computed after a Schur reduction to m = 1).
 */
[[nodiscard]] long long ell_bound_adjoint(GroupKind kind, int v2, int m);

/// Both readings of the unitary central correction: first = the default
/// (no central line subtracted, matching ell_bound), second = the value with
/// a central line subtracted as in the similitude kinds.  For symplectic and
/// orthogonal the two entries coincide.
[[nodiscard]] std::pair<long long, long long> ell_bound_variants(GroupKind kind, int v2);

/**
 * @brief Outcome of one inequality sweep.
 *
 * `counterexamples` holds a printable description of every violated case;
 * pass() is exactly emptiness.  `asserted` is false for report-only sweeps
 * (the unitary branches), which callers exclude from gating.
 */
struct InequalityReport {
  std::string id;
  std::string ranges;
  std::vector<std::string> counterexamples;
  long long cases_checked = 0;
  bool asserted = true;
  [[nodiscard]] bool pass() const { return counterexamples.empty(); }
};

/**
 * @brief Sweep 1 <= m, h <= the given caps asserting, whenever h >= m,
 *        cone_bound(m,h) >= ceil((m^2+m)/3) and cone_bound(m,h) >= m; and
 *        for m = 2 the exact value min(3, h, 2h).  Also asserts the
 *        minimizer-location fact: every minimizing k lies within distance 1
 *        of (m+h)/3 - 1/6 clamped to [0, min(m,h)].
 */
[[nodiscard]] InequalityReport check_cor_cone(int m_max = 60, int h_max = 60);

/**
 * @brief The elementary inequality chain behind the universal induction:
 *        d*v2m(v2m-1) - v2(v2-1) >= v2*m(m-1); the half-square identity
 *        2(v2^2 - v2*v2') = (v2^2 - v2'^2) + (v2 - v2')^2 >= v2^2 - v2'^2;
 *        the delta_x-term bound 2*delta_x + v2(v2-1) - 2*h2z + m(m-1)v2 >=
 *        min(2*delta_x, m(m-1)v2) >= 0 under the cone-corollary hypothesis
 *        (delta_x >= v2 when m = 1 in the resonant symplectic/unitary case);
 *        and the resulting comparison of induction_rhs against its weakened
 *        form.  Swept over d <= d_max, 1 <= m <= m_max, v2 <= v2_max,
 *        v2' <= v2p_max, all three kinds, both resonance flags.
 */
[[nodiscard]] InequalityReport check_universal(int d_max = 3, int m_max = 6, int v2_max = 6,
                                               int v2p_max = 6);

/**
 * @brief Degeneration inequality sweep for symplectic and orthogonal kinds:
 *        v2^2 <= (v2i)^2 + (v2a)^2 + 2(u_n - u_{n-v2a*m} - u_{v2a*m})
 *        over d <= d_max, n <= n_max, 1 <= m <= n/2, and all splits
 *        v2 = v2a + v2i inside the window n >= 2*v2i*m + v2a*m, restricted
 *        to parity-valid shapes (every u subscript must be a legal shape).
 */
[[nodiscard]] InequalityReport check_degen(int d_max = 2, int n_max = 40);

/// The same sweep for the unitary kind, report-only (asserted = false).
[[nodiscard]] InequalityReport check_degen_unitary(int d_max = 2, int n_max = 40);

/**
 * @brief Base-case arithmetic of the universal bounds:
 *        2(v2^2 - v2 + 1) >= v2^2 for v2 <= v2_max; u_n >= v2^2 - v2 at the
 *        window edge n = 2*v2 (and the next few parity-valid n) for each
 *        kind at d = 1; and the m = 2 corner min(3, 1 + n - 2) = 3 for all
 *        4 <= n <= 60.
 */
[[nodiscard]] InequalityReport check_thm_universal_base(int v2_max = 40);

/// Every sweep above at its documented default range, asserted sweeps first.
[[nodiscard]] std::vector<InequalityReport> check_all();

}  // namespace isocone
