// SPDX-License-Identifier: MIT
/**
 * @file cone.hpp
 * @brief Affine cones of isotropic tuples: exact point counts, stratified
 *        closed forms, dimensions, and codimension bounds.
 *
 * Two models are covered.
 *
 *  - The tuple model: m-tuples (v_1, ..., v_m) of vectors in an h-dimensional
 *    bilinear space whose span is totally isotropic.  The ambient affine
 *    space has dimension h*m.
 *  - The biorthogonal model: pairs of m-tuples ((u_1..u_m), (v_1..v_m)) with
 *    pair(u_i, v_j) = 0 for all i, j (no condition within either tuple).
 *    The ambient affine space has dimension 2*h*m.
 *
 * Every closed-form count in this file is cross-checked against brute-force
 * enumeration at desk scales; the report helpers run that cross-check
 * automatically whenever the instance fits the enumeration budget and refuse
 * (status "skipped-budget") rather than silently extrapolate when it does
 * not.  Counts are exact integers throughout; dimensions of point-count
 * strata are integer exponents, never floating-point logarithms.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isocone/bigint.hpp"
#include "isocone/forms.hpp"

namespace isocone {

/// Enumeration budget: the nominal number of membership tests a brute count
/// may cost, measured as q^(ambient dimension) regardless of pruning.
struct Budget {
  long long max_membership_tests = 100'000'000;
};

/// Budget from the ISOCONE_BUDGET environment variable (positive integer),
/// or the default when the variable is unset.  Malformed values throw.
[[nodiscard]] Budget budget_from_env();

/// Thrown when a brute count would exceed the budget.  Callers that prefer a
/// report row over an exception should use cone_report / biorth_report.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const BigInt& cost, long long limit);
  [[nodiscard]] const BigInt& cost() const { return cost_; }

 private:
  BigInt cost_;
};

/// Work split for the tuple-model enumerator: shard `index` of `count`
/// processes the first-row vectors whose enumeration index is congruent to
/// `index` mod `count`.  Shard results sum to the unsharded count.
struct ShardSpec {
  int index = 0;
  int count = 1;
};

/// An instance of the tuple model: m rows drawn from `space`.
struct ConeInstance {
  BilinearSpace space;
  int m;

  ConeInstance(const BilinearSpace& s, int m_rows);
  [[nodiscard]] int h() const { return space.dim(); }
  /// Ambient affine dimension h*m.
  [[nodiscard]] long ambient_dim() const { return static_cast<long>(space.dim()) * m; }
  /// Nominal enumeration cost q^(h*m).
  [[nodiscard]] BigInt nominal_cost() const;
};

/// True iff the m x h matrix of rows lies in the cone (row span totally
/// isotropic).  Shape and field must match the instance exactly.
[[nodiscard]] bool is_in_cone(const ConeInstance& inst, const Matrix& rows);

/**
 * @brief Exact cone point count by depth-first enumeration.
 *
 * Rows are chosen one at a time and a prefix is abandoned as soon as any
 * pairing fails, so the real work is proportional to the number of partial
 * solutions rather than to q^(h*m); the budget check nevertheless uses the
 * nominal q^(h*m) so that refusals are predictable from the instance shape
 * alone.  Throws BudgetExceeded when over budget.
 */
[[nodiscard]] BigInt count_cone(const ConeInstance& inst, const Budget& budget,
                                const ShardSpec& shard = {});

/// Unpruned full enumeration over all q^(h*m) tuples.  Test oracle only;
/// requires q^(h*m) <= 10^6 and throws std::invalid_argument beyond that.
[[nodiscard]] BigInt count_cone_naive(const ConeInstance& inst);

/// One rank stratum of a stratified count.
struct StratumTerm {
  int k = 0;                    ///< rank of the span (tuple) / of the v-side (biorthogonal)
  BigInt subspaces;             ///< k-dimensional spans available
  BigInt tuples_per_subspace;   ///< tuples realizing a fixed span (times the
                                ///< free factor, in the biorthogonal model)
  BigInt total;                 ///< subspaces * tuples_per_subspace
  long dim = 0;                 ///< exponent of the stratum's leading term
};

/**
 * @brief Stratified closed-form count of the tuple model.
 *
 * Stratifying by the rank k of the span: (number of totally isotropic
 * k-subspaces) * (number of m-tuples spanning a fixed k-space), the second
 * factor being prod_{i<k} (q^m - q^i).  Terms beyond the Witt index vanish.
 */
[[nodiscard]] std::vector<StratumTerm> cone_strata(const ConeInstance& inst);

/// Sum of cone_strata totals.
[[nodiscard]] BigInt count_cone_stratified(const ConeInstance& inst);

/// Dimension of the cone: max over 0 <= k <= min(m, witt index) of
/// k*m + iso_grassmannian_dim(kind, h, k).
[[nodiscard]] long cone_dim(const ConeInstance& inst);

/// Codimension h*m - cone_dim.
[[nodiscard]] long cone_codim(const ConeInstance& inst);

/**
 * @brief Point counts of the rank-<=k determinantal resolution.
 *
 * The resolution parametrizes pairs (K, psi) with K an (m-k)-dimensional
 * subspace of the tuple index space and psi a map on the k-dimensional
 * quotient; `total` counts all such pairs and `in_cone` those whose psi is a
 * k-tuple in the cone.  The dimension gap measures how much smaller the
 * cone-side resolution is than its k*h ambient.
 */
struct ResolutionGap {
  int k = 0;
  BigInt total;       ///< [m choose k]_q * q^(k*h)
  BigInt in_cone;     ///< [m choose k]_q * (k-tuple cone count)
  long ambient = 0;   ///< k*h
  long cone_part = 0; ///< dimension of the k-tuple cone
  long gap = 0;       ///< ambient - cone_part
  long lower_bound = 0;        ///< k*(k+1)/2 (symmetric) or k*(k-1)/2 (alternating)
  bool precondition_met = false;  ///< k <= min(m, witt index)
  bool bound_holds = false;       ///< gap >= lower_bound (meaningful when precondition_met)
};

/// Requires 0 <= k <= m.  The gap >= k(k+1)/2 statement is only asserted
/// when k is at most the Witt index; the returned flags report both facts.
[[nodiscard]] ResolutionGap resolution_gap(const ConeInstance& inst, int k);

/// An instance of the biorthogonal model: two m-tuples from `space` with all
/// cross pairings zero.
struct BiorthInstance {
  BilinearSpace space;
  int m;

  BiorthInstance(const BilinearSpace& s, int m_rows);
  [[nodiscard]] int h() const { return space.dim(); }
  /// Ambient affine dimension 2*h*m.
  [[nodiscard]] long ambient_dim() const { return 2L * space.dim() * m; }
  /// Nominal enumeration cost q^(2*h*m).
  [[nodiscard]] BigInt nominal_cost() const;
};

/// True iff pair(u_i, v_j) = 0 for all rows u_i of `u` and v_j of `v`.
[[nodiscard]] bool is_in_biorth(const BiorthInstance& inst, const Matrix& u, const Matrix& v);

/**
 * @brief Exact biorthogonal count by v-side enumeration.
 *
 * For each of the q^(h*m) v-tuples of rank r, the u-side is a linear system
 * with q^(m*(h-r)) solutions, so only one side is ever enumerated.  The
 * budget check still uses the nominal q^(2*h*m).  Throws BudgetExceeded.
 */
[[nodiscard]] BigInt count_biorth(const BiorthInstance& inst, const Budget& budget);

/// Full 2-sided enumeration, q^(2*h*m) <= 10^6 enforced.  Test oracle only.
[[nodiscard]] BigInt count_biorth_naive(const BiorthInstance& inst);

/// Strata by v-side rank k: [h choose k]_q * prod_{i<k}(q^m - q^i) v-tuples,
/// each admitting q^(m*(h-k)) u-tuples.  Independent of the Gram matrix.
[[nodiscard]] std::vector<StratumTerm> biorth_strata(const BiorthInstance& inst);

/// Sum of biorth_strata totals.
[[nodiscard]] BigInt count_biorth_stratified(const BiorthInstance& inst);

/// Dimension: max over 0 <= k <= min(m, h) of k(h-k) + km + m(h-k).
[[nodiscard]] long biorth_dim(const BiorthInstance& inst);

/// Codimension 2hm - dim = min over k of (m-k)h + k^2.
[[nodiscard]] long biorth_codim(const BiorthInstance& inst);

/// The biorthogonal codimension as a pure formula (no instance needed).
[[nodiscard]] long biorth_codim_formula(int h, int m);

/// A full per-instance record: closed-form count, strata, dimensions, the
/// claimed codimension bound, and whether brute enumeration confirmed the
/// count ("ok") or was refused for budget ("skipped-budget").  A mismatch
/// between enumeration and the closed form throws std::logic_error.
struct CountReport {
  std::string model;      ///< "tuple" or "biorthogonal"
  std::string form_kind;  ///< "symmetric" or "alternating"
  int h = 0;
  int m = 0;
  long long q = 0;
  long ambient = 0;
  std::string status;     ///< "ok" or "skipped-budget"
  BigInt cone_points;     ///< exact closed-form count
  std::vector<StratumTerm> strata;
  long dim = 0;
  long codim = 0;
  long bound = 0;         ///< claimed codimension lower bound
  bool bound_satisfied = false;
};

[[nodiscard]] CountReport cone_report(const ConeInstance& inst, const Budget& budget);
/// Same report, with the enumeration cross-check summed over `shard_count`
/// first-row shards.  The budget gate still uses the nominal full cost, so
/// the refusal decision does not depend on the shard count.
[[nodiscard]] CountReport cone_report(const ConeInstance& inst, const Budget& budget,
                                      int shard_count);
[[nodiscard]] CountReport biorth_report(const BiorthInstance& inst, const Budget& budget);

/**
 * @brief Codimension lower bound for the rank-stratified pair locus with
 *        s + t + dK*m conditions per rank-drop direction:
 *        min over 0 <= k <= m of (m-k)^2 + k*(s + t + dK*m).
 *
 * Formula evaluation only; no enumeration oracle backs it.  All inputs must
 * be nonnegative; m = 0 degenerates to 0.
 */
[[nodiscard]] long exercise_bound(long m, long s, long t, long dK);

}  // namespace isocone
