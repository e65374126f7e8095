// SPDX-License-Identifier: MIT
#include "isocone/goodconfig.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "isocone/linalg.hpp"

namespace isocone {

namespace {

/// Lexicographically next size-|combo| subset of {0, ..., n-1}; false once
/// the last combination has been visited.
bool next_combination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combo[static_cast<size_t>(i)] < n - (k - i)) {
      ++combo[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

Configuration::Configuration(const BilinearSpace& s, const Matrix& rows_in, const Matrix& frame_in)
    : space(s), rows(rows_in), frame(frame_in) {
  if (space.kind() != FormKind::symmetric) {
    throw std::invalid_argument("configurations need a symmetric space");
  }
  if (rows.rows() < 1) throw std::invalid_argument("a configuration needs at least one row");
  if (rows.rows() != frame.rows() || rows.cols() != space.dim() || frame.cols() != space.dim()) {
    throw std::invalid_argument("rows and frame must both be r x dim(space)");
  }
  for (int i = 0; i < frame.rows(); ++i) {
    for (int j = i; j < frame.rows(); ++j) {
      const FieldElement p = space.pair(frame.row_copy(i), frame.row_copy(j));
      const bool ok = (i == j) ? p.equals_int(1) : p.is_zero();
      if (!ok) throw std::invalid_argument("frame rows must be orthonormal");
    }
  }
}

Configuration Configuration::prefix(int k) const {
  if (k < 1 || k > r()) throw std::invalid_argument("prefix length out of range");
  return Configuration(space, rows.submatrix(0, 0, k, h()), frame.submatrix(0, 0, k, h()));
}

Configuration Configuration::reordered(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != r()) {
    throw std::invalid_argument("permutation length must equal the row count");
  }
  std::vector<bool> seen(perm.size(), false);
  Matrix permuted(space.field(), r(), h());
  for (int i = 0; i < r(); ++i) {
    const int src = perm[static_cast<size_t>(i)];
    if (src < 0 || src >= r() || seen[static_cast<size_t>(src)]) {
      throw std::invalid_argument("not a permutation of the row indices");
    }
    seen[static_cast<size_t>(src)] = true;
    permuted.set_row(i, rows.row_copy(src));
  }
  return Configuration(space, permuted, frame);
}

QuadSystem build_system(const Configuration& config) {
  const Field& f = config.space.field();
  const int r = config.r();
  const Vec last = config.rows.row_copy(r - 1);

  QuadSystem system{Matrix(f, r - 1, r), Vec(), Vec(), config.space.norm(last)};
  for (int i = 0; i + 1 < r; ++i) {
    const Vec c_i = config.rows.row_copy(i);
    for (int j = 0; j < r; ++j) {
      system.linear.set(i, j, config.space.pair(c_i, config.frame.row_copy(j)));
    }
    system.rhs.push_back(-config.space.pair(c_i, last));
  }
  const FieldElement two = f.from_int(2);
  for (int j = 0; j < r; ++j) {
    system.quad_linear.push_back(two * config.space.pair(last, config.frame.row_copy(j)));
  }
  return system;
}

Vec corrected_row(const Configuration& config, const Vec& lambda) {
  if (static_cast<int>(lambda.size()) != config.r()) {
    throw std::invalid_argument("lambda must have one entry per row");
  }
  Vec w = config.rows.row_copy(config.r() - 1);
  for (int j = 0; j < config.r(); ++j) {
    w = vec_add(w, vec_scaled(config.frame.row_copy(j), lambda[static_cast<size_t>(j)]));
  }
  return w;
}

bool satisfies_system(const QuadSystem& system, const Vec& lambda) {
  const Vec lhs = mat_vec(system.linear, lambda);
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != system.rhs[i]) return false;
  }
  FieldElement quad = system.quad_const + dot(system.quad_linear, lambda) + dot(lambda, lambda);
  return quad.is_zero();
}

SolutionDescription solve_system(const QuadSystem& system) {
  const Field& f = system.linear.field();
  SolutionDescription out;

  const SolveOutcome lin = solve(system.linear, system.rhs);
  if (!lin.consistent) {
    out.kind = SolutionKind::finite;
    return out;
  }
  const Vec& x0 = lin.particular;
  const Matrix& kernel = lin.homogeneous;
  const int free = kernel.rows();
  out.linear_free_dim = free;

  // Q(t) = sum_ab M_ab t_a t_b + sum_a beta_a t_a + gamma on lambda = x0 + t*K.
  const FieldElement gamma =
      dot(x0, x0) + dot(system.quad_linear, x0) + system.quad_const;
  Vec beta;
  Matrix head(f, free, free);
  const FieldElement two = f.from_int(2);
  for (int a = 0; a < free; ++a) {
    const Vec ka = kernel.row_copy(a);
    beta.push_back(two * dot(x0, ka) + dot(system.quad_linear, ka));
    for (int b = 0; b < free; ++b) head.set(a, b, dot(ka, kernel.row_copy(b)));
  }
  bool constant = true;
  for (int a = 0; a < free && constant; ++a) {
    if (!beta[static_cast<size_t>(a)].is_zero()) constant = false;
    for (int b = 0; b < free && constant; ++b) {
      if (!head.at(a, b).is_zero()) constant = false;
    }
  }

  if (constant) {
    if (!gamma.is_zero()) {
      out.kind = SolutionKind::finite;  // no solutions at all
    } else if (free == 0) {
      out.kind = SolutionKind::finite;
      out.closure_count = 1;
      out.solutions.push_back(x0);
    } else {
      out.kind = SolutionKind::infinite;
      out.infinite_dim = free;
    }
    return out;
  }

  if (free >= 2) {
    // A nonconstant polynomial in >= 2 variables cuts a hypersurface.
    out.kind = SolutionKind::infinite;
    out.infinite_dim = free - 1;
    return out;
  }

  // One free variable: alpha t^2 + beta t + gamma with (alpha, beta) != 0.
  const FieldElement alpha = head.at(0, 0);
  const FieldElement b0 = beta[0];
  const Vec k0 = kernel.row_copy(0);
  out.kind = SolutionKind::finite;
  if (alpha.is_zero()) {
    out.closure_count = 1;
    out.solutions.push_back(vec_add(x0, vec_scaled(k0, -(gamma / b0))));
    return out;
  }
  const FieldElement disc = b0 * b0 - f.from_int(4) * alpha * gamma;
  if (disc.is_zero()) {
    out.closure_count = 1;
    out.has_double_root = true;
    out.solutions.push_back(vec_add(x0, vec_scaled(k0, -(b0 / (two * alpha)))));
    return out;
  }
  out.closure_count = 2;
  if (disc.is_square()) {
    const FieldElement root = disc.sqrt_in_field().value();
    const FieldElement inv2a = (two * alpha).inverse();
    out.solutions.push_back(vec_add(x0, vec_scaled(k0, (-b0 + root) * inv2a)));
    out.solutions.push_back(vec_add(x0, vec_scaled(k0, (-b0 - root) * inv2a)));
    return out;
  }
  if (f.degree() == 2) {
    // The two roots live beyond the quadratic extension of the base prime
    // field; the count is still exact.
    out.roots_enumerated = false;
    return out;
  }
  out.escalated = true;
  const FieldElement root = disc.lift().sqrt_in_field().value();
  const FieldElement inv2a = (two * alpha).lift().inverse();
  const Vec x0_up = lift_vec(x0);
  const Vec k0_up = lift_vec(k0);
  out.solutions.push_back(vec_add(x0_up, vec_scaled(k0_up, (-b0.lift() + root) * inv2a)));
  out.solutions.push_back(vec_add(x0_up, vec_scaled(k0_up, (-b0.lift() - root) * inv2a)));
  return out;
}

bool is_good(const Configuration& config) {
  return solve_system(build_system(config)).kind == SolutionKind::finite;
}

bool is_good_sequence(const Configuration& config) {
  for (int k = 2; k <= config.r(); ++k) {
    if (!is_good(config.prefix(k))) return false;
  }
  return true;
}

std::optional<std::pair<std::vector<int>, Configuration>> reorder_to_good(
    const Configuration& config) {
  if (config.r() > 6) {
    throw std::invalid_argument("reorder_to_good enumerates r! orders; r <= 6 enforced");
  }
  std::vector<int> perm(static_cast<size_t>(config.r()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Configuration candidate = config.reordered(perm);
    if (is_good_sequence(candidate)) return std::make_pair(perm, candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

QuadPoly::QuadPoly(const Matrix& q, const Vec& l, const FieldElement& c)
    : quad(q), linear(l), constant(c) {
  if (quad.rows() != quad.cols()) throw std::invalid_argument("quadratic part must be square");
  if (static_cast<int>(linear.size()) != quad.rows()) {
    throw std::invalid_argument("linear part must match the variable count");
  }
  bool nonzero = false;
  for (int i = 0; i < quad.rows(); ++i) {
    for (int j = 0; j < quad.cols(); ++j) {
      if (quad.at(i, j) != quad.at(j, i)) {
        throw std::invalid_argument("quadratic part must be symmetric");
      }
      if (!quad.at(i, j).is_zero()) nonzero = true;
    }
  }
  if (!nonzero) throw std::invalid_argument("total degree must be exactly two");
}

FieldElement evaluate(const QuadPoly& p, const Vec& point) {
  if (static_cast<int>(point.size()) != p.nvars()) {
    throw std::invalid_argument("point must have one coordinate per variable");
  }
  return dot(point, mat_vec(p.quad, point)) + dot(p.linear, point) + p.constant;
}

Matrix homogenized_gram(const QuadPoly& p) {
  const Field& f = p.field();
  const int n = p.nvars();
  const FieldElement half = f.from_int(2).inverse();
  Matrix g(f, n + 1, n + 1);
  g.set(0, 0, p.constant);
  for (int i = 0; i < n; ++i) {
    g.set(0, i + 1, half * p.linear[static_cast<size_t>(i)]);
    g.set(i + 1, 0, half * p.linear[static_cast<size_t>(i)]);
    for (int j = 0; j < n; ++j) g.set(i + 1, j + 1, p.quad.at(i, j));
  }
  return g;
}

bool is_reducible_quadratic(const QuadPoly& p) { return rank(homogenized_gram(p)) <= 2; }

namespace {

/// All vectors v in ext^k with v.v = -1, the row candidates of the coloring
/// search.
std::vector<Vec> unit_norm_candidates(const Field& ext, int k) {
  const long long size = ext.size();
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= size;
  const FieldElement minus_one = -ext.one();
  std::vector<Vec> candidates;
  Vec v(static_cast<size_t>(k), ext.zero());
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (int i = 0; i < k; ++i) {
      v[static_cast<size_t>(i)] = ext.element_at(rest % size);
      rest /= size;
    }
    FieldElement norm = ext.zero();
    for (int i = 0; i < k; ++i) {
      norm = norm + v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    }
    if (norm == minus_one) candidates.push_back(v);
  }
  return candidates;
}

struct ColoringContext {
  int k;
  Field base;
  Field ext;
  std::vector<Vec> candidates;
  std::vector<int> row_order;  ///< processing order, most-assigned rows first
};

bool backtrack(const ColoringContext& ctx, const std::vector<std::optional<FieldElement>>& assigned,
               std::vector<const Vec*>& chosen, int level) {
  if (level == ctx.k) return true;
  const int row = ctx.row_order[static_cast<size_t>(level)];
  for (const Vec& v : ctx.candidates) {
    bool ok = true;
    for (int j = 0; j < ctx.k && ok; ++j) {
      const auto& slot = assigned[static_cast<size_t>(row * ctx.k + j)];
      if (slot.has_value() && v[static_cast<size_t>(j)] != *slot) ok = false;
    }
    for (size_t prev = 0; prev < chosen.size() && ok; ++prev) {
      FieldElement acc = ctx.ext.zero();
      const Vec& w = *chosen[prev];
      for (int j = 0; j < ctx.k; ++j) {
        if (v[static_cast<size_t>(j)].is_zero() || w[static_cast<size_t>(j)].is_zero()) continue;
        acc = acc + v[static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
      }
      if (!acc.is_zero()) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(&v);
    if (backtrack(ctx, assigned, chosen, level + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

/// Can the assignment be completed to rows with Gram -identity over ext?
bool completable(ColoringContext& ctx, const std::vector<std::optional<FieldElement>>& assigned) {
  std::vector<int> assigned_per_row(static_cast<size_t>(ctx.k), 0);
  for (int i = 0; i < ctx.k; ++i) {
    for (int j = 0; j < ctx.k; ++j) {
      if (assigned[static_cast<size_t>(i * ctx.k + j)].has_value()) {
        ++assigned_per_row[static_cast<size_t>(i)];
      }
    }
  }
  ctx.row_order.resize(static_cast<size_t>(ctx.k));
  std::iota(ctx.row_order.begin(), ctx.row_order.end(), 0);
  std::stable_sort(ctx.row_order.begin(), ctx.row_order.end(), [&](int a, int b) {
    return assigned_per_row[static_cast<size_t>(a)] > assigned_per_row[static_cast<size_t>(b)];
  });
  std::vector<const Vec*> chosen;
  return backtrack(ctx, assigned, chosen, 0);
}

/// Decode assignment index `code` (base q) onto the subset slots.
std::vector<std::optional<FieldElement>> decode_assignment(const ColoringContext& ctx,
                                                           const std::vector<int>& subset,
                                                           long long code) {
  std::vector<std::optional<FieldElement>> assigned(
      static_cast<size_t>(ctx.k) * static_cast<size_t>(ctx.k));
  const long long q = ctx.base.size();
  for (int slot : subset) {
    assigned[static_cast<size_t>(slot)] = ctx.base.element_at(code % q).lift();
    code /= q;
  }
  return assigned;
}

/// Exhaustive freeness check: every base-field assignment must complete.
bool subset_free_exhaustive(ColoringContext& ctx, const std::vector<int>& subset,
                            long long* trials) {
  long long total = 1;
  for (size_t i = 0; i < subset.size(); ++i) total *= ctx.base.size();
  for (long long code = 0; code < total; ++code) {
    ++*trials;
    if (!completable(ctx, decode_assignment(ctx, subset, code))) return false;
  }
  return true;
}

}  // namespace

ColoringResult coloring_number(int k, long long q, const ColoringOptions& options) {
  if (k < 1 || k > 3) {
    throw std::invalid_argument("coloring_number supports 1 <= k <= 3");
  }
  ColoringContext ctx{k, Field::prime(q), Field::quadratic(q), {}, {}};
  ctx.candidates = unit_norm_candidates(ctx.ext, k);

  ColoringResult result;
  result.k = k;
  result.q = q;
  result.bound = static_cast<long>(k) * (k - 1) / 2;

  const int slots = k * k;

  // Witness search: canonical strict upper triangle first, then all subsets
  // of the target size in lexicographic order, descending in size until a
  // free subset is found (the empty subset always completes).
  for (long size = result.bound; size >= 0 && result.free_subset.empty() &&
                                 !result.found_free_at_bound;
       --size) {
    std::vector<std::vector<int>> to_try;
    if (size == result.bound && k >= 2) {
      std::vector<int> upper;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) upper.push_back(i * k + j);
      }
      to_try.push_back(upper);
    }
    std::vector<int> combo(static_cast<size_t>(size));
    std::iota(combo.begin(), combo.end(), 0);
    if (size > 0) {
      do {
        to_try.push_back(combo);
      } while (next_combination(combo, slots));
    } else {
      to_try.push_back({});
    }
    for (const auto& subset : to_try) {
      if (subset_free_exhaustive(ctx, subset, &result.trials_run)) {
        result.free_subset = subset;
        result.number = size;
        result.found_free_at_bound = (size == result.bound);
        break;
      }
    }
  }

  // Above the bound only size bound+1 matters: freeness is monotone
  // downward, so a free set of any larger size would contain a free set of
  // this size.
  const long above = result.bound + 1;
  if (above > slots) {
    result.above_bound_exhaustive = true;
    return result;
  }
  std::vector<std::vector<int>> all_above;
  {
    std::vector<int> combo(static_cast<size_t>(above));
    std::iota(combo.begin(), combo.end(), 0);
    do {
      all_above.push_back(combo);
    } while (next_combination(combo, slots));
  }

  if (k <= 2) {
    result.above_bound_exhaustive = true;
    for (const auto& subset : all_above) {
      SubsetCheck check{subset, false, true, 0};
      check.is_free = subset_free_exhaustive(ctx, subset, &check.trials);
      result.trials_run += check.trials;
      if (check.is_free) result.any_free_above_bound = true;
      result.above_bound_checks.push_back(check);
    }
    return result;
  }

  // k = 3: sample subsets; within a subset, sample assignments and stop at
  // the first obstruction; escalate suspected-free subsets to exhaustive.
  std::mt19937_64 rng(options.seed);
  std::shuffle(all_above.begin(), all_above.end(), rng);
  const size_t take = std::min<size_t>(all_above.size(),
                                       static_cast<size_t>(std::max(0L, options.sampled_subsets)));
  long long assignment_space = 1;
  for (long i = 0; i < above; ++i) assignment_space *= q;
  std::uniform_int_distribution<long long> pick(0, assignment_space - 1);
  for (size_t s = 0; s < take; ++s) {
    const auto& subset = all_above[s];
    SubsetCheck check{subset, true, false, 0};
    for (long t = 0; t < options.trials_per_subset && check.is_free; ++t) {
      ++check.trials;
      if (!completable(ctx, decode_assignment(ctx, subset, pick(rng)))) check.is_free = false;
    }
    if (check.is_free) {
      // No sampled obstruction: settle the subset exactly.
      check.trials = 0;
      check.is_free = subset_free_exhaustive(ctx, subset, &check.trials);
      check.exhaustive = true;
    }
    result.trials_run += check.trials;
    if (check.is_free) result.any_free_above_bound = true;
    result.above_bound_checks.push_back(check);
  }
  return result;
}

}  // namespace isocone
