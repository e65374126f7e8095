// SPDX-License-Identifier: MIT
#include "isocone/cone.hpp"

#include <cstdlib>
#include <string>

#include "isocone/linalg.hpp"

namespace isocone {

namespace {

constexpr long long kNaiveCap = 1'000'000;

/// Decode a tuple index into a vector over f: digit i (base q) is entry i.
void decode_vec(const Field& f, long long index, Vec& out) {
  const long long q = f.size();
  for (auto& entry : out) {
    entry = f.element_at(index % q);
    index /= q;
  }
}

/// v^T * G * w with zero-skipping on both v and the Gram row.
FieldElement pair_raw(const Matrix& gram, const Vec& v, const Vec& w) {
  const Field& f = gram.field();
  FieldElement acc = f.zero();
  const int h = gram.rows();
  for (int i = 0; i < h; ++i) {
    if (v[static_cast<size_t>(i)].is_zero()) continue;
    FieldElement row_acc = f.zero();
    for (int j = 0; j < h; ++j) {
      const FieldElement& g = gram.at(i, j);
      if (g.is_zero() || w[static_cast<size_t>(j)].is_zero()) continue;
      row_acc = row_acc + g * w[static_cast<size_t>(j)];
    }
    if (!row_acc.is_zero()) acc = acc + v[static_cast<size_t>(i)] * row_acc;
  }
  return acc;
}

/// G * v, precomputed once per accepted row so that extending a prefix only
/// costs one dot product per previous row.
Vec gram_times(const Matrix& gram, const Vec& v) {
  const Field& f = gram.field();
  const int h = gram.rows();
  Vec out(static_cast<size_t>(h), f.zero());
  for (int i = 0; i < h; ++i) {
    FieldElement acc = f.zero();
    for (int j = 0; j < h; ++j) {
      const FieldElement& g = gram.at(i, j);
      if (g.is_zero() || v[static_cast<size_t>(j)].is_zero()) continue;
      acc = acc + g * v[static_cast<size_t>(j)];
    }
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

FieldElement dot_skip(const Field& f, const Vec& a, const Vec& b) {
  FieldElement acc = f.zero();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc = acc + a[i] * b[i];
  }
  return acc;
}

long long checked_budget_gate(const BigInt& nominal, const Budget& budget) {
  if (budget.max_membership_tests <= 0) {
    throw std::invalid_argument("budget must be positive");
  }
  if (nominal > BigInt(budget.max_membership_tests)) {
    throw BudgetExceeded(nominal, budget.max_membership_tests);
  }
  return budget.max_membership_tests;
}

/// Count rows extending `prefix` to a full cone member, depth-first.
unsigned long long extend_count(const ConeInstance& inst, std::vector<Vec>& prefix,
                                std::vector<Vec>& gram_rows) {
  const Field& f = inst.space.field();
  const Matrix& gram = inst.space.gram();
  const bool symmetric = inst.space.kind() == FormKind::symmetric;
  const long long q = f.size();
  const int h = inst.h();
  long long vector_space = 1;
  for (int i = 0; i < h; ++i) vector_space *= q;

  const int depth = static_cast<int>(prefix.size());
  Vec candidate(static_cast<size_t>(h), f.zero());
  unsigned long long total = 0;
  for (long long idx = 0; idx < vector_space; ++idx) {
    decode_vec(f, idx, candidate);
    if (symmetric && !pair_raw(gram, candidate, candidate).is_zero()) continue;
    bool ok = true;
    for (const Vec& gr : gram_rows) {
      if (!dot_skip(f, candidate, gr).is_zero()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth + 1 == inst.m) {
      ++total;
      continue;
    }
    prefix.push_back(candidate);
    gram_rows.push_back(gram_times(gram, candidate));
    total += extend_count(inst, prefix, gram_rows);
    gram_rows.pop_back();
    prefix.pop_back();
  }
  return total;
}

long min_codim_over_strata(FormKind kind, int h, int m) {
  long best = static_cast<long>(h) * m;  // k = 0 stratum
  const int k_max = std::min(m, h);
  for (int k = 1; k <= k_max; ++k) {
    const long half_square = kind == FormKind::symmetric
                                 ? static_cast<long>(k) * (k + 1) / 2
                                 : static_cast<long>(k) * (k - 1) / 2;
    const long value = static_cast<long>(h - k) * (m - k) + half_square;
    best = std::min(best, value);
  }
  return best;
}

}  // namespace

Budget budget_from_env() {
  Budget budget;
  const char* raw = std::getenv("ISOCONE_BUDGET");
  if (raw == nullptr || *raw == '\0') return budget;
  try {
    size_t used = 0;
    const long long value = std::stoll(raw, &used);
    if (used != std::string(raw).size() || value <= 0) {
      throw std::invalid_argument("not a positive integer");
    }
    budget.max_membership_tests = value;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("ISOCONE_BUDGET must be a positive integer, got '") +
                                raw + "'");
  }
  return budget;
}

BudgetExceeded::BudgetExceeded(const BigInt& cost, long long limit)
    : std::runtime_error("enumeration cost " + big_str(cost) + " exceeds budget " +
                         std::to_string(limit)),
      cost_(cost) {}

ConeInstance::ConeInstance(const BilinearSpace& s, int m_rows) : space(s), m(m_rows) {
  if (m < 0) throw std::invalid_argument("tuple length m must be non-negative");
}

BigInt ConeInstance::nominal_cost() const {
  return big_pow(space.field().size(), ambient_dim());
}

bool is_in_cone(const ConeInstance& inst, const Matrix& rows) {
  if (rows.rows() != inst.m || rows.cols() != inst.h()) {
    throw std::invalid_argument("cone membership needs an m x h matrix of rows");
  }
  return inst.space.is_totally_isotropic_rows(rows);
}

BigInt count_cone(const ConeInstance& inst, const Budget& budget, const ShardSpec& shard) {
  checked_budget_gate(inst.nominal_cost(), budget);
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) {
    throw std::invalid_argument("shard index must satisfy 0 <= index < count");
  }
  if (inst.m == 0) return shard.index == 0 ? 1 : 0;

  const Field& f = inst.space.field();
  const Matrix& gram = inst.space.gram();
  const bool symmetric = inst.space.kind() == FormKind::symmetric;
  const long long q = f.size();
  const int h = inst.h();
  long long vector_space = 1;
  for (int i = 0; i < h; ++i) vector_space *= q;

  Vec first(static_cast<size_t>(h), f.zero());
  std::vector<Vec> prefix;
  std::vector<Vec> gram_rows;
  unsigned long long total = 0;
  for (long long idx = shard.index; idx < vector_space; idx += shard.count) {
    decode_vec(f, idx, first);
    if (symmetric && !pair_raw(gram, first, first).is_zero()) continue;
    if (inst.m == 1) {
      ++total;
      continue;
    }
    prefix.push_back(first);
    gram_rows.push_back(gram_times(gram, first));
    total += extend_count(inst, prefix, gram_rows);
    gram_rows.pop_back();
    prefix.pop_back();
  }
  return BigInt(total);
}

BigInt count_cone_naive(const ConeInstance& inst) {
  if (inst.nominal_cost() > BigInt(kNaiveCap)) {
    throw std::invalid_argument("count_cone_naive is a desk-scale oracle: q^(h*m) must be <= 1e6");
  }
  const Field& f = inst.space.field();
  const long long q = f.size();
  const int h = inst.h();
  long long tuples = 1;
  for (long i = 0; i < inst.ambient_dim(); ++i) tuples *= q;

  BigInt total = 0;
  Matrix rows(f, inst.m, h);
  for (long long idx = 0; idx < tuples; ++idx) {
    long long rest = idx;
    for (int r = 0; r < inst.m; ++r) {
      for (int c = 0; c < h; ++c) {
        rows.set(r, c, f.element_at(rest % q));
        rest /= q;
      }
    }
    if (is_in_cone(inst, rows)) ++total;
  }
  return total;
}

std::vector<StratumTerm> cone_strata(const ConeInstance& inst) {
  const long long q = inst.space.field().size();
  const int k_max = std::min(inst.m, witt_index(inst.space));
  std::vector<StratumTerm> strata;
  for (int k = 0; k <= k_max; ++k) {
    StratumTerm term;
    term.k = k;
    term.subspaces = isotropic_subspace_count(inst.space, k);
    term.tuples_per_subspace = 1;
    for (int i = 0; i < k; ++i) {
      term.tuples_per_subspace *= big_pow(q, inst.m) - big_pow(q, i);
    }
    term.total = term.subspaces * term.tuples_per_subspace;
    term.dim = static_cast<long>(k) * inst.m + iso_grassmannian_dim(inst.space.kind(), inst.h(), k);
    strata.push_back(term);
  }
  return strata;
}

BigInt count_cone_stratified(const ConeInstance& inst) {
  BigInt total = 0;
  for (const StratumTerm& term : cone_strata(inst)) total += term.total;
  return total;
}

long cone_dim(const ConeInstance& inst) {
  const int k_max = std::min(inst.m, witt_index(inst.space));
  long best = 0;
  for (int k = 0; k <= k_max; ++k) {
    best = std::max(best, static_cast<long>(k) * inst.m +
                              iso_grassmannian_dim(inst.space.kind(), inst.h(), k));
  }
  return best;
}

long cone_codim(const ConeInstance& inst) { return inst.ambient_dim() - cone_dim(inst); }

ResolutionGap resolution_gap(const ConeInstance& inst, int k) {
  if (k < 0 || k > inst.m) throw std::invalid_argument("resolution rank k must satisfy 0 <= k <= m");
  const long long q = inst.space.field().size();
  ConeInstance sub(inst.space, k);
  ResolutionGap gap;
  gap.k = k;
  const BigInt chooser = gaussian_binomial(inst.m, k, q);
  gap.total = chooser * big_pow(q, static_cast<long>(k) * inst.h());
  gap.in_cone = chooser * count_cone_stratified(sub);
  gap.ambient = static_cast<long>(k) * inst.h();
  gap.cone_part = cone_dim(sub);
  gap.gap = gap.ambient - gap.cone_part;
  gap.lower_bound = inst.space.kind() == FormKind::symmetric
                        ? static_cast<long>(k) * (k + 1) / 2
                        : static_cast<long>(k) * (k - 1) / 2;
  gap.precondition_met = k <= std::min(inst.m, witt_index(inst.space));
  gap.bound_holds = gap.gap >= gap.lower_bound;
  return gap;
}

BiorthInstance::BiorthInstance(const BilinearSpace& s, int m_rows) : space(s), m(m_rows) {
  if (m < 0) throw std::invalid_argument("tuple length m must be non-negative");
}

BigInt BiorthInstance::nominal_cost() const {
  return big_pow(space.field().size(), ambient_dim());
}

bool is_in_biorth(const BiorthInstance& inst, const Matrix& u, const Matrix& v) {
  if (u.rows() != inst.m || u.cols() != inst.h() || v.rows() != inst.m || v.cols() != inst.h()) {
    throw std::invalid_argument("biorthogonal membership needs two m x h matrices");
  }
  const Matrix& gram = inst.space.gram();
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      if (!pair_raw(gram, u.row_copy(i), v.row_copy(j)).is_zero()) return false;
    }
  }
  return true;
}

BigInt count_biorth(const BiorthInstance& inst, const Budget& budget) {
  checked_budget_gate(inst.nominal_cost(), budget);
  const Field& f = inst.space.field();
  const long long q = f.size();
  const int h = inst.h();
  long long v_tuples = 1;
  for (long i = 0; i < static_cast<long>(h) * inst.m; ++i) v_tuples *= q;

  // q^(m*(h-r)) u-side solutions for each v-side rank r.
  std::vector<BigInt> u_solutions;
  for (int r = 0; r <= std::min(inst.m, h); ++r) {
    u_solutions.push_back(big_pow(q, static_cast<long>(inst.m) * (h - r)));
  }

  BigInt total = 0;
  Matrix v_rows(f, inst.m, h);
  for (long long idx = 0; idx < v_tuples; ++idx) {
    long long rest = idx;
    for (int r = 0; r < inst.m; ++r) {
      for (int c = 0; c < h; ++c) {
        v_rows.set(r, c, f.element_at(rest % q));
        rest /= q;
      }
    }
    // The u-side constraint matrix is (G v_j)^T stacked; G is invertible, so
    // its rank equals the rank of the v-side rows themselves.
    total += u_solutions[static_cast<size_t>(rank(v_rows))];
  }
  return total;
}

BigInt count_biorth_naive(const BiorthInstance& inst) {
  if (inst.nominal_cost() > BigInt(kNaiveCap)) {
    throw std::invalid_argument(
        "count_biorth_naive is a desk-scale oracle: q^(2*h*m) must be <= 1e6");
  }
  const Field& f = inst.space.field();
  const long long q = f.size();
  const int h = inst.h();
  long long side = 1;
  for (long i = 0; i < static_cast<long>(h) * inst.m; ++i) side *= q;

  BigInt total = 0;
  Matrix u_rows(f, inst.m, h);
  Matrix v_rows(f, inst.m, h);
  for (long long u_idx = 0; u_idx < side; ++u_idx) {
    long long rest = u_idx;
    for (int r = 0; r < inst.m; ++r) {
      for (int c = 0; c < h; ++c) {
        u_rows.set(r, c, f.element_at(rest % q));
        rest /= q;
      }
    }
    for (long long v_idx = 0; v_idx < side; ++v_idx) {
      long long v_rest = v_idx;
      for (int r = 0; r < inst.m; ++r) {
        for (int c = 0; c < h; ++c) {
          v_rows.set(r, c, f.element_at(v_rest % q));
          v_rest /= q;
        }
      }
      if (is_in_biorth(inst, u_rows, v_rows)) ++total;
    }
  }
  return total;
}

std::vector<StratumTerm> biorth_strata(const BiorthInstance& inst) {
  const long long q = inst.space.field().size();
  const int h = inst.h();
  std::vector<StratumTerm> strata;
  for (int k = 0; k <= std::min(inst.m, h); ++k) {
    StratumTerm term;
    term.k = k;
    term.subspaces = gaussian_binomial(h, k, q);
    term.tuples_per_subspace = big_pow(q, static_cast<long>(inst.m) * (h - k));
    for (int i = 0; i < k; ++i) {
      term.tuples_per_subspace *= big_pow(q, inst.m) - big_pow(q, i);
    }
    term.total = term.subspaces * term.tuples_per_subspace;
    term.dim = static_cast<long>(k) * (h - k) + static_cast<long>(k) * inst.m +
               static_cast<long>(inst.m) * (h - k);
    strata.push_back(term);
  }
  return strata;
}

BigInt count_biorth_stratified(const BiorthInstance& inst) {
  BigInt total = 0;
  for (const StratumTerm& term : biorth_strata(inst)) total += term.total;
  return total;
}

long biorth_dim(const BiorthInstance& inst) {
  long best = 0;
  for (const StratumTerm& term : biorth_strata(inst)) best = std::max(best, term.dim);
  return best;
}

long biorth_codim(const BiorthInstance& inst) { return inst.ambient_dim() - biorth_dim(inst); }

long biorth_codim_formula(int h, int m) {
  if (h < 0 || m < 0) throw std::invalid_argument("h and m must be non-negative");
  long best = static_cast<long>(m) * h;  // k = 0
  for (int k = 1; k <= std::min(m, h); ++k) {
    best = std::min(best, static_cast<long>(m - k) * h + static_cast<long>(k) * k);
  }
  return best;
}

namespace {

CountReport base_report(const std::string& model, const BilinearSpace& space, int m, long ambient) {
  CountReport report;
  report.model = model;
  report.form_kind = space.kind() == FormKind::symmetric ? "symmetric" : "alternating";
  report.h = space.dim();
  report.m = m;
  report.q = space.field().size();
  report.ambient = ambient;
  return report;
}

}  // namespace

CountReport cone_report(const ConeInstance& inst, const Budget& budget) {
  return cone_report(inst, budget, 1);
}

CountReport cone_report(const ConeInstance& inst, const Budget& budget, int shard_count) {
  if (shard_count < 1) {
    throw std::invalid_argument("cone_report: shard count must be positive");
  }
  CountReport report = base_report("tuple", inst.space, inst.m, inst.ambient_dim());
  report.strata = cone_strata(inst);
  report.cone_points = count_cone_stratified(inst);
  report.dim = cone_dim(inst);
  report.codim = cone_codim(inst);
  report.bound = min_codim_over_strata(inst.space.kind(), inst.h(), inst.m);
  report.bound_satisfied = report.codim >= report.bound;
  try {
    BigInt brute = 0;
    for (int shard = 0; shard < shard_count; ++shard) {
      brute += count_cone(inst, budget, ShardSpec{shard, shard_count});
    }
    if (brute != report.cone_points) {
      throw std::logic_error("cone count mismatch: enumeration " + big_str(brute) +
                             " vs closed form " + big_str(report.cone_points));
    }
    report.status = "ok";
  } catch (const BudgetExceeded&) {
    report.status = "skipped-budget";
  }
  return report;
}

CountReport biorth_report(const BiorthInstance& inst, const Budget& budget) {
  CountReport report = base_report("biorthogonal", inst.space, inst.m, inst.ambient_dim());
  report.strata = biorth_strata(inst);
  report.cone_points = count_biorth_stratified(inst);
  report.dim = biorth_dim(inst);
  report.codim = biorth_codim(inst);
  report.bound = biorth_codim_formula(inst.h(), inst.m);
  report.bound_satisfied = report.codim >= report.bound;
  try {
    const BigInt brute = count_biorth(inst, budget);
    if (brute != report.cone_points) {
      throw std::logic_error("biorthogonal count mismatch: enumeration " + big_str(brute) +
                             " vs closed form " + big_str(report.cone_points));
    }
    report.status = "ok";
  } catch (const BudgetExceeded&) {
    report.status = "skipped-budget";
  }
  return report;
}

long exercise_bound(long m, long s, long t, long dK) {
  if (m < 0 || s < 0 || t < 0 || dK < 0) {
    throw std::invalid_argument("exercise_bound: inputs must be nonnegative");
  }
  long best = m * m;  // k = 0
  for (long k = 1; k <= m; ++k) {
    best = std::min(best, (m - k) * (m - k) + k * (s + t + dK * m));
  }
  return best;
}

}  // namespace isocone
