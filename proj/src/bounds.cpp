// SPDX-License-Identifier: MIT
#include "isocone/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isocone {

namespace {

/// Append a formatted counterexample line to `report`.
void record(InequalityReport& report, const std::string& line) {
  report.counterexamples.push_back(line);
}

}  // namespace

long long delta_mhk(long long m, long long h, long long k) {
  if (m < 0 || h < 0) {
    throw std::invalid_argument("delta_mhk: m and h must be nonnegative");
  }
  if (k < 0 || k > std::min(m, h)) {
    throw std::invalid_argument("delta_mhk: k out of range [0, min(m,h)]");
  }
  return (h - k) * (m - k) + k * (k + 1) / 2;
}

long long cone_bound(long long m, long long h) {
  if (m < 0 || h < 0) {
    throw std::invalid_argument("cone_bound: m and h must be nonnegative");
  }
  long long best = delta_mhk(m, h, 0);
  for (long long k = 1; k <= std::min(m, h); ++k) {
    best = std::min(best, delta_mhk(m, h, k));
  }
  return best;
}

long long cone_bound_argmin(long long m, long long h) {
  const long long best = cone_bound(m, h);
  for (long long k = 0; k <= std::min(m, h); ++k) {
    if (delta_mhk(m, h, k) == best) {
      return k;
    }
  }
  throw std::logic_error("cone_bound_argmin: minimum not attained");  // unreachable
}

long long h2_Z(GroupKind kind, long long v2, bool resonant) {
  if (v2 < 0) {
    throw std::invalid_argument("h2_Z: v2 must be nonnegative");
  }
  if (!resonant) {
    return 0;
  }
  return kind == GroupKind::orthogonal ? v2 * (v2 - 1) / 2 : v2 * (v2 + 1) / 2;
}

UnipotentGradedDims unipotent_graded_dims(const ParabolicShape& shape) {
  const ParabolicDims pd = parabolic_dims(shape);
  UnipotentGradedDims out;
  if (shape.kind == GroupKind::unitary) {
    out.dim_v = 2LL * pd.dim_hom_half;
    out.dim_z = pd.dim_center_full;
    out.convention_dependent = true;
  } else {
    out.dim_v = *pd.dim_hom_fixed;
    out.dim_z = *pd.dim_center_fixed;
  }
  out.dim_u = out.dim_v + out.dim_z;
  return out;
}

DimProfile make_dim_profile(const ParabolicShape& shape, int d, long long v0, long long v1,
                            long long v2, long long z0, long long z1, long long z2) {
  if (d < 1) {
    throw std::invalid_argument("make_dim_profile: d must be positive");
  }
  if (v0 < 0 || v1 < 0 || v2 < 0 || z0 < 0 || z1 < 0 || z2 < 0) {
    throw std::invalid_argument("make_dim_profile: cohomology dimensions must be nonnegative");
  }
  const UnipotentGradedDims dims = unipotent_graded_dims(shape);
  if (v1 - v0 - v2 != d * dims.dim_v) {
    throw std::invalid_argument("make_dim_profile: hom-block Euler identity violated");
  }
  if (z1 - z0 - z2 != d * dims.dim_z) {
    throw std::invalid_argument("make_dim_profile: center-block Euler identity violated");
  }
  return DimProfile{v0, v1, v2, z0, z1, z2};
}

long long dim_Yx(const ParabolicShape& scaled_shape, const DimProfile& profile,
                 const DimProfile& profile_prime, long long delta_x, int d, bool resonant) {
  if (delta_x < 0) {
    throw std::invalid_argument("dim_Yx: delta_x must be nonnegative");
  }
  if (d < 1) {
    throw std::invalid_argument("dim_Yx: d must be positive");
  }
  if (profile_prime.v2 < 0) {
    throw std::invalid_argument("dim_Yx: profile_prime.v2 must be nonnegative");
  }
  // Re-validate `profile` against the shape (it may have been built bare).
  (void)make_dim_profile(scaled_shape, d, profile.v0, profile.v1, profile.v2, profile.z0,
                         profile.z1, profile.z2);
  const long long v2 = profile.v2;
  const long long v2p = profile_prime.v2;
  const long long h2 = h2_Z(scaled_shape.kind, v2, resonant);
  if (profile.z2 != h2) {
    throw std::invalid_argument("dim_Yx: profile.z2 disagrees with the center-block H^2 table");
  }
  const UnipotentGradedDims dims = unipotent_graded_dims(scaled_shape);
  const long long second = v2 * v2p - v2 * v2 - delta_x + d * dims.dim_u + h2;
  const long long first =
      v2 * v2p + d * dims.dim_v - delta_x + h2 + d * dims.dim_z - v2 * v2;
  if (first != second) {
    throw std::logic_error("dim_Yx: the two display lines disagree (dim U != dim V + dim Z)");
  }
  return second;
}

long long induction_rhs(long long delta_prev, long long delta_x, long long v2, long long v2prime,
                        long long m, int d, long long h2z) {
  if (delta_x < 0 || v2 < 0 || v2prime < 0 || m < 0 || h2z < 0) {
    throw std::invalid_argument("induction_rhs: inputs must be nonnegative");
  }
  if (d < 1) {
    throw std::invalid_argument("induction_rhs: d must be positive");
  }
  const long long r = v2 * m;
  return delta_prev + delta_x - v2 * v2prime + v2 * v2 + d * r * (r - 1) / 2 - h2z;
}

long long induction_rhs_weak_x2(long long prev_term_x2, long long delta_x, long long v2,
                                long long m, long long h2z) {
  if (delta_x < 0 || v2 < 0 || m < 0 || h2z < 0) {
    throw std::invalid_argument("induction_rhs_weak_x2: inputs must be nonnegative");
  }
  return prev_term_x2 + 2 * delta_x + v2 * (v2 - 1) - 2 * h2z + m * (m - 1) * v2;
}

long long ell_bound_adjoint(GroupKind kind, int v2, int m) {
  if (m < 1) {
    throw std::invalid_argument("ell_bound_adjoint: m must be positive");
  }
  return ell_bound(kind, v2);
}

std::pair<long long, long long> ell_bound_variants(GroupKind kind, int v2) {
  const long long base = ell_bound(kind, v2);
  if (kind == GroupKind::unitary) {
    return {base, -1 - (aut_dim_table(kind, v2) - 1)};
  }
  return {base, base};
}

InequalityReport check_cor_cone(int m_max, int h_max) {
  InequalityReport report;
  report.id = "cor-cone";
  std::ostringstream ranges;
  ranges << "1<=m<=" << m_max << ", 1<=h<=" << h_max;
  report.ranges = ranges.str();
  for (long long m = 1; m <= m_max; ++m) {
    for (long long h = 1; h <= h_max; ++h) {
      ++report.cases_checked;
      const long long bound = cone_bound(m, h);
      if (h >= m) {
        const long long floor_third = (m * m + m + 2) / 3;  // ceil((m^2+m)/3)
        if (bound < floor_third) {
          std::ostringstream os;
          os << "m=" << m << " h=" << h << ": bound " << bound << " < ceil((m^2+m)/3)="
             << floor_third;
          record(report, os.str());
        }
        if (bound < m) {
          std::ostringstream os;
          os << "m=" << m << " h=" << h << ": bound " << bound << " < m";
          record(report, os.str());
        }
      }
      if (m == 2) {
        const long long expected = std::min<long long>(3, std::min(h, 2 * h));
        if (bound != expected) {
          std::ostringstream os;
          os << "m=2 h=" << h << ": bound " << bound << " != min(3,h,2h)=" << expected;
          record(report, os.str());
        }
      }
      // Minimizer location: every minimizing k is within distance 1 of the
      // clamped critical point (m+h)/3 - 1/6.  Scaled by 6 to stay integral:
      // 6k* = 2(m+h) - 1, clamp to [0, 6*min(m,h)], compare |6k - clamp| <= 6.
      const long long target6 =
          std::clamp<long long>(2 * (m + h) - 1, 0, 6 * std::min(m, h));
      for (long long k = 0; k <= std::min(m, h); ++k) {
        if (delta_mhk(m, h, k) == bound && std::llabs(6 * k - target6) > 6) {
          std::ostringstream os;
          os << "m=" << m << " h=" << h << ": minimizer k=" << k
             << " farther than 1 from clamp((m+h)/3-1/6)";
          record(report, os.str());
        }
      }
    }
  }
  return report;
}

InequalityReport check_universal(int d_max, int m_max, int v2_max, int v2p_max) {
  InequalityReport report;
  report.id = "universal-induction";
  std::ostringstream ranges;
  ranges << "1<=d<=" << d_max << ", 1<=m<=" << m_max << ", 0<=v2<=" << v2_max << ", 0<=v2'<="
         << v2p_max << ", all kinds, both resonance flags";
  report.ranges = ranges.str();

  // (a) the m-inequality absorbed when weakening the induction step.
  for (long long d = 1; d <= d_max; ++d) {
    for (long long m = 1; m <= m_max; ++m) {
      for (long long v2 = 0; v2 <= v2_max; ++v2) {
        ++report.cases_checked;
        const long long r = v2 * m;
        if (d * r * (r - 1) - v2 * (v2 - 1) < v2 * m * (m - 1)) {
          std::ostringstream os;
          os << "m-inequality fails: d=" << d << " m=" << m << " v2=" << v2;
          record(report, os.str());
        }
      }
    }
  }

  // (b) the half-square identity, doubled.
  for (long long v2 = 0; v2 <= v2_max; ++v2) {
    for (long long v2p = 0; v2p <= v2p_max; ++v2p) {
      ++report.cases_checked;
      const long long lhs = 2 * (v2 * v2 - v2 * v2p);
      const long long square_split = (v2 * v2 - v2p * v2p) + (v2 - v2p) * (v2 - v2p);
      if (lhs != square_split || lhs < v2 * v2 - v2p * v2p) {
        std::ostringstream os;
        os << "half-square identity fails: v2=" << v2 << " v2'=" << v2p;
        record(report, os.str());
      }
    }
  }

  const GroupKind kinds[] = {GroupKind::symplectic, GroupKind::orthogonal, GroupKind::unitary};

  // (c) the delta_x-term bound, under the cone-corollary hypothesis that
  // delta_x >= v2 when m = 1 in the resonant symplectic/unitary case.
  for (GroupKind kind : kinds) {
    for (int res = 0; res <= 1; ++res) {
      const bool resonant = res == 1;
      for (long long m = 1; m <= m_max; ++m) {
        for (long long v2 = 0; v2 <= v2_max; ++v2) {
          const long long h2z = h2_Z(kind, v2, resonant);
          const long long delta_lo =
              (m == 1 && resonant && kind != GroupKind::orthogonal) ? v2 : 0;
          for (long long delta_x = delta_lo; delta_x <= delta_lo + 6; ++delta_x) {
            ++report.cases_checked;
            const long long lhs_x2 = 2 * delta_x + v2 * (v2 - 1) - 2 * h2z + m * (m - 1) * v2;
            const long long min_x2 = std::min(2 * delta_x, m * (m - 1) * v2);
            if (lhs_x2 < min_x2 || min_x2 < 0) {
              std::ostringstream os;
              os << "delta_x-term fails: kind=" << group_kind_name(kind)
                 << " resonant=" << resonant << " m=" << m << " v2=" << v2
                 << " delta_x=" << delta_x;
              record(report, os.str());
            }
          }
        }
      }
    }
  }

  // (d) the strong induction right-hand side dominates the weakened one.
  for (GroupKind kind : kinds) {
    for (int res = 0; res <= 1; ++res) {
      for (long long d = 1; d <= d_max; ++d) {
        for (long long m = 1; m <= m_max; ++m) {
          for (long long v2 = 0; v2 <= v2_max; ++v2) {
            for (long long v2p = 0; v2p <= v2p_max; ++v2p) {
              const long long h2z = h2_Z(kind, v2, res == 1);
              for (long long delta_prev : {0LL, 3LL}) {
                for (long long delta_x : {0LL, 2LL}) {
                  ++report.cases_checked;
                  const long long strong = induction_rhs(delta_prev, delta_x, v2, v2p, m,
                                                         static_cast<int>(d), h2z);
                  const long long weak = induction_rhs_weak_x2(2 * delta_prev - v2p * v2p,
                                                               delta_x, v2, m, h2z);
                  if (2 * strong - v2 * v2 < weak) {
                    std::ostringstream os;
                    os << "weakening reversed: kind=" << group_kind_name(kind)
                       << " resonant=" << res << " d=" << d << " m=" << m << " v2=" << v2
                       << " v2'=" << v2p;
                    record(report, os.str());
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

namespace {

/// Shared degeneration sweep; `kind` decides parity filtering and the report
/// label.  The asserted flag is set by the public wrappers.
InequalityReport degen_sweep(GroupKind kind, int d_max, int n_max) {
  InequalityReport report;
  report.id = std::string("degeneration-") + group_kind_name(kind);
  std::ostringstream ranges;
  ranges << "1<=d<=" << d_max << ", 1<=n<=" << n_max
         << ", 1<=m<=n/2, splits v2=v2a+v2i with n >= 2*v2i*m + v2a*m";
  report.ranges = ranges.str();
  const bool need_even = kind == GroupKind::symplectic;
  for (int d = 1; d <= d_max; ++d) {
    for (int n = 1; n <= n_max; ++n) {
      if (need_even && n % 2 != 0) {
        continue;
      }
      const long long un = borel_unipotent_dim(GroupShape(kind, n, d));
      for (int m = 1; 2 * m <= n; ++m) {
        for (int v2a = 0; v2a * m <= n; ++v2a) {
          if (need_even && (v2a * m) % 2 != 0) {
            continue;  // both u subscripts n - v2a*m and v2a*m must be even
          }
          const long long u_cut = borel_unipotent_dim(GroupShape(kind, n - v2a * m, d));
          const long long u_block = borel_unipotent_dim(GroupShape(kind, v2a * m, d));
          for (int v2i = 0; 2 * v2i * m + v2a * m <= n; ++v2i) {
            ++report.cases_checked;
            const long long v2 = v2a + v2i;
            const long long lhs = v2 * v2;
            const long long rhs = static_cast<long long>(v2i) * v2i +
                                  static_cast<long long>(v2a) * v2a +
                                  2 * (un - u_cut - u_block);
            if (lhs > rhs) {
              std::ostringstream os;
              os << "degeneration fails: d=" << d << " n=" << n << " m=" << m
                 << " v2a=" << v2a << " v2i=" << v2i << ": " << lhs << " > " << rhs;
              record(report, os.str());
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace

InequalityReport check_degen(int d_max, int n_max) {
  InequalityReport sympl = degen_sweep(GroupKind::symplectic, d_max, n_max);
  InequalityReport orth = degen_sweep(GroupKind::orthogonal, d_max, n_max);
  InequalityReport merged;
  merged.id = "degeneration";
  merged.ranges = sympl.ranges + "; symplectic and orthogonal";
  merged.cases_checked = sympl.cases_checked + orth.cases_checked;
  merged.counterexamples = std::move(sympl.counterexamples);
  merged.counterexamples.insert(merged.counterexamples.end(), orth.counterexamples.begin(),
                                orth.counterexamples.end());
  return merged;
}

InequalityReport check_degen_unitary(int d_max, int n_max) {
  InequalityReport report = degen_sweep(GroupKind::unitary, d_max, n_max);
  report.asserted = false;  // fixed-block convention unsettled; report only
  return report;
}

InequalityReport check_thm_universal_base(int v2_max) {
  InequalityReport report;
  report.id = "universal-base";
  std::ostringstream ranges;
  ranges << "0<=v2<=" << v2_max << ", n=2*v2..2*v2+2 per kind at d=1, corner 4<=n<=60";
  report.ranges = ranges.str();

  for (long long v2 = 0; v2 <= v2_max; ++v2) {
    ++report.cases_checked;
    if (2 * (v2 * v2 - v2 + 1) < v2 * v2) {
      std::ostringstream os;
      os << "base arithmetic fails: v2=" << v2;
      record(report, os.str());
    }
  }

  const GroupKind kinds[] = {GroupKind::symplectic, GroupKind::orthogonal, GroupKind::unitary};
  for (long long v2 = 1; v2 <= v2_max; ++v2) {
    for (GroupKind kind : kinds) {
      for (int n = static_cast<int>(2 * v2); n <= 2 * v2 + 2; ++n) {
        if (kind == GroupKind::symplectic && n % 2 != 0) {
          continue;
        }
        ++report.cases_checked;
        const long long un = borel_unipotent_dim(GroupShape(kind, n, 1));
        if (un < v2 * v2 - v2) {
          std::ostringstream os;
          os << "u_n window fails: kind=" << group_kind_name(kind) << " v2=" << v2
             << " n=" << n << ": u_n=" << un << " < " << v2 * v2 - v2;
          record(report, os.str());
        }
      }
    }
  }

  for (int n = 4; n <= 60; ++n) {
    ++report.cases_checked;
    if (std::min(3, 1 + n - 2) != 3) {
      std::ostringstream os;
      os << "m=2 corner fails: n=" << n;
      record(report, os.str());
    }
  }
  return report;
}

std::vector<InequalityReport> check_all() {
  std::vector<InequalityReport> out;
  out.push_back(check_cor_cone());
  out.push_back(check_universal());
  out.push_back(check_degen());
  out.push_back(check_thm_universal_base());
  out.push_back(check_degen_unitary());
  return out;
}

}  // namespace isocone
