// SPDX-License-Identifier: MIT
#include "isocone/forms.hpp"

#include <functional>
#include <stdexcept>

namespace isocone {

namespace {

constexpr long long kEnumBudget = 1'000'000;  // q^h cap for brute-force walks

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

const char* form_kind_name(FormKind k) {
  return k == FormKind::symmetric ? "symmetric" : "alternating";
}

BilinearSpace BilinearSpace::symmetric(const Matrix& gram) {
  require(gram.rows() == gram.cols(), "Gram matrix must be square");
  require(gram == gram.transpose(), "symmetric space needs a symmetric Gram matrix");
  if (gram.rows() > 0 && det(gram).is_zero()) {
    throw std::invalid_argument("degenerate Gram matrix");
  }
  return BilinearSpace(FormKind::symmetric, gram);
}

BilinearSpace BilinearSpace::alternating(const Matrix& gram) {
  require(gram.rows() == gram.cols(), "Gram matrix must be square");
  require(gram.rows() % 2 == 0, "alternating space needs even dimension");
  require(gram == -gram.transpose(), "alternating space needs an antisymmetric Gram matrix");
  for (int i = 0; i < gram.rows(); ++i) {
    require(gram.at(i, i).is_zero(), "alternating Gram matrix needs a zero diagonal");
  }
  if (gram.rows() > 0 && det(gram).is_zero()) {
    throw std::invalid_argument("degenerate Gram matrix");
  }
  return BilinearSpace(FormKind::alternating, gram);
}

BilinearSpace BilinearSpace::split_symmetric(const Field& f, int h) {
  return symmetric(antidiag(f, h));
}

BilinearSpace BilinearSpace::split_alternating(const Field& f, int h) {
  return alternating(antidiag_signed(f, h));
}

BilinearSpace BilinearSpace::identity_symmetric(const Field& f, int h) {
  return symmetric(Matrix::identity(f, h));
}

FieldElement BilinearSpace::pair(const Vec& u, const Vec& v) const {
  require(static_cast<int>(u.size()) == dim() && static_cast<int>(v.size()) == dim(),
          "vector length must equal the space dimension");
  return dot(u, mat_vec(gram_, v));
}

FieldElement BilinearSpace::norm(const Vec& u) const { return pair(u, u); }

bool BilinearSpace::is_isotropic_vector(const Vec& u) const { return norm(u).is_zero(); }

bool BilinearSpace::is_totally_isotropic_rows(const Matrix& rows) const {
  require(rows.cols() == dim(), "row length must equal the space dimension");
  const int k = rows.rows();
  const int h = dim();
  // Allocation-free pairing with zero skipping: this sits in the hot loop of
  // the brute-force subspace counters, and sparse Gram matrices (the split
  // antidiagonal fixtures) reduce each pairing from h^2 to h products.
  for (int i = 0; i < k; ++i) {
    for (int j = (kind_ == FormKind::symmetric ? i : i + 1); j < k; ++j) {
      FieldElement acc = gram_.field().zero();
      for (int a = 0; a < h; ++a) {
        const FieldElement& ria = rows.at(i, a);
        if (ria.is_zero()) continue;
        for (int b = 0; b < h; ++b) {
          const FieldElement& gab = gram_.at(a, b);
          if (gab.is_zero()) continue;
          acc = acc + ria * gab * rows.at(j, b);
        }
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

BilinearSpace BilinearSpace::lifted() const { return BilinearSpace(kind_, gram_.lifted()); }

namespace {

struct Diagonalization {
  std::vector<Vec> basis;        // pairwise orthogonal rows
  std::vector<FieldElement> d;   // norms, all nonzero
};

// Phase one of gram_schmidt: pairwise-orthogonal basis with nonzero norms,
// entirely within the space's own field.  The repair step keeps the leading
// vector anisotropic: v + t*w has norm 2t*pair(v,w) + t^2*norm(w), a degree
// <= 2 polynomial in t vanishing at t = 0, so some t in {1, 2} works when
// the field has at least three scalars.
Diagonalization diagonalize(const BilinearSpace& space) {
  require(space.kind() == FormKind::symmetric, "diagonalization applies to symmetric spaces");
  const Field& f = space.field();
  std::vector<Vec> remaining;
  for (int i = 0; i < space.dim(); ++i) {
    Vec e = zero_vec(f, space.dim());
    e[static_cast<size_t>(i)] = f.one();
    remaining.push_back(std::move(e));
  }
  Diagonalization out;
  while (!remaining.empty()) {
    Vec v = remaining.front();
    if (space.norm(v).is_zero()) {
      size_t partner = 0;
      for (size_t j = 1; j < remaining.size(); ++j) {
        if (!space.pair(v, remaining[j]).is_zero()) {
          partner = j;
          break;
        }
      }
      if (partner == 0) throw std::logic_error("isotropic vector orthogonal to its complement");
      bool repaired = false;
      for (long long t = 1; t <= 2 && !repaired; ++t) {
        Vec cand = vec_add(v, vec_scaled(remaining[partner], f.from_int(t)));
        if (!space.norm(cand).is_zero()) {
          v = cand;
          repaired = true;
        }
      }
      if (!repaired) throw std::logic_error("repair step failed; is p >= 3?");
    }
    FieldElement d = space.norm(v);
    std::vector<Vec> next;
    for (size_t j = 1; j < remaining.size(); ++j) {
      FieldElement c = space.pair(remaining[j], v) / d;
      next.push_back(vec_sub(remaining[j], vec_scaled(v, c)));
    }
    out.basis.push_back(std::move(v));
    out.d.push_back(d);
    remaining = std::move(next);
  }
  return out;
}

}  // namespace

OrthonormalBasisResult gram_schmidt(const BilinearSpace& space) {
  Diagonalization diag = diagonalize(space);
  const Field& f = space.field();
  bool escalate = false;
  for (const auto& d : diag.d) {
    if (!d.is_square()) escalate = true;
  }
  if (escalate && f.degree() != 1) {
    throw std::domain_error("orthonormalization needs a root outside the quadratic extension");
  }
  Field out_field = escalate ? f.extension() : f;
  Matrix basis(out_field, space.dim(), space.dim());
  for (int i = 0; i < space.dim(); ++i) {
    if (escalate) {
      // Take every root upstairs so the whole basis lives in one field.
      FieldElement root = diag.d[static_cast<size_t>(i)].lift().sqrt_in_field().value();
      basis.set_row(i, vec_scaled(lift_vec(diag.basis[static_cast<size_t>(i)]), root.inverse()));
    } else {
      FieldElement root = diag.d[static_cast<size_t>(i)].sqrt_in_field().value();
      basis.set_row(i, vec_scaled(diag.basis[static_cast<size_t>(i)], root.inverse()));
    }
  }
  return OrthonormalBasisResult{std::move(basis), escalate};
}

OrthonormalBasisResult orthonormal_frame(const BilinearSpace& space, int r) {
  require(r >= 0 && r <= space.dim(), "frame size out of range");
  OrthonormalBasisResult full = gram_schmidt(space);
  return OrthonormalBasisResult{full.basis.submatrix(0, 0, r, space.dim()), full.escalated};
}

std::optional<Vec> find_isotropic(const BilinearSpace& space) {
  const Field& f = space.field();
  const int h = space.dim();
  if (h == 0) return std::nullopt;
  if (space.kind() == FormKind::alternating) {
    Vec e0 = zero_vec(f, h);
    e0[0] = f.one();
    return e0;
  }
  Diagonalization diag = diagonalize(space);
  // Two-variable probe: d_i x^2 + d_j = 0, i.e. x = sqrt(-d_j / d_i).
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j) {
      FieldElement target = -(diag.d[static_cast<size_t>(j)] / diag.d[static_cast<size_t>(i)]);
      if (auto x = target.sqrt_in_field()) {
        return vec_add(vec_scaled(diag.basis[static_cast<size_t>(i)], *x),
                       diag.basis[static_cast<size_t>(j)]);
      }
    }
  }
  if (h < 3) return std::nullopt;
  // Three variables always suffice over a finite field: sweep (x, y) and read
  // off z = sqrt(-(d_0 x^2 + d_1 y^2) / d_2).
  for (long long xi = 0; xi < f.size(); ++xi) {
    for (long long yi = 0; yi < f.size(); ++yi) {
      if (xi == 0 && yi == 0) continue;
      FieldElement x = f.element_at(xi);
      FieldElement y = f.element_at(yi);
      FieldElement val = -(diag.d[0] * x * x + diag.d[1] * y * y) / diag.d[2];
      if (auto z = val.sqrt_in_field()) {
        Vec v = vec_add(vec_scaled(diag.basis[0], x), vec_scaled(diag.basis[1], y));
        return vec_add(v, vec_scaled(diag.basis[2], *z));
      }
    }
  }
  throw std::logic_error("no isotropic vector found in >= 3 variables");
}

WittDecomposition witt_decompose(const BilinearSpace& space) {
  const Field& f = space.field();
  const int h = space.dim();
  std::optional<Vec> iso = find_isotropic(space);
  if (!iso) {
    return WittDecomposition{0, h, Matrix(f, 0, h), Matrix::identity(f, h)};
  }
  Vec v = *iso;
  // Partner with pair(v, e_k) != 0; exists because the form is nondegenerate.
  Vec w;
  for (int k = 0; k < h; ++k) {
    Vec e = zero_vec(f, h);
    e[static_cast<size_t>(k)] = f.one();
    if (!space.pair(v, e).is_zero()) {
      w = vec_scaled(e, space.pair(v, e).inverse());
      break;
    }
  }
  if (w.empty()) throw std::logic_error("isotropic vector with no pairing partner");
  if (space.kind() == FormKind::symmetric) {
    // Shear the partner onto the quadric: |w - c v|^2 = |w|^2 - 2c when
    // pair(v, w) = 1, so c = |w|^2 / 2 lands exactly.
    FieldElement c = space.norm(w) / f.from_int(2);
    w = vec_sub(w, vec_scaled(v, c));
  }
  // Orthogonal complement of the plane <v, w>.
  Matrix conditions(f, 2, h);
  conditions.set_row(0, mat_vec(space.gram().transpose(), v));
  conditions.set_row(1, mat_vec(space.gram().transpose(), w));
  Matrix comp = kernel_basis(conditions);
  Matrix subgram = comp * space.gram() * comp.transpose();
  BilinearSpace sub = space.kind() == FormKind::symmetric ? BilinearSpace::symmetric(subgram)
                                                          : BilinearSpace::alternating(subgram);
  WittDecomposition rec = witt_decompose(sub);
  auto map_back = [&](const Matrix& rows) {
    Matrix out(f, rows.rows(), h);
    for (int i = 0; i < rows.rows(); ++i) {
      Vec img = zero_vec(f, h);
      for (int j = 0; j < rows.cols(); ++j) {
        img = vec_add(img, vec_scaled(comp.row_copy(j), rows.at(i, j)));
      }
      out.set_row(i, img);
    }
    return out;
  };
  Matrix sub_hyp = map_back(rec.hyperbolic_rows);
  Matrix hyp(f, 2 + sub_hyp.rows(), h);
  hyp.set_row(0, v);
  hyp.set_row(1, w);
  for (int i = 0; i < sub_hyp.rows(); ++i) hyp.set_row(2 + i, sub_hyp.row_copy(i));
  return WittDecomposition{rec.witt_index + 1, rec.anisotropic_dim, std::move(hyp),
                           map_back(rec.anisotropic_rows)};
}

int witt_index(const BilinearSpace& space) { return witt_decompose(space).witt_index; }

Matrix hyperbolic_basis(const BilinearSpace& space) {
  WittDecomposition wd = witt_decompose(space);
  if (wd.anisotropic_dim != 0) {
    throw std::invalid_argument("space is not split: anisotropic dimension " +
                                std::to_string(wd.anisotropic_dim));
  }
  return wd.hyperbolic_rows;
}

namespace {

void check_enum_budget(const Field& f, int h) {
  BigInt total = big_pow(f.size(), h);
  if (total > kEnumBudget) {
    throw std::invalid_argument("enumeration budget exceeded: q^h = " + big_str(total));
  }
}

// Number of isotropic vectors (including zero) of a nondegenerate form of
// dimension dim whose anisotropic kernel has dimension aniso.
BigInt closed_vector_count(FormKind kind, long long q, int dim, int aniso) {
  if (dim == 0) return 1;
  if (kind == FormKind::alternating) return big_pow(q, dim);
  if (dim % 2 == 1) return big_pow(q, dim - 1);
  if (aniso != 0 && aniso != 2) throw std::logic_error("even symmetric form with odd kernel");
  const int eta = aniso == 0 ? 1 : -1;
  return big_pow(q, dim - 1) + eta * (big_pow(q, dim / 2) - big_pow(q, dim / 2 - 1));
}

// Visit every k-dimensional subspace of F_q^h exactly once through its
// canonical RREF basis.  `visit` receives the k x h basis matrix.
void for_each_subspace(const Field& f, int h, int k,
                       const std::function<void(const Matrix&)>& visit) {
  if (k == 0) {
    visit(Matrix(f, 0, h));
    return;
  }
  std::vector<int> pivots(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pivots[static_cast<size_t>(i)] = i;
  while (true) {
    // Free slots: to the right of the row's pivot, outside pivot columns.
    std::vector<std::pair<int, int>> free_slots;
    std::vector<bool> is_pivot(static_cast<size_t>(h), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    for (int i = 0; i < k; ++i) {
      for (int j = pivots[static_cast<size_t>(i)] + 1; j < h; ++j) {
        if (!is_pivot[static_cast<size_t>(j)]) free_slots.emplace_back(i, j);
      }
    }
    Matrix basis(f, k, h);
    for (int i = 0; i < k; ++i) basis.set(i, pivots[static_cast<size_t>(i)], f.one());
    std::vector<long long> odo(free_slots.size(), 0);
    while (true) {
      visit(basis);
      size_t pos = 0;
      for (; pos < odo.size(); ++pos) {
        odo[pos] = (odo[pos] + 1) % f.size();
        basis.set(free_slots[pos].first, free_slots[pos].second, f.element_at(odo[pos]));
        if (odo[pos] != 0) break;
      }
      if (pos == odo.size()) break;
    }
    // Next pivot combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pivots[static_cast<size_t>(i)] == h - k + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

BigInt isotropic_vector_count_brute(const BilinearSpace& space) {
  const Field& f = space.field();
  const int h = space.dim();
  check_enum_budget(f, h);
  BigInt count = 0;
  Vec v = zero_vec(f, h);
  std::vector<long long> odo(static_cast<size_t>(h), 0);
  while (true) {
    if (space.norm(v).is_zero()) ++count;
    size_t pos = 0;
    for (; pos < odo.size(); ++pos) {
      odo[pos] = (odo[pos] + 1) % f.size();
      v[pos] = f.element_at(odo[pos]);
      if (odo[pos] != 0) break;
    }
    if (pos == odo.size()) break;
  }
  return count;
}

BigInt isotropic_vector_count(const BilinearSpace& space) {
  WittDecomposition wd = witt_decompose(space);
  return closed_vector_count(space.kind(), space.field().size(), space.dim(),
                             wd.anisotropic_dim);
}

BigInt isotropic_subspace_count_brute(const BilinearSpace& space, int k) {
  require(k >= 0 && k <= space.dim(), "subspace dimension out of range");
  check_enum_budget(space.field(), space.dim());
  BigInt count = 0;
  for_each_subspace(space.field(), space.dim(), k, [&](const Matrix& basis) {
    if (space.is_totally_isotropic_rows(basis)) ++count;
  });
  return count;
}

BigInt isotropic_subspace_count(const BilinearSpace& space, int k) {
  require(k >= 0 && k <= space.dim(), "subspace dimension out of range");
  if (k == 0) return 1;
  const long long q = space.field().size();
  const int h = space.dim();
  WittDecomposition wd = witt_decompose(space);
  BigInt num = 1;
  for (int i = 0; i < k; ++i) {
    BigInt vectors =
        closed_vector_count(space.kind(), q, h - 2 * i, wd.anisotropic_dim) - 1;
    if (vectors == 0) return 0;  // frames run dry beyond the Witt index
    num *= big_pow(q, i) * vectors;
  }
  BigInt den = 1;
  for (int i = 0; i < k; ++i) den *= big_pow(q, k) - big_pow(q, i);
  if (num % den != 0) throw std::logic_error("frame count not divisible by basis count");
  return num / den;
}

long iso_grassmannian_dim(FormKind kind, int h, int k) {
  require(k >= 0 && 2 * k <= h, "need 0 <= 2k <= h");
  const long lk = k;
  const long lh = h;
  if (kind == FormKind::symmetric) return lk * (lh - lk) - lk * (lk + 1) / 2;
  return lk * (lh - lk) - lk * (lk - 1) / 2;
}

BigInt gaussian_binomial(int h, int k, long long q) {
  require(h >= 0 && q >= 2, "need h >= 0 and q >= 2");
  if (k < 0 || k > h) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= big_pow(q, h - i) - 1;
    den *= big_pow(q, i + 1) - 1;
  }
  if (num % den != 0) throw std::logic_error("Gaussian binomial not integral");
  return num / den;
}

}  // namespace isocone
