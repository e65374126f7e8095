// SPDX-License-Identifier: MIT
#include "isocone/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace isocone {

namespace {

int reduce(long long v, int p) {
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

void require_same_field(const Field& x, const Field& y) {
  if (!(x == y)) {
    throw std::invalid_argument("field mismatch: " + x.str() + " vs " + y.str() +
                                " (lift() makes embeddings explicit)");
  }
}

// Lazily built square-root tables, one per field: slot k holds the index of
// the enumeration-order-smallest root of element_at(k), or -1.  Exhaustive
// search is affordable once (p^2 <= 9409 slots) and makes repeated root
// extraction O(1), which the quadratic-system solvers rely on.
const std::vector<int32_t>& sqrt_table(const Field& f) {
  static std::mutex mu;
  static std::map<std::tuple<int, int>, std::vector<int32_t>> tables;
  std::scoped_lock lock(mu);
  auto key = std::make_tuple(f.characteristic(), f.degree());
  auto it = tables.find(key);
  if (it != tables.end()) return it->second;
  const long long n = f.size();
  std::vector<int32_t> table(static_cast<size_t>(n), -1);
  for (long long k = 0; k < n; ++k) {
    FieldElement r = f.element_at(k);
    long long sq = (r * r).index();
    if (table[static_cast<size_t>(sq)] < 0) table[static_cast<size_t>(sq)] = static_cast<int32_t>(k);
  }
  return tables.emplace(key, std::move(table)).first->second;
}

}  // namespace

bool is_small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int least_nonsquare(int p) {
  std::vector<bool> square(static_cast<size_t>(p), false);
  for (int v = 0; v < p; ++v) square[static_cast<size_t>((v * v) % p)] = true;
  for (int s = 2; s < p; ++s) {
    if (!square[static_cast<size_t>(s)]) return s;
  }
  throw std::logic_error("no non-square found; p must not be prime");
}

Field Field::prime(int p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (p > 97) throw std::invalid_argument("p exceeds the supported bound 97");
  if (!is_small_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  return Field(p, 1, 0);
}

Field Field::quadratic(int p) { return prime(p).extension(); }

Field Field::extension() const {
  if (deg_ != 1) throw std::invalid_argument("extension() is defined on degree-1 fields only");
  return Field(p_, 2, least_nonsquare(p_));
}

Field Field::base() const { return Field(p_, 1, 0); }

int Field::modulus_nonsquare() const {
  if (deg_ != 2) throw std::invalid_argument("modulus_nonsquare() requires a degree-2 field");
  return s_;
}

long long Field::size() const { return deg_ == 1 ? p_ : static_cast<long long>(p_) * p_; }

FieldElement Field::zero() const { return FieldElement(*this, 0, 0); }

FieldElement Field::one() const { return FieldElement(*this, 1, 0); }

FieldElement Field::from_int(long long v) const { return FieldElement(*this, reduce(v, p_), 0); }

FieldElement Field::element(long long a, long long b) const {
  if (b % p_ != 0 && deg_ != 2) {
    throw std::invalid_argument("a degree-1 field has no x coefficient");
  }
  return FieldElement(*this, reduce(a, p_), deg_ == 2 ? reduce(b, p_) : 0);
}

FieldElement Field::element_at(long long k) const {
  if (k < 0 || k >= size()) throw std::invalid_argument("element index out of range");
  if (deg_ == 1) return FieldElement(*this, static_cast<int>(k), 0);
  return FieldElement(*this, static_cast<int>(k / p_), static_cast<int>(k % p_));
}

std::vector<FieldElement> Field::all_elements() const {
  std::vector<FieldElement> out;
  out.reserve(static_cast<size_t>(size()));
  for (long long k = 0; k < size(); ++k) out.push_back(element_at(k));
  return out;
}

std::string Field::str() const {
  if (deg_ == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^2 (x^2-" + std::to_string(s_) + ")";
}

FieldElement::FieldElement(const Field& f, int a, int b)
    : field_(f), a_(static_cast<int16_t>(a)), b_(static_cast<int16_t>(b)) {
  if (a < 0 || a >= f.characteristic() || b < 0 || b >= f.characteristic()) {
    throw std::invalid_argument("element coefficients must be canonical residues");
  }
  if (b != 0 && f.degree() != 2) {
    throw std::invalid_argument("a degree-1 field has no x coefficient");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  const int p = field_.characteristic();
  return FieldElement(field_, (a_ + o.a_) % p, (b_ + o.b_) % p);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  const int p = field_.characteristic();
  return FieldElement(field_, (a_ - o.a_ + p) % p, (b_ - o.b_ + p) % p);
}

FieldElement FieldElement::operator-() const {
  const int p = field_.characteristic();
  return FieldElement(field_, (p - a_) % p, (p - b_) % p);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  const int p = field_.characteristic();
  if (field_.degree() == 1) {
    return FieldElement(field_, static_cast<int>((static_cast<long long>(a_) * o.a_) % p), 0);
  }
  // (a + b x)(c + d x) = (ac + s bd) + (ad + bc) x  with  x^2 = s.
  const long long s = field_.modulus_nonsquare();
  const long long a = a_, b = b_, c = o.a_, d = o.b_;
  return FieldElement(field_, static_cast<int>((a * c + s * (b * d) % p) % p),
                      static_cast<int>((a * d + b * c) % p));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("zero has no multiplicative inverse");
  const int p = field_.characteristic();
  if (field_.degree() == 1) {
    // Fermat: a^(p-2).
    return pow(p - 2);
  }
  // (a + b x)^-1 = (a - b x) / (a^2 - s b^2); the norm is a nonzero base element.
  const long long s = field_.modulus_nonsquare();
  long long norm = (static_cast<long long>(a_) * a_ % p - s * b_ % p * b_ % p + 2LL * p * p) % p;
  FieldElement norm_inv = field_.base().from_int(norm).inverse();
  const long long ni = norm_inv.a();
  return FieldElement(field_, static_cast<int>(a_ * ni % p),
                      static_cast<int>((p - b_) % p * ni % p));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement acc = field_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FieldElement::is_square() const { return sqrt_table(field_)[static_cast<size_t>(index())] >= 0; }

std::optional<FieldElement> FieldElement::sqrt_in_field() const {
  int32_t k = sqrt_table(field_)[static_cast<size_t>(index())];
  if (k < 0) return std::nullopt;
  return field_.element_at(k);
}

FieldElement FieldElement::sqrt_or_extend() const {
  if (auto r = sqrt_in_field()) return *r;
  if (field_.degree() != 1) {
    throw std::domain_error("element has no square root in its degree-2 field");
  }
  auto r = lift().sqrt_in_field();
  // Every base-field element is a square in the quadratic extension:
  // a^((p^2-1)/2) = (a^((p-1)/2))^(p+1) = (+-1)^(p+1) = 1.
  if (!r) throw std::logic_error("base-field element missing its extension square root");
  return *r;
}

FieldElement FieldElement::lift() const {
  if (field_.degree() != 1) throw std::invalid_argument("lift() embeds degree-1 elements only");
  return FieldElement(field_.extension(), a_, 0);
}

bool FieldElement::equals_int(long long v) const {
  const int p = field_.characteristic();
  return b_ == 0 && a_ == reduce(v, p);
}

long long FieldElement::index() const {
  if (field_.degree() == 1) return a_;
  return static_cast<long long>(a_) * field_.characteristic() + b_;
}

std::string FieldElement::str() const {
  if (b_ == 0) return std::to_string(a_);
  return std::to_string(a_) + "+" + std::to_string(b_) + "*x";
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.str(); }

}  // namespace isocone
