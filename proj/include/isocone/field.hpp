// SPDX-License-Identifier: MIT
/**
 * @file field.hpp
 * @brief Exact arithmetic in F_p and F_{p^2} for odd primes p <= 97.
 *
 * The quadratic extension is presented concretely as F_p[x]/(x^2 - s) where
 * s is the least non-square modulo p, so every element is a canonical pair
 * a + b*x with 0 <= a, b < p.  All operations are exact; there is no modular
 * symbol left implicit.  Elements remember their field, and arithmetic
 * between mismatched fields is a hard error rather than a silent coercion —
 * moving from F_p into F_{p^2} is always the explicit lift().
 *
 * Square roots use the total enumeration order (by canonical residue for
 * degree 1, lexicographic on (a, b) for degree 2), so the reported root is
 * deterministic: the smaller of the two roots in that order.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace isocone {

class FieldElement;

/**
 * @brief Handle describing F_p (degree 1) or F_{p^2} (degree 2).
 *
 * Cheap value type (a few ints); element factories live here.  Construction
 * validates that p is an odd prime <= 97 — p = 2 and composite p are
 * rejected with std::invalid_argument.
 */
class Field {
 public:
  /// F_p, p an odd prime <= 97.
  static Field prime(int p);
  /// F_{p^2} presented as F_p[x]/(x^2 - s), s the least non-square mod p.
  static Field quadratic(int p);

  /// The quadratic extension of this field (degree-1 fields only).
  [[nodiscard]] Field extension() const;
  /// The prime field F_p underneath either presentation.
  [[nodiscard]] Field base() const;

  [[nodiscard]] int characteristic() const { return p_; }
  [[nodiscard]] int degree() const { return deg_; }
  /// The s in x^2 - s (degree-2 fields only).
  [[nodiscard]] int modulus_nonsquare() const;
  /// Number of elements: p or p^2.
  [[nodiscard]] long long size() const;

  bool operator==(const Field&) const = default;

  /// @name Element factories
  ///@{
  [[nodiscard]] FieldElement zero() const;
  [[nodiscard]] FieldElement one() const;
  /// The image of the integer v (reduced mod p; lives in the base part).
  [[nodiscard]] FieldElement from_int(long long v) const;
  /// a + b*x with inputs reduced mod p; b != 0 requires degree 2.
  [[nodiscard]] FieldElement element(long long a, long long b) const;
  /// k-th element in enumeration order: k for degree 1, (k/p, k%p) for degree 2.
  [[nodiscard]] FieldElement element_at(long long k) const;
  /// All elements in enumeration order (size() entries).
  [[nodiscard]] std::vector<FieldElement> all_elements() const;
  ///@}

  [[nodiscard]] std::string str() const;

 private:
  Field(int p, int deg, int s) : p_(static_cast<int16_t>(p)),
                                 deg_(static_cast<int16_t>(deg)),
                                 s_(static_cast<int16_t>(s)) {}
  int16_t p_;
  int16_t deg_;
  int16_t s_;  // modulus constant for degree 2; 0 for degree 1
};

/**
 * @brief One element of a Field, stored as canonical residues (a, b).
 *
 * Degree-1 elements always have b == 0.  Comparison across different fields
 * is allowed (and false); arithmetic across different fields throws
 * std::invalid_argument.
 */
class FieldElement {
 public:
  FieldElement(const Field& f, int a, int b);

  [[nodiscard]] const Field& field() const { return field_; }
  /// Canonical residue of the constant coefficient, in [0, p).
  [[nodiscard]] int a() const { return a_; }
  /// Canonical residue of the x coefficient, in [0, p); 0 in degree 1.
  [[nodiscard]] int b() const { return b_; }
  [[nodiscard]] bool is_zero() const { return a_ == 0 && b_ == 0; }

  [[nodiscard]] FieldElement operator+(const FieldElement& o) const;
  [[nodiscard]] FieldElement operator-(const FieldElement& o) const;
  [[nodiscard]] FieldElement operator*(const FieldElement& o) const;
  [[nodiscard]] FieldElement operator-() const;
  /// Multiplicative inverse; std::domain_error on zero.
  [[nodiscard]] FieldElement inverse() const;
  [[nodiscard]] FieldElement operator/(const FieldElement& o) const;
  [[nodiscard]] FieldElement pow(long long e) const;

  bool operator==(const FieldElement& o) const {
    return field_ == o.field_ && a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// True iff some element of the same field squares to this.
  [[nodiscard]] bool is_square() const;
  /// The enumeration-order-smallest square root within the same field, if any.
  [[nodiscard]] std::optional<FieldElement> sqrt_in_field() const;
  /**
   * @brief Square root in the field itself or, for degree-1 elements, in the
   *        quadratic extension (where every base-field element is a square).
   *
   * Degree-2 non-squares have no root within reach of this library and raise
   * std::domain_error.
   */
  [[nodiscard]] FieldElement sqrt_or_extend() const;

  /// Explicit embedding of a degree-1 element into the quadratic extension.
  [[nodiscard]] FieldElement lift() const;
  /// True iff b == 0 and the constant part equals v mod p.
  [[nodiscard]] bool equals_int(long long v) const;

  /// Position in the field's enumeration order.
  [[nodiscard]] long long index() const;

  /// "a" for degree 1 / b == 0; otherwise "a+b*x".
  [[nodiscard]] std::string str() const;

 private:
  Field field_;
  int16_t a_;
  int16_t b_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

/// True iff p is prime (trial division; inputs are tiny).
[[nodiscard]] bool is_small_prime(int p);

/// Least non-square modulo an odd prime p.
[[nodiscard]] int least_nonsquare(int p);

}  // namespace isocone
