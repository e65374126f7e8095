// SPDX-License-Identifier: MIT
/**
 * @file chow.hpp
 * @brief Component bookkeeping for the five product decompositions: family
 *        shapes, component indices over an abstract coordinate set with a
 *        distinguished infinity marker, mixed-radix encoding, and the
 *        per-coordinate Hodge-entry assignment.
 *
 * The coordinate set X1 and the base component set are abstract labeled
 * finite sets whose cardinalities are caller-supplied parameters; nothing
 * here fabricates their contents.  The infinity marker is a distinguished
 * Coord state, never a numeric sentinel, so serialization stays unambiguous.
 */
#pragma once

#include <string>
#include <vector>

#include "isocone/bigint.hpp"

namespace isocone {

/// The five product families.  A_even covers the odd-size unitary tower,
/// A_odd the even-size one; B is symplectic, C odd orthogonal, D even
/// orthogonal.
enum class ChowFamily { A_even, A_odd, B, C, D };

/// Base factor tag of each family line.
enum class ChowBase { LU1, LU2, GL2, GSO3, GSO4 };

/// Input group towers.
enum class ChowGroup { LU, GSp, GSO };

[[nodiscard]] const char* chow_family_name(ChowFamily family);
[[nodiscard]] const char* chow_base_name(ChowBase base);

/**
 * @brief A family shape: tower index n, coordinate length r, base tag.
 *
 * r = n for A_even/A_odd, n-1 for B and C, n-2 for D; the base tag is
 * determined by the family.  make_family rejects sizes without a valid
 * shape (odd symplectic sizes, unitary/orthogonal sizes too small --
 * in particular the size-2 even orthogonal group has no shape).
 */
struct FamilyShape {
  ChowFamily family;
  int n = 0;
  int r = 0;
  ChowBase base;
};

[[nodiscard]] FamilyShape make_family(ChowGroup group, int size);

/// Parse "GSp8", "GSO7", "LU5" (case-sensitive prefix, decimal size).
[[nodiscard]] FamilyShape make_family(const std::string& name);

/**
 * @brief One coordinate: either a finite label 0, 1, ... of the abstract
 *        set X1, or the distinguished infinity marker.
 */
class Coord {
 public:
  [[nodiscard]] static Coord infinity() { return Coord(true, 0); }
  [[nodiscard]] static Coord finite(int label);

  [[nodiscard]] bool is_inf() const { return inf_; }
  /// Finite label; throws std::logic_error on the infinity marker.
  [[nodiscard]] int label() const;

  [[nodiscard]] bool operator==(const Coord& other) const {
    return inf_ == other.inf_ && (inf_ || label_ == other.label_);
  }
  [[nodiscard]] bool operator!=(const Coord& other) const { return !(*this == other); }

 private:
  Coord(bool inf, int label) : inf_(inf), label_(label) {}
  bool inf_;
  int label_;
};

/**
 * @brief A component index: r coordinates (finite labels or infinity) plus
 *        one base-set label.
 */
struct ComponentIndex {
  std::vector<Coord> coords;
  int base_component = 0;

  [[nodiscard]] bool operator==(const ComponentIndex& other) const;
  [[nodiscard]] bool operator!=(const ComponentIndex& other) const { return !(*this == other); }
};

/// x1_card^r * base_card.  Requires x1_card >= 1 (the count includes the
/// infinity marker) and base_card >= 1.
[[nodiscard]] BigInt count_components(const FamilyShape& shape, long long x1_card,
                                      long long base_card);

/**
 * @brief Mixed-radix code of a component index, base label least
 *        significant, then coordinates a_1, a_2, ...; within a coordinate
 *        digit the finite labels come first and infinity is last.
 *
 * Codes run over [0, count_components).  Throws std::invalid_argument on a
 * malformed index (wrong coordinate count, label out of range, base out of
 * range) and when the index space exceeds the 64-bit encodable range.
 */
[[nodiscard]] long long encode_component(const FamilyShape& shape, long long x1_card,
                                         long long base_card, const ComponentIndex& idx);

/// Inverse of encode_component; throws std::invalid_argument outside
/// [0, count_components).
[[nodiscard]] ComponentIndex decode_component(const FamilyShape& shape, long long x1_card,
                                              long long base_card, long long code);

/// All component indices in code order (size = count_components, which must
/// fit the encodable range).
[[nodiscard]] std::vector<ComponentIndex> enumerate_components(const FamilyShape& shape,
                                                               long long x1_card,
                                                               long long base_card);

/// Sign convention of the Hodge entries.
enum class HodgeConvention { positive, negative };

/**
 * @brief Per-coordinate Hodge entries: entry i is 2p - embed(a_i) for a
 *        finite coordinate and 1 on the infinity marker (all entries
 *        positive).  The negative convention maps a finite coordinate to
 *        embed(a_i) - 2p - 1 and infinity to -1 (all entries negative).
 */
struct HodgeVector {
  std::vector<long long> entries;
  long long p = 0;
};

/**
 * @brief Assign Hodge entries to each coordinate of `idx`.
 *
 * `embedding` maps finite label k to embedding[k], and every value must lie
 * in [1, 2p-1]; a value outside that range (or a label without an embedding
 * entry) throws std::invalid_argument, since it would break regularity.
 * Entry i depends only on coordinate i; entries are produced for i = r-1
 * down to 0 internally (outer coordinate first) but the output vector is in
 * coordinate order.  Base-factor Hodge data is out of scope here: callers
 * carry it as an opaque vector of their own.
 */
[[nodiscard]] HodgeVector hodge_assign(const ComponentIndex& idx, long long p,
                                       const std::vector<long long>& embedding,
                                       HodgeConvention convention = HodgeConvention::positive);

}  // namespace isocone
