// SPDX-License-Identifier: MIT
#include "isocone/chow.hpp"

#include <limits>
#include <stdexcept>

namespace isocone {

namespace {

constexpr long long kMaxEncodable = std::numeric_limits<long long>::max();

/// Checked digit of one coordinate: finite labels 0..x1_card-2, infinity
/// encodes as x1_card-1 (last).
long long coord_digit(const Coord& c, long long x1_card) {
  if (c.is_inf()) {
    return x1_card - 1;
  }
  if (c.label() >= x1_card - 1) {
    throw std::invalid_argument("component index: coordinate label out of range");
  }
  return c.label();
}

Coord coord_from_digit(long long digit, long long x1_card) {
  if (digit == x1_card - 1) {
    return Coord::infinity();
  }
  return Coord::finite(static_cast<int>(digit));
}

void validate_cards(long long x1_card, long long base_card) {
  if (x1_card < 1) {
    throw std::invalid_argument("x1 cardinality must be >= 1 (it includes the infinity marker)");
  }
  if (base_card < 1) {
    throw std::invalid_argument("base cardinality must be >= 1");
  }
}

/// count_components as a long long; throws when it exceeds the encodable
/// range.
long long encodable_count(const FamilyShape& shape, long long x1_card, long long base_card) {
  const BigInt total = count_components(shape, x1_card, base_card);
  if (total > BigInt(kMaxEncodable)) {
    throw std::invalid_argument("component index space exceeds the 64-bit encodable range");
  }
  return total.convert_to<long long>();
}

}  // namespace

const char* chow_family_name(ChowFamily family) {
  switch (family) {
    case ChowFamily::A_even: return "A_even";
    case ChowFamily::A_odd: return "A_odd";
    case ChowFamily::B: return "B";
    case ChowFamily::C: return "C";
    case ChowFamily::D: return "D";
  }
  throw std::logic_error("unknown family");
}

const char* chow_base_name(ChowBase base) {
  switch (base) {
    case ChowBase::LU1: return "LU1";
    case ChowBase::LU2: return "LU2";
    case ChowBase::GL2: return "GL2";
    case ChowBase::GSO3: return "GSO3";
    case ChowBase::GSO4: return "GSO4";
  }
  throw std::logic_error("unknown base tag");
}

FamilyShape make_family(ChowGroup group, int size) {
  if (size < 1) {
    throw std::invalid_argument("make_family: size must be positive");
  }
  FamilyShape shape;
  switch (group) {
    case ChowGroup::LU:
      if (size % 2 == 1) {
        shape.family = ChowFamily::A_even;
        shape.n = (size - 1) / 2;
        shape.base = ChowBase::LU1;
      } else {
        shape.family = ChowFamily::A_odd;
        shape.n = (size - 2) / 2;
        shape.base = ChowBase::LU2;
      }
      shape.r = shape.n;
      break;
    case ChowGroup::GSp:
      if (size % 2 != 0) {
        throw std::invalid_argument("make_family: symplectic size must be even");
      }
      shape.family = ChowFamily::B;
      shape.n = size / 2;
      shape.r = shape.n - 1;
      shape.base = ChowBase::GL2;
      break;
    case ChowGroup::GSO:
      if (size % 2 == 1) {
        shape.family = ChowFamily::C;
        shape.n = (size - 1) / 2;
        shape.r = shape.n - 1;
        shape.base = ChowBase::GSO3;
      } else {
        shape.family = ChowFamily::D;
        shape.n = size / 2;
        shape.r = shape.n - 2;
        shape.base = ChowBase::GSO4;
      }
      break;
  }
  if (shape.r < 0) {
    throw std::invalid_argument("make_family: size too small for its tower (no shape)");
  }
  return shape;
}

FamilyShape make_family(const std::string& name) {
  static const struct {
    const char* prefix;
    ChowGroup group;
  } kTowers[] = {{"GSp", ChowGroup::GSp}, {"GSO", ChowGroup::GSO}, {"LU", ChowGroup::LU}};
  for (const auto& tower : kTowers) {
    const std::string prefix = tower.prefix;
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
      const std::string digits = name.substr(prefix.size());
      if (digits.find_first_not_of("0123456789") != std::string::npos) {
        break;
      }
      return make_family(tower.group, std::stoi(digits));
    }
  }
  throw std::invalid_argument("make_family: expected GSp<size>, GSO<size> or LU<size>, got '" +
                              name + "'");
}

Coord Coord::finite(int label) {
  if (label < 0) {
    throw std::invalid_argument("Coord::finite: label must be nonnegative");
  }
  return Coord(false, label);
}

int Coord::label() const {
  if (inf_) {
    throw std::logic_error("Coord::label: the infinity marker has no label");
  }
  return label_;
}

bool ComponentIndex::operator==(const ComponentIndex& other) const {
  return coords == other.coords && base_component == other.base_component;
}

BigInt count_components(const FamilyShape& shape, long long x1_card, long long base_card) {
  validate_cards(x1_card, base_card);
  return big_pow(x1_card, shape.r) * base_card;
}

long long encode_component(const FamilyShape& shape, long long x1_card, long long base_card,
                           const ComponentIndex& idx) {
  (void)encodable_count(shape, x1_card, base_card);
  if (static_cast<int>(idx.coords.size()) != shape.r) {
    throw std::invalid_argument("component index: expected " + std::to_string(shape.r) +
                                " coordinates, got " + std::to_string(idx.coords.size()));
  }
  if (idx.base_component < 0 || idx.base_component >= base_card) {
    throw std::invalid_argument("component index: base component out of range");
  }
  long long code = 0;
  for (int i = shape.r - 1; i >= 0; --i) {
    code = code * x1_card + coord_digit(idx.coords[static_cast<size_t>(i)], x1_card);
  }
  return code * base_card + idx.base_component;
}

ComponentIndex decode_component(const FamilyShape& shape, long long x1_card, long long base_card,
                                long long code) {
  const long long total = encodable_count(shape, x1_card, base_card);
  if (code < 0 || code >= total) {
    throw std::invalid_argument("component code out of range");
  }
  ComponentIndex idx;
  idx.base_component = static_cast<int>(code % base_card);
  code /= base_card;
  idx.coords.reserve(static_cast<size_t>(shape.r));
  for (int i = 0; i < shape.r; ++i) {
    idx.coords.push_back(coord_from_digit(code % x1_card, x1_card));
    code /= x1_card;
  }
  return idx;
}

std::vector<ComponentIndex> enumerate_components(const FamilyShape& shape, long long x1_card,
                                                 long long base_card) {
  const long long total = encodable_count(shape, x1_card, base_card);
  std::vector<ComponentIndex> out;
  out.reserve(static_cast<size_t>(total));
  for (long long code = 0; code < total; ++code) {
    out.push_back(decode_component(shape, x1_card, base_card, code));
  }
  return out;
}

HodgeVector hodge_assign(const ComponentIndex& idx, long long p,
                         const std::vector<long long>& embedding, HodgeConvention convention) {
  if (p < 1) {
    throw std::invalid_argument("hodge_assign: p must be positive");
  }
  for (const long long value : embedding) {
    if (value < 1 || value > 2 * p - 1) {
      throw std::invalid_argument("hodge_assign: embedding value outside [1, 2p-1] breaks "
                                  "regularity");
    }
  }
  HodgeVector out;
  out.p = p;
  out.entries.assign(idx.coords.size(), 0);
  // Outer coordinate first, though each entry depends only on its own
  // coordinate.
  for (size_t i = idx.coords.size(); i-- > 0;) {
    const Coord& c = idx.coords[i];
    long long entry = 0;
    if (c.is_inf()) {
      entry = convention == HodgeConvention::positive ? 1 : -1;
    } else {
      if (static_cast<size_t>(c.label()) >= embedding.size()) {
        throw std::invalid_argument("hodge_assign: coordinate label has no embedding entry");
      }
      const long long e = embedding[static_cast<size_t>(c.label())];
      entry = convention == HodgeConvention::positive ? 2 * p - e : e - 2 * p - 1;
    }
    out.entries[i] = entry;
  }
  return out;
}

}  // namespace isocone
