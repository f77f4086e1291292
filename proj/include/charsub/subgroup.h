#ifndef CHARSUB_SUBGROUP_H_
#define CHARSUB_SUBGROUP_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "charsub/shape.h"

namespace charsub {

// Abstract isomorphism type of a finite abelian p-group. Unlike Shape the
// partition may be empty: that is the type of the trivial group.
struct IsoType {
  std::uint64_t prime = 0;
  std::vector<int> exponents;

  static IsoType of(const Shape& shape) {
    return IsoType{shape.prime(), shape.exponents()};
  }
  bool is_trivial() const { return exponents.empty(); }
  std::string to_string() const;

  friend bool operator==(const IsoType&, const IsoType&) = default;
};

// A subgroup of a finite abelian p-group, stored as a membership bit-vector
// over the dense element index plus the sorted member list. Immutable.
class Subgroup {
 public:
  static Subgroup trivial(std::shared_ptr<const Shape> shape);
  static Subgroup trivial(const Shape& shape);
  static Subgroup whole(const Shape& shape);

  const Shape& shape() const { return *shape_; }
  const std::shared_ptr<const Shape>& shape_ptr() const { return shape_; }

  std::uint64_t order() const { return elements_.size(); }
  bool contains(ElemId x) const { return (bits_[x >> 6] >> (x & 63)) & 1U; }
  bool contains(const Element& x) const {
    return contains(shape_->encode(x));
  }
  // Members in ascending index order.
  const std::vector<ElemId>& elements() const { return elements_; }
  // The generators this subgroup was built from; always generates it but
  // need not be minimal.
  const std::vector<ElemId>& generators() const { return generators_; }
  const std::vector<std::uint64_t>& bits() const { return bits_; }

  // Lexicographically least minimal generating set (by dense index). A set is
  // a minimal generating set iff its image in H / pH is a basis, so the
  // greedy scan over members in index order produces it.
  std::vector<ElemId> canonical_generators() const;

  // H + <x>.
  Subgroup extended_by(ElemId x) const;

  bool is_subgroup_of(const Subgroup& other) const;
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return elements_.size() == shape_->order(); }

  std::size_t hash() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.bits_ == b.bits_;
  }

 private:
  Subgroup(std::shared_ptr<const Shape> shape, std::vector<std::uint64_t> bits,
           std::vector<ElemId> elements, std::vector<ElemId> generators);

  std::shared_ptr<const Shape> shape_;
  std::vector<std::uint64_t> bits_;
  std::vector<ElemId> elements_;
  std::vector<ElemId> generators_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& h) const { return h.hash(); }
};

// Deterministic enumeration order: by order, then lexicographically by the
// ascending member list.
bool enumeration_less(const Subgroup& a, const Subgroup& b);
void sort_enumeration_order(std::vector<Subgroup>& subgroups);

Subgroup span(const Shape& shape, std::span<const Element> gens);
Subgroup span_ids(std::shared_ptr<const Shape> shape,
                  std::span<const ElemId> gens);

// Set operations; both arguments must live in the same shape
// (std::invalid_argument otherwise).
bool subgroup_equal(const Subgroup& a, const Subgroup& b);
// True iff b is a subgroup of a.
bool subgroup_contains(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup sum(const Subgroup& a, const Subgroup& b);

// p^n G = { p^n g }.
Subgroup power_subgroup(const Shape& shape, int n);
// G[p^m] = { g : p^m g = 0 }.
Subgroup socle(const Shape& shape, int m);

// Isomorphism type of h computed inside h from the orders of (p^n H)[p].
IsoType iso_type(const Subgroup& h);

// "(1,2)" for an element and "<(1,0),(0,2)>" for a subgroup, using its
// canonical generators.
std::string element_to_string(const Shape& shape, ElemId x);
std::string describe(const Subgroup& h);

}  // namespace charsub

#endif  // CHARSUB_SUBGROUP_H_
