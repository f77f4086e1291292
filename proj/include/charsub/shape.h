#ifndef CHARSUB_SHAPE_H_
#define CHARSUB_SHAPE_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charsub/limits.h"

namespace charsub {

// Dense index of an element: mixed-radix encoding of its coordinates with
// the first summand as the least significant digit.
using ElemId = std::uint32_t;

// p-height of an element. Only finite reduced groups occur, so the single
// value above every finite height is enough to represent the height of 0.
using Height = int;
inline constexpr Height kInfiniteHeight = std::numeric_limits<Height>::max();

struct Element {
  std::vector<std::uint64_t> coords;

  friend bool operator==(const Element&, const Element&) = default;
};

// Heights of x, p x, p^2 x, ... up to and including the first infinite one.
struct UlmSequence {
  std::vector<Height> heights;

  // Pointwise comparison, padding the shorter sequence with infinity.
  bool pointwise_le(const UlmSequence& other) const;
  std::string to_string() const;

  friend bool operator==(const UlmSequence&, const UlmSequence&) = default;
  friend auto operator<=>(const UlmSequence&, const UlmSequence&) = default;
};

bool is_prime(std::uint64_t n);

// A finite abelian p-group Z(p^k1) + ... + Z(p^kn), k1 <= ... <= kn.
// Immutable after construction.
class Shape {
 public:
  // Throws std::invalid_argument for a non-prime base, an empty partition or
  // a non-positive exponent, and CapExceeded when the order is above
  // carrier_cap.
  Shape(std::uint64_t prime, std::vector<int> exponents,
        std::uint64_t carrier_cap = Limits{}.carrier_cap);

  // Parses "p:k1,k2,...". Exponents may come in any order.
  static Shape parse(std::string_view text,
                     std::uint64_t carrier_cap = Limits{}.carrier_cap);

  // Canonical "p:k1,...,kn" with ascending exponents.
  std::string to_string() const;

  std::uint64_t prime() const { return prime_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int exponent(int i) const { return exponents_[i]; }
  int rank() const { return static_cast<int>(exponents_.size()); }
  std::uint64_t order() const { return order_; }
  // log_p |G|.
  int log_order() const { return log_order_; }
  // p^k_i, the order of the i-th cyclic summand.
  std::uint64_t modulus(int i) const { return moduli_[i]; }
  std::uint64_t stride(int i) const { return strides_[i]; }
  // p^e as an integer; e must keep the value inside 64 bits.
  std::uint64_t power(int e) const;
  // Largest exponent, i.e. log_p of the exponent of G.
  int max_exponent() const { return exponents_.back(); }

  // Summands i for which exponent(i) == k.
  std::vector<int> layer(int k) const;
  // Distinct exponents, ascending.
  std::vector<int> distinct_exponents() const;

  // The shape built from the summands at the given (ascending) positions.
  Shape restrict_to(std::span<const int> positions) const;
  // The shape with every summand doubled.
  Shape doubled() const;
  // Cap inherited by shapes derived from this one.
  std::uint64_t carrier_cap() const { return carrier_cap_; }

  // Element construction. Coordinates are reduced modulo the cyclic orders;
  // a coordinate count that differs from rank() throws
  // std::invalid_argument.
  Element element(std::span<const std::int64_t> coords) const;
  Element element(std::initializer_list<std::int64_t> coords) const;
  Element zero() const;
  Element basis(int i) const;

  ElemId encode(const Element& x) const;
  Element decode(ElemId id) const;

  Element add(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element scalar_mul(std::int64_t c, const Element& x) const;

  ElemId add(ElemId x, ElemId y) const;
  ElemId neg(ElemId x) const;
  ElemId scalar_mul(std::uint64_t c, ElemId x) const;
  // Coordinate i of the element with the given index.
  std::uint64_t coord(ElemId x, int i) const {
    return (x / strides_[i]) % moduli_[i];
  }

  // Least p-power m with m x = 0.
  std::uint64_t element_order(const Element& x) const;
  std::uint64_t element_order(ElemId x) const;
  Height height(const Element& x) const;
  Height height(ElemId x) const;
  UlmSequence ulm_sequence(const Element& x) const;
  UlmSequence ulm_sequence(ElemId x) const;

  // f_n = number of summands of exponent n + 1, for n = 0 .. max_exponent-1.
  std::vector<int> ulm_invariants() const;

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.prime_ == b.prime_ && a.exponents_ == b.exponents_;
  }
  friend auto operator<=>(const Shape& a, const Shape& b) {
    if (auto c = a.prime_ <=> b.prime_; c != 0) return c;
    return a.exponents_ <=> b.exponents_;
  }

 private:
  void check_element(const Element& x) const;
  // v_p(c) for 0 < c < p^k, otherwise -1 for c == 0.
  int valuation(std::uint64_t c) const;

  std::uint64_t prime_;
  std::vector<int> exponents_;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
  int log_order_ = 0;
  std::uint64_t carrier_cap_;
};

}  // namespace charsub

#endif  // CHARSUB_SHAPE_H_
