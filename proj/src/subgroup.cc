#include "charsub/subgroup.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace charsub {
namespace {

std::vector<std::uint64_t> empty_bits(const Shape& shape) {
  return std::vector<std::uint64_t>((shape.order() + 63) / 64, 0);
}

void set_bit(std::vector<std::uint64_t>& bits, ElemId x) {
  bits[x >> 6] |= std::uint64_t{1} << (x & 63);
}

int log_p(std::uint64_t n, std::uint64_t p) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

void require_same_shape(const Subgroup& a, const Subgroup& b) {
  if (a.shape() != b.shape()) {
    throw std::invalid_argument("subgroups live in different shapes: " +
                                a.shape().to_string() + " vs " +
                                b.shape().to_string());
  }
}

}  // namespace

std::string IsoType::to_string() const {
  std::string out = std::to_string(prime) + ":";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(exponents[i]);
  }
  return out;
}

Subgroup::Subgroup(std::shared_ptr<const Shape> shape,
                   std::vector<std::uint64_t> bits,
                   std::vector<ElemId> elements,
                   std::vector<ElemId> generators)
    : shape_(std::move(shape)),
      bits_(std::move(bits)),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {}

Subgroup Subgroup::trivial(std::shared_ptr<const Shape> shape) {
  auto bits = empty_bits(*shape);
  set_bit(bits, 0);
  return Subgroup(std::move(shape), std::move(bits), {0}, {});
}

Subgroup Subgroup::trivial(const Shape& shape) {
  return trivial(std::make_shared<const Shape>(shape));
}

Subgroup Subgroup::whole(const Shape& shape) {
  auto ptr = std::make_shared<const Shape>(shape);
  std::vector<ElemId> gens;
  for (int i = 0; i < shape.rank(); ++i) {
    gens.push_back(static_cast<ElemId>(shape.stride(i)));
  }
  return span_ids(ptr, gens);
}

std::vector<ElemId> Subgroup::canonical_generators() const {
  const Shape& g = *shape_;
  std::vector<ElemId> p_multiples;
  p_multiples.reserve(elements_.size());
  for (ElemId h : elements_) p_multiples.push_back(g.scalar_mul(g.prime(), h));
  Subgroup frattini = span_ids(shape_, p_multiples);
  std::vector<ElemId> chosen;
  for (ElemId x : elements_) {
    if (frattini.order() == order()) break;
    if (!frattini.contains(x)) {
      chosen.push_back(x);
      frattini = frattini.extended_by(x);
    }
  }
  return chosen;
}

Subgroup Subgroup::extended_by(ElemId x) const {
  if (contains(x)) return *this;
  const Shape& g = *shape_;
  std::vector<ElemId> elems = elements_;
  std::vector<std::uint64_t> bits = bits_;
  ElemId y = x;
  while (!contains(y)) {
    for (ElemId h : elements_) {
      const ElemId z = g.add(h, y);
      elems.push_back(z);
      set_bit(bits, z);
    }
    y = g.add(y, x);
  }
  std::sort(elems.begin(), elems.end());
  std::vector<ElemId> gens = generators_;
  gens.push_back(x);
  return Subgroup(shape_, std::move(bits), std::move(elems), std::move(gens));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

std::size_t Subgroup::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool enumeration_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  const auto& x = a.bits();
  const auto& y = b.bits();
  for (std::size_t w = 0; w < x.size(); ++w) {
    if (x[w] == y[w]) continue;
    // The lowest differing element belongs to the lexicographically smaller
    // member list.
    const std::uint64_t diff = x[w] ^ y[w];
    const std::uint64_t low = diff & (~diff + 1);
    return (x[w] & low) != 0;
  }
  return false;
}

void sort_enumeration_order(std::vector<Subgroup>& subgroups) {
  std::sort(subgroups.begin(), subgroups.end(), enumeration_less);
}

Subgroup span(const Shape& shape, std::span<const Element> gens) {
  std::vector<ElemId> ids;
  ids.reserve(gens.size());
  for (const Element& x : gens) ids.push_back(shape.encode(x));
  return span_ids(std::make_shared<const Shape>(shape), ids);
}

Subgroup span_ids(std::shared_ptr<const Shape> shape,
                  std::span<const ElemId> gens) {
  Subgroup h = Subgroup::trivial(std::move(shape));
  for (ElemId x : gens) h = h.extended_by(x);
  return h;
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) {
  require_same_shape(a, b);
  return a == b;
}

bool subgroup_contains(const Subgroup& a, const Subgroup& b) {
  require_same_shape(a, b);
  return b.is_subgroup_of(a);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_shape(a, b);
  std::vector<ElemId> common;
  for (ElemId x : a.elements()) {
    if (b.contains(x)) common.push_back(x);
  }
  // The intersection is already closed; spanning it only fixes generators.
  Subgroup h = Subgroup::trivial(a.shape_ptr());
  for (ElemId x : common) {
    if (!h.contains(x)) h = h.extended_by(x);
  }
  return h;
}

Subgroup sum(const Subgroup& a, const Subgroup& b) {
  require_same_shape(a, b);
  Subgroup h = a;
  for (ElemId x : b.generators()) h = h.extended_by(x);
  return h;
}

Subgroup power_subgroup(const Shape& shape, int n) {
  if (n < 0) throw std::invalid_argument("power index must be >= 0");
  auto ptr = std::make_shared<const Shape>(shape);
  std::vector<ElemId> gens;
  for (int i = 0; i < shape.rank(); ++i) {
    if (n >= shape.exponent(i)) continue;
    gens.push_back(static_cast<ElemId>(shape.power(n) * shape.stride(i)));
  }
  return span_ids(ptr, gens);
}

Subgroup socle(const Shape& shape, int m) {
  if (m < 0) throw std::invalid_argument("socle index must be >= 0");
  auto ptr = std::make_shared<const Shape>(shape);
  std::vector<ElemId> gens;
  for (int i = 0; i < shape.rank(); ++i) {
    const int k = shape.exponent(i);
    if (m == 0) break;
    const int shift = k > m ? k - m : 0;
    gens.push_back(static_cast<ElemId>(shape.power(shift) * shape.stride(i)));
  }
  return span_ids(ptr, gens);
}

IsoType iso_type(const Subgroup& h) {
  const Shape& g = h.shape();
  const std::uint64_t p = g.prime();
  // socle_logs[n] = log_p |(p^n H)[p]|.
  std::vector<int> socle_logs;
  std::vector<ElemId> current = h.elements();
  std::vector<std::uint64_t> seen(h.bits().size());
  while (true) {
    std::uint64_t killed = 0;
    for (ElemId x : current) {
      if (g.scalar_mul(p, x) == 0) ++killed;
    }
    socle_logs.push_back(log_p(killed, p));
    if (current.size() == 1) break;
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<ElemId> next;
    for (ElemId x : current) {
      const ElemId y = g.scalar_mul(p, x);
      if (!((seen[y >> 6] >> (y & 63)) & 1U)) {
        set_bit(seen, y);
        next.push_back(y);
      }
    }
    current = std::move(next);
  }
  IsoType type{p, {}};
  for (std::size_t n = 0; n < socle_logs.size(); ++n) {
    const int next = n + 1 < socle_logs.size() ? socle_logs[n + 1] : 0;
    const int f = socle_logs[n] - next;
    for (int j = 0; j < f; ++j) type.exponents.push_back(static_cast<int>(n) + 1);
  }
  return type;
}

std::string element_to_string(const Shape& shape, ElemId x) {
  std::string out = "(";
  for (int i = 0; i < shape.rank(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(shape.coord(x, i));
  }
  return out + ")";
}

std::string describe(const Subgroup& h) {
  std::string out = "<";
  bool first = true;
  for (ElemId g : h.canonical_generators()) {
    if (!first) out += ',';
    first = false;
    out += element_to_string(h.shape(), g);
  }
  return out + ">";
}

}  // namespace charsub
