#include "charsub/lattice.h"

#include <memory>
#include <unordered_set>

namespace charsub {

std::vector<Subgroup> enumerate_subgroups(const Shape& shape,
                                          std::uint64_t enumeration_cap,
                                          std::uint64_t count_cap) {
  if (shape.order() > enumeration_cap) {
    throw CapExceeded("enumeration cap", shape.order(), enumeration_cap);
  }
  auto ptr = std::make_shared<const Shape>(shape);
  const std::uint64_t p = shape.prime();
  const std::size_t words = (shape.order() + 63) / 64;

  std::vector<Subgroup> all;
  std::vector<Subgroup> layer{Subgroup::trivial(ptr)};
  while (!layer.empty()) {
    std::unordered_set<Subgroup, SubgroupHash> next;
    for (const Subgroup& h : layer) {
      // Elements already inside some cover of h found so far.
      std::vector<std::uint64_t> covered = h.bits();
      for (ElemId x = 0; x < shape.order(); ++x) {
        if ((covered[x >> 6] >> (x & 63)) & 1U) continue;
        if (!h.contains(shape.scalar_mul(p, x))) continue;
        Subgroup cover = h.extended_by(x);
        for (std::size_t w = 0; w < words; ++w) covered[w] |= cover.bits()[w];
        next.insert(std::move(cover));
      }
    }
    for (Subgroup& h : layer) all.push_back(std::move(h));
    if (all.size() + next.size() > count_cap) {
      throw CapExceeded("lattice cap", all.size() + next.size(), count_cap);
    }
    layer.assign(next.begin(), next.end());
  }
  sort_enumeration_order(all);
  return all;
}

}  // namespace charsub
