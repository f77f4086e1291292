#ifndef CHARSUB_LATTICE_H_
#define CHARSUB_LATTICE_H_

#include <cstdint>
#include <vector>

#include "charsub/shape.h"
#include "charsub/subgroup.h"

namespace charsub {

// Every subgroup of the group exactly once, in enumeration order.
//
// Breadth-first walk of the lattice by order: each subgroup H of order p^j
// is extended by every element x outside H with p x in H, giving all the
// subgroups that contain H with index p. Every subgroup is reached through
// some chain of such covers, and duplicates are removed by bit-vector hash
// with full equality on collision.
//
// Throws CapExceeded when |G| is above enumeration_cap or when more than
// count_cap subgroups turn up.
std::vector<Subgroup> enumerate_subgroups(
    const Shape& shape, std::uint64_t enumeration_cap = Limits{}.enumeration_cap,
    std::uint64_t count_cap = Limits{}.lattice_cap);

}  // namespace charsub

#endif  // CHARSUB_LATTICE_H_
