#ifndef CHARSUB_PERM_GROUP_H_
#define CHARSUB_PERM_GROUP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "charsub/shape.h"

namespace charsub {

using Perm = std::vector<std::uint32_t>;
using BigCount = unsigned __int128;

std::string to_string(BigCount n);

// Order of the permutation group generated by gens on {0, ..., degree-1},
// computed with the deterministic Schreier-Sims algorithm. base_hint lists
// points to use as the first base points; more are added as needed.
BigCount permutation_group_order(std::uint32_t degree,
                                 const std::vector<Perm>& gens,
                                 const std::vector<std::uint32_t>& base_hint = {});

// |Aut(G)| from the closed-form count for finite abelian p-groups
// (Hillar and Rhea): with e_1 <= ... <= e_n, d_k = max{l : e_l = e_k} and
// c_k = min{l : e_l = e_k},
//   |Aut| = prod_k (p^d_k - p^(k-1)) * prod_j (p^e_j)^(n-d_j)
//           * prod_i (p^(e_i-1))^(n-c_i+1).
BigCount automorphism_group_order(const Shape& shape);

}  // namespace charsub

#endif  // CHARSUB_PERM_GROUP_H_
