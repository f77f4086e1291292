#ifndef CHARSUB_CLASSIFY_H_
#define CHARSUB_CLASSIFY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charsub/invariance.h"
#include "charsub/shape.h"
#include "charsub/subgroup.h"

namespace charsub {

// Why a class predicate came out false: either two subgroups of the family
// that are not isomorphic, or a single offending subgroup.
struct Witness {
  std::vector<Subgroup> subgroups;
  std::string reason;
};

struct Decision {
  bool value = true;
  std::optional<Witness> witness;
};

// The characteristic and fully invariant subgroups of one shape, computed
// once and shared by every predicate below.
struct InvariantFamilies {
  std::vector<Subgroup> characteristic;
  std::vector<Subgroup> fully_invariant;
};
InvariantFamilies compute_families(const GroupContext& ctx);

// "Non-trivial" excludes both {0} and G.
Decision classify_ifi(const InvariantFamilies& fam);
Decision classify_ic(const InvariantFamilies& fam);
// "Non-zero" excludes {0} only, so G itself takes part.
Decision classify_strongly_ifi(const InvariantFamilies& fam);
Decision classify_strongly_ic(const InvariantFamilies& fam);
// Some proper characteristic subgroup isomorphic to G.
Decision classify_weakly_ic(const InvariantFamilies& fam);

bool classify_ifi(const Shape& shape);
bool classify_ic(const Shape& shape);
std::pair<bool, bool> classify_strongly(const Shape& shape);
bool classify_weakly_ic(const Shape& shape);

// Closed form for finite p-groups: pG = 0, or p^2 G = 0 with rank(G) =
// rank(pG), i.e. all exponents equal to 1 or all equal to 2.
bool ifi_criterion(const Shape& shape);

struct ClassificationVerdict {
  Shape shape;
  bool is_ifi = false;
  bool is_ic = false;
  bool is_strongly_ifi = false;
  bool is_strongly_ic = false;
  bool is_weakly_ic = false;
  bool criterion_ifi = false;
  bool char_eq_fi = false;
  // Keyed by predicate name ("ifi", "ic", ...), present only for a false
  // predicate (or a true one for "weakly_ic").
  std::vector<std::pair<std::string, Witness>> witnesses;
};

ClassificationVerdict classify(const GroupContext& ctx,
                               const InvariantFamilies& fam);
ClassificationVerdict classify(const Shape& shape);

}  // namespace charsub

#endif  // CHARSUB_CLASSIFY_H_
