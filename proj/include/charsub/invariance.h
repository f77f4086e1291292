#ifndef CHARSUB_INVARIANCE_H_
#define CHARSUB_INVARIANCE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "charsub/endo.h"
#include "charsub/shape.h"
#include "charsub/subgroup.h"

namespace charsub {

// Per-shape data shared by the invariance tests: automorphism generators,
// the single-entry endomorphisms and the Aut-orbits of the elements.
// Immutable after construction, so one instance can be shared between
// threads.
class GroupContext {
 public:
  explicit GroupContext(const Shape& shape);

  const Shape& shape() const { return *shape_; }
  const std::shared_ptr<const Shape>& shape_ptr() const { return shape_; }
  const std::vector<EndoMatrix>& aut_gens() const { return aut_gens_; }
  const std::vector<EndoMatrix>& test_set() const { return test_set_; }
  // orbit_of()[x] is the index of the Aut-orbit containing x.
  const std::vector<std::uint32_t>& orbit_of() const { return orbit_of_; }
  // Smallest element of each orbit, ascending.
  const std::vector<ElemId>& orbit_representatives() const {
    return orbit_reps_;
  }

 private:
  std::shared_ptr<const Shape> shape_;
  std::vector<EndoMatrix> aut_gens_;
  std::vector<EndoMatrix> test_set_;
  std::vector<std::uint32_t> orbit_of_;
  std::vector<ElemId> orbit_reps_;
};

// Stable under every automorphism. Checked on the generators of Aut(G):
// for finite H, a(H) <= H already forces a(H) = H.
bool is_characteristic(const Subgroup& h);
bool is_characteristic(const GroupContext& ctx, const Subgroup& h);

// Stable under every endomorphism, checked on the single-entry maps E_ij:
// every endomorphism is a sum of multiples of them and H is closed under
// addition.
bool is_fully_invariant(const Subgroup& h);
bool is_fully_invariant(const GroupContext& ctx, const Subgroup& h);

// Smallest subgroup containing h and seeds that is stable under maps.
// h itself must already be stable under maps.
Subgroup invariant_closure(const Subgroup& h, std::span<const ElemId> seeds,
                           const std::vector<EndoMatrix>& maps);

// The characteristic (resp. fully invariant) subgroups in enumeration order.
//
// Both are unions of Aut-orbits, so they are found by a lattice walk over
// invariant closures: starting from {0}, every known subgroup H is extended
// by one orbit representative x outside H to the invariant closure of
// H + <x>. Every invariant K > H contains such an x and the closure stays
// inside K, so each invariant subgroup is reached. Throws CapExceeded when
// |G| is above enumeration_cap.
std::vector<Subgroup> enumerate_characteristic(
    const GroupContext& ctx,
    std::uint64_t enumeration_cap = Limits{}.enumeration_cap);
std::vector<Subgroup> enumerate_fully_invariant(
    const GroupContext& ctx,
    std::uint64_t enumeration_cap = Limits{}.enumeration_cap);
std::vector<Subgroup> enumerate_characteristic(const Shape& shape);
std::vector<Subgroup> enumerate_fully_invariant(const Shape& shape);

// For each exponent k present in the shape, the n_k with
// pi_k(H) = p^(n_k) B_k, where B_k is the homocyclic layer of exponent k.
// n_k = k means pi_k(H) = 0.
struct ProjectionProfile {
  // (k, n_k) pairs, ascending in k.
  std::vector<std::pair<int, int>> n_values;

  int n_for(int k) const;
  std::string to_string() const;
  friend bool operator==(const ProjectionProfile&,
                         const ProjectionProfile&) = default;
};

struct ProfileResult {
  std::optional<ProjectionProfile> profile;
  // Set when some pi_k(H) is not of the form p^n B_k.
  std::string violation;
};

// Projection of h onto the summands at the given positions, as a subgroup
// of shape.restrict_to(positions).
Subgroup project(const Subgroup& h, std::span<const int> positions);
// pi_k(H) as a subgroup of G (supported on the exponent-k layer).
Subgroup layer_projection(const Subgroup& h, int k);
// p^n B_k as a subgroup of G.
Subgroup layer_power(const Shape& shape, int k, int n);
// (+)_k p^(n_k) B_k.
Subgroup profile_subgroup(const Shape& shape, const ProjectionProfile& profile);

// Throws std::invalid_argument when h is not characteristic.
ProfileResult projection_profile(const GroupContext& ctx, const Subgroup& h);
ProfileResult projection_profile(const Subgroup& h);

// Structural conditions on the projection profile of a characteristic H,
// evaluated over the exponents present in the shape:
//   (1) n_k <= k;
//   (2) n_k <= n_(k+r) <= n_k + r;
//   (3) n_k < k implies p^(n_k + r) B_(k+r) <= H;
//   (4) a layer of rank >= 2 has pi_k(H) <= H.
// Returns one message per failed condition.
std::vector<std::string> profile_condition_violations(
    const Subgroup& h, const ProjectionProfile& profile);

// True when some exponent between 1 and the largest one is missing, so the
// profile conditions are only checked on the exponents that are present.
bool is_sparse_partition(const Shape& shape);

// All profiles satisfying (1)-(2) on the present exponents.
std::vector<ProjectionProfile> admissible_profiles(const Shape& shape);

struct ProfileCandidates {
  // Candidates that passed the fully-invariant test, in enumeration order.
  std::vector<Subgroup> confirmed;
  // Candidates that did not; non-empty only on a bug.
  std::vector<Subgroup> rejected;
};
ProfileCandidates fi_from_profiles(const GroupContext& ctx);

// At most two Ulm invariants equal to one, and if exactly two, at
// consecutive indices. Throws std::invalid_argument unless p = 2.
bool kaplansky_2group_predicate(const Shape& shape);

// enumerate_characteristic == enumerate_fully_invariant as sets.
bool char_equals_fi(const GroupContext& ctx);
bool char_equals_fi(const Shape& shape);

// Whenever U(x) <= U(y) pointwise, some endomorphism maps x to y. Uses that
// { e(x) : e in End(G) } is the fully invariant closure of x. Returns
// nullopt ("not computed") when |G| is above enumeration_cap.
std::optional<bool> is_fully_transitive(
    const GroupContext& ctx,
    std::uint64_t enumeration_cap = Limits{}.enumeration_cap);
// Whenever U(x) = U(y), some automorphism maps x to y; equivalently every
// Ulm-sequence class is a single Aut-orbit.
std::optional<bool> is_transitive(
    const GroupContext& ctx,
    std::uint64_t enumeration_cap = Limits{}.enumeration_cap);

}  // namespace charsub

#endif  // CHARSUB_INVARIANCE_H_
