#ifndef CHARSUB_HARNESS_H_
#define CHARSUB_HARNESS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "charsub/classify.h"
#include "charsub/invariance.h"
#include "charsub/limits.h"
#include "charsub/shape.h"

namespace charsub {

// Every shape of the given prime with order at most max_order, ordered by
// number of summands and then lexicographically by exponents.
struct Corpus {
  std::uint64_t prime = 2;
  std::uint64_t max_order = 1;
  std::vector<Shape> shapes;
};

// Throws std::invalid_argument for a non-prime p and CapExceeded when
// max_order is above limits.carrier_cap.
Corpus build_corpus(std::uint64_t prime, std::uint64_t max_order,
                    const Limits& limits = Limits{});

// Somewhere to keep invariant families between runs. Implementations must
// allow concurrent calls for different shapes.
class FamilyStore {
 public:
  virtual ~FamilyStore() = default;
  virtual std::optional<InvariantFamilies> load(const Shape& shape) = 0;
  virtual void save(const Shape& shape, const InvariantFamilies& fam) = 0;
};

// Lazily computed data for one shape, shared by all checkers run on it.
// Not thread-safe; each worker owns its own instances.
class ShapeWork {
 public:
  explicit ShapeWork(const Shape& shape, const Limits& limits = Limits{},
                     FamilyStore* store = nullptr);

  const Shape& shape() const { return shape_; }
  const Limits& limits() const { return limits_; }
  FamilyStore* store() const { return store_; }
  const GroupContext& ctx();
  const InvariantFamilies& families();
  const ClassificationVerdict& verdict();

 private:
  Shape shape_;
  Limits limits_;
  FamilyStore* store_;
  std::optional<GroupContext> ctx_;
  std::optional<InvariantFamilies> families_;
  std::optional<ClassificationVerdict> verdict_;
};

struct Violation {
  std::string shape;
  std::string witness;
};

enum class ClaimStatus { kPass, kFail, kAdapted, kOutOfScope };
std::string to_string(ClaimStatus s);

struct ClaimReport {
  std::string claim_id;
  std::uint64_t prime = 0;
  std::uint64_t max_order = 0;
  std::uint64_t shapes_checked = 0;
  ClaimStatus status = ClaimStatus::kPass;
  // At most kMaxStoredWitnesses entries; violation_count has the total.
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
  // Shapes checked under the present-exponents reading of a statement.
  std::uint64_t adapted_shapes = 0;
  std::vector<std::string> notes;
  double runtime_ms = 0;
};

inline constexpr std::size_t kMaxStoredWitnesses = 16;

// One registered claim. check returns one witness string per violation
// found on the shape; adapted marks shapes where the statement is only
// checked in its adapted form.
struct ClaimInfo {
  std::string id;
  std::string statement;
  bool in_scope = true;
  std::function<bool(const Shape&, const Limits&)> applies;
  std::function<std::vector<std::string>(ShapeWork&)> check;
  std::function<bool(const Shape&)> adapted;
  // Copied into every report of the claim.
  std::string report_note = {};
};

const std::vector<ClaimInfo>& claim_registry();
// nullptr when unknown.
const ClaimInfo* find_claim(const std::string& id);
// The ids of all in-scope claims, in registry order.
std::vector<std::string> in_scope_claim_ids();

// Runs the claim's checker on a single shape, for reproducing a witness.
// Throws std::invalid_argument for an unknown id.
std::vector<std::string> check_shape(const std::string& claim_id,
                                     const Shape& shape,
                                     const Limits& limits = Limits{});

// Runs every claim on every applicable corpus shape. Shapes are spread over
// limits.jobs worker threads; the reports do not depend on the job count
// except for runtime_ms. Throws std::invalid_argument on an unknown id.
std::vector<ClaimReport> verify_claims(const std::vector<std::string>& ids,
                                       const Corpus& corpus,
                                       const Limits& limits = Limits{},
                                       FamilyStore* store = nullptr);
ClaimReport verify_claim(const std::string& id, const Corpus& corpus,
                         const Limits& limits = Limits{});

// Cross-checks the internal shortcuts against brute force on every shape:
// automorphism generators against the exhaustive automorphism set (or,
// above limits.oracle_cap, a Schreier-Sims order against the closed-form
// |Aut|), the single-entry stability test against random endomorphisms,
// profile candidates against the fully invariant walk, and the walk against
// a filtered full lattice.
ClaimReport oracle_crosscheck(const Corpus& corpus,
                              const Limits& limits = Limits{});

}  // namespace charsub

#endif  // CHARSUB_HARNESS_H_
