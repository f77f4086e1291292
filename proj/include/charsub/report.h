#ifndef CHARSUB_REPORT_H_
#define CHARSUB_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "charsub/classify.h"
#include "charsub/harness.h"
#include "charsub/invariance.h"

namespace charsub {

using Json = nlohmann::json;

// Object keys come out sorted (nlohmann's default map), so equal inputs
// always serialize to the same bytes.

Json element_json(const Shape& shape, ElemId x);
// {order, generators, iso_type, characteristic, fully_invariant}.
Json subgroup_json(const GroupContext& ctx, const Subgroup& h);

struct VerdictExtras {
  std::optional<bool> fully_transitive;
  std::optional<bool> transitive;
  std::size_t characteristic_count = 0;
  std::size_t fully_invariant_count = 0;
};
Json verdict_json(const GroupContext& ctx, const ClassificationVerdict& v,
                  const VerdictExtras& extras);

Json claim_report_json(const ClaimReport& r);
Json claim_info_json(const ClaimInfo& c);

// Plain-text views derived from the JSON documents above.
std::string verdict_table(const Json& verdict);
std::string subgroup_table(const Json& subgroups);
std::string claim_table(const std::vector<Json>& reports);

}  // namespace charsub

#endif  // CHARSUB_REPORT_H_
