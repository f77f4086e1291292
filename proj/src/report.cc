#include "charsub/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace charsub {
namespace {

std::string cell(const Json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string generators_text(const Json& gens) {
  std::string out;
  for (const Json& g : gens) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(g[i].get<std::uint64_t>());
    }
    out += ')';
  }
  return out.empty() ? "-" : out;
}

std::string iso_text(const Json& iso) {
  if (iso.empty()) return "0";
  std::string out;
  for (const Json& k : iso) {
    if (!out.empty()) out += '+';
    out += "Z(p^" + std::to_string(k.get<int>()) + ")";
  }
  return out;
}

// Left-aligned columns, two spaces apart.
std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t c = 0; c < r.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

Json element_json(const Shape& shape, ElemId x) {
  Json out = Json::array();
  for (int i = 0; i < shape.rank(); ++i) out.push_back(shape.coord(x, i));
  return out;
}

Json subgroup_json(const GroupContext& ctx, const Subgroup& h) {
  Json gens = Json::array();
  for (ElemId g : h.canonical_generators()) {
    gens.push_back(element_json(h.shape(), g));
  }
  return Json{{"order", h.order()},
              {"generators", gens},
              {"iso_type", iso_type(h).exponents},
              {"characteristic", is_characteristic(ctx, h)},
              {"fully_invariant", is_fully_invariant(ctx, h)}};
}

Json verdict_json(const GroupContext& ctx, const ClassificationVerdict& v,
                  const VerdictExtras& extras) {
  auto optional_bool = [](const std::optional<bool>& b) {
    return b ? Json(*b) : Json(nullptr);
  };
  Json witnesses = Json::object();
  for (const auto& [name, w] : v.witnesses) {
    Json subs = Json::array();
    for (const Subgroup& h : w.subgroups) subs.push_back(subgroup_json(ctx, h));
    witnesses[name] = Json{{"reason", w.reason}, {"subgroups", subs}};
  }
  return Json{{"shape", v.shape.to_string()},
              {"prime", v.shape.prime()},
              {"partition", v.shape.exponents()},
              {"order", v.shape.order()},
              {"is_ifi", v.is_ifi},
              {"is_ic", v.is_ic},
              {"is_strongly_ifi", v.is_strongly_ifi},
              {"is_strongly_ic", v.is_strongly_ic},
              {"is_weakly_ic", v.is_weakly_ic},
              {"criterion_ifi", v.criterion_ifi},
              {"char_eq_fi", v.char_eq_fi},
              {"fully_transitive", optional_bool(extras.fully_transitive)},
              {"transitive", optional_bool(extras.transitive)},
              {"characteristic_count", extras.characteristic_count},
              {"fully_invariant_count", extras.fully_invariant_count},
              {"witnesses", witnesses}};
}

Json claim_report_json(const ClaimReport& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(Json{{"shape", v.shape}, {"witness", v.witness}});
  }
  // Whole microseconds keep the field short and stable to print.
  const double ms = static_cast<double>(
                        static_cast<std::int64_t>(r.runtime_ms * 1000.0)) /
                    1000.0;
  return Json{{"claim_id", r.claim_id},
              {"prime", r.prime},
              {"max_order", r.max_order},
              {"shapes_checked", r.shapes_checked},
              {"status", to_string(r.status)},
              {"violations", violations},
              {"violation_count", r.violation_count},
              {"adapted_shapes", r.adapted_shapes},
              {"notes", r.notes},
              {"runtime_ms", ms}};
}

Json claim_info_json(const ClaimInfo& c) {
  return Json{{"claim_id", c.id},
              {"statement", c.statement},
              {"in_scope", c.in_scope}};
}

std::string verdict_table(const Json& v) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"shape", cell(v["shape"])});
  rows.push_back({"order", cell(v["order"])});
  for (const char* key :
       {"is_ifi", "is_ic", "is_strongly_ifi", "is_strongly_ic", "is_weakly_ic",
        "criterion_ifi", "char_eq_fi", "fully_transitive", "transitive",
        "characteristic_count", "fully_invariant_count"}) {
    rows.push_back({key, cell(v[key])});
  }
  std::string out = render(rows);
  for (const auto& [name, w] : v["witnesses"].items()) {
    out += "witness " + name + ": " + w["reason"].get<std::string>() + "\n";
    for (const Json& h : w["subgroups"]) {
      out += "  " + generators_text(h["generators"]) + "  ~ " +
             iso_text(h["iso_type"]) + "\n";
    }
  }
  return out;
}

std::string subgroup_table(const Json& subgroups) {
  std::vector<std::vector<std::string>> rows{
      {"order", "type", "char", "fi", "generators"}};
  for (const Json& h : subgroups) {
    rows.push_back({cell(h["order"]), iso_text(h["iso_type"]),
                    h["characteristic"].get<bool>() ? "yes" : "no",
                    h["fully_invariant"].get<bool>() ? "yes" : "no",
                    generators_text(h["generators"])});
  }
  return render(rows);
}

std::string claim_table(const std::vector<Json>& reports) {
  std::vector<std::vector<std::string>> rows{
      {"claim", "status", "shapes", "violations", "ms"}};
  for (const Json& r : reports) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r["runtime_ms"].get<double>());
    rows.push_back({cell(r["claim_id"]), cell(r["status"]),
                    cell(r["shapes_checked"]), cell(r["violation_count"]), ms});
  }
  std::string out = render(rows);
  for (const Json& r : reports) {
    for (const Json& v : r["violations"]) {
      out += r["claim_id"].get<std::string>() + " " +
             v["shape"].get<std::string>() + ": " +
             v["witness"].get<std::string>() + "\n";
    }
    for (const Json& n : r["notes"]) {
      out += r["claim_id"].get<std::string>() + ": " + n.get<std::string>() +
             "\n";
    }
  }
  return out;
}

}  // namespace charsub
