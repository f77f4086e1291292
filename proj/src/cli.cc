#include "charsub/cli.h"

#include <algorithm>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "charsub/cache.h"
#include "charsub/harness.h"
#include "charsub/lattice.h"
#include "charsub/report.h"

namespace charsub {
namespace {

struct Options {
  std::uint64_t p = 0;
  std::string partition;
  bool table = false;
  std::string cache_dir;
  std::string kind = "all";
  std::uint64_t max_order = 0;
  std::string claims = "all";
  unsigned jobs = 0;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Shape parse_shape(const Options& o, const Limits& limits) {
  return Shape::parse(std::to_string(o.p) + ":" + o.partition,
                      limits.carrier_cap);
}

std::unique_ptr<LatticeCache> open_cache(const Options& o, std::ostream& err) {
  if (o.cache_dir.empty()) return nullptr;
  return std::make_unique<LatticeCache>(o.cache_dir, kCacheVersion, &err);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_classify(const Options& o, const Limits& limits, std::ostream& out,
                 std::ostream& err) {
  const Shape shape = parse_shape(o, limits);
  auto cache = open_cache(o, err);
  ShapeWork work(shape, limits, cache.get());
  const InvariantFamilies& fam = work.families();
  VerdictExtras extras;
  extras.fully_transitive =
      is_fully_transitive(work.ctx(), limits.enumeration_cap);
  extras.transitive = is_transitive(work.ctx(), limits.enumeration_cap);
  extras.characteristic_count = fam.characteristic.size();
  extras.fully_invariant_count = fam.fully_invariant.size();
  const Json j = verdict_json(work.ctx(), work.verdict(), extras);
  if (o.table) {
    out << verdict_table(j);
  } else {
    emit(out, j);
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, const Limits& limits, std::ostream& out,
                  std::ostream& err) {
  const Shape shape = parse_shape(o, limits);
  auto cache = open_cache(o, err);
  ShapeWork work(shape, limits, cache.get());
  std::vector<Subgroup> subs;
  if (o.kind == "all") {
    subs = enumerate_subgroups(shape, limits.enumeration_cap,
                               limits.lattice_cap);
  } else if (o.kind == "characteristic") {
    subs = work.families().characteristic;
  } else {
    subs = work.families().fully_invariant;
  }
  Json list = Json::array();
  for (const Subgroup& h : subs) list.push_back(subgroup_json(work.ctx(), h));
  if (o.table) {
    out << subgroup_table(list);
    return kExitOk;
  }
  emit(out, Json{{"shape", shape.to_string()},
                 {"kind", o.kind},
                 {"count", list.size()},
                 {"subgroups", list}});
  return kExitOk;
}

int report_stream(const std::vector<ClaimReport>& reports, bool table,
                  std::ostream& out) {
  std::vector<Json> docs;
  bool failed = false;
  for (const ClaimReport& r : reports) {
    docs.push_back(claim_report_json(r));
    failed = failed || r.status == ClaimStatus::kFail;
  }
  if (table) {
    out << claim_table(docs);
  } else {
    for (const Json& d : docs) out << d.dump() << "\n";
  }
  return failed ? kExitClaimFailed : kExitOk;
}

int cmd_verify(const Options& o, const Limits& limits, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> ids = o.claims == "all" ? in_scope_claim_ids()
                                                   : split_list(o.claims);
  if (ids.empty()) throw std::invalid_argument("no claims given");
  // Reject unknown ids before any work is done.
  for (const std::string& id : ids) {
    if (find_claim(id) == nullptr) {
      throw std::invalid_argument("unknown claim " + id);
    }
  }
  const Corpus corpus = build_corpus(o.p, o.max_order, limits);
  auto cache = open_cache(o, err);
  return report_stream(verify_claims(ids, corpus, limits, cache.get()),
                       o.table, out);
}

int cmd_crosscheck(const Options& o, const Limits& limits, std::ostream& out) {
  const Corpus corpus = build_corpus(o.p, o.max_order, limits);
  return report_stream({oracle_crosscheck(corpus, limits)}, o.table, out);
}

int cmd_claims(const Options& o, std::ostream& out) {
  if (o.table) {
    for (const ClaimInfo& c : claim_registry()) {
      out << c.id << (c.in_scope ? "" : " (out of scope)") << "\n  "
          << c.statement << "\n";
    }
    return kExitOk;
  }
  for (const ClaimInfo& c : claim_registry()) {
    out << claim_info_json(c).dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Characteristic and fully invariant subgroups of finite "
               "abelian p-groups"};
  app.name("charsub");
  app.require_subcommand(1);

  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime")->required();
    sub->add_option("--partition", o.partition,
                    "exponents k1,k2,... in any order")
        ->required();
  };
  auto add_format = [&](CLI::App* sub) {
    auto* table = sub->add_flag("--table", o.table, "human-readable table");
    sub->add_flag("--json", "JSON output (default)")->excludes(table);
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache", o.cache_dir, "lattice cache directory");
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime")->required();
    sub->add_option("--max-order", o.max_order, "largest group order")
        ->required();
    sub->add_option("--jobs", o.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* classify = app.add_subcommand("classify", "classify one group");
  add_shape(classify);
  add_format(classify);
  add_cache(classify);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list subgroups of one group");
  add_shape(enumerate);
  enumerate->add_option("--kind", o.kind, "all|characteristic|fully-invariant")
      ->check(CLI::IsMember({"all", "characteristic", "fully-invariant"}));
  add_format(enumerate);
  add_cache(enumerate);

  CLI::App* verify = app.add_subcommand("verify", "check claims on a corpus");
  add_corpus(verify);
  verify->add_option("--claims", o.claims, "all or a comma-separated list");
  add_format(verify);
  add_cache(verify);

  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "check internal shortcuts against brute force");
  add_corpus(crosscheck);
  add_format(crosscheck);

  CLI::App* claims = app.add_subcommand("claims", "list registered claims");
  add_format(claims);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    // help() on the root defers to the subcommand that asked for it.
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Limits limits = Limits::from_env();
  if (o.jobs > 0) limits.jobs = o.jobs;
  try {
    if (classify->parsed()) return cmd_classify(o, limits, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, limits, out, err);
    if (verify->parsed()) return cmd_verify(o, limits, out, err);
    if (crosscheck->parsed()) return cmd_crosscheck(o, limits, out);
    return cmd_claims(o, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace charsub
