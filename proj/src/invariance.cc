#include "charsub/invariance.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace charsub {
namespace {

int log_p(std::uint64_t n, std::uint64_t p) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Keeps only the coordinates of the summands in `keep`.
ElemId mask_coordinates(const Shape& g, ElemId x, const std::vector<bool>& keep) {
  std::uint64_t out = 0;
  for (int i = 0; i < g.rank(); ++i) {
    if (keep[i]) out += g.coord(x, i) * g.stride(i);
  }
  return static_cast<ElemId>(out);
}

Subgroup layer_projection_in(const Subgroup& h, const std::vector<bool>& keep) {
  const Shape& g = h.shape();
  std::vector<ElemId> gens;
  for (ElemId x : h.generators()) gens.push_back(mask_coordinates(g, x, keep));
  return span_ids(h.shape_ptr(), gens);
}

std::vector<Subgroup> invariant_walk(const GroupContext& ctx,
                                     const std::vector<EndoMatrix>& maps,
                                     std::uint64_t enumeration_cap) {
  const Shape& g = ctx.shape();
  if (g.order() > enumeration_cap) {
    throw CapExceeded("enumeration cap", g.order(), enumeration_cap);
  }
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::deque<Subgroup> queue;
  Subgroup zero = Subgroup::trivial(ctx.shape_ptr());
  seen.insert(zero);
  queue.push_back(std::move(zero));
  while (!queue.empty()) {
    Subgroup h = std::move(queue.front());
    queue.pop_front();
    for (ElemId rep : ctx.orbit_representatives()) {
      if (h.contains(rep)) continue;
      const ElemId seed[] = {rep};
      Subgroup next = invariant_closure(h, seed, maps);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Subgroup> out(seen.begin(), seen.end());
  sort_enumeration_order(out);
  return out;
}

}  // namespace

GroupContext::GroupContext(const Shape& shape)
    : shape_(std::make_shared<const Shape>(shape)),
      aut_gens_(aut_generators(shape_)),
      test_set_(stability_test_set(shape_)) {
  const auto order = static_cast<std::uint32_t>(shape_->order());
  std::vector<std::uint32_t> parent(order);
  std::iota(parent.begin(), parent.end(), 0U);
  for (const EndoMatrix& a : aut_gens_) {
    const std::vector<ElemId> image = a.image_table();
    for (ElemId x = 0; x < order; ++x) {
      const std::uint32_t rx = find_root(parent, x);
      const std::uint32_t ry = find_root(parent, image[x]);
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  }
  orbit_of_.assign(order, 0);
  std::vector<std::int64_t> index_of_root(order, -1);
  for (ElemId x = 0; x < order; ++x) {
    const std::uint32_t r = find_root(parent, x);
    if (index_of_root[r] < 0) {
      index_of_root[r] = static_cast<std::int64_t>(orbit_reps_.size());
      orbit_reps_.push_back(x);
    }
    orbit_of_[x] = static_cast<std::uint32_t>(index_of_root[r]);
  }
}

bool is_characteristic(const GroupContext& ctx, const Subgroup& h) {
  return std::all_of(ctx.aut_gens().begin(), ctx.aut_gens().end(),
                     [&](const EndoMatrix& a) { return stabilizes(a, h); });
}

bool is_characteristic(const Subgroup& h) {
  for (const EndoMatrix& a : aut_generators(h.shape_ptr())) {
    if (!stabilizes(a, h)) return false;
  }
  return true;
}

bool is_fully_invariant(const GroupContext& ctx, const Subgroup& h) {
  return std::all_of(ctx.test_set().begin(), ctx.test_set().end(),
                     [&](const EndoMatrix& e) { return stabilizes(e, h); });
}

bool is_fully_invariant(const Subgroup& h) {
  for (const EndoMatrix& e : stability_test_set(h.shape_ptr())) {
    if (!stabilizes(e, h)) return false;
  }
  return true;
}

Subgroup invariant_closure(const Subgroup& h, std::span<const ElemId> seeds,
                           const std::vector<EndoMatrix>& maps) {
  Subgroup k = h;
  std::vector<ElemId> pending(seeds.begin(), seeds.end());
  while (!pending.empty()) {
    const ElemId x = pending.back();
    pending.pop_back();
    if (k.contains(x)) continue;
    k = k.extended_by(x);
    for (const EndoMatrix& m : maps) {
      const ElemId y = m.apply(x);
      if (!k.contains(y)) pending.push_back(y);
    }
  }
  return k;
}

std::vector<Subgroup> enumerate_characteristic(const GroupContext& ctx,
                                               std::uint64_t enumeration_cap) {
  return invariant_walk(ctx, ctx.aut_gens(), enumeration_cap);
}

std::vector<Subgroup> enumerate_fully_invariant(const GroupContext& ctx,
                                                std::uint64_t enumeration_cap) {
  return invariant_walk(ctx, ctx.test_set(), enumeration_cap);
}

std::vector<Subgroup> enumerate_characteristic(const Shape& shape) {
  return enumerate_characteristic(GroupContext(shape));
}

std::vector<Subgroup> enumerate_fully_invariant(const Shape& shape) {
  return enumerate_fully_invariant(GroupContext(shape));
}

int ProjectionProfile::n_for(int k) const {
  for (const auto& [exp, n] : n_values) {
    if (exp == k) return n;
  }
  throw std::out_of_range("exponent " + std::to_string(k) +
                          " is not present in the profile");
}

std::string ProjectionProfile::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (i > 0) out += ", ";
    out += "n" + std::to_string(n_values[i].first) + "=" +
           std::to_string(n_values[i].second);
  }
  return out + "}";
}

Subgroup project(const Subgroup& h, std::span<const int> positions) {
  const Shape& g = h.shape();
  auto target = std::make_shared<const Shape>(g.restrict_to(positions));
  std::vector<ElemId> gens;
  for (ElemId x : h.generators()) {
    std::uint64_t id = 0;
    for (std::size_t t = 0; t < positions.size(); ++t) {
      id += g.coord(x, positions[t]) * target->stride(static_cast<int>(t));
    }
    gens.push_back(static_cast<ElemId>(id));
  }
  return span_ids(target, gens);
}

Subgroup layer_projection(const Subgroup& h, int k) {
  const Shape& g = h.shape();
  std::vector<bool> keep(g.rank(), false);
  for (int i : g.layer(k)) keep[i] = true;
  return layer_projection_in(h, keep);
}

Subgroup layer_power(const Shape& shape, int k, int n) {
  auto ptr = std::make_shared<const Shape>(shape);
  std::vector<ElemId> gens;
  if (n < k) {
    for (int i : shape.layer(k)) {
      gens.push_back(static_cast<ElemId>(shape.power(n) * shape.stride(i)));
    }
  }
  return span_ids(ptr, gens);
}

Subgroup profile_subgroup(const Shape& shape,
                          const ProjectionProfile& profile) {
  auto ptr = std::make_shared<const Shape>(shape);
  std::vector<ElemId> gens;
  for (const auto& [k, n] : profile.n_values) {
    if (n >= k) continue;
    for (int i : shape.layer(k)) {
      gens.push_back(static_cast<ElemId>(shape.power(n) * shape.stride(i)));
    }
  }
  return span_ids(ptr, gens);
}

ProfileResult projection_profile(const GroupContext& ctx, const Subgroup& h) {
  if (!is_characteristic(ctx, h)) {
    throw std::invalid_argument("projection_profile needs a characteristic "
                                "subgroup");
  }
  const Shape& g = h.shape();
  ProfileResult result;
  ProjectionProfile profile;
  for (int k : g.distinct_exponents()) {
    const Subgroup proj = layer_projection(h, k);
    const int r = static_cast<int>(g.layer(k).size());
    const int logp = log_p(proj.order(), g.prime());
    if (logp % r != 0) {
      result.violation = "pi_" + std::to_string(k) + "(H) has order p^" +
                         std::to_string(logp) +
                         ", not a power of p^rank(B_k)";
      return result;
    }
    const int n = k - logp / r;
    if (!proj.is_subgroup_of(layer_power(g, k, n))) {
      result.violation = "pi_" + std::to_string(k) +
                         "(H) is not of the form p^n B_k";
      return result;
    }
    profile.n_values.emplace_back(k, n);
  }
  result.profile = std::move(profile);
  return result;
}

ProfileResult projection_profile(const Subgroup& h) {
  return projection_profile(GroupContext(h.shape()), h);
}

std::vector<std::string> profile_condition_violations(
    const Subgroup& h, const ProjectionProfile& profile) {
  const Shape& g = h.shape();
  std::vector<std::string> out;
  const auto& nv = profile.n_values;
  for (const auto& [k, n] : nv) {
    if (n < 0 || n > k) {
      out.push_back("(1) n_" + std::to_string(k) + " = " + std::to_string(n) +
                    " outside [0, " + std::to_string(k) + "]");
    }
  }
  for (std::size_t a = 0; a < nv.size(); ++a) {
    for (std::size_t b = a + 1; b < nv.size(); ++b) {
      const auto [k, nk] = nv[a];
      const auto [kr, nkr] = nv[b];
      const int r = kr - k;
      if (!(nk <= nkr && nkr <= nk + r)) {
        out.push_back("(2) n_" + std::to_string(k) + " = " +
                      std::to_string(nk) + ", n_" + std::to_string(kr) +
                      " = " + std::to_string(nkr));
      }
      if (nk < k) {
        const Subgroup needed = layer_power(g, kr, std::min(nk + r, kr));
        if (!needed.is_subgroup_of(h)) {
          out.push_back("(3) p^" + std::to_string(nk + r) + " B_" +
                        std::to_string(kr) + " not contained in H");
        }
      }
    }
  }
  for (const auto& [k, n] : nv) {
    if (g.layer(k).size() < 2) continue;
    if (!layer_projection(h, k).is_subgroup_of(h)) {
      out.push_back("(4) pi_" + std::to_string(k) +
                    "(H) not contained in H although rank(B_" +
                    std::to_string(k) + ") >= 2");
    }
  }
  return out;
}

bool is_sparse_partition(const Shape& shape) {
  return static_cast<int>(shape.distinct_exponents().size()) !=
         shape.max_exponent();
}

std::vector<ProjectionProfile> admissible_profiles(const Shape& shape) {
  const std::vector<int> ks = shape.distinct_exponents();
  std::vector<ProjectionProfile> out;
  std::vector<int> ns(ks.size());
  auto recurse = [&](auto&& self, std::size_t at) -> void {
    if (at == ks.size()) {
      ProjectionProfile p;
      for (std::size_t t = 0; t < ks.size(); ++t) {
        p.n_values.emplace_back(ks[t], ns[t]);
      }
      out.push_back(std::move(p));
      return;
    }
    for (int n = 0; n <= ks[at]; ++n) {
      bool ok = true;
      for (std::size_t t = 0; t < at && ok; ++t) {
        const int r = ks[at] - ks[t];
        ok = ns[t] <= n && n <= ns[t] + r;
      }
      if (!ok) continue;
      ns[at] = n;
      self(self, at + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

ProfileCandidates fi_from_profiles(const GroupContext& ctx) {
  ProfileCandidates out;
  for (const ProjectionProfile& p : admissible_profiles(ctx.shape())) {
    Subgroup h = profile_subgroup(ctx.shape(), p);
    if (is_fully_invariant(ctx, h)) {
      out.confirmed.push_back(std::move(h));
    } else {
      out.rejected.push_back(std::move(h));
    }
  }
  sort_enumeration_order(out.confirmed);
  sort_enumeration_order(out.rejected);
  return out;
}

bool kaplansky_2group_predicate(const Shape& shape) {
  if (shape.prime() != 2) {
    throw std::invalid_argument("the Ulm-invariant criterion is stated for "
                                "2-groups only; got p = " +
                                std::to_string(shape.prime()));
  }
  const std::vector<int> f = shape.ulm_invariants();
  std::vector<int> ones;
  for (int n = 0; n < static_cast<int>(f.size()); ++n) {
    if (f[n] == 1) ones.push_back(n);
  }
  if (ones.size() > 2) return false;
  if (ones.size() == 2) return ones[1] == ones[0] + 1;
  return true;
}

bool char_equals_fi(const GroupContext& ctx) {
  return enumerate_characteristic(ctx) == enumerate_fully_invariant(ctx);
}

bool char_equals_fi(const Shape& shape) {
  return char_equals_fi(GroupContext(shape));
}

std::optional<bool> is_fully_transitive(const GroupContext& ctx,
                                        std::uint64_t enumeration_cap) {
  const Shape& g = ctx.shape();
  if (g.order() > enumeration_cap) return std::nullopt;
  std::map<UlmSequence, std::vector<ElemId>> classes;
  for (ElemId y = 0; y < g.order(); ++y) {
    classes[g.ulm_sequence(y)].push_back(y);
  }
  const Subgroup zero = Subgroup::trivial(ctx.shape_ptr());
  for (ElemId x : ctx.orbit_representatives()) {
    const UlmSequence ux = g.ulm_sequence(x);
    const ElemId seed[] = {x};
    const Subgroup reachable = invariant_closure(zero, seed, ctx.test_set());
    for (const auto& [uy, members] : classes) {
      if (!ux.pointwise_le(uy)) continue;
      for (ElemId y : members) {
        if (!reachable.contains(y)) return false;
      }
    }
  }
  return true;
}

std::optional<bool> is_transitive(const GroupContext& ctx,
                                  std::uint64_t enumeration_cap) {
  const Shape& g = ctx.shape();
  if (g.order() > enumeration_cap) return std::nullopt;
  std::map<UlmSequence, std::uint32_t> orbit_of_class;
  for (ElemId y = 0; y < g.order(); ++y) {
    auto [it, inserted] =
        orbit_of_class.emplace(g.ulm_sequence(y), ctx.orbit_of()[y]);
    if (!inserted && it->second != ctx.orbit_of()[y]) return false;
  }
  return true;
}

}  // namespace charsub
