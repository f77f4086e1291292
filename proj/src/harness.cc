#include "charsub/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "charsub/endo.h"
#include "charsub/lattice.h"
#include "charsub/perm_group.h"

namespace charsub {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void partitions(int total, int min_part, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = min_part; k <= total; ++k) {
    prefix.push_back(k);
    partitions(total - k, k, prefix, out);
    prefix.pop_back();
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Subgroup of G generated by the basis elements at the given positions.
Subgroup summand(const std::shared_ptr<const Shape>& g,
                 std::span<const int> positions) {
  std::vector<ElemId> gens;
  for (int i : positions) gens.push_back(static_cast<ElemId>(g->stride(i)));
  return span_ids(g, gens);
}

// Sum of the images of h under the given maps.
Subgroup sum_of_images(const Subgroup& h, const std::vector<EndoMatrix>& maps) {
  Subgroup acc = Subgroup::trivial(h.shape_ptr());
  for (const EndoMatrix& m : maps) acc = sum(acc, image(m, h));
  return acc;
}

// Projection onto the summands at the given positions, as an endomorphism.
EndoMatrix projection(const std::shared_ptr<const Shape>& g,
                      std::span<const int> positions) {
  EndoMatrix m = EndoMatrix::zero(g);
  for (int i : positions) m = matrix_add(m, EndoMatrix::single_entry(g, i, i));
  return m;
}

// Every proper non-empty subset of {0..n-1}, as ascending position lists.
std::vector<std::vector<int>> proper_splits(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  }
  return out;
}

std::string positions_to_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t > 0) out += ',';
    out += std::to_string(s[t]);
  }
  return out + "}";
}

bool all_ones(const Shape& s) {
  return s.max_exponent() == 1;
}

// --- checkers -------------------------------------------------------------

std::vector<std::string> check_thm_2_1(ShapeWork& w) {
  ShapeWork doubled(w.shape().doubled(), w.limits(), w.store());
  const bool ifi = classify_ifi(doubled.families()).value;
  const bool ic = w.verdict().is_ic;
  if (ifi == ic) return {};
  return {"ifi(" + doubled.shape().to_string() + ") = " + yes_no(ifi) +
          " but ic = " + yes_no(ic)};
}

std::vector<std::string> check_thm_2_5_i(ShapeWork& w) {
  const ClassificationVerdict& v = w.verdict();
  if (v.is_ifi == v.criterion_ifi) return {};
  std::string msg = "ifi = " + yes_no(v.is_ifi) +
                    " but criterion = " + yes_no(v.criterion_ifi);
  for (const auto& [name, wit] : v.witnesses) {
    if (name != "ifi") continue;
    msg += "; " + wit.reason + ":";
    for (const Subgroup& h : wit.subgroups) msg += " " + describe(h);
  }
  return {msg};
}

std::vector<std::string> check_thm_2_5_ii(ShapeWork& w) {
  const ClassificationVerdict& v = w.verdict();
  const bool elementary = all_ones(w.shape());
  std::vector<std::string> out;
  if (v.is_strongly_ifi != elementary) {
    out.push_back("strongly ifi = " + yes_no(v.is_strongly_ifi) +
                  " but elementary = " + yes_no(elementary));
  }
  if (v.is_strongly_ic != elementary) {
    out.push_back("strongly ic = " + yes_no(v.is_strongly_ic) +
                  " but elementary = " + yes_no(elementary));
  }
  return out;
}

std::vector<std::string> char_eq_fi_witness(ShapeWork& w) {
  const ClassificationVerdict& v = w.verdict();
  if (v.char_eq_fi) return {};
  for (const auto& [name, wit] : v.witnesses) {
    if (name == "char_eq_fi") {
      return {"characteristic, not fully invariant: " +
              describe(wit.subgroups.at(0))};
    }
  }
  return {"characteristic and fully invariant families differ"};
}

std::vector<std::string> check_lemma_2_14(ShapeWork& w) {
  const GroupContext& ctx = w.ctx();
  const auto& g = ctx.shape_ptr();
  const int n = g->rank();
  std::vector<std::string> out;
  for (const std::vector<int>& a : proper_splits(n)) {
    const std::vector<int> b = complement(n, a);
    const Shape a_shape = g->restrict_to(a);
    const auto a_gens = aut_generators(a_shape);
    for (const Subgroup& h : w.families().characteristic) {
      // Hom(A, B) is spanned by the single-entry maps from A to B; each
      // already factors through the projection onto A.
      for (int j : a) {
        for (int i : b) {
          const EndoMatrix f = EndoMatrix::single_entry(g, i, j);
          if (!stabilizes(f, h)) {
            out.push_back("A = " + positions_to_string(a) + ", H = " +
                          describe(h) + ": f(pi(H)) not in H for a_" +
                          std::to_string(j) + " -> a_" + std::to_string(i));
          }
        }
      }
      const Subgroup pa = project(h, a);
      for (const EndoMatrix& alpha : a_gens) {
        if (!stabilizes(alpha, pa)) {
          out.push_back("A = " + positions_to_string(a) + ", H = " +
                        describe(h) + ": pi(H) = " + describe(pa) +
                        " not characteristic in A");
          break;
        }
      }
    }
  }
  return out;
}

std::vector<std::string> check_lemma_2_17(ShapeWork& w) {
  const GroupContext& ctx = w.ctx();
  const auto& g = ctx.shape_ptr();
  // Decomposition into cyclic summands and into homocyclic layers.
  std::vector<std::pair<std::string, std::vector<std::vector<int>>>> decomps;
  std::vector<std::vector<int>> cyclic;
  for (int i = 0; i < g->rank(); ++i) cyclic.push_back({i});
  decomps.emplace_back("cyclic", std::move(cyclic));
  std::vector<std::vector<int>> layers;
  for (int k : g->distinct_exponents()) layers.push_back(g->layer(k));
  decomps.emplace_back("homocyclic", std::move(layers));

  std::vector<std::string> out;
  for (const auto& [name, parts] : decomps) {
    std::vector<EndoMatrix> projections;
    std::vector<Subgroup> summands;
    for (const auto& part : parts) {
      projections.push_back(projection(g, part));
      summands.push_back(summand(g, part));
    }
    for (const Subgroup& h : w.families().characteristic) {
      Subgroup under = Subgroup::trivial(g);
      for (const Subgroup& s : summands) under = sum(under, intersect(h, s));
      const Subgroup over = sum_of_images(h, projections);
      if (!is_characteristic(ctx, under)) {
        out.push_back(name + ", H = " + describe(h) +
                      ": sum of H n G_i = " + describe(under) +
                      " not characteristic");
      }
      if (!is_characteristic(ctx, over)) {
        out.push_back(name + ", H = " + describe(h) +
                      ": sum of pi_i(H) = " + describe(over) +
                      " not characteristic");
      }
    }
  }
  return out;
}

std::vector<std::string> check_remark_2_17(ShapeWork& w) {
  const auto& g = w.ctx().shape_ptr();
  const int n = g->rank();
  std::vector<std::string> out;
  for (const std::vector<int>& a : proper_splits(n)) {
    const Subgroup a_sub = summand(g, a);
    const Subgroup b_sub = summand(g, complement(n, a));
    const EndoMatrix pi_a = projection(g, a);
    for (const Subgroup& h : w.families().characteristic) {
      if (h.is_trivial() || h.is_subgroup_of(b_sub)) continue;
      const Subgroup meet = intersect(h, a_sub);
      if (meet.is_trivial()) {
        out.push_back("A = " + positions_to_string(a) + ", H = " +
                      describe(h) + ": H not in B but H n A = 0");
        continue;
      }
      // The argument itself: h = a + b in H with a != 0 gives 2a in H n A.
      for (ElemId x : h.generators()) {
        const ElemId ax = pi_a.apply(x);
        if (ax != 0 && !meet.contains(g->scalar_mul(2, ax))) {
          out.push_back("A = " + positions_to_string(a) + ", H = " +
                        describe(h) + ": 2a not in H n A for h = " +
                        element_to_string(*g, x));
        }
      }
    }
  }
  return out;
}

bool example_2_18_shape(const Shape& s, int* index) {
  const auto& e = s.exponents();
  if (s.prime() != 2 || e.size() != 2 || e[0] != 1 || e[1] < 3 ||
      e[1] % 2 == 0) {
    return false;
  }
  if (index != nullptr) *index = (e[1] - 1) / 2;
  return true;
}

std::vector<std::string> check_ex_2_18(ShapeWork& w) {
  int i = 0;
  example_2_18_shape(w.shape(), &i);
  const GroupContext& ctx = w.ctx();
  const Shape& g = ctx.shape();
  const std::vector<ElemId> gen{
      g.encode(g.element({1, static_cast<std::int64_t>(g.power(i))}))};
  const Subgroup h = span_ids(ctx.shape_ptr(), gen);
  std::vector<std::string> out;
  if (!is_characteristic(ctx, h)) {
    out.push_back("<a_1 + 2^" + std::to_string(i) + " a_2> = " + describe(h) +
                  " is not characteristic");
  }
  // The reason given for it: H is generated by its elements x with
  // o(x) = 2^(i+1), h(x) = 0 and h(2x) = i + 1.
  std::vector<ElemId> special;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.power(i + 1) && g.height(x) == 0 &&
        g.height(g.scalar_mul(2, x)) == i + 1) {
      special.push_back(x);
    }
  }
  if (span_ids(ctx.shape_ptr(), special) != h) {
    out.push_back("elements with o(x) = 2^" + std::to_string(i + 1) +
                  ", h(x) = 0, h(2x) = " + std::to_string(i + 1) +
                  " do not generate " + describe(h));
  }
  return out;
}

std::vector<std::string> check_lemma_2_25(ShapeWork& w) {
  std::vector<std::string> out;
  for (const Subgroup& h : w.families().characteristic) {
    const ProfileResult r = projection_profile(w.ctx(), h);
    if (!r.profile) {
      out.push_back("H = " + describe(h) + ": " + r.violation);
      continue;
    }
    for (const std::string& v : profile_condition_violations(h, *r.profile)) {
      out.push_back("H = " + describe(h) + ", " + r.profile->to_string() +
                    ": " + v);
    }
  }
  return out;
}

std::vector<std::string> check_prop_2_26(ShapeWork& w) {
  const bool chr = w.verdict().char_eq_fi;
  const bool kap = kaplansky_2group_predicate(w.shape());
  if (chr == kap) return {};
  std::string msg =
      "char = fi is " + yes_no(chr) + " but Ulm predicate is " + yes_no(kap);
  for (const std::string& s : char_eq_fi_witness(w)) msg += "; " + s;
  return {msg};
}

std::vector<std::string> check_implications(ShapeWork& w) {
  const ClassificationVerdict& v = w.verdict();
  std::vector<std::string> out;
  if (v.is_strongly_ic && !v.is_ic) out.push_back("strongly ic but not ic");
  if (v.is_ic && !v.is_ifi) out.push_back("ic but not ifi");
  if (v.is_strongly_ic && !v.is_strongly_ifi) {
    out.push_back("strongly ic but not strongly ifi");
  }
  const auto& chr = w.families().characteristic;
  for (const Subgroup& h : w.families().fully_invariant) {
    if (!std::binary_search(chr.begin(), chr.end(), h, enumeration_less)) {
      out.push_back("fully invariant but not characteristic: " + describe(h));
    }
  }
  return out;
}

bool always(const Shape&, const Limits&) { return true; }

std::vector<ClaimInfo> make_registry() {
  auto never_adapted = [](const Shape&) { return false; };
  std::vector<ClaimInfo> r;
  r.push_back({"thm-2.1",
               "G+G is IFI if and only if G is IC (checked with two copies; "
               "only shapes whose doubled group fits the enumeration cap)",
               true,
               [](const Shape& s, const Limits& l) {
                 return s.order() <= l.enumeration_cap / s.order();
               },
               check_thm_2_1, never_adapted});
  r.push_back({"thm-2.5-i",
               "a p-group is IFI iff pG = 0, or p^2 G = 0 with r(G) = r(pG)",
               true, always, check_thm_2_5_i, never_adapted});
  r.push_back({"thm-2.5-ii",
               "a p-group is strongly IFI (and strongly IC) iff it is "
               "elementary",
               true, always, check_thm_2_5_ii, never_adapted});
  r.push_back({"lemma-p2g",
               "if p^2 G = 0 every characteristic subgroup is fully invariant",
               true,
               [](const Shape& s, const Limits&) {
                 return s.max_exponent() <= 2;
               },
               char_eq_fi_witness, never_adapted});
  r.push_back({"lemma-2.14",
               "for G = A + B and characteristic H: f(pi_A(H)) <= H for all "
               "f in Hom(A, B), and pi_A(H) is characteristic in A",
               true, always, check_lemma_2_14, never_adapted});
  r.push_back({"prop-2.15",
               "if every cyclic summand has an isomorphic partner, "
               "characteristic subgroups are fully invariant",
               true,
               [](const Shape& s, const Limits&) {
                 const auto& e = s.exponents();
                 for (int k : s.distinct_exponents()) {
                   if (std::count(e.begin(), e.end(), k) < 2) return false;
                 }
                 return true;
               },
               char_eq_fi_witness, never_adapted});
  r.push_back({"prop-2.16",
               "no bounded p-group is weakly IC (bounded-case instance: every "
               "finite group is bounded)",
               true, always,
               [](ShapeWork& w) -> std::vector<std::string> {
                 const ClassificationVerdict& v = w.verdict();
                 if (!v.is_weakly_ic) return {};
                 for (const auto& [name, wit] : v.witnesses) {
                   if (name == "weakly_ic") {
                     return {"proper characteristic subgroup isomorphic to G: " +
                             describe(wit.subgroups.at(0))};
                   }
                 }
                 return {"weakly ic"};
               },
               never_adapted,
               "bounded-case instance: finite groups are bounded, so this "
               "checks the proposition for bounded groups only"});
  r.push_back({"lemma-2.17",
               "for characteristic H and G = sum of G_i (cyclic or homocyclic "
               "parts), sum(H n G_i) and sum(pi_i(H)) are characteristic",
               true, always, check_lemma_2_17, never_adapted});
  r.push_back({"remark-2.17",
               "for odd p, G = A + B and characteristic H not inside B: "
               "H n A != 0, witnessed by 2a",
               true,
               [](const Shape& s, const Limits&) { return s.prime() != 2; },
               check_remark_2_17, never_adapted});
  r.push_back({"ex-2.18",
               "<a_1 + 2^i a_2> is characteristic in Z(2) + Z(2^(2i+1))",
               true,
               [](const Shape& s, const Limits&) {
                 return example_2_18_shape(s, nullptr);
               },
               check_ex_2_18, never_adapted});
  r.push_back({"lemma-2.25",
               "a characteristic H has pi_k(H) = p^(n_k) B_k with (1) n_k <= "
               "k, (2) n_k <= n_(k+r) <= n_k + r, (3) p^(n_k+r) B_(k+r) <= H "
               "when n_k < k, (4) pi_k(H) <= H when r(B_k) >= 2",
               true, always, check_lemma_2_25,
               [](const Shape& s) { return is_sparse_partition(s); }});
  r.push_back({"prop-2.26",
               "for a 2-group, characteristic = fully invariant iff at most "
               "two Ulm invariants equal one, and two only at consecutive "
               "indices",
               true,
               [](const Shape& s, const Limits&) { return s.prime() == 2; },
               check_prop_2_26, never_adapted});
  r.push_back({"odd-p-char-eq-fi",
               "exploratory: characteristic = fully invariant for odd p; a "
               "failure is a finding, not a bug",
               true,
               [](const Shape& s, const Limits&) { return s.prime() != 2; },
               char_eq_fi_witness, never_adapted});
  r.push_back({"def-implications",
               "strongly IC => IC => IFI, strongly IC => strongly IFI, and "
               "fully invariant => characteristic",
               true, always, check_implications, never_adapted});

  auto out_of_scope = [&](std::string id, std::string statement) {
    r.push_back({std::move(id), std::move(statement), false, nullptr, nullptr,
                 nullptr});
  };
  out_of_scope("thm-2.1-ipi",
               "the IPI clause of the G^(m) equivalence; IPI is not defined");
  out_of_scope("torsion-free",
               "types, homogeneous and idempotent-type groups, E-groups and "
               "p-adic ring constructions");
  out_of_scope("separable-p-groups",
               "separable and torsion-complete p-groups, basic subgroups and "
               "p^omega G");
  out_of_scope("divisible-groups",
               "divisible groups beyond their bounded consequences");
  return r;
}

struct ShapeOutcome {
  bool applicable = false;
  bool adapted = false;
  std::vector<std::string> witnesses;
  double ms = 0;
};

// Runs fn(index) for every index on `jobs` threads, largest index first,
// and rethrows the exception of the smallest failing index.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= count) return;
      const std::size_t at = count - 1 - t;
      try {
        fn(at);
      } catch (...) {
        errors[at] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(
                                      jobs, static_cast<unsigned>(count)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < n; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ClaimReport merge(const ClaimInfo& claim, const Corpus& corpus,
                  const std::vector<std::vector<ShapeOutcome>>& per_shape,
                  std::size_t claim_index) {
  ClaimReport rep;
  rep.claim_id = claim.id;
  rep.prime = corpus.prime;
  rep.max_order = corpus.max_order;
  for (std::size_t s = 0; s < corpus.shapes.size(); ++s) {
    const ShapeOutcome& o = per_shape[s][claim_index];
    if (!o.applicable) continue;
    ++rep.shapes_checked;
    rep.runtime_ms += o.ms;
    if (o.adapted) ++rep.adapted_shapes;
    for (const std::string& wit : o.witnesses) {
      ++rep.violation_count;
      if (rep.violations.size() < kMaxStoredWitnesses) {
        rep.violations.push_back({corpus.shapes[s].to_string(), wit});
      }
    }
  }
  if (!claim.report_note.empty()) rep.notes.push_back(claim.report_note);
  if (rep.violation_count > 0) {
    rep.status = ClaimStatus::kFail;
  } else if (rep.adapted_shapes > 0) {
    rep.status = ClaimStatus::kAdapted;
    rep.notes.push_back(std::to_string(rep.adapted_shapes) +
                        " shape(s) with an exponent missing below the largest "
                        "one; conditions checked on present exponents only");
  }
  return rep;
}

}  // namespace

Corpus build_corpus(std::uint64_t prime, std::uint64_t max_order,
                    const Limits& limits) {
  if (!is_prime(prime)) {
    throw std::invalid_argument(std::to_string(prime) + " is not prime");
  }
  if (max_order > limits.carrier_cap) {
    throw CapExceeded("carrier cap", max_order, limits.carrier_cap);
  }
  Corpus c;
  c.prime = prime;
  c.max_order = max_order;
  int top = 0;
  for (std::uint64_t o = prime; o <= max_order; o *= prime) ++top;
  std::vector<std::vector<int>> parts;
  for (int total = 1; total <= top; ++total) {
    std::vector<int> prefix;
    partitions(total, 1, prefix, parts);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& e : parts) c.shapes.emplace_back(prime, e, limits.carrier_cap);
  return c;
}

ShapeWork::ShapeWork(const Shape& shape, const Limits& limits,
                     FamilyStore* store)
    : shape_(shape), limits_(limits), store_(store) {}

const GroupContext& ShapeWork::ctx() {
  if (!ctx_) ctx_.emplace(shape_);
  return *ctx_;
}

const InvariantFamilies& ShapeWork::families() {
  if (families_) return *families_;
  if (store_ != nullptr) families_ = store_->load(shape_);
  if (!families_) {
    families_ = InvariantFamilies{
        enumerate_characteristic(ctx(), limits_.enumeration_cap),
        enumerate_fully_invariant(ctx(), limits_.enumeration_cap)};
    if (store_ != nullptr) store_->save(shape_, *families_);
  }
  return *families_;
}

const ClassificationVerdict& ShapeWork::verdict() {
  if (!verdict_) verdict_.emplace(classify(ctx(), families()));
  return *verdict_;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kAdapted: return "adapted";
    case ClaimStatus::kOutOfScope: return "out-of-scope";
  }
  return "unknown";
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = make_registry();
  return registry;
}

const ClaimInfo* find_claim(const std::string& id) {
  for (const ClaimInfo& c : claim_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> in_scope_claim_ids() {
  std::vector<std::string> out;
  for (const ClaimInfo& c : claim_registry()) {
    if (c.in_scope) out.push_back(c.id);
  }
  return out;
}

std::vector<std::string> check_shape(const std::string& claim_id,
                                     const Shape& shape, const Limits& limits) {
  const ClaimInfo* c = find_claim(claim_id);
  if (c == nullptr) throw std::invalid_argument("unknown claim " + claim_id);
  if (!c->in_scope || !c->applies(shape, limits)) return {};
  ShapeWork w(shape, limits);
  return c->check(w);
}

std::vector<ClaimReport> verify_claims(const std::vector<std::string>& ids,
                                       const Corpus& corpus,
                                       const Limits& limits,
                                       FamilyStore* store) {
  std::vector<const ClaimInfo*> claims;
  for (const std::string& id : ids) {
    const ClaimInfo* c = find_claim(id);
    if (c == nullptr) throw std::invalid_argument("unknown claim " + id);
    claims.push_back(c);
  }
  std::vector<std::vector<ShapeOutcome>> per_shape(
      corpus.shapes.size(), std::vector<ShapeOutcome>(claims.size()));
  parallel_for(corpus.shapes.size(), limits.jobs, [&](std::size_t s) {
    ShapeWork w(corpus.shapes[s], limits, store);
    for (std::size_t c = 0; c < claims.size(); ++c) {
      const ClaimInfo& claim = *claims[c];
      if (!claim.in_scope || !claim.applies(w.shape(), limits)) continue;
      ShapeOutcome& o = per_shape[s][c];
      const auto start = Clock::now();
      o.applicable = true;
      o.adapted = claim.adapted(w.shape());
      o.witnesses = claim.check(w);
      o.ms = ms_since(start);
    }
  });
  std::vector<ClaimReport> out;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    ClaimReport rep = merge(*claims[c], corpus, per_shape, c);
    if (!claims[c]->in_scope) {
      rep.status = ClaimStatus::kOutOfScope;
      rep.notes.push_back("not finitely instantiable; recorded for coverage");
    }
    out.push_back(std::move(rep));
  }
  return out;
}

ClaimReport verify_claim(const std::string& id, const Corpus& corpus,
                         const Limits& limits) {
  return verify_claims({id}, corpus, limits).front();
}

namespace {

// Images of the basis elements, which determine an endomorphism.
std::vector<ElemId> basis_images(const EndoMatrix& m) {
  std::vector<ElemId> key;
  for (int j = 0; j < m.rank(); ++j) {
    key.push_back(m.apply(static_cast<ElemId>(m.shape().stride(j))));
  }
  return key;
}

std::uint64_t seed_for(const Shape& s) {
  // FNV-1a over the canonical name, so runs are reproducible.
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : s.to_string()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

struct CrosscheckOutcome {
  std::vector<std::string> witnesses;
  bool exhaustive_aut = false;
  bool lattice_checked = false;
  double ms = 0;
};

CrosscheckOutcome crosscheck_shape(const Shape& shape, const Limits& limits) {
  const auto start = Clock::now();
  CrosscheckOutcome out;
  ShapeWork w(shape, limits);
  const GroupContext& ctx = w.ctx();
  const auto& g = ctx.shape_ptr();

  // Automorphism generators.
  for (const EndoMatrix& a : ctx.aut_gens()) {
    if (!is_bijective(a)) {
      out.witnesses.push_back("aut generator is not bijective");
    }
  }
  if (endomorphism_count(shape) <= limits.oracle_cap) {
    out.exhaustive_aut = true;
    std::set<std::vector<ElemId>> exhaustive;
    for_each_endomorphism(
        shape,
        [&](const EndoMatrix& m) {
          const bool bij = is_bijective(m);
          if (bij != is_automorphism(m)) {
            out.witnesses.push_back("block criterion disagrees with "
                                    "bijectivity");
          }
          if (bij) exhaustive.insert(basis_images(m));
        },
        limits.oracle_cap);
    std::set<std::vector<ElemId>> closure;
    for (const EndoMatrix& m :
         generated_closure(g, ctx.aut_gens(), limits.oracle_cap)) {
      closure.insert(basis_images(m));
    }
    if (closure != exhaustive) {
      out.witnesses.push_back("generator closure has " +
                              std::to_string(closure.size()) +
                              " automorphisms, exhaustive search " +
                              std::to_string(exhaustive.size()));
    }
  } else {
    std::vector<Perm> perms;
    for (const EndoMatrix& a : ctx.aut_gens()) {
      const auto t = as_permutation(a);
      perms.emplace_back(t.begin(), t.end());
    }
    std::vector<std::uint32_t> base;
    for (int i = 0; i < shape.rank(); ++i) {
      base.push_back(static_cast<std::uint32_t>(shape.stride(i)));
    }
    const BigCount generated =
        permutation_group_order(static_cast<std::uint32_t>(shape.order()),
                                perms, base);
    const BigCount expected = automorphism_group_order(shape);
    if (generated != expected) {
      out.witnesses.push_back("generators give |Aut| = " + to_string(generated) +
                              ", closed form " + to_string(expected));
    }
  }

  // Single-entry stability against random endomorphisms.
  std::mt19937_64 rng(seed_for(shape));
  for (const Subgroup& h : w.families().fully_invariant) {
    for (int t = 0; t < 200; ++t) {
      const EndoMatrix m = random_endomorphism(g, rng);
      if (!stabilizes(m, h)) {
        out.witnesses.push_back("fully invariant " + describe(h) +
                                " moved by a random endomorphism");
        break;
      }
    }
  }

  // Profile candidates against the walk.
  const ProfileCandidates cand = fi_from_profiles(ctx);
  for (const Subgroup& h : cand.rejected) {
    out.witnesses.push_back("profile candidate " + describe(h) +
                            " is not fully invariant");
  }
  if (cand.confirmed != w.families().fully_invariant) {
    out.witnesses.push_back(
        "profile candidates give " + std::to_string(cand.confirmed.size()) +
        " fully invariant subgroups, the walk " +
        std::to_string(w.families().fully_invariant.size()));
  }

  // The walk against a filtered full lattice, when it fits.
  std::optional<std::vector<Subgroup>> lattice;
  try {
    lattice = enumerate_subgroups(shape, limits.enumeration_cap,
                                  limits.lattice_cap);
  } catch (const CapExceeded&) {
  }
  if (lattice) {
    out.lattice_checked = true;
    std::vector<Subgroup> chr, fi;
    for (const Subgroup& h : *lattice) {
      if (is_characteristic(ctx, h)) chr.push_back(h);
      if (is_fully_invariant(ctx, h)) fi.push_back(h);
    }
    if (chr != w.families().characteristic) {
      out.witnesses.push_back("characteristic walk differs from the filtered "
                              "lattice");
    }
    if (fi != w.families().fully_invariant) {
      out.witnesses.push_back("fully invariant walk differs from the filtered "
                              "lattice");
    }
    if (fi != cand.confirmed) {
      out.witnesses.push_back("profile candidates differ from the filtered "
                              "lattice");
    }
  }
  out.ms = ms_since(start);
  return out;
}

}  // namespace

ClaimReport oracle_crosscheck(const Corpus& corpus, const Limits& limits) {
  std::vector<CrosscheckOutcome> per_shape(corpus.shapes.size());
  parallel_for(corpus.shapes.size(), limits.jobs, [&](std::size_t s) {
    per_shape[s] = crosscheck_shape(corpus.shapes[s], limits);
  });
  ClaimReport rep;
  rep.claim_id = "oracle-crosscheck";
  rep.prime = corpus.prime;
  rep.max_order = corpus.max_order;
  std::vector<std::string> exhaustive, schreier, unlatticed;
  for (std::size_t s = 0; s < corpus.shapes.size(); ++s) {
    const CrosscheckOutcome& o = per_shape[s];
    const std::string name = corpus.shapes[s].to_string();
    ++rep.shapes_checked;
    rep.runtime_ms += o.ms;
    (o.exhaustive_aut ? exhaustive : schreier).push_back(name);
    if (!o.lattice_checked) unlatticed.push_back(name);
    for (const std::string& wit : o.witnesses) {
      ++rep.violation_count;
      if (rep.violations.size() < kMaxStoredWitnesses) {
        rep.violations.push_back({name, wit});
      }
    }
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const std::string& s : v) out += (out.empty() ? "" : " ") + s;
    return out;
  };
  rep.notes.push_back("automorphisms by exhaustive search: " +
                      std::to_string(exhaustive.size()) + " shape(s)");
  if (!schreier.empty()) {
    rep.notes.push_back("automorphisms by Schreier-Sims order against the "
                        "closed form (endomorphism count above the oracle "
                        "cap): " + join(schreier));
  }
  if (!unlatticed.empty()) {
    rep.notes.push_back("full lattice above the lattice cap, not filtered: " +
                        join(unlatticed));
  }
  if (rep.violation_count > 0) rep.status = ClaimStatus::kFail;
  return rep;
}

}  // namespace charsub
