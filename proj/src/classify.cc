#include "charsub/classify.h"

#include <algorithm>

namespace charsub {
namespace {

// First pair (in enumeration order) of non-isomorphic members of family
// among those accepted by keep. Comparing everything against the first
// kept member finds the lexicographically smallest such pair.
Decision pairwise_isomorphic(const std::vector<Subgroup>& family,
                             bool (*keep)(const Subgroup&),
                             const char* family_name) {
  Decision d;
  const Subgroup* first = nullptr;
  IsoType first_type;
  for (const Subgroup& h : family) {
    if (!keep(h)) continue;
    if (first == nullptr) {
      first = &h;
      first_type = iso_type(h);
      continue;
    }
    const IsoType t = iso_type(h);
    if (t != first_type) {
      d.value = false;
      d.witness = Witness{{*first, h},
                          std::string(family_name) + " subgroups of types " +
                              first_type.to_string() + " and " +
                              t.to_string() + " are not isomorphic"};
      return d;
    }
  }
  return d;
}

bool nontrivial(const Subgroup& h) { return !h.is_trivial() && !h.is_whole(); }
bool nonzero(const Subgroup& h) { return !h.is_trivial(); }

}  // namespace

InvariantFamilies compute_families(const GroupContext& ctx) {
  return InvariantFamilies{enumerate_characteristic(ctx),
                           enumerate_fully_invariant(ctx)};
}

Decision classify_ifi(const InvariantFamilies& fam) {
  return pairwise_isomorphic(fam.fully_invariant, nontrivial,
                             "non-trivial fully invariant");
}

Decision classify_ic(const InvariantFamilies& fam) {
  return pairwise_isomorphic(fam.characteristic, nontrivial,
                             "non-trivial characteristic");
}

Decision classify_strongly_ifi(const InvariantFamilies& fam) {
  return pairwise_isomorphic(fam.fully_invariant, nonzero,
                             "non-zero fully invariant");
}

Decision classify_strongly_ic(const InvariantFamilies& fam) {
  return pairwise_isomorphic(fam.characteristic, nonzero,
                             "non-zero characteristic");
}

Decision classify_weakly_ic(const InvariantFamilies& fam) {
  Decision d;
  d.value = false;
  for (const Subgroup& h : fam.characteristic) {
    if (h.is_whole()) continue;
    if (iso_type(h) == IsoType::of(h.shape())) {
      d.value = true;
      d.witness = Witness{{h}, "proper characteristic subgroup isomorphic "
                               "to the whole group"};
      break;
    }
  }
  return d;
}

bool classify_ifi(const Shape& shape) {
  return classify_ifi(compute_families(GroupContext(shape))).value;
}

bool classify_ic(const Shape& shape) {
  return classify_ic(compute_families(GroupContext(shape))).value;
}

std::pair<bool, bool> classify_strongly(const Shape& shape) {
  const InvariantFamilies fam = compute_families(GroupContext(shape));
  return {classify_strongly_ifi(fam).value, classify_strongly_ic(fam).value};
}

bool classify_weakly_ic(const Shape& shape) {
  return classify_weakly_ic(compute_families(GroupContext(shape))).value;
}

bool ifi_criterion(const Shape& shape) {
  const auto& e = shape.exponents();
  const bool elementary =
      std::all_of(e.begin(), e.end(), [](int k) { return k == 1; });
  // p^2 G = 0 and rank(pG) = rank(G) means every summand has exponent 2.
  const bool homocyclic_square =
      std::all_of(e.begin(), e.end(), [](int k) { return k == 2; });
  return elementary || homocyclic_square;
}

ClassificationVerdict classify(const GroupContext& ctx,
                               const InvariantFamilies& fam) {
  ClassificationVerdict v{ctx.shape(), false, false, false, false, false, false, false, {}};
  auto record = [&](const char* name, const Decision& d, bool on) {
    if (d.witness && d.value == on) v.witnesses.emplace_back(name, *d.witness);
    return d.value;
  };
  v.is_ifi = record("ifi", classify_ifi(fam), false);
  v.is_ic = record("ic", classify_ic(fam), false);
  v.is_strongly_ifi = record("strongly_ifi", classify_strongly_ifi(fam), false);
  v.is_strongly_ic = record("strongly_ic", classify_strongly_ic(fam), false);
  v.is_weakly_ic = record("weakly_ic", classify_weakly_ic(fam), true);
  v.criterion_ifi = ifi_criterion(ctx.shape());
  v.char_eq_fi = fam.characteristic == fam.fully_invariant;
  if (!v.char_eq_fi) {
    for (const Subgroup& h : fam.characteristic) {
      if (!std::binary_search(fam.fully_invariant.begin(),
                              fam.fully_invariant.end(), h,
                              enumeration_less)) {
        v.witnesses.emplace_back(
            "char_eq_fi",
            Witness{{h}, "characteristic subgroup that is not fully "
                         "invariant"});
        break;
      }
    }
  }
  return v;
}

ClassificationVerdict classify(const Shape& shape) {
  const GroupContext ctx(shape);
  return classify(ctx, compute_families(ctx));
}

}  // namespace charsub
