#include "charsub/perm_group.h"

#include <algorithm>
#include <stdexcept>

namespace charsub {
namespace {

struct Level {
  std::uint32_t base = 0;
  std::vector<Perm> gens;
  std::vector<std::uint32_t> orbit;
  // transversal[pt] maps base to pt; empty when pt is not in the orbit.
  std::vector<Perm> transversal;
};

Perm identity_perm(std::uint32_t degree) {
  Perm p(degree);
  for (std::uint32_t x = 0; x < degree; ++x) p[x] = x;
  return p;
}

bool is_identity(const Perm& p) {
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    if (p[x] != x) return false;
  }
  return true;
}

// Apply a, then b.
Perm then(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) c[a[x]] = x;
  return c;
}

void compute_orbit(Level& level, std::uint32_t degree) {
  level.orbit.assign(1, level.base);
  level.transversal.assign(degree, Perm{});
  level.transversal[level.base] = identity_perm(degree);
  for (std::size_t at = 0; at < level.orbit.size(); ++at) {
    const std::uint32_t pt = level.orbit[at];
    for (const Perm& g : level.gens) {
      const std::uint32_t q = g[pt];
      if (!level.transversal[q].empty()) continue;
      level.transversal[q] = then(level.transversal[pt], g);
      level.orbit.push_back(q);
    }
  }
}

// Sifts h through levels [from, end). Returns the residue and the level at
// which sifting stopped (levels.size() when it went all the way through).
std::pair<Perm, std::size_t> sift(const std::vector<Level>& levels, Perm h,
                                  std::size_t from) {
  for (std::size_t i = from; i < levels.size(); ++i) {
    const std::uint32_t pt = h[levels[i].base];
    const Perm& u = levels[i].transversal[pt];
    if (u.empty()) return {std::move(h), i};
    h = then(h, inverse(u));
  }
  return {std::move(h), levels.size()};
}

std::uint32_t first_moved_point(const Perm& p) {
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    if (p[x] != x) return x;
  }
  throw std::logic_error("identity has no moved point");
}

}  // namespace

std::string to_string(BigCount n) {
  if (n == 0) return "0";
  std::string s;
  while (n > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

BigCount permutation_group_order(std::uint32_t degree,
                                 const std::vector<Perm>& gens,
                                 const std::vector<std::uint32_t>& base_hint) {
  std::vector<Perm> strong;
  for (const Perm& g : gens) {
    if (g.size() != degree) {
      throw std::invalid_argument("permutation degree mismatch");
    }
    if (!is_identity(g)) strong.push_back(g);
  }
  if (strong.empty()) return 1;

  std::vector<Level> levels;
  for (std::uint32_t b : base_hint) levels.push_back(Level{b, {}, {}, {}});
  // Every generator must move some base point.
  for (const Perm& g : strong) {
    const bool moves_base = std::any_of(
        levels.begin(), levels.end(),
        [&](const Level& l) { return g[l.base] != l.base; });
    if (!moves_base) levels.push_back(Level{first_moved_point(g), {}, {}, {}});
  }
  for (const Perm& g : strong) {
    for (Level& level : levels) {
      level.gens.push_back(g);
      if (g[level.base] != level.base) break;
    }
  }
  for (Level& level : levels) compute_orbit(level, degree);

  std::size_t i = levels.size();
  while (i > 0) {
    const std::size_t at = i - 1;
    bool extended = false;
    for (std::size_t o = 0; o < levels[at].orbit.size() && !extended; ++o) {
      const std::uint32_t pt = levels[at].orbit[o];
      for (std::size_t s = 0; s < levels[at].gens.size(); ++s) {
        const Perm& gen = levels[at].gens[s];
        const Perm& u_pt = levels[at].transversal[pt];
        const Perm& u_img = levels[at].transversal[gen[pt]];
        Perm schreier = then(then(u_pt, gen), inverse(u_img));
        auto [residue, stop] = sift(levels, std::move(schreier), at + 1);
        if (is_identity(residue)) continue;
        if (stop == levels.size()) {
          levels.push_back(Level{first_moved_point(residue), {}, {}, {}});
        }
        for (std::size_t l = at + 1; l <= stop; ++l) {
          levels[l].gens.push_back(residue);
          compute_orbit(levels[l], degree);
        }
        i = stop + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  BigCount order = 1;
  for (const Level& level : levels) order *= level.orbit.size();
  return order;
}

BigCount automorphism_group_order(const Shape& shape) {
  const int n = shape.rank();
  const BigCount p = shape.prime();
  auto pw = [&](int e) {
    BigCount r = 1;
    for (int t = 0; t < e; ++t) r *= p;
    return r;
  };
  const auto& e = shape.exponents();
  BigCount total = 1;
  for (int k = 1; k <= n; ++k) {
    int d = k, c = k;
    while (d < n && e[d] == e[k - 1]) ++d;
    while (c > 1 && e[c - 2] == e[k - 1]) --c;
    total *= pw(d) - pw(k - 1);
    total *= pw(e[k - 1] * (n - d));
    total *= pw((e[k - 1] - 1) * (n - c + 1));
  }
  return total;
}

}  // namespace charsub
