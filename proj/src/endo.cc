#include "charsub/endo.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace charsub {
namespace {

void require_same_shape(const EndoMatrix& a, const EndoMatrix& b) {
  if (a.shape() != b.shape()) {
    throw std::invalid_argument("endomorphisms of different shapes: " +
                                a.shape().to_string() + " vs " +
                                b.shape().to_string());
  }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rank of a square matrix over F_p.
int rank_mod_p(std::vector<std::uint64_t> a, int n, std::uint64_t p) {
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (a[r * n + col] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < n; ++c) std::swap(a[rank * n + c], a[pivot * n + c]);
    const std::uint64_t inv = pow_mod(a[rank * n + col] % p, p - 2, p);
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      const std::uint64_t factor = mul_mod(a[r * n + col] % p, inv, p);
      if (factor == 0) continue;
      for (int c = 0; c < n; ++c) {
        const std::uint64_t sub = mul_mod(factor, a[rank * n + c] % p, p);
        a[r * n + c] = (a[r * n + c] % p + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

EndoMatrix::EndoMatrix(std::shared_ptr<const Shape> shape,
                       std::vector<std::uint64_t> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const int n = shape_->rank();
  if (entries_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("matrix has " + std::to_string(entries_.size()) +
                                " entries, shape needs " +
                                std::to_string(n * n));
  }
  effective_.resize(entries_.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto& c = entries_[i * n + j];
      c %= entry_modulus(i, j);
      const int ki = shape_->exponent(i);
      const int kj = shape_->exponent(j);
      const std::uint64_t scale = shape_->power(ki > kj ? ki - kj : 0);
      effective_[i * n + j] = mul_mod(c, scale, shape_->modulus(i));
    }
  }
}

EndoMatrix EndoMatrix::identity(std::shared_ptr<const Shape> shape) {
  const int n = shape->rank();
  std::vector<std::uint64_t> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) e[i * n + i] = 1;
  return EndoMatrix(std::move(shape), std::move(e));
}

EndoMatrix EndoMatrix::zero(std::shared_ptr<const Shape> shape) {
  const int n = shape->rank();
  return EndoMatrix(std::move(shape),
                    std::vector<std::uint64_t>(static_cast<std::size_t>(n) * n));
}

EndoMatrix EndoMatrix::single_entry(std::shared_ptr<const Shape> shape, int i,
                                    int j, std::uint64_t c) {
  const int n = shape->rank();
  std::vector<std::uint64_t> e(static_cast<std::size_t>(n) * n, 0);
  e.at(static_cast<std::size_t>(i) * n + j) = c;
  return EndoMatrix(std::move(shape), std::move(e));
}

std::uint64_t EndoMatrix::entry_modulus(int i, int j) const {
  return shape_->power(std::min(shape_->exponent(i), shape_->exponent(j)));
}

Element EndoMatrix::apply(const Element& x) const {
  return shape_->decode(apply(shape_->encode(x)));
}

ElemId EndoMatrix::apply(ElemId x) const {
  const Shape& g = *shape_;
  const int n = g.rank();
  std::uint64_t coords[64];
  std::uint64_t rest = x;
  for (int j = 0; j < n; ++j) {
    coords[j] = rest % g.modulus(j);
    rest /= g.modulus(j);
  }
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t m = g.modulus(i);
    const std::uint64_t* row = &effective_[static_cast<std::size_t>(i) * n];
    std::uint64_t acc = 0;
    for (int j = 0; j < n; ++j) {
      if (row[j] == 0 || coords[j] == 0) continue;
      acc = (acc + mul_mod(row[j], coords[j], m)) % m;
    }
    out += acc * g.stride(i);
  }
  return static_cast<ElemId>(out);
}

std::vector<ElemId> EndoMatrix::image_table() const {
  const Shape& g = *shape_;
  const int n = g.rank();
  // Nonzero entries of each column: (row, multiplier).
  std::vector<std::vector<std::pair<int, std::uint64_t>>> cols(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t e = effective_[static_cast<std::size_t>(i) * n + j];
      if (e != 0) cols[j].emplace_back(i, e);
    }
  }
  const auto order = static_cast<std::size_t>(g.order());
  std::vector<ElemId> out(order);
  std::vector<std::uint64_t> digit(n, 0), image(n, 0);
  std::uint64_t id = 0;
  for (std::size_t x = 1; x < order; ++x) {
    // A digit wrapping from p^k_j - 1 to 0 adds the column once more, which
    // is right because p^k_j kills the image of a_j.
    for (int j = 0; j < n; ++j) {
      for (const auto& [i, e] : cols[j]) {
        const std::uint64_t m = g.modulus(i);
        const std::uint64_t next = (image[i] + e) % m;
        id = id + next * g.stride(i) - image[i] * g.stride(i);
        image[i] = next;
      }
      if (++digit[j] < g.modulus(j)) break;
      digit[j] = 0;
    }
    out[x] = static_cast<ElemId>(id);
  }
  return out;
}

EndoMatrix compose(const EndoMatrix& m1, const EndoMatrix& m2) {
  require_same_shape(m1, m2);
  const Shape& g = m1.shape();
  const int n = g.rank();
  std::vector<std::uint64_t> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    const int ki = g.exponent(i);
    for (int j = 0; j < n; ++j) {
      const int kj = g.exponent(j);
      const int target_shift = ki > kj ? ki - kj : 0;
      const std::uint64_t mod = m1.entry_modulus(i, j);
      std::uint64_t acc = 0;
      for (int l = 0; l < n; ++l) {
        const int kl = g.exponent(l);
        // a_j -> m2_lj p^s(l,j) a_l -> m1_il m2_lj p^(s(i,l)+s(l,j)) a_i,
        // and s(i,l) + s(l,j) >= s(i,j).
        const int shift = (ki > kl ? ki - kl : 0) + (kl > kj ? kl - kj : 0) -
                          target_shift;
        if (shift >= std::min(ki, kj)) continue;
        const std::uint64_t term =
            mul_mod(mul_mod(m1.entry(i, l), m2.entry(l, j), mod),
                    g.power(shift), mod);
        acc = (acc + term) % mod;
      }
      e[i * n + j] = acc;
    }
  }
  return EndoMatrix(m1.shape_ptr(), std::move(e));
}

EndoMatrix matrix_add(const EndoMatrix& m1, const EndoMatrix& m2) {
  require_same_shape(m1, m2);
  std::vector<std::uint64_t> e = m1.entries();
  for (std::size_t t = 0; t < e.size(); ++t) e[t] += m2.entries()[t];
  return EndoMatrix(m1.shape_ptr(), std::move(e));
}

bool is_automorphism(const EndoMatrix& m) {
  const Shape& g = m.shape();
  for (int k : g.distinct_exponents()) {
    const std::vector<int> layer = g.layer(k);
    const int r = static_cast<int>(layer.size());
    std::vector<std::uint64_t> block(static_cast<std::size_t>(r) * r);
    for (int a = 0; a < r; ++a) {
      for (int b = 0; b < r; ++b) block[a * r + b] = m.entry(layer[a], layer[b]);
    }
    if (rank_mod_p(std::move(block), r, g.prime()) != r) return false;
  }
  return true;
}

bool is_bijective(const EndoMatrix& m) {
  const Shape& g = m.shape();
  std::vector<bool> hit(g.order(), false);
  for (ElemId x = 0; x < g.order(); ++x) {
    const ElemId y = m.apply(x);
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::vector<std::uint64_t> unit_group_generators(std::uint64_t p, int k) {
  std::uint64_t modulus = 1;
  for (int i = 0; i < k; ++i) modulus *= p;
  if (p == 2) {
    if (k >= 3) return {modulus - 1, 5};
    return {modulus - 1};
  }
  const std::uint64_t phi = modulus / p * (p - 1);
  const std::vector<std::uint64_t> factors = prime_factors(phi);
  for (std::uint64_t g = 2; g < modulus; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (std::uint64_t q : factors) {
      if (pow_mod(g, phi / q, modulus) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return {g};
  }
  // Z/p^k has a primitive root for every odd prime p.
  throw std::logic_error("no primitive root found");
}

std::vector<EndoMatrix> aut_generators(std::shared_ptr<const Shape> shape) {
  const int n = shape->rank();
  std::vector<EndoMatrix> gens;
  for (int i = 0; i < n; ++i) {
    for (std::uint64_t u : unit_group_generators(shape->prime(),
                                                 shape->exponent(i))) {
      if (u % shape->modulus(i) == 1) continue;  // the identity
      std::vector<std::uint64_t> e(static_cast<std::size_t>(n) * n, 0);
      for (int t = 0; t < n; ++t) e[t * n + t] = 1;
      e[i * n + i] = u;
      gens.emplace_back(shape, std::move(e));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (shape->exponent(i) != shape->exponent(j)) continue;
      std::vector<std::uint64_t> e(static_cast<std::size_t>(n) * n, 0);
      for (int t = 0; t < n; ++t) e[t * n + t] = 1;
      e[i * n + i] = e[j * n + j] = 0;
      e[i * n + j] = e[j * n + i] = 1;
      gens.emplace_back(shape, std::move(e));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<std::uint64_t> e(static_cast<std::size_t>(n) * n, 0);
      for (int t = 0; t < n; ++t) e[t * n + t] = 1;
      e[i * n + j] = 1;
      gens.emplace_back(shape, std::move(e));
    }
  }
  return gens;
}

std::vector<EndoMatrix> aut_generators(const Shape& shape) {
  return aut_generators(std::make_shared<const Shape>(shape));
}

std::vector<EndoMatrix> stability_test_set(std::shared_ptr<const Shape> shape) {
  std::vector<EndoMatrix> out;
  for (int i = 0; i < shape->rank(); ++i) {
    for (int j = 0; j < shape->rank(); ++j) {
      out.push_back(EndoMatrix::single_entry(shape, i, j));
    }
  }
  return out;
}

std::vector<EndoMatrix> stability_test_set(const Shape& shape) {
  return stability_test_set(std::make_shared<const Shape>(shape));
}

std::uint64_t endomorphism_count(const Shape& shape) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int i = 0; i < shape.rank(); ++i) {
    for (int j = 0; j < shape.rank(); ++j) {
      const int e = std::min(shape.exponent(i), shape.exponent(j));
      for (int t = 0; t < e; ++t) {
        if (count > kMax / shape.prime()) return kMax;
        count *= shape.prime();
      }
    }
  }
  return count;
}

void for_each_endomorphism(const Shape& shape,
                           const std::function<void(const EndoMatrix&)>& fn,
                           std::uint64_t oracle_cap) {
  const std::uint64_t total = endomorphism_count(shape);
  if (total > oracle_cap) throw CapExceeded("oracle cap", total, oracle_cap);
  auto ptr = std::make_shared<const Shape>(shape);
  const int n = shape.rank();
  std::vector<std::uint64_t> moduli;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      moduli.push_back(
          shape.power(std::min(shape.exponent(i), shape.exponent(j))));
    }
  }
  std::vector<std::uint64_t> digits(moduli.size(), 0);
  while (true) {
    fn(EndoMatrix(ptr, digits));
    std::size_t t = 0;
    while (t < digits.size() && ++digits[t] == moduli[t]) {
      digits[t] = 0;
      ++t;
    }
    if (t == digits.size()) break;
  }
}

std::vector<EndoMatrix> enumerate_all_endos(const Shape& shape,
                                            std::uint64_t oracle_cap) {
  std::vector<EndoMatrix> out;
  for_each_endomorphism(
      shape, [&](const EndoMatrix& m) { out.push_back(m); }, oracle_cap);
  return out;
}

std::vector<EndoMatrix> generated_closure(std::shared_ptr<const Shape> shape,
                                          const std::vector<EndoMatrix>& gens,
                                          std::uint64_t size_cap) {
  const int n = shape->rank();
  // An endomorphism is determined by the images of the basis elements.
  auto action_key = [&](const EndoMatrix& m) {
    std::vector<ElemId> key;
    key.reserve(n);
    for (int j = 0; j < n; ++j) {
      key.push_back(m.apply(static_cast<ElemId>(shape->stride(j))));
    }
    return key;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<ElemId>& v) const {
      std::size_t h = 0;
      for (ElemId x : v) h = h * 1000003u ^ x;
      return h;
    }
  };
  std::unordered_map<std::vector<ElemId>, std::size_t, KeyHash> index;
  std::vector<EndoMatrix> out;
  std::deque<std::size_t> queue;
  const EndoMatrix id = EndoMatrix::identity(shape);
  index.emplace(action_key(id), 0);
  out.push_back(id);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (const EndoMatrix& g : gens) {
      EndoMatrix next = compose(g, out[at]);
      auto key = action_key(next);
      if (index.contains(key)) continue;
      if (out.size() >= size_cap) {
        throw CapExceeded("closure size cap", out.size() + 1, size_cap);
      }
      index.emplace(std::move(key), out.size());
      queue.push_back(out.size());
      out.push_back(std::move(next));
    }
  }
  return out;
}

EndoMatrix random_endomorphism(std::shared_ptr<const Shape> shape,
                               std::mt19937_64& rng) {
  const int n = shape->rank();
  std::vector<std::uint64_t> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::uint64_t mod =
          shape->power(std::min(shape->exponent(i), shape->exponent(j)));
      e[i * n + j] = std::uniform_int_distribution<std::uint64_t>(0, mod - 1)(rng);
    }
  }
  return EndoMatrix(std::move(shape), std::move(e));
}

Subgroup image(const EndoMatrix& m, const Subgroup& h) {
  std::vector<ElemId> gens;
  gens.reserve(h.generators().size());
  for (ElemId x : h.generators()) gens.push_back(m.apply(x));
  return span_ids(h.shape_ptr(), gens);
}

bool stabilizes(const EndoMatrix& m, const Subgroup& h) {
  for (ElemId x : h.generators()) {
    if (!h.contains(m.apply(x))) return false;
  }
  return true;
}

std::vector<ElemId> as_permutation(const EndoMatrix& m) {
  std::vector<ElemId> perm(m.shape().order());
  for (ElemId x = 0; x < perm.size(); ++x) perm[x] = m.apply(x);
  return perm;
}

}  // namespace charsub
