#include "charsub/shape.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace charsub {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool UlmSequence::pointwise_le(const UlmSequence& other) const {
  const std::size_t len = std::max(heights.size(), other.heights.size());
  for (std::size_t j = 0; j < len; ++j) {
    const Height a = j < heights.size() ? heights[j] : kInfiniteHeight;
    const Height b =
        j < other.heights.size() ? other.heights[j] : kInfiniteHeight;
    if (a > b) return false;
  }
  return true;
}

std::string UlmSequence::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < heights.size(); ++j) {
    if (j > 0) out += ",";
    out += heights[j] == kInfiniteHeight ? "inf" : std::to_string(heights[j]);
  }
  return out + ")";
}

Shape::Shape(std::uint64_t prime, std::vector<int> exponents,
             std::uint64_t carrier_cap)
    : prime_(prime), exponents_(std::move(exponents)),
      carrier_cap_(carrier_cap) {
  if (!is_prime(prime_)) {
    throw std::invalid_argument(std::to_string(prime_) + " is not prime");
  }
  if (exponents_.empty()) {
    throw std::invalid_argument("exponent partition is empty");
  }
  std::sort(exponents_.begin(), exponents_.end());
  if (exponents_.front() < 1) {
    throw std::invalid_argument("exponents must be >= 1");
  }
  // Dense indices are 32-bit regardless of the configured cap.
  const std::uint64_t hard_cap =
      std::min<std::uint64_t>(carrier_cap_, std::uint64_t{1} << 32);
  for (int k : exponents_) {
    std::uint64_t m = 1;
    for (int e = 0; e < k; ++e) {
      if (m > hard_cap / prime_) {
        throw CapExceeded("carrier cap", hard_cap + 1, carrier_cap_);
      }
      m *= prime_;
    }
    if (order_ > hard_cap / m) {
      throw CapExceeded("carrier cap", hard_cap + 1, carrier_cap_);
    }
    strides_.push_back(order_);
    moduli_.push_back(m);
    order_ *= m;
    log_order_ += k;
  }
}

Shape Shape::parse(std::string_view text, std::uint64_t carrier_cap) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("shape must look like p:k1,k2,...; got '" +
                                std::string(text) + "'");
  }
  auto parse_int = [&](std::string_view part) -> std::uint64_t {
    std::uint64_t value = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || part.empty()) {
      throw std::invalid_argument("not a non-negative integer: '" +
                                  std::string(part) + "'");
    }
    return value;
  };
  const std::uint64_t prime = parse_int(text.substr(0, colon));
  std::vector<int> exponents;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::uint64_t k = parse_int(rest.substr(0, comma));
    if (k > 64) throw std::invalid_argument("exponent too large");
    exponents.push_back(static_cast<int>(k));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Shape(prime, std::move(exponents), carrier_cap);
}

std::string Shape::to_string() const {
  std::string out = std::to_string(prime_) + ":";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(exponents_[i]);
  }
  return out;
}

std::uint64_t Shape::power(int e) const {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= prime_;
  return r;
}

std::vector<int> Shape::layer(int k) const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i) {
    if (exponents_[i] == k) out.push_back(i);
  }
  return out;
}

std::vector<int> Shape::distinct_exponents() const {
  std::vector<int> out = exponents_;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Shape Shape::restrict_to(std::span<const int> positions) const {
  std::vector<int> exps;
  exps.reserve(positions.size());
  for (int i : positions) exps.push_back(exponents_.at(i));
  return Shape(prime_, std::move(exps), carrier_cap_);
}

Shape Shape::doubled() const {
  std::vector<int> exps = exponents_;
  exps.insert(exps.end(), exponents_.begin(), exponents_.end());
  return Shape(prime_, std::move(exps), carrier_cap_);
}

void Shape::check_element(const Element& x) const {
  if (x.coords.size() != exponents_.size()) {
    throw std::invalid_argument("element has " +
                                std::to_string(x.coords.size()) +
                                " coordinates, shape " + to_string() +
                                " has " + std::to_string(rank()));
  }
  for (int i = 0; i < rank(); ++i) {
    if (x.coords[i] >= moduli_[i]) {
      throw std::invalid_argument("unreduced coordinate for shape " +
                                  to_string());
    }
  }
}

Element Shape::element(std::span<const std::int64_t> coords) const {
  if (coords.size() != exponents_.size()) {
    throw std::invalid_argument("element has " + std::to_string(coords.size()) +
                                " coordinates, shape " + to_string() +
                                " has " + std::to_string(rank()));
  }
  Element x;
  x.coords.resize(coords.size());
  for (int i = 0; i < rank(); ++i) {
    const auto m = static_cast<std::int64_t>(moduli_[i]);
    std::int64_t r = coords[i] % m;
    if (r < 0) r += m;
    x.coords[i] = static_cast<std::uint64_t>(r);
  }
  return x;
}

Element Shape::element(std::initializer_list<std::int64_t> coords) const {
  return element(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

Element Shape::zero() const {
  return Element{std::vector<std::uint64_t>(exponents_.size(), 0)};
}

Element Shape::basis(int i) const {
  Element x = zero();
  x.coords.at(i) = 1;
  return x;
}

ElemId Shape::encode(const Element& x) const {
  check_element(x);
  std::uint64_t id = 0;
  for (int i = 0; i < rank(); ++i) id += x.coords[i] * strides_[i];
  return static_cast<ElemId>(id);
}

Element Shape::decode(ElemId id) const {
  Element x;
  x.coords.resize(exponents_.size());
  std::uint64_t rest = id;
  for (int i = 0; i < rank(); ++i) {
    x.coords[i] = rest % moduli_[i];
    rest /= moduli_[i];
  }
  return x;
}

Element Shape::add(const Element& x, const Element& y) const {
  check_element(x);
  check_element(y);
  Element z;
  z.coords.resize(x.coords.size());
  for (int i = 0; i < rank(); ++i) {
    z.coords[i] = (x.coords[i] + y.coords[i]) % moduli_[i];
  }
  return z;
}

Element Shape::neg(const Element& x) const {
  check_element(x);
  Element z;
  z.coords.resize(x.coords.size());
  for (int i = 0; i < rank(); ++i) {
    z.coords[i] = (moduli_[i] - x.coords[i]) % moduli_[i];
  }
  return z;
}

Element Shape::scalar_mul(std::int64_t c, const Element& x) const {
  check_element(x);
  Element z;
  z.coords.resize(x.coords.size());
  for (int i = 0; i < rank(); ++i) {
    const auto m = static_cast<std::int64_t>(moduli_[i]);
    std::int64_t cr = c % m;
    if (cr < 0) cr += m;
    z.coords[i] = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(cr) * x.coords[i]) % moduli_[i]);
  }
  return z;
}

ElemId Shape::add(ElemId x, ElemId y) const {
  std::uint64_t a = x, b = y, out = 0;
  for (int i = 0; i < rank(); ++i) {
    const std::uint64_t m = moduli_[i];
    std::uint64_t s = a % m + b % m;
    if (s >= m) s -= m;
    out += s * strides_[i];
    a /= m;
    b /= m;
  }
  return static_cast<ElemId>(out);
}

ElemId Shape::neg(ElemId x) const {
  std::uint64_t a = x, out = 0;
  for (int i = 0; i < rank(); ++i) {
    const std::uint64_t m = moduli_[i];
    out += ((m - a % m) % m) * strides_[i];
    a /= m;
  }
  return static_cast<ElemId>(out);
}

ElemId Shape::scalar_mul(std::uint64_t c, ElemId x) const {
  std::uint64_t a = x, out = 0;
  for (int i = 0; i < rank(); ++i) {
    const std::uint64_t m = moduli_[i];
    out += ((c % m) * (a % m) % m) * strides_[i];
    a /= m;
  }
  return static_cast<ElemId>(out);
}

int Shape::valuation(std::uint64_t c) const {
  if (c == 0) return -1;
  int v = 0;
  while (c % prime_ == 0) {
    c /= prime_;
    ++v;
  }
  return v;
}

std::uint64_t Shape::element_order(const Element& x) const {
  check_element(x);
  int log_order = 0;
  for (int i = 0; i < rank(); ++i) {
    const int v = valuation(x.coords[i]);
    if (v >= 0) log_order = std::max(log_order, exponents_[i] - v);
  }
  return power(log_order);
}

std::uint64_t Shape::element_order(ElemId x) const {
  return element_order(decode(x));
}

Height Shape::height(const Element& x) const {
  check_element(x);
  Height h = kInfiniteHeight;
  for (int i = 0; i < rank(); ++i) {
    const int v = valuation(x.coords[i]);
    if (v >= 0) h = std::min(h, v);
  }
  return h;
}

Height Shape::height(ElemId x) const { return height(decode(x)); }

UlmSequence Shape::ulm_sequence(const Element& x) const {
  UlmSequence u;
  Element y = x;
  while (true) {
    const Height h = height(y);
    u.heights.push_back(h);
    if (h == kInfiniteHeight) break;
    y = scalar_mul(static_cast<std::int64_t>(prime_), y);
  }
  return u;
}

UlmSequence Shape::ulm_sequence(ElemId x) const {
  return ulm_sequence(decode(x));
}

std::vector<int> Shape::ulm_invariants() const {
  std::vector<int> f(static_cast<std::size_t>(max_exponent()), 0);
  for (int k : exponents_) ++f[k - 1];
  return f;
}

}  // namespace charsub
