#ifndef CHARSUB_ENDO_H_
#define CHARSUB_ENDO_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "charsub/shape.h"
#include "charsub/subgroup.h"

namespace charsub {

// An endomorphism of G = Z(p^k1) + ... + Z(p^kn) as an n x n matrix of
// multipliers. Entry (i, j) is the map from summand j to summand i
//
//   a_j  ->  c_ij * p^max(0, k_i - k_j) * a_i,
//
// with c_ij reduced modulo p^min(k_i, k_j), the order of
// Hom(Z(p^kj), Z(p^ki)). With that reduction the representation is unique.
class EndoMatrix {
 public:
  // Entries are given row-major and reduced on construction.
  EndoMatrix(std::shared_ptr<const Shape> shape,
             std::vector<std::uint64_t> entries);

  static EndoMatrix identity(std::shared_ptr<const Shape> shape);
  static EndoMatrix zero(std::shared_ptr<const Shape> shape);
  // The single-entry map E_ij with multiplier c.
  static EndoMatrix single_entry(std::shared_ptr<const Shape> shape, int i,
                                 int j, std::uint64_t c = 1);

  const Shape& shape() const { return *shape_; }
  const std::shared_ptr<const Shape>& shape_ptr() const { return shape_; }
  int rank() const { return shape_->rank(); }
  std::uint64_t entry(int i, int j) const { return entries_[i * rank() + j]; }
  const std::vector<std::uint64_t>& entries() const { return entries_; }
  // p^min(k_i, k_j).
  std::uint64_t entry_modulus(int i, int j) const;

  Element apply(const Element& x) const;
  ElemId apply(ElemId x) const;
  // apply() on every element, indexed by ElemId. Walks the elements in
  // counting order so each step adds only the columns whose digit moved.
  std::vector<ElemId> image_table() const;

  friend bool operator==(const EndoMatrix& a, const EndoMatrix& b) {
    return *a.shape_ == *b.shape_ && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const Shape> shape_;
  std::vector<std::uint64_t> entries_;
  // c_ij * p^max(0, k_i - k_j) mod p^k_i, the multiplier applied to
  // coordinate j when computing coordinate i.
  std::vector<std::uint64_t> effective_;
};

// apply(compose(m1, m2), x) == apply(m1, apply(m2, x)).
EndoMatrix compose(const EndoMatrix& m1, const EndoMatrix& m2);
EndoMatrix matrix_add(const EndoMatrix& m1, const EndoMatrix& m2);

// Fast criterion: an endomorphism is invertible iff, for every exponent k,
// the diagonal block of the summands of exponent k is invertible mod p.
bool is_automorphism(const EndoMatrix& m);
// Oracle: applies m to every element and checks injectivity.
bool is_bijective(const EndoMatrix& m);

// Generators of Aut(G): diagonal unit multiplications, transpositions of
// equal-exponent summands and the transvections I + E_ij for i != j.
std::vector<EndoMatrix> aut_generators(const Shape& shape);
std::vector<EndoMatrix> aut_generators(std::shared_ptr<const Shape> shape);

// Generators of the unit group of Z/p^k: a smallest primitive root for odd
// p, {-1, 5} for p = 2 and k >= 3, {-1} for p = 2 and k <= 2.
std::vector<std::uint64_t> unit_group_generators(std::uint64_t p, int k);

// The n^2 single-entry maps E_ij (E_ii is the projection onto summand i).
// Every endomorphism is a coefficient combination of them.
std::vector<EndoMatrix> stability_test_set(const Shape& shape);
std::vector<EndoMatrix> stability_test_set(std::shared_ptr<const Shape> shape);

// |End(G)| = prod_{i,j} p^min(k_i, k_j), saturated at UINT64_MAX.
std::uint64_t endomorphism_count(const Shape& shape);

// Calls fn on every endomorphism exactly once. Throws CapExceeded when
// endomorphism_count(shape) is above oracle_cap.
void for_each_endomorphism(const Shape& shape,
                           const std::function<void(const EndoMatrix&)>& fn,
                           std::uint64_t oracle_cap = Limits{}.oracle_cap);
std::vector<EndoMatrix> enumerate_all_endos(
    const Shape& shape, std::uint64_t oracle_cap = Limits{}.oracle_cap);

// Closure of {id} under composition with gens, as the set of distinct
// induced maps. Throws CapExceeded when more than size_cap maps are produced.
std::vector<EndoMatrix> generated_closure(std::shared_ptr<const Shape> shape,
                                          const std::vector<EndoMatrix>& gens,
                                          std::uint64_t size_cap);

EndoMatrix random_endomorphism(std::shared_ptr<const Shape> shape,
                               std::mt19937_64& rng);

// The image of a subgroup under an endomorphism of its shape.
Subgroup image(const EndoMatrix& m, const Subgroup& h);
// m(H) <= H, tested on the generators of H.
bool stabilizes(const EndoMatrix& m, const Subgroup& h);

// The permutation of dense indices induced by an automorphism.
std::vector<ElemId> as_permutation(const EndoMatrix& m);

}  // namespace charsub

#endif  // CHARSUB_ENDO_H_
