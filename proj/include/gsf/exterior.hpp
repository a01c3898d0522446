#pragma once

#include <gsf/field.hpp>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace gsf {

/// Strictly increasing set of 1-based basis labels, stored as a bitmask
/// (label i ↦ bit i-1). Supports ambient dimensions up to 31.
class IndexSet {
 public:
  static constexpr int kMaxDim = 31;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> labels);
  /// Throws InputError on repeated or out-of-range labels.
  static IndexSet from_labels(std::span<const int> labels);
  static IndexSet from_mask(std::uint32_t mask) { return IndexSet(mask); }

  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool contains(int label) const { return label >= 1 && label <= kMaxDim && (mask_ >> (label - 1)) & 1u; }
  std::vector<int> labels() const;

  /// Lexicographic order on the increasing label lists (for sets of equal size).
  friend bool operator<(IndexSet a, IndexSet b) {
    const std::uint32_t diff = a.mask_ ^ b.mask_;
    return diff != 0 && (a.mask_ & (diff & (~diff + 1u))) != 0;
  }
  friend bool operator==(IndexSet a, IndexSet b) { return a.mask_ == b.mask_; }

 private:
  explicit IndexSet(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// Sign of the permutation sorting `labels`, or 0 if a label repeats.
int sort_sign(std::span<const int> labels);

/// All `size`-element subsets of {1..dim} in lexicographic order.
std::vector<IndexSet> subsets(int dim, int size);

/// Homogeneous element of the exterior algebra over F^dim. Only nonzero
/// coefficients are stored.
class Multivector {
 public:
  using Terms = std::map<IndexSet, Scalar>;

  Multivector(Field f, int dim, int grade);

  /// Basis vector e_i.
  static Multivector basis(Field f, int dim, int i);
  /// Single term coeff · e_{labels}, labels in any order (sign applied).
  static Multivector monomial(Field f, int dim, std::span<const int> labels, const Scalar& coeff);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(IndexSet s) const;

  /// Adds c to the coefficient of e_s, dropping it if the result vanishes.
  void add_term(IndexSet s, const Scalar& c);

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector operator-() const;
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Scalar& s, const Multivector& v);
  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  void check_compatible(const Multivector& o) const;

  Field field_;
  int dim_;
  int grade_;
  Terms terms_;
};

Multivector wedge(const Multivector& u, const Multivector& v);

/// Left derivative ∂/∂e_label: ∂_i (e_i ∧ X) = X for X free of e_i.
Multivector left_derivative(int label, const Multivector& w);

/// Contraction by a list of dual labels, applied right to left:
///   contract({l1, ..., lm}, w) = ∂_{l1} ∂_{l2} ⋯ ∂_{lm} w.
/// Hence contract({j, i}, w) = Σ_K p_{i,j,K} e_K, and
/// contract(L1, contract(L2, w)) = contract(L1 ++ L2, w).
Multivector contract(std::span<const int> dual_labels, const Multivector& w);

/// Rank of the span of equal-grade multivectors (0 for an empty list).
std::size_t span_rank(std::span<const Multivector> vs);

}  // namespace gsf
