#pragma once

#include <gsf/exterior.hpp>
#include <gsf/matrix.hpp>
#include <gsf/report.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace gsf {

/// Plücker coordinates of a point of Gr(n+1, 2n+1): one scalar per
/// (n+1)-subset of {1..2n+1}.
class PlueckerTable {
 public:
  using Entries = std::map<IndexSet, Scalar>;

  /// `entries` must hold exactly the C(2n+1, n+1) sorted keys.
  PlueckerTable(int n, Field f, Entries entries);

  int n() const { return n_; }
  int dim() const { return 2 * n_ + 1; }
  const Field& field() const { return field_; }
  const Entries& entries() const { return entries_; }

  /// Entry for a sorted key.
  const Scalar& at(IndexSet key) const;

  /// p_{l1,...,l(n+1)} for labels in any order: the sorted entry times the
  /// sign of the sorting permutation, zero if a label repeats. Every reordered
  /// Plücker lookup in the library goes through here.
  Scalar signed_at(std::span<const int> labels) const;
  Scalar signed_at(std::initializer_list<int> labels) const {
    return signed_at(std::span<const int>(labels.begin(), labels.size()));
  }

  /// Copy with one entry replaced.
  PlueckerTable with_entry(IndexSet key, const Scalar& value) const;

  /// w = Σ p_K e_K, the (n+1)-vector of the point.
  Multivector top() const;

 private:
  int n_;
  Field field_;
  Entries entries_;
};

/// Point of Gr(n+1, 2n+1) given by a full-rank (n+1)×(2n+1) matrix, together
/// with its Plücker table (computed eagerly, optionally overridden).
class GrassmannPoint {
 public:
  /// Throws InputError on wrong shape or rank deficiency.
  GrassmannPoint(int n, Matrix m);

  int n() const { return n_; }
  const Field& field() const { return matrix_.field(); }
  const Matrix& matrix() const { return matrix_; }
  const PlueckerTable& table() const { return table_; }
  bool table_overridden() const { return overridden_; }

  /// Same matrix, different Plücker table. Used for mutation fixtures: the
  /// table no longer has to come from any matrix.
  GrassmannPoint with_table(PlueckerTable t) const;

 private:
  int n_;
  Matrix matrix_;
  PlueckerTable table_;
  bool overridden_ = false;
};

/// Maximal minors of an (n+1)×(2n+1) matrix.
PlueckerTable pluecker_table(int n, const Matrix& m);

struct AssumptionResult {
  bool holds;
  std::vector<IndexSet> vanishing;
};

/// All Plücker coordinates nonzero?
AssumptionResult assumption_check(const PlueckerTable& t);

inline constexpr int kDefaultMaxTries = 10000;

/// Rejection-samples a point whose Plücker coordinates are all nonzero.
/// Deterministic in `seed`; throws SamplingError after `max_tries` attempts.
GrassmannPoint random_point(int n, Field f, std::uint64_t seed, int max_tries = kDefaultMaxTries,
                            int rational_bound = 9);

/// φ^{i,j} = Σ_K p_{i,j,K} e_K over increasing (n-1)-sets K.
Multivector phi(const PlueckerTable& t, int i, int j);

/// ψ_{i,j} = e_i ∧ e_j ∧ w, expanded directly from the table.
Multivector psi(const PlueckerTable& t, int i, int j);

/// Checks the exchange relations
///   Σ_i (-1)^i p_{a_{2i},q,b} p_{a_{2j-1},a_2,...,â_{2i},...,a_{2n},q}
///     + p_{a_{2j-1},q,b} p_{a_2,...,a_{2n},q} = 0
/// for every label q, every j in 1..n and every (n-1)-set b.
Report verify_plucker_relations(const PlueckerTable& t);

/// L_q = {1..2n+1} \ {q}, increasing.
std::vector<int> complement_labels(int n, int q);

}  // namespace gsf
