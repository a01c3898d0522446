#pragma once

#include <gsf/grassmann.hpp>
#include <gsf/matrix.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gsf {

enum class OperatorKind { A, B, R, Z };
std::string to_string(OperatorKind k);

/// A local operator of one of the equations: its label q, its matrix (acting
/// on rows from the right) and the 1-based ambient positions it acts on.
struct OperatorSlot {
  int label;
  OperatorKind kind;
  Matrix matrix;
  std::vector<int> positions;
  std::optional<Scalar> lambda;  // Z only
};

/// n×n matrix
///   (A^(q))_i^j = (-1)^i p_{a_{2j}, a_1, a_3, ..., â_{2i-1}, ..., a_{2n-1}, q}
///                       / p_{a_1, a_3, ..., a_{2n-1}, q}
/// with {a_1 < ... < a_{2n}} = {1..2n+1} \ {q}; positions are the (2n+1)-gon set of q.
/// Throws ConstructionError if the denominator vanishes.
OperatorSlot build_A(const PlueckerTable& t, int q);

/// (B^(q))_i^j = (-1)^i p_{a_{2j-1}, a_2, ..., â_{2i}, ..., a_{2n}, q} / p_{a_2, ..., a_{2n}, q}.
OperatorSlot build_B(const PlueckerTable& t, int q);

/// 2n×2n R^(q) with R[2i-1, 2j] = A_i^j, R[2i, 2j-1] = B_i^j and zeros
/// elsewhere; positions are the 2n-simplex set of q.
OperatorSlot build_R(const PlueckerTable& t, int q);

/// R^(q) assembled as the product A_{1,3,...,2n-1} · B_{2,4,...,2n} · P_{12} P_{34} ⋯ P_{2n-1,2n}.
Matrix build_R_factored(const PlueckerTable& t, int q);

/// First-level reduction in closed form:
///   Z^(q) = A_{1,3,...,2n-1} · P_{12} ⋯ P_{2n-3,2n-2} · diag(1, ..., 1, λ) · B_{1,3,...,2n-1},
/// a (2n-1)×(2n-1) matrix placed at the (2n-1)-simplex positions of q.
/// Requires 1 <= q <= 2n.
OperatorSlot build_Z(const PlueckerTable& t, int q, const Scalar& lambda);

/// Generic reduction by elimination: imposes u_last = λ v_last on
/// u · r = v and eliminates u_last, giving
///   Z[k][m] = r[k][m] + λ / (1 - λ r[last][last]) · r[k][last] · r[last][m].
/// Throws ReductionError when 1 - λ r[last][last] = 0.
Matrix reduce_last(const Matrix& r, const Scalar& lambda);

inline OperatorSlot build_A(const GrassmannPoint& pt, int q) { return build_A(pt.table(), q); }
inline OperatorSlot build_B(const GrassmannPoint& pt, int q) { return build_B(pt.table(), q); }
inline OperatorSlot build_R(const GrassmannPoint& pt, int q) { return build_R(pt.table(), q); }
inline OperatorSlot build_Z(const GrassmannPoint& pt, int q, const Scalar& lambda) {
  return build_Z(pt.table(), q, lambda);
}

}  // namespace gsf
