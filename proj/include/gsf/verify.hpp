#pragma once

#include <gsf/combinatorics.hpp>
#include <gsf/grassmann.hpp>
#include <gsf/report.hpp>
#include <gsf/solutions.hpp>

#include <span>
#include <string>
#include <vector>

namespace gsf {

/// Ambient identity with the slot's matrix written at its positions.
Matrix embed(const OperatorSlot& slot, std::size_t ambient_dim);

/// Product of embedded slots in application order: rows act from the right,
/// so the first slot listed is applied first.
Matrix side_product(std::span<const OperatorSlot> slots, std::size_t ambient_dim);

/// A^(1) A^(3) ⋯ A^(2n+1) = A^(2n) ⋯ A^(2) and the inverse equation
/// B^(2) ⋯ B^(2n) = B^(2n+1) ⋯ B^(1), in dimension n(n+1)/2.
Report verify_gon(const GrassmannPoint& pt);

/// R^(1) ⋯ R^(2n+1) = R^(2n+1) ⋯ R^(1) in dimension n(2n+1).
Report verify_simplex(const GrassmannPoint& pt);

/// Three-color split of the simplex equation: (blue ∪ red) / green
/// block-diagonality of both sides, equality per block, and the
/// [[0, K'], [K, 0]] shape with K'K = KK' = 1 on blue ∪ red, where K' is the
/// gon left-hand side and K the inverse-gon left-hand side.
Report verify_colors(const GrassmannPoint& pt);

/// G = green block of the simplex left-hand side: G² = 1 always; outside
/// characteristic 2 also rank(G - 1) = n(n-1)/2 and rank(G + 1) = n(n+1)/2.
Report green_spectrum(const GrassmannPoint& pt);

/// For every q:
///   Σ_i φ^{a_{2i-1},q} (A^(q))_i^j = -φ^{a_{2j},q}
///   Σ_j (A^(q))_i^j ψ_{a_{2j},q}   =  ψ_{a_{2i-1},q}
///   Σ_i φ^{a_{2i},q} (B^(q))_i^j   = -φ^{a_{2j-1},q}
///   Σ_j (B^(q))_i^j ψ_{a_{2j-1},q} =  ψ_{a_{2i},q}
/// compared term by term.
Report verify_intertwining(const GrassmannPoint& pt);

/// Span ranks of φ/ψ families: any n of {φ^{i,j}}_i (fixed j) independent;
/// all of them span exactly n; the initial-sequence φ's span n(n+1)/2;
/// odd-odd φ's span n(n+1)/2; even-even ψ's span n(n-1)/2.
Report verify_ranks(const GrassmannPoint& pt);

/// For each λ: level-1 Z's (closed form, cross-checked against elimination)
/// satisfy the (2n-1)-simplex equation; each further level reduces all but
/// the last label again by elimination and checks the next lower equation.
Report verify_reduction(const GrassmannPoint& pt, std::span<const Scalar> lambdas, int depth);

/// The operators of each side of the (2n+1)-gon equation, in application order.
std::vector<OperatorSlot> gon_side(const PlueckerTable& t, Side side);
/// The inverse equation: lhs B^(2), ..., B^(2n); rhs B^(2n+1), ..., B^(1).
std::vector<OperatorSlot> gon_inverse_side(const PlueckerTable& t, Side side);
/// The operators of each side of the 2n-simplex equation, in application order.
std::vector<OperatorSlot> simplex_side(const PlueckerTable& t, Side side);

inline constexpr const char* kAllChecks[] = {"plucker", "gon",   "simplex", "colors",
                                             "spectrum", "intertwining", "ranks", "reduction"};

struct CheckOptions {
  std::vector<Scalar> lambdas;  // reduction only; empty = {0, 1}
  int depth = 1;
  bool parallel = false;
};

/// Runs the named checks (see kAllChecks) and returns their reports in request order.
/// Throws InputError on an unknown name.
std::vector<Report> run_checks(const GrassmannPoint& pt, std::span<const std::string> checks,
                               const CheckOptions& opts = {});

}  // namespace gsf
