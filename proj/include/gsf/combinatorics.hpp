#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gsf {

/// Unordered label pair stored with first <= second. (i, j) and (j, i) name
/// the same coordinate.
struct Pair {
  int first;
  int second;

  Pair(int a, int b) : first(a < b ? a : b), second(a < b ? b : a) {}
  bool contains(int l) const { return first == l || second == l; }
  int other(int l) const { return first == l ? second : first; }
  std::string to_string() const;
  friend bool operator==(const Pair&, const Pair&) = default;
};

using PairSequence = std::vector<Pair>;

/// Label q together with the increasing 1-based positions where its operator acts.
struct PositionSet {
  int label;
  std::vector<int> positions;
  friend bool operator==(const PositionSet&, const PositionSet&) = default;
};

/// All pairs over {1..N+1} in lexicographic order (coordinates of the N-simplex equation).
PairSequence sim_sequence(int N);

struct GonSequences {
  PairSequence initial;  // (odd, even), lexicographic
  PairSequence final;    // (even, odd), lexicographic
};
GonSequences gon_sequences(int n);

/// Positions in sim_sequence(N) whose pair contains q, found by enumeration.
PositionSet simplex_positions(int N, int q);

/// Closed form a_{k,j} for the N-simplex equation:
///   (2N - k)(k - 1)/2 + j  for j >= k,   a_{j, k-1}  for j < k.
/// N = 2n gives the 2n-simplex sets, N = n the barred sets.
int simplex_position_closed(int N, int k, int j);
PositionSet simplex_positions_closed(int N, int q);

/// Positions of A^(q) in the (2n+1)-gon equation by the closed form:
/// B_{2k-1} = Ā_k, B_{2k} = Ā_k + b_k with b_{k,j} = [j < k].
PositionSet gon_positions(int n, int q);
/// Same sets read off the fixed odd-only / even-only pair sequences.
PositionSet gon_positions_from_fixed_sequences(int n, int q);
/// Same sets by definition: positions whose initial or final pair contains q.
PositionSet gon_positions_by_definition(int n, int q);

/// The odd-only sequence (2l-1, 2m+1), 1 <= l <= m <= n.
PairSequence odd_fixed_sequence(int n);
/// The even-only sequence (2l, 2m), 1 <= l <= m <= n (diagonal pairs included).
std::vector<std::pair<int, int>> even_fixed_sequence(int n);

enum class Side { lhs, rhs };

/// Application order of labels for each side of the (2n+1)-gon equation:
/// lhs 1, 3, ..., 2n+1; rhs 2n, 2n-2, ..., 2.
std::vector<int> gon_order(int n, Side side);
/// Application order for the left-hand side of the N-simplex equation: 1..N+1.
std::vector<int> simplex_order(int N, Side side);

struct GonStep {
  int label;
  std::vector<int> positions;  // where A^(label) acted
  PairSequence row;            // labels after the step
};

struct GonTrace {
  Side side;
  PairSequence initial;
  std::vector<GonStep> steps;
  const PairSequence& final_row() const { return steps.empty() ? initial : steps.back().row; }
};

/// Relabels the row through each A^(q) of one side: the pairs (p_{2i-1}, q)
/// at the operator's positions become (p_{2i}, q). Throws StructuralError if a
/// step does not find exactly n fitting pairs at the expected positions or the
/// final row differs from the final sequence.
GonTrace propagate_gon_indices(int n, Side side);

enum class Color { blue, red, green };
std::string to_string(Color c);

struct ColorStep {
  int label;
  std::vector<Color> colors;  // colors of every position after R^(label)
};

struct Coloring {
  int n;
  PairSequence sim;
  std::vector<Color> initial;
  std::vector<ColorStep> steps;
  /// Color of each position after the first operator that touches it.
  std::vector<Color> inner;
  const std::vector<Color>& final_colors() const { return steps.back().colors; }

  /// 0-based coordinate indices of a color class in the initial / final rows.
  std::vector<std::size_t> initial_indices(Color c) const;
  std::vector<std::size_t> final_indices(Color c) const;
};

/// Three-coloring of the 2n-simplex coordinates, propagated through the
/// left-hand side. Throws StructuralError if any coloring property fails:
/// homogeneous colors on each operator's odd and even inputs, same-parity
/// green initial and final positions, the four admissible color histories,
/// and inner green positions being exactly the mixed-parity pairs.
Coloring color_positions(int n);

}  // namespace gsf
