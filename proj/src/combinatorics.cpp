#include <gsf/combinatorics.hpp>

#include <gsf/error.hpp>

#include <algorithm>
#include <map>

namespace gsf {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw StructuralError(what);
}

void check_n(int n) {
  if (n < 1) throw InputError("n must be >= 1");
}

void check_label(int count, int q) {
  if (q < 1 || q > count)
    throw InputError("label " + std::to_string(q) + " outside [1, " + std::to_string(count) + "]");
}

std::vector<int> positions_containing(const PairSequence& seq, int q) {
  std::vector<int> out;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i].contains(q)) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> complement(int count, int q) {
  std::vector<int> out;
  for (int l = 1; l <= count; ++l)
    if (l != q) out.push_back(l);
  return out;
}

}  // namespace

std::string Pair::to_string() const { return std::to_string(first) + "," + std::to_string(second); }

PairSequence sim_sequence(int N) {
  if (N < 1) throw InputError("N must be >= 1");
  PairSequence out;
  for (int i = 1; i <= N + 1; ++i)
    for (int j = i + 1; j <= N + 1; ++j) out.emplace_back(i, j);
  return out;
}

GonSequences gon_sequences(int n) {
  check_n(n);
  GonSequences s;
  for (int i = 1; i <= 2 * n + 1; i += 2)
    for (int j = i + 1; j <= 2 * n; j += 2) s.initial.emplace_back(i, j);
  for (int i = 2; i <= 2 * n; i += 2)
    for (int j = i + 1; j <= 2 * n + 1; j += 2) s.final.emplace_back(i, j);
  return s;
}

PositionSet simplex_positions(int N, int q) {
  check_label(N + 1, q);
  return {q, positions_containing(sim_sequence(N), q)};
}

int simplex_position_closed(int N, int k, int j) {
  if (N < 1) throw InputError("N must be >= 1");
  check_label(N + 1, k);
  if (j < 1 || j > N) throw InputError("slot " + std::to_string(j) + " outside [1, " + std::to_string(N) + "]");
  if (j >= k) return (2 * N - k) * (k - 1) / 2 + j;
  return simplex_position_closed(N, j, k - 1);
}

PositionSet simplex_positions_closed(int N, int q) {
  PositionSet s{q, {}};
  for (int j = 1; j <= N; ++j) s.positions.push_back(simplex_position_closed(N, q, j));
  return s;
}

PositionSet gon_positions(int n, int q) {
  check_n(n);
  check_label(2 * n + 1, q);
  const int k = (q + 1) / 2;
  PositionSet s = simplex_positions_closed(n, k);
  s.label = q;
  if (q % 2 == 0)
    for (int j = 1; j <= n; ++j) s.positions[j - 1] += (j < k ? 1 : 0);
  return s;
}

PairSequence odd_fixed_sequence(int n) {
  check_n(n);
  PairSequence out;
  for (int l = 1; l <= n; ++l)
    for (int m = l; m <= n; ++m) out.emplace_back(2 * l - 1, 2 * m + 1);
  return out;
}

std::vector<std::pair<int, int>> even_fixed_sequence(int n) {
  check_n(n);
  std::vector<std::pair<int, int>> out;
  for (int l = 1; l <= n; ++l)
    for (int m = l; m <= n; ++m) out.emplace_back(2 * l, 2 * m);
  return out;
}

PositionSet gon_positions_from_fixed_sequences(int n, int q) {
  check_n(n);
  check_label(2 * n + 1, q);
  PositionSet s{q, {}};
  if (q % 2) {
    s.positions = positions_containing(odd_fixed_sequence(n), q);
  } else {
    const auto seq = even_fixed_sequence(n);
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (seq[i].first == q || seq[i].second == q) s.positions.push_back(static_cast<int>(i) + 1);
  }
  return s;
}

PositionSet gon_positions_by_definition(int n, int q) {
  check_n(n);
  check_label(2 * n + 1, q);
  const auto seqs = gon_sequences(n);
  PositionSet s{q, {}};
  for (std::size_t i = 0; i < seqs.initial.size(); ++i)
    if (seqs.initial[i].contains(q) || seqs.final[i].contains(q)) s.positions.push_back(static_cast<int>(i) + 1);
  return s;
}

std::vector<int> gon_order(int n, Side side) {
  check_n(n);
  std::vector<int> out;
  if (side == Side::lhs)
    for (int q = 1; q <= 2 * n + 1; q += 2) out.push_back(q);
  else
    for (int q = 2 * n; q >= 2; q -= 2) out.push_back(q);
  return out;
}

std::vector<int> simplex_order(int N, Side side) {
  if (N < 1) throw InputError("N must be >= 1");
  std::vector<int> out;
  for (int q = 1; q <= N + 1; ++q) out.push_back(q);
  if (side == Side::rhs) std::reverse(out.begin(), out.end());
  return out;
}

GonTrace propagate_gon_indices(int n, Side side) {
  check_n(n);
  const auto seqs = gon_sequences(n);
  GonTrace trace{side, seqs.initial, {}};
  PairSequence row = seqs.initial;
  for (int q : gon_order(n, side)) {
    const auto p = complement(2 * n + 1, q);  // p[0] = p_1
    GonStep step{q, {}, {}};
    for (int i = 1; i <= n; ++i) {
      const Pair want(p[2 * i - 2], q);
      std::vector<int> hits;
      for (std::size_t b = 0; b < row.size(); ++b)
        if (row[b] == want) hits.push_back(static_cast<int>(b) + 1);
      require(hits.size() == 1, "A^(" + std::to_string(q) + "): pair (" + want.to_string() + ") found " +
                                    std::to_string(hits.size()) + " times");
      step.positions.push_back(hits[0]);
    }
    require(std::is_sorted(step.positions.begin(), step.positions.end()),
            "A^(" + std::to_string(q) + "): input pairs are not in increasing position order");
    require(step.positions == gon_positions(n, q).positions,
            "A^(" + std::to_string(q) + "): positions disagree with the closed form");
    for (int i = 1; i <= n; ++i) row[step.positions[i - 1] - 1] = Pair(p[2 * i - 1], q);
    step.row = row;
    trace.steps.push_back(std::move(step));
  }
  require(row == seqs.final, "final row differs from the final sequence");
  return trace;
}

std::string to_string(Color c) {
  switch (c) {
    case Color::blue: return "blue";
    case Color::red: return "red";
    case Color::green: return "green";
  }
  return "?";
}

std::vector<std::size_t> Coloring::initial_indices(Color c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < initial.size(); ++i)
    if (initial[i] == c) out.push_back(i);
  return out;
}

std::vector<std::size_t> Coloring::final_indices(Color c) const {
  std::vector<std::size_t> out;
  const auto& f = final_colors();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] == c) out.push_back(i);
  return out;
}

Coloring color_positions(int n) {
  check_n(n);
  const int N = 2 * n;
  Coloring col{n, sim_sequence(N), {}, {}, {}};
  const std::size_t dim = col.sim.size();
  for (const Pair& pr : col.sim) {
    const bool odd_first = pr.first % 2 == 1;
    const bool mixed = (pr.first + pr.second) % 2 == 1;
    col.initial.push_back(!mixed ? Color::green : (odd_first ? Color::blue : Color::red));
  }

  std::vector<Color> cur = col.initial;
  std::vector<int> touched(dim, 0);
  col.inner.assign(dim, Color::green);
  for (int q : simplex_order(N, Side::lhs)) {
    const auto pos = simplex_positions(N, q).positions;
    const auto L = complement(N + 1, q);
    for (std::size_t s = 0; s < pos.size(); ++s)
      require(col.sim[pos[s] - 1] == Pair(L[s], q), "R^(" + std::to_string(q) + "): local slot order mismatch");
    // Local slots 1, 3, ... feed A (outputs on 2, 4, ...); slots 2, 4, ... feed B.
    const Color odd_in = cur[pos[0] - 1];
    const Color even_in = cur[pos[1] - 1];
    for (std::size_t s = 0; s < pos.size(); ++s)
      require(cur[pos[s] - 1] == (s % 2 == 0 ? odd_in : even_in),
              "R^(" + std::to_string(q) + "): inputs of one factor carry different colors");
    for (std::size_t s = 0; s < pos.size(); ++s) {
      const std::size_t idx = pos[s] - 1;
      cur[idx] = s % 2 == 0 ? even_in : odd_in;
      if (++touched[idx] == 1) col.inner[idx] = cur[idx];
    }
    col.steps.push_back({q, cur});
  }

  // Every coordinate is touched by exactly two operators.
  for (std::size_t i = 0; i < dim; ++i)
    require(touched[i] == 2, "position " + std::to_string(i + 1) + " not touched exactly twice");

  const auto& fin = col.final_colors();
  for (std::size_t i = 0; i < dim; ++i) {
    const Pair& pr = col.sim[i];
    const bool same_parity = (pr.first + pr.second) % 2 == 0;
    require((col.initial[i] == Color::green) == same_parity, "initial green set is not the same-parity pairs");
    require((fin[i] == Color::green) == same_parity, "final green set is not the same-parity pairs");
    const Color a = col.initial[i], b = col.inner[i], c = fin[i];
    const bool admissible = (a == Color::blue && b == Color::green && c == Color::red) ||
                            (a == Color::red && b == Color::green && c == Color::blue) ||
                            (a == Color::green && b == Color::blue && c == Color::green) ||
                            (a == Color::green && b == Color::red && c == Color::green);
    require(admissible, "position " + std::to_string(i + 1) + " has an inadmissible color history");
    require((b == Color::green) == !same_parity, "inner green positions are not the mixed-parity pairs");
  }
  return col;
}

}  // namespace gsf
