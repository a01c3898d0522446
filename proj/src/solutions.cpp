#include <gsf/solutions.hpp>

#include <gsf/combinatorics.hpp>

#include <string>

namespace gsf {

namespace {

std::string labels_text(const std::vector<int>& l) {
  std::string s;
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s;
}

Scalar nonzero_minor(const PlueckerTable& t, const std::vector<int>& labels, int q) {
  Scalar d = t.signed_at(labels);
  if (d.is_zero())
    throw ConstructionError("p_{" + labels_text(labels) + "} vanishes; operators for q=" + std::to_string(q) +
                            " are undefined");
  return d;
}

// Shared body of the A and B formulas: `in_parity` = 1 picks inputs a_1, a_3, ...
// (A), 0 picks a_2, a_4, ... (B); outputs use the other parity.
Matrix build_half(const PlueckerTable& t, int q, int in_parity) {
  const int n = t.n();
  const auto a = complement_labels(n, q);
  auto A = [&](int idx) { return a[static_cast<std::size_t>(idx - 1)]; };
  auto in_label = [&](int i) { return in_parity ? A(2 * i - 1) : A(2 * i); };
  auto out_label = [&](int j) { return in_parity ? A(2 * j) : A(2 * j - 1); };

  std::vector<int> den_labels;
  for (int i = 1; i <= n; ++i) den_labels.push_back(in_label(i));
  den_labels.push_back(q);
  const Scalar inv_den = nonzero_minor(t, den_labels, q).inverse();

  Matrix m(t.field(), n, n);
  std::vector<int> num;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      num = {out_label(j)};
      for (int l = 1; l <= n; ++l)
        if (l != i) num.push_back(in_label(l));
      num.push_back(q);
      Scalar v = t.signed_at(num) * inv_den;
      m(i - 1, j - 1) = i % 2 ? -v : v;
    }
  return m;
}

Matrix adjacent_swaps(Field f, std::size_t dim, std::size_t pairs) {
  Matrix p = Matrix::identity(f, dim);
  for (std::size_t k = 0; k < pairs; ++k) {
    p(2 * k, 2 * k) = f.zero();
    p(2 * k + 1, 2 * k + 1) = f.zero();
    p(2 * k, 2 * k + 1) = f.one();
    p(2 * k + 1, 2 * k) = f.one();
  }
  return p;
}

std::vector<int> odd_slots(int n) {
  std::vector<int> s;
  for (int i = 1; i <= n; ++i) s.push_back(2 * i - 1);
  return s;
}

std::vector<int> even_slots(int n) {
  std::vector<int> s;
  for (int i = 1; i <= n; ++i) s.push_back(2 * i);
  return s;
}

}  // namespace

std::string to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::A: return "A";
    case OperatorKind::B: return "B";
    case OperatorKind::R: return "R";
    case OperatorKind::Z: return "Z";
  }
  return "?";
}

OperatorSlot build_A(const PlueckerTable& t, int q) {
  return {q, OperatorKind::A, build_half(t, q, 1), gon_positions(t.n(), q).positions, std::nullopt};
}

OperatorSlot build_B(const PlueckerTable& t, int q) {
  return {q, OperatorKind::B, build_half(t, q, 0), gon_positions(t.n(), q).positions, std::nullopt};
}

OperatorSlot build_R(const PlueckerTable& t, int q) {
  const int n = t.n();
  const Matrix a = build_half(t, q, 1);
  const Matrix b = build_half(t, q, 0);
  Matrix r(t.field(), 2 * n, 2 * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      r(2 * i - 2, 2 * j - 1) = a(i - 1, j - 1);
      r(2 * i - 1, 2 * j - 2) = b(i - 1, j - 1);
    }
  return {q, OperatorKind::R, std::move(r), simplex_positions(2 * n, q).positions, std::nullopt};
}

Matrix build_R_factored(const PlueckerTable& t, int q) {
  const int n = t.n();
  const std::size_t dim = 2 * static_cast<std::size_t>(n);
  const Field f = t.field();
  return embed(build_half(t, q, 1), odd_slots(n), dim) * embed(build_half(t, q, 0), even_slots(n), dim) *
         adjacent_swaps(f, dim, static_cast<std::size_t>(n));
}

OperatorSlot build_Z(const PlueckerTable& t, int q, const Scalar& lambda) {
  const int n = t.n();
  if (q < 1 || q > 2 * n)
    throw InputError("Z^(q) is defined for 1 <= q <= 2n; got q=" + std::to_string(q));
  if (!(lambda.field() == t.field())) throw FieldMismatch("lambda is not in the point's field");
  const std::size_t dim = 2 * static_cast<std::size_t>(n) - 1;
  const Field f = t.field();
  Matrix lam = Matrix::identity(f, dim);
  lam(dim - 1, dim - 1) = lambda;
  Matrix z = embed(build_half(t, q, 1), odd_slots(n), dim) *
             adjacent_swaps(f, dim, static_cast<std::size_t>(n - 1)) * lam *
             embed(build_half(t, q, 0), odd_slots(n), dim);
  return {q, OperatorKind::Z, std::move(z), simplex_positions(2 * n - 1, q).positions, lambda};
}

Matrix reduce_last(const Matrix& r, const Scalar& lambda) {
  if (!r.is_square() || r.rows() < 2) throw InputError("reduce_last needs a square matrix of size >= 2");
  const std::size_t last = r.rows() - 1;
  const Scalar c = r.field().one() - lambda * r(last, last);
  if (c.is_zero())
    throw ReductionError("u_last = lambda v_last does not determine u_last (lambda = " + lambda.to_string() + ")");
  const Scalar s = lambda / c;
  Matrix z(r.field(), last, last);
  for (std::size_t k = 0; k < last; ++k)
    for (std::size_t m = 0; m < last; ++m) z(k, m) = r(k, m) + s * r(k, last) * r(last, m);
  return z;
}

}  // namespace gsf
