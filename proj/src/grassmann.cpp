#include <gsf/grassmann.hpp>

#include <chrono>
#include <string>

namespace gsf {

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

void check_label(int n, int l) {
  if (l < 1 || l > 2 * n + 1) throw InputError("label " + std::to_string(l) + " outside [1, " + std::to_string(2 * n + 1) + "]");
}

Scalar minor_of(const Matrix& m, IndexSet cols) {
  std::vector<std::size_t> r(m.rows()), c;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
  for (int l : cols.labels()) c.push_back(static_cast<std::size_t>(l - 1));
  return linalg::determinant(m.submatrix(r, c));
}

}  // namespace

std::vector<int> complement_labels(int n, int q) {
  check_label(n, q);
  std::vector<int> out;
  for (int l = 1; l <= 2 * n + 1; ++l)
    if (l != q) out.push_back(l);
  return out;
}

// ---------------------------------------------------------------------------
// PlueckerTable

PlueckerTable::PlueckerTable(int n, Field f, Entries entries) : n_(n), field_(f), entries_(std::move(entries)) {
  if (n < 1) throw InputError("n must be >= 1");
  if (entries_.size() != binomial(2 * n + 1, n + 1)) throw InputError("Plücker table has the wrong number of entries");
  for (const auto& [k, v] : entries_) {
    if (k.size() != n + 1 || (k.mask() >> (2 * n + 1)) != 0) throw InputError("Plücker key outside Gr(n+1, 2n+1)");
    if (!(v.field() == f)) throw FieldMismatch("Plücker entry over a different field");
  }
}

const Scalar& PlueckerTable::at(IndexSet key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw InputError("no Plücker coordinate for that index set");
  return it->second;
}

Scalar PlueckerTable::signed_at(std::span<const int> labels) const {
  if (static_cast<int>(labels.size()) != n_ + 1) throw InputError("Plücker lookup needs n+1 labels");
  for (int l : labels) check_label(n_, l);
  const int s = sort_sign(labels);
  if (s == 0) return field_.zero();
  const Scalar& v = at(IndexSet::from_labels(labels));
  return s > 0 ? v : -v;
}

PlueckerTable PlueckerTable::with_entry(IndexSet key, const Scalar& value) const {
  PlueckerTable t = *this;
  auto it = t.entries_.find(key);
  if (it == t.entries_.end()) throw InputError("no Plücker coordinate for that index set");
  it->second = value;
  return t;
}

Multivector PlueckerTable::top() const {
  Multivector w(field_, dim(), n_ + 1);
  for (const auto& [k, v] : entries_) w.add_term(k, v);
  return w;
}

// ---------------------------------------------------------------------------
// GrassmannPoint

PlueckerTable pluecker_table(int n, const Matrix& m) {
  if (n < 1) throw InputError("n must be >= 1");
  if (m.rows() != static_cast<std::size_t>(n + 1) || m.cols() != static_cast<std::size_t>(2 * n + 1))
    throw InputError("point matrix must be (n+1)x(2n+1)");
  PlueckerTable::Entries e;
  for (IndexSet k : subsets(2 * n + 1, n + 1)) e.emplace(k, minor_of(m, k));
  return PlueckerTable(n, m.field(), std::move(e));
}

GrassmannPoint::GrassmannPoint(int n, Matrix m) : n_(n), matrix_(std::move(m)), table_(pluecker_table(n, matrix_)) {
  if (linalg::rank(matrix_) != static_cast<std::size_t>(n + 1)) throw InputError("point matrix is not of full rank n+1");
}

GrassmannPoint GrassmannPoint::with_table(PlueckerTable t) const {
  if (t.n() != n_ || !(t.field() == field())) throw InputError("replacement table does not match the point");
  GrassmannPoint p = *this;
  p.table_ = std::move(t);
  p.overridden_ = true;
  return p;
}

AssumptionResult assumption_check(const PlueckerTable& t) {
  AssumptionResult r{true, {}};
  for (const auto& [k, v] : t.entries())
    if (v.is_zero()) {
      r.holds = false;
      r.vanishing.push_back(k);
    }
  return r;
}

GrassmannPoint random_point(int n, Field f, std::uint64_t seed, int max_tries, int rational_bound) {
  if (n < 1) throw InputError("n must be >= 1");
  Rng rng(seed);
  const auto keys = subsets(2 * n + 1, n + 1);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Matrix m(f, n + 1, 2 * n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = f.random(rng, rational_bound);
    bool ok = true;
    for (IndexSet k : keys)
      if (minor_of(m, k).is_zero()) {
        ok = false;
        break;
      }
    if (ok) return GrassmannPoint(n, std::move(m));
  }
  throw SamplingError("no point of Gr(" + std::to_string(n + 1) + "," + std::to_string(2 * n + 1) + ") over " +
                      f.descriptor() + " with all Plücker coordinates nonzero after " + std::to_string(max_tries) +
                      " tries; the field is likely too small");
}

// ---------------------------------------------------------------------------
// φ and ψ

Multivector phi(const PlueckerTable& t, int i, int j) {
  const int n = t.n();
  check_label(n, i);
  check_label(n, j);
  if (i == j) throw InputError("phi needs i != j");
  Multivector r(t.field(), t.dim(), n - 1);
  std::vector<int> labels{i, j};
  for (IndexSet k : subsets(t.dim(), n - 1)) {
    if (k.contains(i) || k.contains(j)) continue;
    labels.resize(2);
    for (int l : k.labels()) labels.push_back(l);
    r.add_term(k, t.signed_at(labels));
  }
  return r;
}

Multivector psi(const PlueckerTable& t, int i, int j) {
  const int n = t.n();
  check_label(n, i);
  check_label(n, j);
  if (i == j) throw InputError("psi needs i != j");
  Multivector r(t.field(), t.dim(), n + 3);
  if (n + 3 > t.dim()) return r;
  std::vector<int> labels;
  for (const auto& [k, v] : t.entries()) {
    if (k.contains(i) || k.contains(j)) continue;
    labels = {i, j};
    for (int l : k.labels()) labels.push_back(l);
    const int s = sort_sign(labels);
    r.add_term(IndexSet::from_labels(labels), s > 0 ? v : -v);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Plücker relations

Report verify_plucker_relations(const PlueckerTable& t) {
  const auto start = std::chrono::steady_clock::now();
  const int n = t.n();
  Report rep("plucker", {{"n", n}, {"field", t.field().descriptor()}});
  std::size_t checked = 0;
  for (int q = 1; q <= 2 * n + 1 && rep.status != Status::fail; ++q) {
    const auto a = complement_labels(n, q);  // a[0] = a_1, ...
    auto A = [&](int idx) { return a[static_cast<std::size_t>(idx - 1)]; };
    // p_{a_2, a_4, ..., a_{2n}, q}
    std::vector<int> evens;
    for (int i = 1; i <= n; ++i) evens.push_back(A(2 * i));
    evens.push_back(q);
    const Scalar p_evens = t.signed_at(evens);
    for (int j = 1; j <= n && rep.status != Status::fail; ++j) {
      for (IndexSet b : subsets(2 * n + 1, n - 1)) {
        const auto bl = b.labels();
        auto head = [&](int first) {
          std::vector<int> l{first, q};
          l.insert(l.end(), bl.begin(), bl.end());
          return t.signed_at(l);
        };
        Scalar sum = head(A(2 * j - 1)) * p_evens;
        for (int i = 1; i <= n; ++i) {
          std::vector<int> l{A(2 * j - 1)};
          for (int m = 1; m <= n; ++m)
            if (m != i) l.push_back(A(2 * m));
          l.push_back(q);
          Scalar term = head(A(2 * i)) * t.signed_at(l);
          if (i % 2) term = -term;
          sum += term;
        }
        ++checked;
        if (!sum.is_zero()) {
          rep.fail({{"q", q}, {"j", j}, {"b", bl}, {"value", sum.to_string()}});
          break;
        }
      }
    }
  }
  rep.details["relations_checked"] = checked;
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace gsf
