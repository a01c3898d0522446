#include <gsf/exterior.hpp>

#include <gsf/matrix.hpp>

#include <algorithm>
#include <string>

namespace gsf {

IndexSet::IndexSet(std::initializer_list<int> labels)
    : IndexSet(from_labels(std::span<const int>(labels.begin(), labels.size()))) {}

IndexSet IndexSet::from_labels(std::span<const int> labels) {
  std::uint32_t mask = 0;
  for (int l : labels) {
    if (l < 1 || l > kMaxDim) throw InputError("label " + std::to_string(l) + " out of range");
    const std::uint32_t bit = 1u << (l - 1);
    if (mask & bit) throw InputError("repeated label " + std::to_string(l));
    mask |= bit;
  }
  return IndexSet(mask);
}

std::vector<int> IndexSet::labels() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int sort_sign(std::span<const int> labels) {
  int sign = 1;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) return 0;
      if (labels[i] > labels[j]) sign = -sign;
    }
  return sign;
}

std::vector<IndexSet> subsets(int dim, int size) {
  std::vector<IndexSet> out;
  if (size < 0 || size > dim) return out;
  std::vector<int> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(IndexSet::from_labels(cur));
    int i = size - 1;
    while (i >= 0 && cur[i] == dim - size + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// (-1)^{#{(x, y) : x ∈ a, y ∈ b, x > y}}: sign of merging e_a ∧ e_b into sorted order.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (std::uint32_t m = b; m; m &= m - 1) {
    const std::uint32_t below = (m & (~m + 1u)) - 1u;
    inversions += std::popcount(a & ~below & ~(m & (~m + 1u)));
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

Multivector::Multivector(Field f, int dim, int grade) : field_(f), dim_(dim), grade_(grade) {
  if (dim < 0 || dim > IndexSet::kMaxDim) throw InputError("ambient dimension out of range");
  if (grade < 0) throw InputError("negative grade");
}

Multivector Multivector::basis(Field f, int dim, int i) {
  const int l[] = {i};
  return monomial(f, dim, l, f.one());
}

Multivector Multivector::monomial(Field f, int dim, std::span<const int> labels, const Scalar& coeff) {
  Multivector v(f, dim, static_cast<int>(labels.size()));
  for (int l : labels)
    if (l < 1 || l > dim) throw InputError("label " + std::to_string(l) + " outside ambient dimension");
  const int s = sort_sign(labels);
  if (s != 0) v.add_term(IndexSet::from_labels(labels), s > 0 ? coeff : -coeff);
  return v;
}

Scalar Multivector::coeff(IndexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Multivector::add_term(IndexSet s, const Scalar& c) {
  if (s.size() != grade_) throw InputError("term of wrong grade");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Multivector::check_compatible(const Multivector& o) const {
  if (dim_ != o.dim_) throw InputError("ambient dimension mismatch");
  if (!(field_ == o.field_)) throw FieldMismatch("multivectors over different fields");
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_compatible(o);
  if (grade_ != o.grade_) throw InputError("adding multivectors of different grades");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) { return *this += -o; }

Multivector Multivector::operator-() const {
  Multivector r = *this;
  for (auto& [s, c] : r.terms_) c = -c;
  return r;
}

Multivector operator*(const Scalar& s, const Multivector& v) {
  Multivector r(v.field_, v.dim_, v.grade_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : v.terms_) r.terms_.emplace(k, s * c);
  return r;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.terms_ == b.terms_;
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (u.dim() != v.dim()) throw InputError("wedge: ambient dimension mismatch");
  if (!(u.field() == v.field())) throw FieldMismatch("wedge: field mismatch");
  Multivector r(u.field(), u.dim(), u.grade() + v.grade());
  if (r.grade() > r.dim()) return r;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      if (a.mask() & b.mask()) continue;
      const Scalar c = ca * cb;
      r.add_term(IndexSet::from_mask(a.mask() | b.mask()), merge_sign(a.mask(), b.mask()) > 0 ? c : -c);
    }
  return r;
}

Multivector left_derivative(int label, const Multivector& w) {
  if (label < 1 || label > w.dim()) throw InputError("contraction label " + std::to_string(label) + " out of range");
  if (w.grade() == 0) throw InputError("contraction of a grade-0 multivector");
  Multivector r(w.field(), w.dim(), w.grade() - 1);
  const std::uint32_t bit = 1u << (label - 1);
  for (const auto& [s, c] : w.terms()) {
    if (!(s.mask() & bit)) continue;
    // Moving e_label to the front passes every smaller label in s.
    const int before = std::popcount(s.mask() & (bit - 1));
    r.add_term(IndexSet::from_mask(s.mask() & ~bit), before % 2 ? -c : c);
  }
  return r;
}

Multivector contract(std::span<const int> dual_labels, const Multivector& w) {
  if (static_cast<int>(dual_labels.size()) > w.grade()) throw InputError("contraction longer than grade");
  for (int l : dual_labels)
    if (l < 1 || l > w.dim()) throw InputError("contraction label " + std::to_string(l) + " out of range");
  Multivector r = w;
  for (auto it = dual_labels.rbegin(); it != dual_labels.rend(); ++it) r = left_derivative(*it, r);
  return r;
}

std::size_t span_rank(std::span<const Multivector> vs) {
  if (vs.empty()) return 0;
  const int grade = vs[0].grade();
  const int dim = vs[0].dim();
  for (const auto& v : vs)
    if (v.grade() != grade || v.dim() != dim) throw InputError("span_rank: mixed grades or dimensions");
  // Columns: only index sets that occur in some multivector.
  std::map<IndexSet, std::size_t> col;
  for (const auto& v : vs)
    for (const auto& [s, c] : v.terms()) col.try_emplace(s, 0);
  std::size_t next = 0;
  for (auto& [s, i] : col) i = next++;
  if (col.empty()) return 0;
  Matrix m(vs[0].field(), vs.size(), col.size());
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (const auto& [s, c] : vs[r].terms()) m(r, col[s]) = c;
  return linalg::rank(m);
}

}  // namespace gsf
