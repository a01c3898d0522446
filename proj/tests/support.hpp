#pragma once

#include <gsf/field.hpp>
#include <gsf/grassmann.hpp>
#include <gsf/matrix.hpp>

#include <string>
#include <vector>

namespace gsf::test {

inline Field gf4() { return Field::parse("gf(2,2;1,1,1)"); }

inline std::vector<Field> sweep_fields() {
  return {Field::rationals(), Field::prime(11), Field::prime(97), gf4()};
}

// GF(4) has no point of Gr(4,7) with all coordinates nonzero: an MDS [7,4]
// code would exceed the length bound q+1 = 5.
inline int max_n_for(const Field& f) { return f == gf4() ? 2 : 3; }

// Cofactor expansion along the first row. Independent of the library's elimination.
inline Scalar laplace_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Scalar acc = m.field().zero();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    Scalar term = m(0, c) * laplace_det(m.submatrix(rows, cols));
    acc += (c % 2) ? -term : term;
  }
  return acc;
}

inline Scalar gf4_elem(unsigned c0, unsigned c1) { return gf4().parse_scalar(std::to_string(c0) + ":" + std::to_string(c1)); }

}  // namespace gsf::test
