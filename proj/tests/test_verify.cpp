#include <doctest.h>

#include "support.hpp"

#include <gsf/verify.hpp>

using namespace gsf;

namespace {

// Embedded product computed with full ambient matrices.
Matrix dense_product(const std::vector<OperatorSlot>& slots, std::size_t dim) {
  Matrix m = Matrix::identity(slots.front().matrix.field(), dim);
  for (const auto& s : slots) m = m * embed(s, dim);
  return m;
}

}  // namespace

TEST_CASE("side products agree with dense multiplication") {
  const GrassmannPoint pt = random_point(2, Field::rationals(), 8);
  for (Side s : {Side::lhs, Side::rhs}) {
    const auto g = gon_side(pt.table(), s);
    CHECK(side_product(g, 3) == dense_product(g, 3));
    const auto r = simplex_side(pt.table(), s);
    CHECK(side_product(r, 10) == dense_product(r, 10));
  }
}

TEST_CASE("all checks pass on random points over every field") {
  for (const Field& f : test::sweep_fields())
    for (int n = 1; n <= test::max_n_for(f); ++n)
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CAPTURE(f.descriptor());
        CAPTURE(n);
        CAPTURE(seed);
        const GrassmannPoint pt = random_point(n, f, seed);
        CHECK(verify_gon(pt).status == Status::pass);
        CHECK(verify_simplex(pt).status == Status::pass);
        CHECK(verify_colors(pt).status == Status::pass);
        CHECK(verify_intertwining(pt).status == Status::pass);
        CHECK(verify_ranks(pt).status == Status::pass);
        const Report g = green_spectrum(pt);
        CHECK(g.status == Status::pass);
        if (f.characteristic() == 2) {
          CHECK(g.details["path"] == "involution_only");
          CHECK_FALSE(g.details.contains("rank_g_plus_1"));
        } else {
          CHECK(g.details["rank_g_minus_1"] == n * (n - 1) / 2);
          CHECK(g.details["rank_g_plus_1"] == n * (n + 1) / 2);
        }
      }
}

TEST_CASE("negating any single coordinate breaks gon or simplex") {
  const GrassmannPoint pt = random_point(2, Field::rationals(), 42);
  REQUIRE(verify_gon(pt).passed());
  for (const auto& [k, v] : pt.table().entries()) {
    CAPTURE(k.labels());
    const GrassmannPoint bad = pt.with_table(pt.table().with_entry(k, -v));
    const Report g = verify_gon(bad), s = verify_simplex(bad);
    CHECK((!g.passed() || !s.passed()));
    if (!g.passed()) CHECK(g.witness.has_value());
    if (!s.passed()) CHECK(s.witness.has_value());
  }
}

TEST_CASE("colored blocks separate") {
  for (int n = 1; n <= 3; ++n) {
    const GrassmannPoint pt = random_point(n, Field::prime(97), 3);
    const Coloring c = color_positions(n);
    auto br = c.initial_indices(Color::blue);
    for (auto i : c.initial_indices(Color::red)) br.push_back(i);
    const auto green = c.initial_indices(Color::green);
    std::vector<std::size_t> order = br;
    order.insert(order.end(), green.begin(), green.end());
    const std::size_t dim = static_cast<std::size_t>(n * (2 * n + 1));
    const Matrix m = side_product(simplex_side(pt.table(), Side::lhs), dim).submatrix(order, order);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if ((i < br.size()) != (j < br.size())) CHECK(m(i, j).is_zero());
  }
}

TEST_CASE("reduction") {
  const Field f = Field::rationals();
  const GrassmannPoint p2 = random_point(2, f, 1), p3 = random_point(3, f, 1);
  const std::vector<Scalar> zero{f.zero()}, lams{f.zero(), f.one(), f.parse_scalar("-7/3")};
  CHECK(verify_reduction(p2, zero, 1).status == Status::pass);
  CHECK(verify_reduction(p2, lams, 2).status == Status::pass);
  const Report r3 = verify_reduction(p3, lams, 2);
  CHECK(r3.status == Status::pass);
  CHECK(r3.details["equations_checked"] == 6);
  CHECK(verify_reduction(random_point(1, f, 1), lams, 1).status == Status::pass);
  CHECK_THROWS_AS(verify_reduction(p2, lams, 4), InputError);
  CHECK_THROWS_AS(verify_reduction(p2, lams, 0), InputError);
  const std::vector<Scalar> foreign{Field::prime(7).one()};
  CHECK_THROWS_AS(verify_reduction(p2, foreign, 1), FieldMismatch);
}

TEST_CASE("singular deep elimination is reported, not thrown") {
  const Field f = Field::rationals();
  const std::vector<Scalar> one{f.one()};
  const Report r = verify_reduction(random_point(2, f, 1), one, 3);
  CHECK(r.status == Status::fail);
  REQUIRE(r.witness.has_value());
  CHECK((*r.witness)["reason"] == "singular_elimination");
  CHECK((*r.witness)["level"] == 3);
  CHECK(r.details.contains("errors"));
}

TEST_CASE("zero coordinates surface as construction failures") {
  const GrassmannPoint pt = random_point(2, Field::rationals(), 5);
  const GrassmannPoint bad = pt.with_table(pt.table().with_entry(IndexSet{1, 3, 5}, pt.field().zero()));
  const Report r = verify_gon(bad);
  CHECK(r.status == Status::fail);
  CHECK((*r.witness)["reason"] == "construction");
}

TEST_CASE("run_checks") {
  const GrassmannPoint pt = random_point(2, Field::prime(11), 2);
  const std::vector<std::string> all(std::begin(kAllChecks), std::end(kAllChecks));
  CheckOptions seq, par;
  par.parallel = true;
  const auto a = run_checks(pt, all, seq), b = run_checks(pt, all, par);
  REQUIRE(a.size() == all.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check == all[i]);
    CHECK(a[i].passed());
    CHECK(a[i].to_json(false) == b[i].to_json(false));
  }
  const std::vector<std::string> bogus{"gon", "nope"};
  CHECK_THROWS_AS(run_checks(pt, bogus), InputError);
  CheckOptions deep;
  deep.depth = 9;
  const std::vector<std::string> red{"reduction"};
  CHECK_THROWS_AS(run_checks(pt, red, deep), InputError);
}

TEST_CASE("report JSON shape") {
  const Report r = verify_gon(random_point(1, Field::rationals(), 0));
  const auto j = r.to_json();
  CHECK(j["check"] == "gon");
  CHECK(j["status"] == "pass");
  CHECK(j["witness"].is_null());
  CHECK(j["params"]["n"] == 1);
  CHECK(j.contains("millis"));
  CHECK(r.to_json(false)["millis"] == 0.0);
}
