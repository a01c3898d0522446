// Acceptance suite: prints one PASS/FAIL line per criterion, exits nonzero on any FAIL.

#include <gsf/combinatorics.hpp>
#include <gsf/grassmann.hpp>
#include <gsf/serialize.hpp>
#include <gsf/solutions.hpp>
#include <gsf/verify.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

using namespace gsf;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %2d  %-44s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, title, s, o.note.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string where(const std::string& f, int n, std::uint64_t seed) {
  return f + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

GrassmannPoint load(const char* name) {
  std::ifstream in(std::string(GSF_FIXTURE_DIR) + "/" + name);
  nlohmann::json j;
  in >> j;
  return io::point_from_json(j);
}

Field gf4() { return Field::parse("gf(2,2;1,1,1)"); }

std::vector<std::pair<Field, int>> field_grid() {
  return {{Field::rationals(), 3}, {Field::prime(11), 3}, {Field::prime(97), 3}, {gf4(), 2}};
}

// 2×2 minor of columns a, b (1-based), straight from the matrix.
Scalar minor2(const Matrix& m, int a, int b) {
  const auto i = static_cast<std::size_t>(a - 1), j = static_cast<std::size_t>(b - 1);
  return m(0, i) * m(1, j) - m(0, j) * m(1, i);
}

// Reduction oracle: solve u·r = v with u_last = λ v_last per unit vector.
Matrix eliminate_by_solving(const Matrix& r, const Scalar& lam) {
  const Field f = r.field();
  const std::size_t d = r.rows(), L = d - 1;
  Matrix out(f, L, L);
  for (std::size_t k = 0; k < L; ++k) {
    Matrix u(f, 1, d);
    u(0, k) = f.one();
    u(0, L) = lam * r(k, L) / (f.one() - lam * r(L, L));
    const Matrix v = u * r;
    for (std::size_t m = 0; m < L; ++m) out(k, m) = v(0, m);
  }
  return out;
}

Multivector phi_oracle(const Multivector& w, int i, int j) {
  const std::vector<int> ji{j, i};
  return contract(ji, w);
}

Multivector psi_oracle(const Multivector& w, int i, int j) {
  const int d = w.dim();
  return wedge(Multivector::basis(w.field(), d, i), wedge(Multivector::basis(w.field(), d, j), w));
}

}  // namespace

int main() {
  criterion(1, "polygon equation, n=1..4, 100 points each", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n)
      for (std::uint64_t s = 0; s < 100; ++s) {
        const Report r = verify_gon(random_point(n, Field::rationals(), s));
        o.require(r.status == Status::pass, where("q", n, s) + " " + (r.witness ? r.witness->dump() : ""));
      }
    o.note = o.ok ? "400 points, A and B equations" : o.note;
    return o;
  });

  criterion(2, "2n-simplex equation, n=1..4, 100 points each", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n)
      for (std::uint64_t s = 0; s < 100; ++s) {
        const Report r = verify_simplex(random_point(n, Field::rationals(), s));
        o.require(r.status == Status::pass, where("q", n, s));
        o.require(r.details["dimension"] == n * (2 * n + 1), "ambient dimension");
      }
    o.note = o.ok ? "dimensions 3, 10, 21, 36" : o.note;
    return o;
  });

  criterion(3, "GF(4) fixture", [] {
    Outcome o;
    const GrassmannPoint pt = load("gf4_point.json");
    o.require(pt.field().characteristic() == 2, "field");
    o.require(pt.table().entries().size() == 10, "entry count");
    for (const auto& [k, v] : pt.table().entries()) o.require(!v.is_zero(), "zero coordinate");
    o.require(verify_gon(pt).status == Status::pass, "pentagon");
    o.require(verify_simplex(pt).status == Status::pass, "4-simplex");
    const Report g = green_spectrum(pt);
    o.require(g.status == Status::pass, "G^2 = 1");
    o.require(g.details.value("path", "") == "involution_only", "char-2 path flag");
    o.require(!g.details.contains("rank_g_minus_1") && !g.details.contains("rank_g_plus_1"), "ranks computed");
    return o;
  });

  criterion(4, "trigon closed form, 1000 points", [] {
    Outcome o;
    const Field f = Field::rationals();
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const GrassmannPoint pt = random_point(1, f, s);
      const Matrix& m = pt.matrix();
      const Scalar p12 = minor2(m, 1, 2), p13 = minor2(m, 1, 3), p23 = minor2(m, 2, 3);
      const Scalar a1 = build_A(pt, 1).matrix(0, 0), a2 = build_A(pt, 2).matrix(0, 0),
                   a3 = build_A(pt, 3).matrix(0, 0);
      o.require(a1 == -p13 / p12, "A1 seed " + std::to_string(s));
      o.require(a2 == p23 / p12, "A2 seed " + std::to_string(s));
      o.require(a3 == -p23 / p13, "A3 seed " + std::to_string(s));
      o.require(a1 * a3 == a2, "A1 A3 = A2 seed " + std::to_string(s));
    }
    return o;
  });

  criterion(5, "green spectrum over Q and F_11, n=1..3", [] {
    Outcome o;
    for (const Field& f : {Field::rationals(), Field::prime(11)})
      for (int n = 1; n <= 3; ++n)
        for (std::uint64_t s = 0; s < 10; ++s) {
          const GrassmannPoint pt = random_point(n, f, s);
          const auto green = color_positions(n).initial_indices(Color::green);
          const std::size_t dim = static_cast<std::size_t>(n * (2 * n + 1));
          const Matrix g = side_product(simplex_side(pt.table(), Side::lhs), dim).submatrix(green, green);
          const Matrix id = Matrix::identity(f, green.size());
          const auto want_m = static_cast<std::size_t>(n * (n - 1) / 2);
          const auto want_p = static_cast<std::size_t>(n * (n + 1) / 2);
          o.require(linalg::rank(g - id) == want_m, "rank(G-1) " + where(f.descriptor(), n, s));
          o.require(linalg::rank(g + id) == want_p, "rank(G+1) " + where(f.descriptor(), n, s));
          o.require(green_spectrum(pt).status == Status::pass, "report " + where(f.descriptor(), n, s));
        }
    o.note = o.ok ? "(0,1) (1,3) (3,6)" : o.note;
    return o;
  });

  criterion(6, "three-color decomposition, n=1..3", [] {
    Outcome o;
    for (const auto& [f, nmax] : field_grid())
      for (int n = 1; n <= nmax; ++n)
        for (std::uint64_t s = 0; s < 10; ++s) {
          const Report r = verify_colors(random_point(n, f, s));
          o.require(r.status == Status::pass, where(f.descriptor(), n, s) + " " + (r.witness ? r.witness->dump() : ""));
        }
    return o;
  });

  criterion(7, "intertwining identities, 20 points per field", [] {
    Outcome o;
    for (const auto& [f, nmax] : field_grid())
      for (int n = 1; n <= nmax; ++n)
        for (std::uint64_t s = 0; s < 20; ++s) {
          const Report r = verify_intertwining(random_point(n, f, s));
          o.require(r.status == Status::pass, where(f.descriptor(), n, s) + " " + (r.witness ? r.witness->dump() : ""));
        }
    return o;
  });

  criterion(8, "rank suite, n=1..3", [] {
    Outcome o;
    for (const Field& f : {Field::rationals(), Field::prime(97)})
      for (int n = 1; n <= 3; ++n)
        for (std::uint64_t s = 0; s < 5; ++s) {
          const GrassmannPoint pt = random_point(n, f, s);
          const Multivector w = pt.table().top();
          const int d = 2 * n + 1;
          const auto un = static_cast<std::size_t>(n);
          const std::string at = where(f.descriptor(), n, s);
          for (int j = 1; j <= d; ++j) {
            std::vector<Multivector> fam;
            for (int i = 1; i <= d; ++i)
              if (i != j) fam.push_back(phi_oracle(w, i, j));
            o.require(span_rank(fam) == un, "all phi^{i,j} " + at);
            for (IndexSet sub : subsets(2 * n, n)) {
              std::vector<Multivector> pick;
              for (int k : sub.labels()) pick.push_back(fam[static_cast<std::size_t>(k - 1)]);
              o.require(span_rank(pick) == un, "n of phi^{i,j} " + at);
            }
          }
          std::vector<Multivector> ini, odd, even;
          for (const Pair& p : gon_sequences(n).initial) ini.push_back(phi_oracle(w, p.first, p.second));
          for (int i = 1; i <= d; i += 2)
            for (int j = i + 2; j <= d; j += 2) odd.push_back(phi_oracle(w, i, j));
          for (int i = 2; i <= d; i += 2)
            for (int j = i + 2; j <= d; j += 2) even.push_back(psi_oracle(w, i, j));
          o.require(span_rank(ini) == un * (un + 1) / 2, "initial phi " + at);
          o.require(span_rank(odd) == un * (un + 1) / 2, "odd phi " + at);
          o.require(span_rank(even) == un * (un - 1) / 2, "even psi " + at);
          o.require(verify_ranks(pt).status == Status::pass, "report " + at);
        }
    o.note = o.ok ? "n, n, n(n+1)/2, n(n+1)/2, n(n-1)/2" : o.note;
    return o;
  });

  criterion(9, "position sets and index propagation, n<=6", [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n)
      for (int q = 1; q <= 2 * n + 1; ++q) {
        const std::string at = "n=" + std::to_string(n) + " q=" + std::to_string(q);
        o.require(simplex_positions_closed(2 * n, q) == simplex_positions(2 * n, q), "simplex " + at);
        const auto g = gon_positions(n, q);
        o.require(g == gon_positions_by_definition(n, q), "gon " + at);
        o.require(g == gon_positions_from_fixed_sequences(n, q), "gon fixed sequences " + at);
      }
    // The closed form a_{k,j} indexes the j-th other label; check it against the pair list directly.
    for (int N = 1; N <= 12; ++N) {
      const auto sim = sim_sequence(N);
      for (int k = 1; k <= N + 1; ++k)
        for (int j = 1; j <= N; ++j) {
          const int other = j < k ? j : j + 1;
          const Pair want(k, other);
          const int pos = simplex_position_closed(N, k, j);
          o.require(pos >= 1 && pos <= static_cast<int>(sim.size()) && sim[static_cast<std::size_t>(pos - 1)] == want,
                    "a_{k,j} N=" + std::to_string(N));
        }
    }
    const std::vector<std::vector<int>> g5 = {{1, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 3}};
    const std::vector<std::vector<int>> s4 = {{1, 2, 3, 4}, {1, 5, 6, 7}, {2, 5, 8, 9}, {3, 6, 8, 10}, {4, 7, 9, 10}};
    for (int q = 1; q <= 5; ++q) {
      o.require(gon_positions(2, q).positions == g5[static_cast<std::size_t>(q - 1)], "pentagon subscripts");
      o.require(simplex_positions(4, q).positions == s4[static_cast<std::size_t>(q - 1)], "4-simplex subscripts");
    }
    for (int n = 1; n <= 6; ++n)
      for (Side s : {Side::lhs, Side::rhs})
        o.require(propagate_gon_indices(n, s).final_row() == gon_sequences(n).final,
                  "propagation n=" + std::to_string(n));
    return o;
  });

  criterion(10, "reduction to the (2n-1)-simplex equation", [] {
    Outcome o;
    const Field f = Field::rationals();
    Rng rng(2024);
    for (int n = 2; n <= 3; ++n)
      for (std::uint64_t s = 0; s < 5; ++s) {
        const GrassmannPoint pt = random_point(n, f, s);
        Scalar r = f.random(rng, 20);
        while (r.is_zero()) r = f.random(rng, 20);
        const std::vector<Scalar> lams{f.zero(), f.one(), r / f.from_int(3)};
        const std::string at = where("q", n, s);
        o.require(verify_reduction(pt, lams, 1).status == Status::pass, "level 1 " + at);
        for (const Scalar& lam : lams)
          for (int q = 1; q <= 2 * n; ++q)
            o.require(build_Z(pt, q, lam).matrix == eliminate_by_solving(build_R(pt, q).matrix, lam),
                      "closed form vs oracle " + at);
        if (n == 3) {
          const Report d2 = verify_reduction(pt, lams, 2);
          o.require(d2.status == Status::pass && d2.details["equations_checked"] == 6, "depth 2 " + at);
        }
      }
    return o;
  });

  criterion(11, "single-entry sign flips are detected", [] {
    Outcome o;
    const GrassmannPoint pt = load("rational_n2.json");
    o.require(verify_gon(pt).passed() && verify_simplex(pt).passed(), "fixture does not pass");
    int caught = 0;
    for (const auto& [k, v] : pt.table().entries()) {
      const GrassmannPoint bad = pt.with_table(pt.table().with_entry(k, -v));
      const Report g = verify_gon(bad), s = verify_simplex(bad);
      const bool detected = (g.status == Status::fail && g.witness) || (s.status == Status::fail && s.witness);
      std::ostringstream lab;
      for (int l : k.labels()) lab << l;
      o.require(detected, "p" + lab.str() + " not detected");
      caught += detected;
    }
    if (o.ok) o.note = std::to_string(caught) + "/10 flips caught";
    return o;
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
