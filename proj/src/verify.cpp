#include <gsf/verify.hpp>

#include <gsf/error.hpp>
#include <gsf/serialize.hpp>

#include <algorithm>
#include <chrono>
#include <future>
#include <string>

namespace gsf {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(Report& r) : rep_(r), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    rep_.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Report& rep_;
  std::chrono::steady_clock::time_point start_;
};

json base_params(const GrassmannPoint& pt) {
  json p = {{"n", pt.n()}, {"field", pt.field().descriptor()}};
  if (pt.table_overridden()) p["table_overridden"] = true;
  return p;
}

std::size_t gon_dim(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }
std::size_t simplex_dim(int N) { return static_cast<std::size_t>(N) * (N + 1) / 2; }

// Compares two matrices; on mismatch records a 1-based witness.
bool expect_equal(Report& rep, const std::string& what, const Matrix& lhs, const Matrix& rhs) {
  auto mm = first_mismatch(lhs, rhs);
  if (!mm) return true;
  rep.fail({{"equation", what},
            {"row", mm->row + 1},
            {"col", mm->col + 1},
            {"lhs", io::to_json(lhs(mm->row, mm->col))},
            {"rhs", io::to_json(rhs(mm->row, mm->col))}});
  return false;
}

bool expect_equal(Report& rep, const std::string& what, const Multivector& lhs, const Multivector& rhs,
                  json where) {
  if (lhs == rhs) return true;
  const Multivector diff = lhs - rhs;
  const IndexSet k = diff.terms().begin()->first;
  where["equation"] = what;
  where["term"] = k.labels();
  where["lhs"] = io::to_json(lhs.coeff(k));
  where["rhs"] = io::to_json(rhs.coeff(k));
  rep.fail(std::move(where));
  return false;
}

void fail_construction(Report& rep, const Error& e) {
  rep.fail({{"reason", "construction"}, {"message", e.what()}});
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string side_name(Side s) { return s == Side::lhs ? "lhs" : "rhs"; }

Matrix simplex_product(const PlueckerTable& t, Side side) {
  const auto slots = simplex_side(t, side);
  return side_product(slots, simplex_dim(2 * t.n()));
}

}  // namespace

Matrix embed(const OperatorSlot& slot, std::size_t ambient_dim) {
  return embed(slot.matrix, slot.positions, ambient_dim);
}

Matrix side_product(std::span<const OperatorSlot> slots, std::size_t ambient_dim) {
  if (slots.empty()) throw InputError("side_product needs at least one operator");
  Matrix m = Matrix::identity(slots.front().matrix.field(), ambient_dim);
  for (const auto& s : slots) apply_right(m, s.matrix, s.positions);
  return m;
}

std::vector<OperatorSlot> gon_side(const PlueckerTable& t, Side side) {
  std::vector<OperatorSlot> out;
  for (int q : gon_order(t.n(), side)) out.push_back(build_A(t, q));
  return out;
}

std::vector<OperatorSlot> gon_inverse_side(const PlueckerTable& t, Side side) {
  const int n = t.n();
  std::vector<OperatorSlot> out;
  if (side == Side::lhs)
    for (int q = 2; q <= 2 * n; q += 2) out.push_back(build_B(t, q));
  else
    for (int q = 2 * n + 1; q >= 1; q -= 2) out.push_back(build_B(t, q));
  return out;
}

std::vector<OperatorSlot> simplex_side(const PlueckerTable& t, Side side) {
  std::vector<OperatorSlot> out;
  for (int q : simplex_order(2 * t.n(), side)) out.push_back(build_R(t, q));
  return out;
}

Report verify_gon(const GrassmannPoint& pt) {
  Report rep("gon", base_params(pt));
  Stopwatch sw(rep);
  const auto& t = pt.table();
  const std::size_t dim = gon_dim(pt.n());
  try {
    const Matrix l = side_product(gon_side(t, Side::lhs), dim);
    const Matrix r = side_product(gon_side(t, Side::rhs), dim);
    if (!expect_equal(rep, "gon", l, r)) return rep;
    const Matrix li = side_product(gon_inverse_side(t, Side::lhs), dim);
    const Matrix ri = side_product(gon_inverse_side(t, Side::rhs), dim);
    expect_equal(rep, "gon_inverse", li, ri);
    rep.details["dimension"] = dim;
  } catch (const ConstructionError& e) {
    fail_construction(rep, e);
  }
  return rep;
}

Report verify_simplex(const GrassmannPoint& pt) {
  Report rep("simplex", base_params(pt));
  Stopwatch sw(rep);
  try {
    const Matrix l = simplex_product(pt.table(), Side::lhs);
    const Matrix r = simplex_product(pt.table(), Side::rhs);
    expect_equal(rep, "simplex", l, r);
    rep.details["dimension"] = l.rows();
  } catch (const ConstructionError& e) {
    fail_construction(rep, e);
  }
  return rep;
}

Report verify_colors(const GrassmannPoint& pt) {
  Report rep("colors", base_params(pt));
  Stopwatch sw(rep);
  const int n = pt.n();
  const auto& t = pt.table();
  try {
    const Coloring c = color_positions(n);
    const auto blue = c.initial_indices(Color::blue);
    const auto red = c.initial_indices(Color::red);
    const auto green = c.initial_indices(Color::green);
    const auto br = sorted(concat(blue, red));
    const std::size_t gd = gon_dim(n);

    const Matrix sides[2] = {simplex_product(t, Side::lhs), simplex_product(t, Side::rhs)};
    for (int s = 0; s < 2; ++s) {
      const Matrix& m = sides[s];
      const std::string nm = side_name(s ? Side::rhs : Side::lhs);
      if (!green.empty()) {
        if (!m.submatrix(br, green).is_zero() || !m.submatrix(green, br).is_zero()) {
          rep.fail({{"equation", "block_diagonal"}, {"side", nm}});
          return rep;
        }
      }
      if (!m.submatrix(blue, blue).is_zero() || !m.submatrix(red, red).is_zero()) {
        rep.fail({{"equation", "antidiagonal"}, {"side", nm}});
        return rep;
      }
    }
    if (!expect_equal(rep, "blue_red_block", sides[0].submatrix(br, br), sides[1].submatrix(br, br))) return rep;
    if (!green.empty() &&
        !expect_equal(rep, "green_block", sides[0].submatrix(green, green), sides[1].submatrix(green, green)))
      return rep;

    const Matrix k_blue = sides[0].submatrix(blue, red);
    const Matrix k_red = sides[0].submatrix(red, blue);
    if (!expect_equal(rep, "blue_is_gon", k_blue, side_product(gon_side(t, Side::lhs), gd))) return rep;
    if (!expect_equal(rep, "red_is_gon_inverse", k_red, side_product(gon_inverse_side(t, Side::lhs), gd)))
      return rep;
    const Matrix id = Matrix::identity(pt.field(), gd);
    if (!expect_equal(rep, "blue_times_red", k_blue * k_red, id)) return rep;
    expect_equal(rep, "red_times_blue", k_red * k_blue, id);
    rep.details["blue"] = blue.size();
    rep.details["red"] = red.size();
    rep.details["green"] = green.size();
  } catch (const ConstructionError& e) {
    fail_construction(rep, e);
  } catch (const StructuralError& e) {
    rep.fail({{"reason", "coloring"}, {"message", e.what()}});
  }
  return rep;
}

Report green_spectrum(const GrassmannPoint& pt) {
  Report rep("spectrum", base_params(pt));
  Stopwatch sw(rep);
  const int n = pt.n();
  try {
    const Coloring c = color_positions(n);
    const auto green = c.initial_indices(Color::green);
    const Matrix g = simplex_product(pt.table(), Side::lhs).submatrix(green, green);
    const Matrix id = Matrix::identity(pt.field(), green.size());
    rep.details["green_dimension"] = green.size();
    if (!expect_equal(rep, "involution", g * g, id)) return rep;
    if (pt.field().characteristic() == 2) {
      rep.details["path"] = "involution_only";
      rep.details["spectral_ranks"] = "skipped: characteristic 2";
      return rep;
    }
    const std::size_t plus = linalg::rank(g - id);
    const std::size_t minus = linalg::rank(g + id);
    const std::size_t want_plus = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t want_minus = gon_dim(n);
    rep.details["rank_g_minus_1"] = plus;
    rep.details["rank_g_plus_1"] = minus;
    if (plus != want_plus || minus != want_minus)
      rep.fail({{"equation", "eigenspaces"},
                {"rank_g_minus_1", plus},
                {"expected_rank_g_minus_1", want_plus},
                {"rank_g_plus_1", minus},
                {"expected_rank_g_plus_1", want_minus}});
  } catch (const ConstructionError& e) {
    fail_construction(rep, e);
  }
  return rep;
}

Report verify_intertwining(const GrassmannPoint& pt) {
  Report rep("intertwining", base_params(pt));
  Stopwatch sw(rep);
  const int n = pt.n();
  const auto& t = pt.table();
  std::size_t checked = 0;
  try {
    for (int q = 1; q <= 2 * n + 1; ++q) {
      const auto a = complement_labels(n, q);
      auto A = [&](int idx) { return a[static_cast<std::size_t>(idx - 1)]; };
      const Matrix ma = build_A(t, q).matrix;
      const Matrix mb = build_B(t, q).matrix;
      const Multivector zero_phi(t.field(), t.dim(), n - 1);
      const Multivector zero_psi(t.field(), t.dim(), n + 3);
      // odd = 1 uses (A, inputs a_{2i-1}, outputs a_{2j}); odd = 0 the B version.
      for (int odd = 1; odd >= 0; --odd) {
        const Matrix& m = odd ? ma : mb;
        auto in = [&](int i) { return odd ? A(2 * i - 1) : A(2 * i); };
        auto out = [&](int j) { return odd ? A(2 * j) : A(2 * j - 1); };
        const std::string name = odd ? "A" : "B";
        for (int j = 1; j <= n; ++j) {
          Multivector sum = zero_phi;
          for (int i = 1; i <= n; ++i) sum += m(i - 1, j - 1) * phi(t, in(i), q);
          ++checked;
          if (!expect_equal(rep, "phi_" + name, sum, -phi(t, out(j), q), {{"q", q}, {"j", j}})) return rep;
        }
        for (int i = 1; i <= n; ++i) {
          Multivector sum = zero_psi;
          for (int j = 1; j <= n; ++j) sum += m(i - 1, j - 1) * psi(t, out(j), q);
          ++checked;
          if (!expect_equal(rep, "psi_" + name, sum, psi(t, in(i), q), {{"q", q}, {"i", i}})) return rep;
        }
      }
    }
    rep.details["identities_checked"] = checked;
  } catch (const ConstructionError& e) {
    fail_construction(rep, e);
  }
  return rep;
}

Report verify_ranks(const GrassmannPoint& pt) {
  Report rep("ranks", base_params(pt));
  Stopwatch sw(rep);
  const int n = pt.n();
  const auto& t = pt.table();
  const int d = t.dim();
  const std::size_t un = static_cast<std::size_t>(n);

  auto expect_rank = [&](const std::string& what, std::span<const Multivector> vs, std::size_t want,
                         json where) {
    const std::size_t r = span_rank(vs);
    if (r == want) return true;
    where["family"] = what;
    where["rank"] = r;
    where["expected"] = want;
    rep.fail(std::move(where));
    return false;
  };

  for (int j = 1; j <= d; ++j) {
    std::vector<Multivector> fam;
    std::vector<int> others;
    for (int i = 1; i <= d; ++i)
      if (i != j) {
        fam.push_back(phi(t, i, j));
        others.push_back(i);
      }
    if (!expect_rank("phi_fixed_j_all", fam, un, {{"j", j}})) return rep;
    // every n-subset of the 2n vectors is independent
    for (IndexSet s : subsets(2 * n, n)) {
      std::vector<Multivector> sub;
      std::vector<int> chosen;
      for (int k : s.labels()) {
        sub.push_back(fam[static_cast<std::size_t>(k - 1)]);
        chosen.push_back(others[static_cast<std::size_t>(k - 1)]);
      }
      if (!expect_rank("phi_fixed_j_subset", sub, un, {{"j", j}, {"i", chosen}})) return rep;
    }
  }

  std::vector<Multivector> initial;
  for (const Pair& p : gon_sequences(n).initial) initial.push_back(phi(t, p.first, p.second));
  if (!expect_rank("phi_initial_sequence", initial, gon_dim(n), json::object())) return rep;

  std::vector<Multivector> odd_phi;
  for (int i = 1; i <= d; i += 2)
    for (int j = i + 2; j <= d; j += 2) odd_phi.push_back(phi(t, i, j));
  if (!expect_rank("phi_odd_odd", odd_phi, gon_dim(n), json::object())) return rep;

  std::vector<Multivector> even_psi;
  for (int i = 2; i <= d; i += 2)
    for (int j = i + 2; j <= d; j += 2) even_psi.push_back(psi(t, i, j));
  if (!expect_rank("psi_even_even", even_psi, un * (un - 1) / 2, json::object())) return rep;

  rep.details["phi_odd_odd"] = odd_phi.size();
  rep.details["psi_even_even"] = even_psi.size();
  return rep;
}

Report verify_reduction(const GrassmannPoint& pt, std::span<const Scalar> lambdas, int depth) {
  const int n = pt.n();
  if (depth < 1 || depth > 2 * n - 1)
    throw InputError("reduction depth must be in 1.." + std::to_string(2 * n - 1) + " for n=" + std::to_string(n));
  std::vector<Scalar> lams(lambdas.begin(), lambdas.end());
  if (lams.empty()) lams = {pt.field().zero(), pt.field().one()};
  for (const auto& l : lams)
    if (!(l.field() == pt.field())) throw FieldMismatch("lambda is not in the point's field");

  json params = base_params(pt);
  params["depth"] = depth;
  json lj = json::array();
  for (const auto& l : lams) lj.push_back(io::to_json(l));
  params["lambdas"] = lj;
  Report rep("reduction", std::move(params));
  Stopwatch sw(rep);
  const auto& t = pt.table();
  json errors = json::array();
  std::size_t equations = 0;

  for (const auto& lam : lams) {
    std::vector<OperatorSlot> level;
    try {
      for (int q = 1; q <= 2 * n; ++q) {
        OperatorSlot z = build_Z(t, q, lam);
        const Matrix by_elim = reduce_last(build_R(t, q).matrix, lam);
        if (!expect_equal(rep, "closed_form_vs_elimination", z.matrix, by_elim)) {
          rep.witness->operator[]("q") = q;
          rep.witness->operator[]("lambda") = io::to_json(lam);
          break;
        }
        level.push_back(std::move(z));
      }
    } catch (const ConstructionError& e) {
      fail_construction(rep, e);
    } catch (const ReductionError& e) {
      rep.fail({{"reason", "singular_elimination"}, {"level", 1}, {"lambda", io::to_json(lam)}});
      errors.push_back(e.what());
    }
    if (rep.status == Status::fail) break;

    for (int lvl = 1; lvl <= depth; ++lvl) {
      const int N = 2 * n - lvl;
      if (lvl > 1) {
        std::vector<OperatorSlot> next;
        for (int q = 1; q <= N + 1; ++q) {
          const auto& prev = level[static_cast<std::size_t>(q - 1)];
          try {
            next.push_back({q, OperatorKind::Z, reduce_last(prev.matrix, lam), simplex_positions(N, q).positions, lam});
          } catch (const ReductionError& e) {
            rep.fail({{"reason", "singular_elimination"}, {"q", q}, {"level", lvl}, {"lambda", io::to_json(lam)}});
            errors.push_back(e.what());
            break;
          }
        }
        if (rep.status == Status::fail) break;
        level = std::move(next);
      }
      std::vector<OperatorSlot> rhs(level.rbegin(), level.rend());
      const std::size_t dim = simplex_dim(N);
      ++equations;
      if (!expect_equal(rep, std::to_string(N) + "-simplex", side_product(level, dim), side_product(rhs, dim))) {
        rep.witness->operator[]("level") = lvl;
        rep.witness->operator[]("lambda") = io::to_json(lam);
        break;
      }
    }
    if (rep.status == Status::fail) break;
  }
  rep.details["equations_checked"] = equations;
  if (!errors.empty()) rep.details["errors"] = errors;
  return rep;
}

std::vector<Report> run_checks(const GrassmannPoint& pt, std::span<const std::string> checks,
                               const CheckOptions& opts) {
  for (const auto& c : checks)
    if (std::find(std::begin(kAllChecks), std::end(kAllChecks), c) == std::end(kAllChecks))
      throw InputError("unknown check '" + c + "'");
  if (std::find(checks.begin(), checks.end(), "reduction") != checks.end() &&
      (opts.depth < 1 || opts.depth > 2 * pt.n() - 1))
    throw InputError("reduction depth must be in 1.." + std::to_string(2 * pt.n() - 1));

  auto one = [&pt, &opts](const std::string& c) -> Report {
    if (c == "plucker") return verify_plucker_relations(pt.table());
    if (c == "gon") return verify_gon(pt);
    if (c == "simplex") return verify_simplex(pt);
    if (c == "colors") return verify_colors(pt);
    if (c == "spectrum") return green_spectrum(pt);
    if (c == "intertwining") return verify_intertwining(pt);
    if (c == "ranks") return verify_ranks(pt);
    return verify_reduction(pt, opts.lambdas, opts.depth);
  };

  std::vector<Report> out;
  if (!opts.parallel) {
    for (const auto& c : checks) out.push_back(one(c));
    return out;
  }
  std::vector<std::future<Report>> futs;
  for (const auto& c : checks) futs.push_back(std::async(std::launch::async, one, c));
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace gsf
