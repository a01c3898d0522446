#include <gsf/cli.hpp>

#include <gsf/combinatorics.hpp>
#include <gsf/error.hpp>
#include <gsf/grassmann.hpp>
#include <gsf/serialize.hpp>
#include <gsf/solutions.hpp>
#include <gsf/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace gsf::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  int n = 0;
  std::string field = "q";
  std::uint64_t seed = 0;
  std::string point;
  std::string out;
  std::string what = "A";
  std::string q = "all";
  std::string lambdas;
  int depth = 1;
  std::string checks = "all";
  bool no_timing = false;
  bool parallel = false;
  std::string equation = "gon";
  bool coloring = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

GrassmannPoint load_point(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open point file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("point file '" + path + "' is not valid JSON: " + e.what());
  }
  return io::point_from_json(j);
}

void write_json(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

std::vector<int> labels_for(const std::string& q, int last) {
  if (q == "all") {
    std::vector<int> all;
    for (int i = 1; i <= last; ++i) all.push_back(i);
    return all;
  }
  std::vector<int> out;
  for (const auto& tok : split(q, ',')) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError("bad label '" + tok + "'");
    }
    if (v < 1 || v > last) throw InputError("label " + tok + " outside 1.." + std::to_string(last));
    out.push_back(v);
  }
  if (out.empty()) throw InputError("no labels given");
  return out;
}

std::vector<Scalar> parse_lambdas(const Field& f, const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& tok : split(text, ',')) out.push_back(f.parse_scalar(tok));
  return out;
}

int cmd_gen(const RunConfig& c, std::ostream& out) {
  if (c.n < 1) throw InputError("--n must be >= 1");
  std::uint64_t seed = c.seed;
  if (const char* env = std::getenv("GSF_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::logic_error&) {
      throw InputError(std::string("GSF_SEED is not an unsigned integer: ") + env);
    }
  }
  const GrassmannPoint pt = random_point(c.n, Field::parse(c.field), seed);
  json j = io::to_json(pt);
  j["seed"] = seed;
  write_json(j, c.out, out);
  if (!c.out.empty()) {
    out << "Gr(" << c.n + 1 << "," << 2 * c.n + 1 << ") over " << pt.field().descriptor() << ", seed " << seed
        << ": " << pt.table().entries().size() << " Plücker coordinates, all nonzero\n";
    for (const auto& [k, v] : pt.table().entries()) {
      out << "  p";
      for (int l : k.labels()) out << l;
      out << " = " << v.to_string() << "\n";
    }
  }
  return 0;
}

int cmd_build(const RunConfig& c, std::ostream& out) {
  const GrassmannPoint pt = load_point(c.point);
  const int n = pt.n();
  json ops = json::array();
  if (c.what == "A" || c.what == "B" || c.what == "R") {
    for (int q : labels_for(c.q, 2 * n + 1)) {
      if (c.what == "A") ops.push_back(io::to_json(build_A(pt, q)));
      else if (c.what == "B") ops.push_back(io::to_json(build_B(pt, q)));
      else ops.push_back(io::to_json(build_R(pt, q)));
    }
  } else if (c.what == "Z") {
    auto lams = parse_lambdas(pt.field(), c.lambdas.empty() ? "0" : c.lambdas);
    if (lams.size() != 1) throw InputError("build --what Z takes exactly one --lambda");
    for (int q : labels_for(c.q, 2 * n)) ops.push_back(io::to_json(build_Z(pt, q, lams.front())));
  } else {
    throw InputError("--what must be one of A, B, R, Z");
  }
  write_json({{"n", n}, {"field", pt.field().descriptor()}, {"operators", ops}}, c.out, out);
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const GrassmannPoint pt = load_point(c.point);
  std::vector<std::string> checks;
  if (c.checks == "all") checks.assign(std::begin(kAllChecks), std::end(kAllChecks));
  else checks = split(c.checks, ',');
  if (checks.empty()) throw InputError("no checks selected");
  CheckOptions opts;
  opts.lambdas = parse_lambdas(pt.field(), c.lambdas);
  opts.depth = c.depth;
  opts.parallel = c.parallel;
  const auto reports = run_checks(pt, checks, opts);

  bool ok = true;
  json rs = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    rs.push_back(r.to_json(!c.no_timing));
  }
  const json doc = {{"point", io::to_json(pt)}, {"status", ok ? "pass" : "fail"}, {"reports", rs}};
  if (!c.out.empty()) write_json(doc, c.out, out);
  out << doc.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_positions(const RunConfig& c, std::ostream& out) {
  if (c.n < 1) throw InputError("--n must be >= 1");
  json doc = {{"n", c.n}, {"equation", c.equation}};
  json pos = json::object();
  if (c.equation == "gon") {
    for (int q = 1; q <= 2 * c.n + 1; ++q) pos[std::to_string(q)] = gon_positions(c.n, q).positions;
  } else if (c.equation == "simplex") {
    for (int q = 1; q <= 2 * c.n + 1; ++q) pos[std::to_string(q)] = simplex_positions(2 * c.n, q).positions;
  } else {
    throw InputError("--equation must be gon or simplex");
  }
  doc["positions"] = pos;
  if (c.coloring) doc["coloring"] = io::to_json(color_positions(c.n));
  write_json(doc, c.out, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Direct-sum polygon and simplex solutions from Grassmannian points", "gsf"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "sample a point with all Plücker coordinates nonzero");
  gen->add_option("--n", c.n, "half-size n of Gr(n+1, 2n+1)")->required();
  gen->add_option("--field", c.field, "field descriptor: q, gf(p), gf(p,k;c0,...,ck)");
  gen->add_option("--seed", c.seed, "RNG seed (GSF_SEED overrides)");
  gen->add_option("--out", c.out, "output file (stdout if omitted)");

  auto* build = app.add_subcommand("build", "build A, B, R or Z operators");
  build->add_option("--point", c.point)->required();
  build->add_option("--what", c.what, "A, B, R or Z");
  build->add_option("--q", c.q, "'all' or comma-separated labels");
  build->add_option("--lambda", c.lambdas, "lambda for Z (default 0)");
  build->add_option("--out", c.out);

  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--point", c.point)->required();
  verify->add_option("--checks", c.checks, "'all' or comma-separated check names");
  verify->add_option("--lambda", c.lambdas, "comma-separated lambdas for reduction (default 0,1)");
  verify->add_option("--depth", c.depth, "reduction depth");
  verify->add_option("--out", c.out);
  verify->add_flag("--no-timing", c.no_timing, "omit millis for reproducible output");
  verify->add_flag("--parallel", c.parallel, "run checks concurrently");

  auto* positions = app.add_subcommand("positions", "position sets and coloring");
  positions->add_option("--n", c.n)->required();
  positions->add_option("--equation", c.equation, "gon or simplex");
  positions->add_flag("--coloring", c.coloring);
  positions->add_option("--out", c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(c, out);
    if (build->parsed()) return cmd_build(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    return cmd_positions(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gsf::cli
