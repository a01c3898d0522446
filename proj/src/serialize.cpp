#include <gsf/serialize.hpp>

#include <string>

namespace gsf::io {

json to_json(const Scalar& s) {
  switch (s.field().kind()) {
    case FieldKind::rationals:
    case FieldKind::prime: return s.to_string();
    case FieldKind::extension: {
      json a = json::array();
      for (int i = 0; i < s.field().degree(); ++i) a.push_back(std::to_string(s.coeffs()[i]));
      return a;
    }
  }
  return nullptr;
}

Scalar scalar_from_json(const Field& f, const json& j) {
  if (f.kind() == FieldKind::extension) {
    if (!j.is_array()) throw InputError("extension scalar must be an array of coefficients");
    std::string text;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_string() && !j[i].is_number_unsigned()) throw InputError("bad extension coefficient");
      text += (i ? ":" : "") + (j[i].is_string() ? j[i].get<std::string>() : std::to_string(j[i].get<unsigned>()));
    }
    return f.parse_scalar(text);
  }
  if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  throw InputError("scalar must be a string (or integer)");
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError("matrix must be a non-empty array of rows");
  Matrix m(f, j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar_from_json(f, j[r][c]);
  }
  return m;
}

json to_json(const Multivector& v) {
  json terms = json::array();
  for (const auto& [s, c] : v.terms()) terms.push_back({{"indices", s.labels()}, {"coeff", to_json(c)}});
  return {{"grade", v.grade()}, {"terms", std::move(terms)}};
}

Multivector multivector_from_json(const Field& f, int dim, const json& j) {
  try {
    Multivector v(f, dim, j.at("grade").get<int>());
    for (const auto& t : j.at("terms")) {
      const auto idx = t.at("indices").get<std::vector<int>>();
      for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] >= idx[i]) throw InputError("multivector indices must be strictly increasing");
      for (int l : idx)
        if (l < 1 || l > dim) throw InputError("multivector index outside ambient dimension");
      v.add_term(IndexSet::from_labels(idx), scalar_from_json(f, t.at("coeff")));
    }
    return v;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed multivector JSON: ") + e.what());
  }
}

json to_json(const PlueckerTable& t) {
  json out = json::array();
  for (const auto& [k, v] : t.entries()) out.push_back({{"indices", k.labels()}, {"value", to_json(v)}});
  return out;
}

json to_json(const GrassmannPoint& pt) {
  json j = {{"n", pt.n()}, {"field", pt.field().descriptor()}, {"matrix", to_json(pt.matrix())}};
  if (pt.table_overridden()) {
    const PlueckerTable fresh = pluecker_table(pt.n(), pt.matrix());
    json diff = json::array();
    for (const auto& [k, v] : pt.table().entries())
      if (!(fresh.at(k) == v)) diff.push_back({{"indices", k.labels()}, {"value", to_json(v)}});
    j["pluecker"] = std::move(diff);
  }
  return j;
}

GrassmannPoint point_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1) throw InputError("n must be >= 1");
    const Field f = Field::parse(j.at("field").get<std::string>());
    GrassmannPoint pt(n, matrix_from_json(f, j.at("matrix")));
    if (j.contains("pluecker")) {
      PlueckerTable t = pt.table();
      for (const auto& e : j.at("pluecker")) {
        auto idx = e.at("indices").get<std::vector<int>>();
        if (static_cast<int>(idx.size()) != n + 1) throw InputError("Plücker override needs n+1 indices");
        for (std::size_t i = 1; i < idx.size(); ++i)
          if (idx[i - 1] >= idx[i]) throw InputError("Plücker override indices must be strictly increasing");
        t = t.with_entry(IndexSet::from_labels(idx), scalar_from_json(f, e.at("value")));
      }
      pt = pt.with_table(std::move(t));
    }
    return pt;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed point JSON: ") + e.what());
  }
}

json to_json(const OperatorSlot& s) {
  json j = {{"q", s.label}, {"kind", to_string(s.kind)}, {"matrix", to_json(s.matrix)}, {"positions", s.positions}};
  if (s.lambda) j["lambda"] = to_json(*s.lambda);
  return j;
}

json to_json(const Coloring& c) {
  auto colors = [&](const std::vector<Color>& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
      a.push_back({{"pair", {c.sim[i].first, c.sim[i].second}}, {"color", to_string(v[i])}});
    return a;
  };
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back({{"q", s.label}, {"colors", colors(s.colors)}});
  return {{"n", c.n}, {"initial", colors(c.initial)}, {"steps", std::move(steps)}};
}

}  // namespace gsf::io
