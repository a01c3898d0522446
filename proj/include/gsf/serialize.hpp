#pragma once

#include <gsf/combinatorics.hpp>
#include <gsf/exterior.hpp>
#include <gsf/grassmann.hpp>
#include <gsf/matrix.hpp>
#include <gsf/solutions.hpp>

#include <json.hpp>

namespace gsf::io {

using nlohmann::json;

/// Rationals: "a/b" (or "a" when b = 1); prime field: decimal text;
/// extension: array of decimal texts, constant term first.
json to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

/// {"grade": g, "terms": [{"indices": [...], "coeff": <scalar>}]}, terms in
/// lexicographic order of their indices.
json to_json(const Multivector& v);
Multivector multivector_from_json(const Field& f, int dim, const json& j);

/// {"n": n, "field": "<descriptor>", "matrix": [[...]]}. An overridden table
/// adds "pluecker": [{"indices": [...], "value": <scalar>}] listing the
/// entries that differ from the matrix minors.
json to_json(const GrassmannPoint& pt);
GrassmannPoint point_from_json(const json& j);

/// [{"indices": [...], "value": <scalar>}] over all entries.
json to_json(const PlueckerTable& t);

/// {"q": q, "kind": "A"|"B"|"R"|"Z", "matrix": [[..]], "positions": [..], "lambda": <scalar, Z only>}.
json to_json(const OperatorSlot& s);

json to_json(const Coloring& c);

}  // namespace gsf::io
