#pragma once

#include <json.hpp>

#include "dk/cdga/algebra_map.hpp"
#include "dk/dcart/derived_space.hpp"
#include "dk/simplicial/simplicial_vector_space.hpp"

namespace dk::cli {

/// Key order is kept as written, so emitted documents are stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "dk/1";

/// Scalars are strings "num" or "num/den".
Json to_json(const linalg::Scalar& s);
linalg::Scalar scalar_from_json(const Json& j);

/// {"rows", "cols", "entries": [[row, col, value], ...]} with row-major entries.
Json to_json(const linalg::Matrix& m);
linalg::Matrix matrix_from_json(const Json& j);

/// {"dims": [...], "differentials": [d_1, ..., d_T]}
Json to_json(const linalg::ChainComplex& c);
linalg::ChainComplex complex_from_json(const Json& j);

/// {"dims", "faces": [[d_0..d_n] per level n >= 1], "degeneracies": [[s_0..s_n] per level n < T]}
Json to_json(const simplicial::SimplicialVectorSpace& v);
simplicial::SimplicialVectorSpace simplicial_from_json(const Json& j);

/// {"generators": [{"name", "degree", "weight"?}], "differential": {name: polynomial}}
Json to_json(const cdga::FreeCDGA& a);
cdga::FreeCDGA algebra_from_json(const Json& j);

/// {"source", "target", "images": {source generator: polynomial over target}}
Json to_json(const cdga::AlgebraMap& f);
cdga::AlgebraMap map_from_json(const Json& j);

/// {generator: scalar}
Json to_json(const dcart::Point& p);
dcart::Point point_from_json(const Json& j);

/// Parses a whole input document and checks its version field.
Json parse_document(const std::string& text);

}  // namespace dk::cli
