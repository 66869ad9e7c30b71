#include "dk/cli/document.hpp"

#include "dk/error.hpp"

namespace dk::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::vector<linalg::Matrix>> matrix_rows(const Json& j) {
  std::vector<std::vector<linalg::Matrix>> out;
  for (const auto& level : j) {
    if (!level.is_array()) throw ParseError("expected a list of matrices per level");
    out.emplace_back();
    for (const auto& m : level) out.back().push_back(matrix_from_json(m));
  }
  return out;
}

}  // namespace

Json to_json(const linalg::Scalar& s) { return s.str(); }

linalg::Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return linalg::Scalar(j.get<long>());
  return linalg::Scalar::parse(string_of(j, "scalar"));
}

Json to_json(const linalg::Matrix& m) {
  Json entries = Json::array();
  for (const auto& t : m.triplets()) entries.push_back(Json::array({t.row, t.col, to_json(t.value)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

linalg::Matrix matrix_from_json(const Json& j) {
  int rows = int_field(j, "rows"), cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) throw ParseError("matrix dimensions must be nonnegative");
  std::vector<linalg::Matrix::Triplet> trip;
  for (const auto& e : array_field(j, "entries")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("matrix entries are [row, col, value]");
    int r = e[0].get<int>(), c = e[1].get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw ParseError("matrix entry out of range");
    trip.push_back({r, c, scalar_from_json(e[2])});
  }
  return linalg::Matrix::from_triplets(rows, cols, trip);
}

Json to_json(const linalg::ChainComplex& c) {
  Json ds = Json::array();
  for (const auto& d : c.differentials()) ds.push_back(to_json(d));
  return Json{{"dims", c.spaces().dims()}, {"differentials", ds}};
}

linalg::ChainComplex complex_from_json(const Json& j) {
  std::vector<int> dims;
  for (const auto& d : array_field(j, "dims")) {
    if (!d.is_number_integer() || d.get<int>() < 0) throw ParseError("dims must be nonnegative integers");
    dims.push_back(d.get<int>());
  }
  std::vector<linalg::Matrix> ds;
  for (const auto& d : array_field(j, "differentials")) ds.push_back(matrix_from_json(d));
  return linalg::ChainComplex(dims, std::move(ds));
}

Json to_json(const simplicial::SimplicialVectorSpace& v) {
  auto levels = [](const std::vector<std::vector<linalg::Matrix>>& ms) {
    Json out = Json::array();
    for (const auto& level : ms) {
      Json row = Json::array();
      for (const auto& m : level) row.push_back(to_json(m));
      out.push_back(row);
    }
    return out;
  };
  return Json{{"dims", v.levels().dims()}, {"faces", levels(v.faces())}, {"degeneracies", levels(v.degeneracies())}};
}

simplicial::SimplicialVectorSpace simplicial_from_json(const Json& j) {
  std::vector<int> dims;
  for (const auto& d : array_field(j, "dims")) {
    if (!d.is_number_integer() || d.get<int>() < 0) throw ParseError("dims must be nonnegative integers");
    dims.push_back(d.get<int>());
  }
  return simplicial::SimplicialVectorSpace(linalg::GradedVectorSpace(dims), matrix_rows(array_field(j, "faces")),
                                           matrix_rows(array_field(j, "degeneracies")));
}

Json to_json(const cdga::FreeCDGA& a) {
  Json gens = Json::array();
  Json d = Json::object();
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    const auto& g = a.generators()[i];
    Json entry{{"name", g.name}, {"degree", g.degree}};
    if (g.weight) entry["weight"] = *g.weight;
    gens.push_back(entry);
    if (!a.differential_of(i).is_zero()) d[g.name] = a.str(a.differential_of(i));
  }
  return Json{{"generators", gens}, {"differential", d}};
}

cdga::FreeCDGA algebra_from_json(const Json& j) {
  std::vector<cdga::GeneratorSpec> gens;
  for (const auto& g : array_field(j, "generators")) {
    cdga::GeneratorSpec spec{string_of(field(g, "name"), "generator name"), int_field(g, "degree"), std::nullopt};
    if (g.contains("weight")) spec.weight = int_field(g, "weight");
    gens.push_back(spec);
  }
  std::map<std::string, std::string> d;
  if (j.contains("differential")) {
    if (!j.at("differential").is_object()) throw ParseError("'differential' must be an object");
    for (const auto& [name, p] : j.at("differential").items()) d[name] = string_of(p, "differential");
  }
  return cdga::FreeCDGA(gens, d);
}

Json to_json(const cdga::AlgebraMap& f) {
  Json images = Json::object();
  for (std::size_t i = 0; i < f.source().generator_count(); ++i)
    images[f.source().generators()[i].name] = f.target().str(f.image(i));
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"images", images}};
}

cdga::AlgebraMap map_from_json(const Json& j) {
  std::map<std::string, std::string> images;
  const auto& im = field(j, "images");
  if (!im.is_object()) throw ParseError("'images' must be an object");
  for (const auto& [name, p] : im.items()) images[name] = string_of(p, "image");
  return cdga::AlgebraMap(algebra_from_json(field(j, "source")), algebra_from_json(field(j, "target")), images);
}

Json to_json(const dcart::Point& p) {
  Json out = Json::object();
  for (const auto& [name, v] : p) out[name] = to_json(v);
  return out;
}

dcart::Point point_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a point is an object {generator: value}");
  dcart::Point p;
  for (const auto& [name, v] : j.items()) p[name] = scalar_from_json(v);
  return p;
}

Json parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("version") || doc.at("version") != kVersion)
    throw ParseError(std::string("document version must be \"") + kVersion + "\"");
  return doc;
}

}  // namespace dk::cli
