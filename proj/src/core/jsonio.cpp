#include "jsonio.hpp"

#include "errors.hpp"

namespace qtoric::jsonio {

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const charmat::StarForm& sf) { return Json(sf.v); }

Json to_json(const ringkit::RingElement& e) { return Json(e.coeffs); }

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "matrix must be an array of rows");
  std::vector<std::vector<Int>> rows;
  std::size_t cols = 0;
  for (const auto& r : j) {
    if (!r.is_array()) fail(ErrorCode::Parse, "matrix row must be an array");
    std::vector<Int> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) fail(ErrorCode::Parse, "matrix entries must be integers");
      row.push_back(x.get<Int>());
    }
    if (!rows.empty() && row.size() != cols) fail(ErrorCode::Parse, "matrix rows differ in length");
    cols = row.size();
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

Json polytope_to_json(const polytope::SimplePolytope& p) {
  Json out;
  out["dim"] = p.dim();
  out["num_facets"] = p.num_facets();
  out["vertices"] = p.vertices();
  return out;
}

polytope::SimplePolytope polytope_from_json(const Json& j) {
  try {
    return polytope::SimplePolytope(j.at("dim").get<int>(), j.at("num_facets").get<int>(),
                                    j.at("vertices").get<std::vector<polytope::FacetSet>>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("polytope file: ") + e.what());
  }
}

Json charmatrix_to_json(const charmat::CharMatrix& lambda) {
  Json out;
  if (lambda.polytope() == polytope::cube())
    out["polytope"] = "cube";
  else
    out["polytope"] = polytope_to_json(lambda.polytope());
  out["rows"] = to_json(lambda.entries());
  return out;
}

charmat::CharMatrix charmatrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("polytope") || !j.contains("rows"))
    fail(ErrorCode::Parse, "characteristic matrix file needs \"polytope\" and \"rows\"");
  const Json& p = j.at("polytope");
  polytope::SimplePolytope poly = polytope::cube();
  if (p.is_string()) {
    if (p.get<std::string>() != "cube") fail(ErrorCode::Parse, "unknown polytope name " + p.get<std::string>());
  } else {
    poly = polytope_from_json(p);
  }
  return charmat::CharMatrix(std::move(poly), matrix_from_json(j.at("rows")));
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

Json nilsquare_to_json(const ringkit::NilSquare& ns) {
  Json out;
  static const char* kinds[] = {"zero", "line", "lines", "infinite"};
  out["kind"] = kinds[static_cast<int>(ns.kind)];
  out["subgroup"] = ns.is_subgroup();
  out["lines"] = ns.lines;
  out["describe"] = ns.describe();
  out["crosscheck_bound"] = ns.crosscheck_bound;
  out["crosscheck_misses"] = ns.crosscheck_misses;
  return out;
}

Json ring_dump(const ringkit::GradedRing& ring, const classes::CharClassData* classes) {
  const auto& pres = ring.presentation();
  Json out;
  out["generators"] = pres.names;
  Json rels = Json::array();
  for (const auto& r : pres.relations) rels.push_back(r.to_string(pres.names));
  out["relations"] = rels;
  out["modulus"] = ring.modulus();
  out["ranks"] = ring.ranks();
  Json basis = Json::array();
  for (int d = 0; d <= ring.max_degree(); d += 2) basis.push_back(ring.basis_labels(d));
  out["basis"] = basis;
  Json products = Json::array();
  for (const auto& p : ringkit::structure_constants(ring)) {
    Json e;
    e["a"] = ring.basis_labels(p.degree_a)[p.a];
    e["b"] = ring.basis_labels(p.degree_b)[p.b];
    e["degree"] = p.value.degree;
    e["value"] = p.value.coeffs;
    products.push_back(std::move(e));
  }
  out["products"] = products;
  if (classes) {
    out["w2"] = to_json(classes->w2);
    out["p1"] = to_json(classes->p1);
    out["w2_representative"] = classes->w2_poly.to_string(pres.names);
    out["p1_representative"] = classes->p1_poly.to_string(pres.names);
  }
  return out;
}

Json maps_to_json(const std::vector<IntMatrix>& maps, const classes::ManifoldRing& src,
                  const classes::ManifoldRing& dst) {
  Json out = Json::array();
  for (const auto& L : maps) {
    Json e;
    e["matrix"] = to_json(L);
    const bool iso = isokit::is_isomorphism(L, src.integral, dst.integral);
    e["is_iso"] = iso;
    e["jupp"] = iso && isokit::jupp_check(L, src, dst);
    out.push_back(std::move(e));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qtoric::jsonio
