#pragma once

#include <string>

#include "json.hpp"

#include "classes.hpp"
#include "isokit.hpp"

namespace qtoric::jsonio {

using Json = nlohmann::ordered_json;

Json to_json(const IntMatrix& m);
Json to_json(const charmat::StarForm& sf);
Json to_json(const ringkit::RingElement& e);
IntMatrix matrix_from_json(const Json& j);

/// {"dim":n,"num_facets":m,"vertices":[[...],...]}, 1-based facets.
Json polytope_to_json(const polytope::SimplePolytope& p);
polytope::SimplePolytope polytope_from_json(const Json& j);

/// {"polytope":"cube"|{...},"rows":[[...],...]}
Json charmatrix_to_json(const charmat::CharMatrix& lambda);
charmat::CharMatrix charmatrix_from_json(const Json& j);

/// Parses text and maps JSON errors to ErrorCode::Parse.
Json parse(const std::string& text);

/// Ranks, basis labels, structure constants, and the classes when given.
Json ring_dump(const ringkit::GradedRing& ring, const classes::CharClassData* classes = nullptr);
Json nilsquare_to_json(const ringkit::NilSquare& ns);

/// Matrices with their {"is_iso","jupp"} flags.
Json maps_to_json(const std::vector<IntMatrix>& maps, const classes::ManifoldRing& src,
                  const classes::ManifoldRing& dst);

/// Two-space indented rendering with a trailing newline.
std::string dump(const Json& j);

}  // namespace qtoric::jsonio
