#include "qtoric/qtoric.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "errors.hpp"
#include "jsonio.hpp"
#include "verify.hpp"

using namespace qtoric;
using jsonio::Json;

struct qt_ring {
  std::optional<charmat::StarForm> star;
  std::string source;
  classes::ManifoldRing ring;
};

namespace {

thread_local std::string last_error;

qt_status status_of(ErrorCode code) { return static_cast<qt_status>(static_cast<int>(code)); }

template <class F>
qt_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return QT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QT_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qt_ring* ring_from_star(const charmat::StarForm& sf, std::string source) {
  if (!charmat::is_characteristic(sf))
    fail(ErrorCode::InvalidMatrix, "star form " + sf.str() + " is not a characteristic matrix on the cube");
  return new qt_ring{sf, std::move(source), classes::manifold_ring(sf)};
}

}  // namespace

extern "C" {

const char* qt_version(void) { return "1.0.0"; }

const char* qt_last_error(void) { return last_error.c_str(); }

void qt_string_free(char* s) { delete[] s; }

qt_status qt_ring_from_star(const int64_t entries[6], qt_ring** out) {
  return guarded([&] {
    require(entries, "entries");
    require(out, "out");
    charmat::StarForm sf;
    for (std::size_t i = 0; i < 6; ++i) sf.v[i] = entries[i];
    *out = ring_from_star(sf, "star");
  });
}

qt_status qt_ring_from_star_text(const char* text, qt_ring** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = ring_from_star(charmat::parse_star(text), "star");
  });
}

qt_status qt_ring_from_name(const char* name, qt_ring** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto sf = charmat::builtin(name);
    if (!sf) fail(ErrorCode::InvalidArgument, std::string("unknown matrix name ") + name);
    *out = ring_from_star(*sf, name);
  });
}

qt_status qt_ring_from_matrix_json(const char* json, qt_ring** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    const auto lambda = jsonio::charmatrix_from_json(jsonio::parse(json));
    const auto check = charmat::validate(lambda);
    if (!check.valid) fail(ErrorCode::InvalidMatrix, "matrix fails the non-singular condition");
    if (lambda.polytope() == polytope::cube()) {
      *out = ring_from_star(charmat::to_star_form(lambda), "file");
    } else {
      *out = new qt_ring{std::nullopt, "file", classes::manifold_ring_full(lambda.polytope(), lambda)};
    }
  });
}

void qt_ring_free(qt_ring* ring) { delete ring; }

qt_status qt_ring_dump_json(const qt_ring* ring, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    Json j;
    j["source"] = ring->source;
    if (ring->star) {
      j["star"] = jsonio::to_json(*ring->star);
      j["family"] = charmat::family_of(*ring->star).name();
    }
    const Json dump = jsonio::ring_dump(ring->ring.integral, &ring->ring.classes);
    for (auto it = dump.begin(); it != dump.end(); ++it) j[it.key()] = it.value();
    const auto& integral = ring->ring.integral;
    if (integral.max_degree() >= 4 && integral.rank(2) <= 3)
      j["nilsquare2"] = jsonio::nilsquare_to_json(ringkit::nilsquare2(integral));
    *out = copy_string(jsonio::dump(j));
  });
}

qt_status qt_ring_classes_json(const qt_ring* ring, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    const auto& c = ring->ring.classes;
    const auto& pres = ring->ring.integral.presentation();
    Json j;
    if (ring->star) j["star"] = jsonio::to_json(*ring->star);
    Json sw = Json::array(), pont = Json::array();
    for (const auto& e : c.total_sw)
      sw.push_back(Json{{"degree", e.degree}, {"basis", ring->ring.mod2.basis_labels(e.degree)}, {"coeffs", e.coeffs}});
    for (const auto& e : c.total_pontryagin)
      pont.push_back(
          Json{{"degree", e.degree}, {"basis", ring->ring.integral.basis_labels(e.degree)}, {"coeffs", e.coeffs}});
    j["stiefel_whitney"] = sw;
    j["pontryagin"] = pont;
    j["w2"] = jsonio::to_json(c.w2);
    j["p1"] = jsonio::to_json(c.p1);
    j["w2_representative"] = c.w2_poly.to_string(pres.names);
    j["p1_representative"] = c.p1_poly.to_string(pres.names);
    *out = copy_string(jsonio::dump(j));
  });
}

qt_status qt_find_isomorphisms(const qt_ring* src, const qt_ring* dst, int bound, unsigned jobs, char** out) {
  return guarded([&] {
    require(src, "src");
    require(dst, "dst");
    require(out, "out");
    const auto maps = isokit::find_isomorphisms(src->ring.integral, dst->ring.integral, bound, jobs);
    const Json flagged = jsonio::maps_to_json(maps, src->ring, dst->ring);
    Json list = Json::array(), flags = Json::array();
    for (const auto& e : flagged) {
      list.push_back(e["matrix"]);
      flags.push_back(Json{{"is_iso", e["is_iso"]}, {"jupp", e["jupp"]}});
    }
    Json j;
    j["bound"] = bound;
    j[src == dst ? "automorphisms" : "isomorphisms"] = list;
    j["flags"] = flags;
    j["count"] = maps.size();
    *out = copy_string(jsonio::dump(j));
  });
}

qt_status qt_is_isomorphism(const qt_ring* src, const qt_ring* dst, const int64_t matrix[9], int* is_iso,
                            int* jupp) {
  return guarded([&] {
    require(src, "src");
    require(dst, "dst");
    require(matrix, "matrix");
    IntMatrix L(3, 3);
    for (std::size_t i = 0; i < 9; ++i) L(i / 3, i % 3) = matrix[i];
    const bool iso = isokit::is_isomorphism(L, src->ring.integral, dst->ring.integral);
    if (is_iso) *is_iso = iso;
    if (jupp) *jupp = iso && isokit::jupp_check(L, src->ring, dst->ring);
  });
}

qt_status qt_classify_cube(int bound, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(jsonio::dump(verify::classify_cube(bound).to_json()));
  });
}

qt_status qt_verify(const char* suite, int class_bound, int iso_bound, int samples, uint64_t seed, unsigned jobs,
                    char** out, int* all_pass) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    verify::Options options;
    options.class_bound = class_bound;
    options.iso_bound = iso_bound;
    options.samples = samples;
    options.seed = seed;
    options.jobs = jobs;
    const auto report = verify::run(suite, options);
    if (all_pass) *all_pass = report.all_pass();
    *out = copy_string(jsonio::dump(report.to_json()));
  });
}

}  // extern "C"
