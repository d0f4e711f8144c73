#include <gtest/gtest.h>

#include <memory>
#include <string>
#include <thread>

#include "json.hpp"
#include "qtoric/qtoric.h"

namespace {

using Json = nlohmann::json;
using Ring = std::unique_ptr<qt_ring, decltype(&qt_ring_free)>;

Ring named(const char* name) {
  qt_ring* r = nullptr;
  EXPECT_EQ(qt_ring_from_name(name, &r), QT_OK) << name << ": " << qt_last_error();
  return Ring(r, &qt_ring_free);
}

Json take(char* s) {
  Json j = Json::parse(s);
  qt_string_free(s);
  return j;
}

}  // namespace

TEST(CApi, VersionAndNullSafety) {
  EXPECT_STRNE(qt_version(), "");
  EXPECT_NE(qt_last_error(), nullptr);
  qt_ring_free(nullptr);
  qt_string_free(nullptr);
  EXPECT_EQ(qt_ring_from_name(nullptr, nullptr), QT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ErrorCodes) {
  qt_ring* r = nullptr;
  EXPECT_EQ(qt_ring_from_name("chi12", &r), QT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(r, nullptr);
  EXPECT_NE(std::string(qt_last_error()), "");
  const int64_t bad[6] = {1, 1, 0, 0, 0, 0};
  EXPECT_EQ(qt_ring_from_star(bad, &r), QT_ERR_INVALID_MATRIX);
  EXPECT_EQ(qt_ring_from_star_text("1 2", &r), QT_ERR_PARSE);
  EXPECT_EQ(qt_ring_from_matrix_json("{\"rows\": [", &r), QT_ERR_PARSE);
  char* out = nullptr;
  EXPECT_EQ(qt_classify_cube(50, &out), QT_ERR_CAPABILITY);
  int pass = 0;
  EXPECT_EQ(qt_verify("nonsense", 2, 3, 1, QT_DEFAULT_SEED, 1, &out, &pass), QT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, RingDump) {
  const int64_t star[6] = {0, 0, 0, 0, 2, 1};
  qt_ring* r = nullptr;
  ASSERT_EQ(qt_ring_from_star(star, &r), QT_OK);
  Ring ring(r, &qt_ring_free);
  char* out = nullptr;
  ASSERT_EQ(qt_ring_dump_json(ring.get(), &out), QT_OK);
  const Json j = take(out);
  EXPECT_EQ(j["ranks"], Json::parse("[1,3,3,1]"));
  ASSERT_EQ(qt_ring_classes_json(ring.get(), &out), QT_OK);
  EXPECT_FALSE(take(out).empty());
}

TEST(CApi, MatrixJsonOnCubeAndOtherPolytopes) {
  qt_ring* r = nullptr;
  ASSERT_EQ(qt_ring_from_matrix_json(
                R"({"polytope":"cube","rows":[[1,0,0,1,0,2],[0,1,0,1,1,2],[0,0,1,0,1,1]]})", &r),
            QT_OK)
      << qt_last_error();
  Ring cube(r, &qt_ring_free);
  ASSERT_EQ(qt_ring_from_matrix_json(
                R"({"polytope":{"dim":1,"num_facets":2,"vertices":[[1],[2]]},"rows":[[1,-1]]})", &r),
            QT_OK)
      << qt_last_error();
  Ring sphere(r, &qt_ring_free);
  char* out = nullptr;
  ASSERT_EQ(qt_ring_dump_json(sphere.get(), &out), QT_OK);
  EXPECT_EQ(take(out)["ranks"], Json::parse("[1,1]"));
  // A cube matrix failing the vertex condition.
  EXPECT_EQ(qt_ring_from_matrix_json(
                R"({"polytope":"cube","rows":[[1,0,0,1,1,0],[0,1,0,1,1,0],[0,0,1,0,0,1]]})", &r),
            QT_ERR_INVALID_MATRIX);
}

TEST(CApi, IsomorphismSearch) {
  auto src = named("lambda:-1,-2");
  auto dst = named("chi5");
  char* out = nullptr;
  ASSERT_EQ(qt_find_isomorphisms(src.get(), dst.get(), 3, 1, &out), QT_OK);
  const Json j = take(out);
  EXPECT_GT(j["count"].get<int>(), 0);
  EXPECT_TRUE(j.contains("isomorphisms"));
  for (const auto& f : j["flags"]) {
    EXPECT_TRUE(f["is_iso"].get<bool>());
    EXPECT_TRUE(f["jupp"].get<bool>());
  }
  const int64_t alpha5[9] = {1, 0, 0, 0, 0, 1, 1, 1, 0};
  int iso = 0, jupp = 0;
  ASSERT_EQ(qt_is_isomorphism(src.get(), dst.get(), alpha5, &iso, &jupp), QT_OK);
  EXPECT_EQ(iso, 1);
  EXPECT_EQ(jupp, 1);
  const int64_t id[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  ASSERT_EQ(qt_is_isomorphism(src.get(), dst.get(), id, &iso, &jupp), QT_OK);
  EXPECT_EQ(iso, 0);
}

TEST(CApi, AutomorphismsOfChiOne) {
  auto r = named("chi1");
  char* out = nullptr;
  ASSERT_EQ(qt_find_isomorphisms(r.get(), r.get(), 3, 0, &out), QT_OK);
  const Json j = take(out);
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["automorphisms"].size(), 2u);
}

TEST(CApi, ClassifyAndVerify) {
  char* out = nullptr;
  ASSERT_EQ(qt_classify_cube(1, &out), QT_OK);
  EXPECT_EQ(take(out)["classes"].size(), 6u);
  int pass = 0;
  ASSERT_EQ(qt_verify("classification", 2, 3, 1, QT_DEFAULT_SEED, 1, &out, &pass), QT_OK);
  EXPECT_EQ(pass, 1);
  EXPECT_EQ(take(out)["suite"], "classification");
}

TEST(CApi, ConcurrentCallsKeepSeparateErrors) {
  std::string a, b;
  std::thread t1([&] {
    qt_ring* r = nullptr;
    qt_ring_from_name("chi99", &r);
    a = qt_last_error();
  });
  std::thread t2([&] {
    qt_ring* r = nullptr;
    qt_ring_from_star_text("x", &r);
    b = qt_last_error();
  });
  t1.join();
  t2.join();
  EXPECT_NE(a, b);
  EXPECT_NE(a, "");
  EXPECT_NE(b, "");
}
