#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jsonio.hpp"

namespace qtoric::verify {

using jsonio::Json;

inline constexpr std::uint64_t kDefaultSeed = 20230917;
inline constexpr int kClassifyCap = 4;
inline constexpr Int kSampleLo = -5;
inline constexpr Int kSampleHi = 5;

/// A single machine-checked statement. Failing verdicts carry the
/// offending matrices or maps in `witness`.
struct Verdict {
  std::string id;
  bool pass = false;
  Json witness;
};

Json to_json(const Verdict& v);

struct ClassEntry {
  charmat::StarForm canonical;
  charmat::ClassFamily family;
  std::size_t members = 0;  // enumerated star forms in the class
};

struct ClassificationReport {
  int bound = 0;
  std::size_t enumerated = 0;
  std::vector<ClassEntry> classes;  // ordered by canonical form
  std::map<std::string, std::size_t> family_counts;
  std::vector<Verdict> verdicts;

  Json to_json() const;
};

/// Enumerates star forms up to `bound`, groups them into orbit classes and
/// tags every class. Throws Capability above the cap (4, or QTORIC_MAX_BOUND).
ClassificationReport classify_cube(int bound);

/// Case analyses of the cube classification: move diagram, C_{0,0,2},
/// C_{0,2,2} and C_{2,2,2}.
std::vector<Verdict> verify_section3(int bound);

/// Theta solutions, Aut(chi1), the explicit lambda_{s,t} automorphisms, and
/// the structure of every isomorphism found inside the two families.
std::vector<Verdict> verify_families(int bound, int samples, std::uint64_t seed, unsigned jobs = 1);

/// Nil-square separation, the alpha maps, and non-isomorphism of Bott and
/// lambda^{s,t} samples.
std::vector<Verdict> verify_rigidity_partition(int samples, int bound, std::uint64_t seed, unsigned jobs = 1);

struct Options {
  int class_bound = 2;
  int iso_bound = 3;
  int samples = 20;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;  // not part of the report
};

struct Report {
  std::string suite;
  Options options;
  std::vector<Verdict> verdicts;

  bool all_pass() const;
  Json to_json() const;
};

/// classification, cases, families, partition, all.
const std::vector<std::string>& suites();
Report run(const std::string& suite, const Options& options);

}  // namespace qtoric::verify
