#include "verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "errors.hpp"
#include "limits.hpp"

namespace qtoric::verify {

using charmat::StarForm;
using classes::ManifoldRing;

Json to_json(const Verdict& v) {
  Json out;
  out["id"] = v.id;
  out["pass"] = v.pass;
  out["witness"] = v.witness;
  return out;
}

namespace {

Verdict make(std::string id, bool pass, Json witness) { return Verdict{std::move(id), pass, std::move(witness)}; }

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream) : rng_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {}
  Int uniform(Int lo, Int hi) { return lo + static_cast<Int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 rng_;
};

class RingCache {
 public:
  const ManifoldRing& get(const StarForm& sf) {
    auto it = rings_.find(sf);
    if (it == rings_.end()) it = rings_.emplace(sf, classes::manifold_ring(sf)).first;
    return it->second;
  }

 private:
  std::map<StarForm, ManifoldRing> rings_;
};

Json pair_json(Int a, Int b) { return Json::array({a, b}); }

IntMatrix negated(IntMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  return m;
}

/// i with block = +-theta_i, 0 if none.
int theta_index(const IntMatrix& L) {
  const IntMatrix block{{L(1, 1), L(1, 2)}, {L(2, 1), L(2, 2)}};
  for (int i = 1; i <= 4; ++i)
    if (block == isokit::theta(i) || block == negated(isokit::theta(i))) return i;
  return 0;
}

bool negation_closed(const std::vector<IntMatrix>& maps) {
  for (const auto& L : maps)
    if (std::find(maps.begin(), maps.end(), negated(L)) == maps.end()) return false;
  return true;
}

Int mod2(Int x) { return ((x % 2) + 2) % 2; }

}  // namespace

// ---------------------------------------------------------------------------
// classification

Json ClassificationReport::to_json() const {
  Json out;
  out["bound"] = bound;
  out["enumerated"] = enumerated;
  out["class_count"] = classes.size();
  out["family_counts"] = family_counts;
  Json cls = Json::array();
  for (const auto& c : classes) {
    Json e;
    e["canonical"] = jsonio::to_json(c.canonical);
    e["family"] = c.family.tag.name();
    e["witness"] = jsonio::to_json(c.family.witness);
    e["members"] = c.members;
    if (c.family.ambiguous) e["tags_seen"] = c.family.found;
    cls.push_back(std::move(e));
  }
  out["classes"] = cls;
  Json vs = Json::array();
  for (const auto& v : verdicts) vs.push_back(verify::to_json(v));
  out["verdicts"] = vs;
  return out;
}

ClassificationReport classify_cube(int bound) {
  const int cap = resource_cap(kClassifyCap);
  if (bound < 0) fail(ErrorCode::InvalidArgument, "bound must be non-negative");
  if (bound > cap) fail(ErrorCode::Capability, "classification bound is capped at " + std::to_string(cap));
  ClassificationReport report;
  report.bound = bound;
  const auto forms = charmat::enumerate_star(bound);
  report.enumerated = forms.size();
  std::map<StarForm, std::size_t> members;
  for (const auto& sf : forms) ++members[charmat::canonicalize(sf).form];
  Json exceptions = Json::array();
  for (const auto& [canonical, count] : members) {
    ClassEntry e{canonical, charmat::class_family(canonical), count};
    ++report.family_counts[e.family.tag.name()];
    if (!charmat::is_final_family(e.family.tag) || e.family.ambiguous) {
      Json x;
      x["canonical"] = jsonio::to_json(canonical);
      x["tags_seen"] = e.family.found;
      exceptions.push_back(std::move(x));
    }
    report.classes.push_back(std::move(e));
  }
  Json w;
  w["bound"] = bound;
  w["enumerated"] = report.enumerated;
  w["classes"] = report.classes.size();
  w["family_counts"] = report.family_counts;
  w["exceptions"] = exceptions;
  report.verdicts.push_back(make("classification-families", exceptions.empty(), std::move(w)));

  // The four final representatives are distinct classes carrying their own tag.
  Json reps = Json::array();
  bool ok = true;
  std::set<StarForm> seen;
  for (int k : {1, 5, 6, 10}) {
    const auto canon = charmat::canonicalize(charmat::chi(k)).form;
    const auto fam = charmat::class_family(charmat::chi(k));
    const bool own = fam.tag.family == charmat::Family::Chi && fam.tag.index == k && !fam.ambiguous;
    ok = ok && own && seen.insert(canon).second;
    Json r;
    r["chi"] = k;
    r["canonical"] = jsonio::to_json(canon);
    r["family"] = fam.tag.name();
    reps.push_back(std::move(r));
  }
  report.verdicts.push_back(make("classification-final-representatives", ok, Json{{"representatives", reps}}));
  return report;
}

// ---------------------------------------------------------------------------
// case analyses

namespace {

StarForm node_form(const std::string& name) { return *charmat::builtin(name); }

/// Moves are products of sigma_1..3 (1..3) and tau_1..3 (4..6), written
/// left to right as in the label and applied right to left.
polytope::FacetPermutation move_of(const std::vector<int>& factors) {
  polytope::FacetPermutation g = polytope::make_permutation(6, {});
  for (int f : factors) {
    const auto h = f <= 3 ? charmat::sigma(f) : charmat::tau(f - 3);
    g = g.compose(h);
  }
  return g;
}

std::string move_label(const std::vector<int>& factors) {
  std::string out;
  for (int f : factors) {
    if (!out.empty()) out += " o ";
    out += (f <= 3 ? "sigma" : "tau") + std::to_string(f <= 3 ? f : f - 3);
  }
  return out;
}

struct Edge {
  const char* from;
  const char* to;
  std::vector<int> factors;
};

const std::vector<Edge>& diagram_edges() {
  static const std::vector<Edge> edges{
      {"chi1", "gamma1", {4}},    {"chi1", "gamma4", {5}},    {"chi1", "gamma3", {6}},
      {"gamma1", "gamma2", {5}},  {"gamma1", "gamma5", {6}},  {"gamma2", "chi3", {1}},
      {"chi4", "gamma6", {4}},    {"chi6", "gamma7", {6}},    {"gamma3", "chi7", {3}},
      {"gamma4", "chi11", {6}},   {"gamma4", "chi9", {1}},    {"gamma5", "chi2", {3, 2}},
      {"gamma6", "chi3", {3, 1}}, {"gamma7", "chi8", {1}},
  };
  return edges;
}

Verdict diagram_edges_verdict() {
  Json items = Json::array();
  bool all = true;
  for (const auto& e : diagram_edges()) {
    const StarForm from = node_form(e.from), to = node_form(e.to);
    const bool holds = charmat::same_sign_class(charmat::act(move_of(e.factors), from), to);
    Json item;
    item["from"] = e.from;
    item["to"] = e.to;
    item["move"] = move_label(e.factors);
    item["holds"] = holds;
    if (e.factors.size() > 1) {
      std::vector<int> reversed(e.factors.rbegin(), e.factors.rend());
      item["reversed_order_holds"] = charmat::same_sign_class(charmat::act(move_of(reversed), from), to);
    }
    if (!holds) {
      // Flag, rather than fail, when another automorphism realizes the edge.
      std::string other;
      for (const auto& g : charmat::cube_automorphisms())
        if (charmat::same_sign_class(charmat::act(g, from), to)) {
          other = g.cycles();
          break;
        }
      item["flag"] = other.empty() ? "no automorphism realizes this edge" : "realized by " + other;
      all = all && !other.empty();
    }
    items.push_back(std::move(item));
  }
  return make("diagram-edges", all, Json{{"edges", items}});
}

Verdict diagram_components_verdict() {
  std::vector<std::string> names;
  for (int k = 1; k <= 11; ++k) names.push_back("chi" + std::to_string(k));
  for (int k = 1; k <= 7; ++k) names.push_back("gamma" + std::to_string(k));
  std::vector<std::size_t> parent(names.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto index = [&](const std::string& n) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
  };
  for (const auto& e : diagram_edges()) parent[find(index(e.from))] = find(index(e.to));

  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < names.size(); ++i) groups[find(i)].push_back(names[i]);
  std::set<std::set<std::string>> found;
  for (const auto& [root, members] : groups) found.insert({members.begin(), members.end()});
  const std::set<std::set<std::string>> expected{
      {"chi1", "chi2", "chi3", "chi4", "chi7", "chi9", "chi11", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5",
       "gamma6"},
      {"chi6", "chi8", "gamma7"},
      {"chi5"},
      {"chi10"},
  };

  // Canonical forms: constant on components, distinct across them.
  bool canon_ok = true;
  std::set<StarForm> reps;
  Json comps = Json::array();
  for (const auto& group : found) {
    const StarForm c = charmat::canonicalize(node_form(*group.begin())).form;
    for (const auto& n : group) canon_ok = canon_ok && charmat::canonicalize(node_form(n)).form == c;
    canon_ok = canon_ok && reps.insert(c).second;
    Json g;
    g["members"] = std::vector<std::string>(group.begin(), group.end());
    g["canonical"] = jsonio::to_json(c);
    comps.push_back(std::move(g));
  }
  Json w;
  w["components"] = comps;
  w["matches_expected"] = found == expected;
  w["canonical_forms_consistent"] = canon_ok;
  return make("diagram-components", found == expected && canon_ok, std::move(w));
}

// Rows of the four C_{0,2,2} templates with the free entry x = x1.
StarForm c022_template(int which, Int x) {
  switch (which) {
    case 1: return StarForm{{x, 0, 1, 2, 1, 2}};
    case 2: return StarForm{{x, 0, 1, 2, 2, 1}};
    case 3: return StarForm{{x, 0, 2, 1, 1, 2}};
    default: return StarForm{{x, 0, 2, 1, 2, 1}};
  }
}

Verdict c022_cases_verdict() {
  constexpr Int kScan = 8;
  const std::vector<std::vector<Int>> expected_x{{1, 2}, {1}, {2, 4}, {1, 2}};
  const std::vector<std::vector<int>> expected_chi{{4, 5}, {6}, {7, 8}, {9, 10}};
  bool ok = true;
  Json cases = Json::array();
  for (int t = 1; t <= 4; ++t) {
    std::vector<Int> xs;
    for (Int x = -kScan; x <= kScan; ++x)
      if (charmat::is_characteristic(c022_template(t, x))) xs.push_back(x);
    bool match = xs == expected_x[t - 1];
    if (match)
      for (std::size_t i = 0; i < xs.size(); ++i)
        match = match && c022_template(t, xs[i]) == charmat::chi(expected_chi[t - 1][i]);
    ok = ok && match;
    Json c;
    c["template"] = t;
    c["x"] = xs;
    c["chi"] = expected_chi[t - 1];
    c["match"] = match;
    cases.push_back(std::move(c));
  }
  return make("c022-cases", ok, Json{{"scan", kScan}, {"cases", cases}});
}

Verdict label_orbits_verdict(const std::string& id, const std::vector<StarForm>& forms, std::array<int, 3> label,
                             const std::vector<int>& targets) {
  std::map<StarForm, int> target_of;
  for (int k : targets) target_of.emplace(charmat::canonicalize(charmat::chi(k)).form, k);
  std::map<int, std::size_t> hits;
  Json misses = Json::array();
  std::size_t members = 0;
  for (const auto& sf : forms) {
    if (charmat::class_label(sf) != label) continue;
    ++members;
    auto it = target_of.find(charmat::canonicalize(sf).form);
    if (it == target_of.end())
      misses.push_back(jsonio::to_json(sf));
    else
      ++hits[it->second];
  }
  Json per = Json::object();
  for (int k : targets) per["chi" + std::to_string(k)] = hits[k];
  Json w;
  w["members"] = members;
  w["per_target"] = per;
  w["misses"] = misses;
  return make(id, misses.empty() && members > 0, std::move(w));
}

Verdict c002_cases_verdict(const std::vector<StarForm>& forms) {
  std::map<StarForm, int> target_of;
  for (int k : {1, 2, 3}) target_of.emplace(charmat::canonicalize(charmat::chi(k)).form, k);
  std::size_t members = 0, a2 = 0, a3 = 0;
  std::map<int, std::size_t> hits;
  Json misses = Json::array();
  for (const auto& sf : forms) {
    if (charmat::class_label(sf) != std::array<int, 3>{0, 0, 2} || sf.x(3) != 2 || sf.y(3) != 1) continue;
    ++members;
    if (charmat::in_a2(sf)) {
      ++a2;
      continue;
    }
    if (charmat::in_a3(sf)) {
      ++a3;
      continue;
    }
    auto it = target_of.find(charmat::canonicalize(sf).form);
    if (it == target_of.end())
      misses.push_back(jsonio::to_json(sf));
    else
      ++hits[it->second];
  }
  Json w;
  w["members"] = members;
  w["in_A2"] = a2;
  w["in_A3"] = a3;
  w["chi1"] = hits[1];
  w["chi2"] = hits[2];
  w["chi3"] = hits[3];
  w["misses"] = misses;
  return make("c002-cases", misses.empty() && members > 0, std::move(w));
}

const std::array<StarForm, 3> kBars{{
    {{2, 1, 2, 1, 2, 1}},
    {{2, 1, 2, 1, 1, 2}},
    {{2, 1, 1, 2, 1, 2}},
}};

Verdict c222_normalized_verdict(const std::vector<StarForm>& forms) {
  std::vector<StarForm> found;
  for (const auto& sf : forms)
    if (charmat::class_label(sf) == std::array<int, 3>{2, 2, 2} && sf.x(1) == 2 && sf.y(1) == 1 && sf.x(2) > 0 &&
        sf.y(2) > 0)
      found.push_back(sf);
  std::sort(found.begin(), found.end());
  std::vector<StarForm> expected(kBars.begin(), kBars.end());
  std::sort(expected.begin(), expected.end());

  // Over all admissible normalized entries: non-singular iff 2 y2 x3 + x2 y3 is 4 or 6.
  Json instances = Json::array();
  bool constraint_ok = true;
  const std::vector<std::pair<Int, Int>> positive{{1, 2}, {2, 1}};
  const std::vector<std::pair<Int, Int>> any{{1, 2}, {2, 1}, {-1, -2}, {-2, -1}};
  for (auto [x2, y2] : positive)
    for (auto [x3, y3] : any) {
      const StarForm sf{{2, 1, x2, y2, x3, y3}};
      const Int value = 2 * y2 * x3 + x2 * y3;
      const bool nonsingular = charmat::is_characteristic(sf);
      constraint_ok = constraint_ok && nonsingular == (value == 4 || value == 6);
      if (nonsingular) instances.push_back(Json{{"form", jsonio::to_json(sf)}, {"2y2x3+x2y3", value}});
    }

  bool one_class = true;
  const StarForm target = charmat::canonicalize(charmat::chi(11)).form;
  for (const auto& sf : kBars) one_class = one_class && charmat::canonicalize(sf).form == target;

  Json listed = Json::array();
  for (const auto& sf : found) listed.push_back(jsonio::to_json(sf));
  Json w;
  w["normalized_members"] = listed;
  w["matches_listed_three"] = found == expected;
  w["constraint_instances"] = instances;
  w["constraint_equivalent_to_nonsingular"] = constraint_ok;
  w["single_class_chi11"] = one_class;
  return make("c222-normalized", found == expected && constraint_ok && one_class, std::move(w));
}

// The printed composite is checked with both targets and both orders of
// application; the diagram convention applies the right factor first.
Verdict c222_moves_verdict() {
  const StarForm& l1 = kBars[0];
  const bool s3 = charmat::same_sign_class(charmat::act(charmat::sigma(3), l1), kBars[1]);
  Json readings = Json::array();
  bool any = false;
  for (const auto& [order, factors] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"sigma1 first", {2, 1}}, {"sigma2 first", {1, 2}}}) {
    const StarForm image = charmat::act(move_of(factors), l1);
    for (int target : {2, 3}) {
      const bool holds = charmat::same_sign_class(image, kBars[static_cast<std::size_t>(target - 1)]);
      any = any || holds;
      readings.push_back(Json{{"order", order}, {"target", "bar" + std::to_string(target)}, {"image", jsonio::to_json(image)},
                              {"holds", holds}});
    }
  }
  Json w;
  w["sigma3(bar1)=bar2"] = s3;
  w["composite_readings"] = readings;
  return make("c222-moves", s3 && any, std::move(w));
}

}  // namespace

std::vector<Verdict> verify_section3(int bound) {
  if (bound < 2) fail(ErrorCode::InvalidArgument, "case analyses need bound >= 2");
  const int cap = resource_cap(kClassifyCap);
  if (bound > cap) fail(ErrorCode::Capability, "classification bound is capped at " + std::to_string(cap));
  const auto forms = charmat::enumerate_star(bound);
  std::vector<Verdict> out;
  out.push_back(diagram_edges_verdict());
  out.push_back(diagram_components_verdict());
  out.push_back(c002_cases_verdict(forms));
  out.push_back(c022_cases_verdict());
  out.push_back(label_orbits_verdict("c022-orbits", forms, {0, 2, 2}, {4, 5, 6, 7, 8, 9, 10}));
  out.push_back(c222_normalized_verdict(forms));
  out.push_back(label_orbits_verdict("c222-orbits", forms, {2, 2, 2}, {11}));
  out.push_back(c222_moves_verdict());
  return out;
}

// ---------------------------------------------------------------------------
// families

namespace {

constexpr int kThetaBound = 8;
constexpr int kChi1Bound = 6;
constexpr Int kGridRange = 2;
constexpr int kGridBound = 2;

Verdict theta_verdict() {
  const auto sols = isokit::theta_solutions(kThetaBound);
  bool ok = sols.size() == 8;
  Json list = Json::array();
  for (const auto& s : sols) {
    ok = ok && s.index != 0;
    list.push_back(Json{{"matrix", jsonio::to_json(s.matrix)}, {"theta", s.index}, {"sign", s.sign}});
  }
  // Entry bound 1 keeps exactly +-theta_1 and +-theta_3.
  const auto small = isokit::theta_solutions(1);
  bool small_ok = small.size() == 4;
  for (const auto& s : small) small_ok = small_ok && (s.index == 1 || s.index == 3);
  Json w;
  w["bound"] = kThetaBound;
  w["solutions"] = list;
  w["bound1_count"] = small.size();
  return make("theta-solutions", ok && small_ok, std::move(w));
}

Verdict theta_ratio_verdict() {
  bool ok = true;
  Json list = Json::array();
  for (const auto& s : isokit::theta_solutions(kThetaBound)) {
    Json e{{"matrix", jsonio::to_json(s.matrix)}};
    if (s.k12) {
      e["k12"] = *s.k12;
      ok = ok && (*s.k12 == 1 || *s.k12 == -1);
    }
    if (s.k13) {
      e["k13"] = *s.k13;
      ok = ok && (*s.k13 == 1 || *s.k13 == -1);
    }
    list.push_back(std::move(e));
  }
  return make("theta-ratios", ok, Json{{"solutions", list}});
}

Verdict aut_chi1_verdict(unsigned jobs) {
  const auto ring = ringkit::realize(ringkit::small_presentation(charmat::chi(1)), 6);
  const auto maps = isokit::automorphisms(ring, kChi1Bound, jobs);
  const IntMatrix id = IntMatrix::identity(3);
  const bool ok = maps == std::vector<IntMatrix>{negated(id), id};
  bool mod2_identity = true;
  Json list = Json::array();
  for (const auto& L : maps) {
    list.push_back(jsonio::to_json(L));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) mod2_identity = mod2_identity && mod2(L(i, j) - id(i, j)) == 0;
  }
  Json w;
  w["bound"] = kChi1Bound;
  w["automorphisms"] = list;
  w["identity_mod_2"] = mod2_identity;
  return make("aut-chi1", ok && mod2_identity, std::move(w));
}

std::pair<Int, Int> nonzero_pair(Sampler& rng) {
  for (;;) {
    const Int s = rng.uniform(kSampleLo, kSampleHi), t = rng.uniform(kSampleLo, kSampleHi);
    if (s != 0 || t != 0) return {s, t};
  }
}

Verdict lambda_automorphisms_verdict(int samples, std::uint64_t seed, RingCache& cache) {
  Sampler rng(seed, 1);
  Json failures = Json::array();
  Json sampled = Json::array();
  for (int n = 0; n < samples; ++n) {
    const auto [s, t] = nonzero_pair(rng);
    sampled.push_back(pair_json(s, t));
    const auto& ring = cache.get(charmat::lambda_st(s, t)).integral;
    const auto maps = isokit::lambda_st_automorphisms(s, t);
    const std::set<std::vector<std::vector<Int>>> distinct = [&] {
      std::set<std::vector<std::vector<Int>>> d;
      for (const auto& L : maps) d.insert(L.to_rows());
      return d;
    }();
    if (distinct.size() != 6) failures.push_back(Json{{"st", pair_json(s, t)}, {"reason", "maps not distinct"}});
    for (const auto& L : maps) {
      std::string why;
      if (!isokit::is_isomorphism(L, ring, ring, &why))
        failures.push_back(Json{{"st", pair_json(s, t)}, {"map", jsonio::to_json(L)}, {"reason", why}});
    }
  }
  Json w;
  w["samples"] = sampled;
  w["failures"] = failures;
  return make("lambda-automorphisms", failures.empty(), std::move(w));
}

enum class FamilyKind { Lambda, CoLambda };

StarForm family_member(FamilyKind kind, Int s, Int t) {
  return kind == FamilyKind::Lambda ? charmat::lambda_st(s, t) : charmat::colambda_st(s, t);
}

/// Structural constraints every isomorphism inside a family obeys.
std::string structure_violation(FamilyKind kind, const IntMatrix& L) {
  if (kind == FamilyKind::Lambda) {
    if (L(1, 0) != 0 || L(2, 0) != 0 || (L(0, 0) != 1 && L(0, 0) != -1)) return "first column is not (+-1,0,0)";
    if (mod2(L(1, 1)) != 1 || mod2(L(1, 2)) != 0) return "(b2,c2) is not (1,0) mod 2";
  } else {
    if (L(0, 1) != 0 || L(0, 2) != 0 || (L(0, 0) != 1 && L(0, 0) != -1)) return "first row is not (+-1,0,0)";
  }
  if (theta_index(L) == 0) return "lower right block is not +-theta_i";
  return {};
}

struct FamilyTally {
  std::size_t pairs = 0, isomorphic_pairs = 0, maps = 0;
  Json violations = Json::array();
};

void check_pair(FamilyKind kind, std::pair<Int, Int> src, std::pair<Int, Int> dst, int bound, unsigned jobs,
                RingCache& cache, bool structure, FamilyTally& tally) {
  const auto& a = cache.get(family_member(kind, src.first, src.second));
  const auto& b = cache.get(family_member(kind, dst.first, dst.second));
  const auto maps = isokit::find_isomorphisms(a.integral, b.integral, bound, jobs);
  ++tally.pairs;
  if (!maps.empty()) ++tally.isomorphic_pairs;
  if (!negation_closed(maps))
    tally.violations.push_back(Json{{"src", pair_json(src.first, src.second)},
                                    {"dst", pair_json(dst.first, dst.second)},
                                    {"reason", "not closed under negation"}});
  for (const auto& L : maps) {
    ++tally.maps;
    std::string reason = structure ? structure_violation(kind, L) : std::string{};
    if (reason.empty() && !isokit::jupp_check(L, a, b)) reason = "w2 or p1 not preserved";
    if (!reason.empty())
      tally.violations.push_back(Json{{"src", pair_json(src.first, src.second)},
                                      {"dst", pair_json(dst.first, dst.second)},
                                      {"map", jsonio::to_json(L)},
                                      {"reason", reason}});
  }
}

Json tally_json(const FamilyTally& t, int bound) {
  Json w;
  w["bound"] = bound;
  w["pairs_searched"] = t.pairs;
  w["isomorphic_pairs"] = t.isomorphic_pairs;
  w["maps_checked"] = t.maps;
  w["violations"] = t.violations;
  return w;
}

// Every target of the sampling box for each sampled source.
Verdict family_structure_verdict(FamilyKind kind, int bound, int samples, std::uint64_t seed, unsigned jobs,
                                 RingCache& cache) {
  Sampler rng(seed, kind == FamilyKind::Lambda ? 2 : 3);
  FamilyTally tally;
  Json sources = Json::array();
  for (int n = 0; n < samples; ++n) {
    const Int s = rng.uniform(kSampleLo, kSampleHi), t = rng.uniform(kSampleLo, kSampleHi);
    sources.push_back(pair_json(s, t));
    for (Int x = kSampleLo; x <= kSampleHi; ++x)
      for (Int y = kSampleLo; y <= kSampleHi; ++y) check_pair(kind, {s, t}, {x, y}, bound, jobs, cache, true, tally);
  }
  Json w = tally_json(tally, bound);
  w["sources"] = sources;
  w["targets"] = Json::array({kSampleLo, kSampleHi});
  w["status"] = "hypotheses verified at scale B=" + std::to_string(bound) + ", N=" + std::to_string(samples);
  return make(kind == FamilyKind::Lambda ? "lambda-family-structure" : "colambda-family-structure",
              tally.violations.empty() && tally.isomorphic_pairs > 0, std::move(w));
}

Verdict jupp_grid_verdict(FamilyKind kind, unsigned jobs, RingCache& cache) {
  FamilyTally tally;
  for (Int s = -kGridRange; s <= kGridRange; ++s)
    for (Int t = -kGridRange; t <= kGridRange; ++t)
      for (Int x = -kGridRange; x <= kGridRange; ++x)
        for (Int y = -kGridRange; y <= kGridRange; ++y)
          check_pair(kind, {s, t}, {x, y}, kGridBound, jobs, cache, false, tally);
  Json w = tally_json(tally, kGridBound);
  w["range"] = Json::array({-kGridRange, kGridRange});
  return make(kind == FamilyKind::Lambda ? "jupp-lambda-grid" : "jupp-colambda-grid",
              tally.violations.empty() && tally.maps > 0, std::move(w));
}

}  // namespace

std::vector<Verdict> verify_families(int bound, int samples, std::uint64_t seed, unsigned jobs) {
  if (samples < 0) fail(ErrorCode::InvalidArgument, "samples must be non-negative");
  RingCache cache;
  std::vector<Verdict> out;
  out.push_back(theta_verdict());
  out.push_back(theta_ratio_verdict());
  out.push_back(aut_chi1_verdict(jobs));
  out.push_back(lambda_automorphisms_verdict(samples, seed, cache));
  out.push_back(family_structure_verdict(FamilyKind::Lambda, bound, samples, seed, jobs, cache));
  out.push_back(family_structure_verdict(FamilyKind::CoLambda, bound, samples, seed, jobs, cache));
  out.push_back(jupp_grid_verdict(FamilyKind::Lambda, jobs, cache));
  out.push_back(jupp_grid_verdict(FamilyKind::CoLambda, jobs, cache));
  return out;
}

// ---------------------------------------------------------------------------
// partition

namespace {

StarForm sample_a1(Sampler& rng) {
  return StarForm{{rng.uniform(kSampleLo, kSampleHi), 0, rng.uniform(kSampleLo, kSampleHi), 0,
                   rng.uniform(kSampleLo, kSampleHi), 0}};
}

Verdict nilsquare_verdict(int samples, std::uint64_t seed, RingCache& cache) {
  Sampler rng(seed, 4);
  struct Item {
    std::string family;
    StarForm form;
    bool expect_nonzero;
  };
  std::vector<Item> items;
  for (int n = 0; n < samples; ++n) items.push_back({"A1", sample_a1(rng), true});
  for (int n = 0; n < samples; ++n) {
    const auto [s, t] = nonzero_pair(rng);
    items.push_back({"A2", charmat::lambda_st(s, t), false});
  }
  for (int n = 0; n < samples; ++n) {
    const Int s = rng.uniform(kSampleLo, kSampleHi), t = rng.uniform(kSampleLo, kSampleHi);
    items.push_back({"A3", charmat::colambda_st(s, t), true});
  }
  for (int k : {1, 5, 6, 10}) items.push_back({"Chi(" + std::to_string(k) + ")", charmat::chi(k), false});

  std::map<std::string, std::map<std::string, std::size_t>> kinds;
  Json failures = Json::array();
  for (const auto& it : items) {
    const auto ns = ringkit::nilsquare2(cache.get(it.form).integral);
    const bool nonzero = ns.kind != ringkit::NilSquare::Kind::Zero;
    ++kinds[it.family][jsonio::nilsquare_to_json(ns)["kind"].get<std::string>()];
    if (nonzero != it.expect_nonzero || !ns.crosscheck_misses.empty())
      failures.push_back(Json{{"family", it.family}, {"form", jsonio::to_json(it.form)}, {"nilsquare2", ns.describe()}});
  }
  Json w;
  w["samples_per_family"] = samples;
  w["kinds"] = kinds;
  w["failures"] = failures;
  return make("nilsquare-partition", failures.empty(), std::move(w));
}

Verdict alpha_verdict(RingCache& cache) {
  struct Case {
    const char* name;
    IntMatrix map;
    StarForm src;
    int chi;
  };
  const std::vector<Case> cases{{"alpha5", isokit::alpha5(), charmat::lambda_st(-1, -2), 5},
                                {"alpha6", isokit::alpha6(), charmat::lambda_st(1, 1), 6},
                                {"alpha10", isokit::alpha10(), charmat::lambda_st(-2, -2), 10}};
  bool ok = true;
  Json list = Json::array();
  for (const auto& c : cases) {
    const auto& src = cache.get(c.src);
    const auto& dst = cache.get(charmat::chi(c.chi));
    std::string why;
    const bool iso = isokit::is_isomorphism(c.map, src.integral, dst.integral, &why);
    const bool jupp = iso && isokit::jupp_check(c.map, src, dst);
    ok = ok && iso && jupp;
    Json e{{"map", c.name}, {"matrix", jsonio::to_json(c.map)}, {"source", jsonio::to_json(c.src)},
           {"target", "chi" + std::to_string(c.chi)}, {"is_iso", iso}, {"jupp", jupp}};
    if (!iso) e["reason"] = why;
    list.push_back(std::move(e));
  }
  return make("alpha-maps", ok, Json{{"criterion", "Jupp's theorem"}, {"maps", list}});
}

Verdict a1_a3_verdict(int samples, int bound, std::uint64_t seed, unsigned jobs, RingCache& cache) {
  Sampler rng(seed, 5);
  Json pairs = Json::array();
  Json found = Json::array();
  for (int n = 0; n < samples; ++n) {
    const StarForm a = sample_a1(rng);
    const Int s = rng.uniform(kSampleLo, kSampleHi), t = rng.uniform(kSampleLo, kSampleHi);
    const StarForm b = charmat::colambda_st(s, t);
    pairs.push_back(Json{{"A1", jsonio::to_json(a)}, {"A3", pair_json(s, t)}});
    const auto maps = isokit::find_isomorphisms(cache.get(a).integral, cache.get(b).integral, bound, jobs);
    for (const auto& L : maps)
      found.push_back(Json{{"A1", jsonio::to_json(a)}, {"A3", pair_json(s, t)}, {"map", jsonio::to_json(L)}});
  }
  // The example pair: a Bott ring against lambda^{1,2}.
  {
    const StarForm a{{1, 0, 1, 0, 1, 0}};
    const auto maps =
        isokit::find_isomorphisms(cache.get(a).integral, cache.get(charmat::colambda_st(1, 2)).integral, bound, jobs);
    pairs.push_back(Json{{"A1", jsonio::to_json(a)}, {"A3", pair_json(1, 2)}});
    for (const auto& L : maps)
      found.push_back(Json{{"A1", jsonio::to_json(a)}, {"A3", pair_json(1, 2)}, {"map", jsonio::to_json(L)}});
  }
  Json w;
  w["bound"] = bound;
  w["pairs"] = pairs;
  w["isomorphisms"] = found;
  return make("a1-a3-nonisomorphic", found.empty(), std::move(w));
}

// Random source/target pairs plus every source against itself.
Verdict within_family_verdict(int samples, int bound, std::uint64_t seed, unsigned jobs, RingCache& cache) {
  Sampler rng(seed, 6);
  FamilyTally tally;
  for (FamilyKind kind : {FamilyKind::Lambda, FamilyKind::CoLambda})
    for (int n = 0; n < samples; ++n) {
      const Int s = rng.uniform(kSampleLo, kSampleHi), t = rng.uniform(kSampleLo, kSampleHi);
      const Int x = rng.uniform(kSampleLo, kSampleHi), y = rng.uniform(kSampleLo, kSampleHi);
      check_pair(kind, {s, t}, {x, y}, bound, jobs, cache, false, tally);
      check_pair(kind, {s, t}, {s, t}, bound, jobs, cache, false, tally);
    }
  Json w = tally_json(tally, bound);
  w["criterion"] = "Jupp's theorem";
  w["status"] = "hypotheses verified at scale B=" + std::to_string(bound) + ", N=" + std::to_string(samples);
  return make("jupp-within-families", tally.violations.empty(), std::move(w));
}

}  // namespace

std::vector<Verdict> verify_rigidity_partition(int samples, int bound, std::uint64_t seed, unsigned jobs) {
  if (samples < 0) fail(ErrorCode::InvalidArgument, "samples must be non-negative");
  RingCache cache;
  std::vector<Verdict> out;
  out.push_back(nilsquare_verdict(samples, seed, cache));
  out.push_back(alpha_verdict(cache));
  out.push_back(a1_a3_verdict(samples, bound, seed, jobs, cache));
  out.push_back(within_family_verdict(samples, bound, seed, jobs, cache));
  return out;
}

// ---------------------------------------------------------------------------
// reports

bool Report::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

Json Report::to_json() const {
  Json out;
  out["suite"] = suite;
  out["bound"] = options.iso_bound;
  out["class_bound"] = options.class_bound;
  out["samples"] = options.samples;
  out["seed"] = options.seed;
  out["pass"] = all_pass();
  Json vs = Json::array();
  for (const auto& v : verdicts) vs.push_back(verify::to_json(v));
  out["verdicts"] = vs;
  return out;
}

const std::vector<std::string>& suites() {
  static const std::vector<std::string> names{"classification", "cases", "families", "partition", "all"};
  return names;
}

Report run(const std::string& suite, const Options& options) {
  if (std::find(suites().begin(), suites().end(), suite) == suites().end())
    fail(ErrorCode::InvalidArgument, "unknown suite " + suite);
  Report report{suite, options, {}};
  auto append = [&](std::vector<Verdict> vs) {
    for (auto& v : vs) report.verdicts.push_back(std::move(v));
  };
  const bool all = suite == "all";
  if (all || suite == "classification") append(classify_cube(options.class_bound).verdicts);
  if (all || suite == "cases") append(verify_section3(std::max(2, options.class_bound)));
  if (all || suite == "families")
    append(verify_families(options.iso_bound, options.samples, options.seed, options.jobs));
  if (all || suite == "partition")
    append(verify_rigidity_partition(options.samples, options.iso_bound, options.seed, options.jobs));
  return report;
}

}  // namespace qtoric::verify
