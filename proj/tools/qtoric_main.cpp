// qtoric: command-line front end over the C interface.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtoric/qtoric.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CallError {
  qt_status status;
  std::string message;
};

void check(qt_status s) {
  if (s != QT_OK) throw CallError{s, qt_last_error()};
}

using RingPtr = std::unique_ptr<qt_ring, decltype(&qt_ring_free)>;

std::string take(char* s) {
  std::string out(s);
  qt_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CallError{QT_ERR_INVALID_ARGUMENT, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_numeric(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789+- \t") == std::string::npos;
}

// name | @file | "x1 y1 x2 y2 x3 y3"
RingPtr load_ring(const std::string& spec) {
  qt_ring* r = nullptr;
  if (!spec.empty() && spec[0] == '@')
    check(qt_ring_from_matrix_json(read_file(spec.substr(1)).c_str(), &r));
  else if (looks_numeric(spec))
    check(qt_ring_from_star_text(spec.c_str(), &r));
  else
    check(qt_ring_from_name(spec.c_str(), &r));
  return RingPtr(r, &qt_ring_free);
}

RingPtr source_ring(const std::string& matrix, const std::string& star) {
  if (!matrix.empty() && !star.empty()) throw CLI::ValidationError("give either --matrix or --star, not both");
  if (matrix.empty() && star.empty()) throw CLI::RequiredError("--matrix or --star");
  if (!star.empty()) {
    qt_ring* r = nullptr;
    check(qt_ring_from_star_text(star.c_str(), &r));
    return RingPtr(r, &qt_ring_free);
  }
  return load_ring(matrix);
}

std::string render_table(const std::string& json_text) {
  const auto j = nlohmann::ordered_json::parse(json_text);
  std::ostringstream out;
  if (j.contains("verdicts")) {
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "verdicts") out << it.key() << ": " << it.value().dump() << "\n";
    for (const auto& v : j["verdicts"])
      out << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["id"].get<std::string>() << "\n";
    return out.str();
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_array() && !it.value().empty() && it.value().front().is_structured()) {
      out << it.key() << ":\n";
      for (const auto& e : it.value()) out << "  " << e.dump() << "\n";
    } else {
      out << it.key() << ": " << it.value().dump() << "\n";
    }
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasitoric manifolds over the cube: classification, cohomology rings, isomorphisms"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out_path, "Write output to FILE instead of standard output");

  unsigned default_jobs = std::max(1u, std::thread::hardware_concurrency());

  int classify_bound = 2;
  auto* classify = app.add_subcommand("classify", "Orbit classes of star forms with entries in [-B, B]");
  classify->add_option("--bound", classify_bound, "Entry bound B")->check(CLI::NonNegativeNumber);

  std::string matrix, star, target;
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--matrix", matrix, "chiK, gammaK, lambda:s,t, colambda:s,t or @file.json");
    sub->add_option("--star", star, "Star form \"x1 y1 x2 y2 x3 y3\"");
  };

  auto* ring = app.add_subcommand("ring", "Cohomology ring dump");
  add_source(ring);
  auto* classes = app.add_subcommand("classes", "Stiefel-Whitney and Pontryagin classes");
  add_source(classes);

  int iso_bound = 3;
  unsigned jobs = default_jobs;
  auto* iso = app.add_subcommand("iso", "Isomorphisms between two cohomology rings");
  add_source(iso);
  iso->add_option("--to", target, "Target: name, @file or \"x1 y1 x2 y2 x3 y3\"")->required();
  iso->add_option("--bound", iso_bound, "Entry bound of the search")->check(CLI::NonNegativeNumber);
  iso->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* aut = app.add_subcommand("aut", "Automorphisms of a cohomology ring");
  add_source(aut);
  aut->add_option("--bound", iso_bound, "Entry bound of the search")->check(CLI::NonNegativeNumber);
  aut->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string suite = "all";
  int class_bound = 2;
  int samples = 20;
  std::uint64_t seed = QT_DEFAULT_SEED;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 if any verdict fails");
  verify->add_option("--suite", suite, "Suite")->check(
      CLI::IsMember({"classification", "cases", "families", "partition", "all"}));
  verify->add_option("--bound", iso_bound, "Entry bound of isomorphism searches")->check(CLI::NonNegativeNumber);
  verify->add_option("--class-bound", class_bound, "Entry bound of the classification")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", samples, "Sampled parameters per check")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int exit_code = kExitOk;
  std::string text;
  try {
    if (*classify) {
      char* s = nullptr;
      check(qt_classify_cube(classify_bound, &s));
      text = take(s);
    } else if (*ring || *classes) {
      const auto r = source_ring(matrix, star);
      char* s = nullptr;
      check(*ring ? qt_ring_dump_json(r.get(), &s) : qt_ring_classes_json(r.get(), &s));
      text = take(s);
    } else if (*iso) {
      const auto src = source_ring(matrix, star);
      const auto dst = load_ring(target);
      char* s = nullptr;
      check(qt_find_isomorphisms(src.get(), dst.get(), iso_bound, jobs, &s));
      text = take(s);
    } else if (*aut) {
      const auto r = source_ring(matrix, star);
      char* s = nullptr;
      check(qt_find_isomorphisms(r.get(), r.get(), iso_bound, jobs, &s));
      text = take(s);
    } else if (*verify) {
      char* s = nullptr;
      int pass = 0;
      check(qt_verify(suite.c_str(), class_bound, iso_bound, samples, seed, jobs, &s, &pass));
      text = take(s);
      if (!pass) exit_code = kExitFailed;
    }
  } catch (const CallError& e) {
    std::cerr << "qtoric: " << e.message << "\n";
    const bool input = e.status == QT_ERR_INVALID_ARGUMENT || e.status == QT_ERR_INVALID_MATRIX ||
                       e.status == QT_ERR_INVALID_POLYTOPE || e.status == QT_ERR_PARSE ||
                       e.status == QT_ERR_CAPABILITY;
    return input ? kExitUsage : kExitFailed;
  } catch (const CLI::Error& e) {
    std::cerr << "qtoric: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (format == "table") text = render_table(text);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "qtoric: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return exit_code;
}
