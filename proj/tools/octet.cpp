// octet: run the verification suites or print individual computations as JSON.

#include "octet/etaq.hpp"
#include "octet/f2geom.hpp"
#include "octet/json_io.hpp"
#include "octet/relations.hpp"
#include "octet/report.hpp"
#include "octet/suites.hpp"
#include "octet/tableaux.hpp"
#include "octet/weil.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using octet::report::Json;
namespace fs = std::filesystem;

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

octet::f2::F2Vec parse_vector(const std::string& text) {
  using octet::f2::F2Vec;
  F2Vec v;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term.erase(0, term.find_first_not_of(' '));
    term.erase(term.find_last_not_of(' ') + 1);
    if (term == "0") continue;
    if (term.size() != 2 || (term[0] != 'e' && term[0] != 'f') || term[1] < '1' || term[1] > '3')
      throw UsageError("bad vector term '" + term + "' (use e1..e3, f1..f3 joined by '+')");
    const int plane = term[1] - '0';
    v += term[0] == 'e' ? F2Vec::e(plane) : F2Vec::f(plane);
  }
  return v;
}

/// Writes to the requested file (redirected into OCTET_REPORT_DIR when set)
/// and always to stdout.
void emit(const std::string& text, const std::string& out, const std::string& default_name) {
  std::cout << text;
  std::string path = out;
  if (const char* dir = std::getenv("OCTET_REPORT_DIR"); dir && *dir)
    path = (fs::path(dir) / fs::path(out.empty() ? default_name : out).filename()).string();
  if (path.empty()) return;
  if (const auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

Json read_json_arg(const std::string& arg) {
  try {
    if (fs::exists(arg)) {
      std::ifstream f(arg);
      return Json::parse(f);
    }
    return Json::parse(arg);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("cannot parse configuration: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the F2 quadratic geometry, Weil representation, eta quotients, "
               "lattices and tableaux behind an 8-point ball quotient"};
  app.require_subcommand(1);

  octet::report::RunConfig cfg;
  std::string order_text = "20";
  std::string out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for all randomized checks")->capture_default_str();
    sub->add_option("--order", order_text, "Series order (rational)")->capture_default_str();
    sub->add_option("--samples", cfg.sample_count, "Sampled configurations")->capture_default_str();
    sub->add_option("--bound", cfg.box_bound, "Coefficient bound of the box scan")->capture_default_str();
    sub->add_option("--tolerance", cfg.tolerance, "Tolerance of numeric checks")->capture_default_str();
    sub->add_option("--out", out, "Also write the output to this file");
  };

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print JSON-lines reports");
  std::string selector;
  verify->add_option("selector", selector, "f2, weil, qseries, lattice, tableaux or all")->required();
  add_common(verify);

  auto* compute = app.add_subcommand("compute", "Print one computation as JSON");
  std::string command;
  compute->add_option("command", command, "fv, subspaces, hseries, theta, relations or group")->required();
  add_common(compute);
  std::string subspace_text, config_text, xs_text;
  bool singular = false;
  int isotropic_dim = 0, degree = 2;
  compute->add_option("--subspace", subspace_text, "fv: comma-separated spanning vectors, e.g. e1+f1,e2+f2,e3+f3");
  compute->add_flag("--singular", singular, "subspaces: the maximal totally singular subspaces");
  compute->add_option("--isotropic", isotropic_dim, "subspaces: totally isotropic subspaces of this dimension");
  compute->add_option("--config", config_text, "theta: JSON file or inline JSON list of 8 points [v0, v1]");
  compute->add_option("--x", xs_text, "theta: 8 comma-separated affine coordinates");
  compute->add_option("--degree", degree, "relations: monomial degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    try {
      cfg.series_order = octet::parse_rational(order_text);
    } catch (const std::exception&) {
      throw UsageError("--order must be a rational number, got '" + order_text + "'");
    }
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    if (verify->parsed()) {
      const auto& names = octet::suite_names();
      if (selector != "all" && std::find(names.begin(), names.end(), selector) == names.end())
        throw UsageError("unknown suite '" + selector + "'");
      const auto reports = octet::run_suite(selector, cfg);
      emit(octet::report::to_json_lines(reports), out, "verify-" + selector + ".jsonl");
      const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
      std::cerr << reports.size() << " checks, " << failed << " failed\n";
      return failed ? kFail : kPass;
    }

    Json doc;
    if (command == "fv") {
      if (subspace_text.empty()) throw UsageError("fv needs --subspace");
      std::vector<octet::f2::F2Vec> gens;
      std::stringstream ss(subspace_text);
      std::string item;
      while (std::getline(ss, item, ',')) gens.push_back(parse_vector(item));
      const auto v = octet::f2::F2Subspace::span(gens);
      if (!v.is_totally_singular()) throw UsageError("subspace " + octet::f2::to_string(v) + " is not maximal totally singular");
      doc["subspace"] = octet::io::subspace_json(v);
      doc["f_V"] = octet::io::group_ring_json(octet::weil::f_V(v));
    } else if (command == "subspaces") {
      Json list = Json::array();
      if (singular == (isotropic_dim != 0)) throw UsageError("subspaces needs exactly one of --singular, --isotropic <dim>");
      if (singular) {
        for (const auto& v : octet::f2::enumerate_singular_subspaces()) {
          Json j = octet::io::subspace_json(v.space);
          Json aniso = Json::array();
          for (auto a : v.anisotropic) aniso.push_back(octet::f2::to_string(a));
          j["anisotropic"] = std::move(aniso);
          list.push_back(std::move(j));
        }
        doc["kind"] = "singular";
      } else {
        if (isotropic_dim < 1 || isotropic_dim > 3) throw UsageError("--isotropic takes 1, 2 or 3");
        for (const auto& v : octet::f2::enumerate_isotropic_subspaces(isotropic_dim)) list.push_back(octet::io::subspace_json(v));
        doc["kind"] = "isotropic";
        doc["dim"] = isotropic_dim;
      }
      doc["count"] = list.size();
      doc["subspaces"] = std::move(list);
    } else if (command == "hseries") {
      if (cfg.series_order < 3) throw UsageError("hseries needs --order >= 3");
      const auto h = octet::etaq::h_components(cfg.series_order);
      doc["order"] = octet::to_string(cfg.series_order);
      doc["h00"] = octet::io::series_json(h.h00);
      doc["h0"] = octet::io::series_json(h.h0);
      doc["h1"] = octet::io::series_json(h.h1);
    } else if (command == "theta") {
      std::optional<octet::config::PointConfig> c;
      try {
        if (!config_text.empty()) {
          c = octet::io::config_from_json(read_json_arg(config_text));
        } else if (!xs_text.empty()) {
          std::array<octet::Rational, 8> xs;
          std::stringstream ss(xs_text);
          std::string item;
          std::size_t i = 0;
          while (std::getline(ss, item, ',')) {
            if (i == 8) throw UsageError("--x takes exactly 8 values");
            xs[i++] = octet::parse_rational(item);
          }
          if (i != 8) throw UsageError("--x takes exactly 8 values");
          c = octet::config::PointConfig::affine(xs);
        } else {
          throw UsageError("theta needs --config or --x");
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      doc["config"] = octet::io::config_json(*c);
      const auto th = octet::config::theta_map(*c);
      if (!th) {
        doc["status"] = "unstable";
        doc["theta"] = nullptr;
      } else {
        doc["status"] = "ok";
        Json coords = Json::array();
        for (const auto& v : *th) coords.push_back(octet::io::rational_json(v));
        doc["theta"] = std::move(coords);
      }
      Json labels = Json::array();
      for (const auto& t : octet::config::standard_tableaux()) labels.push_back(octet::config::to_string(t));
      doc["coordinates"] = std::move(labels);
    } else if (command == "relations") {
      if (degree < 1 || degree > 4) throw UsageError("--degree takes 1 to 4");
      const long samples = octet::relation_samples(degree, cfg.sample_count);
      const auto r = octet::config::relation_discovery(degree, samples, cfg.seed);
      if (!r.stable) std::cerr << "warning: rank changed during the second half of the samples\n";
      doc = octet::io::relation_basis_json(r);
    } else if (command == "group") {
      const auto g = octet::f2::generate_orthogonal_group();
      doc["order"] = g.order();
      doc["generators"] = g.generators.size();
      Json orbits = Json::array();
      for (const auto& o : g.nonzero_orbits()) orbits.push_back(o.size());
      doc["orbit_sizes"] = std::move(orbits);
    } else {
      throw UsageError("unknown command '" + command + "'");
    }
    emit(doc.dump(2) + "\n", out, "compute-" + command + ".json");
    return kPass;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
