// Command-line front end: computes root data, cones, Davis balls and the
// embedding for a Coxeter datum document, and runs the invariant suites.

#include "coxdavis/io.hpp"
#include "coxdavis/suite.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace coxdavis;

struct RunConfig {
  std::string command;
  std::string datum_path;
  int depth = 6;
  int radius = 3;
  std::uint64_t seed = 1;
  double tol = 1e-3;
  int samples = 2;
  std::string out;
  std::string format = "json";
  std::string basepoint;
  std::string vt_mode = "linear";
};

constexpr const char* kOutDirEnv = "COXDAVIS_OUT_DIR";

CoxeterDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open datum file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_datum(buf.str());
}

Vector parse_basepoint(const std::string& text, int rank) {
  std::vector<double> values;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "basepoint entries must be numbers");
    }
  }
  if (static_cast<int>(values.size()) != rank)
    throw Error(ErrorCode::DimensionMismatch, "basepoint needs " + std::to_string(rank) + " coordinates");
  return Eigen::Map<Vector>(values.data(), rank);
}

void emit(const RunConfig& cfg, const std::string& payload) {
  std::string path = cfg.out;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir)
      path = (std::filesystem::path(dir) / (cfg.command + "." + cfg.format)).string();
  }
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << payload;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

ConePoint basepoint_for(const CoxeterDatum& d, const RunConfig& cfg) {
  if (cfg.basepoint.empty()) return find_interior_basepoint(d);
  if (!has_interior(d)) throw Error(ErrorCode::NotApplicable, "K has empty interior for this datum");
  return make_basepoint(d, parse_basepoint(cfg.basepoint, d.rank()));
}

int run(const RunConfig& cfg) {
  const CoxeterDatum d = load_datum(cfg.datum_path);
  const bool csv = cfg.format == "csv";

  if (cfg.command == "roots") {
    const auto roots = generate_roots(d, cfg.depth);
    if (csv) throw Error(ErrorCode::Parse, "roots supports json output only");
    emit(cfg, dump(io::roots_json(roots)));
  } else if (cfg.command == "normalized-roots") {
    const auto roots = generate_roots(d, cfg.depth);
    emit(cfg, csv ? io::normalized_roots_csv(d, roots) : dump(io::normalized_roots_json(d, roots)));
  } else if (cfg.command == "limit-roots") {
    const auto est = approximate_limit_roots(d, cfg.depth, cfg.tol);
    emit(cfg, csv ? io::limit_roots_csv(d, est) : dump(io::limit_roots_json(est)));
  } else if (cfg.command == "parabolics") {
    emit(cfg, dump(io::parabolics_json(d)));
  } else if (cfg.command == "cone-samples") {
    emit(cfg, dump(io::cone_samples_json(d, sample_imaginary_cone(d, cfg.radius, cfg.samples, cfg.seed))));
  } else if (cfg.command == "davis") {
    nlohmann::json j = io::davis_json(d, build_davis_ball(d, cfg.radius));
    emit(cfg, dump(j));
  } else if (cfg.command == "embed") {
    const ConePoint v0 = basepoint_for(d, cfg);
    const DavisBall ball = build_davis_ball(d, cfg.radius);
    const VertexMode mode = cfg.vt_mode == "dot" ? VertexMode::Dot : VertexMode::Linear;
    const VertexImageTable table = build_vertex_table(d, ball.chamber.poset, v0, mode);
    const EmbeddingReport report = verify_embedding(d, ball, table);
    nlohmann::json j = io::embedding_json(d, ball, table, report);
    j["vertex_mode_discrepancy"] = vertex_mode_discrepancy(d, ball.chamber.poset, v0);
    emit(cfg, dump(j));
    std::cerr << "embedding over " << report.chambers << " chambers: " << (report.passed() ? "all checks pass" : "FAILED")
              << "\n";
    return report.passed() ? 0 : 1;
  } else if (cfg.command == "check") {
    SuiteOptions opt;
    opt.root_depth = cfg.depth;
    opt.ball_radius = cfg.radius;
    opt.seed = cfg.seed;
    const auto results = run_checks(d, opt);
    bool ok = true;
    std::ostringstream table;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
      ok = ok && r.status != CheckStatus::Fail;
      table << to_string(r.status) << "  " << r.module << ": " << r.invariant;
      if (r.status == CheckStatus::Fail) table << " violated";
      if (r.status != CheckStatus::Skipped) table << "  (max violation " << r.max_violation << ")";
      if (!r.detail.empty()) table << "  [" << r.detail << "]";
      table << "\n";
      j.push_back({{"module", r.module}, {"invariant", r.invariant}, {"status", to_string(r.status)},
                   {"max_violation", r.max_violation}, {"detail", r.detail}});
    }
    std::cout << table.str();
    if (!cfg.out.empty() || std::getenv(kOutDirEnv)) emit(cfg, dump(j));
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter groups: root systems, imaginary cones, Davis complexes and their embedding"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"roots", "positive roots up to a BFS depth"},
      {"normalized-roots", "normalized roots with isotropy values"},
      {"limit-roots", "empirical limit-root estimates"},
      {"parabolics", "classification of standard parabolic subgroups and the spherical poset"},
      {"cone-samples", "seeded samples of the imaginary cone"},
      {"davis", "Davis complex over a word ball"},
      {"embed", "embedding of the Davis complex into the normalized imaginary cone"},
      {"check", "run every invariant suite and print a pass/fail table"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--datum", cfg.datum_path, "Coxeter datum document (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--depth", cfg.depth, "BFS depth for roots")->check(CLI::Range(0, 64));
    sub->add_option("--radius", cfg.radius, "word-ball radius")->check(CLI::Range(0, 64));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--tol", cfg.tol, "isotropy tolerance")->check(CLI::Range(1e-12, 1e-3));
    sub->add_option("--samples", cfg.samples, "cone samples per chamber")->check(CLI::Range(1, 10000));
    sub->add_option("--out", cfg.out, "output path (default: stdout, or $" + std::string(kOutDirEnv) + ")");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--basepoint", cfg.basepoint, "explicit interior base point c1,c2,...");
    sub->add_option("--vt-mode", cfg.vt_mode, "vertex averaging")->check(CLI::IsMember({"linear", "dot"}));
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
