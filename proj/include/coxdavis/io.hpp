#pragma once

// JSON and CSV exports.

#include "coxdavis/embedding.hpp"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace coxdavis::io {

using nlohmann::json;

inline json vec(const Vector& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

inline json word_labels(const CoxeterDatum& d, const std::vector<int>& word) {
  json a = json::array();
  for (int s : word) a.push_back(d.label(s));
  return a;
}

inline json subset_labels(const CoxeterDatum& d, GeneratorSet t) { return word_labels(d, t.members()); }

inline json chain_labels(const CoxeterDatum& d, const Chain& c) {
  json a = json::array();
  for (GeneratorSet t : c) a.push_back(subset_labels(d, t));
  return a;
}

inline json roots_json(const RootSet& roots) {
  json a = json::array();
  for (const auto& r : roots.roots) a.push_back({{"coords", vec(r.coords)}, {"depth", r.depth}});
  return a;
}

inline json ball_json(const CoxeterDatum& d, const std::vector<GroupElement>& ball) {
  json a = json::array();
  for (const auto& w : ball) a.push_back({{"word", word_labels(d, w.word)}, {"length", w.length()}});
  return a;
}

inline std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// One row per root: normalized coordinates, BFS depth, isotropy (x, x).
inline std::string normalized_roots_csv(const CoxeterDatum& d, const RootSet& roots) {
  std::string out;
  for (int s = 0; s < d.rank(); ++s) out += d.label(s) + ",";
  out += "depth,isotropy\n";
  for (const auto& r : roots.roots) {
    const Vector x = normalize(r.coords).coords();
    for (double c : x) out += format_real(c) + ",";
    out += std::to_string(r.depth) + "," + format_real(d.bilinear(x, x)) + "\n";
  }
  return out;
}

inline json normalized_roots_json(const CoxeterDatum& d, const RootSet& roots) {
  json a = json::array();
  for (const auto& r : roots.roots) {
    const Vector x = normalize(r.coords).coords();
    a.push_back({{"coords", vec(x)}, {"depth", r.depth}, {"isotropy", d.bilinear(x, x)}});
  }
  return a;
}

inline json limit_roots_json(const std::vector<LimitRootEstimate>& est) {
  json a = json::array();
  for (const auto& e : est)
    a.push_back({{"point", vec(e.point.coords())}, {"isotropy", e.isotropy}, {"source_depth", e.source_depth}});
  return a;
}

inline std::string limit_roots_csv(const CoxeterDatum& d, const std::vector<LimitRootEstimate>& est) {
  std::string out;
  for (int s = 0; s < d.rank(); ++s) out += d.label(s) + ",";
  out += "depth,isotropy\n";
  for (const auto& e : est) {
    for (double c : e.point.coords()) out += format_real(c) + ",";
    out += std::to_string(e.source_depth) + "," + format_real(e.isotropy) + "\n";
  }
  return out;
}

inline json poset_json(const CoxeterDatum& d, const SphericalPoset& poset) {
  json nodes = json::array();
  for (GeneratorSet t : poset.elements) {
    const auto cls = classify_parabolic(d, t);
    nodes.push_back({{"subset", subset_labels(d, t)}, {"kind", to_string(cls.kind)}});
  }
  json edges = json::array();
  for (const auto& [i, j] : poset.covers) edges.push_back({i, j});
  return {{"nodes", nodes}, {"edges", edges}};
}

/// Classification of every subset of S, for the `parabolics` command.
inline json parabolics_json(const CoxeterDatum& d) {
  json all = json::array();
  for (std::uint32_t bits = 0; bits < (1u << d.rank()); ++bits) {
    const auto cls = classify_parabolic(d, GeneratorSet(bits));
    json entry = {{"subset", subset_labels(d, cls.subset)}, {"kind", to_string(cls.kind)}};
    if (cls.radical) entry["radical"] = vec(*cls.radical);
    all.push_back(entry);
  }
  return {{"subsets", all}, {"spherical_poset", poset_json(d, enumerate_spherical_poset(d))}};
}

inline json cone_samples_json(const CoxeterDatum& d, const std::vector<ConeSample>& samples) {
  json a = json::array();
  for (const auto& s : samples)
    a.push_back({{"word", word_labels(d, s.element.word)},
                 {"base", vec(s.base.coords)},
                 {"image", vec(s.image)},
                 {"normalized_image", vec(s.normalized_image.coords())},
                 {"isotropy", s.isotropy}});
  return a;
}

inline json davis_json(const CoxeterDatum& d, const DavisBall& ball) {
  json chambers = json::array();
  for (const auto& w : ball.chambers) chambers.push_back({{"word", word_labels(d, w.word)}});
  json simplices = json::array();
  for (const auto& c : ball.chamber.simplices) simplices.push_back(chain_labels(d, c));
  json adjacency = json::array();
  for (const auto& a : ball.adjacency)
    adjacency.push_back({{"from", a.from}, {"to", a.to}, {"generator", d.label(a.generator)}});
  json frontier = json::array();
  for (const auto& f : ball.frontier) frontier.push_back({{"chamber", f.chamber}, {"generator", d.label(f.generator)}});
  return {{"chambers", chambers},
          {"simplices", simplices},
          {"adjacency", adjacency},
          {"frontier", frontier},
          {"closed", ball.closed()}};
}

inline json embedding_report_json(const EmbeddingReport& r) {
  return {{"chambers", r.chambers},
          {"cells", r.cells},
          {"equivariance_max", r.equivariance_max},
          {"well_defined_max", r.well_defined_max},
          {"min_separation", r.min_separation},
          {"mirror_inside_max", r.mirror_inside_max},
          {"mirror_outside_min", r.mirror_outside_min},
          {"isotropy_max", r.isotropy_max},
          {"stabilizer_mismatches", r.stabilizer_mismatches},
          {"cone_return_violations", r.cone_return_violations},
          {"equivariant", r.equivariant()},
          {"injective", r.injective()},
          {"mirror_aligned", r.mirror_aligned()},
          {"isotropic", r.isotropic()},
          {"passed", r.passed()}};
}

inline json embedding_json(const CoxeterDatum& d, const DavisBall& ball, const VertexImageTable& table,
                           const EmbeddingReport& report) {
  json vertices = json::array();
  for (const auto& [bits, image] : table.images)
    vertices.push_back({{"subset", subset_labels(d, GeneratorSet(bits))}, {"image", vec(image.coords())}});
  json cells = json::array();
  for (const auto& cell : sample_cells(d, ball)) {
    const auto e = embed_cell(d, cell, table);
    cells.push_back({{"word", word_labels(d, cell.element.word)},
                     {"carrier", chain_labels(d, cell.point.carrier)},
                     {"barycentric", cell.point.barycentric},
                     {"image", vec(e.image.coords())},
                     {"isotropy", e.isotropy}});
  }
  return {{"basepoint", vec(table.basepoint.coords)},
          {"vertex_mode", table.mode == VertexMode::Linear ? "linear" : "dot"},
          {"vertex_images", vertices},
          {"cells", cells},
          {"verification", embedding_report_json(report)}};
}

}  // namespace coxdavis::io
