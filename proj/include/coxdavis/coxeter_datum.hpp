#pragma once

// Coxeter matrices, their Gram forms, and the datum (V, Pi, B) with Pi realized
// as the standard basis of R^n.

#include "coxdavis/core.hpp"

#include "json.hpp"

#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coxdavis {

/// Bond value m_st; `kInfiniteBond` encodes m_st = infinity.
inline constexpr int kInfiniteBond = 0;

struct CoxeterMatrix {
  std::vector<std::string> generators;
  /// entries[s][t] = m_st, 1 on the diagonal, kInfiniteBond for infinity.
  std::vector<std::vector<int>> entries;
  /// Form values (alpha_s, alpha_t) for selected infinite bonds, keyed with s < t.
  std::map<std::pair<int, int>, double> infinite_bond_values;

  int rank() const { return static_cast<int>(generators.size()); }
  bool is_infinite(int s, int t) const { return entries[s][t] == kInfiniteBond; }

  bool operator==(const CoxeterMatrix&) const = default;
};

/// Symmetric Gram matrix of the form in the simple-root basis.
struct GramForm {
  Matrix matrix;
};

inline void validate(const CoxeterMatrix& m) {
  const int n = m.rank();
  if (static_cast<int>(m.entries.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "Coxeter matrix has wrong number of rows");
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(m.entries[s].size()) != n)
      throw Error(ErrorCode::DimensionMismatch, "Coxeter matrix row has wrong length");
    if (m.entries[s][s] != 1)
      throw Error(ErrorCode::InvalidBond, "diagonal entry m_ss must be 1 for " + m.generators[s]);
    for (int t = 0; t < n; ++t) {
      if (m.entries[s][t] != m.entries[t][s])
        throw Error(ErrorCode::AsymmetricEntry, "m_st != m_ts for " + m.generators[s] + "," + m.generators[t]);
      if (s != t && m.entries[s][t] != kInfiniteBond && m.entries[s][t] < 2)
        throw Error(ErrorCode::InvalidBond, "m_st must be >= 2 or inf for distinct " + m.generators[s] + "," +
                                                m.generators[t]);
    }
  }
  for (const auto& [pair, c] : m.infinite_bond_values) {
    const auto [s, t] = pair;
    if (s < 0 || t < 0 || s >= n || t >= n || s >= t)
      throw Error(ErrorCode::InvalidInfiniteBondValue, "infinite bond value on an invalid pair");
    if (!m.is_infinite(s, t))
      throw Error(ErrorCode::InvalidInfiniteBondValue,
                  "value supplied for finite bond " + m.generators[s] + "," + m.generators[t]);
    if (!(c <= -1.0))
      throw Error(ErrorCode::InvalidInfiniteBondValue,
                  "c_st must be <= -1 for " + m.generators[s] + "," + m.generators[t]);
  }
}

inline GramForm gram_form(const CoxeterMatrix& m) {
  const int n = m.rank();
  Matrix b = Matrix::Identity(n, n);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      double value;
      if (m.is_infinite(s, t)) {
        auto it = m.infinite_bond_values.find({s, t});
        value = it == m.infinite_bond_values.end() ? -1.0 : it->second;
      } else if (m.entries[s][t] == 2) {
        value = 0.0;
      } else {
        value = -std::cos(std::numbers::pi / m.entries[s][t]);
      }
      b(s, t) = b(t, s) = value;
    }
  }
  return {b};
}

/// Immutable after construction.
class CoxeterDatum {
 public:
  explicit CoxeterDatum(CoxeterMatrix m) : matrix_(std::move(m)) {
    validate(matrix_);
    form_ = gram_form(matrix_);
  }

  const CoxeterMatrix& matrix() const { return matrix_; }
  const Matrix& gram() const { return form_.matrix; }
  int rank() const { return matrix_.rank(); }
  const std::string& label(int s) const { return matrix_.generators[static_cast<std::size_t>(s)]; }
  Vector simple_root(int s) const { return Vector::Unit(rank(), s); }

  int index_of(const std::string& label) const {
    for (int s = 0; s < rank(); ++s)
      if (matrix_.generators[static_cast<std::size_t>(s)] == label) return s;
    throw Error(ErrorCode::UnknownGenerator, label);
  }

  /// (v, w) = v^T B w.
  double bilinear(const Vector& v, const Vector& w) const {
    if (v.size() != rank() || w.size() != rank())
      throw Error(ErrorCode::DimensionMismatch, "bilinear expects vectors of length " + std::to_string(rank()));
    return v.dot(form_.matrix * w);
  }

  /// Inner products of v against every simple root: B v.
  Vector wall_values(const Vector& v) const {
    if (v.size() != rank()) throw Error(ErrorCode::DimensionMismatch, "wall_values");
    return form_.matrix * v;
  }

  /// Coxeter graph adjacency: s -- t iff m_st != 2.
  bool bonded(int s, int t) const { return s != t && matrix_.entries[s][t] != 2; }

  GeneratorSet all() const { return GeneratorSet::full(rank()); }

  bool operator==(const CoxeterDatum& o) const { return matrix_ == o.matrix_; }

 private:
  CoxeterMatrix matrix_;
  GramForm form_;
};

// --- document format -------------------------------------------------------
//
//   {
//     "generators": ["s", "t", "u"],
//     "bonds": [["s", "t", 3], ["t", "u", "inf"]],
//     "infinite_bond_values": [["t", "u", -1.5]]
//   }
//
// Omitted pairs default to m = 2.

inline CoxeterDatum parse_datum(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
    throw Error(ErrorCode::Parse, "document needs a 'generators' array");

  CoxeterMatrix m;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw Error(ErrorCode::Parse, "generator labels must be strings");
    const auto label = g.get<std::string>();
    for (const auto& existing : m.generators)
      if (existing == label) throw Error(ErrorCode::DuplicateGenerator, label);
    m.generators.push_back(label);
  }
  const int n = m.rank();
  if (n == 0) throw Error(ErrorCode::Parse, "at least one generator is required");
  if (n > 32) throw Error(ErrorCode::RankTooLarge, "rank above 32 is not supported");

  auto index = [&](const nlohmann::json& j) {
    if (!j.is_string()) throw Error(ErrorCode::Parse, "bond endpoints must be labels");
    const auto label = j.get<std::string>();
    for (int s = 0; s < n; ++s)
      if (m.generators[static_cast<std::size_t>(s)] == label) return s;
    throw Error(ErrorCode::UnknownGenerator, label);
  };

  m.entries.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int s = 0; s < n; ++s) m.entries[s][s] = 1;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));

  if (doc.contains("bonds")) {
    for (const auto& bond : doc["bonds"]) {
      if (!bond.is_array() || bond.size() != 3) throw Error(ErrorCode::Parse, "bond entries are [s, t, m]");
      const int s = index(bond[0]);
      const int t = index(bond[1]);
      int value;
      if (bond[2].is_string()) {
        if (bond[2].get<std::string>() != "inf") throw Error(ErrorCode::Parse, "bond value must be an integer or \"inf\"");
        value = kInfiniteBond;
      } else if (bond[2].is_number_integer()) {
        value = bond[2].get<int>();
        if (value == kInfiniteBond) throw Error(ErrorCode::InvalidBond, "m_st = 0 is not a valid bond");
      } else {
        throw Error(ErrorCode::Parse, "bond value must be an integer or \"inf\"");
      }
      if (s == t) {
        if (value != 1) throw Error(ErrorCode::InvalidBond, "m_ss must be 1 for " + m.generators[s]);
        continue;
      }
      if (value != kInfiniteBond && value < 2)
        throw Error(ErrorCode::InvalidBond, "m_st < 2 for distinct " + m.generators[s] + "," + m.generators[t]);
      if (seen[s][t] && m.entries[s][t] != value)
        throw Error(ErrorCode::AsymmetricEntry, "conflicting bonds for " + m.generators[s] + "," + m.generators[t]);
      seen[s][t] = seen[t][s] = true;
      m.entries[s][t] = m.entries[t][s] = value;
    }
  }

  if (doc.contains("infinite_bond_values")) {
    for (const auto& entry : doc["infinite_bond_values"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_number())
        throw Error(ErrorCode::Parse, "infinite_bond_values entries are [s, t, c]");
      int s = index(entry[0]);
      int t = index(entry[1]);
      if (s > t) std::swap(s, t);
      const double c = entry[2].get<double>();
      if (s == t || !m.is_infinite(s, t))
        throw Error(ErrorCode::InvalidInfiniteBondValue, "pair is not an infinite bond");
      if (!(c <= -1.0)) throw Error(ErrorCode::InvalidInfiniteBondValue, "c_st must be <= -1");
      if (auto it = m.infinite_bond_values.find({s, t}); it != m.infinite_bond_values.end() && it->second != c)
        throw Error(ErrorCode::AsymmetricEntry, "conflicting infinite bond values");
      m.infinite_bond_values[{s, t}] = c;
    }
  }
  return CoxeterDatum(std::move(m));
}

inline CoxeterDatum parse_datum(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return parse_datum(doc);
}

/// Canonical document: bonds listed for every pair with m != 2 in index order.
inline nlohmann::json to_json(const CoxeterDatum& d) {
  const auto& m = d.matrix();
  nlohmann::json doc;
  doc["generators"] = m.generators;
  doc["bonds"] = nlohmann::json::array();
  for (int s = 0; s < m.rank(); ++s)
    for (int t = s + 1; t < m.rank(); ++t) {
      if (m.entries[s][t] == 2) continue;
      nlohmann::json value = m.is_infinite(s, t) ? nlohmann::json("inf") : nlohmann::json(m.entries[s][t]);
      doc["bonds"].push_back({m.generators[s], m.generators[t], value});
    }
  doc["infinite_bond_values"] = nlohmann::json::array();
  for (const auto& [pair, c] : m.infinite_bond_values)
    doc["infinite_bond_values"].push_back({m.generators[pair.first], m.generators[pair.second], c});
  return doc;
}

}  // namespace coxdavis
