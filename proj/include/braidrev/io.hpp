#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "braidrev/b3rep.hpp"
#include "braidrev/classify.hpp"
#include "braidrev/cyc.hpp"
#include "braidrev/error.hpp"
#include "braidrev/families.hpp"
#include "braidrev/matrix.hpp"
#include "braidrev/quiver.hpp"

namespace braidrev::io {

using Json = nlohmann::ordered_json;

/// Malformed input; `field` is a dotted path such as `B.entries[2][0]`.
class FormatError : public std::invalid_argument {
 public:
  FormatError(const std::string& field, const std::string& what)
      : std::invalid_argument("field '" + field + "': " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

namespace detail {

inline const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw FormatError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

inline std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

inline std::size_t read_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw FormatError(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

inline Blocks read_blocks(const Json& j, const std::string& path) {
  if (j.is_null()) return {};
  if (!j.is_array()) throw FormatError(path, "expected an array of block sizes");
  Blocks b;
  for (std::size_t i = 0; i < j.size(); ++i) b.push_back(read_size(j[i], path + "[" + std::to_string(i) + "]"));
  return b;
}

}  // namespace detail

inline Json to_json(const CycRat& u) { return to_string(u); }

inline CycRat cyc_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return CycRat(j.get<long>());
  if (!j.is_string()) throw FormatError(path, "expected a Q(w) literal string");
  try {
    return parse_cyc(j.get<std::string>());
  } catch (const ParseError& e) {
    throw FormatError(path, e.what());
  }
}

inline Json to_json(const CycMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  if (!m.row_blocks().empty()) out["row_blocks"] = m.row_blocks();
  if (!m.col_blocks().empty()) out["col_blocks"] = m.col_blocks();
  out["entries"] = std::move(entries);
  return out;
}

inline CycMatrix matrix_from_json(const Json& j, const std::string& path = "") {
  const std::size_t rows = detail::read_size(detail::require(j, "rows", path), detail::join(path, "rows"));
  const std::size_t cols = detail::read_size(detail::require(j, "cols", path), detail::join(path, "cols"));
  const Json& entries = detail::require(j, "entries", path);
  const std::string epath = detail::join(path, "entries");
  if (!entries.is_array() || entries.size() != rows)
    throw FormatError(epath, "expected " + std::to_string(rows) + " rows");
  CycMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rpath = epath + "[" + std::to_string(i) + "]";
    if (!entries[i].is_array() || entries[i].size() != cols)
      throw FormatError(rpath, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = cyc_from_json(entries[i][c], rpath + "[" + std::to_string(c) + "]");
  }
  Blocks rb = j.contains("row_blocks") ? detail::read_blocks(j["row_blocks"], detail::join(path, "row_blocks")) : Blocks{};
  Blocks cb = j.contains("col_blocks") ? detail::read_blocks(j["col_blocks"], detail::join(path, "col_blocks")) : Blocks{};
  try {
    m.set_blocks(std::move(rb), std::move(cb));
  } catch (const ShapeError& e) {
    throw FormatError(path.empty() ? "blocks" : path, e.what());
  }
  return m;
}

inline Json to_json(const DimVector& d) { return Json{{"a", d.a}, {"b", d.b}, {"x", d.x}, {"y", d.y}, {"z", d.z}}; }

inline DimVector dims_from_json(const Json& j, const std::string& path) {
  auto get = [&](const char* k) { return detail::read_size(detail::require(j, k, path), detail::join(path, k)); };
  return {get("a"), get("b"), get("x"), get("y"), get("z")};
}

inline Json to_json(const QuiverRep& V) { return Json{{"dims", to_json(V.dims())}, {"B", to_json(V.B())}}; }

inline QuiverRep quiver_from_json(const Json& j) {
  const DimVector d = dims_from_json(detail::require(j, "dims", ""), "dims");
  CycMatrix B = matrix_from_json(detail::require(j, "B", ""), "B");
  try {
    return {d, std::move(B)};
  } catch (const ShapeError& e) {
    throw FormatError("B", e.what());
  }
}

inline Json to_json(const B3Rep& phi) {
  Json out{{"n", phi.n()}, {"X1", to_json(phi.X1())}, {"X2", to_json(phi.X2())}};
  if (phi.dims()) out["dims"] = to_json(*phi.dims());
  return out;
}

inline B3Rep b3rep_from_json(const Json& j) {
  const std::size_t n = detail::read_size(detail::require(j, "n", ""), "n");
  CycMatrix X1 = matrix_from_json(detail::require(j, "X1", ""), "X1");
  CycMatrix X2 = matrix_from_json(detail::require(j, "X2", ""), "X2");
  if (X1.rows() != n || X2.rows() != n) throw FormatError("n", "does not match the generator sizes");
  std::optional<DimVector> dims;
  if (j.contains("dims") && !j["dims"].is_null()) dims = dims_from_json(j["dims"], "dims");
  try {
    return {std::move(X1), std::move(X2), dims};
  } catch (const std::exception& e) {
    throw FormatError("X1", e.what());
  }
}

inline Json to_json(const GLAlphaElement& g) {
  return Json{{"M1", to_json(g.M1)}, {"M2", to_json(g.M2)}, {"N1", to_json(g.N1)}, {"N2", to_json(g.N2)},
              {"N3", to_json(g.N3)}};
}

inline GLAlphaElement gl_from_json(const Json& j) {
  auto get = [&](const char* k) { return matrix_from_json(detail::require(j, k, ""), k); };
  return {get("M1"), get("M2"), get("N1"), get("N2"), get("N3")};
}

inline Json to_json(const FamilySpec& f) {
  Json params = Json::array();
  for (const auto& p : f.parameters) params.push_back(to_string(p));
  return Json{{"kind", to_string(f.kind)}, {"k", f.k}, {"parameters", std::move(params)}, {"seed", f.seed}};
}

inline Json to_json(const WitnessReport& r) {
  Json ids = Json::array();
  for (const auto& c : r.identities) ids.push_back(Json{{"name", c.name}, {"ok", c.ok}});
  Json out{{"family", to_json(r.family)}, {"isomorphic", r.isomorphic}, {"identities", std::move(ids)}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  out["traces"] = r.traces ? Json{{"b", to_string(r.traces->word)}, {"b_rev", to_string(r.traces->reversed)}}
                           : Json(nullptr);
  out["notes"] = r.notes;
  return out;
}

inline Json to_json(const ComponentReport& c) {
  return Json{{"dims", to_json(c.dims)},
              {"n", c.n},
              {"simple", c.simple},
              {"component_dim", c.component_dim ? Json(*c.component_dim) : Json(nullptr)},
              {"verdict", to_string(c.verdict)}};
}

inline Json to_json(const std::vector<ComponentReport>& list) {
  Json out = Json::array();
  for (const auto& c : list) out.push_back(to_json(c));
  return out;
}

}  // namespace braidrev::io
