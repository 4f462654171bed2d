#include "afkit/json_io.hpp"

#include "afkit/errors.hpp"

namespace afkit::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("'") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

const Json& array_of(const Json& v, std::size_t len, const char* what) {
  if (!v.is_array() || v.size() != len) {
    throw ParseError(std::string(what) + ": expected an array of length " + std::to_string(len));
  }
  return v;
}

RatMat rat_matrix_from(const Json& rows, std::size_t n, const char* what) {
  array_of(rows, n, what);
  RatMat m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = array_of(rows[i], n, what);
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rat_from(row[k]);
  }
  return m;
}

} // namespace

Json rat_json(const Rat& x) { return format_rat(x); }

Rat rat_from(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string \"p/q\"");
  return parse_rat(j.get_ref<const std::string&>());
}

Json gauss_json(const GaussRat& z) {
  Json j = Json::object();
  j["re"] = rat_json(z.re);
  j["im"] = rat_json(z.im);
  return j;
}

Json matrix_json(const GenMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(gauss_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  Json j = Json::object();
  j["n"] = m.size();
  j["entries"] = std::move(rows);
  return j;
}

Json matrix_json(const HermMat& m) { return matrix_json(m.mat()); }

GenMat gen_matrix_from(const Json& j) {
  const std::size_t n = size_field(j, "n");
  if (n == 0) throw ParseError("matrix: n must be positive");
  const Json& rows = array_of(field(j, "entries"), n, "matrix entries");
  GenMat m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = array_of(rows[i], n, "matrix row");
    for (std::size_t k = 0; k < n; ++k) {
      const Json& e = row[k];
      if (e.is_string()) {
        m(i, k) = GaussRat{rat_from(e), Rat(0)};
      } else {
        m(i, k) = GaussRat{rat_from(field(e, "re")), e.contains("im") ? rat_from(e["im"]) : Rat(0)};
      }
    }
  }
  return m;
}

HermMat herm_matrix_from(const Json& j) { return HermMat(gen_matrix_from(j)); }

Json tuple_json(const std::vector<HermMat>& mats) {
  Json arr = Json::array();
  for (const auto& m : mats) arr.push_back(matrix_json(m));
  Json j = Json::object();
  j["n"] = mats.empty() ? 0 : mats.front().size();
  j["mats"] = std::move(arr);
  return j;
}

std::vector<HermMat> tuple_from(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const Json& arr = field(j, "mats");
  if (!arr.is_array()) throw ParseError("tuple: 'mats' must be an array");
  std::vector<HermMat> out;
  for (const auto& m : arr) {
    out.push_back(herm_matrix_from(m));
    if (out.back().size() != n) throw ParseError("tuple: matrix size differs from n");
  }
  return out;
}

Json polytope_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rat_json(x));
    verts.push_back(std::move(row));
  }
  Json j = Json::object();
  j["dim"] = p.dim();
  j["vertices"] = std::move(verts);
  return j;
}

Polytope polytope_from(const Json& j) {
  const std::size_t d = size_field(j, "dim");
  if (d == 0) throw ParseError("polytope: dim must be positive");
  const Json& verts = field(j, "vertices");
  if (!verts.is_array() || verts.empty()) throw ParseError("polytope: 'vertices' must be a non-empty array");
  std::vector<Point> pts;
  for (const auto& v : verts) {
    const Json& row = array_of(v, d, "polytope vertex");
    Point p;
    for (const auto& x : row) p.push_back(rat_from(x));
    pts.push_back(std::move(p));
  }
  return Polytope::hull_of(pts);
}

Json gram_json(const GramTable& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i <= g.r(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k <= g.r(); ++k) row.push_back(rat_json(g(i, k)));
    rows.push_back(std::move(row));
  }
  Json j = Json::object();
  j["r"] = g.r();
  j["d"] = std::move(rows);
  return j;
}

GramTable gram_from(const Json& j) {
  const std::size_t r = size_field(j, "r");
  if (r == 0) throw ParseError("gram table: r must be positive");
  return GramTable(rat_matrix_from(field(j, "d"), r + 1, "gram table"));
}

Json gap_json(const GapReport& r) {
  Json j = Json::object();
  j["lhs"] = rat_json(r.lhs);
  j["rhs"] = rat_json(r.rhs);
  j["gap"] = rat_json(r.gap);
  j["equality"] = r.equality;
  j["lambda"] = r.lambda ? rat_json(*r.lambda) : Json(nullptr);
  return j;
}

Json torus_class_json(const TorusClass& c) {
  Json j = matrix_json(c.mat());
  j["nef"] = c.nef();
  j["big"] = c.big();
  j["kahler"] = c.kahler();
  return j;
}

Json concavity_json(const ConcavityReport& r) {
  Json j = Json::object();
  j["grid"] = rat_vector_json(r.grid);
  j["values"] = r.values;
  j["max_midpoint_violation"] = r.max_midpoint_violation;
  j["max_chord_violation"] = r.max_chord_violation;
  j["max_chord_deviation"] = r.max_chord_deviation;
  return j;
}

Json rat_vector_json(const std::vector<Rat>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(rat_json(x));
  return arr;
}

std::vector<Fixture> fixtures_from(const Json& j) {
  std::vector<Fixture> out;
  if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_array()) throw ParseError("nested fixture arrays are not supported");
      auto inner = fixtures_from(item);
      out.insert(out.end(), inner.begin(), inner.end());
    }
    return out;
  }
  if (!j.is_object()) throw ParseError("fixture must be an object or an array of objects");
  if (j.contains("r") && j.contains("d")) {
    out.emplace_back(gram_from(j));
  } else if (j.contains("mats")) {
    out.emplace_back(tuple_from(j));
  } else if (j.contains("entries")) {
    out.emplace_back(herm_matrix_from(j));
  } else if (j.contains("vertices")) {
    out.emplace_back(polytope_from(j));
  } else {
    throw ParseError("unrecognized fixture: expected a matrix, tuple, polytope or gram table");
  }
  return out;
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

} // namespace afkit::io
