#include "mckay/io.hpp"

#include <fstream>
#include <sstream>

namespace mckay::io {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::kParse, what); }

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(where + ": missing \"" + key + "\"");
  return j.at(key);
}

long need_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw parse_error(what + ": expected an integer");
  return j.get<long>();
}

std::vector<int> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + ": expected an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(static_cast<int>(need_integer(x, what)));
  return out;
}

int vertex_of(const Quiver& q, const std::string& label, const std::string& what) {
  const auto v = q.vertex_from_label(label);
  if (!v) throw parse_error(what + ": unknown vertex \"" + label + "\"");
  return *v;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kUsage, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kUsage, "cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational& x) { return format_rational(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw parse_error("expected a rational \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json matrix_to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Rational> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + ": expected an array of rows");
  // a matrix with no rows carries no column information
  if (j.size() != rows) {
    throw parse_error(what + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  }
  Matrix<Rational> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw parse_error(what + ": row " + std::to_string(r) + " should have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m(r, c) = rational_from_json(row[c]);
      } catch (const Error& e) {
        throw parse_error(what + "[" + std::to_string(r) + "][" + std::to_string(c) + "]: " + e.what());
      }
    }
  }
  return m;
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["group"] = q.group();
  Json vertices = Json::array();
  for (int v = 0; v < q.vertex_count(); ++v) vertices.push_back(q.vertex_label(v));
  j["vertices"] = vertices;
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    Json x;
    x["id"] = a.id;
    x["tail"] = q.vertex_label(a.tail);
    x["head"] = q.vertex_label(a.head);
    x["bar"] = a.bar ? Json(*a.bar) : Json(nullptr);
    arrows.push_back(std::move(x));
  }
  j["arrows"] = arrows;
  Json loops = Json::object();
  for (std::size_t v = 0; v < q.loops().size(); ++v) loops[std::to_string(v)] = q.loops()[v];
  j["loops"] = loops;
  if (q.framing()) {
    Json w = Json::object();
    for (std::size_t v = 0; v < q.framing()->size(); ++v) w[std::to_string(v)] = (*q.framing())[v];
    j["framing"] = w;
  } else {
    j["framing"] = nullptr;
  }
  return j;
}

Quiver quiver_from_json(const Json& j) {
  const auto g = build_group(parse_descriptor(need(j, "group", "quiver").get<std::string>()));
  Quiver q = mckay_quiver(g);
  const bool full = j.contains("arrows");
  const bool tripled = full ? (j.contains("loops") && !need(j, "loops", "quiver").empty())
                            : (j.contains("tripled") && j.at("tripled").get<bool>());
  if (tripled) q = triple_quiver(q);
  if (j.contains("framing") && !j.at("framing").is_null()) {
    const auto& f = j.at("framing");
    DimVector w;
    w.components.assign(static_cast<std::size_t>(q.base_vertex_count()), 0);
    if (f.is_array()) {
      if (f.size() != w.components.size()) throw parse_error("quiver: framing length");
      for (std::size_t v = 0; v < f.size(); ++v) w.components[v] = need_integer(f[v], "quiver framing");
    } else if (f.is_object()) {
      for (const auto& [key, value] : f.items()) {
        w.components.at(static_cast<std::size_t>(vertex_of(q, key, "quiver framing"))) = need_integer(value, "quiver framing");
      }
    } else {
      throw parse_error("quiver: framing must be an array or an object");
    }
    q = frame_quiver(q, w);
  }
  if (!full) return q;

  const auto& arrows = need(j, "arrows", "quiver");
  if (!arrows.is_array() || arrows.size() != q.arrow_count()) {
    throw parse_error("quiver: arrows do not match the McKay quiver of " + q.group());
  }
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& a = arrows[k];
    const std::string where = "quiver arrow " + std::to_string(k);
    const auto& expected = q.arrow(static_cast<int>(k));
    Arrow got;
    got.id = static_cast<int>(need_integer(need(a, "id", where), where));
    got.tail = vertex_of(q, need(a, "tail", where).get<std::string>(), where);
    got.head = vertex_of(q, need(a, "head", where).get<std::string>(), where);
    if (a.contains("bar") && !a.at("bar").is_null()) got.bar = static_cast<int>(need_integer(a.at("bar"), where));
    if (!(got == expected)) throw parse_error(where + " does not match the McKay quiver of " + q.group());
  }
  if (j.contains("vertices") && j.at("vertices").size() != static_cast<std::size_t>(q.vertex_count())) {
    throw parse_error("quiver: vertex count");
  }
  return q;
}

Json module_to_json(const FramedRep& m) {
  Json j;
  j["quiver"] = quiver_to_json(m.quiver);
  Json dims = Json::object();
  for (int v = 0; v < m.quiver.vertex_count(); ++v) dims[m.quiver.vertex_label(v)] = m.dims[static_cast<std::size_t>(v)];
  j["dims"] = dims;
  Json maps = Json::object();
  for (std::size_t a = 0; a < m.maps.size(); ++a) maps[std::to_string(a)] = matrix_to_json(m.maps[a]);
  j["maps"] = maps;
  return j;
}

FramedRep module_from_json(const Json& j) {
  const Quiver q = quiver_from_json(need(j, "quiver", "module"));
  std::vector<std::size_t> dims(static_cast<std::size_t>(q.vertex_count()), 0);
  for (const auto& [key, value] : need(j, "dims", "module").items()) {
    const long d = need_integer(value, "module dims");
    if (d < 0) throw parse_error("module dims: negative dimension");
    dims[static_cast<std::size_t>(vertex_of(q, key, "module dims"))] = static_cast<std::size_t>(d);
  }
  auto m = zero_rep<Rational>(q, dims);
  if (j.contains("maps")) {
    for (const auto& [key, value] : j.at("maps").items()) {
      int a = -1;
      try {
        std::size_t used = 0;
        a = std::stoi(key, &used);
        if (used != key.size()) a = -1;
      } catch (const std::exception&) {
        a = -1;
      }
      if (a < 0 || a >= static_cast<int>(q.arrow_count())) throw parse_error("module maps: unknown arrow \"" + key + "\"");
      const auto [rows, cols] = map_shape(q, dims, a);
      m.maps[static_cast<std::size_t>(a)] = matrix_from_json(value, rows, cols, "module map " + key);
    }
  }
  return m;
}

Json adhm_to_json(const AdhmData& d) {
  Json j;
  j["group"] = to_string(d.group);
  j["B1"] = matrix_to_json(d.B1);
  j["B2"] = matrix_to_json(d.B2);
  j["i"] = matrix_to_json(d.i);
  j["j"] = matrix_to_json(d.j);
  j["weights"] = d.weights;
  j["framing_weights"] = d.framing_weights;
  return j;
}

AdhmData adhm_from_json(const Json& j) {
  AdhmData d;
  d.group = parse_descriptor(need(j, "group", "adhm").get<std::string>());
  d.weights = int_list(need(j, "weights", "adhm"), "adhm weights");
  d.framing_weights = j.contains("framing_weights") ? int_list(j.at("framing_weights"), "adhm framing_weights")
                                                    : std::vector<int>{0};
  const auto n = d.weights.size(), w = d.framing_weights.size();
  d.B1 = matrix_from_json(need(j, "B1", "adhm"), n, n, "adhm B1");
  d.B2 = matrix_from_json(need(j, "B2", "adhm"), n, n, "adhm B2");
  d.i = matrix_from_json(need(j, "i", "adhm"), n, w, "adhm i");
  d.j = matrix_from_json(need(j, "j", "adhm"), w, n, "adhm j");
  return d;
}

AlgebraBase algebra_base_from_string(const std::string& s) {
  if (s == "pi") return AlgebraBase::Preprojective;
  if (s == "piw") return AlgebraBase::FramedPreprojective;
  if (s == "pibullet") return AlgebraBase::GradedPreprojective;
  throw Error(ErrorCode::kUsage, "unknown algebra \"" + s + "\" (expected pi, piw or pibullet)");
}

std::string algebra_base_name(AlgebraBase b) {
  switch (b) {
    case AlgebraBase::Preprojective: return "pi";
    case AlgebraBase::FramedPreprojective: return "piw";
    case AlgebraBase::GradedPreprojective: return "pibullet";
  }
  return "pi";
}

Json truncated_to_json(const TruncatedGradedModule<Rational>& m) {
  Json j;
  j["algebra"] = algebra_base_name(m.kind.base);
  j["corner"] = m.kind.corner ? Json(*m.kind.corner) : Json(nullptr);
  j["k0"] = m.k0;
  j["k1"] = m.k1;
  j["vertices"] = m.vertices;
  Json degrees = Json::array();
  for (int k = m.k0; k <= m.k1; ++k) {
    Json row;
    row["k"] = k;
    row["dims"] = m.dims[static_cast<std::size_t>(k - m.k0)];
    degrees.push_back(std::move(row));
  }
  j["degrees"] = degrees;
  Json actions = Json::array();
  for (const auto& a : m.actions) {
    Json x;
    x["label"] = a.label;
    x["source"] = a.source;
    x["target"] = a.target;
    x["shift"] = a.shift;
    x["is_z"] = a.is_z;
    Json maps = Json::array();
    for (const auto& mat : a.matrices) maps.push_back(matrix_to_json(mat));
    x["maps"] = maps;
    actions.push_back(std::move(x));
  }
  j["actions"] = actions;
  return j;
}

TruncatedGradedModule<Rational> truncated_from_json(const Json& j) {
  TruncatedGradedModule<Rational> m;
  m.kind.base = algebra_base_from_string(need(j, "algebra", "truncated module").get<std::string>());
  if (j.contains("corner") && !j.at("corner").is_null()) m.kind.corner = int_list(j.at("corner"), "truncated module corner");
  m.k0 = static_cast<int>(need_integer(need(j, "k0", "truncated module"), "k0"));
  m.k1 = static_cast<int>(need_integer(need(j, "k1", "truncated module"), "k1"));
  if (m.k1 < m.k0) throw parse_error("truncated module: k1 < k0");
  m.vertices = int_list(need(j, "vertices", "truncated module"), "truncated module vertices");
  const auto& degrees = need(j, "degrees", "truncated module");
  if (!degrees.is_array() || degrees.size() != static_cast<std::size_t>(m.k1 - m.k0 + 1)) {
    throw parse_error("truncated module: one \"degrees\" entry per degree expected");
  }
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    const std::string where = "truncated module degree " + std::to_string(m.k0 + static_cast<int>(k));
    if (need_integer(need(degrees[k], "k", where), where) != m.k0 + static_cast<long>(k)) throw parse_error(where + ": out of order");
    std::vector<std::size_t> row;
    for (int d : int_list(need(degrees[k], "dims", where), where)) {
      if (d < 0) throw parse_error(where + ": negative dimension");
      row.push_back(static_cast<std::size_t>(d));
    }
    if (row.size() != m.vertices.size()) throw parse_error(where + ": vertex count");
    m.dims.push_back(std::move(row));
  }
  for (const auto& x : need(j, "actions", "truncated module")) {
    GradedAction<Rational> a;
    a.label = need(x, "label", "action").get<std::string>();
    const std::string where = "action " + a.label;
    a.source = static_cast<int>(need_integer(need(x, "source", where), where));
    a.target = static_cast<int>(need_integer(need(x, "target", where), where));
    a.shift = static_cast<int>(need_integer(need(x, "shift", where), where));
    a.is_z = x.contains("is_z") && x.at("is_z").get<bool>();
    const int s = m.position(a.source), t = m.position(a.target);
    if (s < 0 || t < 0 || a.shift < 1) throw parse_error(where + ": bad endpoints or shift");
    const auto& maps = need(x, "maps", where);
    const int count = std::max(0, m.k1 - m.k0 - a.shift + 1);
    if (!maps.is_array() || maps.size() != static_cast<std::size_t>(count)) throw parse_error(where + ": degree count");
    for (int k = m.k0; k + a.shift <= m.k1; ++k) {
      a.matrices.push_back(matrix_from_json(maps[static_cast<std::size_t>(k - m.k0)], m.dim(k + a.shift, static_cast<std::size_t>(t)),
                                            m.dim(k, static_cast<std::size_t>(s)), where + " degree " + std::to_string(k)));
    }
    m.actions.push_back(std::move(a));
  }
  validate_graded(m);
  return m;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDescriptor:
    case ErrorCode::kUnsupportedSeries:
    case ErrorCode::kEmptyCorner:
    case ErrorCode::kVertexNotInCorner:
    case ErrorCode::kEndpointMismatch:
    case ErrorCode::kShapeMismatch:
    case ErrorCode::kUnsupportedTheta:
    case ErrorCode::kUnsupportedCorner:
    case ErrorCode::kBadPrime:
    case ErrorCode::kNotEquivariant:
    case ErrorCode::kAlreadyFramed:
    case ErrorCode::kAlreadyTripled:
    case ErrorCode::kParse:
    case ErrorCode::kUsage:
      return 2;
    case ErrorCode::kDegreeCapExceeded:
    case ErrorCode::kDimensionTooLarge:
    case ErrorCode::kTruncationNotReached:
    case ErrorCode::kBoundNotFound:
    case ErrorCode::kNoTermination:
      return 3;
    case ErrorCode::kNonIntegralCoefficient:
      return 4;
    case ErrorCode::kRelationViolation:
    case ErrorCode::kMomentMapNonzero:
      return 5;
    case ErrorCode::kNotStableForSource:
    case ErrorCode::kNotSemistable:
    case ErrorCode::kNotStable:
      return 6;
    default:
      return 1;
  }
}

}  // namespace mckay::io
