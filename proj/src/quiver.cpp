#include "mckay/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "mckay/error.hpp"

namespace mckay {

Quiver::Quiver(std::string group, int base_vertices, std::vector<Arrow> arrows)
    : group_(std::move(group)), base_vertices_(base_vertices), arrows_(std::move(arrows)) {}

bool Quiver::is_framing_arrow(int id) const {
  const auto inf = infinity();
  return inf && (arrow(id).tail == *inf || arrow(id).head == *inf);
}

std::optional<int> Quiver::loop(int vertex) const {
  if (!tripled() || vertex < 0 || vertex >= base_vertices_) return std::nullopt;
  return loops_[static_cast<std::size_t>(vertex)];
}

std::vector<std::vector<int>> Quiver::adjacency() const {
  std::vector<std::vector<int>> adj(base_vertices_, std::vector<int>(base_vertices_, 0));
  for (const auto& a : arrows_) {
    if (!a.bar || !is_positive(a.id) || is_framing_arrow(a.id)) continue;
    adj[a.tail][a.head] += 1;
    if (a.tail != a.head) adj[a.head][a.tail] += 1;
  }
  return adj;
}

std::string Quiver::vertex_label(int v) const {
  if (infinity() && v == *infinity()) return "inf";
  return std::to_string(v);
}

std::optional<int> Quiver::vertex_from_label(const std::string& label) const {
  if (label == "inf") return infinity();
  if (label.empty() || label.size() > 6) return std::nullopt;
  for (char c : label)
    if (c < '0' || c > '9') return std::nullopt;
  const int v = std::stoi(label);
  if (v >= base_vertices_) return std::nullopt;
  return v;
}

long DimVector::total() const {
  long s = at_infinity.value_or(0);
  for (long c : components) s += c;
  return s;
}

long DimVector::at(int vertex, const Quiver& q) const {
  if (q.infinity() && vertex == *q.infinity()) return at_infinity.value_or(0);
  return components.at(static_cast<std::size_t>(vertex));
}

bool DimVector::componentwise_le(const DimVector& other) const {
  if (components.size() != other.components.size()) return false;
  if (at_infinity.value_or(0) > other.at_infinity.value_or(0)) return false;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i] > other.components[i]) return false;
  return true;
}

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << "(";
  if (at_infinity) os << "inf:" << *at_infinity << "; ";
  for (std::size_t i = 0; i < components.size(); ++i) os << (i ? "," : "") << components[i];
  os << ")";
  return os.str();
}

Rational StabilityParam::evaluate(const DimVector& d) const {
  Rational s = at_infinity * d.at_infinity.value_or(0);
  for (std::size_t i = 0; i < values.size(); ++i) s += values[i] * d.components.at(i);
  return s;
}

Quiver mckay_quiver(const GroupData& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<Arrow> arrows;
  auto add_pair = [&](int tail, int head) {
    const int id = static_cast<int>(arrows.size());
    arrows.push_back({id, tail, head, id + 1});
    arrows.push_back({id + 1, head, tail, id});
  };
  const bool cyclic = g.descriptor.series == Series::A;
  for (int i = 0; i < n; ++i) {
    if (tensor_multiplicity(g, i, i) != 0) {
      throw Error(ErrorCode::kUnexpectedLoop, "McKay graph of " + to_string(g.descriptor) +
                                                  " has a loop at vertex " + std::to_string(i));
    }
    for (int j = i + 1; j < n; ++j) {
      const int m = tensor_multiplicity(g, i, j);
      if (m != tensor_multiplicity(g, j, i)) {
        throw Error(ErrorCode::kNonIntegralMultiplicity, "asymmetric McKay multiplicities");
      }
      for (int e = 0; e < m; ++e) {
        if (!cyclic) {
          add_pair(i, j);
        } else if (n == 2) {
          // the two edges of the double bond carry opposite orientations
          e == 0 ? add_pair(1, 0) : add_pair(0, 1);
        } else if (j == i + 1) {
          add_pair(j, i);  // positive arrow of edge {k, k+1}: tail k+1, head k
        } else {
          add_pair(i, j);  // edge {r, 0}: tail 0, head r
        }
      }
    }
  }
  return Quiver(to_string(g.descriptor), n, std::move(arrows));
}

Quiver frame_quiver(const Quiver& q, const DimVector& w) {
  if (q.framed()) throw Error(ErrorCode::kAlreadyFramed, "quiver already has a framing vertex");
  if (w.at_infinity) throw Error(ErrorCode::kShapeMismatch, "framing vector has an infinity component");
  if (w.components.size() != static_cast<std::size_t>(q.base_vertex_count())) {
    throw Error(ErrorCode::kShapeMismatch, "framing vector length");
  }
  Quiver out = q;
  const int inf = q.base_vertex_count();
  std::vector<int> mult;
  for (int v = 0; v < q.base_vertex_count(); ++v) {
    const long wv = w.components[static_cast<std::size_t>(v)];
    if (wv < 0) throw Error(ErrorCode::kShapeMismatch, "negative framing multiplicity");
    mult.push_back(static_cast<int>(wv));
    for (long e = 0; e < wv; ++e) {
      auto& arrows = out.mutable_arrows();
      const int id = static_cast<int>(arrows.size());
      arrows.push_back({id, inf, v, id + 1});
      arrows.push_back({id + 1, v, inf, id});
    }
  }
  out.set_framing(std::move(mult));
  return out;
}

Quiver unframe_quiver(const Quiver& q) {
  if (!q.framed()) return q;
  Quiver out = q;
  auto& arrows = out.mutable_arrows();
  std::vector<Arrow> kept;
  for (const auto& a : arrows)
    if (!q.is_framing_arrow(a.id)) kept.push_back(a);
  // framing pairs are always appended after the McKay and loop arrows, so ids stay dense
  arrows = std::move(kept);
  out.clear_framing();
  return out;
}

Quiver triple_quiver(const Quiver& q) {
  if (q.framed()) throw Error(ErrorCode::kAlreadyFramed, "triple the quiver before framing it");
  if (q.tripled()) throw Error(ErrorCode::kAlreadyTripled, "quiver already has loops");
  Quiver out = q;
  std::vector<int> loops;
  for (int v = 0; v < q.base_vertex_count(); ++v) {
    auto& arrows = out.mutable_arrows();
    const int id = static_cast<int>(arrows.size());
    arrows.push_back({id, v, v, std::nullopt});
    loops.push_back(id);
  }
  out.set_loops(std::move(loops));
  return out;
}

std::vector<int> normalize_corner(std::vector<int> corner, int base_vertices) {
  if (corner.empty()) throw Error(ErrorCode::kEmptyCorner, "corner set I must be nonempty");
  std::sort(corner.begin(), corner.end());
  corner.erase(std::unique(corner.begin(), corner.end()), corner.end());
  for (int v : corner) {
    if (v < 0 || v >= base_vertices) {
      throw Error(ErrorCode::kVertexNotInCorner, "vertex " + std::to_string(v) + " is not a vertex of Q0");
    }
  }
  return corner;
}

StabilityParam theta_I(const std::vector<int>& corner, const DimVector& v) {
  const auto n = static_cast<int>(v.components.size());
  const auto I = normalize_corner(corner, n);
  StabilityParam theta;
  theta.values.assign(v.components.size(), Rational(0));
  long sum = 0;
  for (int i : I) {
    theta.values[static_cast<std::size_t>(i)] = 1;
    sum += v.components[static_cast<std::size_t>(i)];
  }
  theta.at_infinity = -sum;
  return theta;
}

DimVector delta(const GroupData& g) {
  DimVector d;
  for (int x : g.irrep_dims) d.components.push_back(x);
  return d;
}

DimVector one_bar(const GroupData& g) {
  DimVector d;
  d.components.assign(g.vertex_count(), 0);
  d.components[0] = 1;
  return d;
}

}  // namespace mckay
