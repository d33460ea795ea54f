#include "mckay/moduli_tools.hpp"

#include <algorithm>

namespace mckay {

namespace {

std::vector<bool> membership(const std::vector<int>& I, int n) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int i : normalize_corner(I, n)) in[static_cast<std::size_t>(i)] = true;
  return in;
}

long neighbour_sum(const std::vector<std::vector<int>>& adj, const std::vector<long>& v, std::size_t i) {
  long s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += adj[i][j] * v[j];
  return s;
}

}  // namespace

bool is_sufficient(const DimVector& v, const std::vector<int>& corner, const Quiver& q) {
  const int n = q.base_vertex_count();
  if (v.components.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::kShapeMismatch, "dimension vector length");
  const auto in = membership(corner, n);
  const auto adj = q.adjacency();
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    if (in[i]) continue;
    if (2 * v.components[i] < neighbour_sum(adj, v.components, i)) return false;
  }
  return true;
}

DimVector minimal_sufficient_completion(const DimVector& v, const std::vector<int>& corner, const Quiver& q, int max_rounds) {
  const int n = q.base_vertex_count();
  if (v.components.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::kShapeMismatch, "dimension vector length");
  const auto in = membership(corner, n);
  const auto adj = q.adjacency();
  DimVector out;
  out.components.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.components[i] = v.components[i];
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in[i]) continue;
      const long need = (neighbour_sum(adj, out.components, i) + 1) / 2;
      if (need > out.components[i]) {
        out.components[i] = need;
        changed = true;
      }
    }
    if (!changed) return out;
  }
  throw Error(ErrorCode::kNoTermination, "completion did not settle after " + std::to_string(max_rounds) + " rounds");
}

namespace detail {

void require_framing_in_corner(const Quiver& q, const std::vector<int>& corner) {
  if (!q.framed()) throw Error(ErrorCode::kUsage, "the dimension bound concerns framed modules");
  const int n = q.base_vertex_count();
  const auto in = membership(corner, n);
  for (int v = 0; v < n; ++v) {
    if (!in[static_cast<std::size_t>(v)] && q.framing()->at(static_cast<std::size_t>(v)) != 0) {
      throw Error(ErrorCode::kUnsupportedCorner, "framing at vertex " + std::to_string(v) + " lies outside I");
    }
  }
}

}  // namespace detail

PolystableDecomposition<Rational> vgit_pushforward(const FramedRep& m, const std::vector<int>& from, const std::vector<int>& to) {
  const int n = m.quiver.base_vertex_count();
  const auto I2 = normalize_corner(from, n);
  const auto I1 = normalize_corner(to, n);
  if (!std::includes(I2.begin(), I2.end(), I1.begin(), I1.end())) {
    throw Error(ErrorCode::kUsage, "target corner must be contained in the source corner");
  }
  if (!is_stable_for(m, I2)) throw Error(ErrorCode::kNotStableForSource, "module is not stable for the source chamber");
  return polystable_decomposition(m, I1);
}

PolystableDecomposition<Rational> vgit_chain(const FramedRep& m, const std::vector<std::vector<int>>& chain) {
  if (chain.size() < 2) throw Error(ErrorCode::kUsage, "a chain needs at least two corners");
  PolystableDecomposition<Rational> acc{m, {}};
  std::map<int, std::size_t> simples;
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    auto step = vgit_pushforward(acc.core, chain[s], chain[s + 1]);
    for (const auto& [v, k] : step.simples) simples[v] += k;
    acc.core = std::move(step.core);
  }
  acc.simples.assign(simples.begin(), simples.end());
  return acc;
}

bool same_polystable(const PolystableDecomposition<Rational>& a, const PolystableDecomposition<Rational>& b) {
  return a.simples == b.simples && are_isomorphic(a.core, b.core);
}

AdhmData monomial_ideal_adhm(const GammaDescriptor& g, const std::vector<int>& rows) {
  if (g.series != Series::A) throw Error(ErrorCode::kUnsupportedSeries, "ADHM data is only built for cyclic groups");
  for (std::size_t b = 0; b < rows.size(); ++b) {
    if (rows[b] <= 0 || (b > 0 && rows[b] > rows[b - 1])) throw Error(ErrorCode::kUsage, "rows must be positive and non-increasing");
  }
  const int n = g.rank + 1;
  std::vector<std::pair<int, int>> boxes;  // (a, b) for x^a y^b
  for (int b = 0; b < static_cast<int>(rows.size()); ++b)
    for (int a = 0; a < rows[static_cast<std::size_t>(b)]; ++a) boxes.emplace_back(a, b);
  const auto N = boxes.size();
  AdhmData d{g, Matrix<Rational>(N, N), Matrix<Rational>(N, N), Matrix<Rational>(N, 1), Matrix<Rational>(1, N), {}, {0}};
  auto index = [&](int a, int b) -> long {
    const auto it = std::find(boxes.begin(), boxes.end(), std::make_pair(a, b));
    return it == boxes.end() ? -1 : it - boxes.begin();
  };
  for (std::size_t k = 0; k < N; ++k) {
    const auto [a, b] = boxes[k];
    d.weights.push_back((((b - a) % n) + n) % n);
    if (const long x = index(a + 1, b); x >= 0) d.B1(static_cast<std::size_t>(x), k) = 1;
    if (const long y = index(a, b + 1); y >= 0) d.B2(static_cast<std::size_t>(y), k) = 1;
  }
  if (N > 0) d.i(0, 0) = 1;
  return d;
}

FramedRep unframed_part(const FramedRep& m) {
  FramedRep out{unframe_quiver(m.quiver), {}, {}};
  out.dims.assign(m.dims.begin(), m.dims.begin() + out.quiver.vertex_count());
  for (const auto& a : out.quiver.arrows()) out.maps.push_back(m.maps[static_cast<std::size_t>(a.id)]);
  return out;
}

FramedRep adhm_build_cyclic(const AdhmData& data) {
  if (data.group.series != Series::A) {
    throw Error(ErrorCode::kUnsupportedSeries, "ADHM splitting is implemented for cyclic groups only");
  }
  const int n = data.group.rank + 1;
  const auto N = data.weights.size();
  const auto W = data.framing_weights.size();
  auto check_shape = [](const Matrix<Rational>& x, std::size_t r, std::size_t c, const char* name) {
    if (x.rows() != r || x.cols() != c) {
      throw Error(ErrorCode::kShapeMismatch, std::string(name) + " must be " + std::to_string(r) + "x" + std::to_string(c));
    }
  };
  check_shape(data.B1, N, N, "B1");
  check_shape(data.B2, N, N, "B2");
  check_shape(data.i, N, W, "i");
  check_shape(data.j, W, N, "j");
  auto wt = [n](int x) { return ((x % n) + n) % n; };
  for (int x : data.weights)
    if (x < 0 || x >= n) throw Error(ErrorCode::kNotEquivariant, "weight " + std::to_string(x) + " out of range");
  for (int x : data.framing_weights)
    if (x < 0 || x >= n) throw Error(ErrorCode::kNotEquivariant, "framing weight " + std::to_string(x) + " out of range");
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::kNotEquivariant, what);
  };
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      if (!is_zero(data.B1(r, c))) require(data.weights[r] == wt(data.weights[c] - 1), "B1 must lower the weight by one");
      if (!is_zero(data.B2(r, c))) require(data.weights[r] == wt(data.weights[c] + 1), "B2 must raise the weight by one");
    }
    for (std::size_t c = 0; c < W; ++c) {
      if (!is_zero(data.i(r, c))) require(data.weights[r] == data.framing_weights[c], "i must preserve weights");
      if (!is_zero(data.j(c, r))) require(data.framing_weights[c] == data.weights[r], "j must preserve weights");
    }
  }
  const auto moment = data.B1 * data.B2 - data.B2 * data.B1 + data.i * data.j;
  if (!moment.is_zero()) throw Error(ErrorCode::kMomentMapNonzero, "[B1,B2] + ij is not zero");

  // basis of V_k and W_k in the order the vectors appear
  std::vector<std::vector<std::size_t>> vb(static_cast<std::size_t>(n)), wb(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < N; ++r) vb[static_cast<std::size_t>(data.weights[r])].push_back(r);
  for (std::size_t c = 0; c < W; ++c) wb[static_cast<std::size_t>(data.framing_weights[c])].push_back(c);
  const auto g = build_group(data.group);
  DimVector w;
  for (const auto& b : wb) w.components.push_back(static_cast<long>(b.size()));
  const Quiver q = frame_quiver(mckay_quiver(g), w);
  std::vector<std::size_t> dims;
  for (const auto& b : vb) dims.push_back(b.size());
  dims.push_back(1);
  FramedRep m = zero_rep<Rational>(q, dims);
  auto block = [](const Matrix<Rational>& x, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    Matrix<Rational> out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = x(rows[r], cols[c]);
    return out;
  };
  std::vector<std::size_t> copy(static_cast<std::size_t>(n), 0);
  for (const auto& a : q.arrows()) {
    if (!q.is_positive(a.id)) continue;
    auto& x = m.maps[static_cast<std::size_t>(a.id)];
    auto& xbar = m.maps[static_cast<std::size_t>(*a.bar)];
    const auto h = static_cast<std::size_t>(a.head);
    if (q.is_framing_arrow(a.id)) {
      // tail infinity: the map to infinity is a row of j, the map back a column of i
      const std::size_t c = wb[h][copy[h]++];
      x = block(data.j, {c}, vb[h]);
      xbar = block(data.i, vb[h], {c});
      continue;
    }
    // positive arrows go from V_h to V_t with the weight going up by one
    const auto t = static_cast<std::size_t>(a.tail);
    x = block(data.B2, vb[t], vb[h]);
    xbar = block(data.B1, vb[h], vb[t]);
  }
  return m;
}

}  // namespace mckay
