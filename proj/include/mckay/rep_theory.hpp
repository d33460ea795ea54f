#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mckay/error.hpp"
#include "mckay/graded_algebra.hpp"
#include "mckay/matrix.hpp"
#include "mckay/quiver.hpp"
#include "mckay/scalar.hpp"

namespace mckay {

/// Finite-dimensional representation. maps[a] goes from the component at h(a)
/// to the component at t(a), so it has shape dims[t(a)] x dims[h(a)].
template <class S>
struct QuiverRep {
  Quiver quiver;
  std::vector<std::size_t> dims;  // one per vertex; the framing vertex is last
  std::vector<Matrix<S>> maps;

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
  }

  DimVector dim_vector() const {
    DimVector v;
    const int n = quiver.base_vertex_count();
    for (int k = 0; k < n; ++k) v.components.push_back(static_cast<long>(dims[static_cast<std::size_t>(k)]));
    if (quiver.framed()) v.at_infinity = static_cast<long>(dims[static_cast<std::size_t>(n)]);
    return v;
  }

  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;
};

using FramedRep = QuiverRep<Rational>;

/// One subspace per vertex, closed under every arrow map.
template <class S>
using Submodule = std::vector<Subspace<S>>;

// ---------------------------------------------------------------------------
// shapes and the arrow action

inline std::pair<std::size_t, std::size_t> map_shape(const Quiver& q, const std::vector<std::size_t>& dims, int arrow) {
  const auto& a = q.arrow(arrow);
  return {dims.at(static_cast<std::size_t>(a.tail)), dims.at(static_cast<std::size_t>(a.head))};
}

inline std::vector<std::size_t> dims_of(const Quiver& q, const DimVector& d) {
  std::vector<std::size_t> out;
  for (int v = 0; v < q.vertex_count(); ++v) out.push_back(static_cast<std::size_t>(d.at(v, q)));
  return out;
}

template <class S>
void validate_shapes(const QuiverRep<S>& m) {
  if (m.dims.size() != static_cast<std::size_t>(m.quiver.vertex_count())) {
    throw Error(ErrorCode::kShapeMismatch, "expected " + std::to_string(m.quiver.vertex_count()) + " vertex dimensions");
  }
  if (m.maps.size() != m.quiver.arrow_count()) {
    throw Error(ErrorCode::kShapeMismatch, "expected " + std::to_string(m.quiver.arrow_count()) + " arrow maps");
  }
  for (const auto& a : m.quiver.arrows()) {
    const auto [r, c] = map_shape(m.quiver, m.dims, a.id);
    const auto& x = m.maps[static_cast<std::size_t>(a.id)];
    if (x.rows() != r || x.cols() != c) {
      throw Error(ErrorCode::kShapeMismatch, "arrow " + std::to_string(a.id) + " needs a " + std::to_string(r) + "x" +
                                                 std::to_string(c) + " matrix, got " + x.shape());
    }
  }
}

template <class S>
QuiverRep<S> zero_rep(const Quiver& q, std::vector<std::size_t> dims) {
  QuiverRep<S> m{q, std::move(dims), {}};
  if (m.dims.size() != static_cast<std::size_t>(q.vertex_count())) throw Error(ErrorCode::kShapeMismatch, "dimension count");
  for (const auto& a : q.arrows()) {
    const auto [r, c] = map_shape(q, m.dims, a.id);
    m.maps.emplace_back(r, c);
  }
  return m;
}

/// How the path algebra element `arrow` (tail -> head) acts on the module:
/// a map from the component at the tail to the component at the head. For a
/// paired arrow this is the matrix of its bar; a loop acts by its own matrix.
template <class S>
const Matrix<S>& action(const QuiverRep<S>& m, int arrow) {
  const auto& a = m.quiver.arrow(arrow);
  return m.maps[static_cast<std::size_t>(a.bar ? *a.bar : a.id)];
}

/// Action of a path (traversal order) from its start component to its end component.
template <class S>
Matrix<S> action_of_path(const QuiverRep<S>& m, int start, const Path& p) {
  Matrix<S> x = Matrix<S>::identity(m.dims.at(static_cast<std::size_t>(start)));
  for (int a : p) x = action(m, a) * x;
  return x;
}

/// The defining relations of the algebra whose modules these are: the
/// preprojective relations, plus the loop relations when the quiver is tripled.
inline PathAlgebra relations_for(const Quiver& q) {
  return q.tripled() ? PathAlgebra::graded_preprojective(q) : PathAlgebra::preprojective(q);
}

/// Image of each relation of `algebra` under the module action, in relation order.
template <class S>
std::vector<Matrix<S>> relation_residuals(const QuiverRep<S>& m, const PathAlgebra& algebra) {
  validate_shapes(m);
  std::vector<Matrix<S>> out;
  for (const auto& rel : algebra.relations()) {
    Matrix<S> r(m.dims[static_cast<std::size_t>(rel.target)], m.dims[static_cast<std::size_t>(rel.source)]);
    for (const auto& t : rel.terms) {
      r = r + from_rational<S>(t.coefficient) * (action(m, t.second) * action(m, t.first));
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Moment-map residual at every vertex carrying a preprojective relation.
template <class S>
std::map<int, Matrix<S>> check_relations(const QuiverRep<S>& m) {
  const auto algebra = PathAlgebra::preprojective(m.quiver);
  const auto res = relation_residuals(m, algebra);
  std::map<int, Matrix<S>> out;
  for (int v = 0; v < m.quiver.vertex_count(); ++v) {
    const auto d = m.dims[static_cast<std::size_t>(v)];
    out.emplace(v, Matrix<S>(d, d));
  }
  for (std::size_t k = 0; k < res.size(); ++k) out[algebra.relations()[k].source] = res[k];
  return out;
}

template <class S>
bool is_flat(const QuiverRep<S>& m) {
  for (const auto& r : relation_residuals(m, relations_for(m.quiver)))
    if (!r.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// submodules

template <class S>
std::vector<std::size_t> submodule_dims(const Submodule<S>& n) {
  std::vector<std::size_t> d;
  for (const auto& s : n) d.push_back(s.dim());
  return d;
}

template <class S>
DimVector submodule_dim_vector(const QuiverRep<S>& m, const Submodule<S>& n) {
  DimVector v;
  const int b = m.quiver.base_vertex_count();
  for (int k = 0; k < b; ++k) v.components.push_back(static_cast<long>(n[static_cast<std::size_t>(k)].dim()));
  if (m.quiver.framed()) v.at_infinity = static_cast<long>(n[static_cast<std::size_t>(b)].dim());
  return v;
}

template <class S>
bool is_submodule(const QuiverRep<S>& m, const Submodule<S>& n) {
  for (const auto& a : m.quiver.arrows()) {
    const auto& img = n[static_cast<std::size_t>(a.head)].image(m.maps[static_cast<std::size_t>(a.id)]);
    if (!n[static_cast<std::size_t>(a.tail)].contains(img)) return false;
  }
  return true;
}

template <class S>
Submodule<S> zero_submodule(const QuiverRep<S>& m) {
  Submodule<S> n;
  for (auto d : m.dims) n.push_back(Subspace<S>::zero(d));
  return n;
}

template <class S>
Submodule<S> full_submodule(const QuiverRep<S>& m) {
  Submodule<S> n;
  for (auto d : m.dims) n.push_back(Subspace<S>::full(d));
  return n;
}

/// Closes a family of subspaces under every arrow map.
template <class S>
Submodule<S> close_under_arrows(const QuiverRep<S>& m, Submodule<S> n) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : m.quiver.arrows()) {
      auto& target = n[static_cast<std::size_t>(a.tail)];
      const auto img = n[static_cast<std::size_t>(a.head)].image(m.maps[static_cast<std::size_t>(a.id)]);
      if (target.contains(img)) continue;
      target = target + img;
      changed = true;
    }
  }
  return n;
}

/// Least submodule containing the given vectors (vertex, coordinates).
template <class S>
Submodule<S> generated_submodule(const QuiverRep<S>& m, const std::vector<std::pair<int, std::vector<S>>>& seeds) {
  validate_shapes(m);
  Submodule<S> n = zero_submodule(m);
  for (const auto& [v, x] : seeds) {
    auto& s = n.at(static_cast<std::size_t>(v));
    if (x.size() != s.ambient()) throw Error(ErrorCode::kShapeMismatch, "seed vector length");
    s = s + Subspace<S>::from_rows(Matrix<S>::from_rows({x}));
  }
  return close_under_arrows(m, std::move(n));
}

template <class S>
Submodule<S> generated_by_vertices(const QuiverRep<S>& m, const std::vector<int>& vertices) {
  validate_shapes(m);
  Submodule<S> n = zero_submodule(m);
  for (int v : vertices) n.at(static_cast<std::size_t>(v)) = Subspace<S>::full(m.dims[static_cast<std::size_t>(v)]);
  return close_under_arrows(m, std::move(n));
}

/// Largest submodule vanishing at every vertex of `avoid` (greatest fixpoint).
template <class S>
Submodule<S> max_submodule_avoiding(const QuiverRep<S>& m, const std::vector<int>& avoid) {
  validate_shapes(m);
  Submodule<S> n = full_submodule(m);
  for (int v : avoid) n.at(static_cast<std::size_t>(v)) = Subspace<S>::zero(m.dims[static_cast<std::size_t>(v)]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : m.quiver.arrows()) {
      auto& source = n[static_cast<std::size_t>(a.head)];
      const auto allowed = Subspace<S>::preimage(m.maps[static_cast<std::size_t>(a.id)], n[static_cast<std::size_t>(a.tail)]);
      if (allowed.contains(source)) continue;
      source = source.intersect(allowed);
      changed = true;
    }
  }
  return n;
}

template <class S>
QuiverRep<S> sub_rep(const QuiverRep<S>& m, const Submodule<S>& n) {
  QuiverRep<S> out{m.quiver, submodule_dims(n), {}};
  for (const auto& a : m.quiver.arrows()) {
    const auto& src = n[static_cast<std::size_t>(a.head)];
    const auto& dst = n[static_cast<std::size_t>(a.tail)];
    if (src.dim() == 0 || dst.dim() == 0) {
      out.maps.emplace_back(dst.dim(), src.dim());
      continue;
    }
    const auto x = solve(dst.basis_columns(), m.maps[static_cast<std::size_t>(a.id)] * src.basis_columns());
    if (!x) throw Error(ErrorCode::kShapeMismatch, "family is not closed under arrow " + std::to_string(a.id));
    out.maps.push_back(*x);
  }
  return out;
}

namespace detail {

/// Columns completing the subspace to a basis, and the projection onto them.
template <class S>
std::pair<Matrix<S>, Matrix<S>> complement_and_projection(const Subspace<S>& s) {
  const std::size_t n = s.ambient();
  std::vector<bool> pivot(n, false);
  for (auto p : s.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) free.push_back(j);
  const Matrix<S> e = Matrix<S>::identity(n).select_columns(free);
  const Matrix<S> basis = hstack(s.basis_columns(), e);
  const Matrix<S> inv = *inverse(basis);
  return {e, inv.block(s.dim(), 0, free.size(), n)};
}

}  // namespace detail

template <class S>
QuiverRep<S> quotient_rep(const QuiverRep<S>& m, const Submodule<S>& n) {
  std::vector<Matrix<S>> lift, proj;
  QuiverRep<S> out{m.quiver, {}, {}};
  for (std::size_t v = 0; v < n.size(); ++v) {
    auto [e, p] = detail::complement_and_projection(n[v]);
    out.dims.push_back(e.cols());
    lift.push_back(std::move(e));
    proj.push_back(std::move(p));
  }
  for (const auto& a : m.quiver.arrows()) {
    out.maps.push_back(proj[static_cast<std::size_t>(a.tail)] * m.maps[static_cast<std::size_t>(a.id)] *
                       lift[static_cast<std::size_t>(a.head)]);
  }
  return out;
}

template <class S>
QuiverRep<S> direct_sum(const QuiverRep<S>& a, const QuiverRep<S>& b) {
  if (!(a.quiver == b.quiver)) throw Error(ErrorCode::kShapeMismatch, "direct sum of reps of different quivers");
  QuiverRep<S> out{a.quiver, {}, {}};
  for (std::size_t v = 0; v < a.dims.size(); ++v) out.dims.push_back(a.dims[v] + b.dims[v]);
  for (const auto& arr : a.quiver.arrows()) {
    const auto& x = a.maps[static_cast<std::size_t>(arr.id)];
    const auto& y = b.maps[static_cast<std::size_t>(arr.id)];
    Matrix<S> z(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) z(x.rows() + i, x.cols() + j) = y(i, j);
    out.maps.push_back(std::move(z));
  }
  return out;
}

/// One-dimensional at `vertex`, zero elsewhere, all arrows zero.
template <class S>
QuiverRep<S> vertex_simple(const Quiver& q, int vertex) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(q.vertex_count()), 0);
  dims.at(static_cast<std::size_t>(vertex)) = 1;
  return zero_rep<S>(q, dims);
}

/// maps[a] -> P_{t(a)} maps[a] P_{h(a)}^{-1}
template <class S>
QuiverRep<S> base_change(const QuiverRep<S>& m, const std::vector<Matrix<S>>& p) {
  std::vector<Matrix<S>> inv;
  for (const auto& x : p) {
    auto i = inverse(x);
    if (!i) throw Error(ErrorCode::kShapeMismatch, "base change matrix is singular");
    inv.push_back(*i);
  }
  QuiverRep<S> out = m;
  for (const auto& a : m.quiver.arrows()) {
    out.maps[static_cast<std::size_t>(a.id)] =
        p[static_cast<std::size_t>(a.tail)] * m.maps[static_cast<std::size_t>(a.id)] * inv[static_cast<std::size_t>(a.head)];
  }
  return out;
}

template <class S>
Matrix<S> random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int spread = 3) {
  Matrix<S> x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) x(i, j) = random_scalar<S>(rng, spread);
  return x;
}

template <class S>
Matrix<S> random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto x = random_matrix<S>(n, n, rng);
    if (is_invertible(x)) return x;
  }
}

/// Basis of the space of morphisms a -> b: families phi_v with
/// b.maps[x] phi_{h(x)} = phi_{t(x)} a.maps[x] for every arrow x.
template <class S>
std::vector<std::vector<Matrix<S>>> morphism_space(const QuiverRep<S>& a, const QuiverRep<S>& b) {
  if (!(a.quiver == b.quiver)) throw Error(ErrorCode::kShapeMismatch, "morphisms between reps of different quivers");
  const std::size_t nv = a.dims.size();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + b.dims[v] * a.dims[v];
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * a.dims[v] + c; };
  std::vector<std::vector<S>> eqs;
  for (const auto& x : a.quiver.arrows()) {
    const auto t = static_cast<std::size_t>(x.tail), h = static_cast<std::size_t>(x.head);
    const auto& ax = a.maps[static_cast<std::size_t>(x.id)];
    const auto& bx = b.maps[static_cast<std::size_t>(x.id)];
    for (std::size_t r = 0; r < b.dims[t]; ++r) {
      for (std::size_t c = 0; c < a.dims[h]; ++c) {
        std::vector<S> row(offset[nv], S(0));
        for (std::size_t k = 0; k < b.dims[h]; ++k) row[var(h, k, c)] += bx(r, k);
        for (std::size_t k = 0; k < a.dims[t]; ++k) row[var(t, r, k)] -= ax(k, c);
        eqs.push_back(std::move(row));
      }
    }
  }
  const Matrix<S> sol = eqs.empty() ? Matrix<S>::identity(offset[nv]) : kernel(Matrix<S>::from_rows(eqs, offset[nv]));
  std::vector<std::vector<Matrix<S>>> out;
  for (std::size_t k = 0; k < sol.cols(); ++k) {
    std::vector<Matrix<S>> phi;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix<S> p(b.dims[v], a.dims[v]);
      for (std::size_t r = 0; r < b.dims[v]; ++r)
        for (std::size_t c = 0; c < a.dims[v]; ++c) p(r, c) = sol(var(v, r, c), k);
      phi.push_back(std::move(p));
    }
    out.push_back(std::move(phi));
  }
  return out;
}

/// True iff some morphism a -> b is invertible at every vertex. Random
/// combinations of a morphism basis (fixed seed) are tried and any candidate is
/// verified exactly; over small prime fields a false negative is possible in
/// principle, so callers compare over the rationals.
template <class S>
bool are_isomorphic(const QuiverRep<S>& a, const QuiverRep<S>& b, std::uint64_t seed = 17, int attempts = 24) {
  if (!(a.quiver == b.quiver) || a.dims != b.dims) return false;
  const auto basis = morphism_space(a, b);
  if (a.total_dim() == 0) return true;
  if (basis.empty()) return false;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < attempts; ++t) {
    std::vector<Matrix<S>> phi;
    for (auto d : a.dims) phi.emplace_back(d, d);
    for (const auto& f : basis) {
      const S c = random_scalar<S>(rng, 7);
      for (std::size_t v = 0; v < phi.size(); ++v) phi[v] = phi[v] + c * f[v];
    }
    bool ok = true;
    for (const auto& p : phi) ok = ok && is_invertible(p);
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// random flat representations

/// Random positive-arrow matrices (each zeroed with probability zero_chance),
/// then a random solution of the relations for the bar arrows. For a tripled
/// quiver every loop acts by the same random scalar.
template <class S>
QuiverRep<S> random_flat_rep(const Quiver& q, const std::vector<std::size_t>& dims, std::mt19937_64& rng,
                             double zero_chance = 0.25) {
  QuiverRep<S> m = zero_rep<S>(q, dims);
  std::bernoulli_distribution zero(zero_chance);
  std::vector<int> unknown_arrows;
  std::vector<std::size_t> offset{0};
  for (const auto& a : q.arrows()) {
    if (!a.bar) continue;
    if (q.is_positive(a.id)) {
      auto& x = m.maps[static_cast<std::size_t>(a.id)];
      if (!zero(rng)) x = random_matrix<S>(x.rows(), x.cols(), rng);
    } else {
      unknown_arrows.push_back(a.id);
      const auto& x = m.maps[static_cast<std::size_t>(a.id)];
      offset.push_back(offset.back() + x.rows() * x.cols());
    }
  }
  const std::size_t nvars = offset.back();
  std::map<int, std::size_t> slot;
  for (std::size_t k = 0; k < unknown_arrows.size(); ++k) slot[unknown_arrows[k]] = k;
  auto var = [&](int arrow, std::size_t r, std::size_t c) {
    const auto k = slot.at(arrow);
    return offset[k] + r * m.maps[static_cast<std::size_t>(arrow)].cols() + c;
  };

  // at v: sum_{pos a, h(a)=v} Y_a X_a - sum_{pos a, t(a)=v} X_a Y_a with Y_a = maps[bar a]
  std::vector<std::vector<S>> eqs;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const auto d = dims[static_cast<std::size_t>(v)];
    std::vector<std::vector<S>> rows(d * d, std::vector<S>(nvars, S(0)));
    for (const auto& a : q.arrows()) {
      if (!a.bar || !q.is_positive(a.id)) continue;
      const auto& x = m.maps[static_cast<std::size_t>(a.id)];
      const int y = *a.bar;
      if (a.head == v) {
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t k = 0; k < x.rows(); ++k) rows[r * d + c][var(y, r, k)] += x(k, c);
      }
      if (a.tail == v) {
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t k = 0; k < x.cols(); ++k) rows[r * d + c][var(y, k, c)] -= x(r, k);
      }
    }
    for (auto& r : rows) eqs.push_back(std::move(r));
  }
  if (nvars > 0) {
    const Matrix<S> sol = eqs.empty() ? Matrix<S>::identity(nvars) : kernel(Matrix<S>::from_rows(eqs, nvars));
    std::vector<S> pick(nvars, S(0));
    for (std::size_t k = 0; k < sol.cols(); ++k) {
      const S c = random_scalar<S>(rng);
      for (std::size_t i = 0; i < nvars; ++i) pick[i] += c * sol(i, k);
    }
    for (int y : unknown_arrows) {
      auto& x = m.maps[static_cast<std::size_t>(y)];
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) = pick[var(y, r, c)];
    }
  }
  if (q.tripled()) {
    const S lambda = random_scalar<S>(rng);
    for (int l : q.loops()) {
      auto& x = m.maps[static_cast<std::size_t>(l)];
      x = lambda * Matrix<S>::identity(x.rows());
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// theta_I stability

/// Recovers I from a parameter of the form theta_I(I, v) for dims (1, v);
/// throws kUnsupportedTheta otherwise.
std::vector<int> corner_of_theta(const Quiver& q, const DimVector& dims, const StabilityParam& theta);

template <class S>
std::vector<int> corner_of_theta(const QuiverRep<S>& m, const StabilityParam& theta) {
  return corner_of_theta(m.quiver, m.dim_vector(), theta);
}

template <class S>
bool is_semistable_for(const QuiverRep<S>& m, const std::vector<int>& I) {
  const int inf = *m.quiver.infinity();
  const auto g = generated_by_vertices(m, {inf});
  for (int i : I)
    if (g[static_cast<std::size_t>(i)].dim() != m.dims[static_cast<std::size_t>(i)]) return false;
  return true;
}

template <class S>
bool is_stable_for(const QuiverRep<S>& m, const std::vector<int>& I) {
  const int inf = *m.quiver.infinity();
  const auto g = generated_by_vertices(m, {inf});
  if (submodule_dims(g) != m.dims) return false;
  std::vector<int> avoid = I;
  avoid.push_back(inf);
  const auto k = max_submodule_avoiding(m, avoid);
  for (const auto& s : k)
    if (s.dim() != 0) return false;
  return true;
}

template <class S>
bool is_semistable(const QuiverRep<S>& m, const StabilityParam& theta) {
  return is_semistable_for(m, corner_of_theta(m, theta));
}

template <class S>
bool is_stable(const QuiverRep<S>& m, const StabilityParam& theta) {
  return is_stable_for(m, corner_of_theta(m, theta));
}

// ---------------------------------------------------------------------------
// exhaustive search over F_p

constexpr std::size_t kBruteForceMaxDim = 8;

/// Every subspace of F_P^n in canonical form.
template <std::uint32_t P>
const std::vector<Subspace<ModP<P>>>& all_subspaces(std::size_t n) {
  static std::map<std::size_t, std::vector<Subspace<ModP<P>>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  using F = ModP<P>;
  std::vector<Subspace<F>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> piv(k);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t from) {
      if (idx == k) {
        std::vector<std::pair<std::size_t, std::size_t>> free;
        std::vector<bool> is_piv(n, false);
        for (auto p : piv) is_piv[p] = true;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = piv[r] + 1; c < n; ++c)
            if (!is_piv[c]) free.emplace_back(r, c);
        std::vector<std::uint32_t> digits(free.size(), 0);
        for (;;) {
          Matrix<F> rows(k, n);
          for (std::size_t r = 0; r < k; ++r) rows(r, piv[r]) = F(1);
          for (std::size_t f = 0; f < free.size(); ++f) rows(free[f].first, free[f].second) = F(digits[f]);
          out.push_back(Subspace<F>::from_rows(rows));
          std::size_t pos = 0;
          while (pos < digits.size() && ++digits[pos] == P) digits[pos++] = 0;
          if (pos == digits.size()) break;
        }
        return;
      }
      for (std::size_t p = from; p + (k - idx) <= n; ++p) {
        piv[idx] = p;
        choose(idx + 1, p + 1);
      }
    };
    choose(0, 0);
  }
  return cache.emplace(n, std::move(out)).first->second;
}

/// Calls visit on every submodule of m (including 0 and m).
template <std::uint32_t P>
void enumerate_submodules(const QuiverRep<ModP<P>>& m, const std::function<void(const Submodule<ModP<P>>&)>& visit) {
  validate_shapes(m);
  if (m.total_dim() > kBruteForceMaxDim) {
    throw Error(ErrorCode::kDimensionTooLarge, "total dimension " + std::to_string(m.total_dim()) + " exceeds " +
                                                   std::to_string(kBruteForceMaxDim));
  }
  using F = ModP<P>;
  const std::size_t nv = m.dims.size();
  Submodule<F> current(nv);
  std::vector<bool> assigned(nv, false);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == nv) {
      visit(current);
      return;
    }
    for (const auto& s : all_subspaces<P>(m.dims[v])) {
      current[v] = s;
      assigned[v] = true;
      bool ok = true;
      for (const auto& a : m.quiver.arrows()) {
        const auto t = static_cast<std::size_t>(a.tail), h = static_cast<std::size_t>(a.head);
        if ((t != v && h != v) || !assigned[t] || !assigned[h]) continue;
        if (!current[t].contains(current[h].image(m.maps[static_cast<std::size_t>(a.id)]))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(v + 1);
      assigned[v] = false;
    }
  };
  rec(0);
}

struct BruteForceReport {
  bool semistable = false;
  bool stable = false;
  std::vector<DimVector> violating;  // dims of nonzero proper submodules with theta <= 0
  std::size_t submodules = 0;
};

template <std::uint32_t P>
BruteForceReport brute_force_stability(const QuiverRep<ModP<P>>& m, const StabilityParam& theta) {
  const DimVector total = m.dim_vector();
  BruteForceReport rep;
  rep.semistable = theta.evaluate(total) == 0;
  rep.stable = rep.semistable;
  std::vector<DimVector> bad;
  enumerate_submodules<P>(m, [&](const Submodule<ModP<P>>& n) {
    ++rep.submodules;
    const DimVector d = submodule_dim_vector(m, n);
    const bool zero = d.total() == 0;
    const bool whole = d == total;
    if (zero || whole) return;
    const Rational value = theta.evaluate(d);
    if (value < 0) rep.semistable = false;
    if (value <= 0) {
      rep.stable = false;
      if (std::find(bad.begin(), bad.end(), d) == bad.end()) bad.push_back(d);
    }
  });
  if (!rep.semistable) rep.stable = false;
  std::sort(bad.begin(), bad.end(), [](const DimVector& a, const DimVector& b) { return a.to_string() < b.to_string(); });
  rep.violating = std::move(bad);
  return rep;
}

template <std::uint32_t P>
QuiverRep<ModP<P>> reduce_rep(const FramedRep& m) {
  QuiverRep<ModP<P>> out{m.quiver, m.dims, {}};
  for (const auto& x : m.maps) {
    Matrix<ModP<P>> y(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) y(i, j) = reduce_mod<P>(x(i, j));
    out.maps.push_back(std::move(y));
  }
  return out;
}

/// Reduces a rational rep modulo p in {2, 3, 5, 7} and runs the exhaustive check.
/// Reduction can change the module (ranks drop mod p), so compare against
/// specialized_stability_mod rather than the rational verdict.
BruteForceReport brute_force_stability(const FramedRep& m, const StabilityParam& theta, std::uint32_t prime = 2);

struct StabilityVerdict {
  bool semistable = false;
  bool stable = false;
  friend bool operator==(const StabilityVerdict&, const StabilityVerdict&) = default;
};

/// The theta_I test applied to the reduction of m modulo p in {2, 3, 5, 7}.
StabilityVerdict specialized_stability_mod(const FramedRep& m, const std::vector<int>& corner, std::uint32_t prime);

// ---------------------------------------------------------------------------
// polystable decomposition and S-equivalence

template <class S>
struct PolystableDecomposition {
  QuiverRep<S> core;                                // theta_I-stable, contains the framing
  std::vector<std::pair<int, std::size_t>> simples;  // (vertex outside I, multiplicity)

  std::vector<QuiverRep<S>> summands() const {
    std::vector<QuiverRep<S>> out{core};
    for (const auto& [v, k] : simples)
      for (std::size_t c = 0; c < k; ++c) out.push_back(vertex_simple<S>(core.quiver, v));
    return out;
  }
};

template <class S>
PolystableDecomposition<S> polystable_decomposition(const QuiverRep<S>& m, const std::vector<int>& corner) {
  const auto I = normalize_corner(corner, m.quiver.base_vertex_count());
  if (!is_semistable_for(m, I)) throw Error(ErrorCode::kNotSemistable, "module is not theta_I-semistable");
  const int inf = *m.quiver.infinity();
  const auto g = sub_rep(m, generated_by_vertices(m, {inf}));
  std::vector<int> avoid = I;
  avoid.push_back(inf);
  PolystableDecomposition<S> out{quotient_rep(g, max_submodule_avoiding(g, avoid)), {}};
  for (int v = 0; v < m.quiver.base_vertex_count(); ++v) {
    const auto k = m.dims[static_cast<std::size_t>(v)] - out.core.dims[static_cast<std::size_t>(v)];
    if (k > 0) out.simples.emplace_back(v, k);
  }
  return out;
}

template <class S>
bool s_equivalent(const QuiverRep<S>& a, const QuiverRep<S>& b, const std::vector<int>& corner) {
  if (!(a.quiver == b.quiver) || a.dims != b.dims) return false;
  const auto da = polystable_decomposition(a, corner);
  const auto db = polystable_decomposition(b, corner);
  return da.simples == db.simples && are_isomorphic(da.core, db.core);
}

}  // namespace mckay
