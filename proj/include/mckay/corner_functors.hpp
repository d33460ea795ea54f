#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "mckay/graded_algebra.hpp"
#include "mckay/rep_theory.hpp"

namespace mckay {

/// A path from one corner vertex to another (traversal order) whose interior
/// avoids the corner, or a loop at a corner vertex.
struct CornerGenerator {
  int source = 0;
  int target = 0;
  Path path;
  int degree() const { return static_cast<int>(path.size()); }
};

/// A corner path that was dropped because its class is a combination of
/// generators of the same endpoints and degree.
struct DependentPath {
  CornerGenerator path;
  std::vector<std::pair<int, Rational>> combination;  // (generator index, coefficient)
};

/// e_I A e_I presented by generators. Every path that leaves the corner and
/// stays outside it for more than `bound` steps lies in A e_I A, so paths of
/// length at most bound + 2 (plus the loops at I) generate.
class CornerAlgebra {
 public:
  CornerAlgebra(PathAlgebra algebra, const std::vector<int>& corner);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const Quiver& quiver() const { return algebra_->algebra().quiver(); }
  const std::vector<int>& corner() const { return corner_; }
  int position(int vertex) const;  // index of a corner vertex, or -1
  int bound() const { return bound_; }
  const std::vector<CornerGenerator>& generators() const { return generators_; }
  const std::vector<DependentPath>& dependent() const { return dependent_; }
  int max_generator_degree() const;

 private:
  std::shared_ptr<GradedAlgebra> algebra_;
  std::vector<int> corner_;
  int bound_ = 0;
  std::vector<CornerGenerator> generators_;
  std::vector<DependentPath> dependent_;
};

/// Finite-dimensional module over a corner algebra: one space per corner vertex
/// and a matrix per generator (component at source -> component at target).
template <class S>
struct CornerModule {
  std::vector<int> corner;
  std::vector<std::size_t> dims;     // aligned with corner
  std::vector<Matrix<S>> actions;    // aligned with the generators

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
  }
  friend bool operator==(const CornerModule&, const CornerModule&) = default;
};

/// e_I M with the generators acting along their paths.
template <class S>
CornerModule<S> j_star(const QuiverRep<S>& m, const CornerAlgebra& c) {
  validate_shapes(m);
  if (!(m.quiver == c.quiver())) throw Error(ErrorCode::kShapeMismatch, "module and corner algebra use different quivers");
  CornerModule<S> out;
  out.corner = c.corner();
  for (int i : c.corner()) out.dims.push_back(m.dims[static_cast<std::size_t>(i)]);
  for (const auto& g : c.generators()) out.actions.push_back(action_of_path(m, g.source, g.path));
  // a dropped path has to act as the combination it equals in the algebra
  for (const auto& d : c.dependent()) {
    Matrix<S> direct = action_of_path(m, d.path.source, d.path.path);
    Matrix<S> combo(direct.rows(), direct.cols());
    for (const auto& [k, coef] : d.combination) combo = combo + from_rational<S>(coef) * out.actions[static_cast<std::size_t>(k)];
    if (direct != combo) {
      throw Error(ErrorCode::kRepresentativeDependence,
                  "corner element from " + std::to_string(d.path.source) + " to " + std::to_string(d.path.target) +
                      " acts differently through different representatives");
    }
  }
  return out;
}

/// Least corner submodule containing a set of vectors (corner position, coordinates).
template <class S>
std::vector<Subspace<S>> corner_generated(const CornerModule<S>& z, const CornerAlgebra& c,
                                          const std::vector<std::pair<int, std::vector<S>>>& seeds) {
  std::vector<Subspace<S>> n;
  for (auto d : z.dims) n.push_back(Subspace<S>::zero(d));
  for (const auto& [pos, x] : seeds) n.at(static_cast<std::size_t>(pos)) = n[static_cast<std::size_t>(pos)] + Subspace<S>::from_rows(Matrix<S>::from_rows({x}));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t g = 0; g < c.generators().size(); ++g) {
      const auto& gen = c.generators()[g];
      const auto s = static_cast<std::size_t>(c.position(gen.source));
      const auto t = static_cast<std::size_t>(c.position(gen.target));
      const auto img = n[s].image(z.actions[g]);
      if (n[t].contains(img)) continue;
      n[t] = n[t] + img;
      changed = true;
    }
  }
  return n;
}

/// Morphism Z -> Z' of corner modules: one matrix per corner vertex.
template <class S>
bool is_corner_morphism(const CornerModule<S>& a, const CornerModule<S>& b, const CornerAlgebra& c,
                        const std::vector<Matrix<S>>& f) {
  for (std::size_t g = 0; g < c.generators().size(); ++g) {
    const auto& gen = c.generators()[g];
    const auto s = static_cast<std::size_t>(c.position(gen.source));
    const auto t = static_cast<std::size_t>(c.position(gen.target));
    if (b.actions[g] * f[s] != f[t] * a.actions[g]) return false;
  }
  return true;
}

/// Result of extending a corner module to the whole algebra.
struct ShriekResult {
  FramedRep module;                 // a representation of the full quiver (framed or not)
  std::vector<Matrix<Rational>> unit;  // per corner vertex: x -> e_i (x) x
  int truncation = 0;                // degree at which the certificate was obtained
};

constexpr int kShriekWindow = 4;
constexpr int kShriekCap = 24;

/// A e_I (x)_{e_I A e_I} Z, built degree by degree until the top `window`
/// degrees carry no basis vectors and the dimension has stopped changing.
ShriekResult j_shriek(const CornerModule<Rational>& z, const CornerAlgebra& c, int window = kShriekWindow,
                      int cap = kShriekCap);

/// j_shriek(f) for a morphism f: Z -> Z' (one matrix per corner vertex).
/// Returns the per-vertex matrices between j_shriek(Z) and j_shriek(Z').
std::vector<Matrix<Rational>> j_shriek_morphism(const CornerModule<Rational>& z, const CornerModule<Rational>& z2,
                                                const std::vector<Matrix<Rational>>& f, const CornerAlgebra& c,
                                                ShriekResult* source_out = nullptr, ShriekResult* target_out = nullptr);

/// Checks that the unit Z -> j_star(j_shriek Z) is an isomorphism of corner modules.
bool round_trip_identity(const CornerModule<Rational>& z, const ShriekResult& r, const CornerAlgebra& c);

// ---------------------------------------------------------------------------
// truncated graded modules

/// An action of a homogeneous algebra element: degree k at `source` to degree
/// k + shift at `target`. matrices[k - k0] is defined while k + shift <= k1.
template <class S>
struct GradedAction {
  std::string label;
  int source = 0;
  int target = 0;
  int shift = 1;
  bool is_z = false;
  std::vector<Matrix<S>> matrices;

  friend bool operator==(const GradedAction&, const GradedAction&) = default;
};

template <class S>
struct TruncatedGradedModule {
  AlgebraKind kind;
  int k0 = 0;
  int k1 = 0;
  std::vector<int> vertices;
  std::vector<std::vector<std::size_t>> dims;  // [k - k0][vertex position]
  std::vector<GradedAction<S>> actions;

  std::size_t dim(int k, std::size_t pos) const { return dims.at(static_cast<std::size_t>(k - k0)).at(pos); }
  int position(int vertex) const {
    for (std::size_t p = 0; p < vertices.size(); ++p)
      if (vertices[p] == vertex) return static_cast<int>(p);
    return -1;
  }
  friend bool operator==(const TruncatedGradedModule&, const TruncatedGradedModule&) = default;
};

template <class S>
void validate_graded(const TruncatedGradedModule<S>& m) {
  if (m.k1 < m.k0) throw Error(ErrorCode::kShapeMismatch, "empty degree window");
  if (m.dims.size() != static_cast<std::size_t>(m.k1 - m.k0 + 1)) throw Error(ErrorCode::kShapeMismatch, "degree count");
  for (const auto& row : m.dims)
    if (row.size() != m.vertices.size()) throw Error(ErrorCode::kShapeMismatch, "vertex count");
  for (const auto& a : m.actions) {
    const int s = m.position(a.source), t = m.position(a.target);
    if (s < 0 || t < 0 || a.shift < 1) throw Error(ErrorCode::kShapeMismatch, "action " + a.label);
    const int n = std::max(0, m.k1 - m.k0 - a.shift + 1);
    if (a.matrices.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::kShapeMismatch, "action " + a.label + " degree count");
    for (int k = m.k0; k + a.shift <= m.k1; ++k) {
      const auto& x = a.matrices[static_cast<std::size_t>(k - m.k0)];
      if (x.rows() != m.dim(k + a.shift, static_cast<std::size_t>(t)) || x.cols() != m.dim(k, static_cast<std::size_t>(s))) {
        throw Error(ErrorCode::kShapeMismatch, "action " + a.label + " in degree " + std::to_string(k));
      }
    }
  }
}

/// Per degree k in [k0, k1 - 1] and vertex: kernel of z from degree k to k + 1,
/// as a subspace of the degree-k component.
template <class S>
std::vector<std::vector<Subspace<S>>> z_torsion(const TruncatedGradedModule<S>& m) {
  validate_graded(m);
  if (m.k1 - m.k0 < 1) throw Error(ErrorCode::kShapeMismatch, "window needs at least two degrees");
  std::vector<std::vector<Subspace<S>>> out;
  for (int k = m.k0; k < m.k1; ++k) {
    std::vector<Subspace<S>> row;
    for (std::size_t p = 0; p < m.vertices.size(); ++p) {
      const auto d = m.dim(k, p);
      Subspace<S> ker = Subspace<S>::full(d);
      for (const auto& a : m.actions) {
        if (!a.is_z || m.position(a.source) != static_cast<int>(p)) continue;
        ker = ker.intersect(Subspace<S>::from_columns(kernel(a.matrices[static_cast<std::size_t>(k - m.k0)])));
      }
      row.push_back(ker);
    }
    out.push_back(std::move(row));
  }
  return out;
}

template <class S>
bool is_z_torsion_free(const TruncatedGradedModule<S>& m) {
  for (const auto& row : z_torsion(m))
    for (const auto& s : row)
      if (s.dim() != 0) return false;
  return true;
}

/// Degreewise quotient by the image of z. Every action must preserve that
/// image (checked); z itself becomes zero.
template <class S>
TruncatedGradedModule<S> c_star(const TruncatedGradedModule<S>& m) {
  validate_graded(m);
  if (m.k1 - m.k0 < 1) throw Error(ErrorCode::kShapeMismatch, "window needs at least two degrees");
  // image of z in each degree and vertex
  std::vector<std::vector<Subspace<S>>> image;
  for (int k = m.k0; k <= m.k1; ++k) {
    std::vector<Subspace<S>> row;
    for (std::size_t p = 0; p < m.vertices.size(); ++p) row.push_back(Subspace<S>::zero(m.dim(k, p)));
    image.push_back(std::move(row));
  }
  for (const auto& a : m.actions) {
    if (!a.is_z) continue;
    const auto s = static_cast<std::size_t>(m.position(a.source)), t = static_cast<std::size_t>(m.position(a.target));
    for (int k = m.k0; k + a.shift <= m.k1; ++k) {
      auto& dst = image[static_cast<std::size_t>(k + a.shift - m.k0)][t];
      dst = dst + Subspace<S>::full(m.dim(k, s)).image(a.matrices[static_cast<std::size_t>(k - m.k0)]);
    }
  }
  std::vector<std::vector<std::pair<Matrix<S>, Matrix<S>>>> maps;  // (lift, projection)
  TruncatedGradedModule<S> out{m.kind, m.k0, m.k1, m.vertices, {}, {}};
  for (int k = m.k0; k <= m.k1; ++k) {
    std::vector<std::size_t> row;
    std::vector<std::pair<Matrix<S>, Matrix<S>>> lp;
    for (std::size_t p = 0; p < m.vertices.size(); ++p) {
      auto pr = detail::complement_and_projection(image[static_cast<std::size_t>(k - m.k0)][p]);
      row.push_back(pr.first.cols());
      lp.push_back(std::move(pr));
    }
    out.dims.push_back(std::move(row));
    maps.push_back(std::move(lp));
  }
  for (const auto& a : m.actions) {
    GradedAction<S> b{a.label, a.source, a.target, a.shift, a.is_z, {}};
    const auto s = static_cast<std::size_t>(m.position(a.source)), t = static_cast<std::size_t>(m.position(a.target));
    for (int k = m.k0; k + a.shift <= m.k1; ++k) {
      const auto& x = a.matrices[static_cast<std::size_t>(k - m.k0)];
      const auto& from = image[static_cast<std::size_t>(k - m.k0)][s];
      const auto& to = image[static_cast<std::size_t>(k + a.shift - m.k0)][t];
      if (!to.contains(from.image(x))) {
        throw Error(ErrorCode::kRelationViolation, "action " + a.label + " does not preserve the image of z");
      }
      const auto& lift = maps[static_cast<std::size_t>(k - m.k0)][s].first;
      const auto& proj = maps[static_cast<std::size_t>(k + a.shift - m.k0)][t].second;
      b.matrices.push_back(proj * x * lift);
    }
    out.actions.push_back(std::move(b));
  }
  return out;
}

/// The graded free module A e_source (corner components only when the algebra
/// is cornered) in degrees k0..k1, with arrow actions (or corner generator
/// actions) and z acting as the sum of the loops.
TruncatedGradedModule<Rational> free_truncated_module(const GradedAlgebra& algebra, int source, int k0, int k1);

/// Relation residuals of a truncated module over a full (uncornered) algebra,
/// or z-commutation residuals for a cornered one; true when all vanish.
bool graded_relations_hold(const TruncatedGradedModule<Rational>& m, const PathAlgebra& algebra);

// ---------------------------------------------------------------------------
// the truncated corner of a projective, as a corner module

/// e_I A_{<= top} e_source as a module over the corner, with every action that
/// leaves the window set to zero. Basis: the standard monomials, per corner vertex.
CornerModule<Rational> truncated_corner_projective(const CornerAlgebra& c, int source, int top);

template <class S>
CornerModule<S> convert_corner(const CornerModule<Rational>& z) {
  CornerModule<S> out{z.corner, z.dims, {}};
  for (const auto& x : z.actions) {
    Matrix<S> y(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) y(i, j) = from_rational<S>(x(i, j));
    out.actions.push_back(std::move(y));
  }
  return out;
}

}  // namespace mckay
