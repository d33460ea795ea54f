#pragma once

#include <cstddef>
#include <vector>

#include "mckay/corner_functors.hpp"
#include "mckay/rep_theory.hpp"

namespace mckay {

/// For every i outside I: 2 v_i >= sum over neighbours j of v_j (with edge multiplicity).
bool is_sufficient(const DimVector& v, const std::vector<int>& corner, const Quiver& q);

/// Componentwise least sufficient vector agreeing with v on I (entries of v
/// outside I are ignored). Least fixpoint of v_i <- max(v_i, ceil(sum_adj v_j / 2)).
DimVector minimal_sufficient_completion(const DimVector& v, const std::vector<int>& corner, const Quiver& q,
                                        int max_rounds = 100000);

/// dims(m) <= minimal_sufficient_completion(dims(m) on I). Requires m to be
/// theta_I-stable (kNotStable otherwise) and its framing to sit inside I
/// (kUnsupportedCorner otherwise).
namespace detail {
void require_framing_in_corner(const Quiver& q, const std::vector<int>& corner);
}

template <class S>
bool dimension_bound_check(const QuiverRep<S>& m, const std::vector<int>& corner) {
  const auto I = normalize_corner(corner, m.quiver.base_vertex_count());
  detail::require_framing_in_corner(m.quiver, I);
  if (!is_stable_for(m, I)) throw Error(ErrorCode::kNotStable, "module is not theta_I-stable");
  DimVector base;
  base.components = m.dim_vector().components;
  return base.componentwise_le(minimal_sufficient_completion(base, I, m.quiver));
}

/// The theta_{I1}-polystable module of the same dimension that m maps to,
/// for m theta_{I2}-stable and I1 a nonempty subset of I2.
PolystableDecomposition<Rational> vgit_pushforward(const FramedRep& m, const std::vector<int>& from,
                                                   const std::vector<int>& to);

/// Pushes forward along a decreasing chain of corners, one step at a time,
/// keeping the vertex simples split off at every step.
PolystableDecomposition<Rational> vgit_chain(const FramedRep& m, const std::vector<std::vector<int>>& chain);

bool same_polystable(const PolystableDecomposition<Rational>& a, const PolystableDecomposition<Rational>& b);

/// ADHM data for a cyclic group: B1 lowers the weight by one, B2 raises it,
/// i maps framing weight f to weight f, j maps weight f to framing weight f.
struct AdhmData {
  GammaDescriptor group;
  Matrix<Rational> B1, B2, i, j;
  std::vector<int> weights;
  std::vector<int> framing_weights;
};

/// Splits equivariant ADHM data into a representation of the framed McKay
/// quiver. Throws kNotEquivariant, kMomentMapNonzero or kUnsupportedSeries.
FramedRep adhm_build_cyclic(const AdhmData& data);

/// ADHM data of C[x,y]/J for the monomial ideal J whose standard monomials
/// x^a y^b fill a Young diagram with the given (non-increasing) row lengths:
/// B1 = x, B2 = y, i(1) = 1, j = 0, weight of x^a y^b = b - a mod r+1.
AdhmData monomial_ideal_adhm(const GammaDescriptor& g, const std::vector<int>& rows);

/// The underlying representation of the unframed McKay quiver.
FramedRep unframed_part(const FramedRep& m);

/// A module over e_I Pi e_I with a vector in its component at vertex 0.
template <class S>
struct QuotModule {
  CornerModule<S> module;
  std::vector<S> marked;
};

/// Z = e_I M over e_I Pi e_I, marked by the image of the framing vector
/// (the framing must be a single arrow at vertex 0).
template <class S>
QuotModule<S> quot_module_of(const QuiverRep<S>& m, const CornerAlgebra& c) {
  const Quiver& q = m.quiver;
  if (!q.framed() || q.framing()->at(0) != 1) throw Error(ErrorCode::kUnsupportedCorner, "needs the framing 1 at vertex 0 only");
  for (std::size_t v = 1; v < q.framing()->size(); ++v)
    if ((*q.framing())[v] != 0) throw Error(ErrorCode::kUnsupportedCorner, "needs the framing 1 at vertex 0 only");
  QuiverRep<S> base{unframe_quiver(q), {}, {}};
  base.dims.assign(m.dims.begin(), m.dims.end() - 1);
  for (const auto& a : base.quiver.arrows()) base.maps.push_back(m.maps[static_cast<std::size_t>(a.id)]);
  QuotModule<S> out{j_star(base, c), {}};
  for (const auto& a : q.arrows()) {
    if (!q.is_framing_arrow(a.id) || q.is_positive(a.id)) continue;
    const auto& x = m.maps[static_cast<std::size_t>(a.id)];  // M_inf -> M_0
    out.marked = x.column(0);
  }
  return out;
}

/// Checks that p -> p * marked is a surjection from e_I Pi_{<= T} e_0 onto the
/// module, T = bound + window, and returns dims on Q_0 (zero outside I).
/// Throws kNotAQuotient when the module is too large, does not factor through
/// the truncation, or is not generated by the marked vector; kUnsupportedCorner
/// unless 0 lies in I and the algebra is the unframed Pi.
template <class S>
DimVector check_quot_correspondence(const QuotModule<S>& z, const CornerAlgebra& c, int window = 4) {
  const Quiver& q = c.quiver();
  if (q.framed() || q.tripled()) throw Error(ErrorCode::kUnsupportedCorner, "the Quot check runs over the unframed Pi");
  const int zero = c.position(0);
  if (zero < 0) throw Error(ErrorCode::kUnsupportedCorner, "vertex 0 must lie in I");
  const auto& mod = z.module;
  if (mod.corner != c.corner() || mod.actions.size() != c.generators().size()) {
    throw Error(ErrorCode::kShapeMismatch, "module does not match the corner algebra");
  }
  if (z.marked.size() != mod.dims[static_cast<std::size_t>(zero)]) throw Error(ErrorCode::kShapeMismatch, "marked vector length");
  const int top = c.bound() + window;
  const auto tower = c.algebra().tower(0, top);
  DimVector out;
  out.components.assign(static_cast<std::size_t>(q.base_vertex_count()), 0);
  for (std::size_t p = 0; p < c.corner().size(); ++p) {
    const int i = c.corner()[p];
    std::size_t available = 0;
    for (int k = 0; k <= top; ++k) available += tower->dim(k, i);
    if (mod.dims[p] > available) {
      throw Error(ErrorCode::kNotAQuotient, "dimension " + std::to_string(mod.dims[p]) + " at vertex " + std::to_string(i) +
                                               " exceeds " + std::to_string(available) + " available up to degree " +
                                               std::to_string(top));
    }
    out.components[static_cast<std::size_t>(i)] = static_cast<long>(mod.dims[p]);
  }
  // images of the degree-k part of e_I Pi e_0
  const int extra = c.max_generator_degree();
  std::vector<std::vector<Subspace<S>>> w;
  for (int k = 0; k <= top + extra; ++k) {
    std::vector<Subspace<S>> row;
    for (auto d : mod.dims) row.push_back(Subspace<S>::zero(d));
    if (k == 0) {
      row[static_cast<std::size_t>(zero)] = Subspace<S>::from_rows(Matrix<S>::from_rows({z.marked}));
    }
    for (std::size_t g = 0; g < c.generators().size(); ++g) {
      const auto& gen = c.generators()[g];
      if (gen.degree() > k) continue;
      const auto s = static_cast<std::size_t>(c.position(gen.source)), t = static_cast<std::size_t>(c.position(gen.target));
      row[t] = row[t] + w[static_cast<std::size_t>(k - gen.degree())][s].image(mod.actions[g]);
    }
    if (k > top) {
      for (const auto& s : row)
        if (s.dim() != 0) {
          throw Error(ErrorCode::kNotAQuotient, "degree " + std::to_string(k) + " acts nontrivially on the marked vector");
        }
    }
    w.push_back(std::move(row));
  }
  for (std::size_t p = 0; p < mod.dims.size(); ++p) {
    Subspace<S> span = Subspace<S>::zero(mod.dims[p]);
    for (int k = 0; k <= top; ++k) span = span + w[static_cast<std::size_t>(k)][p];
    if (span.dim() != mod.dims[p]) {
      throw Error(ErrorCode::kNotAQuotient, "marked vector does not generate the component at vertex " +
                                               std::to_string(c.corner()[p]));
    }
  }
  return out;
}

}  // namespace mckay
