#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mckay/gamma_data.hpp"
#include "mckay/matrix.hpp"
#include "mckay/quiver.hpp"
#include "mckay/sparse.hpp"

namespace mckay {

/// Arrow ids in traversal order. Products are written right to left: p * q
/// traverses q first, so the path list of p * q is q's list followed by p's.
using Path = std::vector<int>;

struct RelationTerm {
  Rational coefficient;
  int first;   // traversed first
  int second;  // traversed second
};

/// Homogeneous quadratic relation: a combination of length-2 paths source -> target.
struct Relation {
  int source = 0;
  int target = 0;
  std::vector<RelationTerm> terms;
};

constexpr int kDefaultDegreeCap = 16;

/// Path algebra of a quiver modulo quadratic relations, with optionally some
/// vertices killed (the quotient by the two-sided ideal they generate).
class PathAlgebra {
 public:
  PathAlgebra(Quiver quiver, std::vector<Relation> relations);

  /// Pi (doubled quiver) or Pi^w (framed quiver): at each vertex v,
  /// sum over positive a with h(a)=v of (abar then a) minus sum over positive a
  /// with t(a)=v of (a then abar).
  static PathAlgebra preprojective(const Quiver& q);
  /// Pi-bullet on a tripled quiver: the preprojective relations plus
  /// (a then d_{h(a)}) - (d_{t(a)} then a) for every non-loop arrow a.
  static PathAlgebra graded_preprojective(const Quiver& tripled);

  /// Quotient by the ideal generated by e_v, v in killed.
  PathAlgebra kill_vertices(const std::vector<int>& killed) const;
  /// Drops loop arrows and every relation term that uses one.
  PathAlgebra without_loops() const;

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  bool vertex_alive(int v) const { return alive_vertex_[static_cast<std::size_t>(v)]; }
  bool arrow_alive(int a) const { return alive_arrow_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& arrows_from(int v) const { return out_arrows_[static_cast<std::size_t>(v)]; }
  int vertex_count() const { return quiver_.vertex_count(); }

 private:
  void index_arrows();

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<bool> alive_vertex_;
  std::vector<bool> alive_arrow_;
  std::vector<std::vector<int>> out_arrows_;
};

/// One degree of the graded right ideal A e_j.
struct DegreePiece {
  std::vector<Path> basis;  // standard monomials; each is (arrow, previous basis element)
  std::vector<int> end;     // end vertex of each basis element
  // free space for this degree: candidate (arrow, previous-degree basis index)
  std::vector<std::pair<int, int>> candidates;
  std::vector<int> candidate_end;
  std::vector<SparseVec> relation_images;      // in candidate coordinates
  std::vector<SparseVec> candidate_normal_form;  // in basis coordinates
  std::vector<int> basis_candidate;            // candidate index of each basis element
  // for each previous-degree basis element: (arrow, candidate) pairs
  std::vector<std::vector<std::pair<int, int>>> successors;
};

/// The graded projective A e_j, degree by degree, with left arrow multiplication.
class ProjectiveTower {
 public:
  ProjectiveTower(std::shared_ptr<const PathAlgebra> algebra, int start);

  void extend_to(int degree);
  int start() const { return start_; }
  int top_degree() const { return static_cast<int>(pieces_.size()) - 1; }
  const DegreePiece& piece(int degree) const { return pieces_.at(static_cast<std::size_t>(degree)); }
  std::size_t dim(int degree, int end_vertex) const;

  /// a * x for x in degree `degree`; result lives in degree + 1 (which must exist).
  SparseVec left_multiply(int arrow, int degree, const SparseVec& x) const;
  /// Class of a path starting at start(); its length must not exceed top_degree().
  SparseVec class_of_path(const Path& p) const;

 private:
  void build_next();

  std::shared_ptr<const PathAlgebra> algebra_;
  int start_;
  std::vector<DegreePiece> pieces_;
};

enum class AlgebraBase { Preprojective, FramedPreprojective, GradedPreprojective };

struct AlgebraKind {
  AlgebraBase base = AlgebraBase::Preprojective;
  std::optional<std::vector<int>> corner;

  friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

std::string to_string(const AlgebraKind& kind);

/// e_i A_k e_j: the free path space (arrow times standard monomial of degree
/// k-1, ending at i), the relation span inside it, and the quotient dimension.
struct GradedSlice {
  AlgebraKind kind;
  int target = 0;  // i
  int source = 0;  // j
  int degree = 0;
  std::vector<Path> path_basis;
  Matrix<Rational> relation_span;  // rows indexed by path_basis, columns span the relations
  std::size_t dim = 0;
  std::vector<Path> standard_basis;  // representatives of a quotient basis
};

/// Element of e_i A_k e_j in the standard basis of that slice.
struct AlgebraClass {
  int target = 0;
  int source = 0;
  int degree = 0;
  std::vector<Rational> coords;
};

/// An algebra of one of the supported kinds, with memoized projective towers.
class GradedAlgebra {
 public:
  GradedAlgebra(const GroupData& g, AlgebraKind kind, const DimVector& framing = {},
                int degree_cap = kDefaultDegreeCap);
  GradedAlgebra(PathAlgebra algebra, AlgebraKind kind, int degree_cap = kDefaultDegreeCap);

  const PathAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const PathAlgebra> shared_algebra() const { return algebra_; }
  const AlgebraKind& kind() const { return kind_; }
  int degree_cap() const { return degree_cap_; }
  /// Vertices allowed as slice endpoints (the corner, or every vertex).
  std::vector<int> endpoints() const;

  std::shared_ptr<const ProjectiveTower> tower(int start, int degree) const;
  void check_degree(int k) const;
  void check_endpoint(int v) const;

 private:
  std::shared_ptr<const PathAlgebra> algebra_;
  AlgebraKind kind_;
  int degree_cap_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const ProjectiveTower>> towers_;
};

GradedSlice graded_slice(const GradedAlgebra& algebra, int i, int j, int k);
std::vector<long> hilbert_sequence(const GradedAlgebra& algebra, int kmax);

/// Character-averaged coefficients of 1 / (det(1 - t g) (1 - t)^{with_z}),
/// twisted by chi_i * conj(chi_j). Requires explicit group elements.
std::vector<long> molien_sequence(const GroupData& g, int i, int j, bool with_z, int kmax);

/// Least n such that (Pi / Pi e_I Pi) vanishes in degrees n+1 .. n+1+safety.
int factor_through_bound(const GroupData& g, const std::vector<int>& corner, int safety = 4,
                         int degree_cap = kDefaultDegreeCap);
int factor_through_bound(const PathAlgebra& algebra, const std::vector<int>& corner, int safety = 4,
                         int degree_cap = kDefaultDegreeCap);

AlgebraClass multiply_classes(const GradedAlgebra& algebra, const AlgebraClass& u, const AlgebraClass& v);
AlgebraClass vertex_idempotent(int vertex);
/// Class of a path (traversal order) starting at `source`.
AlgebraClass class_of_path(const GradedAlgebra& algebra, int source, const Path& p);

/// Literal computation: every path j -> i of length k and the span of all
/// p * rel * q. Exponential in k; used as an independent check.
std::size_t naive_slice_dimension(const PathAlgebra& algebra, int i, int j, int k);

}  // namespace mckay
