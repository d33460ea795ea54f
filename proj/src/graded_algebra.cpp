#include "mckay/graded_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "mckay/error.hpp"

namespace mckay {

// ---------------------------------------------------------------------------
// PathAlgebra

PathAlgebra::PathAlgebra(Quiver quiver, std::vector<Relation> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {
  alive_vertex_.assign(static_cast<std::size_t>(quiver_.vertex_count()), true);
  alive_arrow_.assign(quiver_.arrow_count(), true);
  index_arrows();
}

void PathAlgebra::index_arrows() {
  out_arrows_.assign(static_cast<std::size_t>(quiver_.vertex_count()), {});
  for (const auto& a : quiver_.arrows()) {
    if (alive_arrow_[static_cast<std::size_t>(a.id)]) out_arrows_[static_cast<std::size_t>(a.tail)].push_back(a.id);
  }
}

PathAlgebra PathAlgebra::preprojective(const Quiver& q) {
  std::vector<Relation> rels;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Relation r{v, v, {}};
    for (const auto& a : q.arrows()) {
      if (!q.is_positive(a.id)) continue;
      if (a.head == v) r.terms.push_back({Rational(1), *a.bar, a.id});
      if (a.tail == v) r.terms.push_back({Rational(-1), a.id, *a.bar});
    }
    if (!r.terms.empty()) rels.push_back(std::move(r));
  }
  return PathAlgebra(q, std::move(rels));
}

PathAlgebra PathAlgebra::graded_preprojective(const Quiver& tripled) {
  if (!tripled.tripled()) throw Error(ErrorCode::kShapeMismatch, "graded preprojective algebra needs a tripled quiver");
  if (tripled.framed()) throw Error(ErrorCode::kAlreadyFramed, "graded preprojective algebra is unframed");
  PathAlgebra base = preprojective(tripled);
  auto rels = base.relations_;
  for (const auto& a : tripled.arrows()) {
    if (tripled.is_loop(a.id)) continue;
    Relation r{a.tail, a.head, {}};
    r.terms.push_back({Rational(1), a.id, *tripled.loop(a.head)});
    r.terms.push_back({Rational(-1), *tripled.loop(a.tail), a.id});
    rels.push_back(std::move(r));
  }
  return PathAlgebra(tripled, std::move(rels));
}

PathAlgebra PathAlgebra::kill_vertices(const std::vector<int>& killed) const {
  PathAlgebra out = *this;
  for (int v : killed) out.alive_vertex_.at(static_cast<std::size_t>(v)) = false;
  for (const auto& a : quiver_.arrows()) {
    if (!out.alive_vertex_[static_cast<std::size_t>(a.tail)] || !out.alive_vertex_[static_cast<std::size_t>(a.head)]) {
      out.alive_arrow_[static_cast<std::size_t>(a.id)] = false;
    }
  }
  std::vector<Relation> rels;
  for (auto r : out.relations_) {
    if (!out.vertex_alive(r.source) || !out.vertex_alive(r.target)) continue;
    std::erase_if(r.terms, [&](const RelationTerm& t) { return !out.arrow_alive(t.first) || !out.arrow_alive(t.second); });
    if (!r.terms.empty()) rels.push_back(std::move(r));
  }
  out.relations_ = std::move(rels);
  out.index_arrows();
  return out;
}

PathAlgebra PathAlgebra::without_loops() const {
  PathAlgebra out = *this;
  for (const auto& a : quiver_.arrows())
    if (quiver_.is_loop(a.id)) out.alive_arrow_[static_cast<std::size_t>(a.id)] = false;
  std::vector<Relation> rels;
  for (auto r : out.relations_) {
    std::erase_if(r.terms, [&](const RelationTerm& t) { return !out.arrow_alive(t.first) || !out.arrow_alive(t.second); });
    if (!r.terms.empty()) rels.push_back(std::move(r));
  }
  out.relations_ = std::move(rels);
  out.index_arrows();
  return out;
}

// ---------------------------------------------------------------------------
// ProjectiveTower

namespace {

int find_successor(const DegreePiece& next, int prev_index, int arrow) {
  if (prev_index < 0 || static_cast<std::size_t>(prev_index) >= next.successors.size()) return -1;
  for (const auto& [a, c] : next.successors[static_cast<std::size_t>(prev_index)])
    if (a == arrow) return c;
  return -1;
}

}  // namespace

ProjectiveTower::ProjectiveTower(std::shared_ptr<const PathAlgebra> algebra, int start)
    : algebra_(std::move(algebra)), start_(start) {
  DegreePiece zero;
  if (algebra_->vertex_alive(start)) {
    zero.basis.push_back({});
    zero.end.push_back(start);
    zero.basis_candidate.push_back(-1);
  }
  pieces_.push_back(std::move(zero));
}

void ProjectiveTower::extend_to(int degree) {
  while (top_degree() < degree) build_next();
}

std::size_t ProjectiveTower::dim(int degree, int end_vertex) const {
  const auto& e = piece(degree).end;
  return static_cast<std::size_t>(std::count(e.begin(), e.end(), end_vertex));
}

void ProjectiveTower::build_next() {
  const int k = top_degree();
  const Quiver& q = algebra_->quiver();
  DegreePiece next;
  const DegreePiece& prev = pieces_.back();

  next.successors.resize(prev.basis.size());
  for (std::size_t b = 0; b < prev.basis.size(); ++b) {
    for (int a : algebra_->arrows_from(prev.end[b])) {
      const int c = static_cast<int>(next.candidates.size());
      next.candidates.emplace_back(a, static_cast<int>(b));
      next.candidate_end.push_back(q.arrow(a).head);
      next.successors[b].emplace_back(a, c);
    }
  }

  SparseEchelon echelon;
  if (k >= 1) {
    const DegreePiece& before = pieces_[static_cast<std::size_t>(k - 1)];
    for (const auto& rel : algebra_->relations()) {
      for (std::size_t x = 0; x < before.basis.size(); ++x) {
        if (before.end[x] != rel.source) continue;
        std::map<int, Rational> acc;
        for (const auto& term : rel.terms) {
          const int c1 = find_successor(prev, static_cast<int>(x), term.first);
          if (c1 < 0) continue;
          for (const auto& [y, coef] : prev.candidate_normal_form[static_cast<std::size_t>(c1)]) {
            const int c2 = find_successor(next, y, term.second);
            if (c2 < 0) continue;
            acc[c2] += term.coefficient * coef;
          }
        }
        SparseVec image = collect(acc);
        if (image.empty()) continue;
        echelon.insert(image);
        next.relation_images.push_back(std::move(image));
      }
    }
  }

  const std::size_t nc = next.candidates.size();
  std::vector<int> basis_of(nc, -1);
  for (std::size_t c = 0; c < nc; ++c) {
    if (echelon.is_pivot(static_cast<int>(c))) continue;
    basis_of[c] = static_cast<int>(next.basis.size());
    const auto [a, b] = next.candidates[c];
    Path p = prev.basis[static_cast<std::size_t>(b)];
    p.push_back(a);
    next.basis.push_back(std::move(p));
    next.end.push_back(next.candidate_end[c]);
    next.basis_candidate.push_back(static_cast<int>(c));
  }

  // Normal forms: pivot rows only reach later columns, so fill from the back.
  next.candidate_normal_form.assign(nc, {});
  for (std::size_t c = nc; c-- > 0;) {
    if (basis_of[c] >= 0) {
      next.candidate_normal_form[c] = {{basis_of[c], Rational(1)}};
      continue;
    }
    const auto& row = echelon.rows().at(static_cast<int>(c));
    SparseVec nf;
    for (const auto& [col, coef] : row) {
      if (col == static_cast<int>(c)) continue;
      nf = axpy(nf, -coef, next.candidate_normal_form[static_cast<std::size_t>(col)]);
    }
    next.candidate_normal_form[c] = std::move(nf);
  }
  pieces_.push_back(std::move(next));
}

SparseVec ProjectiveTower::left_multiply(int arrow, int degree, const SparseVec& x) const {
  const DegreePiece& next = piece(degree + 1);
  std::map<int, Rational> acc;
  for (const auto& [b, coef] : x) {
    const int c = find_successor(next, b, arrow);
    if (c < 0) continue;
    for (const auto& [y, v] : next.candidate_normal_form[static_cast<std::size_t>(c)]) acc[y] += coef * v;
  }
  return collect(acc);
}

SparseVec ProjectiveTower::class_of_path(const Path& p) const {
  if (piece(0).basis.empty()) return {};
  SparseVec v{{0, Rational(1)}};
  int degree = 0;
  for (int a : p) {
    v = left_multiply(a, degree, v);
    ++degree;
  }
  return v;
}

// ---------------------------------------------------------------------------
// GradedAlgebra

std::string to_string(const AlgebraKind& kind) {
  std::string s;
  switch (kind.base) {
    case AlgebraBase::Preprojective: s = "pi"; break;
    case AlgebraBase::FramedPreprojective: s = "piw"; break;
    case AlgebraBase::GradedPreprojective: s = "pibullet"; break;
  }
  if (kind.corner) {
    s += "[";
    for (std::size_t k = 0; k < kind.corner->size(); ++k) s += (k ? "," : "") + std::to_string((*kind.corner)[k]);
    s += "]";
  }
  return s;
}

namespace {

PathAlgebra algebra_for(const GroupData& g, AlgebraBase base, const DimVector& framing) {
  const Quiver q = mckay_quiver(g);
  switch (base) {
    case AlgebraBase::Preprojective: return PathAlgebra::preprojective(q);
    case AlgebraBase::FramedPreprojective: {
      DimVector w = framing;
      if (w.components.empty()) w = one_bar(g);
      return PathAlgebra::preprojective(frame_quiver(q, w));
    }
    case AlgebraBase::GradedPreprojective: return PathAlgebra::graded_preprojective(triple_quiver(q));
  }
  throw std::logic_error("unknown algebra base");
}

}  // namespace

GradedAlgebra::GradedAlgebra(const GroupData& g, AlgebraKind kind, const DimVector& framing, int degree_cap)
    : GradedAlgebra(algebra_for(g, kind.base, framing), std::move(kind), degree_cap) {}

GradedAlgebra::GradedAlgebra(PathAlgebra algebra, AlgebraKind kind, int degree_cap)
    : algebra_(std::make_shared<const PathAlgebra>(std::move(algebra))), kind_(std::move(kind)), degree_cap_(degree_cap) {
  if (kind_.corner) kind_.corner = normalize_corner(*kind_.corner, algebra_->vertex_count());
}

std::vector<int> GradedAlgebra::endpoints() const {
  if (kind_.corner) return *kind_.corner;
  std::vector<int> all(static_cast<std::size_t>(algebra_->vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

void GradedAlgebra::check_degree(int k) const {
  if (k < 0 || k > degree_cap_) {
    throw Error(ErrorCode::kDegreeCapExceeded,
                "degree " + std::to_string(k) + " outside 0.." + std::to_string(degree_cap_));
  }
}

void GradedAlgebra::check_endpoint(int v) const {
  if (v < 0 || v >= algebra_->vertex_count()) {
    throw Error(ErrorCode::kVertexNotInCorner, "vertex " + std::to_string(v) + " does not exist");
  }
  if (kind_.corner && !std::binary_search(kind_.corner->begin(), kind_.corner->end(), v)) {
    throw Error(ErrorCode::kVertexNotInCorner, "vertex " + std::to_string(v) + " is outside the corner " + to_string(kind_));
  }
}

std::shared_ptr<const ProjectiveTower> GradedAlgebra::tower(int start, int degree) const {
  check_degree(degree);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = towers_.find(start);
  if (it != towers_.end() && it->second->top_degree() >= degree) return it->second;
  auto fresh = it != towers_.end() ? std::make_shared<ProjectiveTower>(*it->second)
                                   : std::make_shared<ProjectiveTower>(algebra_, start);
  fresh->extend_to(degree);
  towers_[start] = fresh;
  return fresh;
}

namespace {

std::vector<int> local_indices(const DegreePiece& piece, int end_vertex) {
  std::vector<int> idx;
  for (std::size_t b = 0; b < piece.end.size(); ++b)
    if (piece.end[b] == end_vertex) idx.push_back(static_cast<int>(b));
  return idx;
}

}  // namespace

GradedSlice graded_slice(const GradedAlgebra& algebra, int i, int j, int k) {
  algebra.check_endpoint(i);
  algebra.check_endpoint(j);
  algebra.check_degree(k);
  const auto tower = algebra.tower(j, k);
  const DegreePiece& piece = tower->piece(k);

  GradedSlice s;
  s.kind = algebra.kind();
  s.target = i;
  s.source = j;
  s.degree = k;
  for (int b : local_indices(piece, i)) s.standard_basis.push_back(piece.basis[static_cast<std::size_t>(b)]);

  if (k == 0) {
    if (!piece.basis.empty() && i == j) s.path_basis.push_back({});
    s.relation_span = Matrix<Rational>(s.path_basis.size(), 0);
    s.dim = s.path_basis.size();
    return s;
  }

  const DegreePiece& prev = tower->piece(k - 1);
  std::map<int, std::size_t> row_of;
  for (std::size_t c = 0; c < piece.candidates.size(); ++c) {
    if (piece.candidate_end[c] != i) continue;
    row_of[static_cast<int>(c)] = s.path_basis.size();
    const auto [a, b] = piece.candidates[c];
    Path p = prev.basis[static_cast<std::size_t>(b)];
    p.push_back(a);
    s.path_basis.push_back(std::move(p));
  }
  std::vector<const SparseVec*> cols;
  for (const auto& img : piece.relation_images)
    if (piece.candidate_end[static_cast<std::size_t>(img.front().first)] == i) cols.push_back(&img);
  s.relation_span = Matrix<Rational>(s.path_basis.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [cand, v] : *cols[c]) s.relation_span(row_of.at(cand), c) = v;
  std::size_t pivots_here = 0;
  for (const auto& [cand, row] : row_of) {
    (void)row;
    if (piece.basis_candidate.end() ==
        std::find(piece.basis_candidate.begin(), piece.basis_candidate.end(), cand)) {
      ++pivots_here;
    }
  }
  s.dim = s.path_basis.size() - pivots_here;
  return s;
}

std::vector<long> hilbert_sequence(const GradedAlgebra& algebra, int kmax) {
  algebra.check_degree(kmax);
  const auto ends = algebra.endpoints();
  std::vector<long> out(static_cast<std::size_t>(kmax) + 1, 0);
  for (int j : ends) {
    const auto tower = algebra.tower(j, kmax);
    for (int k = 0; k <= kmax; ++k)
      for (int i : ends) out[static_cast<std::size_t>(k)] += static_cast<long>(tower->dim(k, i));
  }
  return out;
}

std::vector<long> molien_sequence(const GroupData& g, int i, int j, bool with_z, int kmax) {
  if (!g.has_elements()) {
    throw Error(ErrorCode::kUnsupportedSeries, "Molien series needs explicit elements; " + to_string(g.descriptor) + " has none");
  }
  if (kmax < 0) throw Error(ErrorCode::kDegreeCapExceeded, "negative degree");
  const auto n = static_cast<std::size_t>(kmax) + 1;
  std::vector<Complex> sum(n, 0.0);
  for (std::size_t e = 0; e < g.elements.size(); ++e) {
    const auto cls = g.element_class[e];
    const Complex weight = g.characters.at(static_cast<std::size_t>(i))[cls] *
                           std::conj(g.characters.at(static_cast<std::size_t>(j))[cls]);
    const Complex tr = g.elements[e][0] + g.elements[e][3];
    // 1/det(1 - t g) = sum c_k t^k with c_k = tr c_{k-1} - c_{k-2} (det g = 1)
    std::vector<Complex> c(n);
    c[0] = 1.0;
    if (n > 1) c[1] = tr;
    for (std::size_t k = 2; k < n; ++k) c[k] = tr * c[k - 1] - c[k - 2];
    if (with_z) std::partial_sum(c.begin(), c.end(), c.begin());
    for (std::size_t k = 0; k < n; ++k) sum[k] += weight * c[k];
  }
  std::vector<long> out;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex v = sum[k] / static_cast<double>(g.order);
    const double r = std::round(v.real());
    if (std::abs(v - Complex(r)) > 1e-6) {
      throw Error(ErrorCode::kNonIntegralCoefficient, "Molien coefficient " + std::to_string(k) + " = " + std::to_string(v.real()));
    }
    out.push_back(static_cast<long>(r));
  }
  return out;
}

int factor_through_bound(const GroupData& g, const std::vector<int>& corner, int safety, int degree_cap) {
  return factor_through_bound(PathAlgebra::preprojective(mckay_quiver(g)), corner, safety, degree_cap);
}

int factor_through_bound(const PathAlgebra& algebra, const std::vector<int>& corner, int safety, int degree_cap) {
  const auto I = normalize_corner(corner, algebra.vertex_count());
  auto quotient = std::make_shared<const PathAlgebra>(algebra.without_loops().kill_vertices(I));
  std::vector<ProjectiveTower> towers;
  for (int v = 0; v < quotient->vertex_count(); ++v)
    if (quotient->vertex_alive(v)) towers.emplace_back(quotient, v);
  auto total = [&](int k) {
    std::size_t s = 0;
    for (auto& t : towers) {
      t.extend_to(k);
      s += t.piece(k).basis.size();
    }
    return s;
  };
  for (int n = 0; n + 1 + safety <= degree_cap; ++n) {
    bool vanishes = true;
    for (int k = n + 1; k <= n + 1 + safety && vanishes; ++k) vanishes = total(k) == 0;
    if (vanishes) return n;
  }
  throw Error(ErrorCode::kBoundNotFound, "no vanishing window of length " + std::to_string(safety + 1) +
                                             " below degree cap " + std::to_string(degree_cap));
}

AlgebraClass vertex_idempotent(int vertex) { return {vertex, vertex, 0, {Rational(1)}}; }

namespace {

SparseVec to_global(const DegreePiece& piece, int end_vertex, const std::vector<Rational>& coords) {
  const auto idx = local_indices(piece, end_vertex);
  if (idx.size() != coords.size()) throw Error(ErrorCode::kShapeMismatch, "class coordinates do not match the slice");
  SparseVec v;
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (!is_zero(coords[k])) v.emplace_back(idx[k], coords[k]);
  return v;
}

std::vector<Rational> to_local(const DegreePiece& piece, int end_vertex, const SparseVec& v) {
  const auto idx = local_indices(piece, end_vertex);
  std::vector<Rational> coords(idx.size(), Rational(0));
  for (const auto& [b, c] : v) {
    const auto it = std::lower_bound(idx.begin(), idx.end(), b);
    if (it == idx.end() || *it != b) throw std::logic_error("class has support at another endpoint");
    coords[static_cast<std::size_t>(it - idx.begin())] = c;
  }
  return coords;
}

}  // namespace

AlgebraClass multiply_classes(const GradedAlgebra& algebra, const AlgebraClass& u, const AlgebraClass& v) {
  if (u.source != v.target) {
    throw Error(ErrorCode::kEndpointMismatch, "u starts at " + std::to_string(u.source) + " but v ends at " + std::to_string(v.target));
  }
  const int degree = u.degree + v.degree;
  const auto tv = algebra.tower(v.source, degree);
  const auto tu = algebra.tower(u.source, u.degree);
  const SparseVec vv = to_global(tv->piece(v.degree), v.target, v.coords);
  const auto u_idx = local_indices(tu->piece(u.degree), u.target);
  if (u_idx.size() != u.coords.size()) throw Error(ErrorCode::kShapeMismatch, "class coordinates do not match the slice");
  SparseVec acc;
  for (std::size_t k = 0; k < u_idx.size(); ++k) {
    if (is_zero(u.coords[k])) continue;
    SparseVec w = vv;
    int d = v.degree;
    for (int a : tu->piece(u.degree).basis[static_cast<std::size_t>(u_idx[k])]) w = tv->left_multiply(a, d++, w);
    acc = axpy(acc, u.coords[k], w);
  }
  return {u.target, v.source, degree, to_local(tv->piece(degree), u.target, acc)};
}

AlgebraClass class_of_path(const GradedAlgebra& algebra, int source, const Path& p) {
  const int degree = static_cast<int>(p.size());
  const auto t = algebra.tower(source, degree);
  int target = source;
  for (int a : p) {
    if (algebra.algebra().quiver().arrow(a).tail != target) throw Error(ErrorCode::kEndpointMismatch, "path is not composable");
    target = algebra.algebra().quiver().arrow(a).head;
  }
  return {target, source, degree, to_local(t->piece(degree), target, t->class_of_path(p))};
}

std::size_t naive_slice_dimension(const PathAlgebra& algebra, int i, int j, int k) {
  const Quiver& q = algebra.quiver();
  // all paths of a given length starting at a vertex
  std::function<void(int, int, Path&, std::vector<Path>&)> walk = [&](int v, int len, Path& cur, std::vector<Path>& out) {
    if (len == 0) {
      out.push_back(cur);
      return;
    }
    for (int a : algebra.arrows_from(v)) {
      cur.push_back(a);
      walk(q.arrow(a).head, len - 1, cur, out);
      cur.pop_back();
    }
  };
  auto paths_from = [&](int v, int len) {
    std::vector<Path> out;
    if (!algebra.vertex_alive(v)) return out;
    Path cur;
    walk(v, len, cur, out);
    return out;
  };
  auto end_of = [&](int start, const Path& p) { return p.empty() ? start : q.arrow(p.back()).head; };

  std::map<Path, std::size_t> column;
  for (auto& p : paths_from(j, k))
    if (end_of(j, p) == i) column.emplace(p, column.size());
  if (k < 2 || column.empty()) return column.size();

  std::vector<std::vector<Rational>> rows;
  for (int l = 0; l <= k - 2; ++l) {
    for (const auto& first : paths_from(j, l)) {
      const int mid = end_of(j, first);
      for (const auto& rel : algebra.relations()) {
        if (rel.source != mid) continue;
        for (const auto& last : paths_from(rel.target, k - 2 - l)) {
          if (end_of(rel.target, last) != i) continue;
          std::vector<Rational> row(column.size(), Rational(0));
          for (const auto& t : rel.terms) {
            Path p = first;
            p.push_back(t.first);
            p.push_back(t.second);
            p.insert(p.end(), last.begin(), last.end());
            row[column.at(p)] += t.coefficient;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  if (rows.empty()) return column.size();
  return column.size() - rank(Matrix<Rational>::from_rows(rows));
}

}  // namespace mckay
