#include "mckay/corner_functors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace mckay {

namespace {

AlgebraBase base_of(const Quiver& q) {
  if (q.tripled()) return AlgebraBase::GradedPreprojective;
  if (q.framed()) return AlgebraBase::FramedPreprojective;
  return AlgebraBase::Preprojective;
}

constexpr int kCornerDegreeCap = 64;

}  // namespace

CornerAlgebra::CornerAlgebra(PathAlgebra algebra, const std::vector<int>& corner) {
  corner_ = normalize_corner(corner, algebra.vertex_count());
  bound_ = factor_through_bound(algebra, corner_);
  const AlgebraBase base = base_of(algebra.quiver());
  algebra_ = std::make_shared<GradedAlgebra>(std::move(algebra), AlgebraKind{base, std::nullopt}, kCornerDegreeCap);
  const Quiver& q = quiver();
  const PathAlgebra& a = algebra_->algebra();

  // loop-free paths leaving the corner and coming back without touching it in between
  std::map<std::tuple<int, int, int>, std::vector<Path>> found;
  std::function<void(int, Path&)> walk = [&](int source, Path& p) {
    const int at = p.empty() ? source : q.arrow(p.back()).head;
    for (int arrow : a.arrows_from(at)) {
      if (q.is_loop(arrow)) continue;
      p.push_back(arrow);
      const int head = q.arrow(arrow).head;
      if (position(head) >= 0) {
        found[{source, head, static_cast<int>(p.size())}].push_back(p);
      } else if (static_cast<int>(p.size()) < bound_ + 2) {
        walk(source, p);
      }
      p.pop_back();
    }
  };
  for (int i : corner_) {
    Path p;
    walk(i, p);
  }

  for (const auto& [key, paths] : found) {
    const auto [source, target, degree] = key;
    std::vector<int> kept;
    Matrix<Rational> kept_coords;
    for (const auto& p : paths) {
      const auto cls = class_of_path(*algebra_, source, p);
      const auto v = Matrix<Rational>::column_vector(cls.coords);
      std::optional<Matrix<Rational>> combo;
      if (kept.empty()) {
        if (v.is_zero()) combo = Matrix<Rational>(0, 1);
      } else {
        combo = solve(kept_coords, v);
      }
      if (combo) {
        DependentPath d{{source, target, p}, {}};
        for (std::size_t k = 0; k < kept.size(); ++k)
          if (!is_zero((*combo)(k, 0))) d.combination.emplace_back(kept[k], (*combo)(k, 0));
        dependent_.push_back(std::move(d));
        continue;
      }
      kept.push_back(static_cast<int>(generators_.size()));
      generators_.push_back({source, target, p});
      kept_coords = kept_coords.cols() == 0 ? v : hstack(kept_coords, v);
    }
  }
  for (int i : corner_)
    if (const auto l = q.loop(i)) generators_.push_back({i, i, {*l}});
}

int CornerAlgebra::position(int vertex) const {
  const auto it = std::lower_bound(corner_.begin(), corner_.end(), vertex);
  return it != corner_.end() && *it == vertex ? static_cast<int>(it - corner_.begin()) : -1;
}

int CornerAlgebra::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

// ---------------------------------------------------------------------------
// j_shriek

namespace {

struct ShriekState {
  int top = 0;
  std::vector<std::shared_ptr<const ProjectiveTower>> towers;  // per corner position
  std::map<std::tuple<int, int, int, int>, int> column;        // (pos, degree, basis, x) -> column id
  std::vector<std::tuple<int, int, int, int>> key_of;
  SparseEchelon echelon;
  std::vector<int> basis;  // non-pivot columns, ascending
};

ShriekState shriek_at(const CornerModule<Rational>& z, const CornerAlgebra& c, int top) {
  ShriekState st;
  st.top = top;
  const auto& alg = c.algebra();
  for (int i : c.corner()) st.towers.push_back(alg.tower(i, top));
  // high degrees get small column ids so that elimination removes them first
  for (int k = top; k >= 0; --k) {
    for (std::size_t pos = 0; pos < c.corner().size(); ++pos) {
      const auto& piece = st.towers[pos]->piece(k);
      for (std::size_t b = 0; b < piece.basis.size(); ++b) {
        for (std::size_t x = 0; x < z.dims[pos]; ++x) {
          const auto key = std::make_tuple(static_cast<int>(pos), k, static_cast<int>(b), static_cast<int>(x));
          st.column.emplace(key, static_cast<int>(st.key_of.size()));
          st.key_of.push_back(key);
        }
      }
    }
  }
  for (std::size_t g = 0; g < c.generators().size(); ++g) {
    const auto& gen = c.generators()[g];
    const int s = c.position(gen.source), t = c.position(gen.target);
    const auto& src_tower = *st.towers[static_cast<std::size_t>(s)];
    const auto& dst_tower = *st.towers[static_cast<std::size_t>(t)];
    const auto& act = z.actions[g];
    for (int k = 0; k + gen.degree() <= top; ++k) {
      const auto& piece = dst_tower.piece(k);
      for (std::size_t y = 0; y < piece.basis.size(); ++y) {
        Path p = gen.path;
        p.insert(p.end(), piece.basis[y].begin(), piece.basis[y].end());
        const SparseVec yg = src_tower.class_of_path(p);
        for (std::size_t x = 0; x < z.dims[static_cast<std::size_t>(s)]; ++x) {
          std::map<int, Rational> acc;
          for (const auto& [b, coef] : yg) acc[st.column.at({s, k + gen.degree(), b, static_cast<int>(x)})] += coef;
          for (std::size_t x2 = 0; x2 < act.rows(); ++x2) {
            if (is_zero(act(x2, x))) continue;
            acc[st.column.at({t, k, static_cast<int>(y), static_cast<int>(x2)})] -= act(x2, x);
          }
          st.echelon.insert(collect(acc));
        }
      }
    }
  }
  for (int col = 0; col < static_cast<int>(st.key_of.size()); ++col)
    if (!st.echelon.is_pivot(col)) st.basis.push_back(col);
  return st;
}

int degree_of(const ShriekState& st, int col) { return std::get<1>(st.key_of[static_cast<std::size_t>(col)]); }

int end_of(const ShriekState& st, int col) {
  const auto [pos, k, b, x] = st.key_of[static_cast<std::size_t>(col)];
  (void)x;
  return st.towers[static_cast<std::size_t>(pos)]->piece(k).end[static_cast<std::size_t>(b)];
}

struct Layout {
  std::vector<std::size_t> dims;
  std::map<int, std::size_t> local;  // basis column -> index within its vertex
};

Layout layout(const ShriekState& st, int vertex_count) {
  Layout l;
  l.dims.assign(static_cast<std::size_t>(vertex_count), 0);
  for (int col : st.basis) {
    auto& d = l.dims[static_cast<std::size_t>(end_of(st, col))];
    l.local[col] = d++;
  }
  return l;
}

void write_column(const ShriekState& st, const Layout& l, const SparseVec& v, Matrix<Rational>& m, std::size_t col) {
  for (const auto& [c, coef] : st.echelon.reduce(v)) m(l.local.at(c), col) = coef;
}

ShriekResult assemble(const CornerModule<Rational>& z, const CornerAlgebra& c, const ShriekState& st) {
  const Quiver& q = c.quiver();
  const Layout l = layout(st, q.vertex_count());
  ShriekResult r;
  r.truncation = st.top;
  r.module = zero_rep<Rational>(q, l.dims);
  for (const auto& a : q.arrows()) {
    Matrix<Rational> act(l.dims[static_cast<std::size_t>(a.head)], l.dims[static_cast<std::size_t>(a.tail)]);
    for (int col : st.basis) {
      if (end_of(st, col) != a.tail) continue;
      const auto [pos, k, b, x] = st.key_of[static_cast<std::size_t>(col)];
      const auto prod = st.towers[static_cast<std::size_t>(pos)]->left_multiply(a.id, k, {{b, Rational(1)}});
      std::map<int, Rational> acc;
      for (const auto& [b2, coef] : prod) acc[st.column.at({pos, k + 1, b2, x})] += coef;
      write_column(st, l, collect(acc), act, l.local.at(col));
    }
    r.module.maps[static_cast<std::size_t>(a.bar ? *a.bar : a.id)] = std::move(act);
  }
  for (std::size_t pos = 0; pos < c.corner().size(); ++pos) {
    const int i = c.corner()[pos];
    Matrix<Rational> u(l.dims[static_cast<std::size_t>(i)], z.dims[pos]);
    for (std::size_t x = 0; x < z.dims[pos]; ++x) {
      const int col = st.column.at({static_cast<int>(pos), 0, 0, static_cast<int>(x)});
      write_column(st, l, {{col, Rational(1)}}, u, x);
    }
    r.unit.push_back(std::move(u));
  }
  return r;
}

bool window_clear(const ShriekState& st, int window) {
  for (int col : st.basis)
    if (degree_of(st, col) > st.top - window) return false;
  return true;
}

void check_corner_module(const CornerModule<Rational>& z, const CornerAlgebra& c) {
  if (z.corner != c.corner() || z.dims.size() != c.corner().size() || z.actions.size() != c.generators().size()) {
    throw Error(ErrorCode::kShapeMismatch, "corner module does not match the corner algebra");
  }
  for (std::size_t g = 0; g < z.actions.size(); ++g) {
    const auto& gen = c.generators()[g];
    const auto s = static_cast<std::size_t>(c.position(gen.source)), t = static_cast<std::size_t>(c.position(gen.target));
    if (z.actions[g].rows() != z.dims[t] || z.actions[g].cols() != z.dims[s]) {
      throw Error(ErrorCode::kShapeMismatch, "generator " + std::to_string(g) + " action has shape " + z.actions[g].shape());
    }
  }
}

int find_truncation(const CornerModule<Rational>& z, const CornerAlgebra& c, int window, int cap) {
  const int start = std::max(c.bound() + 2, c.max_generator_degree()) + window;
  std::optional<std::size_t> previous;
  for (int top = start; top <= cap; ++top) {
    const auto st = shriek_at(z, c, top);
    if (!window_clear(st, window)) {
      previous.reset();
      continue;
    }
    const auto dim = st.basis.size();
    if (previous && *previous == dim && is_flat(assemble(z, c, st).module)) return top;
    previous = dim;
  }
  throw Error(ErrorCode::kTruncationNotReached,
              "no stable truncation up to degree " + std::to_string(cap) + " (corner bound " + std::to_string(c.bound()) + ")");
}

}  // namespace

ShriekResult j_shriek(const CornerModule<Rational>& z, const CornerAlgebra& c, int window, int cap) {
  check_corner_module(z, c);
  return assemble(z, c, shriek_at(z, c, find_truncation(z, c, window, cap)));
}

std::vector<Matrix<Rational>> j_shriek_morphism(const CornerModule<Rational>& z, const CornerModule<Rational>& z2,
                                                const std::vector<Matrix<Rational>>& f, const CornerAlgebra& c,
                                                ShriekResult* source_out, ShriekResult* target_out) {
  check_corner_module(z, c);
  check_corner_module(z2, c);
  if (!is_corner_morphism(z, z2, c, f)) throw Error(ErrorCode::kShapeMismatch, "not a morphism of corner modules");
  const int top = std::max(find_truncation(z, c, kShriekWindow, kShriekCap), find_truncation(z2, c, kShriekWindow, kShriekCap));
  const auto st1 = shriek_at(z, c, top);
  const auto st2 = shriek_at(z2, c, top);
  const Quiver& q = c.quiver();
  const Layout l1 = layout(st1, q.vertex_count());
  const Layout l2 = layout(st2, q.vertex_count());
  std::vector<Matrix<Rational>> out;
  for (int v = 0; v < q.vertex_count(); ++v) out.emplace_back(l2.dims[static_cast<std::size_t>(v)], l1.dims[static_cast<std::size_t>(v)]);
  for (int col : st1.basis) {
    const auto [pos, k, b, x] = st1.key_of[static_cast<std::size_t>(col)];
    const auto& fm = f[static_cast<std::size_t>(pos)];
    std::map<int, Rational> acc;
    for (std::size_t x2 = 0; x2 < fm.rows(); ++x2)
      if (!is_zero(fm(x2, static_cast<std::size_t>(x)))) acc[st2.column.at({pos, k, b, static_cast<int>(x2)})] += fm(x2, static_cast<std::size_t>(x));
    const int v = end_of(st1, col);
    write_column(st2, l2, collect(acc), out[static_cast<std::size_t>(v)], l1.local.at(col));
  }
  if (source_out) *source_out = assemble(z, c, st1);
  if (target_out) *target_out = assemble(z2, c, st2);
  return out;
}

bool round_trip_identity(const CornerModule<Rational>& z, const ShriekResult& r, const CornerAlgebra& c) {
  const auto back = j_star(r.module, c);
  if (back.dims != z.dims) return false;
  for (const auto& u : r.unit)
    if (!is_invertible(u)) return false;
  return is_corner_morphism(z, back, c, r.unit);
}

// ---------------------------------------------------------------------------
// truncated graded modules

namespace {

struct Action {
  std::string label;
  int source;
  int target;
  Path path;
  bool is_z;
};

std::vector<Action> actions_for(const GradedAlgebra& algebra) {
  const Quiver& q = algebra.algebra().quiver();
  std::vector<Action> out;
  if (!algebra.kind().corner) {
    for (const auto& a : q.arrows()) {
      if (!algebra.algebra().arrow_alive(a.id)) continue;
      out.push_back({"a" + std::to_string(a.id), a.tail, a.head, {a.id}, q.is_loop(a.id)});
    }
    return out;
  }
  const CornerAlgebra c(algebra.algebra(), *algebra.kind().corner);
  for (std::size_t g = 0; g < c.generators().size(); ++g) {
    const auto& gen = c.generators()[g];
    const bool z = gen.path.size() == 1 && q.is_loop(gen.path[0]);
    out.push_back({"g" + std::to_string(g), gen.source, gen.target, gen.path, z});
  }
  return out;
}

}  // namespace

TruncatedGradedModule<Rational> free_truncated_module(const GradedAlgebra& algebra, int source, int k0, int k1) {
  if (k0 < 0 || k1 < k0) throw Error(ErrorCode::kShapeMismatch, "bad degree window");
  algebra.check_endpoint(source);
  const auto tower = algebra.tower(source, k1);
  TruncatedGradedModule<Rational> m;
  m.kind = algebra.kind();
  m.k0 = k0;
  m.k1 = k1;
  m.vertices = algebra.endpoints();
  // local index of every basis element within its (degree, vertex) component
  std::vector<std::vector<int>> local;
  for (int k = k0; k <= k1; ++k) {
    const auto& piece = tower->piece(k);
    std::vector<std::size_t> row(m.vertices.size(), 0);
    std::vector<int> loc(piece.basis.size(), -1);
    for (std::size_t b = 0; b < piece.basis.size(); ++b) {
      const int p = m.position(piece.end[b]);
      if (p >= 0) loc[b] = static_cast<int>(row[static_cast<std::size_t>(p)]++);
    }
    m.dims.push_back(std::move(row));
    local.push_back(std::move(loc));
  }
  for (const auto& act : actions_for(algebra)) {
    GradedAction<Rational> ga{act.label, act.source, act.target, static_cast<int>(act.path.size()), act.is_z, {}};
    const auto s = static_cast<std::size_t>(m.position(act.source)), t = static_cast<std::size_t>(m.position(act.target));
    for (int k = k0; k + ga.shift <= k1; ++k) {
      Matrix<Rational> x(m.dim(k + ga.shift, t), m.dim(k, s));
      const auto& piece = tower->piece(k);
      for (std::size_t b = 0; b < piece.basis.size(); ++b) {
        if (piece.end[b] != act.source) continue;
        SparseVec v{{static_cast<int>(b), Rational(1)}};
        int d = k;
        for (int arrow : act.path) v = tower->left_multiply(arrow, d++, v);
        for (const auto& [b2, coef] : v)
          x(static_cast<std::size_t>(local[static_cast<std::size_t>(k + ga.shift - k0)][static_cast<std::size_t>(b2)]),
            static_cast<std::size_t>(local[static_cast<std::size_t>(k - k0)][b])) = coef;
      }
      ga.matrices.push_back(std::move(x));
    }
    m.actions.push_back(std::move(ga));
  }
  return m;
}

bool graded_relations_hold(const TruncatedGradedModule<Rational>& m, const PathAlgebra& algebra) {
  validate_graded(m);
  auto find = [&](const std::string& label) -> const GradedAction<Rational>* {
    for (const auto& a : m.actions)
      if (a.label == label) return &a;
    return nullptr;
  };
  auto at = [&](const GradedAction<Rational>& a, int k) -> const Matrix<Rational>& {
    return a.matrices[static_cast<std::size_t>(k - m.k0)];
  };
  if (!m.kind.corner) {
    for (const auto& rel : algebra.relations()) {
      const int s = m.position(rel.source), t = m.position(rel.target);
      if (s < 0 || t < 0) continue;
      for (int k = m.k0; k + 2 <= m.k1; ++k) {
        Matrix<Rational> r(m.dim(k + 2, static_cast<std::size_t>(t)), m.dim(k, static_cast<std::size_t>(s)));
        for (const auto& term : rel.terms) {
          const auto* first = find("a" + std::to_string(term.first));
          const auto* second = find("a" + std::to_string(term.second));
          if (!first || !second) continue;
          r = r + term.coefficient * (at(*second, k + 1) * at(*first, k));
        }
        if (!r.is_zero()) return false;
      }
    }
    return true;
  }
  // cornered: z commutes with every generator
  std::map<int, const GradedAction<Rational>*> z;
  for (const auto& a : m.actions)
    if (a.is_z) z[a.source] = &a;
  for (const auto& a : m.actions) {
    if (a.is_z) continue;
    const auto zs = z.find(a.source), zt = z.find(a.target);
    if (zs == z.end() || zt == z.end()) continue;
    for (int k = m.k0; k + a.shift + 1 <= m.k1; ++k) {
      if (at(*zt->second, k + a.shift) * at(a, k) != at(a, k + 1) * at(*zs->second, k)) return false;
    }
  }
  return true;
}

CornerModule<Rational> truncated_corner_projective(const CornerAlgebra& c, int source, int top) {
  if (c.position(source) < 0) throw Error(ErrorCode::kVertexNotInCorner, "source must lie in the corner");
  const auto tower = c.algebra().tower(source, top);
  CornerModule<Rational> z;
  z.corner = c.corner();
  z.dims.assign(c.corner().size(), 0);
  std::map<std::pair<int, int>, std::size_t> local;  // (degree, basis) -> index at its vertex
  for (int k = 0; k <= top; ++k) {
    const auto& piece = tower->piece(k);
    for (std::size_t b = 0; b < piece.basis.size(); ++b) {
      const int p = c.position(piece.end[b]);
      if (p >= 0) local[{k, static_cast<int>(b)}] = z.dims[static_cast<std::size_t>(p)]++;
    }
  }
  for (const auto& gen : c.generators()) {
    const auto s = static_cast<std::size_t>(c.position(gen.source)), t = static_cast<std::size_t>(c.position(gen.target));
    Matrix<Rational> x(z.dims[t], z.dims[s]);
    for (const auto& [kb, idx] : local) {
      const auto [k, b] = kb;
      if (tower->piece(k).end[static_cast<std::size_t>(b)] != gen.source || k + gen.degree() > top) continue;
      SparseVec v{{b, Rational(1)}};
      int d = k;
      for (int arrow : gen.path) v = tower->left_multiply(arrow, d++, v);
      for (const auto& [b2, coef] : v) x(local.at({d, b2}), idx) = coef;
    }
    z.actions.push_back(std::move(x));
  }
  return z;
}

}  // namespace mckay
