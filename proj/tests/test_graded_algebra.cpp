#include "doctest.h"

#include "mckay/error.hpp"
#include "mckay/graded_algebra.hpp"

using namespace mckay;

namespace {

GroupData group(const char* name) { return build_group(parse_descriptor(name)); }

AlgebraKind kind(AlgebraBase base, std::optional<std::vector<int>> corner = std::nullopt) { return {base, corner}; }

}  // namespace

TEST_CASE("Hilbert series of Pi matches the Molien series") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "D5"}) {
    CAPTURE(name);
    const auto g = group(name);
    GradedAlgebra pi(g, kind(AlgebraBase::Preprojective));
    const int n = static_cast<int>(g.vertex_count());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto expected = molien_sequence(g, i, j, false, 8);
        for (int k = 0; k <= 8; ++k) {
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          CHECK(graded_slice(pi, i, j, k).dim == static_cast<std::size_t>(expected[static_cast<std::size_t>(k)]));
        }
      }
    }
  }
}

TEST_CASE("Hilbert series of Pi-bullet matches Molien with the extra variable") {
  for (const char* name : {"A1", "A2", "D4"}) {
    CAPTURE(name);
    const auto g = group(name);
    GradedAlgebra pib(g, kind(AlgebraBase::GradedPreprojective));
    const int n = static_cast<int>(g.vertex_count());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto expected = molien_sequence(g, i, j, true, 6);
        for (int k = 0; k <= 6; ++k) {
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          CHECK(graded_slice(pib, i, j, k).dim == static_cast<std::size_t>(expected[static_cast<std::size_t>(k)]));
        }
      }
    }
  }
}

TEST_CASE("invariant ring of A1 in Pi-bullet") {
  // C[x,y]^{+-1}[z]: degrees 0..4 have 1, 1, 4, 4, 9 monomials
  GradedAlgebra corner(group("A1"), kind(AlgebraBase::GradedPreprojective, std::vector<int>{0}));
  CHECK(hilbert_sequence(corner, 4) == std::vector<long>{1, 1, 4, 4, 9});
}

TEST_CASE("incremental slices agree with literal path enumeration") {
  for (const char* name : {"A1", "A2", "D4"}) {
    CAPTURE(name);
    const auto g = group(name);
    GradedAlgebra pi(g, kind(AlgebraBase::Preprojective));
    GradedAlgebra pib(g, kind(AlgebraBase::GradedPreprojective));
    const int n = static_cast<int>(g.vertex_count());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k <= 4; ++k) {
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          CHECK(graded_slice(pi, i, j, k).dim == naive_slice_dimension(pi.algebra(), i, j, k));
          CHECK(graded_slice(pib, i, j, k).dim == naive_slice_dimension(pib.algebra(), i, j, k));
        }
  }
}

TEST_CASE("slice exposes paths and relation span consistently") {
  GradedAlgebra pi(group("A2"), kind(AlgebraBase::Preprojective));
  const auto s = graded_slice(pi, 0, 0, 2);
  CHECK(s.path_basis.size() == 2);
  CHECK(s.relation_span.rows() == 2);
  CHECK(s.dim == s.path_basis.size() - rank(s.relation_span));
  CHECK(s.standard_basis.size() == s.dim);
  CHECK(s.dim == 1);
}

TEST_CASE("framed preprojective algebra") {
  const auto g = group("A1");
  DimVector w;
  w.components = {1, 0};
  GradedAlgebra piw(g, kind(AlgebraBase::FramedPreprojective), w);
  CHECK(piw.algebra().vertex_count() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k <= 4; ++k) CHECK(graded_slice(piw, i, j, k).dim == naive_slice_dimension(piw.algebra(), i, j, k));
}

TEST_CASE("corner restrictions and degree cap") {
  GradedAlgebra corner(group("A2"), kind(AlgebraBase::Preprojective, std::vector<int>{0, 2}), {}, 6);
  try {
    graded_slice(corner, 1, 0, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kVertexNotInCorner);
  }
  try {
    graded_slice(corner, 0, 0, 7);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegreeCapExceeded);
  }
  CHECK_THROWS_AS(GradedAlgebra(group("A2"), kind(AlgebraBase::Preprojective, std::vector<int>{})), Error);
}

TEST_CASE("Molien series is unavailable for E") {
  try {
    molien_sequence(group("E6"), 0, 0, false, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnsupportedSeries);
  }
}

TEST_CASE("E-series Hilbert series against the invariant degrees") {
  // C[x,y]^Gamma for E6, E7, E8 has generators of degrees (6,8,12), (8,12,18), (12,20,30)
  // with one relation in degree 24, 36, 60.
  struct Case {
    const char* name;
    int a, b, c;
  };
  for (const auto& cs : {Case{"E6", 6, 8, 12}, Case{"E7", 8, 12, 18}, Case{"E8", 12, 20, 30}}) {
    CAPTURE(cs.name);
    const int kmax = 16;
    std::vector<long> series(kmax + 1, 0);
    for (int x = 0; x * cs.a <= kmax; ++x)
      for (int y = 0; x * cs.a + y * cs.b <= kmax; ++y)
        for (int z = 0; x * cs.a + y * cs.b + z * cs.c <= kmax; ++z) ++series[static_cast<std::size_t>(x * cs.a + y * cs.b + z * cs.c)];
    GradedAlgebra corner(group(cs.name), kind(AlgebraBase::Preprojective, std::vector<int>{0}));
    CHECK(hilbert_sequence(corner, kmax) == series);
  }
}

TEST_CASE("multiplication of classes") {
  const auto g = group("A2");
  GradedAlgebra pi(g, kind(AlgebraBase::Preprojective));
  const auto& q = pi.algebra().quiver();
  // idempotents act as identities
  for (const auto& a : q.arrows()) {
    const auto c = class_of_path(pi, a.tail, {a.id});
    CHECK(multiply_classes(pi, vertex_idempotent(a.head), c).coords == c.coords);
    CHECK(multiply_classes(pi, c, vertex_idempotent(a.tail)).coords == c.coords);
  }
  // associativity of products of paths equals the class of the concatenation
  const auto a = q.arrows()[0];
  const auto b = q.arrow(*a.bar);
  const auto ab = multiply_classes(pi, class_of_path(pi, b.tail, {b.id}), class_of_path(pi, a.tail, {a.id}));
  const auto direct = class_of_path(pi, a.tail, {a.id, b.id});
  CHECK(ab.coords == direct.coords);
  CHECK_THROWS_AS(multiply_classes(pi, class_of_path(pi, a.tail, {a.id}), class_of_path(pi, a.tail, {a.id})), Error);
}

TEST_CASE("preprojective relation vanishes") {
  for (const char* name : {"A1", "A3", "D4"}) {
    const auto g = group(name);
    GradedAlgebra pi(g, kind(AlgebraBase::Preprojective));
    for (const auto& rel : pi.algebra().relations()) {
      std::vector<Rational> sum;
      for (const auto& t : rel.terms) {
        const auto c = class_of_path(pi, rel.source, {t.first, t.second});
        if (sum.empty()) sum.assign(c.coords.size(), Rational(0));
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += t.coefficient * c.coords[k];
      }
      for (const auto& x : sum) CHECK(x == 0);
    }
  }
}

TEST_CASE("factor-through bound") {
  // Pi / Pi e_I Pi is the preprojective algebra of the finite diagram with I removed.
  CHECK(factor_through_bound(group("A1"), {0}) == 0);
  CHECK(factor_through_bound(group("A2"), {0}) == 1);
  CHECK(factor_through_bound(group("A3"), {0}) == 2);
  CHECK(factor_through_bound(group("A3"), {0, 1, 2, 3}) == 0);
  CHECK(factor_through_bound(group("D4"), {0}) == 4);
  CHECK(factor_through_bound(group("A4"), {0, 2}) == 1);
}
