#include "doctest.h"

#include <random>

#include "mckay/moduli_tools.hpp"

using namespace mckay;

namespace {

GroupData group(const char* name) { return build_group(parse_descriptor(name)); }

DimVector dv(std::vector<long> v) {
  DimVector d;
  d.components = std::move(v);
  return d;
}

AdhmData young_adhm(const GammaDescriptor& g, const std::vector<int>& rows) { return monomial_ideal_adhm(g, rows); }

std::vector<int> random_partition(int size, std::mt19937_64& rng) {
  std::vector<int> rows;
  int left = size;
  while (left > 0) {
    const int cap = rows.empty() ? left : std::min(left, rows.back());
    std::uniform_int_distribution<int> d(1, cap);
    rows.push_back(d(rng));
    left -= rows.back();
  }
  return rows;
}

/// Equivariant change of basis inside each weight space.
AdhmData twist(AdhmData d, std::mt19937_64& rng) {
  const auto N = d.weights.size();
  Matrix<Rational> p(N, N);
  for (;;) {
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) p(r, c) = d.weights[r] == d.weights[c] ? random_scalar<Rational>(rng) : Rational(0);
    if (is_invertible(p)) break;
  }
  const auto inv = *inverse(p);
  d.B1 = p * d.B1 * inv;
  d.B2 = p * d.B2 * inv;
  d.i = p * d.i;
  d.j = d.j * inv;
  return d;
}

}  // namespace

TEST_CASE("sufficiency") {
  for (const char* name : {"A1", "A2", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    const auto g = group(name);
    const auto q = mckay_quiver(g);
    for (long n : {0L, 1L, 3L}) {
      DimVector v = delta(g);
      for (auto& x : v.components) x *= n;
      CHECK(is_sufficient(v, {0}, q));
      CHECK(is_sufficient(v, {static_cast<int>(g.vertex_count()) - 1}, q));
    }
  }
  const auto a2 = mckay_quiver(group("A2"));
  CHECK_FALSE(is_sufficient(dv({5, 0, 3}), {0}, a2));
  CHECK(is_sufficient(dv({0, 0, 0}), {0}, a2));
}

TEST_CASE("minimal sufficient completion") {
  const auto a1 = mckay_quiver(group("A1"));
  for (long n = 0; n <= 6; ++n) {
    const auto c = minimal_sufficient_completion(dv({n, 0}), {0}, a1);
    CHECK(c.components == std::vector<long>{n, n});
    // brute force over the single free coordinate
    long least = -1;
    for (long v1 = 0; v1 <= 2 * n && least < 0; ++v1)
      if (is_sufficient(dv({n, v1}), {0}, a1)) least = v1;
    CHECK(least == n);
  }
  const auto a3 = mckay_quiver(group("A3"));
  CHECK(minimal_sufficient_completion(dv({2, 5, 1, 7}), {0, 1, 2, 3}, a3).components == std::vector<long>{2, 5, 1, 7});

  std::mt19937_64 rng(2);
  for (const char* name : {"A2", "A4", "D4", "D6", "E6", "E8"}) {
    const auto g = group(name);
    const auto q = mckay_quiver(g);
    const int n = q.base_vertex_count();
    for (int t = 0; t < 10; ++t) {
      std::vector<int> I;
      while (I.empty())
        for (int k = 0; k < n; ++k)
          if (rng() % 3 == 0) I.push_back(k);
      DimVector v;
      for (int k = 0; k < n; ++k) v.components.push_back(static_cast<long>(rng() % 5));
      const auto c = minimal_sufficient_completion(v, I, q);
      CHECK(is_sufficient(c, I, q));
      // minimality: lowering any free coordinate breaks sufficiency
      for (int k = 0; k < n; ++k) {
        if (std::find(I.begin(), I.end(), k) != I.end()) {
          CHECK(c.components[static_cast<std::size_t>(k)] == v.components[static_cast<std::size_t>(k)]);
          continue;
        }
        if (c.components[static_cast<std::size_t>(k)] == 0) continue;
        auto lower = c;
        --lower.components[static_cast<std::size_t>(k)];
        CHECK_FALSE(is_sufficient(lower, I, q));
      }
    }
  }
}

TEST_CASE("ADHM data from Young diagrams gives stable flat modules") {
  std::mt19937_64 rng(7);
  for (const char* name : {"A1", "A2", "A3"}) {
    const auto g = parse_descriptor(name);
    for (int size = 0; size <= 5; ++size) {
      const auto rows = random_partition(size, rng);
      const auto m = adhm_build_cyclic(twist(young_adhm(g, rows), rng));
      for (const auto& [v, r] : check_relations(m)) CHECK(r.is_zero());
      CHECK(is_flat(m));
      CHECK(m.total_dim() == static_cast<std::size_t>(size) + 1);
      std::vector<int> all;
      for (int k = 0; k <= g.rank; ++k) all.push_back(k);
      CHECK(is_stable_for(m, all));
      CHECK(dimension_bound_check(m, all));
      const auto plain = adhm_build_cyclic(young_adhm(g, rows));
      if (plain.total_dim() <= kBruteForceMaxDim) {
        CHECK(brute_force_stability(plain, theta_I(all, plain.dim_vector()), 5).stable);
      }
    }
  }
}

TEST_CASE("ADHM examples and errors") {
  const auto a1 = parse_descriptor("A1");
  const auto empty = adhm_build_cyclic(young_adhm(a1, {}));
  CHECK(empty.dims == std::vector<std::size_t>{0, 0, 1});
  CHECK(is_stable_for(empty, {0}));
  CHECK(dimension_bound_check(empty, {0}));

  const auto two = adhm_build_cyclic(young_adhm(a1, {2}));
  CHECK(two.dims == std::vector<std::size_t>{1, 1, 1});
  CHECK(is_stable_for(two, {0, 1}));
  CHECK(dimension_bound_check(two, {0, 1}));
  CHECK_FALSE(is_stable_for(two, {0}));

  auto bad = young_adhm(a1, {2});
  bad.weights = {0, 0};
  try {
    adhm_build_cyclic(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotEquivariant);
  }
  auto noncommuting = young_adhm(parse_descriptor("A2"), {3});
  noncommuting.B2 = Matrix<Rational>(3, 3);
  noncommuting.B2(1, 2) = 1;  // weight 1 -> weight 2, but B1 B2 != B2 B1
  try {
    adhm_build_cyclic(noncommuting);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMomentMapNonzero);
  }
  auto d4 = young_adhm(a1, {1});
  d4.group = parse_descriptor("D4");
  CHECK_THROWS_AS(adhm_build_cyclic(d4), Error);
}

TEST_CASE("dimension bound holds for stable modules") {
  std::mt19937_64 rng(17);
  for (const char* name : {"A1", "A2", "A3", "A4"}) {
    const auto g = parse_descriptor(name);
    const int n = g.rank + 1;
    std::vector<int> all;
    for (int k = 0; k < n; ++k) all.push_back(k);
    for (int t = 0; t < 25; ++t) {
      const auto m = adhm_build_cyclic(twist(young_adhm(g, random_partition(1 + t % 6, rng)), rng));
      std::vector<int> I{0};
      for (int k = 1; k < n; ++k)
        if (rng() % 2) I.push_back(k);
      if (is_stable_for(m, I)) CHECK(dimension_bound_check(m, I));
      const auto pushed = vgit_pushforward(m, all, I);
      CHECK(is_stable_for(pushed.core, I));
      CHECK(dimension_bound_check(pushed.core, I));
    }
  }
}

TEST_CASE("dimension bound preconditions") {
  const auto g = group("A1");
  const auto q = frame_quiver(mckay_quiver(g), one_bar(g));
  const auto zero = zero_rep<Rational>(q, {1, 0, 1});
  try {
    dimension_bound_check(zero, {0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotStable);
  }
  const auto only_inf = zero_rep<Rational>(q, {0, 0, 1});
  CHECK_THROWS_AS(dimension_bound_check(only_inf, {1}), Error);
}

TEST_CASE("VGIT pushforward") {
  std::mt19937_64 rng(23);
  const auto g = parse_descriptor("A2");
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const auto m = adhm_build_cyclic(twist(young_adhm(g, random_partition(1 + t % 5, rng)), rng));
    const std::vector<int> all{0, 1, 2};
    // same chamber: nothing happens
    const auto same = vgit_pushforward(m, all, all);
    CHECK(same.simples.empty());
    CHECK(are_isomorphic(same.core, m));

    const auto direct = vgit_pushforward(m, all, {0});
    const auto chained = vgit_chain(m, {all, {0, 1}, {0}});
    CHECK(same_polystable(direct, chained));
    CHECK(is_stable_for(direct.core, {0}));
    std::vector<std::size_t> sum(m.dims.size(), 0);
    for (const auto& s : direct.summands())
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += s.dims[v];
    CHECK(sum == m.dims);
    CHECK(dimension_bound_check(direct.core, {0}));
    ++checked;
  }
  CHECK(checked == 30);
  const auto q = frame_quiver(mckay_quiver(build_group(g)), one_bar(build_group(g)));
  const auto zero = zero_rep<Rational>(q, {1, 0, 0, 1});
  try {
    vgit_pushforward(zero, {0, 1, 2}, {0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotStableForSource);
  }
}

TEST_CASE("Quot check") {
  const auto g = group("A1");
  const auto pi = PathAlgebra::preprojective(mckay_quiver(g));
  const CornerAlgebra c(pi, {0});
  // zero module
  QuotModule<Rational> zero{{c.corner(), {0}, {}}, {}};
  for (const auto& gen : c.generators()) {
    (void)gen;
    zero.module.actions.emplace_back(0, 0);
  }
  CHECK(check_quot_correspondence(zero, c).components == std::vector<long>{0, 0});
  // the truncated projective itself, marked by its unit
  const auto trunc = truncated_corner_projective(c, 0, 4);
  QuotModule<Rational> whole{trunc, std::vector<Rational>(trunc.dims[0], Rational(0))};
  whole.marked[0] = 1;
  CHECK(check_quot_correspondence(whole, c).components == std::vector<long>{9, 0});
  // one degree too many
  const auto too_big = truncated_corner_projective(c, 0, 6);
  QuotModule<Rational> big{too_big, std::vector<Rational>(too_big.dims[0], Rational(0))};
  big.marked[0] = 1;
  try {
    check_quot_correspondence(big, c);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAQuotient);
  }
  // ADHM modules for the Hilbert scheme of points give quotients
  std::mt19937_64 rng(3);
  for (int size = 1; size <= 4; ++size) {
    const auto m = adhm_build_cyclic(young_adhm(parse_descriptor("A1"), random_partition(size, rng)));
    const auto z = quot_module_of(m, c);
    CHECK(check_quot_correspondence(z, c).components[0] == static_cast<long>(m.dims[0]));
  }
  const CornerAlgebra c1(pi, {1});
  CHECK_THROWS_AS(check_quot_correspondence(zero, c1), Error);
}
