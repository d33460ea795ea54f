#include "mckay/gamma_data.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "mckay/error.hpp"

namespace mckay {

namespace {

constexpr double kCharacterTolerance = 1e-9;
constexpr double kIntegralityTolerance = 1e-6;

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 inverse_sl2(const Mat2& a) { return {a[3], -a[1], -a[2], a[0]}; }

bool close(const Mat2& a, const Mat2& b) {
  for (int k = 0; k < 4; ++k)
    if (std::abs(a[k] - b[k]) > 1e-9) return false;
  return true;
}

Mat2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

Mat2 power(const Mat2& a, int e) {
  Mat2 r = identity2();
  for (int k = 0; k < e; ++k) r = multiply(r, a);
  return r;
}

std::size_t index_of(const std::vector<Mat2>& elems, const Mat2& x) {
  for (std::size_t k = 0; k < elems.size(); ++k)
    if (close(elems[k], x)) return k;
  throw std::logic_error("group not closed under conjugation");
}

// Fills element_class / class_sizes by brute-force conjugation.
void compute_classes(GroupData& g) {
  const auto& el = g.elements;
  g.element_class.assign(el.size(), static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t x = 0; x < el.size(); ++x) {
    if (g.element_class[x] != static_cast<std::size_t>(-1)) continue;
    std::size_t size = 0;
    for (const auto& h : el) {
      const auto y = index_of(el, multiply(multiply(h, el[x]), inverse_sl2(h)));
      if (g.element_class[y] == static_cast<std::size_t>(-1)) {
        g.element_class[y] = next;
        ++size;
      }
    }
    g.class_sizes.push_back(size);
    ++next;
  }
}

// Per-element characters -> per-class table, checking they are class functions.
std::vector<Complex> to_class_function(const GroupData& g, const std::vector<Complex>& per_element) {
  std::vector<Complex> out(g.class_sizes.size());
  std::vector<bool> seen(out.size(), false);
  for (std::size_t e = 0; e < per_element.size(); ++e) {
    const auto c = g.element_class[e];
    if (!seen[c]) {
      out[c] = per_element[e];
      seen[c] = true;
    } else if (std::abs(out[c] - per_element[e]) > kCharacterTolerance) {
      throw std::logic_error("character is not a class function");
    }
  }
  return out;
}

GroupData cyclic_group(const GammaDescriptor& d) {
  const int n = d.rank + 1;
  GroupData g;
  g.descriptor = d;
  g.order = static_cast<std::size_t>(n);
  const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / n);
  for (int m = 0; m < n; ++m) {
    const Complex z = std::pow(zeta, m);
    g.elements.push_back({z, 0.0, 0.0, 1.0 / z});
  }
  compute_classes(g);
  for (int k = 0; k < n; ++k) {
    std::vector<Complex> chi;
    for (int m = 0; m < n; ++m) chi.push_back(std::pow(zeta, k * m));
    g.characters.push_back(to_class_function(g, chi));
    g.irrep_dims.push_back(1);
  }
  return g;
}

GroupData binary_dihedral_group(const GammaDescriptor& d) {
  const int n = d.rank - 2;
  GroupData g;
  g.descriptor = d;
  g.order = static_cast<std::size_t>(4 * n);
  const Complex zeta = std::polar(1.0, std::numbers::pi / n);
  const Mat2 a = {zeta, 0.0, 0.0, 1.0 / zeta};
  const Mat2 b = {0.0, 1.0, -1.0, 0.0};
  // element index s*2n + m is b^s a^m
  for (int s = 0; s < 2; ++s)
    for (int m = 0; m < 2 * n; ++m) g.elements.push_back(multiply(power(b, s), power(a, m)));
  compute_classes(g);

  auto one_dim = [&](Complex alpha, Complex beta) {
    std::vector<Complex> chi;
    for (int s = 0; s < 2; ++s)
      for (int m = 0; m < 2 * n; ++m) chi.push_back(std::pow(beta, s) * std::pow(alpha, m));
    g.characters.push_back(to_class_function(g, chi));
    g.irrep_dims.push_back(1);
  };
  const Complex far_beta = (n % 2 == 0) ? Complex(1.0) : Complex(0.0, 1.0);
  one_dim(1.0, 1.0);
  one_dim(1.0, -1.0);
  for (int h = 1; h < n; ++h) {
    const Complex zh = std::pow(zeta, h);
    const Mat2 ra = {zh, 0.0, 0.0, 1.0 / zh};
    const Mat2 rb = {0.0, (h % 2 == 0) ? 1.0 : -1.0, 1.0, 0.0};
    std::vector<Complex> chi;
    for (int s = 0; s < 2; ++s)
      for (int m = 0; m < 2 * n; ++m) {
        const Mat2 x = multiply(power(rb, s), power(ra, m));
        chi.push_back(x[0] + x[3]);
      }
    g.characters.push_back(to_class_function(g, chi));
    g.irrep_dims.push_back(2);
  }
  one_dim(-1.0, far_beta);
  one_dim(-1.0, -far_beta);
  return g;
}

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kHalfSqrt3 = std::numbers::sqrt3 / 2.0;
constexpr double kPhi = std::numbers::phi;

struct StoredTable {
  std::size_t order;
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<Complex>> characters;
};

// Generated by tools/gen_e_tables.py; class 0 is the identity.
StoredTable binary_polyhedral_table(int rank) {
  switch (rank) {
    case 6:
      return {24,
              {1, 6, 4, 1, 4, 4, 4},
              {
                  {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}},
                  {{2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {-2.0, 0.0}, {-1.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}},
                  {{3.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {3.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                  {{2.0, 0.0}, {0.0, 0.0}, {-0.5, kHalfSqrt3}, {-2.0, 0.0}, {0.5, -kHalfSqrt3}, {0.5, kHalfSqrt3}, {-0.5, -kHalfSqrt3}},
                  {{1.0, 0.0}, {1.0, 0.0}, {-0.5, kHalfSqrt3}, {1.0, 0.0}, {-0.5, kHalfSqrt3}, {-0.5, -kHalfSqrt3}, {-0.5, -kHalfSqrt3}},
                  {{2.0, 0.0}, {0.0, 0.0}, {-0.5, -kHalfSqrt3}, {-2.0, 0.0}, {0.5, kHalfSqrt3}, {0.5, -kHalfSqrt3}, {-0.5, kHalfSqrt3}},
                  {{1.0, 0.0}, {1.0, 0.0}, {-0.5, -kHalfSqrt3}, {1.0, 0.0}, {-0.5, -kHalfSqrt3}, {-0.5, kHalfSqrt3}, {-0.5, kHalfSqrt3}},
              }};
    case 7:
      return {48,
              {1, 6, 8, 6, 1, 8, 6, 12},
              {
                  {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}},
                  {{2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {kSqrt2, 0.0}, {-2.0, 0.0}, {-1.0, 0.0}, {-kSqrt2, 0.0}, {0.0, 0.0}},
                  {{3.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {3.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}},
                  {{4.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {-4.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                  {{3.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {3.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}},
                  {{2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {-kSqrt2, 0.0}, {-2.0, 0.0}, {-1.0, 0.0}, {kSqrt2, 0.0}, {0.0, 0.0}},
                  {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}, {-1.0, 0.0}},
                  {{2.0, 0.0}, {2.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
              }};
    default:
      return {120,
              {1, 20, 12, 20, 30, 12, 1, 12, 12},
              {
                  {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}},
                  {{2.0, 0.0}, {1.0, 0.0}, {kPhi, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {(kPhi - 1.0), 0.0}, {-2.0, 0.0}, {-kPhi, 0.0}, {(1.0 - kPhi), 0.0}},
                  {{3.0, 0.0}, {0.0, 0.0}, {kPhi, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {(1.0 - kPhi), 0.0}, {3.0, 0.0}, {kPhi, 0.0}, {(1.0 - kPhi), 0.0}},
                  {{4.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {-4.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}},
                  {{5.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {5.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
                  {{6.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {-6.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}},
                  {{4.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {4.0, 0.0}, {-1.0, 0.0}, {-1.0, 0.0}},
                  {{2.0, 0.0}, {1.0, 0.0}, {(1.0 - kPhi), 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {-kPhi, 0.0}, {-2.0, 0.0}, {(kPhi - 1.0), 0.0}, {kPhi, 0.0}},
                  {{3.0, 0.0}, {0.0, 0.0}, {(1.0 - kPhi), 0.0}, {0.0, 0.0}, {-1.0, 0.0}, {kPhi, 0.0}, {3.0, 0.0}, {(1.0 - kPhi), 0.0}, {kPhi, 0.0}},
              }};
  }
}

GroupData binary_polyhedral_group(const GammaDescriptor& d) {
  auto table = binary_polyhedral_table(d.rank);
  GroupData g;
  g.descriptor = d;
  g.order = table.order;
  g.class_sizes = std::move(table.class_sizes);
  g.characters = std::move(table.characters);
  for (const auto& row : g.characters) g.irrep_dims.push_back(static_cast<int>(std::lround(row[0].real())));
  return g;
}

}  // namespace

GammaDescriptor parse_descriptor(const std::string& text) {
  if (text.size() < 2) throw Error(ErrorCode::kInvalidDescriptor, "'" + text + "'");
  GammaDescriptor d;
  switch (text[0]) {
    case 'A': d.series = Series::A; break;
    case 'D': d.series = Series::D; break;
    case 'E': d.series = Series::E; break;
    default: throw Error(ErrorCode::kInvalidDescriptor, "unknown series in '" + text + "'");
  }
  const std::string digits = text.substr(1);
  for (char c : digits)
    if (c < '0' || c > '9') throw Error(ErrorCode::kInvalidDescriptor, "bad rank in '" + text + "'");
  if (digits.size() > 4) throw Error(ErrorCode::kInvalidDescriptor, "rank too large in '" + text + "'");
  d.rank = std::stoi(digits);
  validate(d);
  return d;
}

std::string to_string(const GammaDescriptor& d) {
  const char c = d.series == Series::A ? 'A' : d.series == Series::D ? 'D' : 'E';
  return std::string(1, c) + std::to_string(d.rank);
}

void validate(const GammaDescriptor& d) {
  bool ok = false;
  switch (d.series) {
    case Series::A: ok = d.rank >= 1; break;
    case Series::D: ok = d.rank >= 4; break;
    case Series::E: ok = d.rank >= 6 && d.rank <= 8; break;
  }
  if (!ok) throw Error(ErrorCode::kInvalidDescriptor, "rank out of range for " + to_string(d));
}

GroupData build_group(const GammaDescriptor& descriptor) {
  validate(descriptor);
  GroupData g;
  switch (descriptor.series) {
    case Series::A: g = cyclic_group(descriptor); break;
    case Series::D: g = binary_dihedral_group(descriptor); break;
    case Series::E: g = binary_polyhedral_group(descriptor); break;
  }
  if (g.has_elements()) {
    std::vector<Complex> traces;
    for (const auto& x : g.elements) traces.push_back(x[0] + x[3]);
    g.defining_character = to_class_function(g, traces);
  } else {
    g.defining_character = g.characters.at(1);
  }
  if (orthogonality_defect(g) > kCharacterTolerance) {
    throw std::logic_error("character table of " + to_string(descriptor) + " fails orthogonality");
  }
  return g;
}

double orthogonality_defect(const GroupData& g) {
  double worst = 0.0;
  const auto n = g.characters.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t c = 0; c < g.class_sizes.size(); ++c)
        sum += static_cast<double>(g.class_sizes[c]) * g.characters[i][c] * std::conj(g.characters[j][c]);
      sum /= static_cast<double>(g.order);
      worst = std::max(worst, std::abs(sum - Complex(i == j ? 1.0 : 0.0)));
    }
  return worst;
}

int tensor_multiplicity(const GroupData& g, std::size_t i, std::size_t j) {
  Complex sum = 0.0;
  for (std::size_t c = 0; c < g.class_sizes.size(); ++c) {
    sum += static_cast<double>(g.class_sizes[c]) * g.defining_character[c] * g.characters.at(i)[c] *
           std::conj(g.characters.at(j)[c]);
  }
  sum /= static_cast<double>(g.order);
  const double rounded = std::round(sum.real());
  if (std::abs(sum - Complex(rounded)) > kIntegralityTolerance || rounded < 0) {
    throw Error(ErrorCode::kNonIntegralMultiplicity,
                "multiplicity (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                    std::to_string(sum.real()) + "+" + std::to_string(sum.imag()) + "i");
  }
  return static_cast<int>(rounded);
}

std::vector<std::vector<int>> affine_dynkin_adjacency(const GammaDescriptor& d) {
  validate(d);
  const int n = d.rank + 1;
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  auto edge = [&](int a, int b) {
    adj[a][b] += 1;
    adj[b][a] += 1;
  };
  switch (d.series) {
    case Series::A:
      if (n == 2) {
        edge(0, 1);
        edge(0, 1);
      } else {
        for (int k = 0; k < n; ++k) edge(k, (k + 1) % n);
      }
      break;
    case Series::D:
      edge(0, 2);
      edge(1, 2);
      for (int k = 2; k < d.rank - 2; ++k) edge(k, k + 1);
      edge(d.rank - 2, d.rank - 1);
      edge(d.rank - 2, d.rank);
      break;
    case Series::E:
      if (d.rank == 6) {
        for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}) edge(a, b);
      } else if (d.rank == 7) {
        for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}}) edge(a, b);
      } else {
        for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}})
          edge(a, b);
      }
      break;
  }
  return adj;
}

}  // namespace mckay
