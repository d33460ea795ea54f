#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace mckay {

enum class Series { A, D, E };

/// ADE type of a finite subgroup of SL(2,C); the affine diagram has rank + 1 vertices.
struct GammaDescriptor {
  Series series = Series::A;
  int rank = 1;

  friend bool operator==(const GammaDescriptor&, const GammaDescriptor&) = default;
};

/// Accepts "A<r>" (r >= 1), "D<r>" (r >= 4), "E6", "E7", "E8".
GammaDescriptor parse_descriptor(const std::string& text);
std::string to_string(const GammaDescriptor& d);
void validate(const GammaDescriptor& d);

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major 2x2

/// A finite subgroup of SL(2,C) with its character table.
///
/// Irreducibles are indexed 0..rank in the vertex order of the affine diagram
/// (A: cycle order, rho_k = k-th power of the generator's eigenvalue; D: the two
/// 1-dimensional irreps at the trivial end, the chain of 2-dimensional ones, then
/// the two at the far end; E: trivial irrep at the end of the long arm). Row 0 is
/// the trivial representation.
struct GroupData {
  GammaDescriptor descriptor;
  std::size_t order = 0;
  std::vector<Mat2> elements;          // empty for series E
  std::vector<std::size_t> element_class;  // class index of each element
  std::vector<std::vector<Complex>> characters;  // [irrep][class]
  std::vector<std::size_t> class_sizes;
  std::vector<int> irrep_dims;
  std::vector<Complex> defining_character;  // trace of the 2-dim defining representation, per class

  std::size_t vertex_count() const { return irrep_dims.size(); }
  bool has_elements() const { return !elements.empty(); }
};

GroupData build_group(const GammaDescriptor& descriptor);

/// dim Hom(rho_j, rho_i (x) V); throws kNonIntegralMultiplicity if the
/// character sum is not within 1e-6 of an integer.
int tensor_multiplicity(const GroupData& g, std::size_t i, std::size_t j);

/// Largest deviation from row orthonormality of the character table.
double orthogonality_defect(const GroupData& g);

/// Hard-coded affine Dynkin adjacency (edge multiplicities) in the vertex order above.
std::vector<std::vector<int>> affine_dynkin_adjacency(const GammaDescriptor& d);

}  // namespace mckay
