#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mckay/gamma_data.hpp"
#include "mckay/scalar.hpp"

namespace mckay {

struct Arrow {
  int id = 0;
  int tail = 0;
  int head = 0;
  std::optional<int> bar;  // absent for the loops of a tripled quiver

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Doubled McKay quiver, optionally framed and/or tripled.
///
/// Vertices 0..r are the irreducibles of the group; a framed quiver appends the
/// framing vertex at index r+1. Within a bar pair the arrow with the smaller id
/// is the positive one; relations are signed by that orientation.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::string group, int base_vertices, std::vector<Arrow> arrows);

  const std::string& group() const { return group_; }
  int base_vertex_count() const { return base_vertices_; }
  int vertex_count() const { return base_vertices_ + (framed() ? 1 : 0); }
  bool framed() const { return framing_.has_value(); }
  bool tripled() const { return !loops_.empty(); }
  std::optional<int> infinity() const {
    return framed() ? std::optional<int>(base_vertices_) : std::nullopt;
  }

  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int id) const { return arrows_.at(static_cast<std::size_t>(id)); }
  std::size_t arrow_count() const { return arrows_.size(); }
  bool is_loop(int id) const { return !arrow(id).bar.has_value(); }
  bool is_positive(int id) const { return arrow(id).bar && id < *arrow(id).bar; }
  bool is_framing_arrow(int id) const;

  /// Loop arrow at a base vertex of a tripled quiver.
  std::optional<int> loop(int vertex) const;
  const std::vector<int>& loops() const { return loops_; }
  /// Framing multiplicities w (one per base vertex), when framed.
  const std::optional<std::vector<int>>& framing() const { return framing_; }

  /// Undirected edge multiplicities among base vertices (framing and loops excluded).
  std::vector<std::vector<int>> adjacency() const;

  std::string vertex_label(int v) const;
  /// Inverse of vertex_label; nullopt if unknown.
  std::optional<int> vertex_from_label(const std::string& label) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

  // construction helpers used by the builders below
  void set_loops(std::vector<int> loops) { loops_ = std::move(loops); }
  void set_framing(std::vector<int> w) { framing_ = std::move(w); }
  void clear_framing() { framing_.reset(); }
  std::vector<Arrow>& mutable_arrows() { return arrows_; }

 private:
  std::string group_;
  int base_vertices_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<int> loops_;
  std::optional<std::vector<int>> framing_;
};

/// Vertex-indexed natural numbers; at_infinity is set for framed dimension vectors.
struct DimVector {
  std::optional<long> at_infinity;
  std::vector<long> components;

  long total() const;
  long at(int vertex, const Quiver& q) const;  // vertex may be the framing vertex
  bool componentwise_le(const DimVector& other) const;
  std::string to_string() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
};

struct StabilityParam {
  Rational at_infinity = 0;
  std::vector<Rational> values;

  /// theta(dim) with the framing coordinate weighted by at_infinity.
  Rational evaluate(const DimVector& d) const;
  friend bool operator==(const StabilityParam&, const StabilityParam&) = default;
};

Quiver mckay_quiver(const GroupData& g);
Quiver frame_quiver(const Quiver& q, const DimVector& w);
Quiver unframe_quiver(const Quiver& q);
Quiver triple_quiver(const Quiver& q);

/// 1 on I, 0 on the remaining base vertices, -sum_{i in I} v_i at infinity.
StabilityParam theta_I(const std::vector<int>& corner, const DimVector& v);
DimVector delta(const GroupData& g);
DimVector one_bar(const GroupData& g);

/// Sorted, deduplicated corner set; throws kEmptyCorner / kVertexNotInCorner on bad input.
std::vector<int> normalize_corner(std::vector<int> corner, int base_vertices);

}  // namespace mckay
