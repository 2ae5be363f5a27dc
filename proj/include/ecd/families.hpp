#pragma once

// Builders for the edge-colored digraph families whose decompositions yield
// codes: G(w̄) and G*(w̄) for constant-composition codes, their unions over
// all generalized compositions for constant-weight codes, and H*(m, w) for
// multiply constant-weight codes.

#include <string>
#include <vector>

#include "ecd/core.hpp"

namespace ecd {

/// Vertex ids of each symbol class, laid out class by class. Zero parts give
/// empty classes.
using ClassLayout = std::vector<std::vector<int>>;

struct FamilyMember {
  std::string label;
  bool main = false;
  ColoredDigraph graph;
  /// Symbol classes S_1..S_{q-1} of a main graph; empty for other members.
  ClassLayout classes;

  [[nodiscard]] bool has_classes() const noexcept { return !classes.empty(); }
  [[nodiscard]] bool is_single_edge() const noexcept {
    return !has_classes() && graph.vertex_count() == 2 && graph.edge_count() == 1 && graph.edges().front().from == 0;
  }
};

enum class FamilyKind { G, GStar, GCwc, GStarCwc, HStar, Custom };

[[nodiscard]] std::string to_string(FamilyKind kind);
[[nodiscard]] FamilyKind family_kind_from_string(const std::string& text);

struct DigraphFamily {
  std::string name;
  FamilyKind kind = FamilyKind::Custom;
  int color_count = 1;
  /// Number of nonzero symbols (q - 1, or m for H*); 0 when unknown.
  int symbol_count = 0;
  /// Generator parameters: w̄ for G/G*, {q, w} for the CWC families, {m, w} for H*.
  std::vector<int> params;
  std::vector<FamilyMember> members;

  [[nodiscard]] const FamilyMember& member(const std::string& label) const;
  [[nodiscard]] std::vector<std::string> main_labels() const;
  /// Checks shared color set, unique labels and class metadata consistency.
  void validate() const;
};

/// Color (i, j) of a pair-colored graph over `symbols` symbols (0-based).
[[nodiscard]] constexpr int pair_color(int i, int j, int symbols) noexcept { return i * symbols + j; }

[[nodiscard]] ClassLayout class_layout(const Composition& comp);

[[nodiscard]] ColoredDigraph build_G(const Composition& comp);
[[nodiscard]] ColoredDigraph build_Gstar(const Composition& comp);
/// Two vertices, one edge 0 -> 1 of the given (0-based) color.
[[nodiscard]] ColoredDigraph build_single_edge(int color, int color_count);

[[nodiscard]] DigraphFamily family_G(const Composition& comp);
[[nodiscard]] DigraphFamily family_Gstar(const Composition& comp);

/// All length-(q-1) nonnegative tuples summing to w, lexicographically descending.
[[nodiscard]] std::vector<Composition> composition_set_W(int q, int w);

[[nodiscard]] DigraphFamily family_G_cwc(int q, int w);
[[nodiscard]] DigraphFamily family_Gstar_cwc(int q, int w);
[[nodiscard]] DigraphFamily family_Hstar(int m, int w);

}  // namespace ecd
