#pragma once

// Value types shared by every module: compositions, q-ary and multiply
// constant-weight codewords, and edge-colored digraphs with their degree and
// edge vectors.
//
// Internally vertices and colors are 0-based. Files and the CLI use 1-based
// labels; see io.hpp.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Multiplicities [w_1, ..., w_{q-1}] of the nonzero symbols of a word.
/// Stored in symbol order; monotonicity is checked, never imposed.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int q() const noexcept { return static_cast<int>(parts_.size()) + 1; }
  [[nodiscard]] int symbol_count() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int weight() const noexcept;
  [[nodiscard]] int operator[](std::size_t i) const { return parts_.at(i); }

  /// w_1 >= w_2 >= ... >= w_{q-1} > 0.
  [[nodiscard]] bool is_monotone() const noexcept;
  void require_monotone() const;

  [[nodiscard]] std::string to_string() const;  // "[2,1]"
  static Composition parse(const std::string& text);  // "2,1" or "[2,1]"

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// A word over Z_q of length n.
class Codeword {
 public:
  Codeword(int q, std::vector<int> symbols);

  [[nodiscard]] int q() const noexcept { return q_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(symbols_.size()); }
  [[nodiscard]] const std::vector<int>& symbols() const noexcept { return symbols_; }
  [[nodiscard]] int operator[](std::size_t x) const { return symbols_.at(x); }

  [[nodiscard]] std::vector<int> support() const;
  [[nodiscard]] int weight() const noexcept;

  friend auto operator<=>(const Codeword&, const Codeword&) = default;
  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  int q_ = 2;
  std::vector<int> symbols_;
};

[[nodiscard]] int hamming_distance(const Codeword& u, const Codeword& v);
[[nodiscard]] Composition composition_of(const Codeword& u);

/// A q-ary code. Construction rejects duplicates and mixed lengths; the
/// declared distance, when set, is enforced by verify(), not by the constructor.
class Code {
 public:
  Code(int q, int n, std::vector<Codeword> words = {},
       std::optional<int> declared_distance = std::nullopt);

  [[nodiscard]] int q() const noexcept { return q_; }
  [[nodiscard]] int length() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
  [[nodiscard]] const std::vector<Codeword>& words() const noexcept { return words_; }
  [[nodiscard]] std::optional<int> declared_distance() const noexcept { return declared_distance_; }

  void insert(Codeword word);
  /// Smallest pairwise distance; nullopt for fewer than two words.
  [[nodiscard]] std::optional<int> minimum_distance() const;

 private:
  int q_;
  int n_;
  std::vector<Codeword> words_;
  std::optional<int> declared_distance_;
};

/// Binary m x n array whose every row has weight w.
class McwcWord {
 public:
  McwcWord(int w, std::vector<std::vector<std::uint8_t>> rows);

  [[nodiscard]] int m() const noexcept { return static_cast<int>(rows_.size()); }
  [[nodiscard]] int n() const noexcept { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  [[nodiscard]] int w() const noexcept { return w_; }
  [[nodiscard]] const std::vector<std::vector<std::uint8_t>>& rows() const noexcept { return rows_; }
  [[nodiscard]] std::vector<int> row_support(int row) const;

  friend bool operator==(const McwcWord&, const McwcWord&) = default;

 private:
  int w_;
  std::vector<std::vector<std::uint8_t>> rows_;
};

[[nodiscard]] int hamming_distance(const McwcWord& u, const McwcWord& v);

struct McwcCode {
  int m = 1;
  int n = 1;
  int w = 1;
  std::vector<McwcWord> words;
};

struct Edge {
  int from;
  int to;
  int color;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Per-vertex (in_1, out_1, ..., in_r, out_r); index 2c is in, 2c+1 is out.
struct DegreeVector {
  std::vector<long long> entries;
  [[nodiscard]] long long in(int color) const { return entries.at(2 * static_cast<std::size_t>(color)); }
  [[nodiscard]] long long out(int color) const { return entries.at(2 * static_cast<std::size_t>(color) + 1); }
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// Per-color edge counts (m_1, ..., m_r).
struct EdgeVector {
  std::vector<long long> entries;
  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;
};

/// Edge-colored digraph on vertices [0, vertex_count) with colors [0, color_count).
/// Edges are kept sorted and unique.
class ColoredDigraph {
 public:
  ColoredDigraph(int vertex_count, int color_count, std::vector<Edge> edges = {});

  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] int color_count() const noexcept { return color_count_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] bool has_edge(const Edge& e) const;

  friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;

 private:
  int vertex_count_;
  int color_count_;
  std::vector<Edge> edges_;
};

/// K_n^(r): every ordered pair of distinct vertices in every color.
[[nodiscard]] ColoredDigraph complete_digraph(int n, int colors);

[[nodiscard]] DegreeVector degree_vector(const ColoredDigraph& g, int vertex);
[[nodiscard]] EdgeVector edge_vector(const ColoredDigraph& g);

}  // namespace ecd
