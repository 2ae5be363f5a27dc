#include "ecd/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ecd {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("composition needs at least one part (q >= 2)");
  for (int p : parts_) {
    if (p < 0) throw InvalidArgument("composition parts must be nonnegative: " + to_string());
  }
}

int Composition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_monotone() const noexcept {
  if (parts_.empty() || parts_.back() <= 0) return false;
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{});
}

void Composition::require_monotone() const {
  if (!is_monotone()) {
    throw InvalidArgument("composition " + to_string() + " is not of the form w1 >= w2 >= ... > 0");
  }
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

Composition Composition::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != '[' && c != ']' && c != ' ') s.push_back(c);
  }
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument("bad composition '" + text + "'");
    }
  }
  return Composition(std::move(parts));
}

Codeword::Codeword(int q, std::vector<int> symbols) : q_(q), symbols_(std::move(symbols)) {
  if (q_ < 2) throw InvalidArgument("alphabet size must be at least 2");
  for (int s : symbols_) {
    if (s < 0 || s >= q_) throw InvalidArgument("symbol " + std::to_string(s) + " outside Z_" + std::to_string(q_));
  }
}

std::vector<int> Codeword::support() const {
  std::vector<int> out;
  for (int x = 0; x < length(); ++x) {
    if (symbols_[x] != 0) out.push_back(x);
  }
  return out;
}

int Codeword::weight() const noexcept {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(), [](int s) { return s != 0; }));
}

int hamming_distance(const Codeword& u, const Codeword& v) {
  if (u.length() != v.length() || u.q() != v.q()) {
    throw DimensionError("hamming_distance: words differ in length or alphabet");
  }
  int d = 0;
  for (int x = 0; x < u.length(); ++x) d += u[x] != v[x];
  return d;
}

Composition composition_of(const Codeword& u) {
  std::vector<int> parts(static_cast<std::size_t>(u.q() - 1), 0);
  for (int s : u.symbols()) {
    if (s != 0) ++parts[static_cast<std::size_t>(s - 1)];
  }
  return Composition(std::move(parts));
}

Code::Code(int q, int n, std::vector<Codeword> words, std::optional<int> declared_distance)
    : q_(q), n_(n), declared_distance_(declared_distance) {
  if (q_ < 2) throw InvalidArgument("alphabet size must be at least 2");
  if (n_ < 1) throw InvalidArgument("code length must be positive");
  if (declared_distance_ && *declared_distance_ < 1) throw InvalidArgument("declared distance must be positive");
  words_.reserve(words.size());
  for (auto& w : words) insert(std::move(w));
}

void Code::insert(Codeword word) {
  if (word.length() != n_ || word.q() != q_) throw DimensionError("codeword does not match code length/alphabet");
  if (std::find(words_.begin(), words_.end(), word) != words_.end()) {
    throw InvalidArgument("duplicate codeword");
  }
  words_.push_back(std::move(word));
}

std::optional<int> Code::minimum_distance() const {
  std::optional<int> best;
  for (std::size_t a = 0; a < words_.size(); ++a) {
    for (std::size_t b = a + 1; b < words_.size(); ++b) {
      int d = hamming_distance(words_[a], words_[b]);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

McwcWord::McwcWord(int w, std::vector<std::vector<std::uint8_t>> rows) : w_(w), rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidArgument("MCWC word needs at least one row");
  const auto n = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != n) throw DimensionError("MCWC rows differ in length");
    for (auto b : r) {
      if (b > 1) throw InvalidArgument("MCWC entries must be 0/1");
    }
  }
}

std::vector<int> McwcWord::row_support(int row) const {
  std::vector<int> out;
  const auto& r = rows_.at(static_cast<std::size_t>(row));
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (r[x]) out.push_back(static_cast<int>(x));
  }
  return out;
}

int hamming_distance(const McwcWord& u, const McwcWord& v) {
  if (u.m() != v.m() || u.n() != v.n()) throw DimensionError("hamming_distance: MCWC shapes differ");
  int d = 0;
  for (int i = 0; i < u.m(); ++i) {
    for (int x = 0; x < u.n(); ++x) d += u.rows()[i][x] != v.rows()[i][x];
  }
  return d;
}

ColoredDigraph::ColoredDigraph(int vertex_count, int color_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), color_count_(color_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0 || color_count_ < 1) throw InvalidArgument("digraph needs >= 0 vertices and >= 1 color");
  for (const auto& e : edges_) {
    if (e.from < 0 || e.from >= vertex_count_ || e.to < 0 || e.to >= vertex_count_) {
      throw InvalidArgument("edge endpoint outside vertex set");
    }
    if (e.from == e.to) throw InvalidArgument("loops are not edges of a digraph here");
    if (e.color < 0 || e.color >= color_count_) throw InvalidArgument("edge color out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidArgument("duplicate colored edge");
  }
}

bool ColoredDigraph::has_edge(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

ColoredDigraph complete_digraph(int n, int colors) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) * colors);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      for (int c = 0; c < colors; ++c) edges.push_back({u, v, c});
    }
  }
  return ColoredDigraph(n, colors, std::move(edges));
}

DegreeVector degree_vector(const ColoredDigraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.vertex_count()) throw InvalidArgument("unknown vertex " + std::to_string(vertex));
  DegreeVector tau{std::vector<long long>(2 * static_cast<std::size_t>(g.color_count()), 0)};
  for (const auto& e : g.edges()) {
    if (e.to == vertex) ++tau.entries[2 * static_cast<std::size_t>(e.color)];
    if (e.from == vertex) ++tau.entries[2 * static_cast<std::size_t>(e.color) + 1];
  }
  return tau;
}

EdgeVector edge_vector(const ColoredDigraph& g) {
  EdgeVector mu{std::vector<long long>(static_cast<std::size_t>(g.color_count()), 0)};
  for (const auto& e : g.edges()) ++mu.entries[static_cast<std::size_t>(e.color)];
  return mu;
}

}  // namespace ecd
