#include "ecd/search.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ecd/exact_cover.hpp"

namespace ecd {
namespace {

// Colored edges ordered by (color, u, v).
class EdgeIndex {
 public:
  EdgeIndex(int n, int colors) : n_(n), colors_(colors) {}
  [[nodiscard]] std::size_t size() const {
    return static_cast<std::size_t>(colors_) * static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1);
  }
  [[nodiscard]] std::size_t operator()(const Edge& e) const {
    const int v = e.to < e.from ? e.to : e.to - 1;
    return (static_cast<std::size_t>(e.color) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.from)) *
               static_cast<std::size_t>(n_ - 1) +
           static_cast<std::size_t>(v);
  }

 private:
  int n_;
  int colors_;
};

class TripleIndex {
 public:
  explicit TripleIndex(int n) : n_(n), table_(static_cast<std::size_t>(n) * n * n, 0) {
    std::size_t next = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) table_[key(a, b, c)] = next++;
    count_ = next;
  }
  [[nodiscard]] std::size_t size() const { return count_; }
  [[nodiscard]] std::size_t operator()(int a, int b, int c) const { return table_[key(a, b, c)]; }

 private:
  [[nodiscard]] std::size_t key(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }
  int n_;
  std::vector<std::size_t> table_;
  std::size_t count_ = 0;
};

std::vector<Edge> solver_block_edges(const FamilyMember& m, const Block& b) {
  std::vector<int> image(static_cast<std::size_t>(m.graph.vertex_count()), -1);
  switch (b.shape) {
    case Block::Shape::Classes:
      for (std::size_t i = 0; i < m.classes.size(); ++i)
        for (std::size_t j = 0; j < m.classes[i].size(); ++j)
          image[static_cast<std::size_t>(m.classes[i][j])] = b.classes[i][j];
      break;
    case Block::Shape::Pair:
      image[0] = b.pair.first;
      image[1] = b.pair.second;
      break;
    case Block::Shape::Map:
      image = b.image;
      break;
  }
  std::vector<Edge> out;
  out.reserve(m.graph.edge_count());
  for (const auto& e : m.graph.edges()) {
    out.push_back({image[static_cast<std::size_t>(e.from)], image[static_cast<std::size_t>(e.to)], e.color});
  }
  return out;
}

void enumerate_class_blocks(const FamilyMember& m, int n, std::vector<Block>& out) {
  const auto& sizes = m.classes;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  ClassLayout current(sizes.size());
  auto choose = [&](auto&& self, std::size_t cls, int start) -> void {
    if (cls == sizes.size()) {
      out.push_back(Block{m.label, Block::Shape::Classes, current, {}, {}});
      return;
    }
    auto& bucket = current[cls];
    if (bucket.size() == sizes[cls].size()) {
      self(self, cls + 1, 0);
      return;
    }
    for (int v = start; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      bucket.push_back(v);
      self(self, cls, v + 1);
      bucket.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  choose(choose, 0, 0);
}

void enumerate_map_blocks(const FamilyMember& m, int n, std::vector<Block>& out) {
  const int k = m.graph.vertex_count();
  std::set<std::vector<Edge>> seen;
  std::vector<int> image;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(image.size()) == k) {
      Block b{m.label, Block::Shape::Map, {}, {}, image};
      auto edges = solver_block_edges(m, b);
      std::sort(edges.begin(), edges.end());
      if (seen.insert(std::move(edges)).second) out.push_back(std::move(b));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      image.push_back(v);
      self(self);
      image.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec);
}

}  // namespace

std::vector<int> Block::vertices() const {
  std::vector<int> vs;
  switch (shape) {
    case Shape::Classes:
      for (const auto& c : classes) vs.insert(vs.end(), c.begin(), c.end());
      break;
    case Shape::Pair:
      vs = {pair.first, pair.second};
      break;
    case Shape::Map:
      vs = image;
      break;
  }
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<Block> enumerate_blocks(const DigraphFamily& family, int n) {
  family.validate();
  int need = 0;
  for (const auto& m : family.members) need = std::max(need, m.graph.vertex_count());
  if (n < need || n < 2) {
    throw InvalidArgument("n = " + std::to_string(n) + " is smaller than the largest member (" +
                          std::to_string(need) + " vertices)");
  }
  std::vector<Block> out;
  for (const auto& m : family.members) {
    if (m.graph.edge_count() == 0) continue;  // an empty copy covers nothing
    if (m.has_classes()) {
      enumerate_class_blocks(m, n, out);
    } else if (m.is_single_edge()) {
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (y != z) {
            Block b{m.label, Block::Shape::Pair, {}, {}, {}};
            b.pair = {y, z};
            out.push_back(std::move(b));
          }
    } else {
      enumerate_map_blocks(m, n, out);
    }
  }
  return out;
}

SearchMode search_mode_from_string(const std::string& text) {
  if (text == "first") return SearchMode::First;
  if (text == "all") return SearchMode::All;
  if (text == "count") return SearchMode::Count;
  throw InvalidArgument("unknown search mode '" + text + "' (first|all|count)");
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::Timeout: return "TIMEOUT";
  }
  return "UNSAT";
}

SolveResult solve(const DigraphFamily& family, int n, const SolveOptions& options) {
  auto blocks = enumerate_blocks(family, n);
  if (options.seed != 0) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(blocks.begin(), blocks.end(), rng);
  }

  std::map<std::string, std::size_t> member_index;
  for (std::size_t i = 0; i < family.members.size(); ++i) member_index[family.members[i].label] = i;

  const EdgeIndex edge_index(n, family.color_count);
  std::optional<TripleIndex> triples;
  if (options.superpure) triples.emplace(n);

  ExactCover cover(edge_index.size(), triples ? triples->size() : 0);
  std::vector<std::size_t> items;
  for (const auto& b : blocks) {
    items.clear();
    for (const auto& e : solver_block_edges(family.members[member_index.at(b.member)], b)) {
      items.push_back(edge_index(e));
    }
    if (triples) {
      const auto vs = b.vertices();
      for (std::size_t x = 0; x < vs.size(); ++x)
        for (std::size_t y = x + 1; y < vs.size(); ++y)
          for (std::size_t z = y + 1; z < vs.size(); ++z)
            items.push_back(edge_index.size() + (*triples)(vs[x], vs[y], vs[z]));
    }
    std::sort(items.begin(), items.end());
    cover.add_option(items);
  }

  SolveResult result;
  result.block_count = blocks.size();
  std::mutex mu;
  std::atomic<bool> stop{false};

  auto to_decomposition = [&](const std::vector<std::size_t>& chosen) {
    Decomposition dec{n, family, options.superpure, {}};
    for (auto id : chosen) dec.blocks.push_back(blocks[id]);
    std::sort(dec.blocks.begin(), dec.blocks.end(), [&](const Block& a, const Block& b) {
      const auto ia = member_index.at(a.member), ib = member_index.at(b.member);
      if (ia != ib) return ia < ib;
      return a < b;
    });
    return dec;
  };

  auto on_solution = [&](const std::vector<std::size_t>& chosen) {
    std::lock_guard lock(mu);
    if (stop.load()) return false;
    ++result.solution_count;
    if (options.mode != SearchMode::Count) result.solutions.push_back(to_decomposition(chosen));
    if (options.mode == SearchMode::First ||
        (options.mode == SearchMode::All && options.max_solutions != 0 &&
         result.solutions.size() >= options.max_solutions)) {
      stop.store(true);
      return false;
    }
    return true;
  };

  ExactCover::Control base;
  if (options.time_limit) base.deadline = std::chrono::steady_clock::now() + *options.time_limit;
  base.stop = &stop;

  const unsigned threads = std::max(1U, options.threads);
  bool timed_out = false;
  if (threads == 1) {
    ExactCover::Stats stats;
    timed_out = cover.search(on_solution, base, stats) == ExactCover::Outcome::TimedOut;
    result.nodes = stats.nodes;
    result.max_depth = stats.max_depth;
  } else {
    std::vector<ExactCover::Stats> stats(threads);
    std::vector<ExactCover::Outcome> outcomes(threads, ExactCover::Outcome::Complete);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        ExactCover local = cover;
        ExactCover::Control ctl = base;
        ctl.root_filter = [t, threads](std::size_t branch) { return branch % threads == t; };
        outcomes[t] = local.search(on_solution, ctl, stats[t]);
      });
    }
    for (auto& th : pool) th.join();
    for (unsigned t = 0; t < threads; ++t) {
      result.nodes += stats[t].nodes;
      result.max_depth = std::max(result.max_depth, stats[t].max_depth);
      timed_out = timed_out || outcomes[t] == ExactCover::Outcome::TimedOut;
    }
    if (options.mode == SearchMode::All) {
      std::sort(result.solutions.begin(), result.solutions.end(),
                [](const Decomposition& a, const Decomposition& b) { return a.blocks < b.blocks; });
    }
  }

  if (result.solution_count > 0 && (options.mode == SearchMode::First || !timed_out)) {
    result.status = SolveStatus::Sat;
  } else if (timed_out) {
    result.status = SolveStatus::Timeout;
  } else {
    result.status = result.solution_count > 0 ? SolveStatus::Sat : SolveStatus::Unsat;
  }
  return result;
}

DecompositionReport verify_decomposition(const Decomposition& dec) {
  DecompositionReport rep;
  const int n = dec.n;
  const int r = dec.family.color_count;
  rep.edges_per_color.assign(static_cast<std::size_t>(r), 0);
  auto fail = [&](std::string msg) {
    if (rep.first_violation.empty()) rep.first_violation = std::move(msg);
  };
  auto fmt_edge = [](int u, int v, int c) {
    std::ostringstream os;
    os << "edge (" << u + 1 << "," << v + 1 << ") color " << c + 1;
    return os.str();
  };
  if (n < 2) {
    fail("n must be at least 2");
    return rep;
  }

  // multiplicity of every colored edge, indexed [c][u][v]
  std::vector<int> hits(static_cast<std::size_t>(r) * n * n, 0);
  auto slot = [&](int u, int v, int c) -> int& {
    return hits[(static_cast<std::size_t>(c) * n + static_cast<std::size_t>(u)) * n + static_cast<std::size_t>(v)];
  };

  std::vector<std::vector<int>> vertex_sets;
  bool blocks_ok = true;
  for (std::size_t bi = 0; bi < dec.blocks.size(); ++bi) {
    const auto& b = dec.blocks[bi];
    const FamilyMember* m = nullptr;
    for (const auto& cand : dec.family.members) {
      if (cand.label == b.member) m = &cand;
    }
    const std::string where = "block " + std::to_string(bi + 1) + " (" + b.member + ")";
    if (!m) {
      fail(where + ": unknown member");
      blocks_ok = false;
      continue;
    }
    // map member vertex -> host vertex
    std::vector<int> phi(static_cast<std::size_t>(m->graph.vertex_count()), -1);
    bool shape_ok = true;
    if (b.shape == Block::Shape::Classes && m->has_classes() && b.classes.size() == m->classes.size()) {
      for (std::size_t i = 0; i < m->classes.size() && shape_ok; ++i) {
        if (b.classes[i].size() != m->classes[i].size()) {
          shape_ok = false;
          break;
        }
        for (std::size_t j = 0; j < m->classes[i].size(); ++j) phi[static_cast<std::size_t>(m->classes[i][j])] = b.classes[i][j];
      }
    } else if (b.shape == Block::Shape::Pair && m->is_single_edge()) {
      phi = {b.pair.first, b.pair.second};
    } else if (b.shape == Block::Shape::Map && b.image.size() == phi.size()) {
      phi = b.image;
    } else {
      shape_ok = false;
    }
    if (!shape_ok) {
      fail(where + ": shape does not match the member");
      blocks_ok = false;
      continue;
    }
    std::vector<int> sorted_phi = phi;
    std::sort(sorted_phi.begin(), sorted_phi.end());
    if (sorted_phi.front() < 0 || sorted_phi.back() >= n) {
      fail(where + ": vertex outside [" + std::to_string(n) + "]");
      blocks_ok = false;
      continue;
    }
    if (std::adjacent_find(sorted_phi.begin(), sorted_phi.end()) != sorted_phi.end()) {
      fail(where + ": repeated vertex");
      blocks_ok = false;
      continue;
    }
    ++rep.blocks_per_member[b.member];
    for (const auto& e : m->graph.edges()) {
      const int u = phi[static_cast<std::size_t>(e.from)];
      const int v = phi[static_cast<std::size_t>(e.to)];
      if (++slot(u, v, e.color) == 2) fail(fmt_edge(u, v, e.color) + " covered twice");
      ++rep.edges_per_color[static_cast<std::size_t>(e.color)];
    }
    vertex_sets.push_back(std::move(sorted_phi));
  }

  bool cover_ok = blocks_ok;
  for (int c = 0; c < r; ++c)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const int h = slot(u, v, c);
        if (h == 0) {
          fail(fmt_edge(u, v, c) + " uncovered");
          cover_ok = false;
        } else if (h > 1) {
          cover_ok = false;
        }
      }
  rep.exact_cover = cover_ok;

  if (dec.superpure) {
    rep.superpure_checked = true;
    for (std::size_t a = 0; a < vertex_sets.size(); ++a) {
      for (std::size_t b = a + 1; b < vertex_sets.size(); ++b) {
        std::vector<int> common;
        std::set_intersection(vertex_sets[a].begin(), vertex_sets[a].end(), vertex_sets[b].begin(),
                              vertex_sets[b].end(), std::back_inserter(common));
        if (common.size() > 2) {
          rep.superpure_ok = false;
          fail("blocks " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " share " +
               std::to_string(common.size()) + " vertices");
        }
      }
    }
  }
  rep.valid = rep.exact_cover && rep.superpure_ok;
  return rep;
}

}  // namespace ecd
