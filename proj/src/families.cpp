#include "ecd/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ecd {
namespace {

void require_nonempty(const Composition& comp) {
  if (comp.weight() < 1) throw InvalidArgument("empty composition " + comp.to_string());
}

std::string main_label(const std::string& prefix, const Composition& comp) { return prefix + comp.to_string(); }

FamilyMember single_member(std::string label, int color, int color_count) {
  return FamilyMember{std::move(label), false, build_single_edge(color, color_count), {}};
}

std::string pair_label(int i, int j) {
  std::ostringstream os;
  os << "G*_(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

// Within-class edges get color_of(i, i); cross edges x in S_i -> y in S_j get color_of(i, j).
template <typename ColorOf>
ColoredDigraph build_class_graph(const Composition& comp, int color_count, ColorOf color_of) {
  require_nonempty(comp);
  const auto layout = class_layout(comp);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    for (std::size_t j = 0; j < layout.size(); ++j) {
      const int c = color_of(static_cast<int>(i), static_cast<int>(j));
      for (int x : layout[i]) {
        for (int y : layout[j]) {
          if (x != y) edges.push_back({x, y, c});
        }
      }
    }
  }
  return ColoredDigraph(comp.weight(), color_count, std::move(edges));
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::G: return "g";
    case FamilyKind::GStar: return "gstar";
    case FamilyKind::GCwc: return "gcwc";
    case FamilyKind::GStarCwc: return "gstarcwc";
    case FamilyKind::HStar: return "hstar";
    case FamilyKind::Custom: return "custom";
  }
  return "custom";
}

FamilyKind family_kind_from_string(const std::string& text) {
  for (auto k : {FamilyKind::G, FamilyKind::GStar, FamilyKind::GCwc, FamilyKind::GStarCwc, FamilyKind::HStar,
                 FamilyKind::Custom}) {
    if (to_string(k) == text) return k;
  }
  throw InvalidArgument("unknown family kind '" + text + "'");
}

const FamilyMember& DigraphFamily::member(const std::string& label) const {
  for (const auto& m : members) {
    if (m.label == label) return m;
  }
  throw InvalidArgument("family " + name + " has no member '" + label + "'");
}

std::vector<std::string> DigraphFamily::main_labels() const {
  std::vector<std::string> out;
  for (const auto& m : members) {
    if (m.main) out.push_back(m.label);
  }
  return out;
}

void DigraphFamily::validate() const {
  if (members.empty()) throw InvalidArgument("family " + name + " has no members");
  std::set<std::string> labels;
  for (const auto& m : members) {
    if (!labels.insert(m.label).second) throw InvalidArgument("duplicate member label '" + m.label + "'");
    if (m.graph.color_count() != color_count) {
      throw InvalidArgument("member '" + m.label + "' does not share the family color set");
    }
    if (m.has_classes()) {
      std::vector<int> seen;
      for (const auto& cls : m.classes) seen.insert(seen.end(), cls.begin(), cls.end());
      std::sort(seen.begin(), seen.end());
      std::vector<int> expect(static_cast<std::size_t>(m.graph.vertex_count()));
      for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = static_cast<int>(i);
      if (seen != expect) throw InvalidArgument("classes of '" + m.label + "' do not partition its vertices");
      // blocks record classes as unordered sets, so each class must be interchangeable
      for (const auto& cls : m.classes) {
        for (std::size_t k = 1; k < cls.size(); ++k) {
          const int a = cls[k - 1], b = cls[k];
          auto swap_v = [a, b](int v) { return v == a ? b : v == b ? a : v; };
          for (const auto& e : m.graph.edges()) {
            if (!m.graph.has_edge({swap_v(e.from), swap_v(e.to), e.color})) {
              throw InvalidArgument("member '" + m.label + "' is not symmetric within its classes");
            }
          }
        }
      }
    }
    if (m.main && m.is_single_edge()) throw InvalidArgument("single-edge member '" + m.label + "' marked main");
  }
}

ClassLayout class_layout(const Composition& comp) {
  ClassLayout layout;
  int next = 0;
  for (int part : comp.parts()) {
    std::vector<int> cls(static_cast<std::size_t>(part));
    for (auto& v : cls) v = next++;
    layout.push_back(std::move(cls));
  }
  return layout;
}

ColoredDigraph build_G(const Composition& comp) {
  return build_class_graph(comp, comp.symbol_count(), [](int i, int) { return i; });
}

ColoredDigraph build_Gstar(const Composition& comp) {
  const int s = comp.symbol_count();
  return build_class_graph(comp, s * s, [s](int i, int j) { return pair_color(i, j, s); });
}

ColoredDigraph build_single_edge(int color, int color_count) {
  if (color < 0 || color >= color_count) {
    throw InvalidArgument("single-edge color " + std::to_string(color + 1) + " outside [" +
                          std::to_string(color_count) + "]");
  }
  return ColoredDigraph(2, color_count, {{0, 1, color}});
}

DigraphFamily family_G(const Composition& comp) {
  comp.require_monotone();
  const auto& w = comp.parts();
  const int symbols = comp.symbol_count();
  DigraphFamily fam;
  fam.name = "G" + comp.to_string();
  fam.kind = FamilyKind::G;
  fam.color_count = symbols;
  fam.symbol_count = symbols;
  fam.params = w;
  fam.members.push_back({main_label("G", comp), true, build_G(comp), class_layout(comp)});
  // s = largest index with w_1 = ... = w_s
  int s = 1;
  while (s < symbols && w[static_cast<std::size_t>(s)] == w[0]) ++s;
  for (int i = s; i < symbols; ++i) {
    fam.members.push_back(single_member("G_" + std::to_string(i + 1), i, symbols));
  }
  return fam;
}

DigraphFamily family_Gstar(const Composition& comp) {
  comp.require_monotone();
  if (comp.weight() < 2) throw InvalidArgument("G* family needs weight >= 2");
  const auto& w = comp.parts();
  const int symbols = comp.symbol_count();
  const int w1 = w[0];
  const int w2 = symbols > 1 ? w[1] : 0;

  // excluded[i][j]: colors that receive no single-edge member
  std::vector<std::vector<bool>> excluded(static_cast<std::size_t>(symbols),
                                          std::vector<bool>(static_cast<std::size_t>(symbols), false));
  int r = 1;
  if (w1 > w2) {
    // r = largest with w_2 = ... = w_r = w_1 - 1
    while (r < symbols && w[static_cast<std::size_t>(r)] == w1 - 1) ++r;
    excluded[0][0] = true;
    for (int j = 1; j < r; ++j) excluded[0][static_cast<std::size_t>(j)] = excluded[static_cast<std::size_t>(j)][0] = true;
  } else {
    // r = largest with w_1 = ... = w_r; exclude ordered distinct pairs over [r]
    while (r < symbols && w[static_cast<std::size_t>(r)] == w1) ++r;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        if (i != j) excluded[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      }
    }
  }

  DigraphFamily fam;
  fam.name = "G*" + comp.to_string();
  fam.kind = FamilyKind::GStar;
  fam.color_count = symbols * symbols;
  fam.symbol_count = symbols;
  fam.params = w;
  fam.members.push_back({main_label("G*", comp), true, build_Gstar(comp), class_layout(comp)});
  for (int i = 0; i < symbols; ++i) {
    for (int j = 0; j < symbols; ++j) {
      if (excluded[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      fam.members.push_back(single_member(pair_label(i, j), pair_color(i, j, symbols), fam.color_count));
    }
  }
  return fam;
}

std::vector<Composition> composition_set_W(int q, int w) {
  if (q < 2 || w < 1) throw InvalidArgument("composition_set_W needs q >= 2 and w >= 1");
  const int symbols = q - 1;
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(symbols), 0);
  // enumerate in lexicographically descending order
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == symbols - 1) {
      parts[static_cast<std::size_t>(idx)] = remaining;
      out.emplace_back(parts);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      parts[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  rec(rec, 0, w);
  return out;
}

DigraphFamily family_G_cwc(int q, int w) {
  if (w < 2) throw InvalidArgument("G(w) family needs w >= 2");
  DigraphFamily fam;
  fam.name = "G(q=" + std::to_string(q) + ",w=" + std::to_string(w) + ")";
  fam.kind = FamilyKind::GCwc;
  fam.color_count = q - 1;
  fam.symbol_count = q - 1;
  fam.params = {q, w};
  for (const auto& comp : composition_set_W(q, w)) {
    fam.members.push_back({main_label("G", comp), true, build_G(comp), class_layout(comp)});
  }
  return fam;
}

DigraphFamily family_Gstar_cwc(int q, int w) {
  if (w < 2) throw InvalidArgument("G*(w) family needs w >= 2");
  DigraphFamily fam;
  fam.name = "G*(q=" + std::to_string(q) + ",w=" + std::to_string(w) + ")";
  fam.kind = FamilyKind::GStarCwc;
  fam.color_count = (q - 1) * (q - 1);
  fam.symbol_count = q - 1;
  fam.params = {q, w};
  for (const auto& comp : composition_set_W(q, w)) {
    fam.members.push_back({main_label("G*", comp), true, build_Gstar(comp), class_layout(comp)});
  }
  return fam;
}

DigraphFamily family_Hstar(int m, int w) {
  if (m < 1 || w < 1) throw InvalidArgument("H*(m,w) needs m >= 1 and w >= 1");
  const Composition comp(std::vector<int>(static_cast<std::size_t>(m), w));
  DigraphFamily fam;
  const std::string tag = "(" + std::to_string(m) + "," + std::to_string(w) + ")";
  fam.name = "H*" + tag;
  fam.kind = FamilyKind::HStar;
  fam.color_count = m * m;
  fam.symbol_count = m;
  fam.params = {m, w};
  fam.members.push_back({"H*" + tag, true, build_Gstar(comp), class_layout(comp)});
  for (int i = 0; i < m; ++i) {
    fam.members.push_back(single_member(pair_label(i, i), pair_color(i, i, m), fam.color_count));
  }
  return fam;
}

}  // namespace ecd
