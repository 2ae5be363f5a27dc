#include "ecd/code_bridge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace ecd {
namespace {

const FamilyMember& member_of(const Decomposition& dec, const Block& b) { return dec.family.member(b.member); }

void require_superpure(const Decomposition& dec) {
  std::vector<std::vector<int>> sets;
  for (const auto& b : dec.blocks) sets.push_back(b.vertices());
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t c = a + 1; c < sets.size(); ++c) {
      std::vector<int> common;
      std::set_intersection(sets[a].begin(), sets[a].end(), sets[c].begin(), sets[c].end(),
                            std::back_inserter(common));
      if (common.size() > 2) {
        throw InvalidArgument("decomposition is not superpure: blocks " + std::to_string(a + 1) + " and " +
                              std::to_string(c + 1) + " share " + std::to_string(common.size()) + " vertices");
      }
    }
  }
}

int constant_weight_of(const Code& code) {
  if (code.size() == 0) return 0;
  const int w = code.words().front().weight();
  for (const auto& u : code.words()) {
    if (u.weight() != w) throw InvalidArgument("code is not of constant weight");
  }
  return w;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Support intersections above two, shared by C2 and C4.
bool check_support_intersections(const Code& code, const char* tag, std::vector<std::string>& violations) {
  bool ok = true;
  std::vector<std::vector<int>> supports;
  for (const auto& u : code.words()) supports.push_back(u.support());
  for (std::size_t a = 0; a < supports.size(); ++a) {
    for (std::size_t b = a + 1; b < supports.size(); ++b) {
      const auto common = intersect(supports[a], supports[b]);
      if (common.size() > 2) {
        ok = false;
        std::ostringstream os;
        os << tag << ": codewords " << a + 1 << " and " << b + 1 << " share " << common.size()
           << " support positions";
        violations.push_back(os.str());
      }
    }
  }
  return ok;
}

}  // namespace

std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Ccc2w2: return "ccc2w2";
    case ConstructionKind::Ccc2w3: return "ccc2w3";
    case ConstructionKind::Cwc2w2: return "cwc2w2";
    case ConstructionKind::Cwc2w3: return "cwc2w3";
    case ConstructionKind::Mcwc: return "mcwc";
  }
  return "ccc2w2";
}

ConstructionKind construction_kind_from_string(const std::string& text) {
  for (auto k : {ConstructionKind::Ccc2w2, ConstructionKind::Ccc2w3, ConstructionKind::Cwc2w2,
                 ConstructionKind::Cwc2w3, ConstructionKind::Mcwc}) {
    if (to_string(k) == text) return k;
  }
  throw InvalidArgument("unknown construction kind '" + text + "' (ccc2w2|ccc2w3|cwc2w2|cwc2w3|mcwc)");
}

FamilyKind required_family(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Ccc2w2: return FamilyKind::G;
    case ConstructionKind::Ccc2w3: return FamilyKind::GStar;
    case ConstructionKind::Cwc2w2: return FamilyKind::GCwc;
    case ConstructionKind::Cwc2w3: return FamilyKind::GStarCwc;
    case ConstructionKind::Mcwc: return FamilyKind::HStar;
  }
  return FamilyKind::G;
}

bool requires_superpure(ConstructionKind kind) { return kind != ConstructionKind::Mcwc; }

AnyCode decomposition_to_code(const Decomposition& dec, ConstructionKind kind) {
  const auto& fam = dec.family;
  if (fam.kind != required_family(kind)) {
    throw InvalidArgument("construction " + to_string(kind) + " needs a " + to_string(required_family(kind)) +
                          " family, got " + to_string(fam.kind));
  }
  if (requires_superpure(kind)) require_superpure(dec);
  const int symbols = fam.symbol_count;

  auto main_blocks = [&] {
    std::vector<const Block*> out;
    for (const auto& b : dec.blocks) {
      if (!member_of(dec, b).main) continue;
      if (b.shape != Block::Shape::Classes || static_cast<int>(b.classes.size()) != symbols) {
        throw InvalidArgument("main block of '" + b.member + "' does not carry symbol classes");
      }
      out.push_back(&b);
    }
    return out;
  };

  if (kind == ConstructionKind::Mcwc) {
    McwcCode code{symbols, dec.n, fam.params.at(1), {}};
    for (const Block* b : main_blocks()) {
      std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(symbols),
                                                  std::vector<std::uint8_t>(static_cast<std::size_t>(dec.n), 0));
      for (int i = 0; i < symbols; ++i) {
        for (int x : b->classes[static_cast<std::size_t>(i)]) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] = 1;
      }
      code.words.emplace_back(code.w, std::move(rows));
    }
    return code;
  }

  Code code(symbols + 1, dec.n);
  for (const Block* b : main_blocks()) {
    std::vector<int> word(static_cast<std::size_t>(dec.n), 0);
    for (int i = 0; i < symbols; ++i) {
      for (int x : b->classes[static_cast<std::size_t>(i)]) word[static_cast<std::size_t>(x)] = i + 1;
    }
    code.insert(Codeword(symbols + 1, std::move(word)));
  }
  return code;
}

std::int64_t expected_code_size(ConstructionKind kind, const DigraphFamily& family, int n) {
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1);
  const auto& p = family.params;
  switch (kind) {
    case ConstructionKind::Ccc2w2: {
      const Composition c(p);
      return pairs / (static_cast<std::int64_t>(c[0]) * (c.weight() - 1));
    }
    case ConstructionKind::Ccc2w3: {
      const Composition c(p);
      const std::int64_t w1 = c[0];
      const std::int64_t w2 = c.symbol_count() > 1 ? c[1] : 0;
      return w1 != w2 ? pairs / (w1 * (w1 - 1)) : pairs / (w1 * w1);
    }
    case ConstructionKind::Cwc2w2: {
      const std::int64_t q = p.at(0), w = p.at(1);
      return (q - 1) * pairs / (w * (w - 1));
    }
    case ConstructionKind::Cwc2w3: {
      const std::int64_t q = p.at(0), w = p.at(1);
      return (q - 1) * (q - 1) * pairs / (w * (w - 1));
    }
    case ConstructionKind::Mcwc: {
      const std::int64_t w = p.at(1);
      return pairs / (w * w);
    }
  }
  return 0;
}

ConditionReport check_C1_C2(const Code& code) {
  ConditionReport rep;
  const int w = constant_weight_of(code);
  rep.vacuous = 2 * w - 2 <= 1;
  // (color, x, y) -> first codeword that produced it
  std::map<std::tuple<int, int, int>, std::size_t> owner;
  for (std::size_t a = 0; a < code.size(); ++a) {
    const auto& u = code.words()[a];
    const auto supp = u.support();
    for (int x : supp) {
      for (int y : supp) {
        if (x == y) continue;
        auto [it, fresh] = owner.emplace(std::make_tuple(u[static_cast<std::size_t>(x)], x, y), a);
        if (!fresh) {
          rep.first_ok = false;
          std::ostringstream os;
          os << "C1: color " << u[static_cast<std::size_t>(x)] << " pair (" << x + 1 << "," << y + 1
             << ") repeated in codewords " << it->second + 1 << " and " << a + 1;
          rep.violations.push_back(os.str());
        }
      }
    }
  }
  rep.second_ok = check_support_intersections(code, "C2", rep.violations);
  return rep;
}

ConditionReport check_C3_C4(const Code& code) {
  ConditionReport rep;
  const int w = constant_weight_of(code);
  rep.vacuous = 2 * w - 3 <= 1;
  std::map<std::tuple<int, int, int, int>, std::size_t> owner;
  for (std::size_t a = 0; a < code.size(); ++a) {
    const auto& u = code.words()[a];
    const auto supp = u.support();
    for (int x : supp) {
      for (int y : supp) {
        if (x == y) continue;
        const int i = u[static_cast<std::size_t>(x)], j = u[static_cast<std::size_t>(y)];
        auto [it, fresh] = owner.emplace(std::make_tuple(i, j, x, y), a);
        if (!fresh) {
          rep.first_ok = false;
          std::ostringstream os;
          os << "C3: colors (" << i << "," << j << ") pair (" << x + 1 << "," << y + 1
             << ") repeated in codewords " << it->second + 1 << " and " << a + 1;
          rep.violations.push_back(os.str());
        }
      }
    }
  }
  rep.second_ok = check_support_intersections(code, "C4", rep.violations);
  return rep;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Optimal: return "OPTIMAL";
    case Verdict::BelowBound: return "BELOW_BOUND";
    case Verdict::ExceedsBound: return "EXCEEDS_BOUND";
    case Verdict::NoBound: return "NO_BOUND";
  }
  return "NO_BOUND";
}

namespace {

void compare_with_bound(CodeReport& rep, const bounds::BoundQuery& query) {
  try {
    rep.bound = bounds::evaluate(query);
  } catch (const InvalidArgument& e) {
    rep.verdict = Verdict::NoBound;
    rep.messages.push_back(std::string("no bound: ") + e.what());
    return;
  }
  const auto size = static_cast<std::int64_t>(rep.size);
  rep.gap = rep.bound->value - size;
  if (rep.gap == 0) {
    rep.verdict = Verdict::Optimal;
  } else if (rep.gap > 0) {
    rep.verdict = Verdict::BelowBound;
    rep.messages.push_back("below bound by " + std::to_string(rep.gap));
  } else {
    rep.verdict = Verdict::ExceedsBound;
    rep.valid = false;
    rep.messages.push_back("EXCEEDS BOUND " + rep.bound->rule + " = " + std::to_string(rep.bound->value));
  }
}

}  // namespace

CodeReport verify_code(const Code& code, const CodeExpectation& expected) {
  CodeReport rep;
  rep.size = code.size();
  for (std::size_t a = 0; a < code.size(); ++a) {
    const auto& u = code.words()[a];
    if (expected.composition) {
      if (expected.composition->q() != code.q()) {
        rep.valid = false;
        rep.messages.push_back("composition " + expected.composition->to_string() + " does not fit q = " +
                               std::to_string(code.q()));
        break;
      }
      const auto comp = composition_of(u);
      if (!(comp == *expected.composition)) {
        rep.valid = false;
        rep.messages.push_back("codeword " + std::to_string(a + 1) + " has composition " + comp.to_string());
      }
    }
    if (expected.weight && u.weight() != *expected.weight) {
      rep.valid = false;
      rep.messages.push_back("codeword " + std::to_string(a + 1) + " has weight " + std::to_string(u.weight()));
    }
  }
  rep.minimum_distance = code.minimum_distance();
  if (rep.minimum_distance && *rep.minimum_distance < expected.d) {
    rep.valid = false;
    rep.messages.push_back("minimum distance " + std::to_string(*rep.minimum_distance) + " < " +
                           std::to_string(expected.d));
  }

  bounds::BoundQuery q;
  q.q = code.q();
  q.n = code.length();
  q.d = expected.d;
  if (expected.composition) {
    q.kind = bounds::CodeKind::Ccc;
    q.composition = expected.composition;
  } else if (expected.weight) {
    q.kind = bounds::CodeKind::Cwc;
    q.w = *expected.weight;
  } else {
    rep.verdict = Verdict::NoBound;
    return rep;
  }
  compare_with_bound(rep, q);
  return rep;
}

CodeReport verify_code(const McwcCode& code, const McwcExpectation& expected) {
  CodeReport rep;
  rep.size = code.words.size();
  std::set<std::vector<std::vector<std::uint8_t>>> distinct;
  for (std::size_t a = 0; a < code.words.size(); ++a) {
    const auto& u = code.words[a];
    if (u.m() != expected.m || u.n() != expected.n) {
      rep.valid = false;
      rep.messages.push_back("codeword " + std::to_string(a + 1) + " has the wrong shape");
      continue;
    }
    for (int i = 0; i < u.m(); ++i) {
      const auto wt = u.row_support(i).size();
      if (static_cast<int>(wt) != expected.w) {
        rep.valid = false;
        rep.messages.push_back("codeword " + std::to_string(a + 1) + " row " + std::to_string(i + 1) +
                               " has weight " + std::to_string(wt));
      }
    }
    if (!distinct.insert(u.rows()).second) {
      rep.valid = false;
      rep.messages.push_back("codeword " + std::to_string(a + 1) + " is repeated");
    }
  }
  if (!rep.valid) return rep;
  for (std::size_t a = 0; a < code.words.size(); ++a) {
    for (std::size_t b = a + 1; b < code.words.size(); ++b) {
      const int d = hamming_distance(code.words[a], code.words[b]);
      if (!rep.minimum_distance || d < *rep.minimum_distance) rep.minimum_distance = d;
    }
  }
  if (rep.minimum_distance && *rep.minimum_distance < expected.d) {
    rep.valid = false;
    rep.messages.push_back("minimum distance " + std::to_string(*rep.minimum_distance) + " < " +
                           std::to_string(expected.d));
  }
  bounds::BoundQuery q;
  q.kind = bounds::CodeKind::Mcwc;
  q.m = expected.m;
  q.n = expected.n;
  q.w = expected.w;
  q.d = expected.d;
  compare_with_bound(rep, q);
  return rep;
}

}  // namespace ecd
