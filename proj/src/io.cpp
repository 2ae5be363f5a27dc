#include "ecd/io.hpp"

#include <fstream>
#include <sstream>

namespace ecd::io {
namespace {

Json to_one_based(const std::vector<int>& vs) {
  Json a = Json::array();
  for (int v : vs) a.push_back(v + 1);
  return a;
}

std::vector<int> from_one_based(const Json& a, const std::string& where) {
  if (!a.is_array()) throw InvalidArgument(where + ": expected an array of vertices");
  std::vector<int> out;
  for (const auto& v : a) {
    if (!v.is_number_integer() || v.get<int>() < 1) throw InvalidArgument(where + ": vertices are positive integers");
    out.push_back(v.get<int>() - 1);
  }
  return out;
}

template <typename T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InvalidArgument(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(where + ": bad value for \"" + key + "\"");
  }
}

}  // namespace

Json family_to_json(const DigraphFamily& family) {
  Json j;
  j["name"] = family.name;
  j["kind"] = to_string(family.kind);
  j["symbols"] = family.symbol_count;
  j["params"] = family.params;
  j["colors"] = family.color_count;
  Json members = Json::array();
  for (const auto& m : family.members) {
    Json mj;
    mj["label"] = m.label;
    mj["main"] = m.main;
    mj["vertices"] = m.graph.vertex_count();
    Json edges = Json::array();
    for (const auto& e : m.graph.edges()) edges.push_back({e.from + 1, e.to + 1, e.color + 1});
    mj["edges"] = std::move(edges);
    if (m.has_classes()) {
      Json classes = Json::array();
      for (const auto& c : m.classes) classes.push_back(to_one_based(c));
      mj["classes"] = std::move(classes);
    }
    members.push_back(std::move(mj));
  }
  j["members"] = std::move(members);
  return j;
}

DigraphFamily family_from_json(const Json& j) {
  const std::string where = "family";
  DigraphFamily fam;
  fam.name = field<std::string>(j, "name", where);
  fam.kind = j.contains("kind") ? family_kind_from_string(j["kind"].get<std::string>()) : FamilyKind::Custom;
  fam.symbol_count = j.value("symbols", 0);
  fam.params = j.value("params", std::vector<int>{});
  fam.color_count = field<int>(j, "colors", where);
  if (fam.color_count < 1) throw InvalidArgument("family: \"colors\" must be positive");
  const auto& members = j.at("members");
  if (!members.is_array()) throw InvalidArgument("family: \"members\" must be an array");
  for (std::size_t k = 0; k < members.size(); ++k) {
    const auto& mj = members[k];
    const std::string mw = "family member " + std::to_string(k + 1);
    FamilyMember m{field<std::string>(mj, "label", mw), mj.value("main", false), ColoredDigraph(0, 1), {}};
    const int vertices = field<int>(mj, "vertices", mw);
    std::vector<Edge> edges;
    for (const auto& e : mj.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw InvalidArgument(mw + ": edges are [u,v,c] triples");
      edges.push_back({e[0].get<int>() - 1, e[1].get<int>() - 1, e[2].get<int>() - 1});
    }
    try {
      m.graph = ColoredDigraph(vertices, fam.color_count, std::move(edges));
    } catch (const InvalidArgument& ex) {
      throw InvalidArgument(mw + ": " + ex.what());
    }
    if (mj.contains("classes")) {
      for (const auto& c : mj["classes"]) m.classes.push_back(from_one_based(c, mw));
    }
    fam.members.push_back(std::move(m));
  }
  fam.validate();
  return fam;
}

Json decomposition_to_json(const Decomposition& dec) {
  Json j;
  j["n"] = dec.n;
  j["superpure"] = dec.superpure;
  j["family"] = family_to_json(dec.family);
  Json blocks = Json::array();
  for (const auto& b : dec.blocks) {
    Json bj;
    bj["member"] = b.member;
    switch (b.shape) {
      case Block::Shape::Classes: {
        Json classes = Json::array();
        for (const auto& c : b.classes) classes.push_back(to_one_based(c));
        bj["classes"] = std::move(classes);
        break;
      }
      case Block::Shape::Pair:
        bj["pair"] = {b.pair.first + 1, b.pair.second + 1};
        break;
      case Block::Shape::Map:
        bj["vertices"] = to_one_based(b.image);
        break;
    }
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition dec;
  dec.n = field<int>(j, "n", "decomposition");
  dec.superpure = j.value("superpure", false);
  if (!j.contains("family")) throw InvalidArgument("decomposition: missing \"family\"");
  dec.family = family_from_json(j["family"]);
  for (std::size_t k = 0; k < j.at("blocks").size(); ++k) {
    const auto& bj = j["blocks"][k];
    const std::string where = "decomposition block " + std::to_string(k + 1);
    Block b;
    b.member = field<std::string>(bj, "member", where);
    if (bj.contains("classes")) {
      b.shape = Block::Shape::Classes;
      for (const auto& c : bj["classes"]) {
        auto cls = from_one_based(c, where);
        std::sort(cls.begin(), cls.end());
        b.classes.push_back(std::move(cls));
      }
    } else if (bj.contains("pair")) {
      b.shape = Block::Shape::Pair;
      const auto p = from_one_based(bj["pair"], where);
      if (p.size() != 2) throw InvalidArgument(where + ": \"pair\" needs two vertices");
      b.pair = {p[0], p[1]};
    } else if (bj.contains("vertices")) {
      b.shape = Block::Shape::Map;
      b.image = from_one_based(bj["vertices"], where);
    } else {
      throw InvalidArgument(where + ": needs \"classes\", \"pair\" or \"vertices\"");
    }
    dec.blocks.push_back(std::move(b));
  }
  return dec;
}

void write_code(std::ostream& os, const AnyCode& code) {
  if (const auto* c = std::get_if<Code>(&code)) {
    os << "q " << c->q() << " n " << c->length() << '\n';
    for (const auto& u : c->words()) {
      for (int x = 0; x < u.length(); ++x) os << (x ? " " : "") << u[static_cast<std::size_t>(x)];
      os << '\n';
    }
    return;
  }
  const auto& m = std::get<McwcCode>(code);
  os << "m " << m.m << " n " << m.n << " w " << m.w << '\n';
  for (const auto& u : m.words) {
    bool first = true;
    for (const auto& row : u.rows()) {
      for (auto bit : row) {
        os << (first ? "" : " ") << static_cast<int>(bit);
        first = false;
      }
    }
    os << '\n';
  }
}

AnyCode read_code(std::istream& is) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto bad = [&](const std::string& what) { return InvalidArgument("code file line " + std::to_string(lineno) + ": " + what); };
  if (!next_line()) throw InvalidArgument("code file is empty");

  std::istringstream header(line);
  std::string k1;
  header >> k1;
  auto parse_row = [&](std::size_t expect) {
    std::istringstream ls(line);
    std::vector<int> vals;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw bad("'" + tok + "' is not an integer");
      }
    }
    if (vals.size() != expect) {
      throw bad("expected " + std::to_string(expect) + " entries, found " + std::to_string(vals.size()));
    }
    return vals;
  };

  if (k1 == "q") {
    int q = 0, n = 0;
    std::string kn;
    if (!(header >> q >> kn >> n) || kn != "n") throw bad("header must be 'q <q> n <n>'");
    Code code(q, n);
    while (next_line()) {
      try {
        code.insert(Codeword(q, parse_row(static_cast<std::size_t>(n))));
      } catch (const InvalidArgument& e) {
        if (std::string(e.what()).rfind("code file", 0) == 0) throw;
        throw bad(e.what());
      }
    }
    return code;
  }
  if (k1 == "m") {
    McwcCode code;
    std::string kn, kw;
    if (!(header >> code.m >> kn >> code.n >> kw >> code.w) || kn != "n" || kw != "w") {
      throw bad("header must be 'm <m> n <n> w <w>'");
    }
    while (next_line()) {
      const auto bits = parse_row(static_cast<std::size_t>(code.m) * static_cast<std::size_t>(code.n));
      std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(code.m));
      for (int i = 0; i < code.m; ++i) {
        for (int x = 0; x < code.n; ++x) {
          const int b = bits[static_cast<std::size_t>(i * code.n + x)];
          if (b != 0 && b != 1) throw bad("MCWC entries must be 0 or 1");
          rows[static_cast<std::size_t>(i)].push_back(static_cast<std::uint8_t>(b));
        }
      }
      code.words.emplace_back(code.w, std::move(rows));
    }
    return code;
  }
  throw bad("header must start with 'q' or 'm'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << contents;
}

namespace {
Json parse_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}
}  // namespace

DigraphFamily load_family(const std::string& path) { return family_from_json(parse_json(path)); }

Decomposition load_decomposition(const std::string& path) { return decomposition_from_json(parse_json(path)); }

AnyCode load_code(const std::string& path) {
  std::istringstream is(read_file(path));
  return read_code(is);
}

}  // namespace ecd::io
