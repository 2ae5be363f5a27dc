#include "ecd/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ecd/bounds.hpp"
#include "ecd/code_bridge.hpp"
#include "ecd/families.hpp"
#include "ecd/io.hpp"
#include "ecd/lattice.hpp"
#include "ecd/search.hpp"

namespace ecd::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Lines of key=value, optionally rendered as an aligned table.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    add(key, os.str());
  }
  void print(std::ostream& out, bool pretty) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (pretty) {
        out << std::left << std::setw(static_cast<int>(width)) << k << " : " << v << '\n';
      } else {
        out << k << '=' << v << '\n';
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::string s;
  for (char c : text) {
    if (c != '[' && c != ']' && c != ' ') s.push_back(c);
  }
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + text + "' is not a comma-separated integer list");
    }
  }
  return out;
}

std::optional<std::chrono::milliseconds> default_time_limit() {
  if (const char* env = std::getenv("ECD_TIME_LIMIT")) {
    try {
      const double secs = std::stod(env);
      if (secs > 0) return std::chrono::milliseconds(static_cast<long long>(secs * 1000));
    } catch (const std::exception&) {
      throw UsageError("ECD_TIME_LIMIT: '" + std::string(env) + "' is not a number of seconds");
    }
  }
  return std::nullopt;
}

std::optional<std::chrono::milliseconds> time_limit_from(double seconds) {
  if (seconds > 0) return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  return default_time_limit();
}

std::string describe_witness(const lattice::ConeWitness& w, const lattice::Generators& gens) {
  std::ostringstream os;
  os << w.multiple << ":";
  bool first = true;
  for (std::size_t j = 0; j < w.coefficients.size(); ++j) {
    if (w.coefficients[j] == 0) continue;
    os << (first ? " " : " + ") << w.coefficients[j] << "*" << gens.labels[j];
    first = false;
  }
  return os.str();
}

template <typename Coeffs>
std::string describe_combination(const Coeffs& coeffs, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    os << (first ? "" : " + ") << coeffs[j] << "*" << labels[j];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string invariant_text(const lattice::InvariantEntry& e) {
  return e.resolved ? std::to_string(e.value) : "unresolved";
}

// Shared parameter flags for family construction.
struct FamilyParams {
  std::string kind;
  std::string params;
  std::string composition;
  int q = 0;
  int w = 0;
  int m = 0;
};

DigraphFamily build_family(const std::string& family_kind, const FamilyParams& p) {
  std::vector<int> list;
  if (!p.params.empty()) list = parse_int_list(p.params, "--params");
  auto composition = [&]() {
    const std::string text = !p.composition.empty() ? p.composition : p.params;
    if (text.empty()) throw UsageError("--composition is required for kind " + family_kind);
    try {
      return Composition::parse(text);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--composition: ") + e.what());
    }
  };
  auto pair_param = [&](const char* first_flag, int first, const char* second_flag, int second) {
    if (first == 0 && list.size() == 2) first = list[0];
    if (second == 0 && list.size() == 2) second = list[1];
    if (first <= 0) throw UsageError(std::string(first_flag) + " is required for kind " + family_kind);
    if (second <= 0) throw UsageError(std::string(second_flag) + " is required for kind " + family_kind);
    return std::make_pair(first, second);
  };

  if (family_kind == "g") {
    auto c = composition();
    if (p.q && p.q != c.q()) throw UsageError("--q does not match the composition length");
    return family_G(c);
  }
  if (family_kind == "gstar") {
    auto c = composition();
    if (p.q && p.q != c.q()) throw UsageError("--q does not match the composition length");
    return family_Gstar(c);
  }
  if (family_kind == "gcwc") {
    auto [q, w] = pair_param("--q", p.q, "--w", p.w);
    return family_G_cwc(q, w);
  }
  if (family_kind == "gstarcwc") {
    auto [q, w] = pair_param("--q", p.q, "--w", p.w);
    return family_Gstar_cwc(q, w);
  }
  if (family_kind == "hstar") {
    auto [m, w] = pair_param("--m", p.m, "--w", p.w);
    return family_Hstar(m, w);
  }
  throw UsageError("--kind: unknown family kind '" + family_kind + "' (g|gstar|gcwc|gstarcwc|hstar)");
}

std::string family_kind_for(ConstructionKind k) { return to_string(required_family(k)); }

struct Designed {
  bounds::BoundQuery query;
  int d = 0;
};

// Distance and bound a construction is designed for.
Designed designed_for(ConstructionKind kind, const DigraphFamily& fam, int n) {
  Designed out;
  auto& q = out.query;
  q.n = n;
  switch (kind) {
    case ConstructionKind::Ccc2w2:
    case ConstructionKind::Ccc2w3: {
      Composition c(fam.params);
      q.kind = bounds::CodeKind::Ccc;
      q.q = c.q();
      q.composition = c;
      out.d = kind == ConstructionKind::Ccc2w2 ? 2 * c.weight() - 2 : 2 * c.weight() - 3;
      break;
    }
    case ConstructionKind::Cwc2w2:
    case ConstructionKind::Cwc2w3:
      q.kind = bounds::CodeKind::Cwc;
      q.q = fam.params.at(0);
      q.w = fam.params.at(1);
      out.d = kind == ConstructionKind::Cwc2w2 ? 2 * q.w - 2 : 2 * q.w - 3;
      break;
    case ConstructionKind::Mcwc:
      q.kind = bounds::CodeKind::Mcwc;
      q.m = fam.params.at(0);
      q.w = fam.params.at(1);
      out.d = 2 * q.m * q.w - 2;
      break;
  }
  q.d = out.d;
  return out;
}

CodeReport verify_any(const AnyCode& code, ConstructionKind kind, const DigraphFamily& fam, int d) {
  if (const auto* c = std::get_if<Code>(&code)) {
    CodeExpectation exp;
    exp.d = d;
    if (kind == ConstructionKind::Ccc2w2 || kind == ConstructionKind::Ccc2w3) {
      exp.composition = Composition(fam.params);
    } else {
      exp.weight = fam.params.at(1);
    }
    return verify_code(*c, exp);
  }
  const auto& m = std::get<McwcCode>(code);
  return verify_code(m, McwcExpectation{m.m, m.n, m.w, d});
}

std::size_t code_size(const AnyCode& code) {
  if (const auto* c = std::get_if<Code>(&code)) return c->size();
  return std::get<McwcCode>(code).words.size();
}

int cmd_bound(const std::string& kind, int q, int n, int d, const std::string& comp, int w, int m, bool pretty,
              std::ostream& out) {
  bounds::BoundQuery query;
  query.n = n;
  query.q = q;
  if (n < 1) throw UsageError("--n must be positive");
  if (kind == "ccc") {
    if (comp.empty()) throw UsageError("--composition is required for --kind ccc");
    query.kind = bounds::CodeKind::Ccc;
    try {
      query.composition = Composition::parse(comp);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--composition: ") + e.what());
    }
    if (query.q == 0) query.q = query.composition->q();
    query.d = d ? d : 2 * query.composition->weight() - 2;
  } else if (kind == "cwc") {
    if (q < 2) throw UsageError("--q is required for --kind cwc");
    if (w < 1) throw UsageError("--w is required for --kind cwc");
    query.kind = bounds::CodeKind::Cwc;
    query.w = w;
    query.d = d ? d : 2 * w - 2;
  } else if (kind == "mcwc") {
    if (m < 1) throw UsageError("--m is required for --kind mcwc");
    if (w < 1) throw UsageError("--w is required for --kind mcwc");
    query.kind = bounds::CodeKind::Mcwc;
    query.m = m;
    query.w = w;
    query.d = d ? d : 2 * m * w - 2;
  } else {
    throw UsageError("--kind: unknown code kind '" + kind + "' (ccc|cwc|mcwc)");
  }
  bounds::BoundResult r;
  try {
    r = bounds::evaluate(query);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  Report rep;
  rep.add("bound", r.value);
  rep.add("rule", r.rule);
  rep.add("formula", r.formula);
  rep.print(out, pretty);
  return kOk;
}

int cmd_family(const FamilyParams& p, const std::string& out_path, std::ostream& out) {
  const auto fam = build_family(p.kind, p);
  const std::string text = io::family_to_json(fam).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    io::write_file(out_path, text);
    out << "family=" << fam.name << "\nmembers=" << fam.members.size() << "\nwritten=" << out_path << '\n';
  }
  return kOk;
}

int cmd_invariants(const std::string& path, long long n, long long k_max, bool pretty, std::ostream& out) {
  const auto fam = io::load_family(path);
  lattice::ConeOptions opts;
  opts.k_max = k_max;
  const auto dg = lattice::degree_generators(fam);
  const auto eg = lattice::edge_generators(fam);
  const auto a = lattice::alpha(fam, opts);
  const auto b = lattice::beta(fam, opts);
  const auto adm = lattice::admissible(fam);

  Report rep;
  rep.add("family", fam.name);
  rep.add("colors", fam.color_count);
  rep.add("alpha", invariant_text(a));
  if (a.lattice_constant) rep.add("alpha_lattice_constant", *a.lattice_constant);
  for (const auto& w : a.witnesses) rep.add("alpha_witness", describe_witness(w, dg));
  if (!a.note.empty()) rep.add("alpha_note", a.note);
  rep.add("beta", invariant_text(b));
  if (b.lattice_constant) rep.add("beta_lattice_constant", *b.lattice_constant);
  for (const auto& w : b.witnesses) rep.add("beta_witness", describe_witness(w, eg));
  if (!b.note.empty()) rep.add("beta_note", b.note);
  rep.add("admissible", yes_no(adm.admissible));
  if (adm.admissible) {
    std::vector<std::string> labels;
    for (const auto& m : fam.members) labels.push_back(m.label);
    rep.add("admissible_witness", describe_combination(adm.lambda, labels));
  }

  bool unresolved = !a.resolved || !b.resolved;
  if (n > 0) {
    if (!unresolved) {
      const auto c = lattice::theorem_congruences(a.value, b.value, n);
      rep.add("beta_congruence", yes_no(c.beta_ok));
      rep.add("alpha_congruence", yes_no(c.alpha_ok));
    }
    const auto lc = lattice::lattice_conditions(fam, n);
    rep.add("edge_lattice_condition", yes_no(lc.edge_witness.has_value()));
    if (lc.edge_witness) rep.add("edge_lattice_witness", describe_combination(*lc.edge_witness, eg.labels));
    rep.add("degree_lattice_condition", yes_no(lc.degree_witness.has_value()));
    if (lc.degree_witness) rep.add("degree_lattice_witness", describe_combination(*lc.degree_witness, dg.labels));
  }
  rep.print(out, pretty);
  return unresolved ? kTimeout : kOk;
}

int cmd_search(const std::string& path, int n, const SolveOptions& opts, const std::string& out_path, bool pretty,
               std::ostream& out) {
  const auto fam = io::load_family(path);
  if (n < 2) throw UsageError("--n must be at least 2");
  const auto res = solve(fam, n, opts);
  Report rep;
  rep.add("family", fam.name);
  rep.add("n", n);
  rep.add("superpure", yes_no(opts.superpure));
  rep.add("status", to_string(res.status));
  rep.add("candidate_blocks", res.block_count);
  rep.add("solutions", res.solution_count);
  rep.add("nodes", res.nodes);
  if (res.status == SolveStatus::Timeout) rep.add("best_partial_depth", res.max_depth);
  for (const auto& dec : res.solutions) {
    const auto check = verify_decomposition(dec);
    if (!check.valid) throw Error("internal: solver produced an invalid decomposition: " + check.first_violation);
  }
  if (!res.solutions.empty()) {
    rep.add("blocks", res.solutions.front().blocks.size());
    if (!out_path.empty()) {
      std::string text;
      if (opts.mode == SearchMode::All) {
        io::Json arr = io::Json::array();
        for (const auto& d : res.solutions) arr.push_back(io::decomposition_to_json(d));
        text = arr.dump(2);
      } else {
        text = io::decomposition_to_json(res.solutions.front()).dump(2);
      }
      io::write_file(out_path, text + "\n");
      rep.add("written", out_path);
    }
  }
  rep.print(out, pretty);
  out << to_string(res.status) << '\n';
  switch (res.status) {
    case SolveStatus::Sat: return kOk;
    case SolveStatus::Unsat: return kFailed;
    case SolveStatus::Timeout: return kTimeout;
  }
  return kFailed;
}

int cmd_construct(const std::string& dec_path, const std::string& kind_text, const std::string& out_path,
                  std::ostream& out) {
  ConstructionKind kind;
  try {
    kind = construction_kind_from_string(kind_text);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--kind: ") + e.what());
  }
  const auto dec = io::load_decomposition(dec_path);
  const auto check = verify_decomposition(dec);
  if (!check.exact_cover) {
    out << "status=INVALID\nviolation=" << check.first_violation << '\n';
    return kFailed;
  }
  const auto code = decomposition_to_code(dec, kind);
  std::ostringstream text;
  io::write_code(text, code);
  if (out_path.empty()) {
    out << text.str();
  } else {
    io::write_file(out_path, text.str());
    out << "codewords=" << code_size(code) << "\nwritten=" << out_path << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& path, int d, const std::string& comp, int w, const std::vector<int>& mcwc,
               bool pretty, std::ostream& out) {
  const auto any = io::load_code(path);
  Report rep;
  CodeReport cr;
  if (const auto* code = std::get_if<Code>(&any)) {
    if (!mcwc.empty()) throw UsageError("--mcwc given but '" + path + "' holds a q-ary code");
    CodeExpectation exp;
    exp.d = d;
    if (!comp.empty()) {
      try {
        exp.composition = Composition::parse(comp);
      } catch (const InvalidArgument& e) {
        throw UsageError(std::string("--composition: ") + e.what());
      }
    }
    if (w > 0) exp.weight = w;
    cr = verify_code(*code, exp);
    const int wt = exp.composition ? exp.composition->weight() : (exp.weight ? *exp.weight : 0);
    if (cr.valid && wt > 0 && code->size() > 0) {
      if (d == 2 * wt - 2) {
        const auto c12 = check_C1_C2(*code);
        rep.add("C1", yes_no(c12.first_ok));
        rep.add("C2", yes_no(c12.second_ok));
        if (c12.vacuous) rep.add("conditions_note", "vacuous for this weight");
      } else if (d == 2 * wt - 3) {
        const auto c34 = check_C3_C4(*code);
        rep.add("C3", yes_no(c34.first_ok));
        rep.add("C4", yes_no(c34.second_ok));
        if (c34.vacuous) rep.add("conditions_note", "vacuous for this weight");
      }
    }
  } else {
    const auto& mc = std::get<McwcCode>(any);
    McwcExpectation exp{mc.m, mc.n, mc.w, d};
    if (!mcwc.empty()) {
      if (mcwc.size() != 3) throw UsageError("--mcwc takes M N W");
      exp = McwcExpectation{mcwc[0], mcwc[1], mcwc[2], d};
    }
    cr = verify_code(mc, exp);
  }
  rep.add("size", cr.size);
  rep.add("min_distance", cr.minimum_distance ? std::to_string(*cr.minimum_distance) : "none");
  if (cr.bound) {
    rep.add("bound", cr.bound->value);
    rep.add("bound_rule", cr.bound->rule);
  }
  rep.add("verdict", to_string(cr.verdict));
  for (const auto& m : cr.messages) rep.add("message", m);
  rep.add("valid", yes_no(cr.valid));
  rep.print(out, pretty);
  return cr.valid ? kOk : kFailed;
}

struct PipelineArgs {
  std::string kind;
  std::string params;
  int q = 0;
  std::string composition;
  int w = 0;
  int m = 0;
  int n = 0;
  std::optional<bool> superpure;
  SolveOptions solve;
  std::string out_dir;
  bool pretty = false;
};

int cmd_pipeline(const PipelineArgs& a, std::ostream& out) {
  ConstructionKind kind;
  try {
    kind = construction_kind_from_string(a.kind);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--kind: ") + e.what());
  }
  if (a.n < 2) throw UsageError("--n must be at least 2");
  FamilyParams fp;
  fp.params = a.params;
  fp.composition = a.composition;
  fp.q = a.q;
  fp.w = a.w;
  fp.m = a.m;
  const auto fam = build_family(family_kind_for(kind), fp);
  const auto designed = designed_for(kind, fam, a.n);

  Report rep;
  std::ostringstream summary;
  rep.add("kind", to_string(kind));
  rep.add("family", fam.name);
  rep.add("n", a.n);
  rep.add("distance", designed.d);

  bounds::BoundResult bound;
  try {
    bound = bounds::evaluate(designed.query);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  rep.add("bound", bound.value);
  rep.add("bound_rule", bound.rule);
  summary << "bound=" << bound.value;

  const auto alpha = lattice::alpha(fam);
  const auto beta = lattice::beta(fam);
  const auto adm = lattice::admissible(fam);
  rep.add("alpha", invariant_text(alpha));
  rep.add("beta", invariant_text(beta));
  rep.add("admissible", yes_no(adm.admissible));
  summary << " α=" << invariant_text(alpha) << " β=" << invariant_text(beta) << ' '
          << (adm.admissible ? "admissible" : "inadmissible");
  if (alpha.resolved && beta.resolved) {
    const auto c = lattice::theorem_congruences(alpha.value, beta.value, a.n);
    rep.add("beta_congruence", yes_no(c.beta_ok));
    rep.add("alpha_congruence", yes_no(c.alpha_ok));
  }

  SolveOptions so = a.solve;
  so.mode = SearchMode::First;
  so.superpure = a.superpure.value_or(requires_superpure(kind));
  const auto res = solve(fam, a.n, so);
  rep.add("superpure", yes_no(so.superpure));
  rep.add("search", to_string(res.status));
  summary << ' ' << to_string(res.status);

  if (!a.out_dir.empty()) io::write_file(a.out_dir + "/family.json", io::family_to_json(fam).dump(2) + "\n");

  int code_rc = kOk;
  if (res.status == SolveStatus::Sat) {
    const auto& dec = res.solutions.front();
    const auto check = verify_decomposition(dec);
    rep.add("blocks", dec.blocks.size());
    rep.add("decomposition_valid", yes_no(check.valid));
    const auto code = decomposition_to_code(dec, kind);
    const auto report = verify_any(code, kind, fam, designed.d);
    rep.add("code_size", code_size(code));
    rep.add("expected_size", expected_code_size(kind, fam, a.n));
    rep.add("min_distance", report.minimum_distance ? std::to_string(*report.minimum_distance) : "none");
    rep.add("verdict", to_string(report.verdict));
    rep.add("code_valid", yes_no(report.valid));
    summary << " code=" << code_size(code) << " distance="
            << (report.minimum_distance ? std::to_string(*report.minimum_distance) : "none") << ' '
            << to_string(report.verdict);
    if (!a.out_dir.empty()) {
      io::write_file(a.out_dir + "/decomposition.json", io::decomposition_to_json(dec).dump(2) + "\n");
      std::ostringstream text;
      io::write_code(text, code);
      io::write_file(a.out_dir + "/code.txt", text.str());
    }
    code_rc = check.valid && report.valid ? kOk : kFailed;
  } else if (res.status == SolveStatus::Timeout) {
    rep.add("best_partial_depth", res.max_depth);
  }
  rep.print(out, a.pretty);
  out << summary.str() << '\n';
  switch (res.status) {
    case SolveStatus::Sat: return code_rc;
    case SolveStatus::Unsat: return kFailed;
    case SolveStatus::Timeout: return kTimeout;
  }
  return kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-colored digraph decompositions and the optimal codes they yield", "ecd"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Aligned human-readable output instead of key=value lines");

  // bound
  auto* bound = app.add_subcommand("bound", "Johnson-type upper bound");
  std::string b_kind, b_comp;
  int b_q = 0, b_n = 0, b_d = 0, b_w = 0, b_m = 0;
  bound->add_option("--kind", b_kind, "ccc|cwc|mcwc")->required();
  bound->add_option("--q", b_q, "Alphabet size");
  bound->add_option("--n", b_n, "Length")->required();
  bound->add_option("--d", b_d, "Distance (default 2w-2, or 2mw-2 for mcwc)");
  bound->add_option("--composition", b_comp, "w1,w2,...");
  bound->add_option("--w", b_w, "Weight");
  bound->add_option("--m", b_m, "Rows (mcwc)");

  // family
  auto* family = app.add_subcommand("family", "Write a digraph family file");
  FamilyParams f;
  std::string f_out;
  family->add_option("--kind", f.kind, "g|gstar|gcwc|gstarcwc|hstar")->required();
  family->add_option("--params", f.params, "Composition for g/gstar, q,w for the cwc kinds, m,w for hstar");
  family->add_option("--composition", f.composition, "w1,w2,...");
  family->add_option("--q", f.q, "Alphabet size");
  family->add_option("--w", f.w, "Weight");
  family->add_option("--m", f.m, "Rows (hstar)");
  family->add_option("--out", f_out, "Output file (stdout when omitted)");

  // invariants
  auto* inv = app.add_subcommand("invariants", "alpha, beta, admissibility and congruences");
  std::string i_family;
  long long i_n = 0, i_kmax = 0;
  inv->add_option("--family", i_family, "Family file")->required();
  inv->add_option("--n", i_n, "Check congruences and lattice conditions at this n");
  inv->add_option("--k-max", i_kmax, "Largest multiplier tried by the cone search");

  // search
  auto* search = app.add_subcommand("search", "Find a decomposition of K_n");
  std::string s_family, s_out, s_mode = "first";
  int s_n = 0;
  bool s_superpure = false;
  std::uint64_t s_seed = 0;
  double s_time = 0;
  unsigned s_threads = 1;
  search->add_option("--family", s_family, "Family file")->required();
  search->add_option("--n", s_n, "Number of vertices")->required();
  search->add_flag("--superpure", s_superpure, "Blocks pairwise share at most two vertices");
  search->add_option("--mode", s_mode, "first|all|count");
  search->add_option("--seed", s_seed, "Option-order seed (0 = canonical order)");
  search->add_option("--time-limit", s_time, "Seconds (default: ECD_TIME_LIMIT or none)");
  search->add_option("--threads", s_threads, "Worker threads (1 = deterministic)");
  search->add_option("--out", s_out, "Decomposition output file");

  // construct
  auto* construct = app.add_subcommand("construct", "Decomposition to code");
  std::string c_dec, c_kind, c_out;
  construct->add_option("--decomposition", c_dec, "Decomposition file")->required();
  construct->add_option("--kind", c_kind, "ccc2w2|ccc2w3|cwc2w2|cwc2w3|mcwc")->required();
  construct->add_option("--out", c_out, "Code output file (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a code file");
  std::string v_code, v_comp;
  int v_d = 0, v_w = 0;
  std::vector<int> v_mcwc;
  verify->add_option("--code", v_code, "Code file")->required();
  verify->add_option("--d", v_d, "Required minimum distance")->required();
  verify->add_option("--composition", v_comp, "Expected composition");
  verify->add_option("--w", v_w, "Expected weight");
  verify->add_option("--mcwc", v_mcwc, "M N W of a multiply constant-weight code")->expected(3);

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "bound, family, invariants, search, construct, verify");
  PipelineArgs pa;
  double p_time = 0;
  bool p_superpure = false, p_no_superpure = false;
  pipeline->add_option("--kind", pa.kind, "ccc2w2|ccc2w3|cwc2w2|cwc2w3|mcwc")->required();
  pipeline->add_option("--params", pa.params, "Composition for ccc kinds, q,w for cwc kinds, m,w for mcwc");
  pipeline->add_option("--q", pa.q, "Alphabet size");
  pipeline->add_option("--composition", pa.composition, "w1,w2,...");
  pipeline->add_option("--w", pa.w, "Weight");
  pipeline->add_option("--m", pa.m, "Rows (mcwc)");
  pipeline->add_option("--n", pa.n, "Length / number of vertices")->required();
  pipeline->add_flag("--superpure", p_superpure, "Force superpure search");
  pipeline->add_flag("--no-superpure", p_no_superpure, "Force plain search");
  pipeline->add_option("--seed", pa.solve.seed, "Option-order seed");
  pipeline->add_option("--time-limit", p_time, "Seconds (default: ECD_TIME_LIMIT or none)");
  pipeline->add_option("--threads", pa.solve.threads, "Worker threads");
  pipeline->add_option("--out-dir", pa.out_dir, "Write family.json, decomposition.json and code.txt here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(b_kind, b_q, b_n, b_d, b_comp, b_w, b_m, pretty, out);
    if (family->parsed()) return cmd_family(f, f_out, out);
    if (inv->parsed()) return cmd_invariants(i_family, i_n, i_kmax, pretty, out);
    if (search->parsed()) {
      SolveOptions so;
      so.superpure = s_superpure;
      try {
        so.mode = search_mode_from_string(s_mode);
      } catch (const InvalidArgument& e) {
        throw UsageError(std::string("--mode: ") + e.what());
      }
      so.seed = s_seed;
      so.time_limit = time_limit_from(s_time);
      so.threads = s_threads;
      return cmd_search(s_family, s_n, so, s_out, pretty, out);
    }
    if (construct->parsed()) return cmd_construct(c_dec, c_kind, c_out, out);
    if (verify->parsed()) return cmd_verify(v_code, v_d, v_comp, v_w, v_mcwc, pretty, out);
    if (pipeline->parsed()) {
      if (p_superpure && p_no_superpure) throw UsageError("--superpure and --no-superpure are exclusive");
      if (p_superpure) pa.superpure = true;
      if (p_no_superpure) pa.superpure = false;
      pa.solve.time_limit = time_limit_from(p_time);
      pa.pretty = pretty;
      return cmd_pipeline(pa, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace ecd::cli
